//! Contour-integral numerics: Taylor/Laurent coefficients from samples on a
//! circle (trapezoidal rule, spectrally accurate for analytic integrands).

use std::f64::consts::TAU;

use num_complex::Complex64;

/// Coefficients `c_0..c_{m-1}` of `g(center + w) = sum c_k w^k` from `m`
/// equispaced samples on `|w| = radius`. Exact up to aliasing for
/// polynomials of degree `< m`.
pub fn circle_coefficients(
    g: impl Fn(Complex64) -> Complex64,
    center: Complex64,
    radius: f64,
    m: usize,
) -> Vec<Complex64> {
    let samples: Vec<Complex64> = (0..m)
        .map(|j| g(center + Complex64::from_polar(radius, TAU * j as f64 / m as f64)))
        .collect();
    (0..m)
        .map(|k| {
            let s: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    v * Complex64::from_polar(1.0, -TAU * ((j * k) % m) as f64 / m as f64)
                })
                .sum();
            s / (m as f64 * radius.powi(k as i32))
        })
        .collect()
}

/// Laurent coefficient of `(z - center)^k` on the annulus through `|z - center| = radius`.
pub fn laurent_coefficient(
    g: impl Fn(Complex64) -> Complex64,
    center: Complex64,
    radius: f64,
    k: i32,
) -> Complex64 {
    const M: usize = 256;
    let s: Complex64 = (0..M)
        .map(|j| {
            let e = Complex64::from_polar(1.0, TAU * j as f64 / M as f64);
            g(center + e * radius) * e.powi(-k)
        })
        .sum();
    s / (M as f64 * radius.powi(k))
}

/// First three derivatives of `f` at `z0` by Cauchy's formula on `|z - z0| = radius`.
pub fn derivatives(
    f: impl Fn(Complex64) -> Complex64,
    z0: Complex64,
    radius: f64,
) -> [Complex64; 3] {
    let c = circle_coefficients(f, z0, radius, 64);
    [c[1], c[2] * 2.0, c[3] * 6.0]
}

/// `f'''/f' - 3/2 (f''/f')^2` from contour derivatives.
pub fn numeric_schwarzian(
    f: impl Fn(Complex64) -> Complex64,
    z0: Complex64,
    radius: f64,
) -> Complex64 {
    let [d1, d2, d3] = derivatives(f, z0, radius);
    d3 / d1 - 1.5 * (d2 / d1) * (d2 / d1)
}

/// Winding number of `g` around 0 along `|z - center| = radius`; zero means
/// `g` has as many zeros as poles inside.
pub fn winding_number(g: impl Fn(Complex64) -> Complex64, center: Complex64, radius: f64) -> i64 {
    const M: usize = 512;
    let mut total = 0.0;
    let mut prev = g(center + radius);
    for j in 1..=M {
        let cur = g(center + Complex64::from_polar(radius, TAU * j as f64 / M as f64));
        total += (cur / prev).arg();
        prev = cur;
    }
    (total / TAU).round() as i64
}
