//! Explicit Dormand-Prince 8(5,3) integrator for complex systems on a real
//! parameter interval, with the usual combined 5th/3rd-order error estimate.

use num_complex::Complex64;

use super::dop853_tableau::{A, B, C, E3, E5, STAGES};
use crate::error::{Error, Result};

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 10.0;
const ERROR_EXPONENT: f64 = -1.0 / 8.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            rtol: 1e-12,
            atol: 1e-14,
            max_steps: 200_000,
        }
    }
}

/// Integrate `y' = f(t, y)` from `t0` to `t1`; returns `y(t1)` and the number
/// of accepted steps.
pub fn integrate(
    mut f: impl FnMut(f64, &[Complex64], &mut [Complex64]),
    t0: f64,
    t1: f64,
    y0: &[Complex64],
    tol: &Tolerances,
) -> Result<(Vec<Complex64>, usize)> {
    let n = y0.len();
    let dir = (t1 - t0).signum();
    let span = (t1 - t0).abs();
    let mut t = t0;
    let mut y = y0.to_vec();
    if span == 0.0 {
        return Ok((y, 0));
    }
    let mut k = vec![vec![Complex64::new(0.0, 0.0); n]; STAGES + 1];
    let mut scratch = vec![Complex64::new(0.0, 0.0); n];
    let mut y_new = vec![Complex64::new(0.0, 0.0); n];
    f(t, &y, &mut k[0]);
    let mut h = initial_step(&y, &k[0], span, tol);
    let mut steps = 0;
    let mut accepted = 0;
    while (t1 - t) * dir > 0.0 {
        steps += 1;
        if steps > tol.max_steps {
            return Err(Error::IntegrationUnderflow { t });
        }
        if h < 1e-14 * (1.0 + t.abs()) {
            return Err(Error::IntegrationUnderflow { t });
        }
        let h_step = h.min((t1 - t).abs());
        let hs = h_step * dir;
        for s in 1..STAGES {
            for i in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, kj) in k.iter().enumerate().take(s) {
                    if A[s][j] != 0.0 {
                        acc += kj[i] * A[s][j];
                    }
                }
                scratch[i] = y[i] + acc * hs;
            }
            f(t + C[s] * hs, &scratch, &mut k[s]);
        }
        for i in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, kj) in k.iter().enumerate().take(STAGES) {
                if B[j] != 0.0 {
                    acc += kj[i] * B[j];
                }
            }
            y_new[i] = y[i] + acc * hs;
        }
        let t_new = if h_step == (t1 - t).abs() { t1 } else { t + hs };
        f(t_new, &y_new, &mut scratch);
        k[STAGES].copy_from_slice(&scratch);

        let err = error_norm(&k, &y, &y_new, h_step, tol);
        if err < 1.0 {
            let factor = if err == 0.0 {
                MAX_FACTOR
            } else {
                (SAFETY * err.powf(ERROR_EXPONENT)).min(MAX_FACTOR)
            };
            t = t_new;
            std::mem::swap(&mut y, &mut y_new);
            let last = k[STAGES].clone();
            k[0].copy_from_slice(&last);
            h = h_step * factor;
            accepted += 1;
        } else {
            h = h_step * (SAFETY * err.powf(ERROR_EXPONENT)).max(MIN_FACTOR);
        }
    }
    Ok((y, accepted))
}

fn error_norm(
    k: &[Vec<Complex64>],
    y: &[Complex64],
    y_new: &[Complex64],
    h: f64,
    tol: &Tolerances,
) -> f64 {
    let n = y.len();
    let (mut e5, mut e3) = (0.0, 0.0);
    for i in 0..n {
        let scale = tol.atol + tol.rtol * y[i].norm().max(y_new[i].norm());
        let (mut a, mut b) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for (j, kj) in k.iter().enumerate() {
            a += kj[i] * E5[j];
            b += kj[i] * E3[j];
        }
        e5 += (a / scale).norm_sqr();
        e3 += (b / scale).norm_sqr();
    }
    if e5 == 0.0 && e3 == 0.0 {
        return 0.0;
    }
    h * e5 / ((e5 + 0.01 * e3) * n as f64).sqrt()
}

fn initial_step(y: &[Complex64], f0: &[Complex64], span: f64, tol: &Tolerances) -> f64 {
    let rms = |v: &[Complex64]| {
        let s: f64 = v
            .iter()
            .zip(y)
            .map(|(a, b)| (a.norm() / (tol.atol + tol.rtol * b.norm())).powi(2))
            .sum();
        (s / v.len() as f64).sqrt()
    };
    let (d0, d1) = (rms(y), rms(f0));
    let h = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    h.min(span).max(1e-10 * span)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_is_accurate() {
        let (y, steps) = integrate(
            |_, y, dy| dy[0] = Complex64::new(0.0, 1.0) * y[0],
            0.0,
            10.0,
            &[Complex64::new(1.0, 0.0)],
            &Tolerances::default(),
        )
        .unwrap();
        assert!((y[0] - Complex64::from_polar(1.0, 10.0)).norm() < 1e-11);
        assert!(steps > 10);
    }

    #[test]
    fn backward_and_polynomial() {
        // y' = 3 t^2 -> y = t^3
        let (y, _) = integrate(
            |t, _, dy| dy[0] = Complex64::new(3.0 * t * t, 0.0),
            2.0,
            -1.0,
            &[Complex64::new(8.0, 0.0)],
            &Tolerances::default(),
        )
        .unwrap();
        assert!((y[0] + 1.0).norm() < 1e-12);
    }

    #[test]
    fn blow_up_reports_underflow() {
        // y' = y^2, y(0) = 1 explodes at t = 1
        let res = integrate(
            |_, y, dy| dy[0] = y[0] * y[0],
            0.0,
            2.0,
            &[Complex64::new(1.0, 0.0)],
            &Tolerances::default(),
        );
        assert!(matches!(res, Err(Error::IntegrationUnderflow { .. })));
    }
}
