use num_complex::Complex64;

use super::numeric::circle_coefficients;
use crate::polynomial::{from_usize, CPoly, Polynomial, Scalar};
use crate::wronski::{wronski_map_with, PolynomialPair};

/// `numerator / denominator` with a monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<T> {
    pub numerator: Polynomial<T>,
    pub denominator: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    /// Normalizes the denominator to be monic. Panics on a zero denominator.
    pub fn new(numerator: Polynomial<T>, denominator: Polynomial<T>) -> Self {
        let lead = denominator.leading().cloned().expect("zero denominator");
        let inv = T::one() / lead;
        RationalFunction {
            numerator: numerator.scale(&inv),
            denominator: denominator.scale(&inv),
        }
    }

    /// Cancel the exact common factor (exact coefficient fields only).
    pub fn reduced(&self) -> Self {
        let g = self.numerator.gcd(&self.denominator);
        if g.is_zero() {
            return self.clone();
        }
        Self::new(self.numerator.div_rem(&g).0, self.denominator.div_rem(&g).0)
    }

    pub fn eval(&self, z: &T) -> T {
        self.numerator.eval(z) / self.denominator.eval(z)
    }
}

/// Unreduced Schwarzian `f'''/f' - 3/2 (f''/f')^2` of `f = z^alpha P/Q`.
///
/// With `f' = z^(alpha-1) W / Q^2`, `W = W_alpha(P, Q)`, the logarithmic
/// derivative is `L = f''/f' = N/D`, `D = z W Q`,
/// `N = (alpha-1) W Q + z W' Q - 2 z W Q'`, and the Schwarzian is
/// `L' - L^2/2 = (2 (N' D - N D') - N^2) / (2 D^2)`. The branch of `z^alpha`
/// drops out, so the result is a single-valued rational function.
pub fn schwarzian_parts<T: Scalar>(
    p: &Polynomial<T>,
    q: &Polynomial<T>,
    alpha: &T,
) -> (Polynomial<T>, Polynomial<T>) {
    let w = wronski_map_with(p, q, alpha);
    let z = Polynomial::monomial(T::one(), 1);
    let d = z.mul(&w).mul(q);
    let n = w
        .mul(q)
        .scale(&(alpha.clone() - T::one()))
        .add(&z.mul(&w.derivative()).mul(q))
        .sub(&z.mul(&w).mul(&q.derivative()).scale(&from_usize(2)));
    let two = from_usize::<T>(2);
    let num = n
        .derivative()
        .mul(&d)
        .sub(&n.mul(&d.derivative()))
        .scale(&two)
        .sub(&n.mul(&n));
    let den = d.mul(&d).scale(&two);
    (num, den)
}

/// Exact reduced Schwarzian over an exact field such as `Rational64`.
pub fn schwarzian_with<T: Scalar>(
    p: &Polynomial<T>,
    q: &Polynomial<T>,
    alpha: &T,
) -> RationalFunction<T> {
    let (num, den) = schwarzian_parts(p, q, alpha);
    RationalFunction::new(num, den).reduced()
}

/// Pointwise Schwarzian of the developing map of a pair, from the logarithmic
/// derivative `L = (alpha-1)/z + W'/W - 2 Q'/Q`. Never expands products, so
/// it stays accurate near clustered roots where the unreduced quotient does not.
pub fn pair_schwarzian_at(pair: &PolynomialPair, z: Complex64) -> Complex64 {
    let alpha = Complex64::new(pair.alpha, 0.0);
    let w = wronski_map_with(&pair.p, &pair.q, &alpha);
    log_derivative_schwarzian(&w, &pair.q, pair.alpha, z)
}

fn log_derivative_schwarzian(w: &CPoly, q: &CPoly, alpha: f64, z: Complex64) -> Complex64 {
    let ratios = |f: &CPoly| {
        let v = f.eval(&z);
        let d1 = f.derivative();
        (d1.eval(&z) / v, d1.derivative().eval(&z) / v)
    };
    let (w1, w2) = ratios(w);
    let (q1, q2) = ratios(q);
    let l = (alpha - 1.0) / z + w1 - 2.0 * q1;
    let dl = -(alpha - 1.0) / (z * z) + w2 - w1 * w1 - 2.0 * (q2 - q1 * q1);
    dl - 0.5 * l * l
}

/// Schwarzian of the developing map of a pair, reduced within tolerance.
///
/// Poles sit only at 0 and at the distinct roots of `W_alpha(P, Q)`, all of
/// them double, so the reduced denominator is `z^2 prod (z - c_j)^2`; the
/// numerator is recovered by sampling on a circle enclosing every pole. Roots
/// of `Q` are removable and only need to stay off the circle. Expanded
/// coefficients lose digits inside tight root clusters; prefer
/// [`pair_schwarzian_at`] for values there.
pub fn schwarzian_of_pair(pair: &PolynomialPair) -> RationalFunction<Complex64> {
    let alpha = Complex64::new(pair.alpha, 0.0);
    let w = wronski_map_with(&pair.p, &pair.q, &alpha);
    let roots = w.roots();
    let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
    let mut centers: Vec<Complex64> = Vec::new();
    for r in &roots {
        if r.norm() > 1e-8 * scale && centers.iter().all(|c| (c - r).norm() > 1e-5 * scale) {
            centers.push(*r);
        }
    }
    let mut poles = vec![Complex64::new(0.0, 0.0)];
    poles.extend(&centers);
    let reduced_den = CPoly::from_roots(&poles).pow(2);
    let degree = reduced_den.degree().unwrap_or(0);
    let q_roots = pair.q.roots();
    let mut radius = 2.0 * scale + 1.0;
    while q_roots
        .iter()
        .any(|b| (b.norm() - radius).abs() < 0.1 * radius)
    {
        radius *= 1.25;
    }
    let coeffs = circle_coefficients(
        |z| log_derivative_schwarzian(&w, &pair.q, pair.alpha, z) * reduced_den.eval(&z),
        Complex64::new(0.0, 0.0),
        radius,
        (degree + 1).next_power_of_two().max(16),
    );
    // S ~ c / z^2 at infinity, so the numerator has degree <= deg - 2
    let numerator = CPoly::new(coeffs.into_iter().take(degree.saturating_sub(1)).collect());
    RationalFunction::new(numerator.trimmed(1e-13), reduced_den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ode::numeric::laurent_coefficient;
    use num_rational::Rational64;

    #[test]
    fn power_map_is_exact() {
        for (n, d) in [(1, 2), (1, 3), (2, 7)] {
            let a = Rational64::new(n, d);
            let one = Polynomial::<Rational64>::one();
            let s = schwarzian_with(&one, &one, &a);
            let expected = (Rational64::from(1) - a * a) / Rational64::from(2);
            assert_eq!(s.numerator.coeffs(), &[expected]);
            assert_eq!(s.denominator, Polynomial::monomial(Rational64::from(1), 2));
        }
        let half = Rational64::new(1, 2);
        let one = Polynomial::<Rational64>::one();
        assert_eq!(
            schwarzian_with(&one, &one, &half).numerator.coeffs(),
            &[Rational64::new(3, 8)]
        );
    }

    #[test]
    fn quadratic_pair_poles_and_residues() {
        let v = (-3.0 + 33f64.sqrt()) / 6.0;
        let pair = PolynomialPair::new(
            CPoly::from_real(&[3.0 * v + 3.0, 1.0]),
            CPoly::from_real(&[v, 1.0]),
            0.5,
        );
        let s = schwarzian_of_pair(&pair);
        let mut poles = s.denominator.roots();
        poles.sort_by(|a, b| a.re.total_cmp(&b.re));
        let expect = [0.0, 0.0, 1.0, 1.0, 2.0, 2.0];
        for (p, e) in poles.iter().zip(expect) {
            assert!((p - e).norm() < 1e-6, "{poles:?}");
        }
        for corner in [1.0, 2.0] {
            let c = laurent_coefficient(|z| s.eval(&z), Complex64::new(corner, 0.0), 0.25, -2);
            assert!((c - Complex64::new(-1.5, 0.0)).norm() < 1e-9, "{c}");
        }
        let c0 = laurent_coefficient(|z| s.eval(&z), Complex64::new(0.0, 0.0), 0.25, -2);
        assert!((c0 - Complex64::new(0.375, 0.0)).norm() < 1e-9);
        // agrees with the unreduced form away from the poles
        let (num, den) = schwarzian_parts(&pair.p, &pair.q, &Complex64::new(0.5, 0.0));
        let z = Complex64::new(0.7, 1.3);
        assert!((s.eval(&z) - num.eval(&z) / den.eval(&z)).norm() < 1e-12);
    }
}
