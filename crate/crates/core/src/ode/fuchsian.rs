use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use super::numeric::circle_coefficients;
use super::rational::pair_schwarzian_at;
use crate::error::{Error, Result};
use crate::feasibility::{exponents_at_infinity, AngleSignature};
use crate::wronski::PolynomialPair;

/// `w'' + sum_j (1 - alpha_j)/(z - a_j) w' + N(z) / prod_j (z - a_j) w = 0` with
/// `N(z) = alpha' alpha'' z^(n-3) + lambda_(n-4) z^(n-4) + ... + lambda_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FuchsianEquation {
    /// `a_0 = 0` followed by the interior corners.
    pub singularities: Vec<Complex64>,
    /// Exponent differences `alpha_0, alpha_1, ...` at the finite singularities.
    pub exponents: Vec<Rational64>,
    pub alpha_prime: Rational64,
    pub alpha_double_prime: Rational64,
    /// Accessory parameters `lambda_0 .. lambda_(n-4)`.
    pub accessory: Vec<Complex64>,
}

fn f64_of(r: Rational64) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl FuchsianEquation {
    /// `w'' + (1 - alpha)/z w' = 0`, solved by `1` and `z^alpha`.
    pub fn power_map(alpha: Rational64) -> Self {
        FuchsianEquation {
            singularities: vec![Complex64::new(0.0, 0.0)],
            exponents: vec![alpha],
            alpha_prime: Rational64::zero(),
            alpha_double_prime: -alpha,
            accessory: Vec::new(),
        }
    }

    /// Number of singular points including infinity.
    pub fn n(&self) -> usize {
        self.singularities.len() + 1
    }

    /// `sum alpha_j + alpha' + alpha'' - (n - 2)`; zero for a consistent equation.
    pub fn fuchs_defect(&self) -> Rational64 {
        let sum: Rational64 = self.exponents.iter().copied().sum();
        sum + self.alpha_prime + self.alpha_double_prime - Rational64::from(self.n() as i64 - 2)
    }

    /// Numerator `N(z)` of the potential, ascending coefficients.
    pub fn potential_numerator(&self) -> Vec<Complex64> {
        let mut c = self.accessory.clone();
        if self.n() >= 3 {
            c.push(Complex64::new(
                f64_of(self.alpha_prime * self.alpha_double_prime),
                0.0,
            ));
        }
        c
    }

    /// `(p(z), p'(z), q(z))` for `w'' + p w' + q w = 0`.
    pub fn coefficients(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        let mut prod = Complex64::new(1.0, 0.0);
        for (a, e) in self.singularities.iter().zip(&self.exponents) {
            let w = 1.0 - f64_of(*e);
            let inv = 1.0 / (z - a);
            p += w * inv;
            dp -= w * inv * inv;
            prod *= z - a;
        }
        let num = self
            .potential_numerator()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
        (p, dp, num / prod)
    }

    /// Schwarzian of a ratio of solutions: `2q - p' - p^2/2`.
    pub fn induced_schwarzian(&self, z: Complex64) -> Complex64 {
        let (p, dp, q) = self.coefficients(z);
        2.0 * q - dp - 0.5 * p * p
    }
}

/// Relative size above which a coefficient outside the normal form means the
/// pair and the signature do not fit together.
const CONSISTENCY_TOL: f64 = 1e-7;

/// Equation whose projective monodromy is that of the developing map of
/// `pair`: the potential is `q = (F + p' + p^2/2)/2` with `F` the Schwarzian of
/// `z^alpha P/Q`, and the accessory parameters are read off its numerator.
pub fn build_fuchsian(
    sig: &AngleSignature,
    corners: &[Complex64],
    pair: &PolynomialPair,
) -> Result<FuchsianEquation> {
    if corners.len() != sig.interior().len() {
        return Err(Error::InvalidInput(format!(
            "{} corners for {} interior angles",
            corners.len(),
            sig.interior().len()
        )));
    }
    let ex = exponents_at_infinity(sig);
    let mut singularities = vec![Complex64::new(0.0, 0.0)];
    singularities.extend_from_slice(corners);
    let mut exponents = vec![sig.alpha0()];
    exponents.extend(sig.interior().iter().map(|&a| Rational64::from(a as i64)));
    let mut eq = FuchsianEquation {
        singularities,
        exponents,
        alpha_prime: ex.alpha_prime,
        alpha_double_prime: ex.alpha_double_prime,
        accessory: Vec::new(),
    };
    let n = eq.n();
    let mut radius = 2.0 * corners.iter().map(|c| c.norm()).fold(1.0, f64::max) + 1.0;
    // roots of Q are removable but cost accuracy close to the circle
    let q_roots = pair.q.roots();
    while q_roots
        .iter()
        .any(|b| (b.norm() - radius).abs() < 0.1 * radius)
    {
        radius *= 1.25;
    }
    let m = (2 * n).next_power_of_two().max(16);
    let numerator = circle_coefficients(
        |z| {
            let mut p = Complex64::new(0.0, 0.0);
            let mut dp = Complex64::new(0.0, 0.0);
            let mut prod = Complex64::new(1.0, 0.0);
            for (a, e) in eq.singularities.iter().zip(&eq.exponents) {
                let w = 1.0 - f64_of(*e);
                p += w / (z - a);
                dp -= w / ((z - a) * (z - a));
                prod *= z - a;
            }
            prod * (pair_schwarzian_at(pair, z) + dp + 0.5 * p * p) * 0.5
        },
        Complex64::new(0.0, 0.0),
        radius,
        m,
    );
    let size = numerator
        .iter()
        .enumerate()
        .map(|(k, c)| c.norm() * radius.powi(k as i32))
        .fold(0.0, f64::max)
        .max(1.0);
    let top = n - 3;
    for (k, c) in numerator.iter().enumerate().skip(top + 1) {
        if c.norm() * radius.powi(k as i32) > CONSISTENCY_TOL * size {
            return Err(Error::InconsistentFuchsian(format!(
                "potential numerator has a z^{k} term of size {:.3e}",
                c.norm()
            )));
        }
    }
    let lead = f64_of(ex.alpha_prime * ex.alpha_double_prime);
    if (numerator[top] - lead).norm() * radius.powi(top as i32) > CONSISTENCY_TOL * size {
        return Err(Error::InconsistentFuchsian(format!(
            "leading coefficient {} differs from alpha' alpha'' = {lead}",
            numerator[top]
        )));
    }
    eq.accessory = numerator[..top].to_vec();
    Ok(eq)
}
