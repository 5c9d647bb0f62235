//! Developing maps `f = z^alpha P/Q` as points of the fibre of the map
//! `W_alpha(P, Q) = z (P'Q - PQ') + alpha P Q` over a critical polynomial.

mod continuation;
mod io;
mod sample;
mod solve;
mod system;
mod verify;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::feasibility::DegreeSolution;
use crate::polynomial::{from_usize, CPoly, Polynomial, Scalar};

pub use continuation::continue_alpha;
pub use io::{
    coeffs_to_poly, poly_to_coeffs, PolyCoeffs, RealizedRecord, SolutionRecord, TolerancesRecord,
};
pub use sample::{random_annulus_roots, random_real_roots};
pub use solve::{solve_wronski, Fiber};
pub use verify::{
    classify_solution, evaluate_developing_map, verify_solution, Classification, CornerCheck,
    MapValue, VerifyReport,
};

/// A candidate developing map `z^alpha P/Q`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialPair {
    pub p: CPoly,
    pub q: CPoly,
    pub alpha: f64,
}

impl PolynomialPair {
    pub fn new(p: CPoly, q: CPoly, alpha: f64) -> Self {
        PolynomialPair { p, q, alpha }
    }

    /// Same map with `P` and `Q` rescaled so their largest coefficients are 1.
    pub fn normalized(&self) -> Self {
        let unit = |x: &CPoly| match x
            .coeffs()
            .iter()
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        {
            Some(&c) => x.scale(&(1.0 / c)),
            None => x.clone(),
        };
        PolynomialPair::new(unit(&self.p), unit(&self.q), self.alpha)
    }
}

/// Tolerances and budgets for the numerical solvers.
#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    pub residual_tol: f64,
    pub realness_tol: f64,
    pub dedup_tol: f64,
    pub max_newton_iters: usize,
    /// Random starts per solution family.
    pub num_starts: usize,
    pub rng_seed: u64,
    /// Initial (and maximal) step in `alpha` for continuation.
    pub continuation_step: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            residual_tol: 1e-10,
            realness_tol: 1e-8,
            dedup_tol: 1e-6,
            max_newton_iters: 60,
            num_starts: 2000,
            rng_seed: 42,
            continuation_step: 0.05,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("residualTol", self.residual_tol),
            ("realnessTol", self.realness_tol),
            ("dedupTol", self.dedup_tol),
            ("continuationStep", self.continuation_step),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if self.max_newton_iters == 0 || self.num_starts == 0 {
            return Err(Error::InvalidInput(
                "iteration and start budgets must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// One verified fibre point.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionReport {
    pub pair: PolynomialPair,
    /// `min_c |W - c R| / |W|`.
    pub residual: f64,
    pub is_real: bool,
    pub realized: Classification,
}

/// `z (P'Q - PQ') + alpha P Q`; the `z^k` coefficient is
/// `sum_{i+j=k} (i - j + alpha) P_i Q_j`.
pub fn wronski_map_with<T: Scalar>(
    p: &Polynomial<T>,
    q: &Polynomial<T>,
    alpha: &T,
) -> Polynomial<T> {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let (pc, qc) = (p.coeffs(), q.coeffs());
    let mut out = vec![T::zero(); pc.len() + qc.len() - 1];
    for (i, a) in pc.iter().enumerate() {
        for (j, b) in qc.iter().enumerate() {
            let w = from_usize::<T>(i) - from_usize::<T>(j) + alpha.clone();
            out[i + j] = out[i + j].clone() + w * a.clone() * b.clone();
        }
    }
    Polynomial::new(out)
}

pub fn wronski_map(pair: &PolynomialPair) -> CPoly {
    wronski_map_with(&pair.p, &pair.q, &Complex64::new(pair.alpha, 0.0))
}

/// Target `z^max(p0,q0) prod (z - a_j)^{m_j}` for real corners `0 < a_1 < ...`.
pub fn critical_polynomial(corners: &[f64], mults: &[u32], sol: &DegreeSolution) -> Result<CPoly> {
    if corners.len() != mults.len() {
        return Err(Error::InvalidInput(format!(
            "{} corners but {} multiplicities",
            corners.len(),
            mults.len()
        )));
    }
    if corners.iter().any(|a| !(a.is_finite() && *a > 0.0))
        || corners.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(Error::InvalidInput(
            "corners must be positive and strictly increasing".into(),
        ));
    }
    if mults.contains(&0) {
        return Err(Error::InvalidInput(
            "corner multiplicities must be at least 1".into(),
        ));
    }
    let roots: Vec<Complex64> = corners
        .iter()
        .zip(mults)
        .flat_map(|(&a, &m)| std::iter::repeat_n(Complex64::new(a, 0.0), m as usize))
        .collect();
    critical_polynomial_from_roots(&roots, sol)
}

/// Same as [`critical_polynomial`] for arbitrary nonzero complex roots
/// (listed with multiplicity).
pub fn critical_polynomial_from_roots(roots: &[Complex64], sol: &DegreeSolution) -> Result<CPoly> {
    let degree = roots.len() as u32 + sol.m0();
    if degree != sol.total_degree() {
        return Err(Error::DegreeMismatch(format!(
            "critical polynomial has degree {degree} but p + q = {}",
            sol.total_degree()
        )));
    }
    if roots.iter().any(|r| r.norm() == 0.0) {
        return Err(Error::InvalidInput("corner roots must be nonzero".into()));
    }
    Ok(CPoly::from_roots(roots).shift_up(sol.m0() as usize))
}

/// Imaginary parts of both polynomials, after dividing each by its largest
/// coefficient, are below `tol`.
pub fn is_real_pair(pair: &PolynomialPair, tol: f64) -> bool {
    let n = pair.normalized();
    n.p.coeffs()
        .iter()
        .chain(n.q.coeffs())
        .all(|c| c.im.abs() < tol)
}
