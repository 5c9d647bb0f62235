use std::f64::consts::TAU;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;

use super::{wronski_map, PolynomialPair};
use crate::error::{Error, Result};
use crate::polynomial::CPoly;

/// Degrees, orders at 0 and the corner angles they realize:
/// `alpha0 = |p0 - q0 + alpha|`, `alphaInf = |p - q + alpha|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Classification {
    pub p: usize,
    pub q: usize,
    pub p0: usize,
    pub q0: usize,
    pub alpha0: f64,
    pub alpha_inf: f64,
    /// A root sits in `[tol, 100 tol)` of the origin, so the orders at 0 are
    /// not clear-cut.
    pub ambiguous: bool,
}

fn order_at_origin(p: &CPoly, tol: f64) -> (usize, bool) {
    let exact = p.order_at_zero();
    let rest = p.shift_down(exact);
    let mut order = exact;
    let mut ambiguous = false;
    for r in rest.roots() {
        let d = r.norm();
        if d < tol {
            order += 1;
        } else if d < 100.0 * tol {
            ambiguous = true;
        }
    }
    (order, ambiguous)
}

/// Measure `(p, q, p0, q0)` numerically, clustering roots within `tol` of 0.
pub fn classify_solution(pair: &PolynomialPair, tol: f64) -> Classification {
    let (p0, amb_p) = order_at_origin(&pair.p, tol);
    let (q0, amb_q) = order_at_origin(&pair.q, tol);
    let p = pair.p.degree_tol(1e-13).unwrap_or(0);
    let q = pair.q.degree_tol(1e-13).unwrap_or(0);
    Classification {
        p,
        q,
        p0,
        q0,
        alpha0: (p0 as f64 - q0 as f64 + pair.alpha).abs(),
        alpha_inf: (p as f64 - q as f64 + pair.alpha).abs(),
        ambiguous: amb_p || amb_q,
    }
}

impl Classification {
    /// Both realized angles equal the given exact values to within `tol`.
    pub fn matches(&self, alpha0: Rational64, alpha_inf: Rational64, tol: f64) -> bool {
        let close = |x: f64, r: Rational64| (x - r.to_f64().unwrap_or(f64::NAN)).abs() <= tol;
        close(self.alpha0, alpha0) && close(self.alpha_inf, alpha_inf)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MapValue {
    Finite(Complex64),
    /// `z` is a pole.
    Infinity,
}

fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0
}

/// `z^alpha P(z)/Q(z)` on the principal branch, `z` off `(-inf, 0]`.
pub fn evaluate_developing_map(pair: &PolynomialPair, z: Complex64) -> Result<MapValue> {
    if !z.is_finite() || on_cut(z) {
        return Err(Error::BranchCut(format!("{z}")));
    }
    let qz = pair.q.eval(&z);
    let size: f64 = pair
        .q
        .coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * z.norm() + c.norm());
    if qz.norm() <= 1e-14 * size {
        return Ok(MapValue::Infinity);
    }
    Ok(MapValue::Finite(z.powf(pair.alpha) * pair.p.eval(&z) / qz))
}

/// Vanishing order of `f'` at one root of the target.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CornerCheck {
    pub corner: Complex64,
    pub expected_order: usize,
    pub measured_order: usize,
}

impl CornerCheck {
    pub fn ok(&self) -> bool {
        self.expected_order == self.measured_order
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub residual: f64,
    /// `residual <= tol`.
    pub residual_ok: bool,
    pub corners: Vec<CornerCheck>,
}

impl VerifyReport {
    pub fn orders_ok(&self) -> bool {
        self.corners.iter().all(CornerCheck::ok)
    }

    pub fn passed(&self) -> bool {
        self.residual_ok && self.orders_ok()
    }
}

/// Scale-matched residual of `W_alpha(P, Q)` against `R`, plus a direct check
/// that `f = z^alpha P/Q` has a critical point of the prescribed order at
/// every nonzero root of `R`.
pub fn verify_solution(pair: &PolynomialPair, r: &CPoly, tol: f64) -> VerifyReport {
    let residual = wronski_map(pair).projective_distance(r);
    let scale = r.roots().iter().map(|z| z.norm()).fold(1.0, f64::max);
    let clusters = cluster(&r.roots(), 1e-5 * scale);
    let poles = pair.q.roots();
    let corners = clusters
        .iter()
        .filter(|(c, _)| c.norm() > 1e-6 * scale)
        .map(|&(c, k)| {
            let mut radius = 0.5 * c.norm();
            for (other, _) in &clusters {
                if *other != c {
                    radius = radius.min(0.5 * (other - c).norm());
                }
            }
            for pole in &poles {
                radius = radius.min(0.5 * (pole - c).norm());
            }
            CornerCheck {
                corner: c,
                expected_order: k,
                measured_order: critical_order(pair, c, radius.max(1e-300)),
            }
        })
        .collect();
    VerifyReport {
        residual,
        residual_ok: residual <= tol,
        corners,
    }
}

/// Group numerically split multiple roots.
fn cluster(roots: &[Complex64], tol: f64) -> Vec<(Complex64, usize)> {
    let mut groups: Vec<(Vec<Complex64>, Complex64)> = Vec::new();
    for &r in roots {
        match groups.iter_mut().find(|(_, c)| (c - r).norm() < tol) {
            Some((members, center)) => {
                members.push(r);
                *center = members.iter().sum::<Complex64>() / members.len() as f64;
            }
            None => groups.push((vec![r], r)),
        }
    }
    groups.into_iter().map(|(m, c)| (c, m.len())).collect()
}

/// Taylor coefficients of `f` around `c` from samples on a circle; the order
/// of `f'` is the index of the first non-negligible coefficient, minus one.
fn critical_order(pair: &PolynomialPair, c: Complex64, radius: f64) -> usize {
    const N: usize = 64;
    // z^alpha = c^alpha (1 + w/c)^alpha is analytic for |w| < |c|
    let base = c.powf(pair.alpha);
    let samples: Vec<Complex64> = (0..N)
        .map(|j| {
            let w = Complex64::from_polar(radius, TAU * j as f64 / N as f64);
            let z = c + w;
            base * (Complex64::new(1.0, 0.0) + w / c).powf(pair.alpha) * pair.p.eval(&z)
                / pair.q.eval(&z)
        })
        .collect();
    // b_k = |a_k| radius^k
    let sizes: Vec<f64> = (1..N / 2)
        .map(|k| {
            let s: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(j, v)| v * Complex64::from_polar(1.0, -TAU * (j * k) as f64 / N as f64))
                .sum();
            s.norm() / N as f64
        })
        .collect();
    let top = sizes.iter().copied().fold(0.0, f64::max);
    let floor = samples.iter().map(|v| v.norm()).fold(0.0, f64::max) * 1e-9;
    sizes
        .iter()
        .position(|&b| b > 1e-6 * top && b > floor)
        .unwrap_or(sizes.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadratic_pair() -> PolynomialPair {
        let v = (-3.0 + 33f64.sqrt()) / 6.0;
        let u = 3.0 * v + 3.0;
        PolynomialPair::new(
            CPoly::from_real(&[u, 1.0]),
            CPoly::from_real(&[v, 1.0]),
            0.5,
        )
    }

    #[test]
    fn classify_examples() {
        let c = classify_solution(&quadratic_pair(), 1e-6);
        assert_eq!((c.p0, c.q0, c.alpha0, c.alpha_inf), (0, 0, 0.5, 0.5));
        let pair = PolynomialPair::new(
            CPoly::from_real(&[0.0, -3.0, 1.0]),
            CPoly::from_real(&[-5.0, 1.0]),
            0.5,
        );
        let c = classify_solution(&pair, 1e-6);
        assert_eq!((c.p0, c.q0, c.alpha0, c.alpha_inf), (1, 0, 1.5, 1.5));
        let pair = PolynomialPair::new(CPoly::one(), CPoly::from_real(&[0.0, 1.0]), 1.0 / 3.0);
        let c = classify_solution(&pair, 1e-6);
        assert_eq!((c.p0, c.q0), (0, 1));
        assert!((c.alpha0 - 2.0 / 3.0).abs() < 1e-15 && (c.alpha_inf - 2.0 / 3.0).abs() < 1e-15);
        assert!(!c.ambiguous);
    }

    #[test]
    fn near_zero_roots_are_flagged() {
        let pair = PolynomialPair::new(CPoly::from_real(&[-1e-5, 1.0]), CPoly::one(), 0.5);
        assert!(classify_solution(&pair, 1e-6).ambiguous);
        let pair = PolynomialPair::new(CPoly::from_real(&[-1e-8, 1.0]), CPoly::one(), 0.5);
        let c = classify_solution(&pair, 1e-6);
        assert_eq!(c.p0, 1);
        assert!(!c.ambiguous);
    }

    #[test]
    fn developing_map_values() {
        let one = PolynomialPair::new(CPoly::one(), CPoly::one(), 0.5);
        assert_eq!(
            evaluate_developing_map(&one, Complex64::new(4.0, 0.0)).unwrap(),
            MapValue::Finite(Complex64::new(2.0, 0.0))
        );
        let MapValue::Finite(v) =
            evaluate_developing_map(&quadratic_pair(), Complex64::new(1.0, 0.0)).unwrap()
        else {
            panic!("finite value expected");
        };
        assert!((v.re - 3.686).abs() < 1e-3 && v.im.abs() < 1e-15);
        let MapValue::Finite(v) =
            evaluate_developing_map(&quadratic_pair(), Complex64::new(1e-12, 0.0)).unwrap()
        else {
            panic!("finite value expected");
        };
        assert!(v.norm() < 1e-5);
        assert!(matches!(
            evaluate_developing_map(&one, Complex64::new(-1.0, 0.0)),
            Err(Error::BranchCut(_))
        ));
        let v = (-3.0 - 33f64.sqrt()) / 6.0;
        let other = PolynomialPair::new(
            CPoly::from_real(&[3.0 * v + 3.0, 1.0]),
            CPoly::from_real(&[v, 1.0]),
            0.5,
        );
        let pole = Complex64::new(-v, 0.0);
        assert_eq!(
            evaluate_developing_map(&other, pole).unwrap(),
            MapValue::Infinity
        );
    }

    #[test]
    fn verify_examples() {
        let r = CPoly::from_real(&[2.0, -3.0, 1.0]);
        let rep = verify_solution(&quadratic_pair(), &r, 1e-10);
        assert!(rep.residual < 1e-12 && rep.passed(), "{rep:?}");
        assert_eq!(rep.corners.len(), 2);

        let mut bad = quadratic_pair();
        bad.p = bad.p.add(&CPoly::from_real(&[1e-2]));
        let rep = verify_solution(&bad, &r, 1e-10);
        assert!(!rep.residual_ok && !rep.orders_ok());

        let mut scaled = quadratic_pair();
        scaled.p = scaled.p.scale(&Complex64::new(-2.5, 1.0));
        scaled.q = scaled.q.scale(&Complex64::new(0.0, 7.0));
        let rep2 = verify_solution(&scaled, &r, 1e-10);
        assert!(
            (rep2.residual - verify_solution(&quadratic_pair(), &r, 1e-10).residual).abs() < 1e-15
        );
        assert!(rep2.passed());
    }
}
