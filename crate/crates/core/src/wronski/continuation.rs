use num_complex::Complex64;

use super::solve::report;
use super::system::{System, Vector};
use super::{classify_solution, wronski_map, PolynomialPair, SolutionReport, SolverConfig};
use crate::error::{Error, Result};
use crate::polynomial::CPoly;

const MIN_STEP: f64 = 1e-8;

/// Follow a fibre point of `W_alpha(P, Q) = c R` as `alpha` moves to
/// `target_alpha` with `R` fixed, by tangent predictor (RK4) and Newton
/// corrector with step halving.
///
/// The orders at 0 are split off first, `P = z^p0 P~`, `Q = z^q0 Q~`, so the
/// path runs in the reduced system `W_{alpha + p0 - q0}(P~, Q~) = R / z^(p0+q0)`
/// where the Jacobian stays regular for non-integer exponents.
pub fn continue_alpha(
    pair: &PolynomialPair,
    target_alpha: f64,
    r: &CPoly,
    config: &SolverConfig,
) -> Result<SolutionReport> {
    config.validate()?;
    for a in [pair.alpha, target_alpha] {
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::InvalidInput(format!(
                "alpha = {a} must lie in (0, 1)"
            )));
        }
    }
    let cls = classify_solution(pair, config.dedup_tol);
    if cls.p0 > 0 && cls.q0 > 0 {
        return Err(Error::InvalidInput("P and Q both vanish at 0".into()));
    }
    let m = cls.p0 + cls.q0;
    let cutoff = 1e-12 * r.max_abs();
    let r_order = r.coeffs().iter().take_while(|c| c.norm() <= cutoff).count();
    if r_order != m {
        return Err(Error::DegreeMismatch(format!(
            "target vanishes to order {r_order} at 0 but the pair has order {m}"
        )));
    }
    let shift = cls.p0 as f64 - cls.q0 as f64;
    let pt = pair.p.shift_down(cls.p0).trimmed(1e-14);
    let qt = pair.q.shift_down(cls.q0).trimmed(1e-14);
    let reduced = r.shift_down(m);
    let reduced = reduced.scale(&Complex64::new(1.0 / reduced.norm(), 0.0));
    let (Some(dp), Some(dq)) = (pt.degree(), qt.degree()) else {
        return Err(Error::InvalidInput("P and Q must be nonzero".into()));
    };
    if reduced.degree_tol(1e-12) != Some(dp + dq) {
        return Err(Error::DegreeMismatch(format!(
            "deg P + deg Q = {} does not match the target degree {:?}",
            dp + dq + m,
            r.degree_tol(1e-12)
        )));
    }
    let mut sys = System {
        alpha: pair.alpha + shift,
        dp,
        dq,
        target: reduced,
    };
    // absorb the matching scalar into P
    let w = wronski_map(&PolynomialPair::new(pt.clone(), qt.clone(), sys.alpha));
    let dot: Complex64 = (0..=dp + dq)
        .map(|k| sys.target.coeff(k).conj() * w.coeff(k))
        .sum();
    let c = dot / sys.target.norm().powi(2);
    if c.norm() == 0.0 {
        return Err(Error::ResidualNotMet {
            residual: 1.0,
            tolerance: config.residual_tol,
        });
    }
    let mut x = sys.pack(&pt.scale(&(1.0 / c)), &qt);
    x = sys
        .newton(x, config.max_newton_iters)
        .ok_or(Error::SingularJacobian("continuation start"))?;

    let mut t = pair.alpha;
    let mut h = config.continuation_step;
    while t != target_alpha {
        let dir = (target_alpha - t).signum();
        let step = h.min((target_alpha - t).abs()) * dir;
        let next_t = if (target_alpha - t).abs() <= h {
            target_alpha
        } else {
            t + step
        };
        match advance(&mut sys, &x, t + shift, next_t + shift) {
            Some(xn) => {
                x = xn;
                t = next_t;
                h = (h * 1.5).min(config.continuation_step);
            }
            None => {
                h *= 0.5;
                if h < MIN_STEP {
                    return Err(Error::StepUnderflow { last_alpha: t });
                }
            }
        }
    }
    sys.alpha = target_alpha + shift;
    let x = sys
        .newton(x, config.max_newton_iters)
        .ok_or(Error::SingularJacobian("final polish"))?;
    let (pt, qt) = sys.unpack(&x);
    let out = PolynomialPair::new(pt.shift_up(cls.p0), qt.shift_up(cls.q0), target_alpha);
    let rep = report(out, r, config);
    if rep.residual > config.residual_tol {
        return Err(Error::ResidualNotMet {
            residual: rep.residual,
            tolerance: config.residual_tol,
        });
    }
    Ok(rep)
}

/// `dx/da = -J^{-1} dH/da`.
fn tangent(sys: &mut System, x: &Vector, a: f64) -> Option<Vector> {
    sys.alpha = a;
    let v = sys.jacobian(x).lu().solve(&sys.d_alpha(x))?;
    v.iter().all(|c| c.is_finite()).then(|| -v)
}

fn advance(sys: &mut System, x: &Vector, a0: f64, a1: f64) -> Option<Vector> {
    let h = a1 - a0;
    let hc = |s: f64| Complex64::new(s, 0.0);
    let k1 = tangent(sys, x, a0)?;
    let k2 = tangent(sys, &(x + &k1 * hc(h / 2.0)), a0 + h / 2.0)?;
    let k3 = tangent(sys, &(x + &k2 * hc(h / 2.0)), a0 + h / 2.0)?;
    let k4 = tangent(sys, &(x + &k3 * hc(h)), a1)?;
    let predicted = x + (k1 + k2 * hc(2.0) + k3 * hc(2.0) + k4) * hc(h / 6.0);
    sys.alpha = a1;
    let corrected = sys.newton(predicted.clone(), 12)?;
    // a large correction means the predictor left the basin of this path
    let drift = (&corrected - &predicted).norm();
    (drift <= 1e-3 * (1.0 + corrected.norm())).then_some(corrected)
}
