use std::cmp::Ordering;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::system::{System, Vector};
use super::{
    classify_solution, is_real_pair, wronski_map, PolynomialPair, SolutionReport, SolverConfig,
};
use crate::combinatorics::binom;
use crate::error::{Error, Result};
use crate::feasibility::DegreeSolution;
use crate::polynomial::CPoly;

/// Result of a fibre solve.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub solutions: Vec<SolutionReport>,
    /// Generic number of coprime solutions.
    pub expected: usize,
    pub complete: bool,
    pub warnings: Vec<String>,
}

/// Pairs with `P = z^shift_p P~`, `Q = z^shift_q Q~` and `P~(0) Q~(0) != 0`.
struct Family {
    shift_p: usize,
    shift_q: usize,
    system: System,
}

/// Relative size below which a low-order coefficient counts as zero.
const ZERO_COEFF: f64 = 1e-12;

fn measured_order(r: &CPoly) -> usize {
    let cutoff = ZERO_COEFF * r.max_abs();
    r.coeffs().iter().take_while(|c| c.norm() <= cutoff).count()
}

/// Every coprime pair `(P, Q)`, `deg P <= p`, `deg Q <= q`, with
/// `W_alpha(P, Q)` proportional to `R`, up to rescaling `P` and `Q`.
///
/// With `m = max(p0, q0)`, `R = z^m R~`, and the identity
/// `W_a(z^m P~, Q~) = z^m W_{a+m}(P~, Q~)` splits the fibre into the family
/// vanishing through `P` and the one vanishing through `Q`. Each family is
/// solved by Newton's method from seeded random starts, stopping once the
/// generic count `binom(deg P~ + deg Q~, deg P~)` is reached.
pub fn solve_wronski(r: &CPoly, sol: &DegreeSolution, config: &SolverConfig) -> Result<Fiber> {
    config.validate()?;
    let alpha = sol.alpha_f64();
    let (p, q, m) = (sol.p as usize, sol.q as usize, sol.m0() as usize);
    if r.degree_tol(ZERO_COEFF) != Some(p + q) {
        return Err(Error::DegreeMismatch(format!(
            "target has degree {:?} but p + q = {}",
            r.degree_tol(ZERO_COEFF),
            p + q
        )));
    }
    if measured_order(r) != m {
        return Err(Error::DegreeMismatch(format!(
            "target vanishes to order {} at 0 but max(p0, q0) = {m}",
            measured_order(r)
        )));
    }
    let reduced = r.shift_down(m);
    let reduced = reduced.scale(&Complex64::new(1.0 / reduced.norm(), 0.0));
    let mut families = Vec::new();
    let mut push = |shift_p: usize, shift_q: usize, a: f64| {
        if p >= shift_p && q >= shift_q {
            families.push(Family {
                shift_p,
                shift_q,
                system: System {
                    alpha: a,
                    dp: p - shift_p,
                    dq: q - shift_q,
                    target: reduced.clone(),
                },
            });
        }
    };
    if m == 0 {
        push(0, 0, alpha);
    } else {
        push(m, 0, alpha + m as f64);
        push(0, m, alpha - m as f64);
    }

    let mut solutions = Vec::new();
    let mut warnings = Vec::new();
    let mut expected = 0;
    for (idx, fam) in families.iter().enumerate() {
        let want = family_size(&fam.system);
        expected += want;
        let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed.wrapping_add(idx as u64));
        let points = solve_family(&fam.system, want, config, &mut rng, &mut warnings);
        if points.len() < want {
            warnings.push(format!(
                "incomplete fibre: found {} of {want} points with ord0(P) = {}, ord0(Q) = {} after {} starts",
                points.len(),
                fam.shift_p,
                fam.shift_q,
                config.num_starts
            ));
        }
        for x in points {
            let (pt, qt) = fam.system.unpack(&x);
            let pair =
                PolynomialPair::new(pt.shift_up(fam.shift_p), qt.shift_up(fam.shift_q), alpha);
            solutions.push(report(pair, r, config));
        }
    }
    Ok(Fiber {
        complete: solutions.len() == expected,
        solutions,
        expected,
        warnings,
    })
}

fn family_size(sys: &System) -> usize {
    let n = binom((sys.dp + sys.dq) as u32, sys.dp as u32);
    n.try_into().unwrap_or(usize::MAX)
}

pub(crate) fn report(pair: PolynomialPair, r: &CPoly, config: &SolverConfig) -> SolutionReport {
    let residual = wronski_map(&pair).projective_distance(r);
    SolutionReport {
        is_real: is_real_pair(&pair, config.realness_tol),
        realized: classify_solution(&pair, config.dedup_tol),
        residual,
        pair,
    }
}

fn solve_family(
    sys: &System,
    want: usize,
    config: &SolverConfig,
    rng: &mut ChaCha8Rng,
    warnings: &mut Vec<String>,
) -> Vec<Vector> {
    let roots = sys.target.roots();
    let radius = if roots.is_empty() {
        1.0
    } else {
        (roots.iter().map(|r| r.norm().max(1e-3).ln()).sum::<f64>() / roots.len() as f64).exp()
    };
    let lead = sys.target.coeff(sys.dp + sys.dq)
        / Complex64::new(sys.dp as f64 - sys.dq as f64 + sys.alpha, 0.0);
    let mut found: Vec<Vector> = Vec::new();
    let mut degenerate = 0usize;
    for _ in 0..config.num_starts {
        if found.len() >= want {
            break;
        }
        let mut random_roots = |k: usize| -> Vec<Complex64> {
            (0..k)
                .map(|_| {
                    let rad = radius
                        * (1.2 * rng.random::<f64>() - 0.6).exp()
                        * rng.random::<f64>().sqrt()
                        * 2.0;
                    Complex64::from_polar(rad, std::f64::consts::TAU * rng.random::<f64>())
                })
                .collect()
        };
        let p0 = CPoly::from_roots(&random_roots(sys.dp)).scale(&lead);
        let q0 = CPoly::from_roots(&random_roots(sys.dq));
        let Some(x) = sys.newton(sys.pack(&p0, &q0), config.max_newton_iters) else {
            continue;
        };
        let (pt, qt) = sys.unpack(&x);
        if wronski_map(&PolynomialPair::new(pt.clone(), qt.clone(), sys.alpha))
            .projective_distance(&sys.target)
            > config.residual_tol
        {
            continue;
        }
        if found
            .iter()
            .any(|y| (y - &x).norm() < config.dedup_tol * (1.0 + x.norm()))
        {
            continue;
        }
        if pt.coeff(0).norm() <= ZERO_COEFF * pt.max_abs() || share_root(&pt, &qt, &sys.target) {
            degenerate += 1;
            continue;
        }
        found.push(x);
    }
    if degenerate > 0 {
        warnings.push(format!(
            "discarded {degenerate} converged starts with a common factor or a root at 0"
        ));
    }
    found.sort_by(chart_order);
    found
}

/// A common factor `g` of `P` and `Q` divides `W_alpha(P, Q)` as `g^2`, so a
/// near-shared root only counts when at least two target roots sit on it.
/// Elsewhere it is a genuine, merely ill-conditioned, fibre point.
fn share_root(p: &CPoly, q: &CPoly, target: &CPoly) -> bool {
    let (pr, tr) = (p.roots(), target.roots());
    q.roots().iter().any(|r| {
        let scale = 1.0 + r.norm();
        let Some(sep) = pr.iter().map(|s| (s - r).norm()).min_by(f64::total_cmp) else {
            return false;
        };
        if sep > 1e-4 * scale {
            return false;
        }
        let reach = (100.0 * sep).max(1e-6 * scale);
        tr.iter().filter(|t| (*t - r).norm() <= reach).count() >= 2
    })
}

/// Lexicographic on `(re, im)` of the chart coordinates.
pub(crate) fn chart_order(a: &Vector, b: &Vector) -> Ordering {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}
