use std::f64::consts::TAU;

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::dop853::{integrate, Tolerances};
use super::FuchsianEquation;
use crate::error::{Error, Result};

/// A path piece parametrized over `t in [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Segment {
    Line {
        from: [f64; 2],
        to: [f64; 2],
    },
    /// `center + radius e^{i (start + t sweep)}`; positive sweep is counterclockwise.
    #[serde(rename_all = "camelCase")]
    Arc {
        center: [f64; 2],
        radius: f64,
        start_angle: f64,
        sweep: f64,
    },
}

fn c(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

fn pt(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

impl Segment {
    pub fn point(&self, t: f64) -> Complex64 {
        match *self {
            Segment::Line { from, to } => c(from) + (c(to) - c(from)) * t,
            Segment::Arc {
                center,
                radius,
                start_angle,
                sweep,
            } => c(center) + Complex64::from_polar(radius, start_angle + t * sweep),
        }
    }

    pub fn velocity(&self, t: f64) -> Complex64 {
        match *self {
            Segment::Line { from, to } => c(to) - c(from),
            Segment::Arc {
                radius,
                start_angle,
                sweep,
                ..
            } => {
                Complex64::new(0.0, sweep) * Complex64::from_polar(radius, start_angle + t * sweep)
            }
        }
    }

    /// Exact distance from `s` to the segment.
    pub fn distance_to(&self, s: Complex64) -> f64 {
        match *self {
            Segment::Line { from, to } => {
                let (a, b) = (c(from), c(to));
                let d = b - a;
                let len2 = d.norm_sqr();
                let t = if len2 == 0.0 {
                    0.0
                } else {
                    ((s - a) * d.conj()).re / len2
                };
                (s - (a + d * t.clamp(0.0, 1.0))).norm()
            }
            Segment::Arc {
                center,
                radius,
                start_angle,
                sweep,
            } => {
                let rel = s - c(center);
                let endpoints = (self.point(0.0) - s)
                    .norm()
                    .min((self.point(1.0) - s).norm());
                if sweep.abs() >= TAU || rel.norm() == 0.0 {
                    return (rel.norm() - radius).abs().min(endpoints);
                }
                // is the direction of s within the swept angular range?
                let (lo, span) = if sweep >= 0.0 {
                    (start_angle, sweep)
                } else {
                    (start_angle + sweep, -sweep)
                };
                let offset = (rel.arg() - lo).rem_euclid(TAU);
                if offset <= span {
                    (rel.norm() - radius).abs()
                } else {
                    endpoints
                }
            }
        }
    }
}

/// Closed path from `base` made of segments, kept at least `clearance` away
/// from every singular point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Loop {
    pub base: [f64; 2],
    pub segments: Vec<Segment>,
    pub clearance: f64,
}

impl Loop {
    /// Straight approach from `base` to a circle of radius `radius` around
    /// `center`, once around it counterclockwise, and back.
    pub fn lasso(base: Complex64, center: Complex64, radius: f64) -> Self {
        let dir = (base - center).arg();
        let touch = center + Complex64::from_polar(radius, dir);
        Loop {
            base: pt(base),
            segments: vec![
                Segment::Line {
                    from: pt(base),
                    to: pt(touch),
                },
                Segment::Arc {
                    center: pt(center),
                    radius,
                    start_angle: dir,
                    sweep: TAU,
                },
                Segment::Line {
                    from: pt(touch),
                    to: pt(base),
                },
            ],
            clearance: radius / 2.0,
        }
    }

    /// Lasso around singularity `index` of `eq`, with radius half the distance
    /// to the nearest other singular point.
    pub fn around(eq: &FuchsianEquation, index: usize, base: Complex64) -> Result<Self> {
        let center = *eq
            .singularities
            .get(index)
            .ok_or_else(|| Error::InvalidInput(format!("no singular point with index {index}")))?;
        let nearest = eq
            .singularities
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, s)| (s - center).norm())
            .fold((base - center).norm(), f64::min);
        Ok(Loop::lasso(base, center, nearest / 2.0))
    }

    /// `self` followed by `other`; both must start at the same base point.
    pub fn then(&self, other: &Loop) -> Result<Self> {
        if (c(self.base) - c(other.base)).norm() > 1e-12 {
            return Err(Error::InvalidInput(
                "loops have different base points".into(),
            ));
        }
        let mut segments = self.segments.clone();
        segments.extend_from_slice(&other.segments);
        Ok(Loop {
            base: self.base,
            segments,
            clearance: self.clearance.min(other.clearance),
        })
    }

    pub fn is_closed(&self) -> bool {
        let mut at = c(self.base);
        for s in &self.segments {
            if (s.point(0.0) - at).norm() > 1e-9 * (1.0 + at.norm()) {
                return false;
            }
            at = s.point(1.0);
        }
        (at - c(self.base)).norm() <= 1e-9 * (1.0 + at.norm())
    }

    /// Checks that every singular point is at least `clearance` from the path.
    pub fn validate(&self, singularities: &[Complex64]) -> Result<()> {
        if self.clearance.is_nan() || self.clearance <= 0.0 {
            return Err(Error::InvalidInput(
                "loop clearance must be positive".into(),
            ));
        }
        if self.segments.is_empty() || !self.is_closed() {
            return Err(Error::InvalidInput("loop is not closed".into()));
        }
        for s in singularities {
            for seg in &self.segments {
                let d = seg.distance_to(*s);
                if d < self.clearance {
                    return Err(Error::Clearance {
                        singularity: format!("{s}"),
                        distance: d,
                        clearance: self.clearance,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Transport matrix normalized to determinant 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonodromyMatrix {
    pub entries: Matrix2<Complex64>,
    /// Determinant before normalization.
    pub raw_determinant: Complex64,
}

impl MonodromyMatrix {
    pub fn from_matrix(m: Matrix2<Complex64>) -> Result<Self> {
        let det = m.determinant();
        let scale = m.iter().map(|x| x.norm()).fold(0.0, f64::max);
        if det.norm() <= 1e-14 * scale * scale || !det.is_finite() {
            return Err(Error::NotInvertible(det.norm()));
        }
        Ok(MonodromyMatrix {
            entries: m / det.sqrt(),
            raw_determinant: det,
        })
    }

    pub fn determinant_error(&self) -> f64 {
        (self.entries.determinant() - 1.0).norm()
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    /// Eigenvalues `(l, 1/l)`.
    pub fn eigenvalues(&self) -> (Complex64, Complex64) {
        let tr = self.trace();
        let disc = (tr * tr - 4.0).sqrt();
        ((tr + disc) / 2.0, (tr - disc) / 2.0)
    }

    /// Projective eigenvalue ratio `l1 / l2` (the inverse ratio is equally valid).
    pub fn eigenvalue_ratio(&self) -> Complex64 {
        let (a, b) = self.eigenvalues();
        a / b
    }

    /// Distance of the ratio (either orientation) from `e^{2 pi i alpha}`.
    pub fn ratio_error(&self, alpha: f64) -> f64 {
        let target = Complex64::from_polar(1.0, TAU * alpha);
        let r = self.eigenvalue_ratio();
        (r - target).norm().min((1.0 / r - target).norm())
    }

    /// `+-I`: trivial in `PSL(2)`.
    pub fn projectively_trivial(&self, tol: f64) -> bool {
        let id = Matrix2::identity();
        (self.entries - id).norm() <= tol || (self.entries + id).norm() <= tol
    }

    pub fn compose(&self, then: &MonodromyMatrix) -> Result<MonodromyMatrix> {
        MonodromyMatrix::from_matrix(then.entries * self.entries)
    }
}

/// Propagator of the first-order system `Y' = [[0, 1], [-q, -p]] Y` along
/// consecutive segments, starting from `Y = I`.
fn propagate(
    eq: &FuchsianEquation,
    segments: &[Segment],
    tol: &Tolerances,
) -> Result<Matrix2<Complex64>> {
    let mut y = vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ];
    for seg in segments {
        // y = (w1, w2, w1', w2') row-major
        let rhs = |t: f64, y: &[Complex64], dy: &mut [Complex64]| {
            let z = seg.point(t);
            let v = seg.velocity(t);
            let (p, _, q) = eq.coefficients(z);
            dy[0] = y[2] * v;
            dy[1] = y[3] * v;
            dy[2] = (-q * y[0] - p * y[2]) * v;
            dy[3] = (-q * y[1] - p * y[3]) * v;
        };
        y = integrate(rhs, 0.0, 1.0, &y, tol)?.0;
    }
    Ok(Matrix2::new(y[0], y[1], y[2], y[3]))
}

/// Continue the fundamental matrix `Y(base) = I` along the loop. Following
/// `a` then `b` gives `M_b M_a`.
pub fn integrate_monodromy(
    eq: &FuchsianEquation,
    path: &Loop,
    tol: &Tolerances,
) -> Result<MonodromyMatrix> {
    path.validate(&eq.singularities)?;
    MonodromyMatrix::from_matrix(propagate(eq, &path.segments, tol)?)
}

/// Monodromy of a lasso around one singular point, in two forms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalMonodromy {
    pub singularity: Complex64,
    /// The lasso read at the common base point: `T^{-1} L T` with `T` the
    /// transport along the approach.
    pub based: MonodromyMatrix,
    /// The circle alone, read where the approach meets it. Conjugate to
    /// `based`, but free of the transport's conditioning, which can be poor
    /// when the base is far from a tight cluster of singular points.
    pub local: MonodromyMatrix,
}

impl LocalMonodromy {
    /// Conjugation invariant, so decided on the circle alone.
    pub fn projectively_trivial(&self, tol: f64) -> bool {
        self.local.projectively_trivial(tol)
    }

    pub fn eigenvalue_ratio(&self) -> Complex64 {
        self.local.eigenvalue_ratio()
    }

    pub fn ratio_error(&self, alpha: f64) -> f64 {
        self.local.ratio_error(alpha)
    }
}

/// One lasso per finite singular point, in order, all from `base`.
pub fn local_monodromies(
    eq: &FuchsianEquation,
    base: Complex64,
    tol: &Tolerances,
) -> Result<Vec<LocalMonodromy>> {
    (0..eq.singularities.len())
        .map(|j| {
            let lasso = Loop::around(eq, j, base)?;
            lasso.validate(&eq.singularities)?;
            let t = propagate(eq, &lasso.segments[..1], tol)?;
            let l = propagate(eq, &lasso.segments[1..2], tol)?;
            let t_inv = t
                .try_inverse()
                .ok_or(Error::NotInvertible(t.determinant().norm()))?;
            Ok(LocalMonodromy {
                singularity: eq.singularities[j],
                based: MonodromyMatrix::from_matrix(t_inv * l * t)?,
                local: MonodromyMatrix::from_matrix(l)?,
            })
        })
        .collect()
}

/// [`unitarizability_check`] on lasso generators. A generator whose circle is
/// `+-I` within `tol` is exactly `+-I` at the base too, so it enters as the
/// identity rather than as its ill-conditioned based reading.
pub fn certify_lassos(generators: &[LocalMonodromy], tol: f64) -> Result<UnitarizabilityReport> {
    let identity = MonodromyMatrix::from_matrix(Matrix2::identity())?;
    let gens: Vec<MonodromyMatrix> = generators
        .iter()
        .map(|g| {
            if g.projectively_trivial(tol) {
                identity
            } else {
                g.based
            }
        })
        .collect();
    let mut rep = unitarizability_check(&gens, tol)?;
    rep.ratios = generators
        .iter()
        .map(LocalMonodromy::eigenvalue_ratio)
        .collect();
    Ok(rep)
}

/// A base point above all singularities, clear of the real axis.
pub fn default_base_point(eq: &FuchsianEquation) -> Complex64 {
    let xs: Vec<f64> = eq.singularities.iter().map(|s| s.re).collect();
    let ys: Vec<f64> = eq.singularities.iter().map(|s| s.im).collect();
    let (lo, hi) = xs
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| {
            (a.min(x), b.max(x))
        });
    let top = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = (hi - lo).max(1.0);
    Complex64::new((lo + hi) / 2.0 + 0.137 * span, top.max(0.0) + span)
}

/// Outcome of [`unitarizability_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unitarizability {
    /// Commuting generators: the answer is a decision.
    Certified(bool),
    /// Non-commuting generators: only a necessary condition was tested.
    Screen(bool),
}

#[derive(Clone, Debug, PartialEq)]
pub struct UnitarizabilityReport {
    pub verdict: Unitarizability,
    /// Projective eigenvalue ratio of each generator.
    pub ratios: Vec<Complex64>,
}

impl UnitarizabilityReport {
    pub fn positive(&self) -> bool {
        matches!(
            self.verdict,
            Unitarizability::Certified(true) | Unitarizability::Screen(true)
        )
    }
}

/// Whether the group generated by the matrices is conjugate into `PSU(2)`.
///
/// Commuting generators are simultaneously triangularizable; they are
/// unitarizable exactly when every non-scalar one is diagonalizable with
/// eigenvalue ratio of modulus 1. Otherwise the traces of the generators and
/// their pairwise products are screened (real, within `[-2, 2]`).
pub fn unitarizability_check(
    generators: &[MonodromyMatrix],
    tol: f64,
) -> Result<UnitarizabilityReport> {
    if generators.is_empty() {
        return Err(Error::InvalidInput("no generators".into()));
    }
    let gens: Vec<MonodromyMatrix> = generators
        .iter()
        .map(|g| MonodromyMatrix::from_matrix(g.entries))
        .collect::<Result<_>>()?;
    let ratios = gens.iter().map(MonodromyMatrix::eigenvalue_ratio).collect();
    let commuting = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..].iter().all(|b| {
            (a.entries * b.entries - b.entries * a.entries).norm()
                <= tol * (1.0 + a.entries.norm() * b.entries.norm())
        })
    });
    if commuting {
        let ok = gens.iter().all(|g| {
            if g.projectively_trivial(tol) {
                return true;
            }
            let (l1, l2) = g.eigenvalues();
            // a repeated eigenvalue on a non-scalar matrix is a Jordan block
            (l1 - l2).norm() > tol.sqrt() && ((l1 / l2).norm() - 1.0).abs() <= tol
        });
        return Ok(UnitarizabilityReport {
            verdict: Unitarizability::Certified(ok),
            ratios,
        });
    }
    let trace_ok = |m: &Matrix2<Complex64>| {
        let tr = m.trace();
        tr.im.abs() <= tol && tr.re.abs() <= 2.0 + tol
    };
    let mut ok = gens.iter().all(|g| trace_ok(&g.entries));
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            ok &= trace_ok(&(a.entries * b.entries));
        }
    }
    Ok(UnitarizabilityReport {
        verdict: Unitarizability::Screen(ok),
        ratios,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;
    use std::f64::consts::PI;

    fn diag(a: Complex64, b: Complex64) -> MonodromyMatrix {
        MonodromyMatrix::from_matrix(Matrix2::new(
            a,
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            b,
        ))
        .unwrap()
    }

    #[test]
    fn power_map_monodromy() {
        let eq = FuchsianEquation::power_map(Rational64::new(1, 2));
        let path = Loop::lasso(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), 1.0);
        let circle = Loop {
            base: [1.0, 0.0],
            segments: vec![Segment::Arc {
                center: [0.0, 0.0],
                radius: 1.0,
                start_angle: 0.0,
                sweep: TAU,
            }],
            clearance: 0.5,
        };
        for l in [path, circle] {
            let m = integrate_monodromy(&eq, &l, &Tolerances::default()).unwrap();
            assert!((m.eigenvalue_ratio() + 1.0).norm() < 1e-6);
            assert!(m.determinant_error() < 1e-9);
        }
    }

    #[test]
    fn clearance_is_enforced() {
        let eq = FuchsianEquation::power_map(Rational64::new(1, 3));
        let l = Loop::lasso(Complex64::new(1.0, 1.0), Complex64::new(0.0, 0.0), 1e-3);
        assert!(l.validate(&eq.singularities).is_ok());
        let mut bad = l.clone();
        bad.clearance = 0.01;
        assert!(matches!(
            bad.validate(&eq.singularities),
            Err(Error::Clearance { .. })
        ));
        let through = Loop {
            base: [-1.0, 0.0],
            segments: vec![
                Segment::Line {
                    from: [-1.0, 0.0],
                    to: [1.0, 0.0],
                },
                Segment::Line {
                    from: [1.0, 0.0],
                    to: [-1.0, 0.0],
                },
            ],
            clearance: 0.1,
        };
        assert!(matches!(
            integrate_monodromy(&eq, &through, &Tolerances::default()),
            Err(Error::Clearance { .. })
        ));
    }

    #[test]
    fn arc_distance() {
        let half = Segment::Arc {
            center: [0.0, 0.0],
            radius: 1.0,
            start_angle: 0.0,
            sweep: PI,
        };
        assert!((half.distance_to(Complex64::new(0.0, 2.0)) - 1.0).abs() < 1e-15);
        assert!((half.distance_to(Complex64::new(0.0, -2.0)) - 5f64.sqrt()).abs() < 1e-15);
        let line = Segment::Line {
            from: [0.0, 0.0],
            to: [2.0, 0.0],
        };
        assert!((line.distance_to(Complex64::new(1.0, 0.5)) - 0.5).abs() < 1e-15);
        assert!((line.distance_to(Complex64::new(3.0, 0.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unitarizability_examples() {
        let rot = diag(
            Complex64::from_polar(1.0, PI / 3.0),
            Complex64::from_polar(1.0, -PI / 3.0),
        );
        let rep = unitarizability_check(&[rot], 1e-9).unwrap();
        assert_eq!(rep.verdict, Unitarizability::Certified(true));
        let hyp = diag(Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.0));
        assert_eq!(
            unitarizability_check(&[hyp], 1e-9).unwrap().verdict,
            Unitarizability::Certified(false)
        );
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let parabolic = MonodromyMatrix::from_matrix(Matrix2::new(one, one, zero, one)).unwrap();
        assert_eq!(
            unitarizability_check(&[parabolic], 1e-9).unwrap().verdict,
            Unitarizability::Certified(false)
        );
        // two rotations about different axes
        let (ct, st) = ((PI / 5.0).cos(), (PI / 5.0).sin());
        let other = MonodromyMatrix::from_matrix(Matrix2::new(
            Complex64::new(ct, 0.0),
            Complex64::new(st, 0.0),
            Complex64::new(-st, 0.0),
            Complex64::new(ct, 0.0),
        ))
        .unwrap();
        assert_eq!(
            unitarizability_check(&[rot, other], 1e-9).unwrap().verdict,
            Unitarizability::Screen(true)
        );
        assert_eq!(
            unitarizability_check(&[hyp, other], 1e-9).unwrap().verdict,
            Unitarizability::Screen(false)
        );
        let singular = Matrix2::new(one, one, one, one);
        assert!(matches!(
            MonodromyMatrix::from_matrix(singular),
            Err(Error::NotInvertible(_))
        ));
        assert!(unitarizability_check(&[], 1e-9).is_err());
    }
}
