//! Existence of metrics for a prescribed angle signature and the integer
//! degree data of the developing map `z^alpha P/Q`.
//!
//! All angle arithmetic is exact: angles are rationals (in units of `2 pi`),
//! and the integrality and parity tests never touch floating point.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Corner angles `2 pi alpha_0`, `2 pi alpha_j` (integers `>= 2`) and
/// `2 pi alpha_inf`, in boundary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleSignature {
    alpha0: Rational64,
    interior: Vec<u32>,
    alpha_inf: Rational64,
}

impl AngleSignature {
    pub fn new(alpha0: Rational64, interior: Vec<u32>, alpha_inf: Rational64) -> Result<Self> {
        for (name, a) in [("alpha0", alpha0), ("alphaInf", alpha_inf)] {
            if !a.is_positive() {
                return Err(Error::InvalidSignature(format!(
                    "{name} = {a} must be positive"
                )));
            }
            if a.is_integer() {
                return Err(Error::InvalidSignature(format!(
                    "{name} = {a} must not be an integer"
                )));
            }
        }
        if interior.is_empty() {
            return Err(Error::InvalidSignature(
                "at least one interior corner is required".into(),
            ));
        }
        if let Some(bad) = interior.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidSignature(format!(
                "interior angle multiple {bad} must be an integer >= 2"
            )));
        }
        Ok(AngleSignature {
            alpha0,
            interior,
            alpha_inf,
        })
    }

    /// Parse angles given as `"3/2"`, `"1.5"` or `"2"`.
    pub fn parse(alpha0: &str, interior: &[u32], alpha_inf: &str) -> Result<Self> {
        Self::new(
            parse_rational(alpha0)?,
            interior.to_vec(),
            parse_rational(alpha_inf)?,
        )
    }

    pub fn alpha0(&self) -> Rational64 {
        self.alpha0
    }

    pub fn alpha_inf(&self) -> Rational64 {
        self.alpha_inf
    }

    pub fn interior(&self) -> &[u32] {
        &self.interior
    }

    /// Number of corners.
    pub fn n(&self) -> usize {
        self.interior.len() + 2
    }

    /// `sum(alpha_j) - (n - 2)`: the total interior critical multiplicity.
    pub fn sigma(&self) -> u32 {
        self.interior.iter().map(|a| a - 1).sum()
    }
}

impl fmt::Display for AngleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let interior: Vec<String> = self.interior.iter().map(u32::to_string).collect();
        write!(
            f,
            "({}, ({}), {})",
            self.alpha0,
            interior.join(","),
            self.alpha_inf
        )
    }
}

impl FromStr for AngleSignature {
    type Err = Error;

    /// `"alpha0;a1,a2,...;alphaInf"`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        let [a0, interior, ainf] = parts[..] else {
            return Err(Error::InvalidSignature(format!(
                "expected 'alpha0;a1,...;alphaInf', got {s:?}"
            )));
        };
        Self::parse(a0, &parse_u32_list(interior)?, ainf)
    }
}

/// Comma-separated non-negative integers.
pub fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("not a non-negative integer: {x:?}")))
        })
        .collect()
}

/// Exact rational from `"p/q"`, an integer, or a finite decimal expansion.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(num, den));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty())
        || !digits_ok(int_part)
        || !digits_ok(frac_part)
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let num: i64 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let den = 10i64.checked_pow(frac_part.len() as u32).ok_or_else(bad)?;
    let r = Rational64::new(num, den);
    Ok(if negative { -r } else { r })
}

fn floor_u32(x: Rational64) -> u32 {
    x.floor().to_integer() as u32
}

/// Which parity branch of the existence criterion applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `sigma + [alpha0] + [alphaInf]` even.
    A,
    /// `sigma + [alpha0] + [alphaInf]` odd.
    B,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::A => "a",
            Branch::B => "b",
        }
    }
}

/// Machine-readable reason for infeasibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Infeasibility {
    /// Branch a needs `alpha0 - alphaInf` to be an integer.
    DifferenceNotIntegral,
    /// Branch a needs `|[alpha0] - [alphaInf]| <= sigma`.
    DifferenceTooLarge,
    /// Branch b needs `alpha0 + alphaInf` to be an integer.
    SumNotIntegral,
    /// Branch b needs `[alpha0] + [alphaInf] + 1 <= sigma`.
    SumTooLarge,
}

impl Infeasibility {
    pub fn code(self) -> &'static str {
        match self {
            Infeasibility::DifferenceNotIntegral => "difference-not-integral",
            Infeasibility::DifferenceTooLarge => "difference-exceeds-sigma",
            Infeasibility::SumNotIntegral => "sum-not-integral",
            Infeasibility::SumTooLarge => "sum-exceeds-sigma",
        }
    }
}

/// Integer data `(p, q, p0, q0, alpha)`: `deg P = p`, `deg Q = q`, `ord_0 P = p0`,
/// `ord_0 Q = q0`, and the exponent `alpha` in `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSolution {
    pub p: u32,
    pub q: u32,
    pub p0: u32,
    pub q0: u32,
    pub alpha: Rational64,
    /// Which of the four sign configurations produced this solution (1..=4).
    pub case: u8,
    /// The first solution of a signature (the one with `p >= q` when the
    /// cases overlap).
    pub canonical: bool,
}

impl DegreeSolution {
    /// Construct from raw data, checking `min(p0, q0) = 0`, `p0 <= p`,
    /// `q0 <= q` and `0 < alpha < 1`; the case tag is derived.
    pub fn new(p: u32, q: u32, p0: u32, q0: u32, alpha: Rational64) -> Result<Self> {
        if p0.min(q0) != 0 || p0 > p || q0 > q {
            return Err(Error::DegreeMismatch(format!(
                "(p, q, p0, q0) = ({p}, {q}, {p0}, {q0}) needs min(p0, q0) = 0, p0 <= p, q0 <= q"
            )));
        }
        if !(alpha.is_positive() && alpha < Rational64::from(1)) {
            return Err(Error::DegreeMismatch(format!(
                "alpha = {alpha} must lie in (0, 1)"
            )));
        }
        let case = match (q0 == 0, p >= q) {
            (true, true) => 1,
            (false, true) => 2,
            (true, false) => 3,
            (false, false) => 4,
        };
        Ok(DegreeSolution {
            p,
            q,
            p0,
            q0,
            alpha,
            case,
            canonical: false,
        })
    }

    /// `max(p0, q0)`: the order of the critical point at 0 beyond the exponent.
    pub fn m0(&self) -> u32 {
        self.p0.max(self.q0)
    }

    /// `deg R = p + q`.
    pub fn total_degree(&self) -> u32 {
        self.p + self.q
    }

    pub fn alpha_f64(&self) -> f64 {
        self.alpha.to_f64().unwrap_or(f64::NAN)
    }

    /// Realized `alpha0 = |p0 - q0 + alpha|`.
    pub fn alpha0(&self) -> Rational64 {
        (Rational64::from(self.p0 as i64 - self.q0 as i64) + self.alpha).abs()
    }

    /// Realized `alphaInf = |p - q + alpha|`.
    pub fn alpha_inf(&self) -> Rational64 {
        (Rational64::from(self.p as i64 - self.q as i64) + self.alpha).abs()
    }

    /// `sigma = p + q - max(p0, q0)`.
    pub fn sigma(&self) -> i64 {
        self.p as i64 + self.q as i64 - self.m0() as i64
    }

    pub fn solves(&self, sig: &AngleSignature) -> bool {
        self.alpha0() == sig.alpha0()
            && self.alpha_inf() == sig.alpha_inf()
            && self.sigma() == sig.sigma() as i64
    }

    /// The data of `1/f`, which has the same corner angles: cases 1 and 4,
    /// and cases 2 and 3, are exchanged.
    pub fn invert(&self) -> DegreeSolution {
        let one = Rational64::from(1);
        let inv = if self.q0 == 0 {
            // z^(1-alpha) Q / (z P)
            DegreeSolution::new(self.q, self.p + 1, 0, self.p0 + 1, one - self.alpha)
        } else {
            // z^(1-alpha) (Q / z) / P
            DegreeSolution::new(self.q - 1, self.p, self.q0 - 1, 0, one - self.alpha)
        };
        inv.expect("inversion preserves the degree invariants")
    }
}

impl fmt::Display for DegreeSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(p={}, q={}, p0={}, q0={}, alpha={})",
            self.p, self.q, self.p0, self.q0, self.alpha
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub branch: Branch,
    pub reason: Option<Infeasibility>,
    pub solutions: Vec<DegreeSolution>,
}

/// Existence test for a signature, with all degree data when it passes.
pub fn check_angles(sig: &AngleSignature) -> FeasibilityReport {
    let sigma = sig.sigma() as i64;
    let (f0, finf) = (
        floor_u32(sig.alpha0) as i64,
        floor_u32(sig.alpha_inf) as i64,
    );
    let branch = if (sigma + f0 + finf).is_even() {
        Branch::A
    } else {
        Branch::B
    };
    let reason = match branch {
        Branch::A if !(sig.alpha0 - sig.alpha_inf).is_integer() => {
            Some(Infeasibility::DifferenceNotIntegral)
        }
        Branch::A if (f0 - finf).abs() > sigma => Some(Infeasibility::DifferenceTooLarge),
        Branch::B if !(sig.alpha0 + sig.alpha_inf).is_integer() => {
            Some(Infeasibility::SumNotIntegral)
        }
        Branch::B if f0 + finf + 1 > sigma => Some(Infeasibility::SumTooLarge),
        _ => None,
    };
    let solutions = if reason.is_none() {
        solve_degree_system(sig)
    } else {
        Vec::new()
    };
    debug_assert_eq!(reason.is_none(), !solutions.is_empty());
    FeasibilityReport {
        feasible: !solutions.is_empty(),
        branch,
        reason,
        solutions,
    }
}

/// Every solution of the degree system, one candidate per sign configuration:
///
/// | case | `p0`, `q0`              | `alpha`         | `p - q`               |
/// |------|-------------------------|-----------------|-----------------------|
/// | 1    | `[alpha0]`, 0           | `{alpha0}`      | `[alphaInf]`          |
/// | 2    | 0, `[alpha0] + 1`       | `1 - {alpha0}`  | `[alphaInf]`          |
/// | 3    | `[alpha0]`, 0           | `{alpha0}`      | `-[alphaInf] - 1`     |
/// | 4    | 0, `[alpha0] + 1`       | `1 - {alpha0}`  | `-[alphaInf] - 1`     |
///
/// with `p + q = sigma + max(p0, q0)`. Each candidate is kept only if it
/// reproduces the signature exactly.
pub fn solve_degree_system(sig: &AngleSignature) -> Vec<DegreeSolution> {
    let sigma = sig.sigma() as i64;
    let f0 = floor_u32(sig.alpha0) as i64;
    let finf = floor_u32(sig.alpha_inf) as i64;
    let frac0 = sig.alpha0.fract();
    let one = Rational64::from(1);
    let candidates = [
        (f0, 0, frac0, finf),
        (0, f0 + 1, one - frac0, finf),
        (f0, 0, frac0, -finf - 1),
        (0, f0 + 1, one - frac0, -finf - 1),
    ];
    let mut out: Vec<DegreeSolution> = Vec::new();
    for (idx, (p0, q0, alpha, diff)) in candidates.into_iter().enumerate() {
        let total = sigma + p0.max(q0);
        if (total + diff).is_odd() {
            continue;
        }
        let (p, q) = ((total + diff) / 2, (total - diff) / 2);
        if p < 0 || q < 0 {
            continue;
        }
        let Ok(sol) = DegreeSolution::new(p as u32, q as u32, p0 as u32, q0 as u32, alpha) else {
            continue;
        };
        if sol.solves(sig) && sol.case as usize == idx + 1 && !out.contains(&sol) {
            out.push(sol);
        }
    }
    if let Some(first) = out.first_mut() {
        first.canonical = true;
    }
    out
}

/// Exponents `(alpha', alpha'')` of the linear equation at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InfinityExponents {
    pub alpha_prime: Rational64,
    pub alpha_double_prime: Rational64,
    /// `alpha'' < 0`, the curvature sign condition.
    pub gauss_bonnet_ok: bool,
}

/// `alpha' = (n - 2 + alphaInf - S) / 2`, `alpha'' = (n - 2 - alphaInf - S) / 2`
/// with `S = alpha0 + sum(interior)`.
pub fn exponents_at_infinity(sig: &AngleSignature) -> InfinityExponents {
    let n2 = Rational64::from(sig.n() as i64 - 2);
    let s = sig.alpha0 + Rational64::from(sig.interior.iter().map(|&a| a as i64).sum::<i64>());
    let half = Rational64::new(1, 2);
    let alpha_prime = (n2 + sig.alpha_inf - s) * half;
    let alpha_double_prime = (n2 - sig.alpha_inf - s) * half;
    InfinityExponents {
        alpha_prime,
        alpha_double_prime,
        gauss_bonnet_ok: alpha_double_prime < Rational64::zero(),
    }
}
