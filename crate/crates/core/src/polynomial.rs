//! Dense univariate polynomials with coefficients in ascending powers.
//!
//! The arithmetic is generic over the coefficient field so the same code runs
//! on `Complex64` for the numerical solvers and on exact rationals in tests.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{FromPrimitive, Num};

/// Coefficient field for [`Polynomial`].
pub trait Scalar: Clone + Debug + Num + FromPrimitive + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + Num + FromPrimitive + Neg<Output = T> {}

/// Polynomial `c[0] + c[1] z + ... + c[d] z^d`. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c z^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Monic polynomial with the given roots (repeated roots repeated).
    pub fn from_roots(roots: &[T]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), T::one()]))
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * from_usize::<T>(k))
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Multiply by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Drop the `k` lowest coefficients (exact division by `z^k` when they vanish).
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Number of exactly vanishing low-order coefficients.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor by Euclid's algorithm. Meant for exact
    /// coefficient fields; over floats use root clustering instead.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(lead) => a.scale(&(T::one() / lead)),
            None => a,
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

pub(crate) fn from_usize<T: Scalar>(k: usize) -> T {
    T::from_usize(k).expect("coefficient field must represent small integers")
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        Polynomial::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        Polynomial::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        Polynomial::mul(self, rhs)
    }
}

/// Complex polynomials, the representation used by the numerical code.
pub type CPoly = Polynomial<Complex64>;

impl Polynomial<Complex64> {
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Zero out coefficients below `tol` relative to the largest one and trim.
    pub fn trimmed(&self, tol: f64) -> Self {
        let cutoff = tol * self.max_abs();
        Self::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c.norm() <= cutoff {
                        Complex64::new(0.0, 0.0)
                    } else {
                        c
                    }
                })
                .collect(),
        )
    }

    /// Degree ignoring trailing coefficients below `tol` relative to the largest.
    pub fn degree_tol(&self, tol: f64) -> Option<usize> {
        let cutoff = tol * self.max_abs();
        self.coeffs.iter().rposition(|c| c.norm() > cutoff)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(&lead) => self.scale(&(1.0 / lead)),
            None => Self::zero(),
        }
    }

    /// All complex roots, counted with multiplicity: eigenvalues of the
    /// companion matrix followed by a few Newton polishing steps.
    pub fn roots(&self) -> Vec<Complex64> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let zeros_at_origin = self.order_at_zero();
        let reduced = self.shift_down(zeros_at_origin).monic();
        let n = d - zeros_at_origin;
        let mut roots = vec![Complex64::new(0.0, 0.0); zeros_at_origin];
        if n == 0 {
            return roots;
        }
        if n == 1 {
            roots.push(-reduced.coeffs[0]);
            return roots;
        }
        let companion = DMatrix::from_fn(n, n, |i, j| {
            if j == n - 1 {
                -reduced.coeffs[i]
            } else if i == j + 1 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let eig = companion
            .schur()
            .eigenvalues()
            .expect("complex Schur form is triangular");
        let deriv = reduced.derivative();
        for mut z in eig.iter().copied() {
            for _ in 0..3 {
                let dz = deriv.eval(&z);
                if dz.norm() == 0.0 {
                    break;
                }
                let step = reduced.eval(&z) / dz;
                let next = z - step;
                if !next.is_finite() || reduced.eval(&next).norm() >= reduced.eval(&z).norm() {
                    break;
                }
                z = next;
            }
            roots.push(z);
        }
        roots
    }

    /// Relative coefficient distance after removing the best scalar multiple:
    /// `min_c |self - c * target| / |self|`.
    pub fn projective_distance(&self, target: &Self) -> f64 {
        let n = self.coeffs.len().max(target.coeffs.len());
        let tt: f64 = target.coeffs.iter().map(|c| c.norm_sqr()).sum();
        let own = self.norm();
        if own == 0.0 {
            return if tt == 0.0 { 0.0 } else { 1.0 };
        }
        if tt == 0.0 {
            return 1.0;
        }
        let dot: Complex64 = (0..n).map(|k| target.coeff(k).conj() * self.coeff(k)).sum();
        let c = dot / tt;
        let diff: f64 = (0..n)
            .map(|k| (self.coeff(k) - c * target.coeff(k)).norm_sqr())
            .sum();
        diff.sqrt() / own
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::new(vec![1i64.into(), Rational64::from(0), Rational64::from(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Polynomial::<Rational64>::new(vec![Rational64::from(0)]).is_zero());
        assert_eq!(Polynomial::<Rational64>::zero().degree(), None);
    }

    #[test]
    fn exact_arithmetic_over_rationals() {
        let r = |n, d| Rational64::new(n, d);
        let p = Polynomial::new(vec![r(1, 2), r(0, 1), r(3, 1)]);
        let q = Polynomial::new(vec![r(-1, 1), r(1, 1)]);
        let prod = p.mul(&q);
        assert_eq!(prod.coeffs(), &[r(-1, 2), r(1, 2), r(-3, 1), r(3, 1)]);
        let (quot, rem) = prod.div_rem(&q);
        assert_eq!(quot, p);
        assert!(rem.is_zero());
        assert_eq!(p.derivative().coeffs(), &[r(0, 1), r(6, 1)]);
        assert_eq!(p.eval(&r(2, 1)), r(25, 2));
    }

    #[test]
    fn division_remainder() {
        let p = CPoly::from_real(&[1.0, 0.0, 1.0]);
        let d = CPoly::from_real(&[-1.0, 1.0]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q.coeffs(), &[c(1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(r.coeffs(), &[c(2.0, 0.0)]);
    }

    #[test]
    fn roots_of_known_polynomial() {
        let expected = [c(1.0, 0.0), c(-2.0, 1.0), c(0.5, -3.0), c(0.0, 0.0)];
        let p = CPoly::from_roots(&expected);
        let mut roots = p.roots();
        assert_eq!(roots.len(), 4);
        for e in expected {
            let (idx, dist) = roots
                .iter()
                .enumerate()
                .map(|(i, r)| (i, (r - e).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            assert!(dist < 1e-12, "root {e} missed by {dist}");
            roots.remove(idx);
        }
    }

    #[test]
    fn projective_distance_ignores_scaling() {
        let p = CPoly::from_real(&[2.0, -3.0, 1.0]);
        let q = p.scale(&c(0.3, -4.0));
        assert!(q.projective_distance(&p) < 1e-15);
        let r = CPoly::from_real(&[2.0, -3.0, 1.01]);
        assert!(r.projective_distance(&p) > 1e-3);
    }

    #[test]
    fn exact_gcd() {
        let r = |n| Rational64::from(n);
        let a = Polynomial::from_roots(&[r(1), r(2), r(2)]);
        let b = Polynomial::from_roots(&[r(2), r(3)]).scale(&r(5));
        assert_eq!(a.gcd(&b), Polynomial::from_roots(&[r(2)]));
        assert_eq!(a.gcd(&Polynomial::zero()), a);
    }

    #[test]
    fn shifts() {
        let p = CPoly::from_real(&[1.0, 2.0]);
        let z2p = p.shift_up(2);
        assert_eq!(z2p.order_at_zero(), 2);
        assert_eq!(z2p.shift_down(2), p);
    }
}
