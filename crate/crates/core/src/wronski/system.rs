//! The square coefficient system `W_a(P, Q) = R` in the chart where `Q` is
//! monic; `P` then carries the scalar that matches `R`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::polynomial::CPoly;

pub(crate) type Vector = DVector<Complex64>;

#[derive(Clone, Debug)]
pub(crate) struct System {
    pub alpha: f64,
    /// `deg P`
    pub dp: usize,
    /// `deg Q`
    pub dq: usize,
    /// Right-hand side, degree `dp + dq`.
    pub target: CPoly,
}

impl System {
    pub fn unknowns(&self) -> usize {
        self.dp + self.dq + 1
    }

    /// `x = (P_0..P_dp, Q_0..Q_{dq-1})`.
    pub fn unpack(&self, x: &Vector) -> (CPoly, CPoly) {
        let p = CPoly::new(x.iter().take(self.dp + 1).copied().collect());
        let mut qc: Vec<Complex64> = x.iter().skip(self.dp + 1).copied().collect();
        qc.push(Complex64::new(1.0, 0.0));
        (p, CPoly::new(qc))
    }

    /// Chart coordinates of `(P, Q)`: `Q` made monic, `P` scaled along.
    pub fn pack(&self, p: &CPoly, q: &CPoly) -> Vector {
        let lead = q.coeff(self.dq);
        let mut x = Vector::zeros(self.unknowns());
        for k in 0..=self.dp {
            x[k] = p.coeff(k) * lead;
        }
        for k in 0..self.dq {
            x[self.dp + 1 + k] = q.coeff(k) / lead;
        }
        x
    }

    fn weight(&self, i: usize, j: usize) -> Complex64 {
        Complex64::new(i as f64 - j as f64 + self.alpha, 0.0)
    }

    /// Coefficients of `W_a(P, Q) - R`.
    pub fn residual(&self, x: &Vector) -> Vector {
        let n = self.unknowns();
        let mut f = Vector::from_fn(n, |k, _| -self.target.coeff(k));
        let (p, q) = self.unpack(x);
        for (i, a) in p.coeffs().iter().enumerate() {
            for (j, b) in q.coeffs().iter().enumerate() {
                if i + j < n {
                    f[i + j] += self.weight(i, j) * a * b;
                }
            }
        }
        f
    }

    pub fn jacobian(&self, x: &Vector) -> DMatrix<Complex64> {
        let n = self.unknowns();
        let (p, q) = self.unpack(x);
        let mut jac = DMatrix::zeros(n, n);
        for i in 0..=self.dp {
            for (j, b) in q.coeffs().iter().enumerate() {
                jac[(i + j, i)] += self.weight(i, j) * b;
            }
        }
        for j in 0..self.dq {
            for (i, a) in p.coeffs().iter().enumerate() {
                jac[(i + j, self.dp + 1 + j)] += self.weight(i, j) * a;
            }
        }
        jac
    }

    /// Derivative of the residual with respect to the exponent: `P Q`.
    pub fn d_alpha(&self, x: &Vector) -> Vector {
        let (p, q) = self.unpack(x);
        let pq = p.mul(&q);
        Vector::from_fn(self.unknowns(), |k, _| pq.coeff(k))
    }

    pub fn scale(&self) -> f64 {
        self.target.norm().max(f64::MIN_POSITIVE)
    }

    /// Damped Newton iteration. Returns the converged point, or `None` on
    /// divergence, a singular Jacobian or an exhausted budget.
    pub fn newton(&self, mut x: Vector, max_iters: usize) -> Option<Vector> {
        let scale = self.scale();
        let mut f = self.residual(&x);
        for _ in 0..max_iters {
            let fnorm = f.norm();
            let step = self.jacobian(&x).lu().solve(&f)?;
            if !step.iter().all(|c| c.is_finite()) {
                return None;
            }
            let mut t = 1.0;
            let mut accepted = None;
            while t > 1e-3 {
                let trial = &x - &step * Complex64::new(t, 0.0);
                let ft = self.residual(&trial);
                if ft.norm() < fnorm || fnorm <= 1e-15 * scale {
                    accepted = Some((trial, ft));
                    break;
                }
                t *= 0.5;
            }
            let tiny = |s: f64, x: &Vector| s <= 1e-13 * (1.0 + x.norm());
            match accepted {
                Some((xn, fn_)) => {
                    let moved = t * step.norm();
                    x = xn;
                    f = fn_;
                    if tiny(moved, &x) {
                        return Some(x);
                    }
                }
                None => return tiny(step.norm(), &x).then_some(x),
            }
            if x.norm() > 1e12 {
                return None;
            }
        }
        (f.norm() <= 1e-12 * scale.max(x.norm())).then_some(x)
    }
}
