use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{PolynomialPair, SolutionReport, SolverConfig};
use crate::error::{Error, Result};
use crate::polynomial::CPoly;

/// Coefficients in ascending powers as `[re, im]` pairs.
pub type PolyCoeffs = Vec<[f64; 2]>;

pub fn poly_to_coeffs(p: &CPoly) -> PolyCoeffs {
    p.coeffs().iter().map(|c| [c.re, c.im]).collect()
}

pub fn coeffs_to_poly(c: &[[f64; 2]]) -> CPoly {
    CPoly::new(c.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RealizedRecord {
    pub p0: usize,
    pub q0: usize,
    pub alpha0: f64,
    pub alpha_inf: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TolerancesRecord {
    pub residual_tol: f64,
    pub realness_tol: f64,
    pub dedup_tol: f64,
}

impl From<&SolverConfig> for TolerancesRecord {
    fn from(c: &SolverConfig) -> Self {
        TolerancesRecord {
            residual_tol: c.residual_tol,
            realness_tol: c.realness_tol,
            dedup_tol: c.dedup_tol,
        }
    }
}

/// Serialized fibre point. Floats round-trip bit for bit through JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SolutionRecord {
    pub alpha: f64,
    #[serde(rename = "P")]
    pub p: PolyCoeffs,
    #[serde(rename = "Q")]
    pub q: PolyCoeffs,
    pub residual: f64,
    pub is_real: bool,
    pub realized: RealizedRecord,
    pub seed: u64,
    pub tolerances: TolerancesRecord,
}

impl SolutionRecord {
    pub fn from_report(rep: &SolutionReport, seed: u64, config: &SolverConfig) -> Self {
        SolutionRecord {
            alpha: rep.pair.alpha,
            p: poly_to_coeffs(&rep.pair.p),
            q: poly_to_coeffs(&rep.pair.q),
            residual: rep.residual,
            is_real: rep.is_real,
            realized: RealizedRecord {
                p0: rep.realized.p0,
                q0: rep.realized.q0,
                alpha0: rep.realized.alpha0,
                alpha_inf: rep.realized.alpha_inf,
            },
            seed,
            tolerances: TolerancesRecord::from(config),
        }
    }

    pub fn pair(&self) -> PolynomialPair {
        PolynomialPair::new(coeffs_to_poly(&self.p), coeffs_to_poly(&self.q), self.alpha)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records contain only finite numbers")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }
}
