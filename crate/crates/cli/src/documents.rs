//! Shapes of the JSON documents. Every document starts with `schemaVersion`
//! and `command`; field order is fixed, so equal inputs give equal bytes.

use serde::{Deserialize, Serialize};
use spherical_ngon::feasibility::{AngleSignature, DegreeSolution};
use spherical_ngon::wronski::{PolyCoeffs, SolutionRecord};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SignatureRecord {
    pub alpha0: String,
    pub interior: Vec<u32>,
    pub alpha_inf: String,
}

impl From<&AngleSignature> for SignatureRecord {
    fn from(s: &AngleSignature) -> Self {
        SignatureRecord {
            alpha0: s.alpha0().to_string(),
            interior: s.interior().to_vec(),
            alpha_inf: s.alpha_inf().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeRecord {
    pub p: u32,
    pub q: u32,
    pub p0: u32,
    pub q0: u32,
    pub alpha: String,
    pub case: u8,
    pub canonical: bool,
}

impl From<&DegreeSolution> for DegreeRecord {
    fn from(d: &DegreeSolution) -> Self {
        DegreeRecord {
            p: d.p,
            q: d.q,
            p0: d.p0,
            q0: d.q0,
            alpha: d.alpha.to_string(),
            case: d.case,
            canonical: d.canonical,
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InfinityRecord {
    pub alpha_prime: String,
    pub alpha_double_prime: String,
    pub gauss_bonnet_ok: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FeasibleDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub signature: SignatureRecord,
    pub feasible: bool,
    pub branch: &'static str,
    pub reason: Option<&'static str>,
    pub solutions: Vec<DegreeRecord>,
    pub exponents_at_infinity: InfinityRecord,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReductionRecord {
    pub mu: u32,
    pub nu_parity: &'static str,
    pub k: u32,
    pub r: u32,
    pub s: u32,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CountDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub kind: &'static str,
    pub input: Vec<u32>,
    /// Decimal string: counts are arbitrary precision.
    pub count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TargetRecord {
    pub corners: Vec<f64>,
    /// Integer angle at each corner; the root multiplicity is one less.
    pub mult: Vec<u32>,
    /// The critical polynomial, ascending `[re, im]` pairs.
    pub coefficients: PolyCoeffs,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveDocument {
    pub schema_version: u32,
    pub command: String,
    pub signature: SignatureRecord,
    pub degrees: Option<DegreeRecord>,
    pub target: Option<TargetRecord>,
    /// Generic size of the whole fibre over the target.
    pub expected: usize,
    pub complete: bool,
    /// Fibre points realizing a different angle at 0 or infinity.
    pub excluded: usize,
    pub warnings: Vec<String>,
    pub solutions: Vec<SolutionRecord>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CornerRecord {
    pub corner: [f64; 2],
    pub expected_order: usize,
    pub measured_order: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RealizedDegrees {
    pub p: usize,
    pub q: usize,
    pub p0: usize,
    pub q0: usize,
    pub alpha0: f64,
    pub alpha_inf: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyEntry {
    pub index: usize,
    pub residual: f64,
    pub residual_ok: bool,
    pub corners: Vec<CornerRecord>,
    pub realized: RealizedDegrees,
    pub matches_signature: bool,
    pub is_real: bool,
    pub passed: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub residual_tol: f64,
    pub results: Vec<VerifyEntry>,
    pub passed: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GeneratorRecord {
    pub singularity: [f64; 2],
    /// Projective eigenvalue ratio of the loop.
    pub eigenvalue_ratio: [f64; 2],
    pub projectively_trivial: bool,
    /// Determinant-one matrix at the base point, row-major `[re, im]` entries.
    pub matrix: [[f64; 2]; 4],
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MonodromyEntry {
    pub index: usize,
    pub base_point: [f64; 2],
    pub generators: Vec<GeneratorRecord>,
    /// Distance of the ratio at 0 from `e^{2 pi i alpha0}`.
    pub ratio_error_at_zero: f64,
    pub corners_trivial: bool,
    /// `certified` (commuting generators) or `screen`.
    pub verdict: &'static str,
    pub unitarizable: bool,
    pub passed: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MonodromyDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub tolerance: f64,
    pub results: Vec<MonodromyEntry>,
    pub passed: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerateDocument<T: Serialize> {
    pub schema_version: u32,
    pub command: &'static str,
    pub kind: &'static str,
    pub input: Vec<u32>,
    pub count: usize,
    pub items: Vec<T>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiagramItem {
    /// Balanced parentheses over the boundary slots.
    pub word: String,
    pub arcs: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableauItem {
    pub rows: [Vec<u32>; 2],
}
