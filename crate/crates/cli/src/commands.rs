use num_complex::Complex64;
use num_rational::Rational64;
use spherical_ngon::combinatorics::{
    binomial_count, catalan, enumerate_diagrams, enumerate_odd_diagrams, enumerate_ssyt, kostka,
    odd_count_formula, reduction_params, MultiplicityVector, Parity,
};
use spherical_ngon::feasibility::{
    check_angles, exponents_at_infinity, parse_u32_list, AngleSignature,
};
use spherical_ngon::ode::{
    build_fuchsian, certify_lassos, default_base_point, local_monodromies, Tolerances,
    Unitarizability,
};
use spherical_ngon::wronski::{
    classify_solution, coeffs_to_poly, critical_polynomial, is_real_pair, poly_to_coeffs,
    solve_wronski, verify_solution, SolutionRecord,
};

use crate::documents::*;
use crate::{
    CliError, CountArgs, EnumerateArgs, InputArgs, Report, Settings, SignatureArgs, SolveArgs,
};

/// Orders at 0 closer than this to the origin count as roots there.
const ORIGIN_TOL: f64 = 1e-6;
/// Realized angles must match the signature this closely.
const ANGLE_TOL: f64 = 1e-8;

fn json<T: serde::Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents hold finite numbers only");
    s.push('\n');
    s
}

fn ok(document: String, summary: String) -> Report {
    Report {
        document,
        summary,
        negative: false,
        numeric_failure: false,
    }
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Validation(format!("{x:?} is not a finite number")))
        })
        .collect()
}

fn signature(alpha0: &str, interior: &str, alpha_inf: &str) -> Result<AngleSignature, CliError> {
    let interior = parse_u32_list(interior)?;
    Ok(AngleSignature::parse(alpha0, &interior, alpha_inf)?)
}

/// `m0,m_1,...,m_k,mInf` split into its axis and interior parts.
fn odd_input(list: &[u32]) -> Result<(u32, MultiplicityVector, u32), CliError> {
    match list {
        [m0, interior @ .., m_inf] if !interior.is_empty() => {
            Ok((*m0, MultiplicityVector::new(interior.to_vec()), *m_inf))
        }
        _ => Err(CliError::Validation(
            "odd input needs m0, at least one interior multiplicity, and mInf".into(),
        )),
    }
}

fn to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn feasible(a: &SignatureArgs) -> Result<Report, CliError> {
    let sig = signature(&a.alpha0, &a.interior, &a.alphainf)?;
    let rep = check_angles(&sig);
    let ex = exponents_at_infinity(&sig);
    let doc = FeasibleDocument {
        schema_version: SCHEMA_VERSION,
        command: "feasible",
        signature: SignatureRecord::from(&sig),
        feasible: rep.feasible,
        branch: rep.branch.as_str(),
        reason: rep.reason.map(|r| r.code()),
        solutions: rep.solutions.iter().map(DegreeRecord::from).collect(),
        exponents_at_infinity: InfinityRecord {
            alpha_prime: ex.alpha_prime.to_string(),
            alpha_double_prime: ex.alpha_double_prime.to_string(),
            gauss_bonnet_ok: ex.gauss_bonnet_ok,
        },
    };
    let summary = match rep.solutions.first() {
        Some(first) => format!(
            "{sig}: realizable (branch {}), {} degree solution(s), first {first}",
            rep.branch.as_str(),
            rep.solutions.len()
        ),
        None => format!(
            "{sig}: not realizable (branch {}, {})",
            rep.branch.as_str(),
            rep.reason.map_or("no degree solution", |r| r.code())
        ),
    };
    Ok(Report {
        negative: !rep.feasible,
        ..ok(json(&doc), summary)
    })
}

pub fn count(a: &CountArgs) -> Result<Report, CliError> {
    let (kind, input, value, reduction) = if let Some(s) = &a.odd {
        let list = parse_u32_list(s)?;
        let (m0, interior, m_inf) = odd_input(&list)?;
        let value = odd_count_formula(m0, &interior, m_inf)?;
        let red = reduction_params(m0, &interior, m_inf)?;
        let reduction = ReductionRecord {
            mu: red.mu,
            nu_parity: match red.nu_parity {
                Parity::Even => "even",
                Parity::Odd => "odd",
            },
            k: red.k,
            r: red.r,
            s: red.s,
        };
        ("odd", list, value, Some(reduction))
    } else if let Some(s) = &a.kostka {
        let list = parse_u32_list(s)?;
        let value = kostka(&MultiplicityVector::new(list.clone()));
        ("kostka", list, value, None)
    } else if let Some(d) = a.catalan {
        ("catalan", vec![d], catalan(d), None)
    } else if let Some(m) = a.binomial {
        ("binomial", vec![m], binomial_count(m), None)
    } else {
        return Err(CliError::Validation("nothing to count".into()));
    };
    let doc = CountDocument {
        schema_version: SCHEMA_VERSION,
        command: "count",
        kind,
        input: input.clone(),
        count: value.to_string(),
        reduction,
    };
    Ok(ok(json(&doc), format!("{kind} {input:?}: {value}")))
}

pub fn enumerate(a: &EnumerateArgs) -> Result<Report, CliError> {
    let (document, kind, input, n) = if let Some(s) = &a.diagrams {
        let list = parse_u32_list(s)?;
        let items: Vec<DiagramItem> = enumerate_diagrams(&MultiplicityVector::new(list.clone()))
            .into_iter()
            .map(|d| DiagramItem {
                word: d.canonical(),
                arcs: d.arcs,
                nu: None,
            })
            .collect();
        let n = items.len();
        (enumeration("diagrams", &list, items), "diagrams", list, n)
    } else if let Some(s) = &a.odd {
        let list = parse_u32_list(s)?;
        let (m0, interior, m_inf) = odd_input(&list)?;
        let items: Vec<DiagramItem> = enumerate_odd_diagrams(m0, &interior, m_inf)?
            .into_iter()
            .map(|d| DiagramItem {
                word: d.diagram.canonical(),
                nu: Some(d.nu()),
                arcs: d.diagram.arcs,
            })
            .collect();
        let n = items.len();
        (enumeration("odd", &list, items), "odd", list, n)
    } else if let Some(s) = &a.tableaux {
        let list = parse_u32_list(s)?;
        let items: Vec<TableauItem> = enumerate_ssyt(&MultiplicityVector::new(list.clone()))
            .into_iter()
            .map(|t| TableauItem { rows: t.rows })
            .collect();
        let n = items.len();
        (enumeration("tableaux", &list, items), "tableaux", list, n)
    } else {
        return Err(CliError::Validation("nothing to enumerate".into()));
    };
    Ok(ok(document, format!("{kind} {input:?}: {n} item(s)")))
}

fn enumeration<T: serde::Serialize>(kind: &'static str, input: &[u32], items: Vec<T>) -> String {
    json(&EnumerateDocument {
        schema_version: SCHEMA_VERSION,
        command: "enumerate",
        kind,
        input: input.to_vec(),
        count: items.len(),
        items,
    })
}

pub fn solve(a: &SolveArgs, settings: &Settings) -> Result<Report, CliError> {
    let sig = signature(&a.alpha0, &a.mult, &a.alphainf)?;
    let corners = parse_f64_list(&a.corners)?;
    let mult = sig.interior().to_vec();
    if corners.len() != mult.len() {
        return Err(CliError::Validation(format!(
            "{} corners but {} angles",
            corners.len(),
            mult.len()
        )));
    }
    if let Some(m) = mult.iter().find(|&&m| m < 2) {
        return Err(CliError::Validation(format!(
            "corner angles must be at least 2, got {m}"
        )));
    }
    let feasibility = check_angles(&sig);
    if !feasibility.feasible {
        let doc = SolveDocument {
            schema_version: SCHEMA_VERSION,
            command: "solve".into(),
            signature: SignatureRecord::from(&sig),
            degrees: None,
            target: None,
            expected: 0,
            complete: true,
            excluded: 0,
            warnings: vec![format!(
                "signature is not realizable: {}",
                feasibility
                    .reason
                    .map_or("no degree solution", |r| r.code())
            )],
            solutions: Vec::new(),
        };
        return Ok(Report {
            negative: true,
            ..ok(
                json(&doc),
                format!("{sig}: not realizable, nothing to solve"),
            )
        });
    }
    let sol = *feasibility.solutions.get(a.solution).ok_or_else(|| {
        CliError::Validation(format!(
            "degree solution {} requested but only {} exist",
            a.solution,
            feasibility.solutions.len()
        ))
    })?;
    let roots: Vec<u32> = mult.iter().map(|m| m - 1).collect();
    let r = critical_polynomial(&corners, &roots, &sol)?;
    let mut config = settings.solver.clone();
    config.rng_seed = a.seed;
    let fiber = solve_wronski(&r, &sol, &config)?;
    // the fibre also holds maps vanishing at 0 through the other polynomial,
    // which realize a different angle there
    let (kept, other): (Vec<_>, Vec<_>) = fiber
        .solutions
        .iter()
        .partition(|s| s.realized.matches(sig.alpha0(), sig.alpha_inf(), ANGLE_TOL));
    let mut warnings = fiber.warnings.clone();
    if !other.is_empty() {
        warnings.push(format!(
            "{} fibre point(s) realize a different signature and were left out",
            other.len()
        ));
    }
    let solutions: Vec<SolutionRecord> = kept
        .iter()
        .map(|s| SolutionRecord::from_report(s, a.seed, &config))
        .collect();
    let real = solutions.iter().filter(|s| s.is_real).count();
    let doc = SolveDocument {
        schema_version: SCHEMA_VERSION,
        command: "solve".into(),
        signature: SignatureRecord::from(&sig),
        degrees: Some(DegreeRecord::from(&sol)),
        target: Some(TargetRecord {
            corners,
            mult,
            coefficients: poly_to_coeffs(&r),
        }),
        expected: fiber.expected,
        complete: fiber.complete,
        excluded: other.len(),
        warnings,
        solutions,
    };
    let summary = format!(
        "{sig} with {sol}: {} solution(s), {real} real, {} of {} fibre point(s) found{}",
        doc.solutions.len(),
        fiber.solutions.len(),
        fiber.expected,
        if fiber.complete { "" } else { " (incomplete)" }
    );
    Ok(Report {
        numeric_failure: !fiber.complete,
        ..ok(json(&doc), summary)
    })
}

fn load(a: &InputArgs) -> Result<(SolveDocument, Vec<usize>), CliError> {
    let text = std::fs::read_to_string(&a.input)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", a.input.display())))?;
    let doc: SolveDocument = serde_json::from_str(&text).map_err(|e| {
        CliError::Validation(format!(
            "{} is not a solve document: {e}",
            a.input.display()
        ))
    })?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(CliError::Validation(format!(
            "unsupported schemaVersion {}",
            doc.schema_version
        )));
    }
    let indices = match a.index {
        Some(i) if i >= doc.solutions.len() => {
            return Err(CliError::Validation(format!(
                "solution {i} requested but the document holds {}",
                doc.solutions.len()
            )))
        }
        Some(i) => vec![i],
        None => (0..doc.solutions.len()).collect(),
    };
    Ok((doc, indices))
}

fn doc_signature(doc: &SolveDocument) -> Result<AngleSignature, CliError> {
    let s = &doc.signature;
    Ok(AngleSignature::parse(&s.alpha0, &s.interior, &s.alpha_inf)?)
}

fn target(doc: &SolveDocument) -> Result<&TargetRecord, CliError> {
    doc.target
        .as_ref()
        .ok_or_else(|| CliError::Validation("document has no target polynomial".into()))
}

pub fn verify(a: &InputArgs, settings: &Settings) -> Result<Report, CliError> {
    let (doc, indices) = load(a)?;
    let sig = doc_signature(&doc)?;
    let r = coeffs_to_poly(&target(&doc)?.coefficients);
    let tol = settings.solver.residual_tol;
    let results: Vec<VerifyEntry> = indices
        .iter()
        .map(|&i| {
            let pair = doc.solutions[i].pair();
            let vr = verify_solution(&pair, &r, tol);
            let cl = classify_solution(&pair, ORIGIN_TOL);
            let matches_signature = cl.matches(sig.alpha0(), sig.alpha_inf(), ANGLE_TOL);
            VerifyEntry {
                index: i,
                residual: vr.residual,
                residual_ok: vr.residual_ok,
                corners: vr
                    .corners
                    .iter()
                    .map(|c| CornerRecord {
                        corner: [c.corner.re, c.corner.im],
                        expected_order: c.expected_order,
                        measured_order: c.measured_order,
                    })
                    .collect(),
                realized: RealizedDegrees {
                    p: cl.p,
                    q: cl.q,
                    p0: cl.p0,
                    q0: cl.q0,
                    alpha0: cl.alpha0,
                    alpha_inf: cl.alpha_inf,
                },
                matches_signature,
                is_real: is_real_pair(&pair, settings.solver.realness_tol),
                passed: vr.passed() && matches_signature,
            }
        })
        .collect();
    let failed = results.iter().filter(|e| !e.passed).count();
    let out = VerifyDocument {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        residual_tol: tol,
        passed: failed == 0,
        results,
    };
    let summary = format!(
        "{sig}: {} of {} solution(s) verified",
        out.results.len() - failed,
        out.results.len()
    );
    Ok(Report {
        negative: failed > 0,
        ..ok(json(&out), summary)
    })
}

fn pt(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn monodromy(a: &InputArgs, settings: &Settings) -> Result<Report, CliError> {
    let (doc, indices) = load(a)?;
    let sig = doc_signature(&doc)?;
    let points: Vec<Complex64> = target(&doc)?
        .corners
        .iter()
        .map(|&x| Complex64::new(x, 0.0))
        .collect();
    let tol = settings.monodromy_tol;
    let alpha0 = to_f64(sig.alpha0());
    let mut results = Vec::new();
    for &i in &indices {
        let pair = doc.solutions[i].pair();
        let eq = build_fuchsian(&sig, &points, &pair)?;
        let base = default_base_point(&eq);
        let gens = local_monodromies(&eq, base, &Tolerances::default())?;
        let rep = certify_lassos(&gens, tol)?;
        let ratio_error_at_zero = gens[0].ratio_error(alpha0);
        let corners_trivial = gens[1..].iter().all(|g| g.projectively_trivial(tol));
        let (verdict, unitarizable) = match rep.verdict {
            Unitarizability::Certified(b) => ("certified", b),
            Unitarizability::Screen(b) => ("screen", b),
        };
        results.push(MonodromyEntry {
            index: i,
            base_point: pt(base),
            generators: gens
                .iter()
                .map(|g| {
                    let m = g.based.entries;
                    GeneratorRecord {
                        singularity: pt(g.singularity),
                        eigenvalue_ratio: pt(g.eigenvalue_ratio()),
                        projectively_trivial: g.projectively_trivial(tol),
                        matrix: [pt(m[(0, 0)]), pt(m[(0, 1)]), pt(m[(1, 0)]), pt(m[(1, 1)])],
                    }
                })
                .collect(),
            ratio_error_at_zero,
            corners_trivial,
            verdict,
            unitarizable,
            passed: ratio_error_at_zero <= tol
                && corners_trivial
                && rep.verdict == Unitarizability::Certified(true),
        });
    }
    let failed = results.iter().filter(|e| !e.passed).count();
    let out = MonodromyDocument {
        schema_version: SCHEMA_VERSION,
        command: "monodromy",
        tolerance: tol,
        passed: failed == 0,
        results,
    };
    let summary = format!(
        "{sig}: {} of {} equation(s) certified unitarizable with ratio e^(2 pi i {}) at 0",
        out.results.len() - failed,
        out.results.len(),
        sig.alpha0()
    );
    Ok(Report {
        negative: failed > 0,
        ..ok(json(&out), summary)
    })
}
