//! One function per subcommand. Each returns an [`Outcome`] or a core error
//! that `main` turns into an exit code.

use liegen_core::flag::{
    chamber_roots, classify_all_roots, classify_generating, orbit_verdict, pi1_abelianized,
    pi1_minimal, pi1_presentation, FlagSpec, HomotopyVerdict, Parity, Pi1Minimal, Relation,
    RootCheck, Verdict,
};
use liegen_core::matrix_checks::{
    compression_check, q_monotonicity, short_root_block, symp_identities, CompressionReport,
    IdentityReport, MonotonicityReport,
};
use liegen_core::sl2::{
    build_irrep, default_sample_count, exterior_rep, exterior_weight, transition_samples,
    winding_number, IrrepN,
};
use liegen_core::{Error, Family, LengthClass, LieType, Result, RootSystem};
use serde::Serialize;

use crate::output::{table, yes_no, Agreement, Outcome, ReportEnvelope};

/// Times at which `sp-example` tests containment of the cone.
pub const COMPRESSION_GRID: [f64; 5] = [0.0, 0.25, 0.5, 1.0, 2.0];

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TypeInputs {
    family: String,
    rank: usize,
}

fn system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::build(LieType::new(family, rank)?)
}

fn verdict_code(v: &HomotopyVerdict) -> &'static str {
    match v.verdict {
        Verdict::NotNullHomotopic => "N",
        Verdict::NullHomotopic => "0",
        Verdict::Undetermined => "?",
    }
}

fn parity_word(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

fn length_word(l: LengthClass) -> &'static str {
    match l {
        LengthClass::Long => "long",
        LengthClass::Short => "short",
    }
}

const VERDICT_LEGEND: &str =
    "N = not null homotopic, 0 = null homotopic, ? = undetermined (even pairing, pi1 = Z)\n";

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ClassifyInputs {
    family: String,
    rank: usize,
    all_roots: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ClassifyResults {
    #[serde(flatten)]
    report: liegen_core::flag::ClassificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_roots: Option<Vec<RootCheck>>,
}

pub fn classify(family: Family, rank: usize, all_roots: bool) -> Result<Outcome> {
    let sys = system(family, rank)?;
    let report = classify_generating(&sys)?;
    let checks = if all_roots {
        Some(classify_all_roots(&sys)?)
    } else {
        None
    };

    let mut text = format!(
        "{}: verdicts per chamber root and minimal flag\n",
        report.lie_type
    );
    let mut headers = vec!["orbit".to_string(), "root".to_string()];
    headers.extend((1..=rank).map(|i| format!("F{i}")));
    headers.extend(["generates".to_string(), "published".to_string()]);
    let rows: Vec<Vec<String>> = report
        .orbits
        .iter()
        .map(|o| {
            let mut row = vec![length_word(o.length).to_string(), o.root_label.clone()];
            row.extend(o.verdicts.iter().map(|v| verdict_code(v).to_string()));
            row.push(yes_no(o.passes).to_string());
            row.push(match &o.paper_agreement {
                Some(a) if a.agrees => "agrees".to_string(),
                Some(_) => "DISAGREES".to_string(),
                None => "-".to_string(),
            });
            row
        })
        .collect();
    let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
    text += &table(&header_refs, &rows);
    text += VERDICT_LEGEND;
    for o in &report.orbits {
        if let Some(a) = o.paper_agreement.as_ref().filter(|a| !a.agrees) {
            text += &format!("note ({} orbit): {}\n", length_word(o.length), a.note);
        }
    }
    if let Some(checks) = &checks {
        text += &format!("\nall {} positive roots:\n", checks.len());
        let rows: Vec<Vec<String>> = checks
            .iter()
            .map(|c| {
                vec![
                    format!("{:?}", c.root),
                    length_word(c.length).to_string(),
                    format!("{:?}", c.dominant),
                    format!("{:?}", c.word),
                    yes_no(c.passes).to_string(),
                    yes_no(c.consistent).to_string(),
                ]
            })
            .collect();
        text += &table(
            &[
                "root",
                "length",
                "chamber",
                "word",
                "generates",
                "consistent",
            ],
            &rows,
        );
    }

    let agreements: Vec<_> = report
        .orbits
        .iter()
        .filter_map(|o| o.paper_agreement.as_ref().map(|a| (o.length, a)))
        .collect();
    let agreement = (!agreements.is_empty()).then(|| Agreement {
        agrees: agreements.iter().all(|(_, a)| a.agrees),
        note: agreements
            .iter()
            .map(|(l, a)| format!("{} orbit: {}", length_word(*l), a.note))
            .collect::<Vec<_>>()
            .join("; "),
    });
    let code = match &checks {
        Some(c) if c.iter().any(|c| !c.consistent) => 3,
        _ => 0,
    };

    let inputs = ClassifyInputs {
        family: family.to_string(),
        rank,
        all_roots,
    };
    let results = ClassifyResults {
        report,
        all_roots: checks,
    };
    Ok(Outcome {
        envelope: ReportEnvelope::new("classify", inputs, results).with_agreement(agreement),
        text,
        code,
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Pi1Inputs {
    family: String,
    rank: usize,
    node: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Pi1Results {
    lie_type: String,
    node: usize,
    group: &'static str,
    invariant_factors: Vec<i64>,
    smith_invariant_factors: Vec<i64>,
    generators: Vec<usize>,
    relations: Vec<Relation>,
}

/// The published rule: Z only for A1 and the long end node of `C_l`.
fn published_pi1(t: LieType, node: usize) -> Pi1Minimal {
    let infinite = match t.family() {
        Family::A => t.rank() == 1,
        Family::C => t.rank() >= 3 && node == t.rank(),
        _ => false,
    };
    if infinite {
        Pi1Minimal::CyclicInfinite
    } else {
        Pi1Minimal::CyclicTwo
    }
}

pub fn pi1(family: Family, rank: usize, node: usize) -> Result<Outcome> {
    let sys = system(family, rank)?;
    let group = pi1_minimal(&sys, node)?;
    let flag = FlagSpec::minimal(&sys, node)?;
    let presentation = pi1_presentation(&flag)?;
    let smith = pi1_abelianized(&flag)?;
    let code = if smith == group.invariant_factors() {
        0
    } else {
        3
    };

    let published = published_pi1(sys.lie_type(), node);
    let agreement = Agreement {
        agrees: published == group,
        note: if published == group {
            "matches the published statement".into()
        } else {
            format!(
                "published rule gives {}; B2 is the C2 diagram, whose long node carries Z",
                published.symbol()
            )
        },
    };

    let mut text = format!(
        "pi1(F) for {} with node {node} removed: {}\n",
        sys.lie_type(),
        group.symbol()
    );
    text += &format!(
        "Smith normal form of the abelianized relations: {smith:?}{}\n",
        if code == 0 { "" } else { "  (MISMATCH)" }
    );
    let gens: Vec<String> = presentation
        .generators
        .iter()
        .map(|g| format!("c{g}"))
        .collect();
    text += &format!("generators: {}\nrelations:\n", gens.join(", "));
    for r in &presentation.relations {
        text += &format!("  {r}\n");
    }

    let results = Pi1Results {
        lie_type: sys.lie_type().to_string(),
        node,
        group: group.symbol(),
        invariant_factors: group.invariant_factors(),
        smith_invariant_factors: smith,
        generators: presentation.generators,
        relations: presentation.relations,
    };
    let inputs = Pi1Inputs {
        family: family.to_string(),
        rank,
        node,
    };
    Ok(Outcome {
        envelope: ReportEnvelope::new("pi1", inputs, results).with_agreement(Some(agreement)),
        text,
        code,
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TableRow {
    length: LengthClass,
    root: Vec<i64>,
    root_label: String,
    cells: Vec<HomotopyVerdict>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TableResults {
    lie_type: String,
    nodes: Vec<usize>,
    pi1: Vec<&'static str>,
    rows: Vec<TableRow>,
}

pub fn homotopy_table(family: Family, rank: usize) -> Result<Outcome> {
    let sys = system(family, rank)?;
    let nodes: Vec<usize> = (1..=rank).collect();
    let pi1 = nodes
        .iter()
        .map(|&n| pi1_minimal(&sys, n).map(Pi1Minimal::symbol))
        .collect::<Result<Vec<_>>>()?;
    let rows = chamber_roots(&sys)
        .iter()
        .map(|mu| {
            let cells = nodes
                .iter()
                .map(|&n| orbit_verdict(&sys, mu, n))
                .collect::<Result<Vec<_>>>()?;
            Ok(TableRow {
                length: mu.length(),
                root: mu.coeffs().to_vec(),
                root_label: mu.label(),
                cells,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut headers = vec!["root".to_string()];
    headers.extend(nodes.iter().map(|n| format!("F{n} ({})", pi1[n - 1])));
    let text_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![format!("{} ({})", r.root_label, length_word(r.length))];
            row.extend(r.cells.iter().map(|c| {
                format!(
                    "{} {} {}",
                    c.pairing,
                    parity_word(c.parity),
                    verdict_code(c)
                )
            }));
            row
        })
        .collect();
    let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
    let mut text = format!(
        "{}: pairing omega_j(H^vee), parity and verdict per minimal flag F_j\n",
        sys.lie_type()
    );
    text += &table(&header_refs, &text_rows);
    text += VERDICT_LEGEND;

    let results = TableResults {
        lie_type: sys.lie_type().to_string(),
        nodes,
        pi1,
        rows,
    };
    let inputs = TypeInputs {
        family: family.to_string(),
        rank,
    };
    Ok(Outcome {
        envelope: ReportEnvelope::new("homotopy-table", inputs, results),
        text,
        code: 0,
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Sl2Inputs {
    n: usize,
    k: Option<usize>,
    samples: Option<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct WindingResult {
    highest_weight: usize,
    samples: usize,
    degree: i64,
    max_chart_deviation: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ExteriorResult {
    k: usize,
    exterior_degree: i64,
    cyclic_span_dim: usize,
    induced: WindingResult,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Sl2Results {
    defining: WindingResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    exterior: Option<ExteriorResult>,
}

fn winding(rep: &IrrepN, samples: Option<usize>) -> Result<WindingResult> {
    let m = samples.unwrap_or_else(|| default_sample_count(rep.n()));
    let s = transition_samples(rep, m)?;
    Ok(WindingResult {
        highest_weight: rep.n(),
        samples: m,
        degree: winding_number(&s)?,
        max_chart_deviation: s.max_deviation,
    })
}

pub fn sl2(n: usize, k: Option<usize>, samples: Option<usize>) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::DegenerateRepresentation);
    }
    if let Some(k) = k {
        exterior_weight(n, k)?;
    }
    let defining = winding(&build_irrep(n)?, samples)?;
    let mut text = format!(
        "sl(2) irreducible of highest weight {n}: clutching degree {} ({} samples, chart deviation {:.1e})\n",
        defining.degree, defining.samples, defining.max_chart_deviation
    );
    let mut expected_ok = defining.degree == n as i64;

    let exterior = match k {
        None => None,
        Some(k) => {
            let rep = exterior_rep(n, k)?;
            let span = rep.cyclic_span()?;
            let weight = exterior_weight(n, k)?;
            let induced = winding(&rep.induced_irrep()?, samples)?;
            text += &format!(
                "exterior power {k}: degree k(n-k+1) = {weight}, cyclic span of dimension {}, induced clutching degree {}\n",
                span.dim, induced.degree
            );
            expected_ok &= induced.degree == weight;
            Some(ExteriorResult {
                k,
                exterior_degree: weight,
                cyclic_span_dim: span.dim,
                induced,
            })
        }
    };
    if !expected_ok {
        text += "winding does not equal the highest weight\n";
    }

    Ok(Outcome {
        envelope: ReportEnvelope::new(
            "sl2",
            Sl2Inputs { n, k, samples },
            Sl2Results { defining, exterior },
        ),
        text,
        code: if expected_ok { 0 } else { 3 },
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SpInputs {
    l: usize,
    samples: usize,
    seed: u64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ShortRoots {
    pairs: usize,
    passes: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SpResults {
    identities: IdentityReport,
    monotonicity: MonotonicityReport,
    compression: CompressionReport,
    short_root_blocks: ShortRoots,
    passes: bool,
}

pub fn sp_example(l: usize, samples: usize, seed: u64) -> Result<Outcome> {
    if l == 0 {
        return Err(Error::Precondition("l must be at least 1".into()));
    }
    if samples == 0 {
        return Err(Error::Precondition("--samples must be at least 1".into()));
    }
    let identities = symp_identities(l)?;
    let monotonicity = q_monotonicity(l, samples, seed)?;
    let compression = compression_check(l, samples, &COMPRESSION_GRID, seed)?;
    let mut pairs = 0;
    for i in 1..=l {
        for j in (1..=l).filter(|&j| j != i) {
            short_root_block(l, i, j)?;
            pairs += 1;
        }
    }
    let passes = monotonicity.passes && compression.passes;

    let mut text = format!("sp({l}, R) compression semigroup of Q(v) >= 0\n");
    text += &table(
        &["check", "result", "detail"],
        &[
            vec![
                "integer identities".into(),
                "pass".into(),
                "X^T J + J X = 0, X^T [Q] + [Q] X = 2I".into(),
            ],
            vec![
                "Q monotone along exp(tX)".into(),
                pass_fail(monotonicity.passes).into(),
                format!(
                    "{} trials, {} violations, max derivative rel. error {:.2e}",
                    monotonicity.trials,
                    monotonicity.violations.len(),
                    monotonicity.max_fd_rel_error
                ),
            ],
            vec![
                "cone compression".into(),
                pass_fail(compression.passes).into(),
                format!(
                    "{} samples, {} violations, max isometry error {:.2e}",
                    compression.samples,
                    compression.violations.len(),
                    compression.max_isometry_error
                ),
            ],
            vec![
                "short root blocks".into(),
                "pass".into(),
                format!("{pairs} pairs (i, j)"),
            ],
        ],
    );
    for c in monotonicity
        .violations
        .iter()
        .chain(&compression.violations)
        .take(5)
    {
        text += &format!(
            "counterexample: trial {} at t = {}: {}\n",
            c.trial, c.t, c.detail
        );
    }
    text += &format!("overall: {}\n", pass_fail(passes));

    let results = SpResults {
        identities,
        monotonicity,
        compression,
        short_root_blocks: ShortRoots {
            pairs,
            passes: true,
        },
        passes,
    };
    Ok(Outcome {
        envelope: ReportEnvelope::new("sp-example", SpInputs { l, samples, seed }, results),
        text,
        code: if passes { 0 } else { 3 },
    })
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

/// Exit code for a library error: 2 for bad arguments, 4 for identity
/// failures, 3 for everything that breaks a numerical certificate.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InadmissibleRank { .. }
        | Error::UnknownFamily(_)
        | Error::NodeOutOfRange { .. }
        | Error::DegenerateRepresentation
        | Error::Domain(_)
        | Error::Precondition(_) => 2,
        Error::IdentityFailure { .. } => 4,
        _ => 3,
    }
}
