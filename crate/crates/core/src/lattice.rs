//! The implication lattice between the twelve statements, and consistency
//! checking of per-plane truth vectors against its transitive closure.
//!
//! An edge `from -> to` means: on every plane where `from` holds, `to` holds.
//! Equivalences are stored as edge pairs so provenance stays per-direction.
//! A sampled failure is definitive (the witness is a proof); a sampled run
//! without violations stays inconclusive and never participates in
//! violation findings.

use crate::check::{check_statement_opts, CheckMode, CheckOptions, Verdict};
use crate::error::Result;
use crate::plane::PlaneHandle;
use crate::statements::Statement;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationEdge {
    pub from: Statement,
    pub to: Statement,
    /// Literature attribution or the structural reason for the edge.
    pub provenance: &'static str,
}

/// The recorded implication edges.
pub fn implication_edges() -> Vec<ImplicationEdge> {
    use Statement::*;
    let edge = |from, to, provenance| ImplicationEdge {
        from,
        to,
        provenance,
    };
    vec![
        edge(Desargues, HomologousDesargues, "restriction: center off the axis"),
        edge(Desargues, LittleDesargues, "restriction: center on the axis"),
        edge(
            Desargues,
            WeakLittleDesargues,
            "restriction: extra collinearity A',B,C",
        ),
        edge(
            Desargues,
            CollapsingDesargues,
            "restriction: Z on the line AA'",
        ),
        edge(
            HomologousDesargues,
            LittleDesargues,
            "synthetic derivation via perspectivities with exchanged roles",
        ),
        edge(LittleDesargues, WeakDesargues, "Stevenson, exercise: LD, wD, cD equivalent"),
        edge(WeakDesargues, LittleDesargues, "Stevenson, exercise: LD, wD, cD equivalent"),
        edge(WeakDesargues, CollapsingDesargues, "Stevenson, exercise: LD, wD, cD equivalent"),
        edge(CollapsingDesargues, WeakDesargues, "Stevenson, exercise: LD, wD, cD equivalent"),
        edge(LittleDesargues, WeakLittleDesargues, "restriction of LD"),
        edge(
            WeakLittleDesargues,
            StrongPerspectivePappus,
            "bridge equivalence: the two configurations are relabelings",
        ),
        edge(
            StrongPerspectivePappus,
            WeakLittleDesargues,
            "bridge equivalence: the two configurations are relabelings",
        ),
        edge(
            WeakLittleDesargues,
            ConverseWeakLittleDesargues,
            "the converse follows by applying wLD to an auxiliary triangle",
        ),
        edge(
            WeakLittleDesargues,
            LittlePappus,
            "derived: wLD yields the little form via its converse",
        ),
        edge(
            StrongPerspectivePappus,
            PerspectivePappus,
            "dropping the conclusion through M weakens sPP to pP",
        ),
        edge(Pappus, Desargues, "Hessenberg's theorem"),
        edge(Pappus, PappusBrianchon, "equivalent by duality of the configuration"),
        edge(PappusBrianchon, Pappus, "equivalent by duality of the configuration"),
        edge(
            Desargues,
            PerspectivePappus,
            "Stevenson: the perspective form holds on Desarguesian planes",
        ),
        edge(
            Desargues,
            LittlePappus,
            "Stevenson, exercise: LP follows from D",
        ),
    ]
}

/// Transitive closure over the twelve statements as a 12x12 reachability
/// matrix (recomputed, never stored).
pub fn transitive_closure(edges: &[ImplicationEdge]) -> Vec<(Statement, Statement)> {
    let idx = |st: Statement| Statement::ALL.iter().position(|x| *x == st).unwrap();
    let n = Statement::ALL.len();
    let mut reach = vec![false; n * n];
    for e in edges {
        reach[idx(e.from) * n + idx(e.to)] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i * n + k] {
                for j in 0..n {
                    if reach[k * n + j] {
                        reach[i * n + j] = true;
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && reach[i * n + j] {
                out.push((Statement::ALL[i], Statement::ALL[j]));
            }
        }
    }
    out
}

/// Per-plane verdicts for all twelve statements.
#[derive(Debug, Clone)]
pub struct TruthVector {
    pub plane: String,
    pub entries: Vec<(Statement, Verdict, CheckMode)>,
}

impl TruthVector {
    pub fn verdict(&self, st: Statement) -> Option<(Verdict, CheckMode)> {
        self.entries
            .iter()
            .find(|(s, _, _)| *s == st)
            .map(|(_, v, m)| (*v, *m))
    }
}

/// How each statement should be checked when building a truth vector.
#[derive(Debug, Clone, Copy)]
pub enum VectorMode {
    Exhaustive,
    Sampled { seed: u64, budget: u64 },
    /// Exhaustive when the estimated sweep fits the cap, sampled otherwise.
    Auto {
        seed: u64,
        budget: u64,
        exhaustive_cap: u128,
    },
}

pub fn truth_vector(plane: &PlaneHandle, mode: VectorMode) -> Result<TruthVector> {
    truth_vector_opts(plane, mode, &CheckOptions::default())
}

pub fn truth_vector_opts(
    plane: &PlaneHandle,
    mode: VectorMode,
    opts: &CheckOptions,
) -> Result<TruthVector> {
    let mut entries = Vec::with_capacity(Statement::ALL.len());
    for st in Statement::ALL {
        let check_mode = resolve_mode(plane, st, mode);
        let report = check_statement_opts(plane, st, check_mode, opts)?;
        entries.push((st, report.verdict, report.mode));
    }
    Ok(TruthVector {
        plane: plane.descriptor().to_string(),
        entries,
    })
}

pub fn resolve_mode(plane: &PlaneHandle, st: Statement, mode: VectorMode) -> CheckMode {
    match mode {
        VectorMode::Exhaustive => CheckMode::Exhaustive,
        VectorMode::Sampled { seed, budget } => CheckMode::Sampled { seed, budget },
        VectorMode::Auto {
            seed,
            budget,
            exhaustive_cap,
        } => match crate::check::exhaustive_cost(plane, st) {
            Some(cost) if cost <= exhaustive_cap => CheckMode::Exhaustive,
            _ => CheckMode::Sampled { seed, budget },
        },
    }
}

/// A (plane, edge) pair where the premise verdict is a definitive Holds and
/// the conclusion verdict is Fails.
#[derive(Debug, Clone)]
pub struct LatticeViolation {
    pub plane: String,
    pub from: Statement,
    pub to: Statement,
    pub from_verdict: Verdict,
    pub to_verdict: Verdict,
}

/// Verdict co-occurrences relevant to the two open questions: whether wLD
/// follows from LP, and whether LD follows from wLD.
#[derive(Debug, Clone)]
pub struct OpenProblemEvidence {
    pub plane: String,
    pub lp: Option<Verdict>,
    pub wld: Option<Verdict>,
    pub ld: Option<Verdict>,
}

#[derive(Debug, Clone)]
pub struct ConsistencyReport {
    pub violations: Vec<LatticeViolation>,
    pub open_problem_evidence: Vec<OpenProblemEvidence>,
}

/// Checks every vector against the transitive closure of the edge set.
/// A violation needs `from = Holds` established exhaustively and `to =
/// Fails` (a failure is definitive in any mode).
pub fn check_lattice(vectors: &[TruthVector]) -> ConsistencyReport {
    let closure = transitive_closure(&implication_edges());
    let mut violations = Vec::new();
    let mut evidence = Vec::new();
    for vec in vectors {
        for &(from, to) in &closure {
            let Some((fv, fm)) = vec.verdict(from) else {
                continue;
            };
            let Some((tv, _)) = vec.verdict(to) else {
                continue;
            };
            if fv == Verdict::Holds && fm == CheckMode::Exhaustive && tv == Verdict::Fails {
                violations.push(LatticeViolation {
                    plane: vec.plane.clone(),
                    from,
                    to,
                    from_verdict: fv,
                    to_verdict: tv,
                });
            }
        }
        let lp = vec.verdict(Statement::LittlePappus).map(|(v, _)| v);
        let wld = vec.verdict(Statement::WeakLittleDesargues).map(|(v, _)| v);
        let ld = vec.verdict(Statement::LittleDesargues).map(|(v, _)| v);
        if lp == Some(Verdict::Holds) || wld == Some(Verdict::Holds) {
            evidence.push(OpenProblemEvidence {
                plane: vec.plane.clone(),
                lp,
                wld,
                ld,
            });
        }
    }
    ConsistencyReport {
        violations,
        open_problem_evidence: evidence,
    }
}

/// Text matrix of planes x statements plus the violation list.
pub fn render_consistency(vectors: &[TruthVector], report: &ConsistencyReport) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:<10}", "plane");
    for st in Statement::ALL {
        let _ = write!(out, " {:>6}", st.tag());
    }
    out.push('\n');
    for vec in vectors {
        let _ = write!(out, "{:<10}", vec.plane);
        for st in Statement::ALL {
            let cell = match vec.verdict(st) {
                Some((Verdict::Holds, _)) => "+",
                Some((Verdict::Fails, _)) => "-",
                Some((Verdict::Inconclusive, _)) => "?",
                None => ".",
            };
            let _ = write!(out, " {:>6}", cell);
        }
        out.push('\n');
    }
    if report.violations.is_empty() {
        out.push_str("lattice: consistent, zero violations\n");
    } else {
        for v in &report.violations {
            let _ = writeln!(
                out,
                "violation: plane {} has {}={} but {}={}",
                v.plane,
                v.from.tag(),
                v.from_verdict,
                v.to.tag(),
                v.to_verdict
            );
        }
    }
    for e in &report.open_problem_evidence {
        let fmt = |v: Option<Verdict>| v.map_or("absent".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "open-problem evidence: plane {}: LP={} wLD={} LD={}",
            e.plane,
            fmt(e.lp),
            fmt(e.wld),
            fmt(e.ld)
        );
    }
    out
}

/// Key=value form of vectors and the consistency report.
pub fn consistency_kv(vectors: &[TruthVector], report: &ConsistencyReport) -> String {
    let mut out = String::new();
    for vec in vectors {
        for (st, verdict, mode) in &vec.entries {
            let _ = writeln!(out, "vector.{}.{}={} ({})", vec.plane, st.tag(), verdict, mode);
        }
    }
    let _ = writeln!(out, "violations={}", report.violations.len());
    for (i, v) in report.violations.iter().enumerate() {
        let _ = writeln!(
            out,
            "violation.{}={}:{}->{}",
            i,
            v.plane,
            v.from.tag(),
            v.to.tag()
        );
    }
    for (i, e) in report.open_problem_evidence.iter().enumerate() {
        let fmt = |v: Option<Verdict>| v.map_or("absent".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "evidence.{}={}:LP={},wLD={},LD={}",
            i,
            e.plane,
            fmt(e.lp),
            fmt(e.wld),
            fmt(e.ld)
        );
    }
    out
}
