//! Statement checking: exhaustive and sampled runs, counterexample search,
//! the brute-force enumeration oracle and witness re-validation.
//!
//! Determinism contract: identical (plane, statement, mode, seed, budget)
//! produce bit-identical reports, independently of the worker count. The
//! exhaustive sweep is partitioned by its outermost parameter and partial
//! results are merged in canonical order; sampled draws are independently
//! seeded per index, processed in fixed-size chunks and consolidated in index
//! order. Violations are reported in instance order, capped but counted
//! fully.

use crate::error::{Error, Result};
use crate::eval::{evaluate_raw, EvalRes, Evaluated, RawInstance};
use crate::generate::{draw_rng, exhaustive_estimate, outer_count, sample_raw, sweep_outer};
use crate::geometry::{FinGeom, Geom, MoultonGeom};
use crate::instance::{Instance, Slot, Witness};
use crate::plane::{LineData, LineRef, PlaneHandle, PlaneKind, PointData, PointRef};
use crate::statements::Statement;
use rayon::prelude::*;
use std::fmt;
use std::fmt::Write as _;

pub const DEFAULT_WITNESS_CAP: usize = 8;
const SAMPLE_CHUNK: u64 = 1024;
const WAVE_CHUNKS: u64 = 16;
/// Sampled runs give up after this many draws per requested instance.
const DRAWS_PER_INSTANCE_CAP: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { seed: u64, budget: u64 },
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckMode::Exhaustive => write!(f, "exhaustive"),
            CheckMode::Sampled { .. } => write!(f, "sampled"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Worker count; 0 uses the global thread pool.
    pub jobs: usize,
    /// Cap on stored witnesses (violations are always counted fully).
    pub witness_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            jobs: 0,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub plane: String,
    pub statement: Statement,
    pub mode: CheckMode,
    pub instances_checked: u64,
    pub degenerate_skipped: u64,
    /// Desargues-family instances whose center lies on a side line; counted
    /// separately, never excluded.
    pub center_on_side: u64,
    pub violations_total: u64,
    pub witnesses: Vec<Witness>,
    pub verdict: Verdict,
}

impl CheckReport {
    /// Machine-readable form; byte-identical across runs and worker counts.
    pub fn to_kv(&self, plane: &PlaneHandle) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "plane={}", self.plane);
        let _ = writeln!(out, "statement={}", self.statement.tag());
        let _ = writeln!(out, "mode={}", self.mode);
        if let CheckMode::Sampled { seed, budget } = self.mode {
            let _ = writeln!(out, "seed={}", seed);
            let _ = writeln!(out, "budget={}", budget);
        }
        let _ = writeln!(out, "instances={}", self.instances_checked);
        let _ = writeln!(out, "degenerate={}", self.degenerate_skipped);
        let _ = writeln!(out, "center_on_side={}", self.center_on_side);
        let _ = writeln!(out, "violations={}", self.violations_total);
        for (i, w) in self.witnesses.iter().enumerate() {
            for line in w.to_kv(plane).lines() {
                let _ = writeln!(out, "witness.{}.{}", i, line);
            }
        }
        let _ = writeln!(out, "verdict={}", self.verdict);
        out
    }
}

// ---------------------------------------------------------------------------
// Raw <-> public conversion.
// ---------------------------------------------------------------------------

pub(crate) trait PlaneGeom: Geom + Sync {
    fn point_ref(&self, plane: &PlaneHandle, p: &Self::Pt) -> PointRef;
    fn line_ref(&self, plane: &PlaneHandle, l: &Self::Ln) -> LineRef;
    fn point_raw(&self, plane: &PlaneHandle, p: &PointRef) -> Result<Self::Pt>;
    fn line_raw(&self, plane: &PlaneHandle, l: &LineRef) -> Result<Self::Ln>;
}

impl PlaneGeom for FinGeom<'_> {
    fn point_ref(&self, plane: &PlaneHandle, p: &u32) -> PointRef {
        plane.point(*p).expect("index in range")
    }

    fn line_ref(&self, plane: &PlaneHandle, l: &u32) -> LineRef {
        plane.line(*l).expect("index in range")
    }

    fn point_raw(&self, plane: &PlaneHandle, p: &PointRef) -> Result<u32> {
        if p.plane != plane.id() {
            return Err(Error::ForeignRef);
        }
        match &p.data {
            PointData::Idx(i) => Ok(*i),
            _ => Err(Error::ForeignRef),
        }
    }

    fn line_raw(&self, plane: &PlaneHandle, l: &LineRef) -> Result<u32> {
        if l.plane != plane.id() {
            return Err(Error::ForeignRef);
        }
        match &l.data {
            LineData::Idx(i) => Ok(*i),
            _ => Err(Error::ForeignRef),
        }
    }
}

impl PlaneGeom for MoultonGeom {
    fn point_ref(&self, plane: &PlaneHandle, p: &Self::Pt) -> PointRef {
        plane.moulton_point(p.clone()).expect("moulton plane")
    }

    fn line_ref(&self, plane: &PlaneHandle, l: &Self::Ln) -> LineRef {
        plane.moulton_line(l.clone()).expect("moulton plane")
    }

    fn point_raw(&self, plane: &PlaneHandle, p: &PointRef) -> Result<Self::Pt> {
        if p.plane != plane.id() {
            return Err(Error::ForeignRef);
        }
        match &p.data {
            PointData::Moulton(m) => Ok(m.clone()),
            _ => Err(Error::ForeignRef),
        }
    }

    fn line_raw(&self, plane: &PlaneHandle, l: &LineRef) -> Result<Self::Ln> {
        if l.plane != plane.id() {
            return Err(Error::ForeignRef);
        }
        match &l.data {
            LineData::Moulton(m) => Ok(m.clone()),
            _ => Err(Error::ForeignRef),
        }
    }
}

fn raw_to_instance<G: PlaneGeom>(
    g: &G,
    plane: &PlaneHandle,
    statement: Statement,
    raw: &RawInstance<G::Pt, G::Ln>,
    ev: Option<&Evaluated<G::Pt, G::Ln>>,
) -> Instance {
    let names = statement.slot_names();
    let bound: Vec<(&'static str, Slot)> = match raw {
        RawInstance::Points7(pts) => names
            .iter()
            .zip(pts.iter())
            .map(|(n, p)| (*n, Slot::Point(g.point_ref(plane, p))))
            .collect(),
        RawInstance::Points6(pts) => names
            .iter()
            .zip(pts.iter())
            .map(|(n, p)| (*n, Slot::Point(g.point_ref(plane, p))))
            .collect(),
        RawInstance::Lines6(lns) => names
            .iter()
            .zip(lns.iter())
            .map(|(n, l)| (*n, Slot::Line(g.line_ref(plane, l))))
            .collect(),
    };
    let mut derived = Vec::new();
    if let Some(ev) = ev {
        for (name, recipe, p) in &ev.derived_points {
            derived.push((*name, *recipe, Slot::Point(g.point_ref(plane, p))));
        }
        for (name, recipe, l) in &ev.derived_lines {
            derived.push((*name, *recipe, Slot::Line(g.line_ref(plane, l))));
        }
    }
    Instance {
        statement,
        bound,
        derived,
    }
}

fn make_witness<G: PlaneGeom>(
    g: &G,
    plane: &PlaneHandle,
    statement: Statement,
    raw: &RawInstance<G::Pt, G::Ln>,
    ev: &Evaluated<G::Pt, G::Ln>,
) -> Witness {
    Witness {
        plane: plane.descriptor().to_string(),
        instance: raw_to_instance(g, plane, statement, raw, Some(ev)),
        failed_conclusion: ev.failure.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Drivers.
// ---------------------------------------------------------------------------

#[derive(Default)]
struct Partial {
    checked: u64,
    degenerate: u64,
    center_on_side: u64,
    violations_total: u64,
    witnesses: Vec<Witness>,
}

fn merge_partials(parts: Vec<Partial>, cap: usize) -> Partial {
    let mut out = Partial::default();
    for mut part in parts {
        out.checked += part.checked;
        out.degenerate += part.degenerate;
        out.center_on_side += part.center_on_side;
        out.violations_total += part.violations_total;
        if out.witnesses.len() < cap {
            let take = cap - out.witnesses.len();
            out.witnesses.extend(part.witnesses.drain(..part.witnesses.len().min(take)));
        }
    }
    out
}

fn with_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(f)
    }
}

fn run_exhaustive(
    plane: &PlaneHandle,
    statement: Statement,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let fin = plane.finite().ok_or(Error::ExhaustiveOnInfinitePlane)?;
    let g = FinGeom {
        s: fin.structure(),
    };
    let outers: Vec<u32> = (0..outer_count(&g, statement)).collect();
    let cap = opts.witness_cap;
    let parts: Vec<Partial> = with_pool(opts.jobs, || {
        outers
            .par_iter()
            .map(|&outer| {
                let mut part = Partial::default();
                sweep_outer(&g, statement, outer, &mut |raw| {
                    match evaluate_raw(&g, statement, &raw) {
                        EvalRes::Degenerate(_) => part.degenerate += 1,
                        EvalRes::Valid(ev) => {
                            part.checked += 1;
                            if ev.center_on_side {
                                part.center_on_side += 1;
                            }
                            if !ev.holds {
                                part.violations_total += 1;
                                if part.witnesses.len() < cap {
                                    part.witnesses
                                        .push(make_witness(&g, plane, statement, &raw, &ev));
                                }
                            }
                        }
                    }
                });
                part
            })
            .collect()
    });
    let merged = merge_partials(parts, cap);
    Ok(CheckReport {
        plane: plane.descriptor().to_string(),
        statement,
        mode: CheckMode::Exhaustive,
        instances_checked: merged.checked,
        degenerate_skipped: merged.degenerate,
        center_on_side: merged.center_on_side,
        violations_total: merged.violations_total,
        witnesses: merged.witnesses,
        verdict: if merged.violations_total > 0 {
            Verdict::Fails
        } else {
            Verdict::Holds
        },
    })
}

enum DrawOut {
    Degenerate,
    Ok { center_on_side: bool },
    Fail { center_on_side: bool, witness: Box<Witness> },
}

fn eval_chunk<G: PlaneGeom>(
    g: &G,
    plane: &PlaneHandle,
    statement: Statement,
    seed: u64,
    start: u64,
    len: u64,
) -> Vec<DrawOut> {
    (start..start + len)
        .map(|index| {
            let mut rng = draw_rng(seed, index);
            match sample_raw(g, statement, &mut rng) {
                None => DrawOut::Degenerate,
                Some(raw) => match evaluate_raw(g, statement, &raw) {
                    EvalRes::Degenerate(_) => DrawOut::Degenerate,
                    EvalRes::Valid(ev) => {
                        if ev.holds {
                            DrawOut::Ok {
                                center_on_side: ev.center_on_side,
                            }
                        } else {
                            DrawOut::Fail {
                                center_on_side: ev.center_on_side,
                                witness: Box::new(make_witness(g, plane, statement, &raw, &ev)),
                            }
                        }
                    }
                },
            }
        })
        .collect()
}

/// Consumes sampled draws in index order until `budget` valid instances are
/// reached (or the draw cap trips). When `stop_at_first_failure` is set the
/// scan ends at the first violating instance.
fn run_sampled<G: PlaneGeom>(
    g: &G,
    plane: &PlaneHandle,
    statement: Statement,
    seed: u64,
    budget: u64,
    opts: &CheckOptions,
    stop_at_first_failure: bool,
) -> Result<Partial>
where
    G::Pt: Send,
    G::Ln: Send,
{
    if budget == 0 {
        return Err(Error::BudgetZero);
    }
    let draw_cap = budget
        .saturating_mul(DRAWS_PER_INSTANCE_CAP)
        .saturating_add(4 * SAMPLE_CHUNK);
    let cap = opts.witness_cap;
    let mut out = Partial::default();
    let mut next_draw = 0u64;
    // Counterexample searches usually hit within a handful of draws; ramp
    // the wave size up instead of paying for a full wave up front.
    let mut ramp = 64u64;

    with_pool(opts.jobs, || {
        'waves: while out.checked < budget && next_draw < draw_cap {
            // Size the wave by the remaining need so small budgets do not
            // evaluate thousands of surplus draws. Draw `i` is always seeded
            // the same way, so chunking never affects results.
            let remaining = budget - out.checked;
            let mut want = (remaining + remaining / 4 + 16).min(WAVE_CHUNKS * SAMPLE_CHUNK);
            if stop_at_first_failure {
                want = want.min(ramp);
                ramp = ramp.saturating_mul(4);
            }
            let chunk_len = want.div_ceil(WAVE_CHUNKS).clamp(16, SAMPLE_CHUNK);
            let n_chunks = want.div_ceil(chunk_len).min(WAVE_CHUNKS);
            let chunk_starts: Vec<u64> = (0..n_chunks)
                .map(|i| next_draw + i * chunk_len)
                .collect();
            next_draw += n_chunks * chunk_len;
            let chunks: Vec<Vec<DrawOut>> = chunk_starts
                .par_iter()
                .map(|&start| eval_chunk(g, plane, statement, seed, start, chunk_len))
                .collect();
            for chunk in chunks {
                for draw in chunk {
                    match draw {
                        DrawOut::Degenerate => out.degenerate += 1,
                        DrawOut::Ok { center_on_side } => {
                            out.checked += 1;
                            if center_on_side {
                                out.center_on_side += 1;
                            }
                        }
                        DrawOut::Fail {
                            center_on_side,
                            witness,
                        } => {
                            out.checked += 1;
                            if center_on_side {
                                out.center_on_side += 1;
                            }
                            out.violations_total += 1;
                            if out.witnesses.len() < cap {
                                out.witnesses.push(*witness);
                            }
                            if stop_at_first_failure {
                                break 'waves;
                            }
                        }
                    }
                    if out.checked == budget {
                        break 'waves;
                    }
                }
            }
        }
    });
    Ok(out)
}

fn sampled_report(
    plane: &PlaneHandle,
    statement: Statement,
    seed: u64,
    budget: u64,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let partial = match &plane.kind() {
        PlaneKind::Finite(fin) => {
            let g = FinGeom {
                s: fin.structure(),
            };
            run_sampled(&g, plane, statement, seed, budget, opts, false)?
        }
        PlaneKind::Moulton => {
            run_sampled(&MoultonGeom, plane, statement, seed, budget, opts, false)?
        }
    };
    Ok(CheckReport {
        plane: plane.descriptor().to_string(),
        statement,
        mode: CheckMode::Sampled { seed, budget },
        instances_checked: partial.checked,
        degenerate_skipped: partial.degenerate,
        center_on_side: partial.center_on_side,
        violations_total: partial.violations_total,
        witnesses: partial.witnesses,
        verdict: if partial.violations_total > 0 {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        },
    })
}

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

pub fn check_statement(
    plane: &PlaneHandle,
    statement: Statement,
    mode: CheckMode,
) -> Result<CheckReport> {
    check_statement_opts(plane, statement, mode, &CheckOptions::default())
}

pub fn check_statement_opts(
    plane: &PlaneHandle,
    statement: Statement,
    mode: CheckMode,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    match mode {
        CheckMode::Exhaustive => run_exhaustive(plane, statement, opts),
        CheckMode::Sampled { seed, budget } => sampled_report(plane, statement, seed, budget, opts),
    }
}

/// First failing instance in the seeded deterministic search order, or `None`
/// once `budget` valid instances pass.
pub fn find_counterexample(
    plane: &PlaneHandle,
    statement: Statement,
    budget: u64,
    seed: u64,
) -> Result<Option<Witness>> {
    find_counterexample_opts(plane, statement, budget, seed, &CheckOptions::default())
}

pub fn find_counterexample_opts(
    plane: &PlaneHandle,
    statement: Statement,
    budget: u64,
    seed: u64,
    opts: &CheckOptions,
) -> Result<Option<Witness>> {
    let partial = match &plane.kind() {
        PlaneKind::Finite(fin) => {
            let g = FinGeom {
                s: fin.structure(),
            };
            run_sampled(&g, plane, statement, seed, budget, opts, true)?
        }
        PlaneKind::Moulton => run_sampled(&MoultonGeom, plane, statement, seed, budget, opts, true)?,
    };
    Ok(partial.witnesses.into_iter().next())
}

/// Estimated exhaustive draw count, for auto-mode gating. `None` on the
/// generative plane.
pub fn exhaustive_cost(plane: &PlaneHandle, statement: Statement) -> Option<u128> {
    plane.finite().map(|fin| {
        exhaustive_estimate(
            &FinGeom {
                s: fin.structure(),
            },
            statement,
        )
    })
}

// ---------------------------------------------------------------------------
// Instance streaming.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenStats {
    pub emitted: u64,
    pub degenerate_skipped: u64,
}

/// Streams hypothesis-satisfying instances to `f` (return `false` to stop).
/// Exhaustive mode walks the constructive sweep in canonical order; sampled
/// mode follows the seeded draw sequence until `budget` instances.
pub fn for_each_instance(
    plane: &PlaneHandle,
    statement: Statement,
    mode: CheckMode,
    f: &mut dyn FnMut(Instance) -> bool,
) -> Result<GenStats> {
    match (&plane.kind(), mode) {
        (PlaneKind::Moulton, CheckMode::Exhaustive) => Err(Error::ExhaustiveOnInfinitePlane),
        (PlaneKind::Finite(fin), CheckMode::Exhaustive) => {
            let g = FinGeom {
                s: fin.structure(),
            };
            let mut stats = GenStats::default();
            let mut keep_going = true;
            for outer in 0..outer_count(&g, statement) {
                if !keep_going {
                    break;
                }
                sweep_outer(&g, statement, outer, &mut |raw| {
                    if !keep_going {
                        return;
                    }
                    match evaluate_raw(&g, statement, &raw) {
                        EvalRes::Degenerate(_) => stats.degenerate_skipped += 1,
                        EvalRes::Valid(ev) => {
                            stats.emitted += 1;
                            keep_going = f(raw_to_instance(&g, plane, statement, &raw, Some(&ev)));
                        }
                    }
                });
            }
            Ok(stats)
        }
        (PlaneKind::Finite(fin), CheckMode::Sampled { seed, budget }) => {
            let g = FinGeom {
                s: fin.structure(),
            };
            stream_sampled(&g, plane, statement, seed, budget, f)
        }
        (PlaneKind::Moulton, CheckMode::Sampled { seed, budget }) => {
            stream_sampled(&MoultonGeom, plane, statement, seed, budget, f)
        }
    }
}

fn stream_sampled<G: PlaneGeom>(
    g: &G,
    plane: &PlaneHandle,
    statement: Statement,
    seed: u64,
    budget: u64,
    f: &mut dyn FnMut(Instance) -> bool,
) -> Result<GenStats> {
    if budget == 0 {
        return Err(Error::BudgetZero);
    }
    let draw_cap = budget
        .saturating_mul(DRAWS_PER_INSTANCE_CAP)
        .saturating_add(4 * SAMPLE_CHUNK);
    let mut stats = GenStats::default();
    for index in 0..draw_cap {
        if stats.emitted == budget {
            break;
        }
        let mut rng = draw_rng(seed, index);
        match sample_raw(g, statement, &mut rng) {
            None => stats.degenerate_skipped += 1,
            Some(raw) => match evaluate_raw(g, statement, &raw) {
                EvalRes::Degenerate(_) => stats.degenerate_skipped += 1,
                EvalRes::Valid(ev) => {
                    stats.emitted += 1;
                    if !f(raw_to_instance(g, plane, statement, &raw, Some(&ev))) {
                        break;
                    }
                }
            },
        }
    }
    Ok(stats)
}

pub fn collect_instances(
    plane: &PlaneHandle,
    statement: Statement,
    mode: CheckMode,
    limit: Option<usize>,
) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for_each_instance(plane, statement, mode, &mut |inst| {
        out.push(inst);
        limit.map_or(true, |cap| out.len() < cap)
    })?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// Brute-force oracle.
// ---------------------------------------------------------------------------

pub const BRUTE_FORCE_MAX_POINTS: u32 = 13;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceReport {
    pub plane: String,
    pub statement: Statement,
    pub instances: u64,
    pub violations: u64,
    pub verdict: Verdict,
}

/// Enumerates every schema tuple directly (no constructive parameterization),
/// filters by the hypothesis predicates and evaluates the conclusions.
/// The completeness oracle for the exhaustive generator.
pub fn brute_force_enumerate(plane: &PlaneHandle, statement: Statement) -> Result<BruteForceReport> {
    let (report, _) = brute_force_with_bindings(plane, statement, false)?;
    Ok(report)
}

/// As [`brute_force_enumerate`], optionally returning the valid bindings in
/// schema order for set comparison against the generator.
pub fn brute_force_with_bindings(
    plane: &PlaneHandle,
    statement: Statement,
    keep_bindings: bool,
) -> Result<(BruteForceReport, Vec<Vec<u32>>)> {
    let fin = plane.finite().ok_or(Error::ExhaustiveOnInfinitePlane)?;
    let s = fin.structure();
    if s.n_points() > BRUTE_FORCE_MAX_POINTS {
        return Err(Error::PlaneTooLarge(s.n_points(), BRUTE_FORCE_MAX_POINTS));
    }
    let g = FinGeom { s };
    let mut instances = 0u64;
    let mut violations = 0u64;
    let mut bindings = Vec::new();

    let mut consider = |raw: RawInstance<u32, u32>| {
        if let EvalRes::Valid(ev) = evaluate_raw(&g, statement, &raw) {
            instances += 1;
            if !ev.holds {
                violations += 1;
            }
            if keep_bindings {
                bindings.push(match &raw {
                    RawInstance::Points7(p) => p.to_vec(),
                    RawInstance::Points6(p) => p.to_vec(),
                    RawInstance::Lines6(l) => l.to_vec(),
                });
            }
        }
    };

    use Statement::*;
    match statement {
        Desargues | HomologousDesargues | LittleDesargues | WeakLittleDesargues
        | ConverseWeakLittleDesargues | WeakDesargues | CollapsingDesargues => {
            let needs_cc1 = statement != ConverseWeakLittleDesargues;
            brute_desargues(&g, needs_cc1, &mut consider);
        }
        Pappus | LittlePappus => brute_pappus(&g, &mut consider),
        PerspectivePappus | StrongPerspectivePappus => brute_persp(&g, &mut consider),
        PappusBrianchon => brute_pb(&g, &mut consider),
    }

    let report = BruteForceReport {
        plane: plane.descriptor().to_string(),
        statement,
        instances,
        violations,
        verdict: if violations > 0 {
            Verdict::Fails
        } else {
            Verdict::Holds
        },
    };
    Ok((report, bindings))
}

/// All 7-tuples, pruned only by hypothesis predicates that the evaluator
/// would reject anyway: pairwise distinctness and the perspective
/// collinearities (S,C,C' is not assumed when `needs_cc1` is false).
fn brute_desargues(g: &FinGeom, needs_cc1: bool, consider: &mut impl FnMut(RawInstance<u32, u32>)) {
    let n = g.s.n_points();
    for s in 0..n {
        for a in 0..n {
            if a == s {
                continue;
            }
            for a1 in 0..n {
                if a1 == s || a1 == a || !g.collinear(&s, &a, &a1) {
                    continue;
                }
                for b in 0..n {
                    if b == s || b == a || b == a1 {
                        continue;
                    }
                    for b1 in 0..n {
                        if b1 == s || b1 == a || b1 == a1 || b1 == b || !g.collinear(&s, &b, &b1) {
                            continue;
                        }
                        for c in 0..n {
                            if c == s || c == a || c == a1 || c == b || c == b1 {
                                continue;
                            }
                            for c1 in 0..n {
                                if c1 == s
                                    || c1 == a
                                    || c1 == a1
                                    || c1 == b
                                    || c1 == b1
                                    || c1 == c
                                {
                                    continue;
                                }
                                if needs_cc1 && !g.collinear(&s, &c, &c1) {
                                    continue;
                                }
                                consider(RawInstance::Points7([s, a, b, c, a1, b1, c1]));
                            }
                        }
                    }
                }
            }
        }
    }
}

/// All 6-tuples with each triple distinct and collinear.
fn brute_pappus(g: &FinGeom, consider: &mut impl FnMut(RawInstance<u32, u32>)) {
    let n = g.s.n_points();
    for a in 0..n {
        for b in 0..n {
            if b == a {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || !g.collinear(&a, &b, &c) {
                    continue;
                }
                for a1 in 0..n {
                    for b1 in 0..n {
                        if b1 == a1 {
                            continue;
                        }
                        for c1 in 0..n {
                            if c1 == a1 || c1 == b1 || !g.collinear(&a1, &b1, &c1) {
                                continue;
                            }
                            consider(RawInstance::Points6([a, b, c, a1, b1, c1]));
                        }
                    }
                }
            }
        }
    }
}

fn brute_persp(g: &FinGeom, consider: &mut impl FnMut(RawInstance<u32, u32>)) {
    let n = g.s.n_points();
    for s in 0..n {
        for a in 0..n {
            if a == s {
                continue;
            }
            for b in 0..n {
                if b == s || b == a {
                    continue;
                }
                for c in 0..n {
                    if c == s || c == a || c == b || !g.collinear(&a, &b, &c) {
                        continue;
                    }
                    for a1 in 0..n {
                        if a1 == s || !g.collinear(&s, &a, &a1) {
                            continue;
                        }
                        for b1 in 0..n {
                            if b1 == s || !g.collinear(&s, &b, &b1) {
                                continue;
                            }
                            for c1 in 0..n {
                                if c1 == s
                                    || !g.collinear(&s, &c, &c1)
                                    || !g.collinear(&a1, &b1, &c1)
                                {
                                    continue;
                                }
                                consider(RawInstance::Points7([s, a, b, c, a1, b1, c1]));
                            }
                        }
                    }
                }
            }
        }
    }
}

/// All line 6-tuples with each triple distinct and concurrent.
fn brute_pb(g: &FinGeom, consider: &mut impl FnMut(RawInstance<u32, u32>)) {
    let nl = g.s.n_lines();
    let concurrent = |a: u32, b: u32, c: u32| -> bool {
        let o = g.s.meet(a, b).expect("distinct");
        g.s.incident(o, c)
    };
    for a in 0..nl {
        for b in 0..nl {
            if b == a {
                continue;
            }
            for c in 0..nl {
                if c == a || c == b || !concurrent(a, b, c) {
                    continue;
                }
                for a1 in 0..nl {
                    for b1 in 0..nl {
                        if b1 == a1 {
                            continue;
                        }
                        for c1 in 0..nl {
                            if c1 == a1 || c1 == b1 || !concurrent(a1, b1, c1) {
                                continue;
                            }
                            consider(RawInstance::Lines6([a, b, c, a1, b1, c1]));
                        }
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Public per-instance evaluation (witness re-validation).
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub enum EvalOutcome {
    /// Holds; the instance is returned with freshly computed derived points.
    Holds(Instance),
    Fails(Witness),
    Degenerate(String),
}

/// Builds an instance from point refs of `plane` in schema order (not PB).
pub fn make_point_instance(
    plane: &PlaneHandle,
    statement: Statement,
    points: &[PointRef],
) -> Result<Instance> {
    let names = statement.slot_names();
    if statement.schema() == crate::statements::SchemaKind::TwoLineTriples
        || points.len() != names.len()
    {
        return Err(Error::SchemaMismatch);
    }
    if points.iter().any(|p| p.plane != plane.id()) {
        return Err(Error::ForeignRef);
    }
    Ok(Instance {
        statement,
        bound: names
            .iter()
            .zip(points.iter())
            .map(|(n, p)| (*n, Slot::Point(p.clone())))
            .collect(),
        derived: Vec::new(),
    })
}

/// Builds a line-schema instance (PB) from line refs of `plane`.
pub fn make_line_instance(
    plane: &PlaneHandle,
    statement: Statement,
    lines: &[LineRef],
) -> Result<Instance> {
    let names = statement.slot_names();
    if statement.schema() != crate::statements::SchemaKind::TwoLineTriples
        || lines.len() != names.len()
    {
        return Err(Error::SchemaMismatch);
    }
    if lines.iter().any(|l| l.plane != plane.id()) {
        return Err(Error::ForeignRef);
    }
    Ok(Instance {
        statement,
        bound: names
            .iter()
            .zip(lines.iter())
            .map(|(n, l)| (*n, Slot::Line(l.clone())))
            .collect(),
        derived: Vec::new(),
    })
}

/// Re-derives the auxiliary points of `instance` and evaluates its statement,
/// using only the bound slots.
pub fn evaluate_instance(
    plane: &PlaneHandle,
    statement: Statement,
    instance: &Instance,
) -> Result<EvalOutcome> {
    if instance.statement != statement {
        return Err(Error::SchemaMismatch);
    }
    match &plane.kind() {
        PlaneKind::Finite(fin) => {
            let g = FinGeom {
                s: fin.structure(),
            };
            evaluate_with(&g, plane, statement, instance)
        }
        PlaneKind::Moulton => evaluate_with(&MoultonGeom, plane, statement, instance),
    }
}

fn evaluate_with<G: PlaneGeom>(
    g: &G,
    plane: &PlaneHandle,
    statement: Statement,
    instance: &Instance,
) -> Result<EvalOutcome> {
    let raw = instance_to_raw(g, plane, statement, instance)?;
    Ok(match evaluate_raw(g, statement, &raw) {
        EvalRes::Degenerate(reason) => EvalOutcome::Degenerate(reason.to_string()),
        EvalRes::Valid(ev) => {
            if ev.holds {
                EvalOutcome::Holds(raw_to_instance(g, plane, statement, &raw, Some(&ev)))
            } else {
                EvalOutcome::Fails(make_witness(g, plane, statement, &raw, &ev))
            }
        }
    })
}

fn instance_to_raw<G: PlaneGeom>(
    g: &G,
    plane: &PlaneHandle,
    statement: Statement,
    instance: &Instance,
) -> Result<RawInstance<G::Pt, G::Ln>> {
    use crate::statements::SchemaKind::*;
    let names = statement.slot_names();
    if instance.bound.len() != names.len() {
        return Err(Error::SchemaMismatch);
    }
    match statement.schema() {
        TwoLineTriples => {
            let mut lines = Vec::with_capacity(6);
            for (_, slot) in &instance.bound {
                match slot {
                    Slot::Line(l) => lines.push(g.line_raw(plane, l)?),
                    _ => return Err(Error::SchemaMismatch),
                }
            }
            let arr: [G::Ln; 6] = lines.try_into().map_err(|_| Error::SchemaMismatch)?;
            Ok(RawInstance::Lines6(arr))
        }
        TwoTriples => {
            let mut pts = Vec::with_capacity(6);
            for (_, slot) in &instance.bound {
                match slot {
                    Slot::Point(p) => pts.push(g.point_raw(plane, p)?),
                    _ => return Err(Error::SchemaMismatch),
                }
            }
            let arr: [G::Pt; 6] = pts.try_into().map_err(|_| Error::SchemaMismatch)?;
            Ok(RawInstance::Points6(arr))
        }
        CenteredTriangles | PerspectorTriples => {
            let mut pts = Vec::with_capacity(7);
            for (_, slot) in &instance.bound {
                match slot {
                    Slot::Point(p) => pts.push(g.point_raw(plane, p)?),
                    _ => return Err(Error::SchemaMismatch),
                }
            }
            let arr: [G::Pt; 7] = pts.try_into().map_err(|_| Error::SchemaMismatch)?;
            Ok(RawInstance::Points7(arr))
        }
    }
}
