//! Candidate generation for the twelve statements.
//!
//! Exhaustive sweeps walk the free parameters of each statement's
//! constructive scheme in canonical ascending order on a finite plane; free
//! points come first, constrained points are solved by join/meet so the
//! constrained collinearities hold by construction. Sampled draws mirror the
//! same schemes with seeded random choices; each draw is seeded independently
//! from (seed, index), so any subrange of the stream can be computed on any
//! worker with identical results.
//!
//! Every candidate is re-classified by the evaluator afterwards; sweeps may
//! emit degenerate candidates (they are counted and skipped), but they emit
//! every hypothesis-satisfying binding exactly once. Two statements need
//! care to keep that property:
//! - LD sweeps C and C' freely and lets the axis hypothesis filter, because
//!   solving C' from the axis misses instances with A' on the side AC;
//! - cwLD sweeps C' freely for the same reason (Z may coincide with B').
//! Their samplers construct C' instead, since a random draw would satisfy an
//! exact collinearity with probability zero on the rational model.

use crate::eval::RawInstance;
use crate::geometry::{FinGeom, Geom};
use crate::statements::Statement;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent generator for one sampled draw.
pub(crate) fn draw_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&index.to_le_bytes());
    key[16..24].copy_from_slice(&0x706c616e656c6162u64.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

type Raw<G> = RawInstance<<G as Geom>::Pt, <G as Geom>::Ln>;

// ---------------------------------------------------------------------------
// Constructions shared by sweeps and samplers.
// ---------------------------------------------------------------------------

/// wLD: C and C' solved so that A',B,C and S,X,Y are collinear by
/// construction.
fn construct_wld<G: Geom>(
    g: &G,
    s: &G::Pt,
    l3: &G::Ln,
    a: &G::Pt,
    a1: &G::Pt,
    b: &G::Pt,
    b1: &G::Pt,
) -> Option<[G::Pt; 7]> {
    let c = g.meet(&g.join(a1, b)?, l3)?;
    let x = g.meet(&g.join(a, b)?, &g.join(a1, b1)?)?;
    let axis = g.join(s, &x)?;
    let y = g.meet(&g.join(a, &c)?, &axis)?;
    let c1 = g.meet(&g.join(a1, &y)?, l3)?;
    Some([
        s.clone(),
        a.clone(),
        b.clone(),
        c,
        a1.clone(),
        b1.clone(),
        c1,
    ])
}

/// wD: C solved so that A',B,C is collinear; C' stays free.
fn construct_wd_c<G: Geom>(g: &G, l3: &G::Ln, a1: &G::Pt, b: &G::Pt) -> Option<G::Pt> {
    g.meet(&g.join(a1, b)?, l3)
}

/// LD sampler: C free on the third line, C' solved so that S,X,Y is
/// collinear.
fn construct_ld_c1<G: Geom>(
    g: &G,
    s: &G::Pt,
    l3: &G::Ln,
    a: &G::Pt,
    a1: &G::Pt,
    b: &G::Pt,
    b1: &G::Pt,
    c: &G::Pt,
) -> Option<G::Pt> {
    let x = g.meet(&g.join(a, b)?, &g.join(a1, b1)?)?;
    let axis = g.join(s, &x)?;
    let y = g.meet(&g.join(a, c)?, &axis)?;
    g.meet(&g.join(a1, &y)?, l3)
}

/// cwLD sampler: C' solved so that Y and Z land on the axis SX.
fn construct_cwld_c1<G: Geom>(
    g: &G,
    s: &G::Pt,
    a: &G::Pt,
    a1: &G::Pt,
    b: &G::Pt,
    b1: &G::Pt,
    c: &G::Pt,
) -> Option<G::Pt> {
    let x = g.meet(&g.join(a, b)?, &g.join(a1, b1)?)?;
    let axis = g.join(s, &x)?;
    let y = g.meet(&g.join(a, c)?, &axis)?;
    let z = g.meet(&g.join(b, c)?, &axis)?;
    g.meet(&g.join(a1, &y)?, &g.join(b1, &z)?)
}

/// cD: Z from the free side pairs; A and A' then live on the line SZ.
fn construct_cd_line<G: Geom>(
    g: &G,
    s: &G::Pt,
    b: &G::Pt,
    b1: &G::Pt,
    c: &G::Pt,
    c1: &G::Pt,
) -> Option<(G::Pt, G::Ln)> {
    let bc = g.join(b, c)?;
    let b1c1 = g.join(b1, c1)?;
    if bc == b1c1 {
        return None;
    }
    let z = g.meet(&bc, &b1c1)?;
    let l1 = g.join(s, &z)?;
    Some((z, l1))
}

/// LP: C' solved so that M, C'', A'' is collinear.
fn construct_lp_c1<G: Geom>(
    g: &G,
    m: &G::Pt,
    carrier1: &G::Ln,
    a: &G::Pt,
    b: &G::Pt,
    c: &G::Pt,
    a1: &G::Pt,
    b1: &G::Pt,
) -> Option<G::Pt> {
    let c2 = {
        let l = g.join(a, b1)?;
        let l1 = g.join(a1, b)?;
        if l == l1 {
            return None;
        }
        g.meet(&l, &l1)?
    };
    let h = g.join(m, &c2)?;
    let b1c = g.join(b1, c)?;
    if b1c == h {
        return None;
    }
    let a2 = g.meet(&b1c, &h)?;
    let ba2 = g.join(b, &a2)?;
    if &ba2 == carrier1 {
        return None;
    }
    g.meet(&ba2, carrier1)
}

/// pP/sPP: the primed triple is cut out of the second carrier by the rays
/// through S.
fn construct_persp_triple<G: Geom>(
    g: &G,
    s: &G::Pt,
    carrier1: &G::Ln,
    a: &G::Pt,
    b: &G::Pt,
    c: &G::Pt,
) -> Option<[G::Pt; 3]> {
    let cut = |p: &G::Pt| -> Option<G::Pt> {
        let ray = g.join(s, p)?;
        if &ray == carrier1 {
            return None;
        }
        g.meet(&ray, carrier1)
    };
    Some([cut(a)?, cut(b)?, cut(c)?])
}

// ---------------------------------------------------------------------------
// Exhaustive sweeps (finite planes).
// ---------------------------------------------------------------------------

/// Number of partition units for the exhaustive sweep of a statement.
pub(crate) fn outer_count(g: &FinGeom, st: Statement) -> u32 {
    use Statement::*;
    match st {
        Pappus | LittlePappus | PerspectivePappus | StrongPerspectivePappus => g.s.n_lines(),
        _ => g.s.n_points(),
    }
}

/// Enumerates every candidate of the sweep whose outermost parameter equals
/// `outer`, in canonical order.
pub(crate) fn sweep_outer(g: &FinGeom, st: Statement, outer: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    use Statement::*;
    match st {
        Desargues | HomologousDesargues | LittleDesargues => sweep_des_free(g, outer, f),
        WeakLittleDesargues => sweep_wld(g, outer, f),
        ConverseWeakLittleDesargues => sweep_cwld(g, outer, f),
        WeakDesargues => sweep_wd(g, outer, f),
        CollapsingDesargues => sweep_cd(g, outer, f),
        Pappus => sweep_pappus(g, outer, f),
        LittlePappus => sweep_lp(g, outer, f),
        PerspectivePappus | StrongPerspectivePappus => sweep_persp(g, outer, f),
        PappusBrianchon => sweep_pb(g, outer, f),
    }
}

/// Ordered pairs of distinct points on `l`, excluding `s`.
fn point_pairs_excluding<'a>(
    g: &'a FinGeom,
    l: u32,
    s: u32,
) -> impl Iterator<Item = (u32, u32)> + 'a {
    let pts = g.s.points_on_line(l);
    pts.iter()
        .copied()
        .filter(move |&p| p != s)
        .flat_map(move |p| {
            pts.iter()
                .copied()
                .filter(move |&q| q != s && q != p)
                .map(move |q| (p, q))
        })
}

fn line_triples_through(g: &FinGeom, s: u32) -> Vec<(u32, u32, u32)> {
    let lines = g.s.lines_through_point(s);
    let mut out = Vec::new();
    for &l1 in lines {
        for &l2 in lines {
            if l2 == l1 {
                continue;
            }
            for &l3 in lines {
                if l3 != l1 && l3 != l2 {
                    out.push((l1, l2, l3));
                }
            }
        }
    }
    out
}

fn sweep_des_free(g: &FinGeom, s: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    for (l1, l2, l3) in line_triples_through(g, s) {
        for (a, a1) in point_pairs_excluding(g, l1, s) {
            for (b, b1) in point_pairs_excluding(g, l2, s) {
                for (c, c1) in point_pairs_excluding(g, l3, s) {
                    f(RawInstance::Points7([s, a, b, c, a1, b1, c1]));
                }
            }
        }
    }
}

fn sweep_wld(g: &FinGeom, s: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    for (l1, l2, l3) in line_triples_through(g, s) {
        for (a, a1) in point_pairs_excluding(g, l1, s) {
            for (b, b1) in point_pairs_excluding(g, l2, s) {
                if let Some(pts) = construct_wld(g, &s, &l3, &a, &a1, &b, &b1) {
                    f(RawInstance::Points7(pts));
                }
            }
        }
    }
}

fn sweep_cwld(g: &FinGeom, s: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    let lines = g.s.lines_through_point(s);
    for &l1 in lines {
        for &l2 in lines {
            if l2 == l1 {
                continue;
            }
            for (a, a1) in point_pairs_excluding(g, l1, s) {
                for (b, b1) in point_pairs_excluding(g, l2, s) {
                    let a1b = g.s.join(a1, b).expect("distinct");
                    for &c in g.s.points_on_line(a1b) {
                        if c == a1 || c == b {
                            continue;
                        }
                        for c1 in 0..g.s.n_points() {
                            f(RawInstance::Points7([s, a, b, c, a1, b1, c1]));
                        }
                    }
                }
            }
        }
    }
}

fn sweep_wd(g: &FinGeom, s: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    for (l1, l2, l3) in line_triples_through(g, s) {
        for (a, a1) in point_pairs_excluding(g, l1, s) {
            for (b, b1) in point_pairs_excluding(g, l2, s) {
                if let Some(c) = construct_wd_c(g, &l3, &a1, &b) {
                    for &c1 in g.s.points_on_line(l3) {
                        if c1 != s && c1 != c {
                            f(RawInstance::Points7([s, a, b, c, a1, b1, c1]));
                        }
                    }
                }
            }
        }
    }
}

fn sweep_cd(g: &FinGeom, s: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    let lines = g.s.lines_through_point(s);
    for &l2 in lines {
        for &l3 in lines {
            if l3 == l2 {
                continue;
            }
            for (b, b1) in point_pairs_excluding(g, l2, s) {
                for (c, c1) in point_pairs_excluding(g, l3, s) {
                    if let Some((_z, l1)) = construct_cd_line(g, &s, &b, &b1, &c, &c1) {
                        if l1 == l2 || l1 == l3 {
                            continue;
                        }
                        for (a, a1) in point_pairs_excluding(g, l1, s) {
                            f(RawInstance::Points7([s, a, b, c, a1, b1, c1]));
                        }
                    }
                }
            }
        }
    }
}

/// Ordered triples of distinct points on `l`, excluding `m`.
fn point_triples_excluding(g: &FinGeom, l: u32, m: u32) -> Vec<(u32, u32, u32)> {
    let pts: Vec<u32> = g
        .s
        .points_on_line(l)
        .iter()
        .copied()
        .filter(|&p| p != m)
        .collect();
    let mut out = Vec::new();
    for &a in &pts {
        for &b in &pts {
            if b == a {
                continue;
            }
            for &c in &pts {
                if c != a && c != b {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

fn sweep_pappus(g: &FinGeom, l: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    for l1 in 0..g.s.n_lines() {
        if l1 == l {
            continue;
        }
        let m = g.s.meet(l, l1).expect("distinct");
        for (a, b, c) in point_triples_excluding(g, l, m) {
            for (a1, b1, c1) in point_triples_excluding(g, l1, m) {
                f(RawInstance::Points6([a, b, c, a1, b1, c1]));
            }
        }
    }
}

fn sweep_lp(g: &FinGeom, l: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    for l1 in 0..g.s.n_lines() {
        if l1 == l {
            continue;
        }
        let m = g.s.meet(l, l1).expect("distinct");
        for (a, b, c) in point_triples_excluding(g, l, m) {
            for (a1, b1) in point_pairs_excluding(g, l1, m) {
                if let Some(c1) = construct_lp_c1(g, &m, &l1, &a, &b, &c, &a1, &b1) {
                    f(RawInstance::Points6([a, b, c, a1, b1, c1]));
                }
            }
        }
    }
}

fn sweep_persp(g: &FinGeom, l: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    for l1 in 0..g.s.n_lines() {
        if l1 == l {
            continue;
        }
        for s in 0..g.s.n_points() {
            if g.s.incident(s, l) || g.s.incident(s, l1) {
                continue;
            }
            let m = g.s.meet(l, l1).expect("distinct");
            for (a, b, c) in point_triples_excluding(g, l, m) {
                if let Some([a1, b1, c1]) = construct_persp_triple(g, &s, &l1, &a, &b, &c) {
                    f(RawInstance::Points7([s, a, b, c, a1, b1, c1]));
                }
            }
        }
    }
}

/// Ordered triples of distinct lines through `o`, excluding `m`.
fn line_triples_excluding(g: &FinGeom, o: u32, m: u32) -> Vec<(u32, u32, u32)> {
    let lines: Vec<u32> = g
        .s
        .lines_through_point(o)
        .iter()
        .copied()
        .filter(|&l| l != m)
        .collect();
    let mut out = Vec::new();
    for &a in &lines {
        for &b in &lines {
            if b == a {
                continue;
            }
            for &c in &lines {
                if c != a && c != b {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

fn sweep_pb(g: &FinGeom, o: u32, f: &mut impl FnMut(Raw<FinGeom>)) {
    for o1 in 0..g.s.n_points() {
        if o1 == o {
            continue;
        }
        let m = g.s.join(o, o1).expect("distinct");
        for (a, b, c) in line_triples_excluding(g, o, m) {
            for (a1, b1, c1) in line_triples_excluding(g, o1, m) {
                f(RawInstance::Lines6([a, b, c, a1, b1, c1]));
            }
        }
    }
}

/// Upper bound on the number of exhaustive draws, assuming a regular plane.
/// Used to decide between exhaustive and sampled checking in auto mode.
pub(crate) fn exhaustive_estimate(g: &FinGeom, st: Statement) -> u128 {
    use Statement::*;
    let n = g.s.n_points() as u128;
    let nl = g.s.n_lines() as u128;
    let r = (0..g.s.n_points())
        .map(|p| g.s.lines_through_point(p).len())
        .max()
        .unwrap_or(0) as u128;
    let k = (0..g.s.n_lines())
        .map(|l| g.s.points_on_line(l).len())
        .max()
        .unwrap_or(0) as u128;
    let pairs = |x: u128| x.saturating_sub(1) * x.saturating_sub(2);
    let triples_on_line = |x: u128| x.saturating_sub(1) * x.saturating_sub(2) * x.saturating_sub(3);
    let line_triples = r * r.saturating_sub(1) * r.saturating_sub(2);
    match st {
        Desargues | HomologousDesargues | LittleDesargues => n * line_triples * pairs(k).pow(3),
        WeakLittleDesargues => n * line_triples * pairs(k).pow(2),
        ConverseWeakLittleDesargues => n * r * r.saturating_sub(1) * pairs(k).pow(2) * k * n,
        WeakDesargues => n * line_triples * pairs(k).pow(2) * k,
        CollapsingDesargues => n * r * r.saturating_sub(1) * pairs(k).pow(3),
        Pappus => nl * nl.saturating_sub(1) * triples_on_line(k).pow(2),
        LittlePappus => nl * nl.saturating_sub(1) * triples_on_line(k) * pairs(k),
        PerspectivePappus | StrongPerspectivePappus => {
            nl * nl.saturating_sub(1) * n * triples_on_line(k)
        }
        PappusBrianchon => n * n.saturating_sub(1) * triples_on_line(r).pow(2),
    }
}

// ---------------------------------------------------------------------------
// Seeded samplers (finite and generative planes).
// ---------------------------------------------------------------------------

const DRAW_RETRIES: usize = 32;

fn retry<T, F: FnMut() -> Option<T>>(mut f: F) -> Option<T> {
    for _ in 0..DRAW_RETRIES {
        if let Some(v) = f() {
            return Some(v);
        }
    }
    None
}

/// Free parameters shared by the Desargues-family samplers: a center, lines
/// through it, and a point pair on each of the first two lines.
#[allow(clippy::type_complexity)]
fn sample_des_frees<G: Geom>(
    g: &G,
    rng: &mut ChaCha8Rng,
) -> Option<(G::Pt, G::Ln, G::Ln, G::Ln, G::Pt, G::Pt, G::Pt, G::Pt)> {
    let s = g.sample_point(rng);
    let l1 = g.sample_line_through(&s, rng);
    let l2 = retry(|| {
        let l = g.sample_line_through(&s, rng);
        (l != l1).then_some(l)
    })?;
    let l3 = retry(|| {
        let l = g.sample_line_through(&s, rng);
        (l != l1 && l != l2).then_some(l)
    })?;
    let (a, a1) = sample_pair_on(g, &l1, &s, rng)?;
    let (b, b1) = sample_pair_on(g, &l2, &s, rng)?;
    Some((s, l1, l2, l3, a, a1, b, b1))
}

fn sample_pair_on<G: Geom>(
    g: &G,
    l: &G::Ln,
    exclude: &G::Pt,
    rng: &mut ChaCha8Rng,
) -> Option<(G::Pt, G::Pt)> {
    let p = retry(|| {
        let p = g.sample_point_on(l, rng);
        (&p != exclude).then_some(p)
    })?;
    let q = retry(|| {
        let q = g.sample_point_on(l, rng);
        (&q != exclude && q != p).then_some(q)
    })?;
    Some((p, q))
}

fn sample_triple_on<G: Geom>(
    g: &G,
    l: &G::Ln,
    exclude: &G::Pt,
    rng: &mut ChaCha8Rng,
) -> Option<(G::Pt, G::Pt, G::Pt)> {
    let (a, b) = sample_pair_on(g, l, exclude, rng)?;
    let c = retry(|| {
        let c = g.sample_point_on(l, rng);
        (&c != exclude && c != a && c != b).then_some(c)
    })?;
    Some((a, b, c))
}

/// One sampled candidate for `st`, or `None` when the helper draws collapse
/// (counted as a degenerate draw by the caller).
pub(crate) fn sample_raw<G: Geom>(
    g: &G,
    st: Statement,
    rng: &mut ChaCha8Rng,
) -> Option<Raw<G>> {
    use Statement::*;
    match st {
        Desargues | HomologousDesargues => {
            let (s, _l1, _l2, l3, a, a1, b, b1) = sample_des_frees(g, rng)?;
            let (c, c1) = sample_pair_on(g, &l3, &s, rng)?;
            Some(RawInstance::Points7([s, a, b, c, a1, b1, c1]))
        }
        LittleDesargues => {
            let (s, _l1, _l2, l3, a, a1, b, b1) = sample_des_frees(g, rng)?;
            let c = retry(|| {
                let c = g.sample_point_on(&l3, rng);
                (c != s).then_some(c)
            })?;
            let c1 = construct_ld_c1(g, &s, &l3, &a, &a1, &b, &b1, &c)?;
            Some(RawInstance::Points7([s, a, b, c, a1, b1, c1]))
        }
        WeakLittleDesargues => {
            let (s, _l1, _l2, l3, a, a1, b, b1) = sample_des_frees(g, rng)?;
            Some(RawInstance::Points7(construct_wld(
                g, &s, &l3, &a, &a1, &b, &b1,
            )?))
        }
        ConverseWeakLittleDesargues => {
            let s = g.sample_point(rng);
            let l1 = g.sample_line_through(&s, rng);
            let l2 = retry(|| {
                let l = g.sample_line_through(&s, rng);
                (l != l1).then_some(l)
            })?;
            let (a, a1) = sample_pair_on(g, &l1, &s, rng)?;
            let (b, b1) = sample_pair_on(g, &l2, &s, rng)?;
            let a1b = g.join(&a1, &b)?;
            let c = retry(|| {
                let c = g.sample_point_on(&a1b, rng);
                (c != a1 && c != b).then_some(c)
            })?;
            let c1 = construct_cwld_c1(g, &s, &a, &a1, &b, &b1, &c)?;
            Some(RawInstance::Points7([s, a, b, c, a1, b1, c1]))
        }
        WeakDesargues => {
            let (s, _l1, _l2, l3, a, a1, b, b1) = sample_des_frees(g, rng)?;
            let c = construct_wd_c(g, &l3, &a1, &b)?;
            let c1 = retry(|| {
                let c1 = g.sample_point_on(&l3, rng);
                (c1 != s && c1 != c).then_some(c1)
            })?;
            Some(RawInstance::Points7([s, a, b, c, a1, b1, c1]))
        }
        CollapsingDesargues => {
            let s = g.sample_point(rng);
            let l2 = g.sample_line_through(&s, rng);
            let l3 = retry(|| {
                let l = g.sample_line_through(&s, rng);
                (l != l2).then_some(l)
            })?;
            let (b, b1) = sample_pair_on(g, &l2, &s, rng)?;
            let (c, c1) = sample_pair_on(g, &l3, &s, rng)?;
            let (z, l1) = construct_cd_line(g, &s, &b, &b1, &c, &c1)?;
            if l1 == l2 || l1 == l3 {
                return None;
            }
            let (a, a1) = retry(|| {
                let pair = sample_pair_on(g, &l1, &s, rng)?;
                (pair.0 != z && pair.1 != z).then_some(pair)
            })?;
            Some(RawInstance::Points7([s, a, b, c, a1, b1, c1]))
        }
        Pappus => {
            let (l, l1, m) = sample_carriers(g, rng)?;
            let (a, b, c) = sample_triple_on(g, &l, &m, rng)?;
            let (a1, b1, c1) = sample_triple_on(g, &l1, &m, rng)?;
            Some(RawInstance::Points6([a, b, c, a1, b1, c1]))
        }
        LittlePappus => {
            let (l, l1, m) = sample_carriers(g, rng)?;
            let (a, b, c) = sample_triple_on(g, &l, &m, rng)?;
            let (a1, b1) = sample_pair_on(g, &l1, &m, rng)?;
            let c1 = construct_lp_c1(g, &m, &l1, &a, &b, &c, &a1, &b1)?;
            Some(RawInstance::Points6([a, b, c, a1, b1, c1]))
        }
        PerspectivePappus | StrongPerspectivePappus => {
            let (l, l1, m) = sample_carriers(g, rng)?;
            let s = retry(|| {
                let s = g.sample_point(rng);
                (!g.incident(&s, &l) && !g.incident(&s, &l1)).then_some(s)
            })?;
            let (a, b, c) = sample_triple_on(g, &l, &m, rng)?;
            let [a1, b1, c1] = construct_persp_triple(g, &s, &l1, &a, &b, &c)?;
            Some(RawInstance::Points7([s, a, b, c, a1, b1, c1]))
        }
        PappusBrianchon => {
            let o = g.sample_point(rng);
            let o1 = retry(|| {
                let o1 = g.sample_point(rng);
                (o1 != o).then_some(o1)
            })?;
            let m = g.join(&o, &o1)?;
            let (a, b, c) = sample_line_triple_through(g, &o, &m, rng)?;
            let (a1, b1, c1) = sample_line_triple_through(g, &o1, &m, rng)?;
            Some(RawInstance::Lines6([a, b, c, a1, b1, c1]))
        }
    }
}

fn sample_carriers<G: Geom>(g: &G, rng: &mut ChaCha8Rng) -> Option<(G::Ln, G::Ln, G::Pt)> {
    let l = g.sample_line(rng);
    let l1 = retry(|| {
        let k = g.sample_line(rng);
        (k != l).then_some(k)
    })?;
    let m = g.meet(&l, &l1)?;
    Some((l, l1, m))
}

fn sample_line_triple_through<G: Geom>(
    g: &G,
    o: &G::Pt,
    exclude: &G::Ln,
    rng: &mut ChaCha8Rng,
) -> Option<(G::Ln, G::Ln, G::Ln)> {
    let a = retry(|| {
        let a = g.sample_line_through(o, rng);
        (&a != exclude).then_some(a)
    })?;
    let b = retry(|| {
        let b = g.sample_line_through(o, rng);
        (&b != exclude && b != a).then_some(b)
    })?;
    let c = retry(|| {
        let c = g.sample_line_through(o, rng);
        (&c != exclude && c != a && c != b).then_some(c)
    })?;
    Some((a, b, c))
}
