//! Statement semantics: hypothesis checking, derived-point construction and
//! conclusion evaluation, shared by the generators, the brute-force oracle,
//! the checkers and witness re-validation.
//!
//! An instance is *degenerate* when a named meet or join does not exist, when
//! the non-degeneracy profile fails (coincident named points, collapsed
//! triangles, coincident side lines) or when a hypothesis clause is not
//! satisfied; a configuration statement asserts nothing in those cases, so
//! they are skipped and counted, never reported as failures.

use crate::geometry::Geom;
use crate::statements::Statement;

/// Raw bindings, in the representation of one particular geometry.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum RawInstance<P, L> {
    /// S, A, B, C, A', B', C' (Desargues family and the perspective Pappus
    /// forms).
    Points7([P; 7]),
    /// A, B, C, A', B', C'.
    Points6([P; 6]),
    /// a, b, c, a', b', c' (line schema).
    Lines6([L; 6]),
}

/// Evaluation of a hypothesis-satisfying instance.
#[derive(Debug, Clone)]
pub(crate) struct Evaluated<P, L> {
    pub holds: bool,
    /// Conclusion description used when `holds` is false.
    pub failure: &'static str,
    /// Derived named points with their join/meet recipes.
    pub derived_points: Vec<(&'static str, &'static str, P)>,
    /// Derived named lines (the axis, carriers).
    pub derived_lines: Vec<(&'static str, &'static str, L)>,
    /// True when the center S lies on a side line of either triangle (only
    /// meaningful for the Desargues family; counted separately in reports).
    pub center_on_side: bool,
}

#[derive(Debug, Clone)]
pub(crate) enum EvalRes<P, L> {
    Valid(Evaluated<P, L>),
    Degenerate(&'static str),
}

macro_rules! degenerate_if {
    ($cond:expr, $reason:expr) => {
        if $cond {
            return EvalRes::Degenerate($reason);
        }
    };
}

macro_rules! try_join {
    ($g:expr, $p:expr, $q:expr, $reason:expr) => {
        match $g.join($p, $q) {
            Some(l) => l,
            None => return EvalRes::Degenerate($reason),
        }
    };
}

pub(crate) fn evaluate_raw<G: Geom>(
    g: &G,
    statement: Statement,
    inst: &RawInstance<G::Pt, G::Ln>,
) -> EvalRes<G::Pt, G::Ln> {
    match (statement, inst) {
        (Statement::Desargues, RawInstance::Points7(pts)) => desargues_family(g, statement, pts),
        (Statement::HomologousDesargues, RawInstance::Points7(pts)) => {
            desargues_family(g, statement, pts)
        }
        (Statement::LittleDesargues, RawInstance::Points7(pts)) => {
            desargues_family(g, statement, pts)
        }
        (Statement::WeakLittleDesargues, RawInstance::Points7(pts)) => {
            desargues_family(g, statement, pts)
        }
        (Statement::ConverseWeakLittleDesargues, RawInstance::Points7(pts)) => {
            desargues_family(g, statement, pts)
        }
        (Statement::WeakDesargues, RawInstance::Points7(pts)) => {
            desargues_family(g, statement, pts)
        }
        (Statement::CollapsingDesargues, RawInstance::Points7(pts)) => {
            desargues_family(g, statement, pts)
        }
        (Statement::Pappus, RawInstance::Points6(pts)) => pappus_plain(g, statement, pts),
        (Statement::LittlePappus, RawInstance::Points6(pts)) => pappus_plain(g, statement, pts),
        (Statement::PerspectivePappus, RawInstance::Points7(pts)) => {
            pappus_perspective(g, statement, pts)
        }
        (Statement::StrongPerspectivePappus, RawInstance::Points7(pts)) => {
            pappus_perspective(g, statement, pts)
        }
        (Statement::PappusBrianchon, RawInstance::Lines6(lns)) => brianchon(g, lns),
        _ => EvalRes::Degenerate("instance does not match the statement schema"),
    }
}

fn pairwise_distinct<T: PartialEq>(items: &[&T]) -> bool {
    for i in 0..items.len() {
        for j in (i + 1)..items.len() {
            if items[i] == items[j] {
                return false;
            }
        }
    }
    true
}

/// Shared core of the Desargues family. Bindings: [S, A, B, C, A', B', C'].
fn desargues_family<G: Geom>(
    g: &G,
    statement: Statement,
    pts: &[G::Pt; 7],
) -> EvalRes<G::Pt, G::Ln> {
    use Statement::*;
    let [s, a, b, c, a1, b1, c1] = pts;

    degenerate_if!(
        !pairwise_distinct(&[s, a, b, c, a1, b1, c1]),
        "named points not pairwise distinct"
    );

    let la = try_join!(g, a, a1, "line AA' undefined");
    let lb = try_join!(g, b, b1, "line BB' undefined");
    let lc = try_join!(g, c, c1, "line CC' undefined");

    degenerate_if!(!g.incident(s, &la), "S not on line AA'");
    degenerate_if!(!g.incident(s, &lb), "S not on line BB'");
    let needs_cc1 = statement != ConverseWeakLittleDesargues;
    if needs_cc1 {
        degenerate_if!(!g.incident(s, &lc), "S not on line CC'");
        degenerate_if!(
            la == lb || la == lc || lb == lc,
            "perspective lines not pairwise distinct"
        );
    } else {
        degenerate_if!(la == lb, "lines AA' and BB' coincide");
    }

    degenerate_if!(g.collinear(a, b, c), "triangle ABC collinear");
    degenerate_if!(g.collinear(a1, b1, c1), "triangle A'B'C' collinear");

    let ab = g.join(a, b).expect("distinct");
    let ac = g.join(a, c).expect("distinct");
    let bc = g.join(b, c).expect("distinct");
    let a1b1 = g.join(a1, b1).expect("distinct");
    let a1c1 = g.join(a1, c1).expect("distinct");
    let b1c1 = g.join(b1, c1).expect("distinct");
    degenerate_if!(ab == a1b1, "side lines AB and A'B' coincide");
    degenerate_if!(ac == a1c1, "side lines AC and A'C' coincide");
    degenerate_if!(bc == b1c1, "side lines BC and B'C' coincide");

    let x = g.meet(&ab, &a1b1).expect("distinct lines");
    let y = g.meet(&ac, &a1c1).expect("distinct lines");
    let z = g.meet(&bc, &b1c1).expect("distinct lines");

    let center_on_side = [&ab, &ac, &bc, &a1b1, &a1c1, &b1c1]
        .iter()
        .any(|l| g.incident(s, l));

    let derived_points = vec![
        ("X", "AB ^ A'B'", x.clone()),
        ("Y", "AC ^ A'C'", y.clone()),
        ("Z", "BC ^ B'C'", z.clone()),
    ];
    let mut derived_lines: Vec<(&'static str, &'static str, G::Ln)> = Vec::new();

    let (holds, failure) = match statement {
        Desargues => (g.collinear(&x, &y, &z), "X, Y, Z not collinear"),
        WeakDesargues => {
            degenerate_if!(!g.collinear(a1, b, c), "A', B, C not collinear (wD hypothesis)");
            (g.collinear(&x, &y, &z), "X, Y, Z not collinear")
        }
        CollapsingDesargues => {
            degenerate_if!(!g.collinear(a, a1, &z), "A, A', Z not collinear (cD hypothesis)");
            (g.collinear(&x, &y, &z), "X, Y, Z not collinear")
        }
        HomologousDesargues => {
            degenerate_if!(g.collinear(s, &x, &y), "S, X, Y collinear (HD requires them apart)");
            let axis = g.join(&x, &y).expect("distinct since S,X,Y non-collinear");
            derived_lines.push(("s", "XY", axis.clone()));
            (g.incident(&z, &axis), "Z not incident with the axis XY")
        }
        LittleDesargues => {
            degenerate_if!(!g.collinear(s, &x, &y), "S, X, Y not collinear (LD hypothesis)");
            let axis = match g.join(&x, &y) {
                Some(l) => l,
                None => return EvalRes::Degenerate("axis XY undefined"),
            };
            derived_lines.push(("s", "XY", axis.clone()));
            (g.incident(&z, &axis), "Z not incident with the axis XY")
        }
        WeakLittleDesargues => {
            degenerate_if!(!g.collinear(a1, b, c), "A', B, C not collinear (wLD hypothesis)");
            degenerate_if!(!g.collinear(s, &x, &y), "S, X, Y not collinear (wLD hypothesis)");
            let axis = match g.join(&x, &y) {
                Some(l) => l,
                None => return EvalRes::Degenerate("axis XY undefined"),
            };
            derived_lines.push(("s", "XY", axis.clone()));
            (g.incident(&z, &axis), "Z not incident with the axis XY")
        }
        ConverseWeakLittleDesargues => {
            degenerate_if!(!g.collinear(a1, b, c), "A', B, C not collinear (cwLD hypothesis)");
            // S differs from X: S on AB would force B onto AA'. The axis is
            // therefore the line SX, and Y, Z must lie on it.
            let axis = g.join(s, &x).expect("S and X distinct");
            degenerate_if!(
                !g.incident(&y, &axis) || !g.incident(&z, &axis),
                "S, X, Y, Z not collinear (cwLD hypothesis)"
            );
            derived_lines.push(("s", "SX", axis.clone()));
            (g.incident(s, &lc), "S not incident with the line CC'")
        }
        _ => unreachable!("not a Desargues-family statement"),
    };

    EvalRes::Valid(Evaluated {
        holds,
        failure,
        derived_points,
        derived_lines,
        center_on_side,
    })
}

/// Carrier analysis shared by the point-schema Pappus forms. Bindings:
/// [A, B, C, A', B', C'].
struct PappusCore<P, L> {
    carrier: L,
    carrier1: L,
    m: P,
}

fn pappus_core<G: Geom>(
    g: &G,
    pts: &[&G::Pt; 6],
) -> Result<PappusCore<G::Pt, G::Ln>, &'static str> {
    let [a, b, c, a1, b1, c1] = *pts;
    if !pairwise_distinct(&[a, b, c]) || !pairwise_distinct(&[a1, b1, c1]) {
        return Err("points within a triple not pairwise distinct");
    }
    let carrier = g.join(a, b).expect("distinct");
    if !g.incident(c, &carrier) {
        return Err("A, B, C not collinear");
    }
    let carrier1 = g.join(a1, b1).expect("distinct");
    if !g.incident(c1, &carrier1) {
        return Err("A', B', C' not collinear");
    }
    if carrier == carrier1 {
        return Err("carrier lines coincide");
    }
    let m = g.meet(&carrier, &carrier1).expect("distinct lines");
    for p in [a, b, c, a1, b1, c1] {
        if *p == m {
            return Err("a named point coincides with M");
        }
    }
    Ok(PappusCore {
        carrier,
        carrier1,
        m,
    })
}

/// Cross-join meet, e.g. C'' = AB' ^ A'B.
fn cross_meet<G: Geom>(g: &G, p: &G::Pt, q1: &G::Pt, p1: &G::Pt, q: &G::Pt) -> Option<G::Pt> {
    let l = g.join(p, q1)?;
    let l1 = g.join(p1, q)?;
    if l == l1 {
        return None;
    }
    g.meet(&l, &l1)
}

fn pappus_plain<G: Geom>(
    g: &G,
    statement: Statement,
    pts: &[G::Pt; 6],
) -> EvalRes<G::Pt, G::Ln> {
    let [a, b, c, a1, b1, c1] = pts;
    let core = match pappus_core(g, &[a, b, c, a1, b1, c1]) {
        Ok(core) => core,
        Err(reason) => return EvalRes::Degenerate(reason),
    };
    let c2 = match cross_meet(g, a, b1, a1, b) {
        Some(p) => p,
        None => return EvalRes::Degenerate("cross joins AB' and A'B coincide"),
    };
    let a2 = match cross_meet(g, b, c1, b1, c) {
        Some(p) => p,
        None => return EvalRes::Degenerate("cross joins BC' and B'C coincide"),
    };

    let mut derived_points = vec![
        ("M", "l ^ l'", core.m.clone()),
        ("C''", "AB' ^ A'B", c2.clone()),
        ("A''", "BC' ^ B'C", a2.clone()),
    ];
    let derived_lines = vec![
        ("l", "AB", core.carrier.clone()),
        ("l'", "A'B'", core.carrier1.clone()),
    ];

    if statement == Statement::LittlePappus && !g.collinear(&core.m, &c2, &a2) {
        return EvalRes::Degenerate("M, C'', A'' not collinear (LP hypothesis)");
    }

    let b2 = match cross_meet(g, a, c1, a1, c) {
        Some(p) => p,
        None => return EvalRes::Degenerate("cross joins AC' and A'C coincide"),
    };
    derived_points.insert(2, ("B''", "AC' ^ A'C", b2.clone()));

    EvalRes::Valid(Evaluated {
        holds: g.collinear(&c2, &b2, &a2),
        failure: "A'', B'', C'' not collinear",
        derived_points,
        derived_lines,
        center_on_side: false,
    })
}

fn pappus_perspective<G: Geom>(
    g: &G,
    statement: Statement,
    pts: &[G::Pt; 7],
) -> EvalRes<G::Pt, G::Ln> {
    let [s, a, b, c, a1, b1, c1] = pts;
    let core = match pappus_core(g, &[a, b, c, a1, b1, c1]) {
        Ok(core) => core,
        Err(reason) => return EvalRes::Degenerate(reason),
    };
    degenerate_if!(
        g.incident(s, &core.carrier) || g.incident(s, &core.carrier1),
        "S lies on a carrier line"
    );
    degenerate_if!(!g.collinear(s, a, a1), "S, A, A' not collinear (perspector hypothesis)");
    degenerate_if!(!g.collinear(s, b, b1), "S, B, B' not collinear (perspector hypothesis)");
    degenerate_if!(!g.collinear(s, c, c1), "S, C, C' not collinear (perspector hypothesis)");

    let c2 = match cross_meet(g, a, b1, a1, b) {
        Some(p) => p,
        None => return EvalRes::Degenerate("cross joins AB' and A'B coincide"),
    };
    let a2 = match cross_meet(g, b, c1, b1, c) {
        Some(p) => p,
        None => return EvalRes::Degenerate("cross joins BC' and B'C coincide"),
    };

    let mut derived_points = vec![
        ("M", "l ^ l'", core.m.clone()),
        ("C''", "AB' ^ A'B", c2.clone()),
        ("A''", "BC' ^ B'C", a2.clone()),
    ];
    let derived_lines = vec![
        ("l", "AB", core.carrier.clone()),
        ("l'", "A'B'", core.carrier1.clone()),
    ];

    if statement == Statement::StrongPerspectivePappus {
        return EvalRes::Valid(Evaluated {
            holds: g.collinear(&core.m, &c2, &a2),
            failure: "M, C'', A'' not collinear",
            derived_points,
            derived_lines,
            center_on_side: false,
        });
    }

    let b2 = match cross_meet(g, a, c1, a1, c) {
        Some(p) => p,
        None => return EvalRes::Degenerate("cross joins AC' and A'C coincide"),
    };
    derived_points.insert(2, ("B''", "AC' ^ A'C", b2.clone()));
    EvalRes::Valid(Evaluated {
        holds: g.collinear(&c2, &b2, &a2),
        failure: "A'', B'', C'' not collinear",
        derived_points,
        derived_lines,
        center_on_side: false,
    })
}

/// The line dual of the plain Pappus statement. Bindings:
/// [a, b, c, a', b', c'].
fn brianchon<G: Geom>(g: &G, lns: &[G::Ln; 6]) -> EvalRes<G::Pt, G::Ln> {
    let [a, b, c, a1, b1, c1] = lns;
    degenerate_if!(
        !pairwise_distinct(&[a, b, c]) || !pairwise_distinct(&[a1, b1, c1]),
        "lines within a triple not pairwise distinct"
    );
    let o = g.meet(a, b).expect("distinct");
    degenerate_if!(!g.incident(&o, c), "a, b, c not concurrent");
    let o1 = g.meet(a1, b1).expect("distinct");
    degenerate_if!(!g.incident(&o1, c1), "a', b', c' not concurrent");
    degenerate_if!(o == o1, "pencil carriers coincide");
    let m = g.join(&o, &o1).expect("distinct points");
    for l in [a, b, c, a1, b1, c1] {
        degenerate_if!(*l == m, "a named line coincides with the spine OO'");
    }

    let cross_join = |p: &G::Ln, q1: &G::Ln, p1: &G::Ln, q: &G::Ln| -> Option<G::Ln> {
        let u = g.meet(p, q1)?;
        let v = g.meet(p1, q)?;
        if u == v {
            return None;
        }
        g.join(&u, &v)
    };

    let c2 = match cross_join(a, b1, a1, b) {
        Some(l) => l,
        None => return EvalRes::Degenerate("cross meets of (a,b') and (a',b) coincide"),
    };
    let b2 = match cross_join(a, c1, a1, c) {
        Some(l) => l,
        None => return EvalRes::Degenerate("cross meets of (a,c') and (a',c) coincide"),
    };
    let a2 = match cross_join(b, c1, b1, c) {
        Some(l) => l,
        None => return EvalRes::Degenerate("cross meets of (b,c') and (b',c) coincide"),
    };

    // Concurrency with the duplicate convention mirrored from collinearity.
    let holds = if a2 == b2 || a2 == c2 || b2 == c2 {
        true
    } else {
        let common = g.meet(&a2, &b2).expect("distinct lines");
        g.incident(&common, &c2)
    };

    EvalRes::Valid(Evaluated {
        holds,
        failure: "a'', b'', c'' not concurrent",
        derived_points: vec![("O", "a ^ b", o), ("O'", "a' ^ b'", o1)],
        derived_lines: vec![
            ("c''", "(a^b')(a'^b)", c2),
            ("b''", "(a^c')(a'^c)", b2),
            ("a''", "(b^c')(b'^c)", a2),
            ("m", "OO'", m),
        ],
        center_on_side: false,
    })
}
