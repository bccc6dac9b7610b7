//! Triangle translation chains in the exact-rational Euclidean plane.
//!
//! A chain connects a base triangle to a target translate through
//! intermediate translated copies, each consecutive pair carrying an exact
//! incidence certificate: one vertex of one triangle lies on the side line of
//! the other joining the images of its other two vertices. For translates
//! all corresponding sides are parallel, so consecutive pairs are axially
//! perspective with respect to the direction classes at infinity; the
//! certificate supplies the extra vertex-on-side incidence.
//!
//! Step policy: decompose the target over the edge basis (e1, e2) =
//! (B - A, C - A), take whole-edge steps (the moved vertex lands on a vertex
//! of the predecessor, hence on the required side line), then close any
//! fractional residual with two exactly solved steps. Writing the target as
//! a*e1 + b*e2, the chain length is floor(|a|) + floor(|b|) (+2 for a nonzero
//! residual), which stays within 2*ceil(|target|/rho) + 2 for rho the
//! shortest height of the base triangle.

use crate::error::{Error, Result};
use crate::rational::{ceil_sqrt, parse_rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

pub type RatPoint = (Rat, Rat);
pub type RatVector = (Rat, Rat);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalTriangle {
    pub a: RatPoint,
    pub b: RatPoint,
    pub c: RatPoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub fn name(&self) -> &'static str {
        match self {
            Vertex::A => "A",
            Vertex::B => "B",
            Vertex::C => "C",
        }
    }

    fn others(&self) -> (Vertex, Vertex) {
        match self {
            Vertex::A => (Vertex::B, Vertex::C),
            Vertex::B => (Vertex::A, Vertex::C),
            Vertex::C => (Vertex::A, Vertex::B),
        }
    }
}

/// Which triangle of a consecutive pair supplies the incident vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateSide {
    /// A vertex of the moved triangle lies on a side line of its predecessor.
    SuccessorVertexOnPredecessorSide,
    /// A vertex of the predecessor lies on a side line of the moved triangle.
    PredecessorVertexOnSuccessorSide,
}

/// Exact incidence certificate for one chain step: `vertex` of the indicated
/// triangle lies on the other triangle's side line joining the images of the
/// two remaining vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WldCertificate {
    pub side: CertificateSide,
    pub vertex: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub vector: RatVector,
    pub certificate: WldCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationChain {
    pub base: RationalTriangle,
    pub steps: Vec<ChainStep>,
    /// Must equal the sum of the step vectors.
    pub total: RatVector,
}

impl RationalTriangle {
    pub fn new(a: RatPoint, b: RatPoint, c: RatPoint) -> Result<Self> {
        let t = RationalTriangle { a, b, c };
        if t.signed_area2().is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(t)
    }

    /// Twice the signed area (exact cross product).
    pub fn signed_area2(&self) -> Rat {
        cross(
            &sub(&self.b, &self.a),
            &sub(&self.c, &self.a),
        )
    }

    pub fn translate(&self, v: &RatVector) -> RationalTriangle {
        RationalTriangle {
            a: add(&self.a, v),
            b: add(&self.b, v),
            c: add(&self.c, v),
        }
    }

    pub fn vertex(&self, v: Vertex) -> &RatPoint {
        match v {
            Vertex::A => &self.a,
            Vertex::B => &self.b,
            Vertex::C => &self.c,
        }
    }

    /// Squared shortest height: (2*Area)^2 / max squared side length.
    pub fn shortest_height_sq(&self) -> Rat {
        let area2 = self.signed_area2();
        let sides = [
            sub(&self.b, &self.a),
            sub(&self.c, &self.a),
            sub(&self.c, &self.b),
        ];
        let longest = sides
            .iter()
            .map(norm_sq)
            .max()
            .expect("three sides");
        (&area2 * &area2) / longest
    }
}

fn add(p: &RatPoint, v: &RatVector) -> RatPoint {
    (&p.0 + &v.0, &p.1 + &v.1)
}

fn sub(p: &RatPoint, q: &RatPoint) -> RatVector {
    (&p.0 - &q.0, &p.1 - &q.1)
}

fn cross(u: &RatVector, v: &RatVector) -> Rat {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn norm_sq(v: &RatVector) -> Rat {
    &v.0 * &v.0 + &v.1 * &v.1
}

fn is_zero_vec(v: &RatVector) -> bool {
    v.0.is_zero() && v.1.is_zero()
}

/// Exact collinearity of a point with a line through two points.
fn on_line(p: &RatPoint, l1: &RatPoint, l2: &RatPoint) -> bool {
    cross(&sub(l2, l1), &sub(p, l1)).is_zero()
}

/// Translation carrying `t1` to `t2`, if the triangles are translates.
pub fn translation_between(t1: &RationalTriangle, t2: &RationalTriangle) -> Result<RatVector> {
    let v = sub(&t2.a, &t1.a);
    if sub(&t2.b, &t1.b) != v || sub(&t2.c, &t1.c) != v {
        return Err(Error::NotATranslate);
    }
    Ok(v)
}

/// Checks whether one certificate incidence holds between the predecessor
/// `t1` and its translate `t2`; scans successor vertices first, then
/// predecessor vertices, in A, B, C order.
pub fn verify_wld_condition(
    t1: &RationalTriangle,
    t2: &RationalTriangle,
) -> Result<Option<WldCertificate>> {
    translation_between(t1, t2)?;
    for vertex in [Vertex::A, Vertex::B, Vertex::C] {
        if certificate_holds(
            t1,
            t2,
            &WldCertificate {
                side: CertificateSide::SuccessorVertexOnPredecessorSide,
                vertex,
            },
        ) {
            return Ok(Some(WldCertificate {
                side: CertificateSide::SuccessorVertexOnPredecessorSide,
                vertex,
            }));
        }
    }
    for vertex in [Vertex::A, Vertex::B, Vertex::C] {
        if certificate_holds(
            t1,
            t2,
            &WldCertificate {
                side: CertificateSide::PredecessorVertexOnSuccessorSide,
                vertex,
            },
        ) {
            return Ok(Some(WldCertificate {
                side: CertificateSide::PredecessorVertexOnSuccessorSide,
                vertex,
            }));
        }
    }
    Ok(None)
}

/// Exact test of one specific certificate between `t1` and its successor.
pub fn certificate_holds(
    t1: &RationalTriangle,
    t2: &RationalTriangle,
    cert: &WldCertificate,
) -> bool {
    let (u, v) = cert.vertex.others();
    match cert.side {
        CertificateSide::SuccessorVertexOnPredecessorSide => {
            on_line(t2.vertex(cert.vertex), t1.vertex(u), t1.vertex(v))
        }
        CertificateSide::PredecessorVertexOnSuccessorSide => {
            on_line(t1.vertex(cert.vertex), t2.vertex(u), t2.vertex(v))
        }
    }
}

/// Builds a verified chain from `base` to `base + target`.
pub fn build_chain(base: &RationalTriangle, target: &RatVector) -> Result<TranslationChain> {
    if base.signed_area2().is_zero() {
        return Err(Error::DegenerateTriangle);
    }
    let e1 = sub(&base.b, &base.a);
    let e2 = sub(&base.c, &base.a);
    let det = cross(&e1, &e2);
    // target = a*e1 + b*e2, exactly.
    let coef_a = cross(target, &e2) / &det;
    let coef_b = cross(&e1, target) / &det;

    let mut steps = Vec::new();
    let succ_on_pred = |vertex| WldCertificate {
        side: CertificateSide::SuccessorVertexOnPredecessorSide,
        vertex,
    };
    let pred_on_succ = |vertex| WldCertificate {
        side: CertificateSide::PredecessorVertexOnSuccessorSide,
        vertex,
    };

    // Whole-edge steps along e1: moving by +e1 puts the successor's A on the
    // predecessor's B (a point of side BC); by -e1 the successor's B lands on
    // the predecessor's A (a point of side AC).
    let whole_a = coef_a.trunc();
    let whole_b = coef_b.trunc();
    let n1: BigInt = whole_a.numer().clone();
    let n2: BigInt = whole_b.numer().clone();
    let mut push_repeats = |count: &BigInt, unit: &RatVector, cert: WldCertificate| {
        let mut k = count.magnitude().clone();
        let unit = if count.is_negative() {
            (-&unit.0, -&unit.1)
        } else {
            unit.clone()
        };
        while !k.is_zero() {
            steps.push(ChainStep {
                vector: unit.clone(),
                certificate: cert,
            });
            k -= 1u32;
        }
    };
    push_repeats(
        &n1,
        &e1,
        if n1.is_negative() {
            succ_on_pred(Vertex::B)
        } else {
            succ_on_pred(Vertex::A)
        },
    );
    push_repeats(
        &n2,
        &e2,
        if n2.is_negative() {
            succ_on_pred(Vertex::C)
        } else {
            succ_on_pred(Vertex::A)
        },
    );

    // Fractional residual (r1, r2) in edge coordinates, |r1|, |r2| < 1.
    let r1 = &coef_a - &whole_a;
    let r2 = &coef_b - &whole_b;
    if !r1.is_zero() || !r2.is_zero() {
        // Two exactly solved closing steps:
        //   step1 = 1*e1 + t*e2 keeps the predecessor's B on the moved AC;
        //   step2 = u*e1 + w*e2 with u + w = -1 keeps the predecessor's A on
        //   the moved BC. Solving step1 + step2 = (r1, r2) gives u = r1 - 1,
        //   w = -r1, t = r1 + r2.
        let one = Rat::from_integer(BigInt::one());
        let t = &r1 + &r2;
        let u = &r1 - &one;
        let w = -&r1;
        let step1 = (
            &e1.0 + &(&t * &e2.0),
            &e1.1 + &(&t * &e2.1),
        );
        let step2 = (
            &(&u * &e1.0) + &(&w * &e2.0),
            &(&u * &e1.1) + &(&w * &e2.1),
        );
        if !is_zero_vec(&step1) {
            steps.push(ChainStep {
                vector: step1,
                certificate: pred_on_succ(Vertex::B),
            });
        }
        if !is_zero_vec(&step2) {
            steps.push(ChainStep {
                vector: step2,
                certificate: pred_on_succ(Vertex::A),
            });
        }
    }

    let chain = TranslationChain {
        base: base.clone(),
        steps,
        total: target.clone(),
    };
    debug_assert!(verify_chain(&chain).ok);
    Ok(chain)
}

/// Documented bound on the chain length: 2*ceil(|target| / rho) + 2, with
/// rho the shortest height of the base triangle. Computed exactly from the
/// squared quantities.
pub fn length_bound(base: &RationalTriangle, target: &RatVector) -> u64 {
    let ratio_sq = norm_sq(target) / base.shortest_height_sq();
    let bound: BigInt = ceil_sqrt(&ratio_sq) * 2 + 2;
    u64::try_from(&bound).unwrap_or(u64::MAX)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub ok: bool,
    pub length: usize,
    /// First failure, as (step index, description); the total-mismatch
    /// failure uses the step count as its index.
    pub failure: Option<(usize, String)>,
}

/// Re-checks every chain invariant with exact arithmetic: nonzero steps,
/// translate congruence with parallel corresponding sides, the stored
/// certificate of every consecutive pair, and the step-sum against `total`.
pub fn verify_chain(chain: &TranslationChain) -> ChainReport {
    let fail = |index: usize, description: String| ChainReport {
        ok: false,
        length: chain.steps.len(),
        failure: Some((index, description)),
    };
    if chain.base.signed_area2().is_zero() {
        return fail(0, "base triangle is degenerate".into());
    }
    let mut current = chain.base.clone();
    for (i, step) in chain.steps.iter().enumerate() {
        if is_zero_vec(&step.vector) {
            return fail(i, "zero step vector".into());
        }
        let moved = current.translate(&step.vector);
        // Translates have parallel corresponding sides by construction;
        // recheck explicitly since that is the axial precondition.
        let parallel = cross(&sub(&moved.b, &moved.a), &sub(&current.b, &current.a)).is_zero()
            && cross(&sub(&moved.c, &moved.a), &sub(&current.c, &current.a)).is_zero()
            && cross(&sub(&moved.c, &moved.b), &sub(&current.c, &current.b)).is_zero();
        if !parallel {
            return fail(i, "corresponding sides not parallel".into());
        }
        if !certificate_holds(&current, &moved, &step.certificate) {
            return fail(
                i,
                format!(
                    "certificate broken: {} vertex {} not on the opposite side line",
                    match step.certificate.side {
                        CertificateSide::SuccessorVertexOnPredecessorSide => "successor",
                        CertificateSide::PredecessorVertexOnSuccessorSide => "predecessor",
                    },
                    step.certificate.vertex.name()
                ),
            );
        }
        current = moved;
    }
    let mut sum = (Rat::zero(), Rat::zero());
    for step in &chain.steps {
        sum = add(&sum, &step.vector);
    }
    if sum != chain.total {
        return fail(chain.steps.len(), "total mismatch".into());
    }
    ChainReport {
        ok: true,
        length: chain.steps.len(),
        failure: None,
    }
}

/// Key=value serialization for regression pinning.
pub fn chain_to_kv(chain: &TranslationChain) -> String {
    let mut out = String::new();
    let point = |p: &RatPoint| format!("{},{}", p.0, p.1);
    let _ = writeln!(out, "base.a={}", point(&chain.base.a));
    let _ = writeln!(out, "base.b={}", point(&chain.base.b));
    let _ = writeln!(out, "base.c={}", point(&chain.base.c));
    let _ = writeln!(out, "total={},{}", chain.total.0, chain.total.1);
    let _ = writeln!(out, "steps={}", chain.steps.len());
    for (i, step) in chain.steps.iter().enumerate() {
        let side = match step.certificate.side {
            CertificateSide::SuccessorVertexOnPredecessorSide => "succ",
            CertificateSide::PredecessorVertexOnSuccessorSide => "pred",
        };
        let _ = writeln!(
            out,
            "step.{}.vector={},{}",
            i, step.vector.0, step.vector.1
        );
        let _ = writeln!(
            out,
            "step.{}.cert={}:{}",
            i,
            side,
            step.certificate.vertex.name()
        );
    }
    out
}

/// Parses `"x,y"` as an exact rational pair.
pub fn parse_rat_pair(text: &str) -> Option<RatPoint> {
    let (x, y) = text.split_once(',')?;
    Some((parse_rat(x)?, parse_rat(y)?))
}

/// Parses `"ax,ay;bx,by;cx,cy"`.
pub fn parse_triangle(text: &str) -> Option<RationalTriangle> {
    let mut parts = text.split(';');
    let a = parse_rat_pair(parts.next()?)?;
    let b = parse_rat_pair(parts.next()?)?;
    let c = parse_rat_pair(parts.next()?)?;
    if parts.next().is_some() {
        return None;
    }
    RationalTriangle::new(a, b, c).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn point(x: i64, y: i64) -> RatPoint {
        (rat_int(x), rat_int(y))
    }

    fn right_triangle() -> RationalTriangle {
        RationalTriangle::new(point(0, 0), point(2, 0), point(0, 2)).unwrap()
    }

    #[test]
    fn translate_with_vertex_on_opposite_side_is_certified() {
        let t1 = right_triangle();
        let t2 = t1.translate(&(rat_int(-1), rat_int(-1)));
        // t1.A = (0,0) lies on the line through t2.B = (1,-1) and
        // t2.C = (-1,1), i.e. x + y = 0.
        let cert = verify_wld_condition(&t1, &t2).unwrap().unwrap();
        assert_eq!(cert.side, CertificateSide::PredecessorVertexOnSuccessorSide);
        assert_eq!(cert.vertex, Vertex::A);
    }

    #[test]
    fn distant_translate_has_no_certificate() {
        let t1 = right_triangle();
        let t2 = t1.translate(&(rat_int(100), rat_int(100)));
        // All six vertex/side incidences checked exactly; none holds.
        assert_eq!(verify_wld_condition(&t1, &t2).unwrap(), None);
    }

    #[test]
    fn rotated_copy_is_not_a_translate() {
        let t1 = right_triangle();
        let rotated = RationalTriangle::new(point(0, 0), point(0, 2), point(-2, 0)).unwrap();
        assert_eq!(
            verify_wld_condition(&t1, &rotated).unwrap_err(),
            Error::NotATranslate
        );
    }

    #[test]
    fn zero_target_gives_the_empty_chain() {
        let chain = build_chain(&right_triangle(), &(rat_int(0), rat_int(0))).unwrap();
        assert!(chain.steps.is_empty());
        assert!(verify_chain(&chain).ok);
    }

    #[test]
    fn degenerate_base_is_rejected() {
        assert_eq!(
            RationalTriangle::new(point(0, 0), point(1, 1), point(2, 2)).unwrap_err(),
            Error::DegenerateTriangle
        );
    }

    #[test]
    fn diagonal_target_builds_within_bound() {
        let base = right_triangle();
        let target = (rat_int(-5), rat_int(-5));
        let chain = build_chain(&base, &target).unwrap();
        let report = verify_chain(&chain);
        assert!(report.ok);
        // -5e - 5e over e1=(2,0), e2=(0,2): coefficients -5/2 each, so two
        // whole steps per axis plus two closing steps.
        assert_eq!(report.length, 6);
        assert!(report.length as u64 <= length_bound(&base, &target));
        // |target| = 5*sqrt(2), rho = sqrt(2): the bound is exactly 12.
        assert_eq!(length_bound(&base, &target), 12);
    }

    #[test]
    fn tampered_step_fails_at_that_step() {
        let base = right_triangle();
        let mut chain = build_chain(&base, &(rat_int(-5), rat_int(-5))).unwrap();
        // Step 2 moves by -e2 and certifies the moved C on the horizontal
        // side AB, so perturb the ordinate.
        let k = 2;
        chain.steps[k].vector.1 += rat(1, 1_000_000);
        let report = verify_chain(&chain);
        assert!(!report.ok);
        let (index, description) = report.failure.unwrap();
        assert_eq!(index, k);
        assert!(description.contains("certificate broken"));
    }

    #[test]
    fn tampered_total_reports_the_mismatch() {
        let base = right_triangle();
        let mut chain = build_chain(&base, &(rat_int(3), rat_int(1))).unwrap();
        chain.total.0 += rat(1, 7);
        let report = verify_chain(&chain);
        assert!(!report.ok);
        let (index, description) = report.failure.unwrap();
        assert_eq!(index, chain.steps.len());
        assert_eq!(description, "total mismatch");
    }

    #[test]
    fn building_is_translation_invariant() {
        let base = right_triangle();
        let target = (rat(7, 3), rat(-11, 4));
        let chain = build_chain(&base, &target).unwrap();
        for shift in [point(5, -2), point(-16, 9), (rat(1, 3), rat(2, 7))] {
            let moved = base.translate(&shift);
            let chain2 = build_chain(&moved, &target).unwrap();
            assert_eq!(chain.steps, chain2.steps);
        }
    }

    #[test]
    fn kv_serialization_is_stable() {
        let chain = build_chain(&right_triangle(), &(rat(5, 2), rat_int(1))).unwrap();
        let kv = chain_to_kv(&chain);
        assert!(kv.starts_with("base.a=0,0\n"));
        assert!(kv.contains(&format!("steps={}\n", chain.steps.len())));
        for line in kv.lines() {
            assert!(line.contains('='));
        }
    }

    #[test]
    fn triangle_parsing_round_trip() {
        let t = parse_triangle("0,0;2,0;0,2").unwrap();
        assert_eq!(t, right_triangle());
        assert!(parse_triangle("0,0;1,1;2,2").is_none());
        assert!(parse_triangle("0,0;1,1").is_none());
    }
}
