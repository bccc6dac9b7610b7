//! Internal geometry abstraction the checking engine runs on.
//!
//! Two implementations: table-backed finite planes (points and lines are
//! indices) and the generative Moulton model (exact rational data). The
//! public [`crate::plane::PlaneHandle`] API wraps these with plane-scoped
//! reference checking; the engine works on the raw representations.

use crate::incidence::IncidenceStructure;
use crate::models::moulton::{self, MoultonLine, MoultonPoint};
use crate::rational::Rat;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub(crate) trait Geom {
    type Pt: Clone + PartialEq + std::fmt::Debug;
    type Ln: Clone + PartialEq + std::fmt::Debug;

    /// `None` iff the points coincide.
    fn join(&self, p: &Self::Pt, q: &Self::Pt) -> Option<Self::Ln>;
    /// `None` iff the lines coincide.
    fn meet(&self, l: &Self::Ln, m: &Self::Ln) -> Option<Self::Pt>;
    fn incident(&self, p: &Self::Pt, l: &Self::Ln) -> bool;

    /// Duplicate arguments count as collinear.
    fn collinear(&self, p: &Self::Pt, q: &Self::Pt, r: &Self::Pt) -> bool {
        if p == q || p == r || q == r {
            return true;
        }
        let l = self.join(p, q).expect("distinct points");
        self.incident(r, &l)
    }

    /// Seeded draw of a point suitable as a free parameter.
    fn sample_point(&self, rng: &mut ChaCha8Rng) -> Self::Pt;
    /// Seeded draw of a point on `l` (affine parameterization for the
    /// generative model, uniform index otherwise).
    fn sample_point_on(&self, l: &Self::Ln, rng: &mut ChaCha8Rng) -> Self::Pt;
    /// Seeded draw of a line through `p`.
    fn sample_line_through(&self, p: &Self::Pt, rng: &mut ChaCha8Rng) -> Self::Ln;
    /// Seeded draw of a line.
    fn sample_line(&self, rng: &mut ChaCha8Rng) -> Self::Ln;
}

/// Finite planes: everything is a table lookup.
#[derive(Clone, Copy)]
pub(crate) struct FinGeom<'a> {
    pub s: &'a IncidenceStructure,
}

impl<'a> Geom for FinGeom<'a> {
    type Pt = u32;
    type Ln = u32;

    #[inline]
    fn join(&self, p: &u32, q: &u32) -> Option<u32> {
        self.s.join(*p, *q)
    }

    #[inline]
    fn meet(&self, l: &u32, m: &u32) -> Option<u32> {
        self.s.meet(*l, *m)
    }

    #[inline]
    fn incident(&self, p: &u32, l: &u32) -> bool {
        self.s.incident(*p, *l)
    }

    fn sample_point(&self, rng: &mut ChaCha8Rng) -> u32 {
        rng.gen_range(0..self.s.n_points())
    }

    fn sample_point_on(&self, l: &u32, rng: &mut ChaCha8Rng) -> u32 {
        let pts = self.s.points_on_line(*l);
        pts[rng.gen_range(0..pts.len())]
    }

    fn sample_line_through(&self, p: &u32, rng: &mut ChaCha8Rng) -> u32 {
        let lines = self.s.lines_through_point(*p);
        lines[rng.gen_range(0..lines.len())]
    }

    fn sample_line(&self, rng: &mut ChaCha8Rng) -> u32 {
        rng.gen_range(0..self.s.n_lines())
    }
}

/// Bound on sampled rational coordinates: numerators in [-64, 64],
/// denominators in [1, 64]. Keeps exact arithmetic small.
const SAMPLE_BOUND: i64 = 64;

pub(crate) fn sample_rat(rng: &mut ChaCha8Rng) -> Rat {
    let numer = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
    let denom = rng.gen_range(1..=SAMPLE_BOUND);
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// The generative Moulton model.
#[derive(Clone, Copy)]
pub(crate) struct MoultonGeom;

impl Geom for MoultonGeom {
    type Pt = MoultonPoint;
    type Ln = MoultonLine;

    fn join(&self, p: &MoultonPoint, q: &MoultonPoint) -> Option<MoultonLine> {
        moulton::join(p, q).ok()
    }

    fn meet(&self, l: &MoultonLine, m: &MoultonLine) -> Option<MoultonPoint> {
        moulton::meet(l, m).ok()
    }

    fn incident(&self, p: &MoultonPoint, l: &MoultonLine) -> bool {
        moulton::incident(p, l)
    }

    fn sample_point(&self, rng: &mut ChaCha8Rng) -> MoultonPoint {
        MoultonPoint::Affine(sample_rat(rng), sample_rat(rng))
    }

    fn sample_point_on(&self, l: &MoultonLine, rng: &mut ChaCha8Rng) -> MoultonPoint {
        match l {
            MoultonLine::AtInfinity => {
                MoultonPoint::Ideal(moulton::Direction::Slope(sample_rat(rng)))
            }
            _ => moulton::point_at(l, &sample_rat(rng)).expect("affine line"),
        }
    }

    fn sample_line_through(&self, p: &MoultonPoint, rng: &mut ChaCha8Rng) -> MoultonLine {
        // Join with a fresh sample; retry on coincidence.
        for _ in 0..64 {
            let q = self.sample_point(rng);
            if &q != p {
                if let Ok(l) = moulton::join(p, &q) {
                    return l;
                }
            }
        }
        unreachable!("sampling a second distinct point cannot keep failing")
    }

    fn sample_line(&self, rng: &mut ChaCha8Rng) -> MoultonLine {
        let p = self.sample_point(rng);
        self.sample_line_through(&p, rng)
    }
}
