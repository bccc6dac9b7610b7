//! The Moulton plane over exact rationals.
//!
//! Affine points are rational pairs; the projective completion adds one ideal
//! point per direction class and the line at infinity. Lines with negative
//! slope bend at the y-axis: the left piece (x <= 0) has slope `m`, the right
//! piece (x > 0) has slope `2m`. Lines with slope >= 0 and vertical lines are
//! straight. The ideal point of a bent line is keyed by its left slope, so
//! bent lines of equal `m` form one parallel class.
//!
//! Every operation is exact; no tolerances anywhere.

use crate::error::{Error, Result};
use crate::rational::{parse_rat, Rat};
use num_traits::Signed;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// Direction class of all lines with left slope `m` (straight for
    /// m >= 0, bent for m < 0).
    Slope(Rat),
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoultonPoint {
    Affine(Rat, Rat),
    Ideal(Direction),
}

impl MoultonPoint {
    pub fn affine(x: Rat, y: Rat) -> Self {
        MoultonPoint::Affine(x, y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoultonLine {
    /// x = x0.
    Vertical(Rat),
    /// y = m*x + b with m >= 0.
    Ordinary { m: Rat, b: Rat },
    /// y = m*x + b for x <= 0 and y = 2m*x + b for x > 0, with m < 0.
    Bent { m: Rat, b: Rat },
    AtInfinity,
}

impl MoultonLine {
    pub fn ordinary(m: Rat, b: Rat) -> Self {
        assert!(!m.is_negative(), "ordinary lines need slope >= 0");
        MoultonLine::Ordinary { m, b }
    }

    pub fn bent(m: Rat, b: Rat) -> Self {
        assert!(m.is_negative(), "bent lines need slope < 0");
        MoultonLine::Bent { m, b }
    }

    pub fn direction(&self) -> Option<Direction> {
        match self {
            MoultonLine::Vertical(_) => Some(Direction::Vertical),
            MoultonLine::Ordinary { m, .. } | MoultonLine::Bent { m, .. } => {
                Some(Direction::Slope(m.clone()))
            }
            MoultonLine::AtInfinity => None,
        }
    }

    /// Ordinate of the (possibly bent) graph at abscissa `x`.
    fn y_at(&self, x: &Rat) -> Option<Rat> {
        match self {
            MoultonLine::Ordinary { m, b } => Some(m * x + b),
            MoultonLine::Bent { m, b } => {
                if x.is_positive() {
                    Some(Rat::from_integer(2.into()) * m * x + b)
                } else {
                    Some(m * x + b)
                }
            }
            _ => None,
        }
    }
}

pub fn incident(p: &MoultonPoint, l: &MoultonLine) -> bool {
    match (p, l) {
        (MoultonPoint::Affine(x, _), MoultonLine::Vertical(x0)) => x == x0,
        (MoultonPoint::Affine(x, y), MoultonLine::Ordinary { .. })
        | (MoultonPoint::Affine(x, y), MoultonLine::Bent { .. }) => {
            l.y_at(x).as_ref() == Some(y)
        }
        (MoultonPoint::Affine(..), MoultonLine::AtInfinity) => false,
        (MoultonPoint::Ideal(_), MoultonLine::AtInfinity) => true,
        (MoultonPoint::Ideal(d), _) => l.direction().as_ref() == Some(d),
    }
}

/// The unique Moulton line through two distinct points.
///
/// Case analysis for two affine points with negative naive slope: both on one
/// closed side of the y-axis fit the governing piece directly; a straddling
/// pair solves the two-piece system y1 = m*x1 + b, y2 = 2m*x2 + b.
pub fn join(p: &MoultonPoint, q: &MoultonPoint) -> Result<MoultonLine> {
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    use MoultonPoint::*;
    match (p, q) {
        (Ideal(_), Ideal(_)) => Ok(MoultonLine::AtInfinity),
        (Affine(x, y), Ideal(d)) | (Ideal(d), Affine(x, y)) => Ok(line_through_direction(x, y, d)),
        (Affine(x1, y1), Affine(x2, y2)) => {
            if x1 == x2 {
                return Ok(MoultonLine::Vertical(x1.clone()));
            }
            let naive = (y2 - y1) / (x2 - x1);
            if !naive.is_negative() {
                let b = y1 - &naive * x1;
                return Ok(MoultonLine::Ordinary { m: naive, b });
            }
            // Negative slope. Closed-side test: a point on the axis belongs
            // to both sides, so only strict straddling solves the two-piece
            // system.
            let left = !x1.is_positive() && !x2.is_positive();
            let right = !x1.is_negative() && !x2.is_negative();
            if left {
                let b = y1 - &naive * x1;
                Ok(MoultonLine::Bent { m: naive, b })
            } else if right {
                let m = naive / Rat::from_integer(2.into());
                let b = y1 - Rat::from_integer(2.into()) * &m * x1;
                Ok(MoultonLine::Bent { m, b })
            } else {
                // One strictly left, one strictly right: orient so that
                // xl < 0 < xr and solve yl = m*xl + b, yr = 2m*xr + b.
                let (xl, yl, xr, yr) = if x1.is_negative() {
                    (x1, y1, x2, y2)
                } else {
                    (x2, y2, x1, y1)
                };
                let m = (yl - yr) / (xl - Rat::from_integer(2.into()) * xr);
                debug_assert!(m.is_negative());
                let b = yl - &m * xl;
                Ok(MoultonLine::Bent { m, b })
            }
        }
    }
}

fn line_through_direction(x: &Rat, y: &Rat, d: &Direction) -> MoultonLine {
    match d {
        Direction::Vertical => MoultonLine::Vertical(x.clone()),
        Direction::Slope(m) if !m.is_negative() => MoultonLine::Ordinary {
            m: m.clone(),
            b: y - m * x,
        },
        Direction::Slope(m) => {
            let b = if x.is_positive() {
                y - Rat::from_integer(2.into()) * m * x
            } else {
                y - m * x
            };
            MoultonLine::Bent { m: m.clone(), b }
        }
    }
}

/// The unique common point of two distinct Moulton lines.
pub fn meet(l: &MoultonLine, k: &MoultonLine) -> Result<MoultonPoint> {
    if l == k {
        return Err(Error::IdenticalLines);
    }
    use MoultonLine::*;
    match (l, k) {
        (AtInfinity, other) | (other, AtInfinity) => Ok(MoultonPoint::Ideal(
            other.direction().expect("other line is affine"),
        )),
        (Vertical(_), Vertical(_)) => Ok(MoultonPoint::Ideal(Direction::Vertical)),
        (Vertical(x0), other) | (other, Vertical(x0)) => {
            let y = other.y_at(x0).expect("non-vertical");
            Ok(MoultonPoint::Affine(x0.clone(), y))
        }
        _ => {
            // Two graphs. Parallel iff same direction class.
            if l.direction() == k.direction() {
                return Ok(MoultonPoint::Ideal(l.direction().unwrap()));
            }
            // The difference of the two graphs is piecewise linear and
            // strictly monotone, so exactly one of the two piece-candidates
            // lands on its own side.
            let (m1, b1) = slope_intercept(l);
            let (m2, b2) = slope_intercept(k);
            let left_x = solve_piece(&m1, &b1, &m2, &b2, false);
            if let Some(x) = left_x {
                if !x.is_positive() {
                    let y = l.y_at(&x).unwrap();
                    return Ok(MoultonPoint::Affine(x, y));
                }
            }
            let right_x = solve_piece(&m1, &b1, &m2, &b2, true);
            let x = right_x.expect("monotone difference must cross on one side");
            assert!(x.is_positive(), "exactly one side admits the crossing");
            let y = l.y_at(&x).unwrap();
            Ok(MoultonPoint::Affine(x, y))
        }
    }
}

fn slope_intercept(l: &MoultonLine) -> (Rat, Rat) {
    match l {
        MoultonLine::Ordinary { m, b } | MoultonLine::Bent { m, b } => (m.clone(), b.clone()),
        _ => unreachable!("slope_intercept on graph lines only"),
    }
}

/// Intersection abscissa of the two indicated pieces, `None` if parallel.
fn solve_piece(m1: &Rat, b1: &Rat, m2: &Rat, b2: &Rat, right: bool) -> Option<Rat> {
    let two = Rat::from_integer(2.into());
    let eff1 = if right && m1.is_negative() { m1 * &two } else { m1.clone() };
    let eff2 = if right && m2.is_negative() { m2 * &two } else { m2.clone() };
    if eff1 == eff2 {
        return None;
    }
    Some((b2 - b1) / (eff1 - eff2))
}

/// Affine point of `l` at parameter `t` (abscissa for graphs, ordinate for
/// vertical lines). Used by samplers to draw points on a line.
pub fn point_at(l: &MoultonLine, t: &Rat) -> Option<MoultonPoint> {
    match l {
        MoultonLine::Vertical(x0) => Some(MoultonPoint::Affine(x0.clone(), t.clone())),
        MoultonLine::Ordinary { .. } | MoultonLine::Bent { .. } => {
            Some(MoultonPoint::Affine(t.clone(), l.y_at(t).unwrap()))
        }
        MoultonLine::AtInfinity => None,
    }
}

impl fmt::Display for MoultonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoultonPoint::Affine(x, y) => write!(f, "({},{})", x, y),
            MoultonPoint::Ideal(Direction::Slope(m)) => write!(f, "ideal({})", m),
            MoultonPoint::Ideal(Direction::Vertical) => write!(f, "ideal(vertical)"),
        }
    }
}

impl fmt::Display for MoultonLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoultonLine::Vertical(x0) => write!(f, "vertical({})", x0),
            MoultonLine::Ordinary { m, b } => write!(f, "ordinary({},{})", m, b),
            MoultonLine::Bent { m, b } => write!(f, "bent({},{})", m, b),
            MoultonLine::AtInfinity => write!(f, "infinity"),
        }
    }
}

pub fn parse_point(text: &str) -> Option<MoultonPoint> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix("ideal(").and_then(|s| s.strip_suffix(')')) {
        if inner == "vertical" {
            return Some(MoultonPoint::Ideal(Direction::Vertical));
        }
        return Some(MoultonPoint::Ideal(Direction::Slope(parse_rat(inner)?)));
    }
    let inner = text.strip_prefix('(')?.strip_suffix(')')?;
    let (x, y) = inner.split_once(',')?;
    Some(MoultonPoint::Affine(parse_rat(x)?, parse_rat(y)?))
}

pub fn parse_line(text: &str) -> Option<MoultonLine> {
    let text = text.trim();
    if text == "infinity" {
        return Some(MoultonLine::AtInfinity);
    }
    if let Some(inner) = text.strip_prefix("vertical(").and_then(|s| s.strip_suffix(')')) {
        return Some(MoultonLine::Vertical(parse_rat(inner)?));
    }
    let (kind, rest) = text.split_once('(')?;
    let inner = rest.strip_suffix(')')?;
    let (m, b) = inner.split_once(',')?;
    let (m, b) = (parse_rat(m)?, parse_rat(b)?);
    match kind {
        "ordinary" if !m.is_negative() => Some(MoultonLine::Ordinary { m, b }),
        "bent" if m.is_negative() => Some(MoultonLine::Bent { m, b }),
        _ => None,
    }
}
