//! Uniform plane access: one handle type over explicit finite structures and
//! the generative Moulton model.
//!
//! Point and line references are scoped to the plane that issued them; using
//! a reference against another plane is a hard [`Error::ForeignRef`], never
//! silent misbehavior. Planes are immutable after construction, so all
//! operations here are pure reads and safe to share across threads.

use crate::error::{Error, Result};
use crate::incidence::IncidenceStructure;
use crate::models::moulton::{self, MoultonLine, MoultonPoint};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

static NEXT_PLANE_ID: AtomicU64 = AtomicU64::new(1);

/// Process-unique identity of a constructed plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlaneId(u64);

impl PlaneId {
    fn fresh() -> Self {
        PlaneId(NEXT_PLANE_ID.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PointData {
    Idx(u32),
    Moulton(MoultonPoint),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LineData {
    Idx(u32),
    Moulton(MoultonLine),
}

/// A point of one particular plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointRef {
    pub(crate) plane: PlaneId,
    pub(crate) data: PointData,
}

/// A line of one particular plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineRef {
    pub(crate) plane: PlaneId,
    pub(crate) data: LineData,
}

impl PointRef {
    pub fn data(&self) -> &PointData {
        &self.data
    }

    /// Index within a finite plane, if applicable.
    pub fn index(&self) -> Option<u32> {
        match &self.data {
            PointData::Idx(i) => Some(*i),
            PointData::Moulton(_) => None,
        }
    }
}

impl LineRef {
    pub fn data(&self) -> &LineData {
        &self.data
    }

    pub fn index(&self) -> Option<u32> {
        match &self.data {
            LineData::Idx(i) => Some(*i),
            LineData::Moulton(_) => None,
        }
    }
}

/// A validated finite plane: incidence structure with tables plus optional
/// human-readable labels (homogeneous coordinates for PG planes, coordinate
/// pairs for the Hall plane).
#[derive(Debug, Clone)]
pub struct FinitePlane {
    pub(crate) structure: IncidenceStructure,
    pub(crate) point_labels: Option<Vec<String>>,
    pub(crate) line_labels: Option<Vec<String>>,
}

impl FinitePlane {
    pub fn new(
        mut structure: IncidenceStructure,
        point_labels: Option<Vec<String>>,
        line_labels: Option<Vec<String>>,
    ) -> Result<Self> {
        structure.build_tables()?;
        if let Some(labels) = &point_labels {
            if labels.len() != structure.n_points() as usize {
                return Err(Error::ConstructionFailed(
                    "point label count mismatch".into(),
                ));
            }
        }
        if let Some(labels) = &line_labels {
            if labels.len() != structure.n_lines() as usize {
                return Err(Error::ConstructionFailed("line label count mismatch".into()));
            }
        }
        Ok(FinitePlane {
            structure,
            point_labels,
            line_labels,
        })
    }

    pub fn structure(&self) -> &IncidenceStructure {
        &self.structure
    }
}

#[derive(Debug, Clone)]
pub enum PlaneKind {
    Finite(FinitePlane),
    Moulton,
}

/// Uniform handle over a plane model.
#[derive(Debug, Clone)]
pub struct PlaneHandle {
    id: PlaneId,
    descriptor: String,
    kind: PlaneKind,
}

impl PlaneHandle {
    pub fn from_finite(plane: FinitePlane, descriptor: impl Into<String>) -> Self {
        PlaneHandle {
            id: PlaneId::fresh(),
            descriptor: descriptor.into(),
            kind: PlaneKind::Finite(plane),
        }
    }

    pub(crate) fn new_moulton(descriptor: impl Into<String>) -> Self {
        PlaneHandle {
            id: PlaneId::fresh(),
            descriptor: descriptor.into(),
            kind: PlaneKind::Moulton,
        }
    }

    /// Wraps a raw structure: validates the axioms and precomputes tables.
    pub fn from_structure(structure: IncidenceStructure, descriptor: impl Into<String>) -> Result<Self> {
        Ok(Self::from_finite(FinitePlane::new(structure, None, None)?, descriptor))
    }

    pub fn id(&self) -> PlaneId {
        self.id
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn kind(&self) -> &PlaneKind {
        &self.kind
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, PlaneKind::Finite(_))
    }

    pub fn finite(&self) -> Option<&FinitePlane> {
        match &self.kind {
            PlaneKind::Finite(p) => Some(p),
            PlaneKind::Moulton => None,
        }
    }

    pub fn structure(&self) -> Option<&IncidenceStructure> {
        self.finite().map(|p| &p.structure)
    }

    pub fn n_points(&self) -> Option<u32> {
        self.structure().map(|s| s.n_points())
    }

    pub fn n_lines(&self) -> Option<u32> {
        self.structure().map(|s| s.n_lines())
    }

    pub fn point(&self, idx: u32) -> Result<PointRef> {
        match &self.kind {
            PlaneKind::Finite(p) if idx < p.structure.n_points() => Ok(PointRef {
                plane: self.id,
                data: PointData::Idx(idx),
            }),
            PlaneKind::Finite(_) => Err(Error::ForeignRef),
            PlaneKind::Moulton => Err(Error::ForeignRef),
        }
    }

    pub fn line(&self, idx: u32) -> Result<LineRef> {
        match &self.kind {
            PlaneKind::Finite(p) if idx < p.structure.n_lines() => Ok(LineRef {
                plane: self.id,
                data: LineData::Idx(idx),
            }),
            _ => Err(Error::ForeignRef),
        }
    }

    pub fn moulton_point(&self, p: MoultonPoint) -> Result<PointRef> {
        match &self.kind {
            PlaneKind::Moulton => Ok(PointRef {
                plane: self.id,
                data: PointData::Moulton(p),
            }),
            _ => Err(Error::ForeignRef),
        }
    }

    pub fn moulton_line(&self, l: MoultonLine) -> Result<LineRef> {
        match &self.kind {
            PlaneKind::Moulton => Ok(LineRef {
                plane: self.id,
                data: LineData::Moulton(l),
            }),
            _ => Err(Error::ForeignRef),
        }
    }

    fn own_point<'a>(&self, p: &'a PointRef) -> Result<&'a PointData> {
        if p.plane != self.id {
            return Err(Error::ForeignRef);
        }
        Ok(&p.data)
    }

    fn own_line<'a>(&self, l: &'a LineRef) -> Result<&'a LineData> {
        if l.plane != self.id {
            return Err(Error::ForeignRef);
        }
        Ok(&l.data)
    }

    /// The unique line through two distinct points.
    pub fn join(&self, p: &PointRef, q: &PointRef) -> Result<LineRef> {
        let (pd, qd) = (self.own_point(p)?, self.own_point(q)?);
        if pd == qd {
            return Err(Error::IdenticalPoints);
        }
        let data = match (&self.kind, pd, qd) {
            (PlaneKind::Finite(pl), PointData::Idx(a), PointData::Idx(b)) => {
                LineData::Idx(pl.structure.join(*a, *b).expect("distinct"))
            }
            (PlaneKind::Moulton, PointData::Moulton(a), PointData::Moulton(b)) => {
                LineData::Moulton(moulton::join(a, b)?)
            }
            _ => return Err(Error::ForeignRef),
        };
        Ok(LineRef {
            plane: self.id,
            data,
        })
    }

    /// The unique common point of two distinct lines.
    pub fn meet(&self, l: &LineRef, k: &LineRef) -> Result<PointRef> {
        let (ld, kd) = (self.own_line(l)?, self.own_line(k)?);
        if ld == kd {
            return Err(Error::IdenticalLines);
        }
        let data = match (&self.kind, ld, kd) {
            (PlaneKind::Finite(pl), LineData::Idx(a), LineData::Idx(b)) => {
                PointData::Idx(pl.structure.meet(*a, *b).expect("distinct"))
            }
            (PlaneKind::Moulton, LineData::Moulton(a), LineData::Moulton(b)) => {
                PointData::Moulton(moulton::meet(a, b)?)
            }
            _ => return Err(Error::ForeignRef),
        };
        Ok(PointRef {
            plane: self.id,
            data,
        })
    }

    pub fn incident(&self, p: &PointRef, l: &LineRef) -> Result<bool> {
        let (pd, ld) = (self.own_point(p)?, self.own_line(l)?);
        match (&self.kind, pd, ld) {
            (PlaneKind::Finite(pl), PointData::Idx(a), LineData::Idx(b)) => {
                Ok(pl.structure.incident(*a, *b))
            }
            (PlaneKind::Moulton, PointData::Moulton(a), LineData::Moulton(b)) => {
                Ok(moulton::incident(a, b))
            }
            _ => Err(Error::ForeignRef),
        }
    }

    /// True iff some line carries all three points. Duplicate arguments are
    /// collinear by convention; callers needing strictness pre-filter.
    pub fn collinear(&self, p: &PointRef, q: &PointRef, r: &PointRef) -> Result<bool> {
        let (pd, qd) = (self.own_point(p)?, self.own_point(q)?);
        let rd = self.own_point(r)?;
        if pd == qd || pd == rd || qd == rd {
            return Ok(true);
        }
        let l = self.join(p, q)?;
        self.incident(r, &l)
    }

    /// Canonical text form of a point: `p<idx>` on finite planes, exact
    /// coordinates on the Moulton plane.
    pub fn point_name(&self, p: &PointRef) -> String {
        match &p.data {
            PointData::Idx(i) => format!("p{}", i),
            PointData::Moulton(m) => m.to_string(),
        }
    }

    pub fn line_name(&self, l: &LineRef) -> String {
        match &l.data {
            LineData::Idx(i) => format!("l{}", i),
            LineData::Moulton(m) => m.to_string(),
        }
    }

    /// Optional human-readable label (homogeneous triple / coordinate pair).
    pub fn point_label(&self, p: &PointRef) -> Option<&str> {
        match (&self.kind, &p.data) {
            (PlaneKind::Finite(pl), PointData::Idx(i)) => pl
                .point_labels
                .as_ref()
                .map(|labels| labels[*i as usize].as_str()),
            _ => None,
        }
    }

    pub fn line_label(&self, l: &LineRef) -> Option<&str> {
        match (&self.kind, &l.data) {
            (PlaneKind::Finite(pl), LineData::Idx(i)) => pl
                .line_labels
                .as_ref()
                .map(|labels| labels[*i as usize].as_str()),
            _ => None,
        }
    }

    /// Finds a point by its label, e.g. `(1:0:2)` on a PG plane.
    pub fn point_by_label(&self, label: &str) -> Option<PointRef> {
        if let PlaneKind::Finite(pl) = &self.kind {
            let labels = pl.point_labels.as_ref()?;
            let idx = labels.iter().position(|l| l == label)?;
            return Some(PointRef {
                plane: self.id,
                data: PointData::Idx(idx as u32),
            });
        }
        None
    }

    /// Parses the canonical text form produced by [`Self::point_name`].
    pub fn parse_point(&self, text: &str) -> Result<PointRef> {
        let bad = || Error::Parse {
            line: 0,
            column: 0,
            message: format!("invalid point `{}`", text),
        };
        match &self.kind {
            PlaneKind::Finite(pl) => {
                let idx: u32 = text
                    .strip_prefix('p')
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(bad)?;
                if idx >= pl.structure.n_points() {
                    return Err(bad());
                }
                Ok(PointRef {
                    plane: self.id,
                    data: PointData::Idx(idx),
                })
            }
            PlaneKind::Moulton => {
                let p = moulton::parse_point(text).ok_or_else(bad)?;
                Ok(PointRef {
                    plane: self.id,
                    data: PointData::Moulton(p),
                })
            }
        }
    }

    pub fn parse_line(&self, text: &str) -> Result<LineRef> {
        let bad = || Error::Parse {
            line: 0,
            column: 0,
            message: format!("invalid line `{}`", text),
        };
        match &self.kind {
            PlaneKind::Finite(pl) => {
                let idx: u32 = text
                    .strip_prefix('l')
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(bad)?;
                if idx >= pl.structure.n_lines() {
                    return Err(bad());
                }
                Ok(LineRef {
                    plane: self.id,
                    data: LineData::Idx(idx),
                })
            }
            PlaneKind::Moulton => {
                let l = moulton::parse_line(text).ok_or_else(bad)?;
                Ok(LineRef {
                    plane: self.id,
                    data: LineData::Moulton(l),
                })
            }
        }
    }
}

impl fmt::Display for PlaneHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::pg::build_pg;

    #[test]
    fn cross_plane_refs_are_rejected() {
        let a = build_pg(2).unwrap();
        let b = build_pg(2).unwrap();
        let p = a.point(0).unwrap();
        let q = b.point(1).unwrap();
        assert_eq!(a.join(&p, &q).unwrap_err(), Error::ForeignRef);
        assert_eq!(b.join(&p, &q).unwrap_err(), Error::ForeignRef);
    }

    #[test]
    fn join_of_identical_points_fails() {
        let a = build_pg(2).unwrap();
        let p = a.point(3).unwrap();
        assert_eq!(a.join(&p, &p).unwrap_err(), Error::IdenticalPoints);
    }

    #[test]
    fn duplicate_arguments_are_collinear() {
        let a = build_pg(3).unwrap();
        let p = a.point(0).unwrap();
        let q = a.point(5).unwrap();
        assert!(a.collinear(&p, &p, &q).unwrap());
    }

    #[test]
    fn point_names_round_trip() {
        let a = build_pg(3).unwrap();
        let p = a.point(7).unwrap();
        assert_eq!(a.parse_point(&a.point_name(&p)).unwrap(), p);
        let m = crate::models::build_moulton();
        let mp = m
            .moulton_point(MoultonPoint::Affine(
                crate::rational::rat(-4, 3),
                crate::rational::rat(7, 2),
            ))
            .unwrap();
        assert_eq!(m.parse_point(&m.point_name(&mp)).unwrap(), mp);
    }
}
