//! The twelve configuration statements.
//!
//! Each statement fixes a named-point (or named-line) schema, a hypothesis
//! list and a conclusion. The Desargues family binds S, A, B, C, A', B', C';
//! the Pappus family binds A, B, C, A', B', C' plus a perspector S for the
//! perspective forms; the Brianchon dual binds six lines.

use crate::error::Error;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// D: triangles perspective from a point are perspective from a line.
    Desargues,
    /// HD: as D, with the center S required off the axis XY.
    HomologousDesargues,
    /// LD: as D, with S required on the axis XY.
    LittleDesargues,
    /// wLD: as LD, with A', B, C collinear.
    WeakLittleDesargues,
    /// cwLD: S = AA' ^ BB', S,X,Y,Z collinear and A',B,C collinear force S
    /// onto CC'.
    ConverseWeakLittleDesargues,
    /// wD: perspective from S with A', B, C collinear forces X, Y, Z
    /// collinear.
    WeakDesargues,
    /// cD: perspective from S with A, A', Z collinear forces X, Y, Z
    /// collinear.
    CollapsingDesargues,
    /// P: two collinear triples have collinear cross-join meets.
    Pappus,
    /// PB: the line-dual of P (two concurrent line triples).
    PappusBrianchon,
    /// pP: P restricted to triples in perspective from a point S.
    PerspectivePappus,
    /// sPP: the perspective form concluding that M, C'', A'' are collinear.
    StrongPerspectivePappus,
    /// LP: P restricted by the hypothesis that M, C'', A'' are collinear.
    LittlePappus,
}

/// Hypothesis clauses, used to document each statement and to assert the
/// structural nesting of the restricted forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// AA', BB', CC' pass through the common center S.
    PerspectiveFromCenter,
    /// S = AA' ^ BB' only (CC' through S is not assumed).
    CenterOfTwoLines,
    /// S, X, Y collinear.
    CenterOnAxis,
    /// S, X, Y not collinear.
    CenterOffAxis,
    /// S, X, Y, Z collinear.
    FullAxisThroughCenter,
    /// A', B, C collinear.
    CrossTripleCollinear,
    /// A, A', Z collinear.
    VertexLineThroughZ,
    /// A, B, C on one line; A', B', C' on another.
    TwoCarrierLines,
    /// S, A, A' / S, B, B' / S, C, C' collinear with S off both carriers.
    PerspectorTriples,
    /// M, C'', A'' collinear.
    CrossAxisThroughM,
    /// a, b, c concurrent; a', b', c' concurrent (line dual).
    TwoCarrierPencils,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemaKind {
    /// Named points S, A, B, C, A', B', C'.
    CenteredTriangles,
    /// Named points A, B, C, A', B', C'.
    TwoTriples,
    /// Named points S, A, B, C, A', B', C' (perspector + two triples).
    PerspectorTriples,
    /// Named lines a, b, c, a', b', c'.
    TwoLineTriples,
}

impl Statement {
    pub const ALL: [Statement; 12] = [
        Statement::Desargues,
        Statement::HomologousDesargues,
        Statement::LittleDesargues,
        Statement::WeakLittleDesargues,
        Statement::ConverseWeakLittleDesargues,
        Statement::WeakDesargues,
        Statement::CollapsingDesargues,
        Statement::Pappus,
        Statement::PappusBrianchon,
        Statement::PerspectivePappus,
        Statement::StrongPerspectivePappus,
        Statement::LittlePappus,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Statement::Desargues => "D",
            Statement::HomologousDesargues => "HD",
            Statement::LittleDesargues => "LD",
            Statement::WeakLittleDesargues => "wLD",
            Statement::ConverseWeakLittleDesargues => "cwLD",
            Statement::WeakDesargues => "wD",
            Statement::CollapsingDesargues => "cD",
            Statement::Pappus => "P",
            Statement::PappusBrianchon => "PB",
            Statement::PerspectivePappus => "pP",
            Statement::StrongPerspectivePappus => "sPP",
            Statement::LittlePappus => "LP",
        }
    }

    pub fn schema(&self) -> SchemaKind {
        match self {
            Statement::Desargues
            | Statement::HomologousDesargues
            | Statement::LittleDesargues
            | Statement::WeakLittleDesargues
            | Statement::ConverseWeakLittleDesargues
            | Statement::WeakDesargues
            | Statement::CollapsingDesargues => SchemaKind::CenteredTriangles,
            Statement::Pappus | Statement::LittlePappus => SchemaKind::TwoTriples,
            Statement::PerspectivePappus | Statement::StrongPerspectivePappus => {
                SchemaKind::PerspectorTriples
            }
            Statement::PappusBrianchon => SchemaKind::TwoLineTriples,
        }
    }

    /// Names of the bound slots, in canonical order.
    pub fn slot_names(&self) -> &'static [&'static str] {
        match self.schema() {
            SchemaKind::CenteredTriangles | SchemaKind::PerspectorTriples => {
                &["S", "A", "B", "C", "A'", "B'", "C'"]
            }
            SchemaKind::TwoTriples => &["A", "B", "C", "A'", "B'", "C'"],
            SchemaKind::TwoLineTriples => &["a", "b", "c", "a'", "b'", "c'"],
        }
    }

    pub fn hypotheses(&self) -> &'static [Hypothesis] {
        use Hypothesis::*;
        match self {
            Statement::Desargues => &[PerspectiveFromCenter],
            Statement::HomologousDesargues => &[PerspectiveFromCenter, CenterOffAxis],
            Statement::LittleDesargues => &[PerspectiveFromCenter, CenterOnAxis],
            Statement::WeakLittleDesargues => {
                &[PerspectiveFromCenter, CenterOnAxis, CrossTripleCollinear]
            }
            Statement::ConverseWeakLittleDesargues => {
                &[CenterOfTwoLines, FullAxisThroughCenter, CrossTripleCollinear]
            }
            Statement::WeakDesargues => &[PerspectiveFromCenter, CrossTripleCollinear],
            Statement::CollapsingDesargues => &[PerspectiveFromCenter, VertexLineThroughZ],
            Statement::Pappus => &[TwoCarrierLines],
            Statement::PappusBrianchon => &[TwoCarrierPencils],
            Statement::PerspectivePappus => &[TwoCarrierLines, PerspectorTriples],
            Statement::StrongPerspectivePappus => &[TwoCarrierLines, PerspectorTriples],
            Statement::LittlePappus => &[TwoCarrierLines, CrossAxisThroughM],
        }
    }

    pub fn conclusion(&self) -> &'static str {
        match self {
            Statement::Desargues | Statement::WeakDesargues | Statement::CollapsingDesargues => {
                "X, Y, Z collinear"
            }
            Statement::HomologousDesargues
            | Statement::LittleDesargues
            | Statement::WeakLittleDesargues => "Z incident with the axis XY",
            Statement::ConverseWeakLittleDesargues => "S incident with the line CC'",
            Statement::Pappus | Statement::PerspectivePappus | Statement::LittlePappus => {
                "A'', B'', C'' collinear"
            }
            Statement::StrongPerspectivePappus => "M, C'', A'' collinear",
            Statement::PappusBrianchon => "a'', b'', c'' concurrent",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL
            .iter()
            .copied()
            .find(|st| st.tag() == s)
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_parse_and_print() {
        for st in Statement::ALL {
            assert_eq!(st.tag().parse::<Statement>().unwrap(), st);
        }
        assert!(matches!(
            "XYZ".parse::<Statement>(),
            Err(Error::UnknownStatement(_))
        ));
    }

    #[test]
    fn restricted_forms_nest_structurally() {
        // Every wLD instance is an LD instance is a D instance.
        let d = Statement::Desargues.hypotheses();
        let ld = Statement::LittleDesargues.hypotheses();
        let wld = Statement::WeakLittleDesargues.hypotheses();
        assert!(d.iter().all(|h| ld.contains(h)));
        assert!(ld.iter().all(|h| wld.contains(h)));
        // And wD instances are D instances.
        assert!(d
            .iter()
            .all(|h| Statement::WeakDesargues.hypotheses().contains(h)));
    }

    #[test]
    fn schemas_have_expected_arity() {
        for st in Statement::ALL {
            let n = st.slot_names().len();
            match st.schema() {
                SchemaKind::TwoTriples | SchemaKind::TwoLineTriples => assert_eq!(n, 6),
                _ => assert_eq!(n, 7),
            }
        }
    }
}
