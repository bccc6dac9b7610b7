//! Public instances and witnesses, plus their line-oriented key=value
//! serialization used for regression pinning.

use crate::error::{Error, Result};
use crate::plane::{LineRef, PlaneHandle, PointRef};
use crate::statements::{SchemaKind, Statement};
use std::fmt::Write as _;

/// One named slot of an instance: a point or a line of the owning plane.
#[derive(Debug, Clone, PartialEq)]
pub enum Slot {
    Point(PointRef),
    Line(LineRef),
}

/// A hypothesis-satisfying assignment of a statement's named slots, together
/// with the derived auxiliary elements and the recipe that produced each.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub statement: Statement,
    /// Bound slots in schema order.
    pub bound: Vec<(&'static str, Slot)>,
    /// Derived elements: name, join/meet recipe, value.
    pub derived: Vec<(&'static str, &'static str, Slot)>,
}

impl Instance {
    /// Indices of the bound slots on a finite plane, in schema order.
    pub fn bound_indices(&self) -> Option<Vec<u32>> {
        self.bound
            .iter()
            .map(|(_, slot)| match slot {
                Slot::Point(p) => p.index(),
                Slot::Line(l) => l.index(),
            })
            .collect()
    }
}

/// A recorded conclusion failure: re-evaluating the instance on its plane
/// reproduces the failure bit-exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub plane: String,
    pub instance: Instance,
    pub failed_conclusion: String,
}

fn slot_name(plane: &PlaneHandle, slot: &Slot) -> String {
    match slot {
        Slot::Point(p) => plane.point_name(p),
        Slot::Line(l) => plane.line_name(l),
    }
}

fn slot_key(slot: &Slot) -> &'static str {
    match slot {
        Slot::Point(_) => "point",
        Slot::Line(_) => "line",
    }
}

impl Witness {
    /// Key=value form. Bound slots come first (schema order), then derived
    /// elements, then the failed conclusion. Labels, when the plane carries
    /// them, are included as extra informative lines.
    pub fn to_kv(&self, plane: &PlaneHandle) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "plane={}", self.plane);
        let _ = writeln!(out, "statement={}", self.statement_tag());
        for (name, slot) in &self.instance.bound {
            let _ = writeln!(out, "{}.{}={}", slot_key(slot), name, slot_name(plane, slot));
            if let Slot::Point(p) = slot {
                if let Some(label) = plane.point_label(p) {
                    let _ = writeln!(out, "label.{}={}", name, label);
                }
            }
            if let Slot::Line(l) = slot {
                if let Some(label) = plane.line_label(l) {
                    let _ = writeln!(out, "label.{}={}", name, label);
                }
            }
        }
        for (name, recipe, slot) in &self.instance.derived {
            let _ = writeln!(
                out,
                "derived.{}.{}={}",
                slot_key(slot),
                name,
                slot_name(plane, slot)
            );
            let _ = writeln!(out, "recipe.{}={}", name, recipe);
        }
        let _ = writeln!(out, "failed={}", self.failed_conclusion);
        out
    }

    fn statement_tag(&self) -> &'static str {
        self.instance.statement.tag()
    }

    /// Parses the output of [`Self::to_kv`] back against the owning plane.
    /// Only the bound slots and the failure line are authoritative; derived
    /// elements are recomputed on re-evaluation.
    pub fn parse_kv(plane: &PlaneHandle, text: &str) -> Result<Witness> {
        let mut plane_name = None;
        let mut statement = None;
        let mut bound: Vec<(String, String, bool)> = Vec::new();
        let mut failed = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: 0,
                column: 0,
                message: format!("missing `=` in `{line}`"),
            })?;
            match key {
                "plane" => plane_name = Some(value.to_string()),
                "statement" => statement = Some(value.parse::<Statement>()?),
                "failed" => failed = Some(value.to_string()),
                _ => {
                    if let Some(rest) = key.strip_prefix("point.") {
                        bound.push((rest.to_string(), value.to_string(), true));
                    } else if let Some(rest) = key.strip_prefix("line.") {
                        bound.push((rest.to_string(), value.to_string(), false));
                    }
                    // label.*, derived.*, recipe.* are informative only.
                }
            }
        }
        let statement = statement.ok_or_else(|| Error::Parse {
            line: 0,
            column: 0,
            message: "missing statement".into(),
        })?;
        let names = statement.slot_names();
        if bound.len() != names.len() {
            return Err(Error::SchemaMismatch);
        }
        let mut slots = Vec::with_capacity(names.len());
        for (expected, (name, value, is_point)) in names.iter().zip(&bound) {
            if name != expected {
                return Err(Error::SchemaMismatch);
            }
            let slot = if *is_point {
                Slot::Point(plane.parse_point(value)?)
            } else {
                Slot::Line(plane.parse_line(value)?)
            };
            slots.push((*expected, slot));
        }
        let wants_lines = statement.schema() == SchemaKind::TwoLineTriples;
        for (_, slot) in &slots {
            match (wants_lines, slot) {
                (true, Slot::Line(_)) | (false, Slot::Point(_)) => {}
                _ => return Err(Error::SchemaMismatch),
            }
        }
        Ok(Witness {
            plane: plane_name.unwrap_or_else(|| plane.descriptor().to_string()),
            instance: Instance {
                statement,
                bound: slots,
                derived: Vec::new(),
            },
            failed_conclusion: failed.ok_or_else(|| Error::Parse {
                line: 0,
                column: 0,
                message: "missing failed conclusion".into(),
            })?,
        })
    }
}
