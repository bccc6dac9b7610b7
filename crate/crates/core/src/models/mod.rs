//! Concrete plane constructors and import/export.

pub mod gf;
pub mod hall;
pub mod matrix_io;
pub mod moulton;
pub mod pg;

use crate::error::Result;
use crate::plane::PlaneHandle;

pub use gf::{FieldElement, GaloisField};
pub use hall::{build_hall9, hall9_table, validate_quasifield, QuasifieldTable, QuasifieldViolation};
pub use matrix_io::{export_incidence_matrix, load_incidence_matrix};
pub use pg::{build_pg, HomogeneousPoint};

/// The projectively completed Moulton plane over exact rationals.
pub fn build_moulton() -> PlaneHandle {
    PlaneHandle::new_moulton("moulton")
}

/// Resolves a library plane by name: `pg<q>`, `moulton` or `hall9`.
pub fn library_plane(name: &str) -> Result<PlaneHandle> {
    match name {
        "moulton" => Ok(build_moulton()),
        "hall9" => Ok(build_hall9()?),
        _ => {
            if let Some(q) = name.strip_prefix("pg").and_then(|s| s.parse::<u64>().ok()) {
                build_pg(q)
            } else {
                Err(crate::error::Error::UnknownPlane(name.to_string()))
            }
        }
    }
}

/// Names of the shipped plane library, smallest first.
pub fn library_names() -> Vec<&'static str> {
    vec![
        "pg2", "pg3", "pg4", "pg5", "pg7", "pg8", "pg9", "pg11", "pg13", "pg16", "moulton",
        "hall9",
    ]
}
