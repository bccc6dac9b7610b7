//! An exact laboratory for synthetic incidence geometry.
//!
//! The crate builds explicit plane models (the Desarguesian planes PG(2,q)
//! over small Galois fields, the rational Moulton plane, the Hall plane of
//! order 9) and decides twelve classical configuration statements on them by
//! exhaustive or seeded sampled checking. It records counterexample
//! witnesses that re-validate bit-exactly, checks every plane's truth vector
//! against the known implication lattice between the statements, and
//! constructs verified triangle translation chains in the rational Euclidean
//! plane. All arithmetic is exact; nothing here touches floating point.

pub mod chain;
pub mod check;
pub mod error;
mod eval;
mod generate;
mod geometry;
pub mod incidence;
pub mod instance;
pub mod lattice;
pub mod models;
pub mod plane;
pub mod rational;
pub mod statements;

pub use chain::{
    build_chain, chain_to_kv, length_bound, verify_chain, verify_wld_condition, ChainReport,
    ChainStep, RationalTriangle, TranslationChain, WldCertificate,
};
pub use check::{
    brute_force_enumerate, brute_force_with_bindings, check_statement, check_statement_opts,
    collect_instances, evaluate_instance, exhaustive_cost, find_counterexample,
    find_counterexample_opts, for_each_instance, make_line_instance, make_point_instance,
    BruteForceReport, CheckMode, CheckOptions, CheckReport, EvalOutcome, GenStats, Verdict,
};
pub use error::{Error, Result};
pub use incidence::{AxiomReport, AxiomViolation, IncidenceStructure};
pub use instance::{Instance, Slot, Witness};
pub use lattice::{
    check_lattice, consistency_kv, implication_edges, render_consistency, transitive_closure,
    truth_vector, truth_vector_opts, ConsistencyReport, ImplicationEdge, LatticeViolation,
    OpenProblemEvidence, TruthVector, VectorMode,
};
pub use models::{
    build_hall9, build_moulton, build_pg, export_incidence_matrix, library_names, library_plane,
    load_incidence_matrix, validate_quasifield, GaloisField, QuasifieldTable,
};
pub use plane::{FinitePlane, LineRef, PlaneHandle, PlaneId, PointRef};
pub use rational::Rat;
pub use statements::Statement;
