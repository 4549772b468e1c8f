//! Finite graphs, graph morphisms and finite group actions on graphs.

mod action;
pub mod builders;
mod casetable;
mod graph;
mod morphism;
mod ops;

pub use action::{GroupActionOnGraph, ACTION_CAP};
pub use casetable::{case_table_csv, case_table_json, enumerate_case_table, CaseRow};
pub use graph::{Edge, FiniteGraph};
pub use morphism::{EdgeImage, GraphMorphism};
pub use ops::{
    collapse, is_admissible, is_admissible_brute_force, orbit_collapse, OrbitCollapse,
    BRUTE_FORCE_EDGE_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("group action exceeds {0} elements")]
    ActionTooLarge(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
