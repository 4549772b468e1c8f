//! Representations of `Out(F_3)` through the eyes of the subgroup `W_3`:
//! `ε`-eigenspaces `E_I`, level spaces, minimal diagrams, symmetric-group
//! characters, and criteria for factoring through `GL_3(Z)` or `Z/2`.

mod characters;
mod criteria;
mod decomposition;
mod diagram;
mod representation;

pub use characters::{
    sym_decompose, CharacterTable, ConjugacyClass, IrrepMultiplicities, SymmetricSubgroup,
};
pub use criteria::{check_diamond, factors_through_gl3, kill_v4_check, KillV4Report};
pub use decomposition::{epsilon_decomposition, level_dimensions, EigenDecomposition};
pub use diagram::{
    components_invariant, diagram_pushforward, minimal_diagram, minimal_diagram_in, Diagram,
};
pub use representation::{builtin_suite, Representation};

use thiserror::Error;

use crate::exactlin::LinAlgError;
use crate::freegrp::FreeGroupError;
use crate::gersten::GerstenError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("no image given for generator {0}")]
    MissingGenerator(String),
    #[error("image of {generator} is {rows}x{cols}, expected {expected}x{expected}")]
    Shape {
        generator: String,
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("image of {0} is singular")]
    Singular(String),
    #[error("assignment violates relators: {}", .0.join("; "))]
    NotAHomomorphism(Vec<String>),
    #[error("unknown built-in representation {0:?}")]
    UnknownBuiltin(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("structural check violated: {0}")]
    Violation(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error(transparent)]
    Gersten(#[from] GerstenError),
}
