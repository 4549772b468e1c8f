//! Gersten's presentation of `Out(F_n)`, verification of generator
//! assignments against it, and closure of finite generating sets.

mod closure;
mod expand;
mod group;
mod identities;
mod presentation;
pub mod subgroups;
mod verify;

pub use closure::{closure, ElementSet};
pub use expand::{expand_word, gersten_expansion};
pub use group::{EffectiveGroup, IntegerMatrixGroup, MatrixGroup, OuterGroup, SymmetricGroup};
pub use identities::{curated_identities, verify_identities, IdentityOutcome};
pub use presentation::{gersten_presentation, Presentation, Relator};
pub use verify::{evaluate, verify_homomorphism, RelatorOutcome, VerificationReport};

use thiserror::Error;

use crate::freegrp::FreeGroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GerstenError {
    #[error("Gersten's presentation needs rank at least 3, got {0}")]
    RankTooSmall(usize),
    #[error("no image assigned to generator {0}")]
    MissingAssignment(String),
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureOverflow { cap: usize },
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}
