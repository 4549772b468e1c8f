//! Free groups `F_n`, their named automorphisms, and outer equality.
//!
//! Composition follows the left-action convention: `(a ∘ b)(w) = a(b(w))`,
//! and a generator word `x y` denotes `x ∘ y`.

mod automorphism;
mod generator;
mod inner;
mod word;

pub use automorphism::{make_generator, FreeAutomorphism};
pub use generator::{Generator, GeneratorWord};
pub use inner::{inner_witness, outer_equal, OuterElement};
pub use word::{FreeWord, Letter};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("invalid generator {generator} for rank {rank}: {reason}")]
    InvalidGenerator {
        generator: String,
        rank: usize,
        reason: String,
    },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("{0}")]
    Parse(String),
}
