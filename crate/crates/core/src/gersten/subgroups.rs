//! Generating sets of the finite subgroups of `Out(F_3)` used throughout.
//!
//! `σ_i4` below is the rank-3 generator `σ_{i(n+1)}`.

use crate::freegrp::{Generator, GeneratorWord};

fn words(texts: &[&str]) -> Vec<GeneratorWord> {
    texts
        .iter()
        .map(|t| GeneratorWord::parse(t).expect("static generator word"))
        .collect()
}

/// `S_3 = ⟨σ_12, σ_13⟩`.
pub fn s3_generators() -> Vec<GeneratorWord> {
    words(&["s12", "s13"])
}

/// `W_3 = ⟨ε_1, σ_12, σ_13⟩`, of order 48.
pub fn w3_generators() -> Vec<GeneratorWord> {
    words(&["e1", "s12", "s13"])
}

/// `S_4 = ⟨σ_12, σ_13, σ_14⟩`.
pub fn s4_generators() -> Vec<GeneratorWord> {
    words(&["s12", "s13", "s14"])
}

/// `G_3 = ⟨Δ, σ_12, σ_13, σ_14⟩ ≅ S_4 × Z/2`, of order 48.
pub fn g3_generators() -> Vec<GeneratorWord> {
    words(&["D", "s12", "s13", "s14"])
}

/// The non-identity elements of the Klein four-subgroup of `S_4`.
pub fn v4_elements() -> Vec<GeneratorWord> {
    words(&["s12 s34", "s13 s24", "s14 s23"])
}

pub fn delta() -> GeneratorWord {
    GeneratorWord::single(Generator::Delta)
}
