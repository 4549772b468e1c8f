use serde::Serialize;

use super::GerstenError;
use crate::freegrp::{outer_equal, FreeAutomorphism, Generator, GeneratorWord};

/// A claimed equality in `Out(F_n)` and whether it holds.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityOutcome {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// The identities among named generators used throughout: `ε_1 σ_1(n+1)`
/// as a product of `ρ`s, `ε_i σ_ij = λ_ij λ_ji⁻¹ ρ_ij` for every ordered pair,
/// a conjugate of `λ_21` and a commutator of `ρ`s. Needs rank at least 3.
pub fn curated_identities(
    rank: usize,
) -> Result<Vec<(String, GeneratorWord, GeneratorWord)>, GerstenError> {
    if rank < 3 {
        return Err(GerstenError::RankTooSmall(rank));
    }
    let w = |g: Generator| GeneratorWord::single(g);
    let inv = |g: Generator| GeneratorWord::power(g, -1);
    let mut out = Vec::new();
    let rhos = GeneratorWord::product(
        (2..=rank)
            .rev()
            .map(|j| w(Generator::Rho(j, 1)))
            .collect::<Vec<_>>()
            .iter(),
    );
    out.push((
        format!("e1 s1{} = product of r_j1", rank + 1),
        GeneratorWord::product([&w(Generator::Epsilon(1)), &w(Generator::Sigma(1, rank + 1))]),
        rhos,
    ));
    for i in 1..=rank {
        for j in 1..=rank {
            if i != j {
                out.push((
                    format!("e{i} s{i}{j} = l{i}{j} l{j}{i}^-1 r{i}{j}"),
                    GeneratorWord::product([&w(Generator::Epsilon(i)), &w(Generator::Sigma(i, j))]),
                    GeneratorWord::product([
                        &w(Generator::Lambda(i, j)),
                        &inv(Generator::Lambda(j, i)),
                        &w(Generator::Rho(i, j)),
                    ]),
                ));
            }
        }
    }
    let h = GeneratorWord::product([&w(Generator::Delta), &w(Generator::Sigma(2, 3))]);
    out.push((
        "l21 conjugated by D s23 = r31".into(),
        w(Generator::Lambda(2, 1)).conjugate_by(&h),
        w(Generator::Rho(3, 1)),
    ));
    out.push((
        "[r23^-1, r31^-1] = r21^-1".into(),
        GeneratorWord::commutator(&inv(Generator::Rho(2, 3)), &inv(Generator::Rho(3, 1))),
        inv(Generator::Rho(2, 1)),
    ));
    Ok(out)
}

/// Checks each curated identity as an equality of outer automorphisms.
pub fn verify_identities(rank: usize) -> Result<Vec<IdentityOutcome>, GerstenError> {
    curated_identities(rank)?
        .into_iter()
        .map(|(label, lhs, rhs)| {
            let a = FreeAutomorphism::from_word(&lhs, rank)?;
            let b = FreeAutomorphism::from_word(&rhs, rank)?;
            Ok(IdentityOutcome {
                label,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                holds: outer_equal(&a, &b),
            })
        })
        .collect()
}
