use crate::freegrp::{FreeGroupError, Generator, GeneratorWord};

fn word(factors: &[(Generator, i64)]) -> GeneratorWord {
    GeneratorWord::from_factors(factors.to_vec())
}

/// Rewrites a named generator as a word in `ε_1`, `ρ_ij`, `λ_ij` that
/// defines the same automorphism of `F_n` (not merely the same outer class).
pub fn gersten_expansion(g: Generator, rank: usize) -> Result<GeneratorWord, FreeGroupError> {
    use Generator::*;
    let g = g.validated(rank)?;
    Ok(match g {
        Epsilon(1) | Rho(..) | Lambda(..) => GeneratorWord::single(g),
        Sigma(1, j) if j <= rank => word(&[
            (Epsilon(1), 1),
            (Lambda(1, j), 1),
            (Lambda(j, 1), -1),
            (Rho(1, j), 1),
        ]),
        Epsilon(i) => {
            let s = gersten_expansion(Sigma(1, i), rank)?;
            GeneratorWord::product([&s, &GeneratorWord::single(Epsilon(1)), &s])
        }
        Sigma(i, j) if j <= rank => gersten_expansion(Epsilon(i), rank)?.then(&word(&[
            (Lambda(i, j), 1),
            (Lambda(j, i), -1),
            (Rho(i, j), 1),
        ])),
        Sigma(i, _) => {
            let rhos: Vec<(Generator, i64)> = (1..=rank)
                .filter(|&j| j != i)
                .map(|j| (Rho(j, i), 1))
                .collect();
            gersten_expansion(Epsilon(i), rank)?.then(&word(&rhos))
        }
        Delta => {
            let parts = (1..=rank)
                .map(|i| gersten_expansion(Epsilon(i), rank))
                .collect::<Result<Vec<_>, _>>()?;
            GeneratorWord::product(&parts)
        }
    })
}

/// Applies `gersten_expansion` factor by factor.
pub fn expand_word(w: &GeneratorWord, rank: usize) -> Result<GeneratorWord, FreeGroupError> {
    let mut out = GeneratorWord::identity();
    for &(g, k) in w.factors() {
        out = out.then(&gersten_expansion(g, rank)?.pow(k));
    }
    Ok(out)
}
