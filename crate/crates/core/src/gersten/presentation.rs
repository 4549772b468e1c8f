use serde::Serialize;

use super::GerstenError;
use crate::freegrp::{Generator, GeneratorWord};

/// A relator together with the relation family it instantiates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relator {
    pub family: &'static str,
    #[serde(serialize_with = "serialize_word")]
    pub word: GeneratorWord,
}

fn serialize_word<S: serde::Serializer>(w: &GeneratorWord, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

/// Gersten's finite presentation of `Out(F_n)`.
#[derive(Clone, Debug, Serialize)]
pub struct Presentation {
    pub rank: usize,
    #[serde(serialize_with = "serialize_generators")]
    pub generators: Vec<Generator>,
    pub relators: Vec<Relator>,
}

fn serialize_generators<S: serde::Serializer>(gs: &[Generator], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(gs.iter().map(Generator::to_string))
}

impl Presentation {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("presentation serializes")
    }
}

fn g(gen: Generator) -> GeneratorWord {
    GeneratorWord::single(gen)
}

fn inv(gen: Generator) -> GeneratorWord {
    GeneratorWord::power(gen, -1)
}

fn comm(x: &GeneratorWord, y: &GeneratorWord) -> GeneratorWord {
    GeneratorWord::commutator(x, y)
}

/// Instantiates every relation family over all index tuples allowed by its
/// side conditions. Equalities `x = y` become relators `x y^{-1}`; products
/// over `i ≠ j` are taken in ascending `i`.
pub fn gersten_presentation(n: usize) -> Result<Presentation, GerstenError> {
    use Generator::{Epsilon, Lambda, Rho};
    if n < 3 {
        return Err(GerstenError::RankTooSmall(n));
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();

    let mut generators = vec![Epsilon(1)];
    generators.extend(pairs.iter().map(|&(i, j)| Rho(i, j)));
    generators.extend(pairs.iter().map(|&(i, j)| Lambda(i, j)));

    let mut relators = Vec::new();
    let mut push =
        |family: &'static str, word: GeneratorWord| relators.push(Relator { family, word });

    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if k != i && k != j && l != i {
                push("[rho_ij, rho_kl]", comm(&g(Rho(i, j)), &g(Rho(k, l))));
                push(
                    "[lambda_ij, lambda_kl]",
                    comm(&g(Lambda(i, j)), &g(Lambda(k, l))),
                );
            }
        }
    }
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if k != j && l != i {
                push("[lambda_ij, rho_kl]", comm(&g(Lambda(i, j)), &g(Rho(k, l))));
            }
        }
    }
    for &(i, j) in &pairs {
        for k in (1..=n).filter(|&k| k != i && k != j) {
            let target = g(Rho(i, k));
            push(
                "rho commutator",
                comm(&inv(Rho(i, j)), &inv(Rho(j, k))).then(&target),
            );
            push(
                "rho commutator",
                comm(&g(Rho(i, j)), &g(Lambda(j, k))).then(&target),
            );
            push(
                "rho commutator",
                comm(&inv(Rho(i, j)), &g(Rho(j, k))).inverse().then(&target),
            );
            push(
                "rho commutator",
                comm(&g(Rho(i, j)), &inv(Lambda(j, k)))
                    .inverse()
                    .then(&target),
            );

            let target = g(Lambda(i, k));
            push(
                "lambda commutator",
                comm(&inv(Lambda(i, j)), &inv(Lambda(j, k))).then(&target),
            );
            push(
                "lambda commutator",
                comm(&g(Lambda(i, j)), &g(Rho(j, k))).then(&target),
            );
            push(
                "lambda commutator",
                comm(&inv(Lambda(i, j)), &g(Lambda(j, k)))
                    .inverse()
                    .then(&target),
            );
            push(
                "lambda commutator",
                comm(&g(Lambda(i, j)), &inv(Rho(j, k)))
                    .inverse()
                    .then(&target),
            );
        }
    }
    for &(i, j) in &pairs {
        let left = GeneratorWord::product([&g(Rho(i, j)), &inv(Rho(j, i)), &g(Lambda(i, j))]);
        let right = GeneratorWord::product([&g(Lambda(i, j)), &inv(Lambda(j, i)), &g(Rho(i, j))]);
        push("rho-lambda swap", left.then(&right.inverse()));
        push("swap order four", left.pow(4));
    }
    for &(i, j) in pairs.iter().filter(|&&(i, j)| i != 1 && j != 1) {
        push("[eps_1, rho_ij]", comm(&g(Epsilon(1)), &g(Rho(i, j))));
        push("[eps_1, lambda_ij]", comm(&g(Epsilon(1)), &g(Lambda(i, j))));
    }
    let e1 = g(Epsilon(1));
    push(
        "eps_1 conjugation",
        g(Rho(1, 2)).conjugate_by(&e1).then(&g(Lambda(1, 2))),
    );
    push(
        "eps_1 conjugation",
        g(Rho(2, 1)).conjugate_by(&e1).then(&g(Rho(2, 1))),
    );
    push("eps_1 involution", e1.pow(2));
    for j in 1..=n {
        let factors: Vec<GeneratorWord> = (1..=n)
            .filter(|&i| i != j)
            .map(|i| g(Rho(i, j)).then(&inv(Lambda(i, j))))
            .collect();
        push("inner product", GeneratorWord::product(&factors));
    }

    Ok(Presentation {
        rank: n,
        generators,
        relators,
    })
}
