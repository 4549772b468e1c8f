//! `Sym²` of the dual standard module of `GL_3(Z)`, and cyclic submodules
//! under a set of elements of the level-2 congruence subgroup.
//!
//! Convention: a matrix `g` acts on the 6-dimensional space through
//! `sym2_map(g⁻ᵀ)`, in the monomial basis `11, 12, 13, 22, 23, 33`. Of the
//! two candidates, only the dual one sends `v₁v₃` under `ρ₁₃²` to
//! `v₁v₃ − 2 v₁v₁`; the plain `sym2_map(g)` gives `v₁v₃ + 2 v₃v₃` instead.
//!
//! In this basis, with `v = Σ μ_ij v_iv_j` and `w = ε₁ε₂(v) − v`:
//! * `w = −2 μ₂₃ v₂v₃ − 2 μ₁₃ v₁v₃`
//! * `ε₁ε₃(w) + w = −4 μ₁₃ v₁v₃`
//! * `ρ₂₃²(v₁v₃) − v₁v₃ = −2 v₁v₂`
//! * `ρ₂₁²(v) − v = −μ₁₁ (4 v₁v₂ − 4 v₂v₂)` when `v` is diagonal
//!
//! The coefficients are basis-sensitive; only the spans they imply are
//! relied on.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactlin::{sym2_basis, sym2_index, sym2_map, ExactField, LinAlgError, Matrix, Scalar};
use crate::freegrp::{FreeAutomorphism, FreeGroupError, Generator, GeneratorWord};
use crate::{IntMatrix, Rational, RationalMatrix, RationalSubspace};

/// Dimension of `Sym²(K³)`.
pub const SYM2_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorelliError {
    #[error("generator {0} is not unimodular")]
    NotUnimodular(String),
    #[error("generator {0} is not congruent to the identity mod 2")]
    NotCongruent(String),
    #[error("generator {0} is not 3x3")]
    Shape(String),
    #[error("saturation needed more than {0} enlargements")]
    CapExceeded(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}

/// `sym2_map` of the inverse transpose. Multiplicative in `g`.
pub fn sym2_dual_rep<T: ExactField>(g: &Matrix<T>) -> Result<Matrix<T>, LinAlgError> {
    sym2_map(&g.dual()?)
}

/// The basis vector `v_i v_j`, 1-based indices in either order.
pub fn monomial(i: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); SYM2_DIM];
    v[sym2_index(3, i - 1, j - 1)] = Rational::one();
    v
}

/// The coefficient `μ_ij` of `v_i v_j` in `v`.
pub fn mu(v: &[Rational], i: usize, j: usize) -> Rational {
    v[sym2_index(3, i - 1, j - 1)].clone()
}

fn to_rational(m: &IntMatrix) -> RationalMatrix {
    m.map(|&x| Rational::from_int(x))
}

/// Named elements of `GL_3(Z)` congruent to the identity mod 2, with their
/// images on the `Sym²` space.
#[derive(Clone, Debug)]
pub struct CongruenceGeneratorSet {
    names: Vec<String>,
    underlying: Vec<IntMatrix>,
    matrices: Vec<RationalMatrix>,
}

impl CongruenceGeneratorSet {
    /// Rejects anything that is not a unimodular 3×3 matrix reducing to the
    /// identity mod 2.
    pub fn new(generators: Vec<(String, IntMatrix)>) -> Result<Self, TorelliError> {
        let mut out = CongruenceGeneratorSet {
            names: Vec::new(),
            underlying: Vec::new(),
            matrices: Vec::new(),
        };
        for (name, g) in generators {
            if g.rows() != 3 || g.cols() != 3 {
                return Err(TorelliError::Shape(name));
            }
            let q = to_rational(&g);
            let det = q.determinant()?;
            if det != Rational::one() && det != -Rational::one() {
                return Err(TorelliError::NotUnimodular(name));
            }
            let congruent =
                (0..3).all(|r| (0..3).all(|c| (g[(r, c)] - i64::from(r == c)).rem_euclid(2) == 0));
            if !congruent {
                return Err(TorelliError::NotCongruent(name));
            }
            out.matrices.push(sym2_dual_rep(&q)?);
            out.names.push(name);
            out.underlying.push(g);
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn underlying(&self) -> &[IntMatrix] {
        &self.underlying
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    /// Looks up a generator's `Sym²` image by name, e.g. `"e1 e2"` or `"r13^2"`.
    pub fn by_name(&self, name: &str) -> Option<&RationalMatrix> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|k| &self.matrices[k])
    }
}

/// Abelianization of a word in the named generators of `Out(F_3)`.
pub fn abelianized(word: &str) -> Result<IntMatrix, TorelliError> {
    let w = GeneratorWord::parse(word)?;
    Ok(FreeAutomorphism::from_word(&w, 3)?.abelianization())
}

/// The images of `ε_iε_j` for the three pairs and `ρ_ij²` for the six
/// ordered pairs.
pub fn congruence_generators() -> CongruenceGeneratorSet {
    let mut gens = Vec::new();
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        let name = format!("{} {}", Generator::Epsilon(i), Generator::Epsilon(j));
        gens.push((name.clone(), abelianized(&name).expect("valid word")));
    }
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                let name = format!("{}^2", Generator::Rho(i, j));
                gens.push((name.clone(), abelianized(&name).expect("valid word")));
            }
        }
    }
    CongruenceGeneratorSet::new(gens).expect("standard generators lie in the congruence subgroup")
}

/// One enlargement of the span during saturation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub generator: String,
    pub dim: usize,
}

/// The smallest generator-invariant subspace containing `start`.
#[derive(Clone, Debug)]
pub struct SubmoduleClosure {
    pub start: Vec<Rational>,
    pub subspace: RationalSubspace,
    pub trace: Vec<TraceStep>,
}

impl SubmoduleClosure {
    pub fn is_full(&self) -> bool {
        self.subspace.dim() == self.start.len()
    }
}

/// Saturates `span{v}` under the generators. Each enlargement raises the
/// dimension, so at most `dim` of them occur; more than `cap` is an error.
pub fn cyclic_submodule(
    v: &[Rational],
    gens: &CongruenceGeneratorSet,
    cap: usize,
) -> Result<SubmoduleClosure, TorelliError> {
    if cap < 1 {
        return Err(TorelliError::InvalidParameter(
            "cap must be at least 1".into(),
        ));
    }
    let n = v.len();
    let mut span = RationalSubspace::span(n, &[v.to_vec()]);
    let mut trace = Vec::new();
    // Every basis vector seen so far has been pushed through every generator
    // once the queue drains.
    let mut frontier: Vec<Vec<Rational>> = span.basis().to_vec();
    while let Some(w) = frontier.pop() {
        for (name, m) in gens.names.iter().zip(&gens.matrices) {
            let image = m.mul_vec(&w);
            if !span.contains(&image) {
                span = span.sum(&RationalSubspace::span(n, std::slice::from_ref(&image)))?;
                trace.push(TraceStep {
                    generator: name.clone(),
                    dim: span.dim(),
                });
                if trace.len() > cap {
                    return Err(TorelliError::CapExceeded(cap));
                }
                frontier.push(image);
            }
        }
    }
    Ok(SubmoduleClosure {
        start: v.to_vec(),
        subspace: span,
        trace,
    })
}

/// One probed start vector.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeEntry {
    pub label: String,
    pub vector: Vec<String>,
    pub closure_dim: usize,
    pub trace: Vec<TraceStep>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub seed: u64,
    pub entries: Vec<ProbeEntry>,
}

impl ProbeReport {
    pub fn full_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.closure_dim == SYM2_DIM)
            .count()
    }

    pub fn failures(&self) -> Vec<&ProbeEntry> {
        self.entries
            .iter()
            .filter(|e| e.closure_dim != SYM2_DIM)
            .collect()
    }

    pub fn all_full(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn count_with_prefix(&self, prefix: &str) -> (usize, usize) {
        let group: Vec<_> = self
            .entries
            .iter()
            .filter(|e| e.label.starts_with(prefix))
            .collect();
        (
            group.iter().filter(|e| e.closure_dim == SYM2_DIM).count(),
            group.len(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "seed": self.seed,
            "full": self.full_count(),
            "total": self.entries.len(),
            "entries": self.entries,
        })
    }
}

/// A nonzero vector with entries `p/q`, `p, q ∈ [−9, 9]`, `q ≠ 0`.
pub fn random_vector(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..SYM2_DIM)
            .map(|_| {
                let p: i64 = rng.gen_range(-9..=9);
                let q: i64 = loop {
                    let q = rng.gen_range(-9..=9);
                    if q != 0 {
                        break q;
                    }
                };
                Rational::from_int(p) / Rational::from_int(q)
            })
            .collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// The six basis vectors, the sums and differences of all fifteen pairs of
/// them, and `sample_count` seeded random vectors.
pub fn probe_vectors(sample_count: usize, seed: u64) -> Vec<(String, Vec<Rational>)> {
    let basis = sym2_basis(3);
    let name = |k: usize| format!("v{}v{}", basis[k].0 + 1, basis[k].1 + 1);
    let unit = |k: usize| monomial(basis[k].0 + 1, basis[k].1 + 1);
    let mut out: Vec<(String, Vec<Rational>)> = (0..SYM2_DIM)
        .map(|k| (format!("basis {}", name(k)), unit(k)))
        .collect();
    for a in 0..SYM2_DIM {
        for b in a + 1..SYM2_DIM {
            let (x, y) = (unit(a), unit(b));
            let sum = x.iter().zip(&y).map(|(p, q)| p + q).collect();
            let diff = x.iter().zip(&y).map(|(p, q)| p - q).collect();
            out.push((format!("pair {}+{}", name(a), name(b)), sum));
            out.push((format!("pair {}-{}", name(a), name(b)), diff));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..sample_count {
        out.push((format!("random {k}"), random_vector(&mut rng)));
    }
    out
}

/// Runs `cyclic_submodule` on every probe vector, in parallel.
pub fn irreducibility_probe(sample_count: usize, seed: u64) -> Result<ProbeReport, TorelliError> {
    if sample_count < 1 {
        return Err(TorelliError::InvalidParameter(
            "sample count must be at least 1".into(),
        ));
    }
    let gens = congruence_generators();
    let entries = probe_vectors(sample_count, seed)
        .into_par_iter()
        .map(|(label, v)| {
            let c = cyclic_submodule(&v, &gens, SYM2_DIM)?;
            Ok(ProbeEntry {
                label,
                vector: v.iter().map(|x| x.to_string()).collect(),
                closure_dim: c.subspace.dim(),
                trace: c.trace,
            })
        })
        .collect::<Result<Vec<_>, TorelliError>>()?;
    Ok(ProbeReport { seed, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn identity_and_diagonal_sign() {
        assert!(sym2_dual_rep(&RationalMatrix::identity(3))
            .unwrap()
            .is_identity());
        let d = RationalMatrix::diagonal(&[q(-1), q(-1), q(1)]);
        assert_eq!(
            sym2_dual_rep(&d).unwrap(),
            RationalMatrix::diagonal(&[q(1), q(1), q(-1), q(1), q(-1), q(1)])
        );
        assert!(sym2_dual_rep(&RationalMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn nine_generators_mod_two() {
        let gens = congruence_generators();
        assert_eq!(gens.len(), 9);
        for g in gens.underlying() {
            assert!((0..3).all(|r| (0..3).all(|c| (g[(r, c)] - i64::from(r == c)) % 2 == 0)));
        }
    }

    #[test]
    fn scaled_generators_rejected() {
        let g = abelianized("r12^2").unwrap().map(|&x| 2 * x);
        assert!(matches!(
            CongruenceGeneratorSet::new(vec![("2g".into(), g)]),
            Err(TorelliError::NotUnimodular(_))
        ));
        let r = abelianized("r12").unwrap();
        assert!(matches!(
            CongruenceGeneratorSet::new(vec![("r12".into(), r)]),
            Err(TorelliError::NotCongruent(_))
        ));
    }

    #[test]
    fn zero_vector_closes_to_zero() {
        let c = cyclic_submodule(&vec![Rational::zero(); 6], &congruence_generators(), 6).unwrap();
        assert!(c.subspace.is_zero() && c.trace.is_empty());
    }

    #[test]
    fn single_monomials_generate() {
        let gens = congruence_generators();
        for (i, j) in [(1, 3), (1, 1)] {
            let c = cyclic_submodule(&monomial(i, j), &gens, 6).unwrap();
            assert!(c.is_full());
            assert_eq!(c.trace.len(), 5);
        }
        assert!(cyclic_submodule(&monomial(1, 1), &gens, 0).is_err());
        assert!(matches!(
            cyclic_submodule(&monomial(1, 1), &gens, 2),
            Err(TorelliError::CapExceeded(2))
        ));
    }

    #[test]
    fn small_probe() {
        let r = irreducibility_probe(5, 0).unwrap();
        assert_eq!(r.entries.len(), 6 + 30 + 5);
        assert!(r.all_full());
        assert_eq!(r.count_with_prefix("random"), (5, 5));
        assert!(irreducibility_probe(0, 0).is_err());
    }
}
