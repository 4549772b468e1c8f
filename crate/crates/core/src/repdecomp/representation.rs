use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde_json::{Map, Value};

use super::RepError;
use crate::exactlin::json::{matrix_from_json, matrix_to_json};
use crate::exactlin::sym2_map;
use crate::freegrp::{FreeAutomorphism, Generator, GeneratorWord};
use crate::gersten::{expand_word, gersten_presentation, verify_homomorphism, MatrixGroup};
use crate::{Rational, RationalMatrix};

/// A linear representation of `Out(F_n)`, given by the images of Gersten's
/// generators. Matrices act on column vectors.
#[derive(Clone, Debug)]
pub struct Representation {
    name: String,
    rank: usize,
    dim: usize,
    images: BTreeMap<Generator, RationalMatrix>,
    checked: bool,
}

fn rational_abelianization(g: Generator, rank: usize) -> RationalMatrix {
    FreeAutomorphism::generator(g, rank)
        .expect("Gersten generators are valid for the rank")
        .abelianization()
        .map(|&x| Rational::from_integer(x.into()))
}

impl Representation {
    /// Builds a representation and verifies every relator of Gersten's
    /// presentation against it.
    pub fn new(
        name: &str,
        rank: usize,
        images: BTreeMap<Generator, RationalMatrix>,
    ) -> Result<Self, RepError> {
        let rep = Self::unchecked(name, rank, images)?;
        let p = gersten_presentation(rank)?;
        let assignment: HashMap<_, _> = rep.images.iter().map(|(&g, m)| (g, m.clone())).collect();
        let report = verify_homomorphism(&p, &assignment, &MatrixGroup::<Rational>::new(rep.dim))?;
        if !report.all_passed() {
            return Err(RepError::NotAHomomorphism(
                report.failures().map(|o| o.relator.clone()).collect(),
            ));
        }
        Ok(Representation {
            checked: true,
            ..rep
        })
    }

    /// Builds an assignment without checking the relators. Intended for
    /// negative tests; such objects report `is_checked() == false`.
    pub fn unchecked(
        name: &str,
        rank: usize,
        images: BTreeMap<Generator, RationalMatrix>,
    ) -> Result<Self, RepError> {
        let p = gersten_presentation(rank)?;
        let dim = images.values().next().map_or(0, |m| m.rows());
        for g in &p.generators {
            let m = images
                .get(g)
                .ok_or_else(|| RepError::MissingGenerator(g.to_string()))?;
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::Shape {
                    generator: g.to_string(),
                    expected: dim,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if m.determinant()?.is_zero() {
                return Err(RepError::Singular(g.to_string()));
            }
        }
        if let Some(g) = images.keys().find(|g| !p.generators.contains(g)) {
            return Err(RepError::Parse(format!(
                "{g} is not one of Gersten's generators"
            )));
        }
        Ok(Representation {
            name: name.to_string(),
            rank,
            dim,
            images,
            checked: false,
        })
    }

    /// Composes the abelianization `Out(F_n) → GL_n(Z)` with a map on matrices.
    pub fn pullback(
        name: &str,
        rank: usize,
        f: impl Fn(&RationalMatrix) -> RationalMatrix,
    ) -> Result<Self, RepError> {
        let p = gersten_presentation(rank)?;
        let images = p
            .generators
            .iter()
            .map(|&g| (g, f(&rational_abelianization(g, rank))))
            .collect();
        Self::new(name, rank, images)
    }

    pub fn trivial(rank: usize) -> Self {
        Self::pullback("trivial", rank, |_| RationalMatrix::identity(1))
            .expect("trivial representation")
    }

    pub fn standard(rank: usize) -> Self {
        Self::pullback("standard", rank, |m| m.clone()).expect("standard representation")
    }

    pub fn dual(rank: usize) -> Self {
        Self::pullback("dual", rank, |m| m.dual().expect("unimodular"))
            .expect("dual representation")
    }

    pub fn det(rank: usize) -> Self {
        Self::pullback("det", rank, |m| {
            RationalMatrix::identity(1).scale(&m.determinant().expect("square"))
        })
        .expect("determinant representation")
    }

    pub fn sym2(rank: usize) -> Self {
        Self::pullback("sym2", rank, |m| sym2_map(m).expect("square")).expect("Sym² representation")
    }

    pub fn sym2dual(rank: usize) -> Self {
        Self::pullback("sym2dual", rank, |m| {
            sym2_map(&m.dual().expect("unimodular")).expect("square")
        })
        .expect("Sym² dual representation")
    }

    /// A built-in name, or several joined by `+` for their direct sum.
    pub fn builtin(names: &str, rank: usize) -> Result<Self, RepError> {
        let mut parts = names.split('+').map(str::trim).map(|name| match name {
            "trivial" => Ok(Self::trivial(rank)),
            "standard" => Ok(Self::standard(rank)),
            "dual" => Ok(Self::dual(rank)),
            "det" => Ok(Self::det(rank)),
            "sym2" => Ok(Self::sym2(rank)),
            "sym2dual" => Ok(Self::sym2dual(rank)),
            other => Err(RepError::UnknownBuiltin(other.to_string())),
        });
        let first = parts.next().expect("split yields at least one part")?;
        parts.try_fold(first, |acc, r| Ok(acc.direct_sum(&r?)))
    }

    /// Block-diagonal sum. Checked status is inherited only if both are checked.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.rank, other.rank, "direct sum across ranks");
        let images = self
            .images
            .iter()
            .map(|(&g, m)| (g, m.direct_sum(&other.images[&g])))
            .collect();
        Representation {
            name: format!("{}+{}", self.name, other.name),
            rank: self.rank,
            dim: self.dim + other.dim,
            images,
            checked: self.checked && other.checked,
        }
    }

    /// Reads `{"rank": n, "generators": {"e1": [[...]], "r12": ..., ...}}`;
    /// the bare inner object is accepted too. Entries are `"p/q"` strings or integers.
    pub fn from_json(name: &str, value: &Value, checked: bool) -> Result<Self, RepError> {
        let rank = value.get("rank").map_or(Ok(3), |r| {
            r.as_u64()
                .map(|r| r as usize)
                .ok_or_else(|| RepError::Parse("rank must be a positive integer".into()))
        })?;
        let table = value.get("generators").unwrap_or(value);
        let table = table
            .as_object()
            .ok_or_else(|| RepError::Parse("expected an object of generator matrices".into()))?;
        let mut images = BTreeMap::new();
        for (token, m) in table {
            if token == "rank" {
                continue;
            }
            let g: Generator = token.parse()?;
            images.insert(g.validated(rank)?, matrix_from_json(m)?);
        }
        if checked {
            Self::new(name, rank, images)
        } else {
            Self::unchecked(name, rank, images)
        }
    }

    pub fn to_json(&self) -> Value {
        let mut gens = Map::new();
        for (g, m) in &self.images {
            gens.insert(g.to_string(), matrix_to_json(m));
        }
        serde_json::json!({ "rank": self.rank, "generators": gens })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_checked(&self) -> bool {
        self.checked
    }

    pub fn gersten_images(&self) -> &BTreeMap<Generator, RationalMatrix> {
        &self.images
    }

    /// Replaces one generator image, producing an unchecked assignment.
    pub fn with_image(&self, g: Generator, m: RationalMatrix) -> Representation {
        let mut images = self.images.clone();
        images.insert(g, m);
        Representation {
            name: format!("{}[{} corrupted]", self.name, g),
            images,
            checked: false,
            ..self.clone()
        }
    }

    /// Image of an arbitrary word in the named generators, via its
    /// expansion into Gersten's generators.
    pub fn image_of_word(&self, w: &GeneratorWord) -> Result<RationalMatrix, RepError> {
        let expanded = expand_word(w, self.rank)?;
        let mut acc = RationalMatrix::identity(self.dim);
        for &(g, k) in expanded.factors() {
            let m = &self.images[&g];
            let base = if k < 0 { m.inverse()? } else { m.clone() };
            acc = &acc * &base.pow(k.unsigned_abs() as u32);
        }
        Ok(acc)
    }

    pub fn image(&self, g: Generator) -> Result<RationalMatrix, RepError> {
        self.image_of_word(&GeneratorWord::single(g))
    }

    pub fn trace_of(&self, w: &GeneratorWord) -> Result<Rational, RepError> {
        Ok(self.image_of_word(w)?.trace())
    }
}

/// Representations used by the invariant suites: every built-in irreducible
/// pullback and their direct sums up to dimension 6.
pub fn builtin_suite(rank: usize) -> Vec<Representation> {
    [
        "standard",
        "dual",
        "det",
        "sym2",
        "sym2dual",
        "trivial",
        "standard+det",
        "dual+det",
        "standard+dual",
        "standard+standard",
        "standard+det+det",
        "standard+trivial+det",
        "det+det+trivial",
    ]
    .iter()
    .map(|s| Representation::builtin(s, rank).expect("built-in suite"))
    .collect()
}
