use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::representation::Representation;
use super::RepError;
use crate::exactlin::Subspace;
use crate::freegrp::Generator;
use crate::perm::Subset;
use crate::{Rational, RationalMatrix, RationalSubspace};

/// The simultaneous eigenspaces `E_I` of the images of `ε_1, ..., ε_n`, where
/// `ε_i` acts on `E_I` as `-1` if `i ∈ I` and as `+1` otherwise.
///
/// The change of basis to the concatenated `E_I` bases is assembled once, so
/// projections `p_J` are block reads after one multiplication.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    rank: usize,
    dim: usize,
    spaces: BTreeMap<Subset, RationalSubspace>,
    /// Columns are the bases of the `E_I`, in subset order.
    basis: RationalMatrix,
    basis_inverse: RationalMatrix,
    blocks: BTreeMap<Subset, (usize, usize)>,
}

pub fn epsilon_decomposition(rep: &Representation) -> Result<EigenDecomposition, RepError> {
    let n = rep.rank();
    let d = rep.dim();
    let eps = (1..=n)
        .map(|i| rep.image(Generator::Epsilon(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let id = RationalMatrix::identity(d);
    for (i, a) in eps.iter().enumerate() {
        if !(a * a).is_identity() {
            return Err(RepError::Precondition(format!(
                "image of e{} is not an involution",
                i + 1
            )));
        }
        for (j, b) in eps.iter().enumerate().skip(i + 1) {
            if a * b != b * a {
                return Err(RepError::Precondition(format!(
                    "images of e{} and e{} do not commute",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let plus = eps.iter().map(|a| (a - &id).kernel()).collect::<Vec<_>>();
    let minus = eps.iter().map(|a| (a + &id).kernel()).collect::<Vec<_>>();

    let mut spaces = BTreeMap::new();
    let mut blocks = BTreeMap::new();
    let mut columns = Vec::new();
    for set in Subset::all(n) {
        let mut e = Subspace::full(d);
        for i in 1..=n {
            e = e.intersect(if set.contains(i) {
                &minus[i - 1]
            } else {
                &plus[i - 1]
            })?;
        }
        blocks.insert(set, (columns.len(), e.dim()));
        columns.extend(e.basis().iter().cloned());
        spaces.insert(set, e);
    }
    if columns.len() != d {
        return Err(RepError::Violation(format!(
            "eigenspaces span {} of {} dimensions",
            columns.len(),
            d
        )));
    }
    let basis = RationalMatrix::from_columns(d, &columns);
    let basis_inverse = basis.inverse()?;
    Ok(EigenDecomposition {
        rank: n,
        dim: d,
        spaces,
        basis,
        basis_inverse,
        blocks,
    })
}

impl EigenDecomposition {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn space(&self, set: Subset) -> &RationalSubspace {
        &self.spaces[&set]
    }

    pub fn spaces(&self) -> impl Iterator<Item = (Subset, &RationalSubspace)> {
        self.spaces.iter().map(|(&s, e)| (s, e))
    }

    /// Subsets with `E_I ≠ 0`.
    pub fn support(&self) -> impl Iterator<Item = Subset> + '_ {
        self.spaces
            .iter()
            .filter(|(_, e)| !e.is_zero())
            .map(|(&s, _)| s)
    }

    /// `V_i = ⊕_{|I| = i} E_I`.
    pub fn level(&self, i: usize) -> RationalSubspace {
        let vectors: Vec<Vec<Rational>> = self
            .spaces
            .iter()
            .filter(|(s, _)| s.len() == i)
            .flat_map(|(_, e)| e.basis().iter().cloned())
            .collect();
        Subspace::span(self.dim, &vectors)
    }

    /// Sum of `E_I` over the given subsets.
    pub fn sum_of<'a>(&self, sets: impl IntoIterator<Item = &'a Subset>) -> RationalSubspace {
        let vectors: Vec<Vec<Rational>> = sets
            .into_iter()
            .flat_map(|s| self.spaces[s].basis().iter().cloned())
            .collect();
        Subspace::span(self.dim, &vectors)
    }

    /// The matrix of `x` in the adapted basis; block `(J, I)` is `p_J ∘ x` on `E_I`.
    pub fn in_adapted_basis(&self, x: &RationalMatrix) -> RationalMatrix {
        &(&self.basis_inverse * x) * &self.basis
    }

    /// Whether `p_J(x(E_I)) ≠ 0`, read from the adapted matrix `a`.
    pub fn block_nonzero(&self, a: &RationalMatrix, from: Subset, to: Subset) -> bool {
        let (c0, w) = self.blocks[&from];
        let (r0, h) = self.blocks[&to];
        w > 0 && h > 0 && !a.block(r0, c0, h, w).is_zero()
    }

    /// Projection `p_J` of a vector onto `E_J` along the other summands.
    pub fn project(&self, to: Subset, v: &[Rational]) -> Vec<Rational> {
        let (r0, h) = self.blocks[&to];
        let mut coords = self.basis_inverse.mul_vec(v);
        for (k, c) in coords.iter_mut().enumerate() {
            if k < r0 || k >= r0 + h {
                *c = Rational::zero();
            }
        }
        self.basis.mul_vec(&coords)
    }

    /// Checks that each `ε_i` acts on `E_I` by the sign `(-1)^{χ_I(i)}`.
    pub fn signs_consistent(&self, rep: &Representation) -> Result<bool, RepError> {
        for i in 1..=self.rank {
            let e = rep.image(Generator::Epsilon(i))?;
            for (set, space) in &self.spaces {
                let sign = if set.contains(i) {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                let ok = space
                    .basis()
                    .iter()
                    .all(|v| e.mul_vec(v) == v.iter().map(|x| x * &sign).collect::<Vec<_>>());
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `dim V_0, ..., dim V_n`, after checking that `dim E_I` depends only on `|I|`.
pub fn level_dimensions(dec: &EigenDecomposition) -> Result<Vec<usize>, RepError> {
    let mut per_level: Vec<Option<usize>> = vec![None; dec.rank + 1];
    let mut dims = vec![0; dec.rank + 1];
    for (set, space) in dec.spaces() {
        let k = set.len();
        match per_level[k] {
            Some(d) if d != space.dim() => {
                return Err(RepError::Violation(format!(
                    "subsets of size {k} carry eigenspaces of different dimensions ({d} and {} at {set})",
                    space.dim()
                )))
            }
            _ => per_level[k] = Some(space.dim()),
        }
        dims[k] += space.dim();
    }
    Ok(dims)
}
