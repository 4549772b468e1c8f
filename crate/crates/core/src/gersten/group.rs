use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Mutex;

use num_rational::Ratio;

use crate::exactlin::{ExactField, Matrix};
use crate::freegrp::{inner_witness, FreeAutomorphism, FreeWord, GeneratorWord};
use crate::perm::Permutation;
use crate::IntMatrix;

/// A group in which products, inverses and equality are computable.
pub trait EffectiveGroup: Sync {
    type Element: Clone + Send + Sync + fmt::Display;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn invert(&self, a: &Self::Element) -> Self::Element;
    fn equal(&self, a: &Self::Element, b: &Self::Element) -> bool;

    /// Equal elements must have equal fingerprints.
    fn fingerprint(&self, a: &Self::Element) -> u64;

    fn is_identity(&self, a: &Self::Element) -> bool {
        self.equal(a, &self.identity())
    }

    /// Evidence that `a` is trivial, when the target has any to offer.
    fn witness(&self, _a: &Self::Element) -> Option<String> {
        None
    }

    fn power(&self, a: &Self::Element, k: i64) -> Self::Element {
        let base = if k < 0 { self.invert(a) } else { a.clone() };
        (0..k.unsigned_abs()).fold(self.identity(), |acc, _| self.multiply(&acc, &base))
    }
}

fn hash_of<T: Hash>(x: &T) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

/// `Out(F_n)`, with elements represented by automorphisms.
///
/// Triviality is decided by `inner_witness`; results are cached by
/// provenance, since the same products recur across relators and closures.
pub struct OuterGroup {
    rank: usize,
    cache: Mutex<HashMap<GeneratorWord, Option<FreeWord>>>,
}

impl OuterGroup {
    pub fn new(rank: usize) -> Self {
        OuterGroup {
            rank,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn cached_witness(&self, a: &FreeAutomorphism) -> Option<FreeWord> {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(a.provenance()) {
            return hit.clone();
        }
        let w = inner_witness(a);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(a.provenance().clone(), w.clone());
        w
    }

    pub fn cache_len(&self) -> usize {
        self.cache.lock().expect("cache lock").len()
    }
}

impl EffectiveGroup for OuterGroup {
    type Element = FreeAutomorphism;

    fn identity(&self) -> FreeAutomorphism {
        FreeAutomorphism::identity(self.rank)
    }

    fn multiply(&self, a: &FreeAutomorphism, b: &FreeAutomorphism) -> FreeAutomorphism {
        a.compose(b).expect("elements share the group's rank")
    }

    fn invert(&self, a: &FreeAutomorphism) -> FreeAutomorphism {
        a.inverse()
    }

    fn equal(&self, a: &FreeAutomorphism, b: &FreeAutomorphism) -> bool {
        a.abelianization() == b.abelianization()
            && self.is_identity(&self.multiply(a, &b.inverse()))
    }

    fn is_identity(&self, a: &FreeAutomorphism) -> bool {
        a.abelianization().is_identity() && self.cached_witness(a).is_some()
    }

    fn fingerprint(&self, a: &FreeAutomorphism) -> u64 {
        hash_of(&a.abelianization())
    }

    fn witness(&self, a: &FreeAutomorphism) -> Option<String> {
        self.cached_witness(a).map(|w| w.to_string())
    }
}

/// `GL_n(Z)`; elements are assumed unimodular.
pub struct IntegerMatrixGroup {
    dim: usize,
}

impl IntegerMatrixGroup {
    pub fn new(dim: usize) -> Self {
        IntegerMatrixGroup { dim }
    }
}

impl EffectiveGroup for IntegerMatrixGroup {
    type Element = IntMatrix;

    fn identity(&self) -> IntMatrix {
        IntMatrix::identity(self.dim)
    }

    fn multiply(&self, a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        a * b
    }

    fn invert(&self, a: &IntMatrix) -> IntMatrix {
        let inv = a
            .map(|&x| Ratio::from_integer(x))
            .inverse()
            .expect("element is invertible");
        inv.map(|q| {
            assert!(q.is_integer(), "element is not unimodular");
            q.to_integer()
        })
    }

    fn equal(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        a == b
    }

    fn fingerprint(&self, a: &IntMatrix) -> u64 {
        hash_of(a)
    }
}

/// `GL_n` over an exact field.
pub struct MatrixGroup<T> {
    dim: usize,
    _field: std::marker::PhantomData<fn() -> T>,
}

impl<T> MatrixGroup<T> {
    pub fn new(dim: usize) -> Self {
        MatrixGroup {
            dim,
            _field: std::marker::PhantomData,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl<T: ExactField + Hash + fmt::Display> EffectiveGroup for MatrixGroup<T> {
    type Element = Matrix<T>;

    fn identity(&self) -> Matrix<T> {
        Matrix::identity(self.dim)
    }

    fn multiply(&self, a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
        a * b
    }

    fn invert(&self, a: &Matrix<T>) -> Matrix<T> {
        a.inverse().expect("element is invertible")
    }

    fn equal(&self, a: &Matrix<T>, b: &Matrix<T>) -> bool {
        a == b
    }

    fn fingerprint(&self, a: &Matrix<T>) -> u64 {
        hash_of(a)
    }
}

/// The symmetric group on `{1..degree}`.
pub struct SymmetricGroup {
    degree: usize,
}

impl SymmetricGroup {
    pub fn new(degree: usize) -> Self {
        SymmetricGroup { degree }
    }
}

impl EffectiveGroup for SymmetricGroup {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn multiply(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }

    fn invert(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn equal(&self, a: &Permutation, b: &Permutation) -> bool {
        a == b
    }

    fn fingerprint(&self, a: &Permutation) -> u64 {
        hash_of(a)
    }
}
