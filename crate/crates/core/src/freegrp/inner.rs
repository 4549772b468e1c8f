use std::fmt;
use std::hash::{Hash, Hasher};

use super::automorphism::FreeAutomorphism;
use super::word::{FreeWord, Letter};

/// Splits a reduced word of the form `p · x · p^{-1}` (no cancellation)
/// into `p`, given the middle letter `x`.
fn conjugate_prefix(u: &FreeWord, x: Letter) -> Option<FreeWord> {
    let letters = u.letters();
    if letters.len().is_multiple_of(2) {
        return None;
    }
    let mid = letters.len() / 2;
    if letters[mid] != x {
        return None;
    }
    let prefix = FreeWord::from_letters(letters[..mid].iter().copied());
    (prefix.inverse().letters() == &letters[mid + 1..]).then_some(prefix)
}

/// Reads `k` from a reduced word `x^k · y · x^{-k}`.
fn conjugating_power(t: &FreeWord, x: usize, y: Letter) -> Option<i64> {
    let letters = t.letters();
    let half = letters.len() / 2;
    if letters.len().is_multiple_of(2) || letters[half] != y {
        return None;
    }
    let head = &letters[..half];
    let sign = head.first().map_or(1, |l| l.sign());
    if head.iter().any(|l| l.index() != x || l.sign() != sign) {
        return None;
    }
    let k = half as i64 * sign as i64;
    (FreeWord::generator(x)
        .pow(k)
        .mul(&FreeWord::from_letters([y]))
        .mul(&FreeWord::generator(x).pow(-k))
        == *t)
        .then_some(k)
}

/// Returns `w` with `aut(a_i) = w a_i w^{-1}` for every `i`, if `aut` is inner.
///
/// The first basis letter moved by `aut` (the pivot `a_p`) pins `w` down to
/// `p · a_p^k`, where `p` is read off the reduced image of `a_p`. The exponent
/// `k` is then forced by any other basis letter, and the candidate is checked
/// against all equations.
pub fn inner_witness(aut: &FreeAutomorphism) -> Option<FreeWord> {
    let n = aut.rank();
    let Some(pivot) = (1..=n).find(|&i| *aut.image(i) != FreeWord::generator(i)) else {
        return Some(FreeWord::empty());
    };
    let prefix = conjugate_prefix(aut.image(pivot), Letter::gen(pivot))?;
    let witness = match (1..=n).find(|&j| j != pivot) {
        None => prefix,
        Some(j) => {
            let t = prefix.inverse().mul(aut.image(j)).mul(&prefix);
            let k = conjugating_power(&t, pivot, Letter::gen(j))?;
            prefix.mul(&FreeWord::generator(pivot).pow(k))
        }
    };
    (1..=n)
        .all(|i| FreeWord::generator(i).conjugated_by(&witness) == *aut.image(i))
        .then_some(witness)
}

/// Whether `a` and `b` differ by an inner automorphism.
pub fn outer_equal(a: &FreeAutomorphism, b: &FreeAutomorphism) -> bool {
    if a.rank() != b.rank() || a.abelianization() != b.abelianization() {
        return false;
    }
    let diff = a.compose(&b.inverse()).expect("ranks agree");
    inner_witness(&diff).is_some()
}

/// An element of `Out(F_n)`, represented by any automorphism in its class.
#[derive(Clone, Debug)]
pub struct OuterElement {
    representative: FreeAutomorphism,
}

impl OuterElement {
    pub fn new(representative: FreeAutomorphism) -> Self {
        OuterElement { representative }
    }

    pub fn representative(&self) -> &FreeAutomorphism {
        &self.representative
    }

    pub fn compose(&self, other: &OuterElement) -> OuterElement {
        OuterElement::new(
            self.representative
                .compose(&other.representative)
                .expect("equal ranks in Out(F_n)"),
        )
    }

    pub fn inverse(&self) -> OuterElement {
        OuterElement::new(self.representative.inverse())
    }
}

impl PartialEq for OuterElement {
    fn eq(&self, other: &Self) -> bool {
        outer_equal(&self.representative, &other.representative)
    }
}

impl Eq for OuterElement {}

/// Consistent with equality: inner automorphisms abelianize to the identity.
impl Hash for OuterElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.representative.abelianization().hash(state);
    }
}

impl fmt::Display for OuterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegrp::{Generator, GeneratorWord};

    fn aut(text: &str) -> FreeAutomorphism {
        FreeAutomorphism::from_word(&GeneratorWord::parse(text).unwrap(), 3).unwrap()
    }

    #[test]
    fn witness_examples() {
        let c = FreeAutomorphism::conjugation(&FreeWord::generator(1), 3).unwrap();
        assert_eq!(inner_witness(&c), Some(FreeWord::generator(1)));
        assert_eq!(
            inner_witness(&FreeAutomorphism::identity(3)),
            Some(FreeWord::empty())
        );
        assert_eq!(inner_witness(&aut("e1")), None);
    }

    #[test]
    fn witness_when_first_letter_fixed() {
        // Conjugation by a1^3 fixes a1, so the pivot moves to a2.
        let w = FreeWord::from_signed(&[1, 1, 1]);
        let c = FreeAutomorphism::conjugation(&w, 3).unwrap();
        assert_eq!(inner_witness(&c), Some(w));
        let w = FreeWord::from_signed(&[2, -3, 1, 1]);
        let c = FreeAutomorphism::conjugation(&w, 3).unwrap();
        assert_eq!(inner_witness(&c), Some(w));
    }

    #[test]
    fn outer_equality_examples() {
        assert!(outer_equal(&aut("e1 s14"), &aut("r31 r21")));
        let lhs = aut("l21").compose(&FreeAutomorphism::identity(3)).unwrap();
        let h = GeneratorWord::parse("D s23").unwrap();
        let conj = FreeAutomorphism::from_word(
            &GeneratorWord::single(Generator::Lambda(2, 1)).conjugate_by(&h),
            3,
        )
        .unwrap();
        assert!(outer_equal(&conj, &aut("r31")));
        assert!(!outer_equal(&aut("r21"), &lhs));
    }

    #[test]
    fn rank_one_witness() {
        let a = FreeAutomorphism::identity(1);
        assert_eq!(inner_witness(&a), Some(FreeWord::empty()));
    }

    #[test]
    fn outer_elements_hash_consistently() {
        use std::collections::HashSet;
        let mut set = HashSet::new();
        set.insert(OuterElement::new(aut("r31 r21")));
        assert!(set.contains(&OuterElement::new(aut("e1 s14"))));
        assert!(!set.contains(&OuterElement::new(aut("r21"))));
    }
}
