use std::fmt;

/// A basis letter `a_i` or its inverse. Indices are 1-based.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    index: u32,
    inverted: bool,
}

impl Letter {
    pub fn new(index: usize, sign: i8) -> Self {
        assert!(index >= 1, "letter indices start at 1");
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        Letter {
            index: index as u32,
            inverted: sign < 0,
        }
    }

    pub fn gen(index: usize) -> Self {
        Self::new(index, 1)
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn sign(self) -> i8 {
        if self.inverted {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            inverted: !self.inverted,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted {
            write!(f, "a{}^-1", self.index)
        } else {
            write!(f, "a{}", self.index)
        }
    }
}

/// A freely reduced word in the letters `a_i^{±1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn generator(index: usize) -> Self {
        FreeWord {
            letters: vec![Letter::gen(index)],
        }
    }

    /// Freely reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out = FreeWord::empty();
        for l in letters {
            out.push(l);
        }
        out
    }

    /// Signed indices: `[2, -1]` is `a2 a1^-1`.
    pub fn from_signed(indices: &[i32]) -> Self {
        Self::from_letters(indices.iter().map(|&k| {
            assert_ne!(k, 0, "zero is not a letter");
            Letter::new(k.unsigned_abs() as usize, if k > 0 { 1 } else { -1 })
        }))
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::empty(), |acc, _| acc.mul(&base))
    }

    /// `w · self · w^{-1}`.
    pub fn conjugated_by(&self, w: &FreeWord) -> FreeWord {
        w.mul(self).mul(&w.inverse())
    }

    /// Exponent sum of `a_i` in the word.
    pub fn exponent_sum(&self, index: usize) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.index() == index)
            .map(|l| l.sign() as i64)
            .sum()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn letters() -> impl Strategy<Value = Vec<i32>> {
        proptest::collection::vec(prop_oneof![1i32..=3, -3i32..=-1], 0..=64)
    }

    #[test]
    fn cancels_adjacent_inverses() {
        let w = FreeWord::from_signed(&[1, 2, -2, -1, 3]);
        assert_eq!(w, FreeWord::from_signed(&[3]));
        assert_eq!(w.to_string(), "a3");
        assert_eq!(FreeWord::from_signed(&[1, -1]).to_string(), "1");
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent(ls in letters()) {
            let w = FreeWord::from_signed(&ls);
            prop_assert!(w.is_reduced());
            prop_assert_eq!(FreeWord::from_letters(w.letters().iter().copied()), w);
        }

        #[test]
        fn product_with_inverse_is_trivial(ls in letters()) {
            let w = FreeWord::from_signed(&ls);
            prop_assert!(w.mul(&w.inverse()).is_empty());
        }

        #[test]
        fn exponent_sums_are_additive(a in letters(), b in letters()) {
            let (u, v) = (FreeWord::from_signed(&a), FreeWord::from_signed(&b));
            for i in 1..=3 {
                prop_assert_eq!(u.mul(&v).exponent_sum(i), u.exponent_sum(i) + v.exponent_sum(i));
            }
        }
    }
}
