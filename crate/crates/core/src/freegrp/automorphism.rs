use std::fmt;

use super::generator::{Generator, GeneratorWord};
use super::word::{FreeWord, Letter};
use super::FreeGroupError;
use crate::IntMatrix;

/// An automorphism of `F_n` given by the images of the basis letters,
/// always built from named generators so it is invertible by construction.
#[derive(Clone, Debug)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<FreeWord>,
    provenance: GeneratorWord,
}

fn letter(i: usize, sign: i8) -> FreeWord {
    FreeWord::from_letters([Letter::new(i, sign)])
}

/// Images of the basis under `g^{sign}`, for a validated generator.
fn generator_images(g: Generator, rank: usize, sign: i8) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (1..=rank).map(FreeWord::generator).collect();
    match g {
        Generator::Epsilon(i) => images[i - 1] = letter(i, -1),
        Generator::Delta => {
            for (k, img) in images.iter_mut().enumerate() {
                *img = letter(k + 1, -1);
            }
        }
        Generator::Rho(i, j) => {
            images[i - 1] = FreeWord::from_letters([Letter::gen(i), Letter::new(j, sign)])
        }
        Generator::Lambda(i, j) => {
            images[i - 1] = FreeWord::from_letters([Letter::new(j, sign), Letter::gen(i)])
        }
        Generator::Sigma(i, j) if j <= rank => images.swap(i - 1, j - 1),
        Generator::Sigma(i, _) => {
            for (k, img) in images.iter_mut().enumerate() {
                *img = if k + 1 == i {
                    letter(i, -1)
                } else {
                    FreeWord::from_letters([Letter::gen(k + 1), Letter::new(i, -1)])
                };
            }
        }
    }
    images
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        FreeAutomorphism {
            rank,
            images: (1..=rank).map(FreeWord::generator).collect(),
            provenance: GeneratorWord::identity(),
        }
    }

    /// One named generator, with images exactly as in its definition.
    pub fn generator(g: Generator, rank: usize) -> Result<Self, FreeGroupError> {
        let g = g.validated(rank)?;
        Ok(FreeAutomorphism {
            rank,
            images: generator_images(g, rank, 1),
            provenance: GeneratorWord::single(g),
        })
    }

    fn generator_power(g: Generator, k: i64, rank: usize) -> Result<Self, FreeGroupError> {
        let g = g.validated(rank)?;
        let sign = if k < 0 { -1 } else { 1 };
        let step = FreeAutomorphism {
            rank,
            images: generator_images(g, rank, if g.is_involution() { 1 } else { sign }),
            provenance: GeneratorWord::power(g, sign as i64),
        };
        let mut acc = FreeAutomorphism::identity(rank);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&step)?;
        }
        Ok(acc)
    }

    /// Evaluates a generator word: `x y` becomes `x ∘ y`.
    pub fn from_word(word: &GeneratorWord, rank: usize) -> Result<Self, FreeGroupError> {
        let mut acc = FreeAutomorphism::identity(rank);
        for &(g, k) in word.factors() {
            acc = acc.compose(&Self::generator_power(g, k, rank)?)?;
        }
        Ok(acc)
    }

    /// Conjugation `v ↦ w v w^{-1}`, assembled from the generators via
    /// `∏_{j≠k} ρ_jk λ_jk^{-1} = (v ↦ a_k^{-1} v a_k)`.
    pub fn conjugation(w: &FreeWord, rank: usize) -> Result<Self, FreeGroupError> {
        if w.max_index() > rank {
            return Err(FreeGroupError::RankMismatch {
                expected: rank,
                found: w.max_index(),
            });
        }
        let mut acc = FreeAutomorphism::identity(rank);
        for l in w.letters() {
            let k = l.index();
            let mut by_inverse = GeneratorWord::identity();
            for j in (1..=rank).filter(|&j| j != k) {
                by_inverse = by_inverse
                    .then(&GeneratorWord::single(Generator::Rho(j, k)))
                    .then(&GeneratorWord::power(Generator::Lambda(j, k), -1));
            }
            let step = if l.sign() < 0 {
                by_inverse
            } else {
                by_inverse.inverse()
            };
            acc = acc.compose(&Self::from_word(&step, rank)?)?;
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn provenance(&self) -> &GeneratorWord {
        &self.provenance
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| *w == FreeWord::generator(k + 1))
    }

    /// Substitutes images letter by letter and freely reduces.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        if w.max_index() > self.rank {
            return Err(FreeGroupError::RankMismatch {
                expected: self.rank,
                found: w.max_index(),
            });
        }
        let mut out = FreeWord::empty();
        for l in w.letters() {
            let img = &self.images[l.index() - 1];
            out = if l.sign() > 0 {
                out.mul(img)
            } else {
                out.mul(&img.inverse())
            };
        }
        Ok(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<Self, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<_, _>>()?;
        Ok(FreeAutomorphism {
            rank: self.rank,
            images,
            provenance: self.provenance.then(&other.provenance),
        })
    }

    /// Inverse obtained by reversing the provenance and inverting each
    /// generator through its known inverse images.
    pub fn inverse(&self) -> Self {
        Self::from_word(&self.provenance.inverse(), self.rank)
            .expect("provenance generators are valid for this rank")
    }

    /// Integer matrix whose column `i` is the exponent-sum vector of the
    /// image of `a_i`.
    pub fn abelianization(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rank, self.rank, |r, c| {
            self.images[c].exponent_sum(r + 1)
        })
    }
}

impl PartialEq for FreeAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for FreeAutomorphism {}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(k, w)| format!("a{} -> {}", k + 1, w))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `make_generator` with a spelled-out name.
pub fn make_generator(g: Generator, rank: usize) -> Result<FreeAutomorphism, FreeGroupError> {
    FreeAutomorphism::generator(g, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn w(xs: &[i32]) -> FreeWord {
        FreeWord::from_signed(xs)
    }

    fn gen(g: Generator) -> FreeAutomorphism {
        FreeAutomorphism::generator(g, 3).unwrap()
    }

    #[test]
    fn generator_images_match_definitions() {
        let r21 = gen(Rho(2, 1));
        assert_eq!(r21.images(), &[w(&[1]), w(&[2, 1]), w(&[3])]);
        let e1 = gen(Epsilon(1));
        assert_eq!(e1.images(), &[w(&[-1]), w(&[2]), w(&[3])]);
        let s14 = gen(Sigma(1, 4));
        assert_eq!(s14.images(), &[w(&[-1]), w(&[2, -1]), w(&[3, -1])]);
        let l21 = gen(Lambda(2, 1));
        assert_eq!(l21.image(2), &w(&[1, 2]));
        assert_eq!(gen(Sigma(1, 3)).images(), &[w(&[3]), w(&[2]), w(&[1])]);
        assert_eq!(gen(Delta).images(), &[w(&[-1]), w(&[-2]), w(&[-3])]);
        assert_eq!(gen(Rho(2, 1)).provenance().to_string(), "r21");
    }

    #[test]
    fn invalid_generators_rejected() {
        assert!(matches!(
            FreeAutomorphism::generator(Rho(1, 1), 3),
            Err(FreeGroupError::InvalidGenerator { .. })
        ));
        assert!(FreeAutomorphism::generator(Epsilon(4), 3).is_err());
        assert!(FreeAutomorphism::generator(Sigma(2, 5), 3).is_err());
    }

    #[test]
    fn apply_examples() {
        assert_eq!(gen(Rho(2, 1)).apply(&w(&[2])).unwrap(), w(&[2, 1]));
        assert_eq!(
            gen(Epsilon(1)).apply(&w(&[1, 2, 1])).unwrap(),
            w(&[-1, 2, -1])
        );
        let any = w(&[3, -2, 1, 1]);
        assert_eq!(FreeAutomorphism::identity(3).apply(&any).unwrap(), any);
        assert!(matches!(
            gen(Epsilon(1)).apply(&w(&[4])),
            Err(FreeGroupError::RankMismatch { .. })
        ));
    }

    #[test]
    fn compose_examples() {
        let e1s14 = gen(Epsilon(1)).compose(&gen(Sigma(1, 4))).unwrap();
        assert_eq!(e1s14.image(2), &w(&[2, 1]));
        assert_eq!(e1s14, gen(Rho(2, 1)).compose(&gen(Rho(3, 1))).unwrap());

        let rhs = gen(Lambda(1, 2))
            .compose(
                &gen(Lambda(2, 1))
                    .inverse()
                    .compose(&gen(Rho(1, 2)))
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(rhs.image(1), &w(&[2]));
        assert_eq!(rhs.image(2), &w(&[-1]));
        assert_eq!(rhs, gen(Epsilon(1)).compose(&gen(Sigma(1, 2))).unwrap());

        let x = gen(Lambda(3, 2));
        assert_eq!(x.compose(&FreeAutomorphism::identity(3)).unwrap(), x);
        assert!(x.compose(&FreeAutomorphism::identity(4)).is_err());
        assert_eq!(rhs.provenance().to_string(), "l12 l21^-1 r12");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(gen(Epsilon(1)).inverse(), gen(Epsilon(1)));
        assert_eq!(gen(Rho(2, 1)).inverse().image(2), &w(&[2, -1]));
        assert!(FreeAutomorphism::identity(3).inverse().is_identity());
        assert_eq!(gen(Sigma(2, 4)).inverse(), gen(Sigma(2, 4)));
    }

    #[test]
    fn negative_powers_in_words() {
        let word = GeneratorWord::parse("r21^-2").unwrap();
        let a = FreeAutomorphism::from_word(&word, 3).unwrap();
        assert_eq!(a.image(2), &w(&[2, -1, -1]));
    }

    #[test]
    fn abelianization_examples() {
        let r21 = gen(Rho(2, 1)).abelianization();
        assert_eq!(
            r21,
            IntMatrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        assert_eq!(
            gen(Epsilon(1)).abelianization(),
            IntMatrix::diagonal(&[-1, 1, 1])
        );
        assert_eq!(
            gen(Delta).abelianization(),
            IntMatrix::diagonal(&[-1, -1, -1])
        );
    }

    #[test]
    fn conjugation_built_from_generators() {
        let c = FreeAutomorphism::conjugation(&w(&[1]), 3).unwrap();
        assert_eq!(c.images(), &[w(&[1]), w(&[1, 2, -1]), w(&[1, 3, -1])]);
        let c2 = FreeAutomorphism::conjugation(&w(&[2, -3]), 3).unwrap();
        for i in 1..=3 {
            assert_eq!(
                c2.image(i),
                &FreeWord::generator(i).conjugated_by(&w(&[2, -3]))
            );
        }
    }
}
