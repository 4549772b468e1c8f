use std::fmt;
use std::str::FromStr;

use super::FreeGroupError;

/// The named automorphisms of `F_n`.
///
/// * `Epsilon(i)`: `a_i ↦ a_i^{-1}`
/// * `Rho(i, j)`: `a_i ↦ a_i a_j`
/// * `Lambda(i, j)`: `a_i ↦ a_j a_i`
/// * `Sigma(i, j)`: swaps `a_i` and `a_j`; when `j = n + 1` it is instead
///   `a_i ↦ a_i^{-1}`, `a_k ↦ a_k a_i^{-1}` for `k ≠ i`
/// * `Delta`: the product of all `Epsilon(i)`
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Generator {
    Epsilon(usize),
    Rho(usize, usize),
    Lambda(usize, usize),
    Sigma(usize, usize),
    Delta,
}

impl Generator {
    /// Checks indices against the rank and normalises `Sigma` to `i < j`.
    pub fn validated(self, rank: usize) -> Result<Generator, FreeGroupError> {
        let invalid = |reason: &str| FreeGroupError::InvalidGenerator {
            generator: self.to_string(),
            rank,
            reason: reason.into(),
        };
        let in_range = |i: usize, bound: usize| (1..=bound).contains(&i);
        match self {
            Generator::Epsilon(i) if !in_range(i, rank) => Err(invalid("index out of range")),
            Generator::Rho(i, j) | Generator::Lambda(i, j) => {
                if !in_range(i, rank) || !in_range(j, rank) {
                    Err(invalid("index out of range"))
                } else if i == j {
                    Err(invalid("indices must differ"))
                } else {
                    Ok(self)
                }
            }
            Generator::Sigma(i, j) => {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                if a == b {
                    Err(invalid("indices must differ"))
                } else if !in_range(a, rank) || !in_range(b, rank + 1) {
                    Err(invalid("index out of range"))
                } else {
                    Ok(Generator::Sigma(a, b))
                }
            }
            g => Ok(g),
        }
    }

    /// Whether the generator is one of Gersten's: `ε_1`, `ρ_ij`, `λ_ij`.
    pub fn is_gersten(self) -> bool {
        matches!(
            self,
            Generator::Epsilon(1) | Generator::Rho(..) | Generator::Lambda(..)
        )
    }

    /// Whether the generator squares to the identity automorphism.
    pub fn is_involution(self) -> bool {
        matches!(
            self,
            Generator::Epsilon(_) | Generator::Sigma(..) | Generator::Delta
        )
    }
}

fn pair(prefix: char, i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{prefix}{i}{j}")
    } else {
        format!("{prefix}{i},{j}")
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Epsilon(i) => write!(f, "e{i}"),
            Generator::Rho(i, j) => f.write_str(&pair('r', i, j)),
            Generator::Lambda(i, j) => f.write_str(&pair('l', i, j)),
            Generator::Sigma(i, j) => f.write_str(&pair('s', i, j)),
            Generator::Delta => f.write_str("D"),
        }
    }
}

impl FromStr for Generator {
    type Err = FreeGroupError;

    /// `e1`, `r21`, `l21`, `s12`, `s14`, `D`; two-digit indices as `r10,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FreeGroupError::Parse(format!("unknown generator token {s:?}"));
        if s == "D" {
            return Ok(Generator::Delta);
        }
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let indices: Vec<usize> = if rest.contains(',') {
            rest.split(',')
                .map(|p| p.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            rest.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        match (kind, indices.as_slice()) {
            ('e', &[i]) => Ok(Generator::Epsilon(i)),
            ('r', &[i, j]) => Ok(Generator::Rho(i, j)),
            ('l', &[i, j]) => Ok(Generator::Lambda(i, j)),
            ('s', &[i, j]) => Ok(Generator::Sigma(i, j)),
            _ => Err(bad()),
        }
    }
}

/// A word in the named generators, `g_1^{k_1} g_2^{k_2} ...`.
///
/// Juxtaposition is composition with the rightmost factor applied first:
/// the word `x y` acts on `F_n` as `w ↦ x(y(w))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GeneratorWord {
    factors: Vec<(Generator, i64)>,
}

impl GeneratorWord {
    pub fn identity() -> Self {
        GeneratorWord::default()
    }

    pub fn single(g: Generator) -> Self {
        GeneratorWord {
            factors: vec![(g, 1)],
        }
    }

    pub fn power(g: Generator, k: i64) -> Self {
        if k == 0 {
            return Self::identity();
        }
        GeneratorWord {
            factors: vec![(g, k)],
        }
    }

    pub fn from_factors(factors: Vec<(Generator, i64)>) -> Self {
        GeneratorWord {
            factors: factors.into_iter().filter(|&(_, k)| k != 0).collect(),
        }
    }

    pub fn product<'a>(words: impl IntoIterator<Item = &'a GeneratorWord>) -> Self {
        words
            .into_iter()
            .fold(Self::identity(), |acc, w| acc.then(w))
    }

    pub fn factors(&self) -> &[(Generator, i64)] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn then(&self, other: &GeneratorWord) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GeneratorWord { factors }
    }

    pub fn inverse(&self) -> Self {
        GeneratorWord {
            factors: self.factors.iter().rev().map(|&(g, k)| (g, -k)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.then(&base))
    }

    /// `x^h = h^{-1} x h`.
    pub fn conjugate_by(&self, h: &GeneratorWord) -> Self {
        h.inverse().then(self).then(h)
    }

    /// `[x, y] = x y x^{-1} y^{-1}`.
    pub fn commutator(x: &GeneratorWord, y: &GeneratorWord) -> Self {
        x.then(y).then(&x.inverse()).then(&y.inverse())
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.factors.iter().map(|&(g, _)| g)
    }

    /// Parses whitespace-separated tokens such as `e1 s14 r21^-1 r31^2`.
    /// `id` and `1` denote the empty word.
    pub fn parse(text: &str) -> Result<Self, FreeGroupError> {
        let mut factors = Vec::new();
        for token in text.split_whitespace() {
            if token == "id" || token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let k: i64 = exp
                        .trim_matches(|c| c == '(' || c == ')' || c == '{' || c == '}')
                        .parse()
                        .map_err(|_| FreeGroupError::Parse(format!("bad exponent in {token:?}")))?;
                    (name, k)
                }
                None => (token, 1),
            };
            factors.push((name.parse::<Generator>()?, exp));
        }
        Ok(Self::from_factors(factors))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(g, k)| {
                if k == 1 {
                    g.to_string()
                } else {
                    format!("{g}^{k}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl From<Generator> for GeneratorWord {
    fn from(g: Generator) -> Self {
        GeneratorWord::single(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        for tok in ["e1", "r21", "l21", "s12", "s14", "D", "r10,2"] {
            let g: Generator = tok.parse().unwrap();
            assert_eq!(g.to_string(), tok);
        }
        assert!("x12".parse::<Generator>().is_err());
        assert!("r2".parse::<Generator>().is_err());
    }

    #[test]
    fn parse_words() {
        let w = GeneratorWord::parse("e1  s14 r21^-1 r31^2").unwrap();
        assert_eq!(
            w.factors(),
            &[
                (Generator::Epsilon(1), 1),
                (Generator::Sigma(1, 4), 1),
                (Generator::Rho(2, 1), -1),
                (Generator::Rho(3, 1), 2)
            ]
        );
        assert_eq!(w.to_string(), "e1 s14 r21^-1 r31^2");
        assert!(GeneratorWord::parse("id").unwrap().is_identity());
        assert!(GeneratorWord::parse("r21^x").is_err());
    }

    #[test]
    fn validation() {
        assert_eq!(
            Generator::Sigma(4, 1).validated(3).unwrap(),
            Generator::Sigma(1, 4)
        );
        assert!(Generator::Sigma(1, 5).validated(3).is_err());
        assert!(Generator::Sigma(4, 4).validated(3).is_err());
        assert!(Generator::Rho(2, 2).validated(3).is_err());
        assert!(Generator::Rho(4, 1).validated(3).is_err());
        assert!(Generator::Epsilon(0).validated(3).is_err());
        assert!(Generator::Delta.validated(3).is_ok());
    }

    #[test]
    fn conjugate_and_commutator_shapes() {
        let x = GeneratorWord::single(Generator::Rho(1, 2));
        let h = GeneratorWord::single(Generator::Epsilon(1));
        assert_eq!(x.conjugate_by(&h).to_string(), "e1^-1 r12 e1");
        assert_eq!(
            GeneratorWord::commutator(&x, &h).to_string(),
            "r12 e1 r12^-1 e1^-1"
        );
    }
}
