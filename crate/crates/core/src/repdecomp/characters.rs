use std::fmt;

use num_traits::{Signed, Zero};

use super::representation::Representation;
use super::RepError;
use crate::freegrp::GeneratorWord;
use crate::Rational;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SymmetricSubgroup {
    /// `⟨σ_12, σ_13⟩`.
    S3,
    /// `⟨σ_12, σ_13, σ_14⟩ < G_3`.
    S4,
}

/// One conjugacy class: a representative word in the `σ_ij` and its size.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: &'static str,
    pub cycle_type: &'static [usize],
    pub size: i64,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub order: i64,
    pub classes: Vec<ConjugacyClass>,
    /// `(name, dimension, values on the classes)`.
    pub irreducibles: Vec<(&'static str, i64, Vec<i64>)>,
}

impl SymmetricSubgroup {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s3" => Some(SymmetricSubgroup::S3),
            "s4" => Some(SymmetricSubgroup::S4),
            _ => None,
        }
    }

    pub fn character_table(self) -> CharacterTable {
        let class = |representative, cycle_type, size| ConjugacyClass {
            representative,
            cycle_type,
            size,
        };
        match self {
            SymmetricSubgroup::S3 => CharacterTable {
                order: 6,
                classes: vec![
                    class("id", &[1, 1, 1], 1),
                    class("s12", &[2, 1], 3),
                    class("s12 s13", &[3], 2),
                ],
                irreducibles: vec![
                    ("trivial", 1, vec![1, 1, 1]),
                    ("determinant", 1, vec![1, -1, 1]),
                    ("standard", 2, vec![2, 0, -1]),
                ],
            },
            SymmetricSubgroup::S4 => CharacterTable {
                order: 24,
                classes: vec![
                    class("id", &[1, 1, 1, 1], 1),
                    class("s12", &[2, 1, 1], 6),
                    class("s12 s34", &[2, 2], 3),
                    class("s12 s13", &[3, 1], 8),
                    class("s12 s13 s14", &[4], 6),
                ],
                irreducibles: vec![
                    ("trivial", 1, vec![1, 1, 1, 1, 1]),
                    ("determinant", 1, vec![1, -1, 1, 1, -1]),
                    ("standard", 3, vec![3, 1, -1, 0, -1]),
                    ("signed standard", 3, vec![3, -1, -1, 0, 1]),
                    ("partition (2,2)", 2, vec![2, 0, 2, -1, 0]),
                ],
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepMultiplicities {
    pub group: SymmetricSubgroup,
    pub entries: Vec<(&'static str, u64)>,
}

impl IrrepMultiplicities {
    pub fn get(&self, name: &str) -> u64 {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map_or(0, |&(_, m)| m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(n, m)| (n.to_string(), (*m).into()))
            .collect();
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for IrrepMultiplicities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(n, m)| format!("{m}·{n}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Restricts `rep` to the chosen symmetric subgroup and decomposes it by
/// character inner products over conjugacy classes.
pub fn sym_decompose(
    rep: &Representation,
    which: SymmetricSubgroup,
) -> Result<IrrepMultiplicities, RepError> {
    let table = which.character_table();
    let traces = table
        .classes
        .iter()
        .map(|c| rep.trace_of(&GeneratorWord::parse(c.representative).expect("static class word")))
        .collect::<Result<Vec<Rational>, _>>()?;
    let mut entries = Vec::new();
    for &(name, _, ref chi) in &table.irreducibles {
        let mut sum = Rational::zero();
        for ((class, t), &x) in table.classes.iter().zip(&traces).zip(chi) {
            sum += t * Rational::from_integer((class.size * x).into());
        }
        let m = sum / Rational::from_integer(table.order.into());
        if !m.is_integer() || m.is_negative() {
            return Err(RepError::Violation(format!(
                "multiplicity of {name} is {m}"
            )));
        }
        let m: u64 = m.to_integer().try_into().expect("small multiplicity");
        entries.push((name, m));
    }
    for (k, t) in traces.iter().enumerate() {
        let rebuilt: i64 = table
            .irreducibles
            .iter()
            .zip(&entries)
            .map(|((_, _, chi), (_, m))| chi[k] * *m as i64)
            .sum();
        if Rational::from_integer(rebuilt.into()) != *t {
            return Err(RepError::Violation(format!(
                "characters do not reconstruct the trace {t}"
            )));
        }
    }
    Ok(IrrepMultiplicities {
        group: which,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_orthonormal() {
        for g in [SymmetricSubgroup::S3, SymmetricSubgroup::S4] {
            let t = g.character_table();
            assert_eq!(t.classes.iter().map(|c| c.size).sum::<i64>(), t.order);
            assert_eq!(
                t.irreducibles.iter().map(|(_, d, _)| d * d).sum::<i64>(),
                t.order
            );
            for (_, _, a) in &t.irreducibles {
                for (_, _, b) in &t.irreducibles {
                    let ip: i64 = t
                        .classes
                        .iter()
                        .zip(a)
                        .zip(b)
                        .map(|((c, x), y)| c.size * x * y)
                        .sum();
                    assert!(ip == 0 || ip == t.order);
                    assert_eq!(ip == t.order, a == b);
                }
            }
        }
    }

    #[test]
    fn standard_pullback() {
        let std = Representation::standard(3);
        let m = sym_decompose(&std, SymmetricSubgroup::S3).unwrap();
        assert_eq!(
            (m.get("trivial"), m.get("standard"), m.get("determinant")),
            (1, 1, 0)
        );
        let m = sym_decompose(&std, SymmetricSubgroup::S4).unwrap();
        assert_eq!(m.to_string(), "1·standard");
    }

    #[test]
    fn determinant_pullback() {
        let m = sym_decompose(&Representation::det(3), SymmetricSubgroup::S4).unwrap();
        assert_eq!(m.to_string(), "1·determinant");
    }
}
