use std::collections::BTreeMap;

use super::decomposition::EigenDecomposition;
use super::representation::Representation;
use super::RepError;
use crate::freegrp::{Generator, GeneratorWord};
use crate::gersten::subgroups;
use crate::perm::Subset;

/// Whether `ρ_ij` and `λ_ij` preserve every diamond
/// `E_J ⊕ E_{J∪{i}} ⊕ E_{J∪{j}} ⊕ E_{J∪{i,j}}`, `J ⊆ {1..n} ∖ {i, j}`.
pub fn check_diamond(
    rep: &Representation,
    dec: &EigenDecomposition,
    i: usize,
    j: usize,
) -> Result<bool, RepError> {
    assert_ne!(i, j, "diamond indices must differ");
    let maps = [
        rep.image(Generator::Rho(i, j))?,
        rep.image(Generator::Lambda(i, j))?,
    ];
    let pair = Subset::from_indices([i, j]);
    for base in Subset::all(rep.rank()).filter(|s| s.mask() & pair.mask() == 0) {
        let corners = [
            base,
            base.union(Subset::from_indices([i])),
            base.union(Subset::from_indices([j])),
            base.union(pair),
        ];
        let diamond = dec.sum_of(&corners);
        if !maps.iter().all(|m| diamond.is_invariant_under(m)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `ρ_ij` and `λ_ij` have equal images for all `i ≠ j`, which is
/// exactly the condition for factoring through `GL_n(Z)`.
pub fn factors_through_gl3(rep: &Representation) -> bool {
    let imgs = rep.gersten_images();
    imgs.iter().all(|(g, m)| match *g {
        Generator::Rho(i, j) => imgs[&Generator::Lambda(i, j)] == *m,
        _ => true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KillV4Report {
    /// Some element of `V_4` acts nontrivially.
    PremiseNotMet { witness: String },
    /// `V_4` acts trivially; the image is `⟨φ(ε_1)⟩` of the stated order.
    Holds { image_order: usize },
}

/// If the representation kills `V_4`, confirms that every `ρ_ij` and
/// `λ_ij` acts trivially and that the image is generated by `φ(ε_1)`.
pub fn kill_v4_check(rep: &Representation) -> Result<KillV4Report, RepError> {
    for v in subgroups::v4_elements() {
        if !rep.image_of_word(&v)?.is_identity() {
            return Ok(KillV4Report::PremiseNotMet {
                witness: v.to_string(),
            });
        }
    }
    let images: &BTreeMap<Generator, _> = rep.gersten_images();
    if let Some((g, _)) = images
        .iter()
        .find(|(g, m)| **g != Generator::Epsilon(1) && !m.is_identity())
    {
        return Err(RepError::Violation(format!(
            "V4 acts trivially but {g} does not"
        )));
    }
    let e1 = rep.image_of_word(&GeneratorWord::single(Generator::Epsilon(1)))?;
    if !(&e1 * &e1).is_identity() {
        return Err(RepError::Violation(
            "V4 acts trivially but e1 does not square to 1".into(),
        ));
    }
    Ok(KillV4Report::Holds {
        image_order: if e1.is_identity() { 1 } else { 2 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdecomp::epsilon_decomposition;
    use crate::{Rational, RationalMatrix};
    use num_traits::One;

    #[test]
    fn diamonds_hold_for_pullbacks() {
        for name in ["standard", "sym2"] {
            let rep = Representation::builtin(name, 3).unwrap();
            let dec = epsilon_decomposition(&rep).unwrap();
            for i in 1..=3 {
                for j in (1..=3).filter(|&j| j != i) {
                    assert!(check_diamond(&rep, &dec, i, j).unwrap(), "{name} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn diamond_detects_mixing_e3_into_e1() {
        let std = Representation::standard(3);
        let mut m = RationalMatrix::identity(3);
        m[(0, 1)] = Rational::one();
        m[(0, 2)] = Rational::one();
        let bad = std.with_image(Generator::Rho(2, 1), m);
        let dec = epsilon_decomposition(&bad).unwrap();
        assert!(!check_diamond(&bad, &dec, 2, 1).unwrap());
    }

    #[test]
    fn gl3_factorisation() {
        assert!(factors_through_gl3(&Representation::standard(3)));
        assert!(factors_through_gl3(&Representation::sym2(3)));
        let std = Representation::standard(3);
        let bad = std.with_image(
            Generator::Lambda(2, 1),
            std.gersten_images()[&Generator::Rho(1, 2)].clone(),
        );
        assert!(!factors_through_gl3(&bad));
    }

    #[test]
    fn v4_contract() {
        assert_eq!(
            kill_v4_check(&Representation::trivial(3)).unwrap(),
            KillV4Report::Holds { image_order: 1 }
        );
        assert_eq!(
            kill_v4_check(&Representation::det(3)).unwrap(),
            KillV4Report::Holds { image_order: 2 }
        );
        assert!(matches!(
            kill_v4_check(&Representation::standard(3)).unwrap(),
            KillV4Report::PremiseNotMet { ref witness } if witness == "s12 s34"
        ));
    }
}
