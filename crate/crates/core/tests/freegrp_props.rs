use outfn::freegrp::{
    inner_witness, outer_equal, FreeAutomorphism, FreeWord, Generator, GeneratorWord,
};
use proptest::prelude::*;

const RANK: usize = 3;

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1..=RANK).prop_map(Generator::Epsilon),
        (1..=RANK, 1..=RANK)
            .prop_filter("distinct", |(i, j)| i != j)
            .prop_map(|(i, j)| Generator::Rho(i, j)),
        (1..=RANK, 1..=RANK)
            .prop_filter("distinct", |(i, j)| i != j)
            .prop_map(|(i, j)| Generator::Lambda(i, j)),
        (1..=RANK, 1..=RANK + 1)
            .prop_filter("distinct", |(i, j)| i != j)
            .prop_map(|(i, j)| Generator::Sigma(i, j)),
        Just(Generator::Delta),
    ]
}

fn generator_word(max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec(
        (generator(), prop_oneof![Just(1i64), Just(-1i64)]),
        0..=max_len,
    )
    .prop_map(GeneratorWord::from_factors)
}

fn automorphism(max_len: usize) -> impl Strategy<Value = FreeAutomorphism> {
    generator_word(max_len).prop_map(|w| FreeAutomorphism::from_word(&w, RANK).unwrap())
}

fn free_word(max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(
        (1..=RANK as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]),
        0..=max_len,
    )
    .prop_map(|xs| FreeWord::from_signed(&xs))
}

/// Every reduced word of length at most `len` in `F_3`.
fn all_words(len: usize) -> Vec<FreeWord> {
    let letters: Vec<i32> = vec![1, -1, 2, -2, 3, -3];
    let mut layer = vec![FreeWord::empty()];
    let mut out = layer.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                let v = w.mul(&FreeWord::from_signed(&[l]));
                if v.len() == w.len() + 1 {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn brute_force_inner(a: &FreeAutomorphism, conjugators: &[FreeWord]) -> bool {
    conjugators
        .iter()
        .any(|w| (1..=RANK).all(|i| FreeWord::generator(i).conjugated_by(w) == *a.image(i)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in automorphism(4), b in automorphism(4), c in automorphism(4)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_is_two_sided(a in automorphism(6)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
    }

    #[test]
    fn apply_respects_composition(a in automorphism(3), b in automorphism(3), w in free_word(8)) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.apply(&w).unwrap(), a.apply(&b.apply(&w).unwrap()).unwrap());
    }

    #[test]
    fn abelianization_is_a_homomorphism(a in automorphism(5), b in automorphism(5)) {
        let ab = a.compose(&b).unwrap().abelianization();
        prop_assert_eq!(ab, &a.abelianization() * &b.abelianization());
    }

    #[test]
    fn conjugations_are_detected(w in free_word(6)) {
        let c = FreeAutomorphism::conjugation(&w, RANK).unwrap();
        let witness = inner_witness(&c).expect("conjugation is inner");
        prop_assert_eq!(witness, w);
    }

    #[test]
    fn outer_equality_is_an_equivalence(a in automorphism(3), b in automorphism(3), w in free_word(3)) {
        let c = FreeAutomorphism::conjugation(&w, RANK).unwrap();
        let a2 = c.compose(&a).unwrap();
        prop_assert!(outer_equal(&a, &a));
        prop_assert!(outer_equal(&a, &a2) && outer_equal(&a2, &a));
        prop_assert_eq!(outer_equal(&a, &b), outer_equal(&a2, &b));
    }
}

#[test]
fn inner_witness_agrees_with_brute_force() {
    // Automorphisms with images of length ≤ 3 against all conjugators of length ≤ 6.
    let conjugators = all_words(6);
    let mut candidates: Vec<FreeAutomorphism> = Vec::new();
    for w in all_words(1) {
        candidates.push(FreeAutomorphism::conjugation(&w, RANK).unwrap());
    }
    let gens = [
        Generator::Epsilon(1),
        Generator::Rho(2, 1),
        Generator::Lambda(3, 2),
        Generator::Sigma(1, 4),
        Generator::Sigma(2, 3),
        Generator::Delta,
    ];
    for &g in &gens {
        for &h in &gens {
            let x = FreeAutomorphism::from_word(
                &GeneratorWord::from_factors(vec![(g, 1), (h, 1)]),
                RANK,
            )
            .unwrap();
            candidates.push(x);
        }
    }
    let short: Vec<_> = candidates
        .into_iter()
        .filter(|a| a.images().iter().all(|w| w.len() <= 3))
        .collect();
    assert!(short.len() > 20);
    for a in &short {
        assert_eq!(
            inner_witness(a).is_some(),
            brute_force_inner(a, &conjugators),
            "{a}"
        );
    }
}
