use outfn::freegrp::{Generator, GeneratorWord};
use outfn::gersten::{closure, SymmetricGroup};
use outfn::perm::Permutation;
use outfn::repdecomp::{
    builtin_suite, check_diamond, components_invariant, diagram_pushforward, epsilon_decomposition,
    factors_through_gl3, kill_v4_check, level_dimensions, minimal_diagram_in, sym_decompose,
    KillV4Report, SymmetricSubgroup,
};
use outfn::{Rational, RationalMatrix};

fn word(t: &str) -> GeneratorWord {
    GeneratorWord::parse(t).unwrap()
}

#[test]
fn decompositions_are_complete_and_level_balanced() {
    for rep in builtin_suite(3) {
        let dec = epsilon_decomposition(&rep).unwrap();
        let total: usize = dec.spaces().map(|(_, e)| e.dim()).sum();
        assert_eq!(total, rep.dim(), "{}", rep.name());
        assert!(dec.signs_consistent(&rep).unwrap());
        let levels = level_dimensions(&dec).unwrap();
        assert_eq!(levels.iter().sum::<usize>(), rep.dim());
        for i in 1..=3 {
            for j in (1..=3).filter(|&j| j != i) {
                assert!(
                    check_diamond(&rep, &dec, i, j).unwrap(),
                    "{} ({i},{j})",
                    rep.name()
                );
            }
        }
        assert!(factors_through_gl3(&rep), "{}", rep.name());
    }
}

#[test]
fn diagrams_transform_under_w3() {
    let sigmas = [
        (Generator::Sigma(1, 2), (1, 2)),
        (Generator::Sigma(2, 3), (2, 3)),
        (Generator::Sigma(1, 3), (1, 3)),
    ];
    for rep in builtin_suite(3) {
        let dec = epsilon_decomposition(&rep).unwrap();
        for x in [word("r21"), word("l21")] {
            let dx = minimal_diagram_in(&dec, &rep.image_of_word(&x).unwrap()).unwrap();
            for &(s, (a, b)) in &sigmas {
                let conj = x.conjugate_by(&GeneratorWord::single(s));
                let lhs = minimal_diagram_in(&dec, &rep.image_of_word(&conj).unwrap()).unwrap();
                let perm = Permutation::transposition(3, a, b);
                assert_eq!(
                    lhs,
                    diagram_pushforward(&dx, &perm.inverse()),
                    "{} {x} by {s}",
                    rep.name()
                );
            }
            for i in 1..=3 {
                let conj = x.conjugate_by(&GeneratorWord::single(Generator::Epsilon(i)));
                let lhs = minimal_diagram_in(&dec, &rep.image_of_word(&conj).unwrap()).unwrap();
                assert_eq!(lhs, dx, "{} {x} by e{i}", rep.name());
            }
            let img = rep.image_of_word(&x).unwrap();
            assert!(components_invariant(&dec, &img, &dx).unwrap());
        }
    }
}

#[test]
fn three_cycle_pushforward_uses_the_inverse() {
    // σ_12 ∘ σ_23 sends a_1 → a_2 → a_3 → a_1 on indices.
    let rep = outfn::repdecomp::Representation::builtin("standard+det", 3).unwrap();
    let dec = epsilon_decomposition(&rep).unwrap();
    let x = word("r21");
    let h = word("s12 s23");
    let dx = minimal_diagram_in(&dec, &rep.image_of_word(&x).unwrap()).unwrap();
    let dconj = minimal_diagram_in(&dec, &rep.image_of_word(&x.conjugate_by(&h)).unwrap()).unwrap();
    let pi = Permutation::from_images(vec![2, 3, 1]).unwrap();
    assert_eq!(dconj, diagram_pushforward(&dx, &pi.inverse()));
}

#[test]
fn character_decompositions_reconstruct_traces() {
    for rep in builtin_suite(3) {
        for g in [SymmetricSubgroup::S3, SymmetricSubgroup::S4] {
            let m = sym_decompose(&rep, g).unwrap();
            let table = g.character_table();
            let dim: u64 = table
                .irreducibles
                .iter()
                .map(|(name, d, _)| *d as u64 * m.get(name))
                .sum();
            assert_eq!(dim as usize, rep.dim(), "{} over {g:?}", rep.name());
        }
    }
}

#[test]
fn class_sizes_match_enumeration() {
    for (g, n) in [(SymmetricSubgroup::S3, 3), (SymmetricSubgroup::S4, 4)] {
        let sym = SymmetricGroup::new(n);
        let gens: Vec<_> = (2..=n)
            .map(|j| Permutation::transposition(n, 1, j))
            .collect();
        let all = closure(&gens, &sym, 100).unwrap();
        for class in g.character_table().classes {
            let count = all
                .elements()
                .iter()
                .filter(|p| p.cycle_type() == class.cycle_type)
                .count();
            assert_eq!(count as i64, class.size, "{}", class.representative);
        }
    }
}

#[test]
fn sym2_of_standard_restricted_to_s4() {
    // tr Sym²(A) = (tr(A)² + tr(A²)) / 2 on the classes gives (6, 2, 2, 0, 0).
    let m = sym_decompose(
        &outfn::repdecomp::Representation::sym2(3),
        SymmetricSubgroup::S4,
    )
    .unwrap();
    assert_eq!(m.to_string(), "1·trivial + 1·standard + 1·partition (2,2)");
}

#[test]
fn kill_v4_never_violates_on_genuine_representations() {
    for rep in builtin_suite(3) {
        let report = kill_v4_check(&rep).unwrap();
        if let KillV4Report::Holds { image_order } = report {
            assert!(image_order <= 2);
        }
    }
}

#[test]
fn corrupted_mixing_breaks_diamonds_but_not_shape() {
    let std = outfn::repdecomp::Representation::standard(3);
    let mut m = RationalMatrix::identity(3);
    m[(0, 2)] = Rational::from_integer(1.into());
    let bad = std.with_image(Generator::Rho(2, 1), m);
    let dec = epsilon_decomposition(&bad).unwrap();
    assert!(!check_diamond(&bad, &dec, 2, 1).unwrap());
}
