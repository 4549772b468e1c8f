use std::collections::BTreeMap;

use num_traits::Zero;
use outfn::exactlin::{sym2_map, Scalar};
use outfn::torelli::*;
use outfn::{IntMatrix, Rational, RationalMatrix};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Quadratic forms as `{(i, j): coefficient}` with `i <= j`, 1-based.
type Poly = BTreeMap<(usize, usize), Rational>;

fn to_poly(v: &[Rational]) -> Poly {
    let mut p = Poly::new();
    for i in 1..=3 {
        for j in i..=3 {
            let c = mu(v, i, j);
            if !c.is_zero() {
                p.insert((i, j), c);
            }
        }
    }
    p
}

/// Oracle: substitute `v_k ↦ Σ_r m[r][k] v_r` into the polynomial and expand.
fn substitute(m: [[i64; 3]; 3], p: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(a, b), c) in p {
        for r in 0..3 {
            for s in 0..3 {
                let coeff = c * q(m[r][a - 1] * m[s][b - 1]);
                let key = if r <= s {
                    (r + 1, s + 1)
                } else {
                    (s + 1, r + 1)
                };
                *out.entry(key).or_insert_with(Rational::zero) += coeff;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly(terms: &[((usize, usize), Rational)]) -> Poly {
    terms
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .cloned()
        .collect()
}

fn act(name: &str, v: &[Rational]) -> Vec<Rational> {
    congruence_generators().by_name(name).unwrap().mul_vec(v)
}

fn generic() -> Vec<Rational> {
    [3, -5, 7, 2, 11, -13].iter().map(|&n| q(n)).collect()
}

// Inverse transposes, written out by hand.
const E1E2: [[i64; 3]; 3] = [[-1, 0, 0], [0, -1, 0], [0, 0, 1]];
const E1E3: [[i64; 3]; 3] = [[-1, 0, 0], [0, 1, 0], [0, 0, -1]];
const R13_SQ: [[i64; 3]; 3] = [[1, 0, -2], [0, 1, 0], [0, 0, 1]];
const R23_SQ: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, -2], [0, 0, 1]];
const R21_SQ: [[i64; 3]; 3] = [[1, 0, 0], [-2, 1, 0], [0, 0, 1]];

#[test]
fn generator_images_match_the_oracle() {
    let v = generic();
    for (name, m) in [
        ("e1 e2", E1E2),
        ("e1 e3", E1E3),
        ("r13^2", R13_SQ),
        ("r23^2", R23_SQ),
        ("r21^2", R21_SQ),
    ] {
        assert_eq!(
            to_poly(&act(name, &v)),
            substitute(m, &to_poly(&v)),
            "{name}"
        );
    }
}

#[test]
fn epsilon_pair_identity() {
    let v = generic();
    let w: Vec<Rational> = act("e1 e2", &v)
        .iter()
        .zip(&v)
        .map(|(a, b)| a - b)
        .collect();
    let expected = poly(&[
        ((2, 3), q(-2) * mu(&v, 2, 3)),
        ((1, 3), q(-2) * mu(&v, 1, 3)),
    ]);
    assert_eq!(to_poly(&w), expected);

    let back: Vec<Rational> = act("e1 e3", &w)
        .iter()
        .zip(&w)
        .map(|(a, b)| a + b)
        .collect();
    assert_eq!(to_poly(&back), poly(&[((1, 3), q(-4) * mu(&v, 1, 3))]));

    // Subtracting `v` instead of adding `w` leaves every other coefficient of `v` behind.
    let literal: Vec<Rational> = act("e1 e3", &w)
        .iter()
        .zip(&v)
        .map(|(a, b)| a - b)
        .collect();
    assert_ne!(to_poly(&literal), poly(&[((1, 3), q(4) * mu(&v, 1, 3))]));
    assert_ne!(to_poly(&literal), poly(&[((1, 3), q(-4) * mu(&v, 1, 3))]));
}

#[test]
fn rho_square_identities() {
    let v13 = monomial(1, 3);
    let d: Vec<Rational> = act("r13^2", &v13)
        .iter()
        .zip(&v13)
        .map(|(a, b)| a - b)
        .collect();
    assert_eq!(to_poly(&d), poly(&[((1, 1), q(-2))]));
    let d: Vec<Rational> = act("r23^2", &v13)
        .iter()
        .zip(&v13)
        .map(|(a, b)| a - b)
        .collect();
    assert_eq!(to_poly(&d), poly(&[((1, 2), q(-2))]));

    let diag: Vec<Rational> = [5, 0, 0, -3, 0, 7].iter().map(|&n| q(n)).collect();
    let d: Vec<Rational> = act("r21^2", &diag)
        .iter()
        .zip(&diag)
        .map(|(a, b)| a - b)
        .collect();
    let m11 = mu(&diag, 1, 1);
    assert_eq!(
        to_poly(&d),
        poly(&[((1, 2), -(q(4) * &m11)), ((2, 2), q(4) * m11)])
    );
}

#[test]
fn plain_symmetric_square_misses_the_identity() {
    let plain = sym2_map(&abelianized("r13^2").unwrap().map(|&x| q(x))).unwrap();
    let v13 = monomial(1, 3);
    let d: Vec<Rational> = plain
        .mul_vec(&v13)
        .iter()
        .zip(&v13)
        .map(|(a, b)| a - b)
        .collect();
    assert_eq!(to_poly(&d), poly(&[((3, 3), q(2))]));
}

#[test]
fn full_probe_is_irreducible() {
    let report = irreducibility_probe(100, 0).unwrap();
    assert_eq!(report.count_with_prefix("basis"), (6, 6));
    assert_eq!(report.count_with_prefix("pair"), (30, 30));
    assert_eq!(report.count_with_prefix("random"), (100, 100));
    let json = report.to_json();
    assert_eq!(json["full"], 136);
    assert!(json["entries"][0]["trace"].is_array());
}

#[test]
fn probe_is_reproducible() {
    let a = probe_vectors(10, 42);
    let b = probe_vectors(10, 42);
    assert_eq!(a, b);
    assert_ne!(probe_vectors(10, 43), a);
}

fn elementary(k: u8) -> IntMatrix {
    let (i, j) = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)][(k % 6) as usize];
    let mut m = IntMatrix::identity(3);
    if k >= 6 {
        m[(i, i)] = -1;
    } else {
        m[(i, j)] = 1;
    }
    m
}

fn arb_unimodular() -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(0u8..12, 0..6).prop_map(|ks| {
        ks.into_iter().fold(RationalMatrix::identity(3), |acc, k| {
            &acc * &elementary(k).map(|&x| Rational::from_int(x))
        })
    })
}

fn arb_vector() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-4i64..=4, 6)
        .prop_map(|v| v.into_iter().map(Rational::from_int).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sym2_dual_is_multiplicative(g in arb_unimodular(), h in arb_unimodular()) {
        let lhs = sym2_dual_rep(&(&g * &h)).unwrap();
        let rhs = &sym2_dual_rep(&g).unwrap() * &sym2_dual_rep(&h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closure_is_invariant(v in arb_vector()) {
        let gens = congruence_generators();
        let c = cyclic_submodule(&v, &gens, 6).unwrap();
        for m in gens.matrices() {
            prop_assert!(c.subspace.is_invariant_under(m));
        }
        prop_assert!(c.subspace.contains(&v));
        prop_assert!(c.trace.len() <= 6);
    }

    #[test]
    fn closure_is_monotone(v in arb_vector(), w in arb_vector()) {
        let gens = congruence_generators();
        let cw = cyclic_submodule(&w, &gens, 6).unwrap();
        // Any vector of the closure of `w` generates a submodule inside it.
        let inside: Vec<Rational> = cw.subspace.basis().iter().fold(vec![Rational::zero(); 6], |acc, b| {
            acc.iter().zip(b).zip(&v).map(|((a, x), c)| a + x * c).collect()
        });
        let cv = cyclic_submodule(&inside, &gens, 6).unwrap();
        prop_assert!(cw.subspace.contains_subspace(&cv.subspace));
    }
}
