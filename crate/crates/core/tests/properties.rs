//! Randomized invariants of the group algebra, the truncated operators and
//! the adjoint action.

use num_complex::Complex64;
use proptest::prelude::*;
use qiso_core::action::{
    ad_u, build_u, closed_form_alpha_a, closed_form_alpha_b, max_residual, verify_q_relations, EquivariantRep,
    QuotientMorphism,
};
use qiso_core::freeprod::{coproduct, Character, Generator, GroupAlgebraElement, Syllable, TensorElement, Word};
use qiso_core::podles::{build_pi, build_tau, commutant_dimension, polar_residual, TruncationConfig};

fn syllable() -> impl Strategy<Value = Syllable> {
    prop_oneof![
        Just(Syllable::new(Generator::Y, 1)),
        (0u32..6, prop_oneof![-3i64..=-1, 1i64..=3]).prop_map(|(k, e)| Syllable::new(Generator::R(k), e)),
    ]
}

/// Raw (unreduced) syllable lists of length at most 12.
fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(syllable(), 0..=12).prop_map(Word::reduce)
}

fn coefficient() -> impl Strategy<Value = Complex64> {
    (-4i32..=4, -4i32..=4).prop_map(|(a, b)| Complex64::new(f64::from(a) / 4.0, f64::from(b) / 4.0))
}

fn element() -> impl Strategy<Value = GroupAlgebraElement> {
    prop::collection::vec((word(), coefficient()), 0..5).prop_map(GroupAlgebraElement::from_terms)
}

fn unit() -> impl Strategy<Value = Complex64> {
    (0.0..1.0f64).prop_map(|t| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn word_product_is_associative(a in word(), b in word(), c in word()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn reduction_is_idempotent(raw in prop::collection::vec(syllable(), 0..=12)) {
        let w = Word::reduce(raw);
        prop_assert_eq!(Word::reduce(w.syllables().to_vec()), w.clone());
        prop_assert!(w.mul(&w.inverse()).is_identity());
    }

    #[test]
    fn word_text_round_trips(w in word()) {
        let back: Word = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn character_is_multiplicative(a in word(), b in word(), y_sign in any::<bool>(), r in prop::collection::vec(unit(), 6)) {
        let mut chi = Character::new(Complex64::new(if y_sign { 1.0 } else { -1.0 }, 0.0)).unwrap();
        for (k, v) in r.into_iter().enumerate() {
            chi = chi.with_r(k as u32, v).unwrap();
        }
        let ab = chi.evaluate_word(&a.mul(&b)).unwrap();
        let prod = chi.evaluate_word(&a).unwrap() * chi.evaluate_word(&b).unwrap();
        prop_assert!((ab - prod).norm() < 1e-12);
        let inv = chi.evaluate_word(&a.inverse()).unwrap();
        prop_assert!((inv - chi.evaluate_word(&a).unwrap().conj()).norm() < 1e-12);
    }

    #[test]
    fn coproduct_is_multiplicative(a in element(), b in element()) {
        let lhs = coproduct(&a.mul(&b));
        let rhs = coproduct(&a).mul(&coproduct(&b));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn grouplike_words_stay_grouplike(a in word(), b in word()) {
        let ab = GroupAlgebraElement::from_word(a.mul(&b));
        let one = GroupAlgebraElement::one();
        let split = TensorElement::tensor(&ab, &one).mul(&TensorElement::tensor(&one, &ab));
        prop_assert_eq!(coproduct(&ab).max_abs_diff(&split), 0.0);
    }

    #[test]
    fn quotient_maps_compose_to_minimum(w in word(), n1 in 1usize..6, n2 in 1usize..6) {
        let (p1, p2) = (QuotientMorphism::new(n1).unwrap(), QuotientMorphism::new(n2).unwrap());
        let pmin = QuotientMorphism::new(n1.min(n2)).unwrap();
        prop_assert_eq!(p1.apply_word(&p2.apply_word(&w)), pmin.apply_word(&w));
    }

    #[test]
    fn quotient_map_is_multiplicative(a in element(), b in element(), n in 1usize..6) {
        let p = QuotientMorphism::new(n).unwrap();
        prop_assert!(p.apply(&a.mul(&b)).approx_eq(&p.apply(&a).mul(&p.apply(&b)), 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn star_is_an_antihomomorphic_involution(a in element(), b in element()) {
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert!(a.mul(&b).star().approx_eq(&b.star().mul(&a.star()), 1e-12));
    }
}

/// Coefficient families of the form `q_n^+ = g r_n h`, `q_n^- = g r_n y h`
/// for fixed words `g`, `h` with `h` free of `r` generators; these satisfy
/// the relations for every choice of `g`.
fn relation_preserving_rep(m: usize) -> impl Strategy<Value = EquivariantRep> {
    (word(), any::<bool>()).prop_map(move |(g, conj_by_y)| {
        let h = if conj_by_y { Word::y() } else { Word::identity() };
        let qplus = (0..m)
            .map(|n| GroupAlgebraElement::from_word(g.mul(&Word::r(n as u32)).mul(&h)))
            .collect();
        let qminus = (0..m)
            .map(|n| GroupAlgebraElement::from_word(g.mul(&Word::r(n as u32)).mul(&Word::y()).mul(&h)))
            .collect();
        EquivariantRep::new(qplus, qminus).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relation_preserving_reps_keep_legs_apart(rep in relation_preserving_rep(8)) {
        let cfg = TruncationConfig::new(8, 0.5, 2.0).unwrap();
        prop_assert_eq!(max_residual(&verify_q_relations(&rep, &cfg).unwrap()), 0.0);
        let u = build_u(&rep, cfg.m).unwrap();
        let g = build_pi(&cfg).unwrap();
        let aa = ad_u(&g.a, &u);
        let ab = ad_u(&g.b, &u);
        prop_assert_eq!(aa.off_diagonal_max(), 0.0);
        prop_assert_eq!(ab.off_diagonal_max(), 0.0);
        prop_assert!(aa.max_diff(&closed_form_alpha_a(&rep, &cfg).unwrap()) < 1e-12);
        prop_assert!(ab.max_diff(&closed_form_alpha_b(&rep, &cfg).unwrap()) < 1e-12);
    }

    #[test]
    fn polar_decomposition_holds(mu in 0.05..0.95f64, c in 0.01..20.0f64) {
        let cfg = TruncationConfig::new(24, mu, c).unwrap();
        let g = build_pi(&cfg).unwrap();
        prop_assert!(polar_residual(&g.b, &build_tau(&cfg), &cfg) <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn commutant_dimension_is_two_at_every_size(m in 4usize..=20, mu in 0.2..0.8f64, c in 0.1..10.0f64) {
        let cfg = TruncationConfig::new(m, mu, c).unwrap();
        let g = build_pi(&cfg).unwrap();
        prop_assert_eq!(commutant_dimension(&g.generating_set()), 2);
    }
}
