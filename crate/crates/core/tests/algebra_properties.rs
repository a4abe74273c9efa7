use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use se3sym::adjoint::{adjoint_series, apply_word, automorphism_defect, closed_form, AdjointWord, SERIES_ORDER};
use se3sym::algebra::{bracket, jacobi_defect, AlgebraElement};
use se3sym::scalar::{int, Rational};

fn rational_element() -> impl Strategy<Value = AlgebraElement<Rational>> {
    prop::array::uniform6(-9i64..=9).prop_map(|c| AlgebraElement::new(c.map(int)))
}

fn random_word(rng: &mut ChaCha8Rng) -> AdjointWord {
    let len = rng.gen_range(0..=4);
    AdjointWord::new((0..len).map(|_| (rng.gen_range(1..=6), rng.gen_range(-3.0..3.0)))).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng) -> AlgebraElement<f64> {
    AlgebraElement::new(std::array::from_fn(|_| StandardNormal.sample(rng)))
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi(
        x in rational_element(), y in rational_element(), z in rational_element()
    ) {
        prop_assert_eq!(bracket(&x, &y), -bracket(&y, &x));
        prop_assert!(jacobi_defect(&x, &y, &z).is_zero());
    }

    #[test]
    fn series_matches_closed_form(i in 1usize..=6, sigma in -std::f64::consts::PI..std::f64::consts::PI) {
        let s = adjoint_series(i, sigma, SERIES_ORDER).unwrap();
        prop_assert!(s.max_abs_diff(&closed_form(i).evaluate(sigma)) <= 1e-12);
    }
}

#[test]
fn words_are_automorphisms_and_preserve_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let w = random_word(&mut rng);
        let (x, y) = (random_element(&mut rng), random_element(&mut rng));
        assert!(automorphism_defect(&w, &x, &y).max_abs() <= 1e-10);
        let gx = apply_word(&w, &x);
        assert!((gx.rotation_norm_sq() - x.rotation_norm_sq()).abs() <= 1e-9 * x.rotation_norm_sq().max(1.0));
        let (a, b) = (gx.translation_dot_rotation(), x.translation_dot_rotation());
        assert!((a - b).abs() <= 1e-9 * x.max_abs().powi(2).max(1.0));
    }
}

#[test]
fn inverse_word_undoes_word() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let w = random_word(&mut rng);
        let x = random_element(&mut rng);
        let back = apply_word(&w.inverse(), &apply_word(&w, &x));
        assert!((back - x).max_abs() <= 1e-12);
    }
}
