use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use se3sym::adjoint::{apply_word, automorphism_defect, AdjointWord};
use se3sym::algebra::AlgebraElement;
use se3sym::optimal::{canonicalize_screw, classify_1d_paper, equivalence_search, ScrewKind};

fn random_element(rng: &mut ChaCha8Rng) -> AlgebraElement<f64> {
    AlgebraElement::new(std::array::from_fn(|_| StandardNormal.sample(rng)))
}

/// Elements with random zero patterns so every case of the split is hit.
fn sparse_element(rng: &mut ChaCha8Rng, mask: u8) -> AlgebraElement<f64> {
    let mut c: [f64; 6] = std::array::from_fn(|_| StandardNormal.sample(rng));
    for (k, v) in c.iter_mut().enumerate() {
        if mask & (1 << k) == 0 {
            *v = 0.0;
        }
    }
    AlgebraElement::new(c)
}

fn pitch(x: &AlgebraElement<f64>) -> f64 {
    x.translation_dot_rotation() / x.rotation_norm_sq()
}

#[test]
fn classify_sweep_ten_thousand() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0.0_f64;
    for n in 0..10_000u32 {
        let mask = if n % 2 == 0 { 0x3f } else { (n / 2 % 63 + 1) as u8 };
        let x = sparse_element(&mut rng, mask);
        let r = classify_1d_paper(&x).unwrap_or_else(|e| panic!("{x}: {e}"));
        worst = worst.max(r.pattern_residual(&x));
    }
    assert!(worst < 1e-9, "worst residual {worst}");
}

#[test]
fn screw_canonical_form_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..10_000u32 {
        let x = sparse_element(&mut rng, (n % 63 + 1) as u8);
        let f = canonicalize_screw(&x).unwrap();
        assert!(f.reproduction_error(&x) < 1e-9, "{x}");
        if f.kind == ScrewKind::Screw {
            assert!((pitch(&x) - pitch(&f.canonical())).abs() < 1e-9);
        }
    }
}

#[test]
fn equivalence_matches_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    for n in 0..1000 {
        let x = random_element(&mut rng);
        let y = match n % 3 {
            // conjugate by a random word, rescaled
            0 => {
                let g = AdjointWord::new((0..4).map(|k| ((k * 5 + n) % 6 + 1, StandardNormal.sample(&mut rng)))).unwrap();
                apply_word(&g, &x).scale(&-1.7)
            }
            1 => random_element(&mut rng),
            // same pitch, different direction
            _ => {
                let y = random_element(&mut rng);
                let shift = (pitch(&x) - pitch(&y)) * y.rotation_norm_sq().sqrt();
                let w = y.rotation();
                let n2 = y.rotation_norm_sq().sqrt();
                y + AlgebraElement::new([shift * w[0] / n2, shift * w[1] / n2, shift * w[2] / n2, 0.0, 0.0, 0.0])
            }
        };
        let same = (pitch(&x) - pitch(&y)).abs() <= 1e-9 * pitch(&x).abs().max(pitch(&y).abs()).max(1.0);
        let e = equivalence_search(&x, &y).unwrap();
        assert_eq!(e.is_some(), same, "{x} vs {y}");
        if let Some(e) = e {
            found += 1;
            let image = apply_word(&e.word, &x);
            let diff = (image - y.scale(&e.factor)).max_abs();
            assert!(diff <= 1e-9 * y.max_abs() * e.factor.abs(), "{diff}");
        }
    }
    assert!(found >= 600);
}

proptest! {
    #[test]
    fn returned_words_are_automorphisms(
        v in prop::array::uniform6(-3.0f64..3.0),
        a in prop::array::uniform6(-1.0f64..1.0),
        b in prop::array::uniform6(-1.0f64..1.0),
    ) {
        let x = AlgebraElement::new(v);
        prop_assume!(x.max_abs() > 1e-3);
        let r = classify_1d_paper(&x).unwrap();
        let f = canonicalize_screw(&x).unwrap();
        let (a, b) = (AlgebraElement::new(a), AlgebraElement::new(b));
        for w in [&r.word, &f.word] {
            prop_assert!(automorphism_defect(w, &a, &b).max_abs() <= 1e-10);
        }
    }

    #[test]
    fn classification_is_scale_invariant(v in prop::array::uniform6(-3.0f64..3.0), s in 0.1f64..10.0) {
        let x = AlgebraElement::new(v);
        prop_assume!(x.max_abs() > 1e-3);
        let r1 = classify_1d_paper(&x).unwrap();
        let r2 = classify_1d_paper(&x.scale(&s)).unwrap();
        prop_assert_eq!(r1.case_tag, r2.case_tag);
        prop_assert!((r1.representative - r2.representative).max_abs() < 1e-8);
    }
}
