use proptest::prelude::*;

use se3sym::jet::{
    first_order_explicit, invariance_residual, on_shell, parse_polynomial, satisfies_defining_equations,
    second_prolongation, solve_phi_for_xi, Dir, FMode, JetPolynomial, Monomial, PointVectorField, Var,
};
use se3sym::scalar::{int, rational};

const VARS: [Var; 16] = Var::ALL;

fn poly_from(terms: &[(Vec<usize>, i64)]) -> JetPolynomial {
    JetPolynomial::from_terms(terms.iter().map(|(vars, c)| {
        let m = vars.iter().fold(Monomial::one(), |m, &k| m.mul(&Monomial::var(VARS[k])));
        (m, int(*c))
    }))
}

/// Polynomials in every jet variable, up to degree 3.
fn any_poly() -> impl Strategy<Value = JetPolynomial> {
    prop::collection::vec((prop::collection::vec(0usize..16, 0..=3), -5i64..=5), 0..6).prop_map(|t| poly_from(&t))
}

/// Polynomials in `x, y, z, u` of degree at most 2.
fn point_poly() -> impl Strategy<Value = JetPolynomial> {
    prop::collection::vec((prop::collection::vec(0usize..4, 0..=2), -4i64..=4), 0..5).prop_map(|t| poly_from(&t))
}

fn point_field() -> impl Strategy<Value = PointVectorField> {
    (point_poly(), point_poly(), point_poly(), point_poly())
        .prop_map(|(a, b, c, p)| PointVectorField::new([a, b, c], p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_laws(a in any_poly(), b in any_poly(), c in any_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn print_parse_round_trip(a in any_poly()) {
        let text = a.to_string();
        prop_assert_eq!(parse_polynomial(&text).unwrap(), a);
    }

    #[test]
    fn prolongation_is_linear(v in point_field(), w in point_field(), p in -3i64..=3, q in 1i64..=4) {
        let (alpha, beta) = (int(p), rational(1, q));
        let combo = v.scale(&alpha).add(&w.scale(&beta));
        let (pc, pv, pw) = (second_prolongation(&combo), second_prolongation(&v), second_prolongation(&w));
        for ((c, a), b) in pc.all().zip(pv.all()).zip(pw.all()) {
            prop_assert_eq!(c, &(&a.scale(&alpha) + &b.scale(&beta)));
        }
    }

    #[test]
    fn first_order_matches_explicit_formula(v in point_field()) {
        let pr = second_prolongation(&v);
        for d in Dir::ALL {
            prop_assert_eq!(&pr.first[d.index()], &first_order_explicit(&v, d));
        }
    }

    #[test]
    fn on_shell_is_idempotent(a in any_poly()) {
        let once = on_shell(&a);
        prop_assert!(!once.contains(Var::Uzz));
        prop_assert_eq!(on_shell(&once), once);
    }

    #[test]
    fn admissible_fields_are_symmetries(
        which in 0usize..4,
        weights in prop::collection::vec(-3i64..=3, 20),
    ) {
        let xis = [
            ["0", "0", "0"],
            ["1", "-z", "y"],
            ["x", "y", "z"],
            ["2*x*z", "2*y*z", "z^2 - x^2 - y^2"],
        ];
        let xi = xis[which].map(|s| parse_polynomial(s).unwrap());
        let sol = solve_phi_for_xi(&xi, FMode::Zero, 2).unwrap().unwrap();
        let phi = sol.homogeneous.iter().zip(&weights).fold(sol.particular.clone(), |acc, (h, w)| &acc + &h.scale(&int(*w)));
        let field = PointVectorField::new(xi, phi).unwrap();
        prop_assert!(satisfies_defining_equations(&field, FMode::Zero));
        prop_assert!(FMode::Zero.apply(&invariance_residual(&field)).is_zero());
    }
}

#[test]
fn generators_are_symmetries_for_symbolic_f() {
    for i in 1..=6 {
        let g = PointVectorField::generator(i).unwrap();
        assert!(invariance_residual(&g).is_zero());
        assert!(satisfies_defining_equations(&g, FMode::Generic));
    }
}
