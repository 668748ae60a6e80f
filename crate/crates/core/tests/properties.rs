use proptest::prelude::*;

use commvar::commscheme::{var_convert, VarDirection};
use commvar::hecke::{HeckeElement, CenterElement};
use commvar::kernel::{Fraction, LaurentPoly, Monomial, Rational, Var};
use commvar::perm::Perm;
use commvar::shuffle::{permute_parameters, ShuffleCal};
use commvar::symfunc::{Partition, Plethysm, SymFunc};

const VARS: [Var; 4] = [Var::Q, Var::T, Var::X(1), Var::X(2)];

fn monomial(lo: i32, hi: i32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(lo..=hi, VARS.len()).prop_map(|es| {
        let pairs: Vec<(Var, i32)> = VARS.iter().copied().zip(es).collect();
        Monomial::from_pairs(&pairs)
    })
}

fn poly_in(lo: i32, hi: i32, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial(lo, hi), -6i64..=6, 1i64..=3), 0..max_terms).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|(m, n, d)| (m, Rational::new(n.into(), d.into()))))
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    poly_in(-2, 2, 6)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle().prop_map(|v| Perm::new(v).unwrap())
}

fn hecke3() -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((perm(3), poly_in(-1, 1, 3)), 0..4).prop_map(|ts| {
        ts.into_iter().fold(HeckeElement::zero(3), |acc, (w, c)| {
            let c = c.map_monomials(|m| m.restrict(|v| v == Var::T));
            acc.add(&HeckeElement::term(w, c)).unwrap()
        })
    })
}

fn symfunc() -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((prop::collection::vec(1usize..=3, 1..3), -4i64..=4), 0..4).prop_map(|ts| {
        ts.into_iter().fold(SymFunc::zero(), |acc, (parts, c)| {
            acc.add(&SymFunc::term(Partition::new(parts), Fraction::constant(Rational::from_integer(c.into()))))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn fractions_are_classes(a in poly(), b in nonzero_poly(), c in nonzero_poly(), d in nonzero_poly()) {
        let f = Fraction::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(Fraction::new(&a * &c, &b * &c).unwrap(), f.clone());
        let g = Fraction::new(c.clone(), d.clone()).unwrap();
        let sum = Fraction::new(&(&a * &d) + &(&c * &b), &b * &d).unwrap();
        prop_assert_eq!(&f + &g, sum);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn text_and_json_round_trip(p in poly()) {
        prop_assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p.clone());
        prop_assert_eq!(LaurentPoly::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn swap_rename_is_an_involution(p in poly()) {
        let s = [(Var::X(1), Var::X(2)), (Var::X(2), Var::X(1))];
        prop_assert_eq!(p.rename(&s).rename(&s), p);
    }

    #[test]
    fn compose_agrees_with_evaluation(p in poly_in(0, 2, 5), a in -5i64..=5, b in -5i64..=5) {
        // p(x1 + x2, x2) at (a, b) equals p at (a + b, b).
        let shifted = p.compose(&[(Var::X(1), &LaurentPoly::var(Var::X(1)) + &LaurentPoly::var(Var::X(2)))]).unwrap();
        let r = |v: i64| Rational::from_integer(v.into());
        let at = |x1: i64| vec![(Var::Q, r(2)), (Var::T, r(3)), (Var::X(1), r(x1)), (Var::X(2), r(b))];
        prop_assert_eq!(shifted.eval(&at(a)).unwrap(), p.eval(&at(a + b)).unwrap());
    }

    #[test]
    fn parameter_change_round_trips(p in poly()) {
        let there = var_convert(&p, VarDirection::QtToQ1Q2).unwrap();
        prop_assert!(!there.contains_var(Var::Q) && !there.contains_var(Var::T));
        prop_assert_eq!(var_convert(&there, VarDirection::Q1Q2ToQt).unwrap(), p);
    }

    #[test]
    fn plethysm_is_an_invertible_ring_map(f in symfunc(), g in symfunc(), e in 1i32..=2) {
        let u = Monomial::pow_of(Var::Q, e);
        let s = Plethysm::Sigma(u);
        prop_assert_eq!(f.apply(&s).unwrap().apply(&Plethysm::SigmaInv(u)).unwrap(), f.clone());
        prop_assert_eq!(f.mul(&g).apply(&s).unwrap(), f.apply(&s).unwrap().mul(&g.apply(&s).unwrap()));
        prop_assert_eq!(f.add(&g).apply(&Plethysm::third()).unwrap(),
            f.apply(&Plethysm::third()).unwrap().add(&g.apply(&Plethysm::third()).unwrap()));
    }

    #[test]
    fn permutation_group_laws(a in perm(5), b in perm(5)) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.reduced_word().len(), a.length());
        prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        prop_assert_eq!(a.inverse().length(), a.length());
    }

    #[test]
    fn hecke_multiplication_is_associative(a in hecke3(), b in hecke3(), c in hecke3()) {
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn center_is_central(c in poly_in(-1, 1, 3), i in 1usize..=2) {
        let c = c.map_monomials(|m| m.restrict(|v| v == Var::T));
        let z = CenterElement::one(3).scale(&c).add(&commvar::hecke::antisymmetrizer(3)).unwrap();
        let g = HeckeElement::generator(i, 3).unwrap();
        prop_assert_eq!(z.inner().mul(&g).unwrap(), g.mul(z.inner()).unwrap());
    }

    #[test]
    fn shuffle_json_round_trip(p in poly_in(0, 2, 4)) {
        // Symmetrize in x1, x2 so the element is admissible.
        let s = &p + &p.rename(&[(Var::X(1), Var::X(2)), (Var::X(2), Var::X(1))]);
        let e = ShuffleCal::new(2, s).unwrap();
        prop_assert_eq!(ShuffleCal::from_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn parameter_permutations_compose(p in poly_in(-1, 1, 4), a in perm(3), b in perm(3)) {
        let p = p.map_monomials(|m| m.restrict(|v| matches!(v, Var::Q | Var::T)));
        let two = permute_parameters(&permute_parameters(&p, &a).unwrap(), &b).unwrap();
        prop_assert_eq!(two, permute_parameters(&p, &b.compose(&a)).unwrap());
    }
}
