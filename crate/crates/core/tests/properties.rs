//! Randomized invariants across the public API: ring laws of the exact
//! arithmetic, compatibility of exact and floating evaluation, scale
//! invariance of the decision and the defining relations on random inputs.

use hecke_g7::exact::{
    eval_numeric, substitute, Assignment, ExtElem, Monomial, Polynomial, RatElem, Var,
};
use hecke_g7::io::{parse_params, ParamFile};
use hecke_g7::irreducibility::{decide, CaseId, CheckOptions, RegimeChoice};
use hecke_g7::numerics::{principal_sqrt, rel_eq};
use hecke_g7::representation::{braid_residual, build, hecke_residuals, Regime};
use hecke_g7::{ComplexValue, Params, RootSign};
use num_complex::Complex64;
use proptest::prelude::*;

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-6i64..=6, prop::array::uniform6(0u8..3)), 0..5).prop_map(|terms| {
        terms.into_iter().fold(Polynomial::zero(), |acc, (c, e)| {
            &acc + &Polynomial::term(c, Monomial(e))
        })
    })
}

fn ext() -> impl Strategy<Value = ExtElem> {
    (polynomial(), polynomial()).prop_map(|(p, q)| ExtElem::new(p, q))
}

fn nonzero_ext() -> impl Strategy<Value = ExtElem> {
    ext().prop_filter("nonzero", |e| !e.is_zero())
}

fn rat() -> impl Strategy<Value = RatElem> {
    (ext(), nonzero_ext()).prop_map(|(n, d)| RatElem::new(n, d).expect("nonzero denominator"))
}

fn value() -> impl Strategy<Value = ComplexValue> {
    (0.5f64..2.0, -3.1f64..3.1).prop_map(|(m, a)| Complex64::from_polar(m, a))
}

fn params() -> impl Strategy<Value = Params> {
    prop::array::uniform6(value()).prop_map(|v| Params::new(v).expect("nonzero"))
}

fn positive_params() -> impl Strategy<Value = Params> {
    prop::array::uniform6(0.5f64..2.0).prop_map(|v| Params::from_real(v).expect("nonzero"))
}

fn sign() -> impl Strategy<Value = RootSign> {
    prop_oneof![Just(RootSign::Plus), Just(RootSign::Minus)]
}

fn root(p: &Params) -> ComplexValue {
    principal_sqrt(p.delta())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_laws(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
        prop_assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn extension_ring_laws(a in ext(), b in ext(), c in ext()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!(ExtElem::from(a.norm()), &a * &a.conjugate());
    }

    #[test]
    fn r_squares_to_delta(e in ext()) {
        let r2 = &ExtElem::r() * &ExtElem::r();
        prop_assert_eq!(&r2, &ExtElem::from(Polynomial::delta()));
        prop_assert_eq!(&(&e * &ExtElem::r()) * &ExtElem::r(), &e * &r2);
    }

    #[test]
    fn fraction_field_laws(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(a.rationalized(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), RatElem::one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in rat(), b in rat(), p in params(), s in sign()) {
        let r = root(&p) * s.value();
        let (Ok(va), Ok(vb)) = (eval_numeric(&a, &p, r), eval_numeric(&b, &p, r)) else {
            return Ok(());
        };
        if let Ok(sum) = eval_numeric(&(&a + &b), &p, r) {
            prop_assert!(rel_eq(sum, va + vb, 1e-7) || (sum - va - vb).norm() < 1e-7 * (va.norm() + vb.norm()));
        }
        if let Ok(prod) = eval_numeric(&(&a * &b), &p, r) {
            prop_assert!(rel_eq(prod, va * vb, 1e-7));
        }
    }

    #[test]
    fn substitution_commutes_with_evaluation(e in rat(), p in params()) {
        // swap x1 and x2; r is symmetric so it maps to itself
        let assignment = Assignment::from([(Var::X1, RatElem::var(Var::X2)), (Var::X2, RatElem::var(Var::X1))]);
        let swapped = substitute(&e, &assignment, &RatElem::r()).unwrap();
        let mut q = p;
        q.set(Var::X1, p.x2);
        q.set(Var::X2, p.x1);
        let r = root(&p);
        if let (Ok(lhs), Ok(rhs)) = (eval_numeric(&swapped, &p, r), eval_numeric(&e, &q, r)) {
            prop_assert!(rel_eq(lhs, rhs, 1e-7), "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn inconsistent_root_image_is_rejected(e in rat()) {
        prop_assert!(substitute(&e, &Assignment::new(), &RatElem::constant(2)).is_err());
    }

    #[test]
    fn relations_hold_on_both_branches(p in params(), s in sign()) {
        for regime in [Regime::DistinctX, Regime::EqualX] {
            let Ok(g) = build(&p, regime, s) else { continue };
            prop_assert!(braid_residual(&g) < 1e-8, "braid {}", braid_residual(&g));
            prop_assert!(hecke_residuals(&g, &g.params).max() < 1e-8);
        }
    }

    #[test]
    fn decision_is_invariant_under_positive_scaling(
        p in params(),
        case in 0usize..6,
        solve in any::<bool>(),
        lambda in 0.25f64..4.0,
    ) {
        let all = [CaseId::EQUAL.as_slice(), CaseId::DISTINCT.as_slice()].concat();
        let p = if solve { all[case].solve(&p) } else { p };
        let opts = CheckOptions::default();
        let (Ok(a), Ok(b)) = (decide(&p, &opts), decide(&p.scaled(Complex64::new(lambda, 0.0)), &opts)) else {
            return Ok(());
        };
        prop_assert_eq!(a.regime, b.regime);
        prop_assert_eq!(a.theorem_decision, b.theorem_decision);
        prop_assert_eq!(a.oracle_decision, b.oracle_decision);
    }

    #[test]
    fn positive_real_parameters_always_agree(p in positive_params(), case in 0usize..6, solve in any::<bool>()) {
        let all = [CaseId::EQUAL.as_slice(), CaseId::DISTINCT.as_slice()].concat();
        let p = if solve { all[case].solve(&p) } else { p };
        let v = decide(&p, &CheckOptions { regime: RegimeChoice::Auto, ..CheckOptions::default() }).unwrap();
        prop_assert!(v.agreement, "{:?}", v);
    }

    #[test]
    fn parameter_files_round_trip_exactly(p in params()) {
        let text = serde_json::to_string(&ParamFile::from_params(&p)).unwrap();
        prop_assert_eq!(parse_params(&text).unwrap(), p);
    }
}
