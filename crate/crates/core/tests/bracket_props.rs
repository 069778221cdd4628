use std::sync::Arc;

use homlie_core::bracket::{
    bracket_general, bracket_general_operator_oracle, generator_pairs, hom_jacobi_residue_on_module,
    quasi_jacobi_entry, twist_algebra, weak_morphism_failure, BracketRule, ForcedRule, ForcedSide,
};
use homlie_core::derivation::{make_context, verify_leibniz, DerivationContext, DerivationElement, LinearOp, TwistedDerivation};
use homlie_core::families::{sl2_classical, witt_pq, Algebra, Combination, FnGenMap, Gen, GenMap, ScaleMorphism};
use homlie_core::{Endo, LaurentPoly, Scalar};
use proptest::prelude::*;

fn contexts() -> Vec<DerivationContext> {
    let (p, q) = (Scalar::p(), Scalar::q());
    let r = q.clone() * p.inv().unwrap();
    vec![
        make_context(Endo::dilation(p.clone()), Endo::dilation(q.clone()), None).unwrap(),
        make_context(Endo::new(Scalar::one(), -1).unwrap(), Endo::dilation(q.clone()), None).unwrap(),
        make_context(Endo::identity(), Endo::dilation(r.clone()), Some(LaurentPoly::constant(Scalar::one() - r))).unwrap(),
        make_context(Endo::dilation(p), Endo::dilation(q), Some(LaurentPoly::t_pow(1))).unwrap(),
    ]
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i64..=3), (-2i64..=2), (0i64..=1), (0i64..=1)), 1..3).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(k, c, i, j)| (k, Scalar::monomial(c, i, j))))
    })
}

fn context_index() -> impl Strategy<Value = usize> {
    0usize..4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn twisted_leibniz(i in context_index(), a in laurent(), f in laurent(), g in laurent()) {
        let ctx = &contexts()[i];
        let op = DerivationElement::new(a, ctx);
        let rep = verify_leibniz(&op, ctx.tau(), ctx.sigma(), &[(f, g)]).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.failure);
    }

    #[test]
    fn general_bracket_is_skew_and_bilinear(i in context_index(), a in laurent(), b in laurent(), c in laurent(), k in -3i64..=3) {
        let ctx = &contexts()[i];
        let ab = bracket_general(ctx, &a, &b).unwrap();
        prop_assert_eq!(&ab, &-bracket_general(ctx, &b, &a).unwrap());
        let lam = Scalar::from_int(k);
        let lhs = bracket_general(ctx, &(&a + &c.scale(&lam)), &b).unwrap();
        let rhs = &ab + &bracket_general(ctx, &c, &b).unwrap().scale(&lam);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_matches_operator_commutator(i in context_index(), a in laurent(), b in laurent(), f in laurent()) {
        let ctx = &contexts()[i];
        let oracle = bracket_general_operator_oracle(ctx, &a, &b).unwrap();
        let element = DerivationElement::new(bracket_general(ctx, &a, &b).unwrap(), ctx);
        prop_assert_eq!(oracle.apply(&f).unwrap(), element.apply(&f).unwrap());
    }

    #[test]
    fn quasi_jacobi_equals_hom_jacobi(i in 0usize..3, a in laurent(), b in laurent(), c in laurent()) {
        let ctx = &contexts()[i];
        let entry = quasi_jacobi_entry(ctx, &a, &b, &c).unwrap();
        prop_assert!(entry.residue.is_zero(), "residue {}", entry.residue);
        prop_assert_eq!(hom_jacobi_residue_on_module(ctx, &a, &b, &c).unwrap(), entry.residue);
    }

    #[test]
    fn forced_bracket_satisfies_hom_jacobi(a in laurent(), b in laurent(), c in laurent()) {
        let ctx = &contexts()[0];
        let rule = ForcedRule(ForcedSide::Sigma);
        let br = |x: &LaurentPoly, y: &LaurentPoly| rule.bracket(ctx, x, y).unwrap();
        let mut total = LaurentPoly::zero();
        for (x, y, z) in [(&a, &b, &c), (&b, &c, &a), (&c, &a, &b)] {
            total = total + br(&rule.twist(ctx, x).unwrap(), &br(y, z));
        }
        prop_assert!(total.is_zero(), "residue {}", total);
        prop_assert_eq!(br(&a, &b), -br(&b, &a));
    }

    #[test]
    fn twisting_by_a_weak_morphism_keeps_hom_jacobi(c in -3i64..=3, i in 0i64..=1, j in 0i64..=1) {
        prop_assume!(c != 0);
        let lam = Scalar::monomial(c, i, j);
        let rho: Arc<dyn GenMap> = Arc::new(ScaleMorphism::new("lambda^n", 1, move |g| match g {
            Gen::D(n) => lam.pow(*n).unwrap(),
            _ => Scalar::one(),
        }));
        let base: Arc<dyn Algebra> = Arc::new(witt_pq().unwrap().closed);
        prop_assert_eq!(weak_morphism_failure(base.as_ref(), rho.as_ref(), &generator_pairs(base.as_ref(), 2)).unwrap(), None);
        let twisted = twist_algebra(base, rho, "twisted", 2).unwrap();
        prop_assert!(twisted.jacobi.passed());
    }
}

#[test]
fn sl2_rescaling_is_not_a_weak_morphism() {
    let lie = sl2_classical().unwrap().closed;
    let rho = FnGenMap(|g: &Gen| {
        Ok(match g {
            Gen::F => Combination::single(Gen::F, Scalar::monomial(1, 2, 0)),
            Gen::H => Combination::single(Gen::H, Scalar::p()),
            other => Combination::basis(*other),
        })
    });
    let pairs = generator_pairs(&lie, 0);
    assert_eq!(weak_morphism_failure(&lie, &rho, &pairs).unwrap(), Some((Gen::E, Gen::F)));
}
