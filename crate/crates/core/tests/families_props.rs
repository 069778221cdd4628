use std::sync::Arc;

use homlie_core::bracket::{generator_triples, verify_hom_jacobi};
use homlie_core::error::Error;
use homlie_core::extension::{
    centrality_failure, make_central_extension, perturbed_cocycle, virasoro_cocycle, virasoro_coefficient,
    virasoro_coefficient_at, zero_sum_triples, Cocycle,
};
use homlie_core::families::{witt_pq, Algebra, Gen};
use homlie_core::opcat::{catalogue, jackson_quotient, CatalogueEntry, PlainPoly};
use homlie_core::scalar::q_number;
use homlie_core::Scalar;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ipow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// `[n]/p^n` at a point with `p0 ≠ q0`, as `(1 - r^n)/(p0 - q0)`.
fn normalized_at(n: i64, p0: &BigRational, q0: &BigRational) -> BigRational {
    let r = q0 / p0;
    (BigRational::one() - ipow(&r, n)) / (p0 - q0)
}

fn point() -> impl Strategy<Value = (BigRational, BigRational)> {
    ((1i64..=5), (1i64..=3), (-5i64..=5), (1i64..=3))
        .prop_map(|(a, b, c, d)| (rat(a, b), rat(c, d)))
        .prop_filter("p0 ≠ q0, q0 ≠ 0", |(p0, q0)| p0 != q0 && !q0.is_zero())
}

fn plain_poly() -> impl Strategy<Value = PlainPoly> {
    prop::collection::vec(((0u32..=6), (-9i64..=9)), 0..5)
        .prop_map(|terms| PlainPoly::from_coeffs(terms.into_iter().map(|(k, c)| (k, Scalar::from_int(c)))))
}

fn row(name: &str) -> CatalogueEntry {
    catalogue().into_iter().find(|e| e.name == name).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn witt_constants_specialize_to_direct_values(n in -5i64..=5, m in -5i64..=5, (p0, q0) in point()) {
        let witt = witt_pq().unwrap().closed;
        let coeff = witt.bracket(&Gen::D(n), &Gen::D(m)).unwrap().coeff(&Gen::D(n + m));
        prop_assert_eq!(coeff.specialize(&p0, &q0).unwrap(), normalized_at(n, &p0, &q0) - normalized_at(m, &p0, &q0));
        let twist = witt.twist(&Gen::D(n)).unwrap().coeff(&Gen::D(n));
        prop_assert_eq!(twist.specialize(&p0, &q0).unwrap(), BigRational::one() + ipow(&(&q0 / &p0), n));
    }

    #[test]
    fn specialized_witt_is_hom_lie((p0, q0) in point()) {
        let witt = witt_pq().unwrap().closed;
        let at = witt.substitute("witt-at-point", Scalar::from_rational(p0.clone()), Scalar::from_rational(q0.clone()));
        for (n, m) in [(-2i64, 1i64), (0, 3), (2, 2), (-1, -3)] {
            let lhs = at.bracket(&Gen::D(n), &Gen::D(m)).unwrap().coeff(&Gen::D(n + m));
            let rhs = witt.bracket(&Gen::D(n), &Gen::D(m)).unwrap().coeff(&Gen::D(n + m));
            prop_assert_eq!(lhs.as_constant().unwrap(), rhs.specialize(&p0, &q0).unwrap());
        }
        prop_assert!(verify_hom_jacobi(&at, &generator_triples(&at, 2)).unwrap().passed());
    }

    #[test]
    fn virasoro_cocycle_is_alternating(n in -7i64..=7, m in -7i64..=7) {
        let g = virasoro_cocycle();
        let (x, y) = (Gen::D(n), Gen::D(m));
        prop_assert!((g.value(&x, &y).unwrap() + g.value(&y, &x).unwrap()).is_zero());
        if n + m != 0 {
            prop_assert!(g.value(&x, &y).unwrap().is_zero());
        }
    }

    #[test]
    fn virasoro_coefficient_matches_direct_values(n in -6i64..=6, (p0, q0) in point()) {
        let r = &q0 / &p0;
        let denom = BigRational::from_integer(6.into()) * (BigRational::one() + ipow(&r, n));
        match virasoro_coefficient_at(n, &p0, &q0) {
            Ok(v) => {
                let expect = ipow(&r, -n) / denom
                    * normalized_at(n - 1, &p0, &q0)
                    * normalized_at(n, &p0, &q0)
                    * normalized_at(n + 1, &p0, &q0);
                prop_assert_eq!(v, expect);
            }
            Err(Error::PoleAtSpecialization { n: k }) => {
                prop_assert_eq!(k, n);
                prop_assert!(denom.is_zero());
            }
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn perturbed_cocycles_are_rejected(n in -3i64..=3, delta in prop::sample::select(vec![-2i64, -1, 1, 3])) {
        let base: Arc<dyn Algebra> = Arc::new(witt_pq().unwrap().closed);
        let g: Arc<dyn Cocycle> = Arc::new(perturbed_cocycle(
            Arc::new(virasoro_cocycle()),
            Gen::D(n),
            Gen::D(-n),
            Scalar::from_int(delta),
        ));
        let built = make_central_extension("perturbed", base, g, &zero_sum_triples(3), 2);
        prop_assert!(matches!(built, Err(Error::CocycleConditionFailed(_))));
    }

    #[test]
    fn jackson_pq_at_p_one_is_jackson_q(f in plain_poly()) {
        let at_one = row("Jackson (p,q)-derivative")
            .apply(&f)
            .unwrap()
            .map_coeffs(|c| c.substitute(&Scalar::one(), &Scalar::q()))
            .unwrap();
        prop_assert_eq!(at_one, row("Jackson q-derivative").apply(&f).unwrap());
    }

    #[test]
    fn jackson_quotients_divide_exactly(f in plain_poly(), a in 1i64..=4, b in -4i64..=4) {
        prop_assume!(a != b && b != 0);
        let (a, b) = (Scalar::from_int(a), Scalar::from_int(b));
        let quot = jackson_quotient(&f, &a, &b).unwrap();
        let lhs = (&quot * &PlainPoly::t_pow(1)).scale(&(a.clone() - b.clone()));
        prop_assert_eq!(lhs, f.dilate(&a) - f.dilate(&b));
    }

    #[test]
    fn jackson_pq_on_monomials(k in 0u32..=8) {
        let (p, q) = (Scalar::p(), Scalar::q());
        let mut bracket_k = Scalar::zero();
        for i in 0..k {
            bracket_k = bracket_k + p.pow(i64::from(k - 1 - i)).unwrap() * q.pow(i64::from(i)).unwrap();
        }
        let expect = if k == 0 { PlainPoly::zero() } else { PlainPoly::monomial(bracket_k, k - 1) };
        prop_assert_eq!(row("Jackson (p,q)-derivative").apply(&PlainPoly::t_pow(k)).unwrap(), expect);
    }
}

#[test]
fn virasoro_extension_is_central() {
    let base: Arc<dyn Algebra> = Arc::new(witt_pq().unwrap().closed);
    let built = make_central_extension("virasoro", base, Arc::new(virasoro_cocycle()), &zero_sum_triples(4), 3).unwrap();
    assert!(built.cocycle_report.passed());
    assert!(built.jacobi.passed());
    assert_eq!(centrality_failure(&built.extension, 4).unwrap(), None);
    let one_central = built.extension.bracket(&Gen::D(2), &Gen::D(-2)).unwrap().coeff(&Gen::C);
    assert_eq!(one_central, virasoro_coefficient(2));
}

#[test]
fn virasoro_at_p_one() {
    for n in -6i64..=6 {
        let q = Scalar::q();
        let at_one = virasoro_coefficient(n).substitute(&Scalar::one(), &q).unwrap();
        let qn = |k: i64| q_number(k).substitute(&Scalar::one(), &q).unwrap();
        let r_n = q.pow(n).unwrap();
        let expect = q.pow(-n).unwrap().checked_div(&((Scalar::one() + r_n) * Scalar::from_int(6))).unwrap()
            * qn(n - 1)
            * qn(n)
            * qn(n + 1);
        assert_eq!(at_one, expect, "n = {n}");
    }
}
