use homlie_core::laurent::gcd_up_to_unit;
use homlie_core::scalar::{param_gcd, pq_number, q_number, q_number_in};
use homlie_core::{Endo, LaurentPoly, ParamPoly, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn small_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(((-2i64..=2), (0i64..=2), (0i64..=2)), 1..4).prop_map(|terms| {
        ParamPoly::from_terms(terms.into_iter().map(|(c, i, j)| ((i, j), BigRational::from_integer(c.into()))))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| Scalar::from_parts(n, d).ok())
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i64..=3), (-3i64..=3), (0i64..=1), (0i64..=1)), 0..4).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(k, c, i, j)| (k, Scalar::monomial(c, i, j))))
    })
}

fn point() -> impl Strategy<Value = (BigRational, BigRational)> {
    ((1i64..=5), (1i64..=4), (-5i64..=5), (1i64..=4))
        .prop_filter("p0 and q0 nonzero", |(_, _, c, _)| *c != 0)
        .prop_map(|(a, b, c, d)| (rat(a, b), rat(c, d)))
}

/// `[n]` at a rational point, summed directly.
fn pq_number_at(n: i64, p0: &BigRational, q0: &BigRational) -> BigRational {
    let pow = |x: &BigRational, e: i64| {
        if e >= 0 {
            num_traits::pow(x.clone(), e as usize)
        } else {
            num_traits::pow(x.recip(), (-e) as usize)
        }
    };
    if n >= 0 {
        (0..n).map(|k| pow(p0, n - 1 - k) * pow(q0, k)).fold(BigRational::zero(), |a, b| a + b)
    } else {
        -pq_number_at(-n, p0, q0) / pow(&(p0 * q0), -n)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn inverses(a in nonzero_scalar()) {
        prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        prop_assert_eq!(a.pow(-2).unwrap() * a.pow(2).unwrap(), Scalar::one());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in scalar(), b in scalar(), (p0, q0) in point()) {
        if let (Ok(x), Ok(y)) = (a.specialize(&p0, &q0), b.specialize(&p0, &q0)) {
            prop_assert_eq!((&a + &b).specialize(&p0, &q0).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).specialize(&p0, &q0).unwrap(), &x * &y);
        }
    }

    #[test]
    fn pq_numbers_match_direct_sums(n in -6i64..=6, (p0, q0) in point()) {
        prop_assume!(p0 != q0);
        prop_assert_eq!(pq_number(n).specialize(&p0, &q0).unwrap(), pq_number_at(n, &p0, &q0));
    }

    #[test]
    fn laurent_ring_axioms(f in laurent(), g in laurent(), h in laurent()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        if !g.is_zero() {
            prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f.clone());
        }
    }

    #[test]
    fn endomorphisms_are_multiplicative(f in laurent(), g in laurent(), c in nonzero_scalar(), k in prop::sample::select(vec![-1i64, 1, 2])) {
        let e = Endo::new(c, k).unwrap();
        prop_assert_eq!(e.apply(&(&f * &g)), &e.apply(&f) * &e.apply(&g));
        let d = Endo::dilation(Scalar::p());
        prop_assert_eq!(e.compose(&d).apply(&f), e.apply(&d.apply(&f)));
        if let Ok(inv) = e.invert() {
            prop_assert_eq!(inv.apply(&e.apply(&f)), f);
        }
    }

    #[test]
    fn laurent_gcd_divides(f in laurent(), g in laurent(), h in laurent()) {
        prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
        let (a, b) = (&f * &h, &g * &h);
        let d = gcd_up_to_unit(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(a.divisible_by(&d) && b.divisible_by(&d));
        prop_assert!(d.divisible_by(&h));
    }

    #[test]
    fn parameter_gcd_divides(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let (x, y) = (&a * &c, &b * &c);
        let g = param_gcd(&x, &y);
        prop_assert!(x.div_exact(&g).is_some() && y.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c).is_some());
    }
}

#[test]
fn pq_number_bridge() {
    let p_inv = Scalar::monomial(1, -1, 0);
    for n in -8..=8 {
        let lhs = pq_number(n) * Scalar::monomial(1, -n, 0);
        assert_eq!(lhs, &p_inv * &q_number(n), "n = {n}");
        assert_eq!(pq_number(-n), -(pq_number(n) * Scalar::monomial(1, -n, -n)), "n = {n}");
    }
}

#[test]
fn q_numbers_at_p_one() {
    for n in -6..=6 {
        let at_one = pq_number(n).substitute(&Scalar::one(), &Scalar::q()).unwrap();
        assert_eq!(at_one, q_number_in(n, &Scalar::q()), "n = {n}");
    }
    assert!(pq_number(3).specialize(&BigRational::one(), &BigRational::one()).is_ok());
}
