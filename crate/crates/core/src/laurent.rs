//! The ring `A = Q(p, q)[t, t⁻¹]` and its endomorphisms `t ↦ c·t^k`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{param_gcd, ParamPoly, Scalar};

/// A Laurent polynomial `Σ c_k t^k` with coefficients in `Q(p, q)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    /// `t^k` with coefficient 1.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(Scalar::one(), k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&k) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.coeffs.insert(k, s);
                }
            }
            None => {
                self.coeffs.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> Scalar {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `(c, k)` when the polynomial is the single term `c t^k`.
    pub fn as_monomial(&self) -> Option<(&Scalar, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        self.coeffs.iter().next().map(|(k, c)| (c, *k))
    }

    /// The constant value when the polynomial has no `t`-dependence.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.coeffs.len() {
            0 => Some(Scalar::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Units of `A` are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms().map(|(k, c)| (k, c * s)))
    }

    /// Multiplies by `t^d`.
    pub fn shift(&self, d: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(k, c)| (k + d, c.clone())).collect() }
    }

    /// Applies a fallible map to every coefficient.
    pub fn try_map_coeffs<F: Fn(&Scalar) -> Result<Scalar>>(&self, f: F) -> Result<Self> {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            out.add_term(k, f(c)?);
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(i64, &Scalar)> {
        self.coeffs.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// Returns `c` with `divisor·c = self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((c, k)) = divisor.as_monomial() {
            return Ok(self.scale(&c.inv()?).shift(-k));
        }
        let (ea, eb) = (self.min_exp().unwrap_or(0), divisor.min_exp().unwrap_or(0));
        let a = self.shift(-ea);
        let b = divisor.shift(-eb);
        let (quot, rem) = poly_divmod(&a, &b)?;
        if !rem.is_zero() {
            return Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(quot.shift(ea - eb))
    }

    /// True when `divisor` divides `self` in `A`.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        self.exact_div(divisor).is_ok()
    }
}

/// Division with remainder of ordinary polynomials (nonnegative exponents, `b` nonzero).
fn poly_divmod(a: &LaurentPoly, b: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    let (db, lb) = b.leading().map(|(k, c)| (k, c.clone())).ok_or(Error::DivisionByZero)?;
    let lb_inv = lb.inv()?;
    let mut r = a.clone();
    let mut q = LaurentPoly::zero();
    while let Some((dr, lr)) = r.leading().map(|(k, c)| (k, c.clone())) {
        if dr < db {
            break;
        }
        let factor = lr * &lb_inv;
        let shift = dr - db;
        for (k, c) in b.terms() {
            r.add_term(k + shift, -(c * &factor));
        }
        // The leading term cancels exactly; guard against canonical-form noise.
        r.coeffs.remove(&dr);
        q.add_term(shift, factor);
    }
    Ok((q, r))
}

/// Euclidean gcd of two ordinary polynomials over `Q(p, q)`, normalized so the
/// lowest exponent is 0 and the lowest coefficient is 1.
fn euclid_gcd(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    let norm = |f: &LaurentPoly| f.shift(-f.min_exp().unwrap_or(0));
    let (mut x, mut y) = (norm(a), norm(b));
    while !y.is_zero() {
        let (_, r) = poly_divmod(&x, &y)?;
        x = y;
        y = norm(&r);
    }
    let x = norm(&x);
    let low = x.coeff(0);
    Ok(x.scale(&low.inv()?))
}

fn param_lcm(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let g = param_gcd(a, b);
    (a * b).div_exact(&g).expect("gcd divides the product")
}

/// A greatest common divisor of `set` in `A`, well defined up to a unit `c·t^k`.
///
/// The `t`-part is computed by the Euclidean algorithm over `Q(p, q)` and
/// normalized to lowest exponent 0 with lowest coefficient 1. Since nonzero
/// scalars are units, the result is then multiplied by the common parameter
/// content of the cofactors, so that for instance the set `{(p^n - q^n) t^n}`
/// yields `p - q` rather than the associate `1`.
pub fn gcd_up_to_unit(set: &[LaurentPoly]) -> Result<LaurentPoly> {
    let mut g: Option<LaurentPoly> = None;
    for s in set.iter().filter(|s| !s.is_zero()) {
        g = Some(match g {
            None => euclid_gcd(s, s)?,
            Some(g) if s.divisible_by(&g) => g,
            Some(g) => euclid_gcd(&g, s)?,
        });
    }
    let Some(g) = g else {
        return Ok(LaurentPoly::zero());
    };
    let mut num = ParamPoly::zero();
    let mut den = ParamPoly::one();
    for s in set.iter().filter(|s| !s.is_zero()) {
        for (_, c) in s.exact_div(&g)?.terms() {
            num = param_gcd(&num, c.num());
            den = param_lcm(&den, c.den());
        }
    }
    let kappa = Scalar::from_parts(num, den)?;
    Ok(g.scale(&kappa))
}

/// The algebra endomorphism of `A` with `t ↦ c·t^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Endo {
    pub c: Scalar,
    pub k: i64,
}

impl Endo {
    pub fn new(c: Scalar, k: i64) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::NotInvertible(format!("0*t^{k}")));
        }
        Ok(Self { c, k })
    }

    pub fn identity() -> Self {
        Self { c: Scalar::one(), k: 1 }
    }

    /// Dilatation `t ↦ c·t`.
    pub fn dilation(c: Scalar) -> Self {
        Self { c, k: 1 }
    }

    pub fn is_identity(&self) -> bool {
        self.k == 1 && self.c.is_one()
    }

    pub fn is_invertible(&self) -> bool {
        self.k.abs() == 1
    }

    /// Image of `t^n`, namely `c^n t^(kn)`.
    pub fn apply_monomial(&self, n: i64) -> LaurentPoly {
        LaurentPoly::monomial(self.c.pow(n).expect("c is nonzero"), self.k * n)
    }

    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (n, a) in f.terms() {
            out.add_term(self.k * n, a * self.c.pow(n).expect("c is nonzero"));
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endo) -> Endo {
        Endo {
            c: &other.c * &self.c.pow(other.k).expect("c is nonzero"),
            k: self.k * other.k,
        }
    }

    pub fn invert(&self) -> Result<Endo> {
        match self.k {
            1 => Ok(Endo { c: self.c.inv()?, k: 1 }),
            -1 => Ok(self.clone()),
            _ => Err(Error::NotInvertible(self.to_string())),
        }
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = LaurentPoly::monomial(self.c.clone(), self.k);
        write!(f, "{t}")
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t -> {self}")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl From<Scalar> for LaurentPoly {
    fn from(c: Scalar) -> Self {
        LaurentPoly::constant(c)
    }
}

fn fmt_t(f: &mut fmt::Formatter<'_>, k: i64) -> fmt::Result {
    match k {
        1 => f.write_str("t"),
        _ => write!(f, "t^{k}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let minus_one = -Scalar::one();
        for (idx, (k, c)) in self.terms().rev().enumerate() {
            let single = c.is_monomial() || c.as_constant().is_some();
            let body = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                String::new()
            } else if *c == minus_one {
                "-".to_string()
            } else if single {
                format!("{c}*")
            } else {
                format!("({c})*")
            };
            let (sep, body) = match (idx, body.strip_prefix('-')) {
                (0, _) => ("", body.as_str()),
                (_, Some(rest)) if single => (" - ", rest),
                _ => (" + ", body.as_str()),
            };
            f.write_str(sep)?;
            f.write_str(body)?;
            if k != 0 {
                fmt_t(f, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl LaurentPoly {
    /// Coefficients specialized at a rational point `(p0, q0)`.
    pub fn specialize(&self, p0: &BigRational, q0: &BigRational) -> Result<BTreeMap<i64, BigRational>> {
        self.terms().map(|(k, c)| Ok((k, c.specialize(p0, q0)?))).collect()
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: i64) -> LaurentPoly {
        LaurentPoly::t_pow(k)
    }
    fn p() -> Scalar {
        Scalar::p()
    }
    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn ring_arithmetic() {
        let a = &t(1) + &t(-1);
        let b = &t(1) - &t(-1);
        assert_eq!(&a * &b, &t(2) - &t(-2));
        assert_eq!(&a * &LaurentPoly::one(), a);
        assert!((&t(2) - &t(2)).is_zero());
    }

    #[test]
    fn exact_division_examples() {
        let q2 = q().pow(2).unwrap();
        let a = &t(-2) - &LaurentPoly::monomial(q2, 2);
        let b = &t(-1) - &LaurentPoly::monomial(q(), 1);
        assert_eq!(a.exact_div(&b).unwrap(), &t(-1) + &LaurentPoly::monomial(q(), 1));
        assert_eq!(a.exact_div(&LaurentPoly::one()).unwrap(), a);
        assert_eq!(t(1).exact_div(&t(2)).unwrap(), t(-1));
        assert!(matches!(t(1).exact_div(&b), Err(Error::NotDivisible { .. })));
        assert_eq!(a.exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let pq = LaurentPoly::constant(&p() - &q());
        let set: Vec<_> = (-4..=4).map(|n| pq.shift(n)).collect();
        assert_eq!(gcd_up_to_unit(&set).unwrap(), pq);

        let tau = Endo::new(Scalar::one(), -1).unwrap();
        let sigma = Endo::dilation(q());
        let set: Vec<_> = (-4..=4)
            .map(|n| tau.apply_monomial(n) - sigma.apply_monomial(n))
            .collect();
        let g = gcd_up_to_unit(&set).unwrap();
        let expected = &t(-1) - &LaurentPoly::monomial(q(), 1);
        let u = expected.exact_div(&g).unwrap();
        assert!(u.is_unit(), "{g} is not associated to {expected}");
    }

    #[test]
    fn endomorphisms() {
        let tau = Endo::dilation(p());
        assert_eq!(tau.apply(&t(3)), LaurentPoly::monomial(p().pow(3).unwrap(), 3));
        assert_eq!(tau.apply(&LaurentPoly::one()), LaurentPoly::one());
        let inv = Endo::new(Scalar::one(), -1).unwrap();
        assert_eq!(inv.apply(&(&t(2) + &t(1))), &t(-2) + &t(-1));

        let sigma = Endo::dilation(q());
        let theta = sigma.compose(&tau.invert().unwrap());
        assert_eq!(theta, Endo::dilation(&q() / &p()));
        assert_eq!(sigma.compose(&Endo::identity()), sigma);
        let st = sigma.compose(&inv);
        assert_eq!(st, Endo::new(q().inv().unwrap(), -1).unwrap());

        assert_eq!(tau.invert().unwrap(), Endo::dilation(p().inv().unwrap()));
        assert_eq!(inv.invert().unwrap(), inv);
        let sq = Endo::new(p(), 2).unwrap();
        assert!(matches!(sq.invert(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn display() {
        let f = &LaurentPoly::monomial(-(p() + q()), 2) + &t(-1);
        assert_eq!(f.to_string(), "(-p - q)*t^2 + t^-1");
        let g = &LaurentPoly::monomial(Scalar::from_int(-2), 3) - &LaurentPoly::one();
        assert_eq!(g.to_string(), "-2*t^3 - 1");
    }
}
