//! The field `Q(p, q)` of rational functions in the deformation parameters.
//!
//! A [`Scalar`] is a quotient of two [`ParamPoly`] values. Values are kept in a
//! canonical form (monomial denominators absorbed into the numerator, common
//! factors cancelled, denominator leading coefficient `+1`), but equality is
//! decided by cross-multiplication and never relies on that form.

mod gcd;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use gcd::param_gcd;
pub use poly::{Exp, ParamPoly};

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Scalar {
    num: ParamPoly,
    den: ParamPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Self { num: ParamPoly::zero(), den: ParamPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(ParamPoly::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_poly(ParamPoly::constant(r))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_poly(num: ParamPoly) -> Self {
        Self { num, den: ParamPoly::one() }
    }

    pub fn p() -> Self {
        Self::from_poly(ParamPoly::p())
    }

    pub fn q() -> Self {
        Self::from_poly(ParamPoly::q())
    }

    /// The Laurent monomial `c p^i q^j`.
    pub fn monomial(c: i64, i: i64, j: i64) -> Self {
        Self::from_poly(ParamPoly::monomial(BigRational::from_integer(c.into()), i, j))
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_parts(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((c, i, j)) = den.as_monomial() {
            return Self { num: num.shift(-i, -j).scale(&c.recip()), den: ParamPoly::one() };
        }
        let g = param_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides the numerator"),
                den.div_exact(&g).expect("gcd divides the denominator"),
            )
        };
        if let Some((c, i, j)) = den.as_monomial() {
            return Self { num: num.shift(-i, -j).scale(&c.recip()), den: ParamPoly::one() };
        }
        let (i, j) = den.min_exponents();
        let (num, den) = (num.shift(-i, -j), den.shift(-i, -j));
        let lc = den.leading().map(|(_, c)| c.recip()).expect("nonzero denominator");
        Self { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// `Some(c)` when the scalar is the rational constant `c`.
    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// True when the scalar is a nonzero Laurent monomial `c p^i q^j`.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.as_monomial().is_some()
    }

    /// True when the denominator is 1, i.e. the scalar is a Laurent polynomial in `p, q`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some((c, i, j)) = rhs.num.as_monomial() {
            if rhs.den.is_one() && self.den.is_one() {
                return Ok(Self::from_poly(self.num.shift(-i, -j).scale(&c.recip())));
            }
        }
        Self::from_parts(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let n = e.unsigned_abs() as u32;
        let pos = if self.den.is_one() {
            Self::from_poly(self.num.pow(n))
        } else {
            Self { num: self.num.pow(n), den: self.den.pow(n) }
        };
        if e >= 0 {
            Ok(pos)
        } else {
            pos.inv()
        }
    }

    pub fn scale_rational(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(k), den: self.den.clone() }
    }

    /// Exact value at `(p0, q0)`.
    pub fn specialize(&self, p0: &BigRational, q0: &BigRational) -> Result<BigRational> {
        let pole = || Error::PoleAtPoint { p: p0.to_string(), q: q0.to_string() };
        let d = self.den.evaluate(p0, q0).ok_or_else(pole)?;
        if d.is_zero() {
            return Err(pole());
        }
        let n = self.num.evaluate(p0, q0).ok_or_else(pole)?;
        Ok(n / d)
    }

    /// Ring substitution `p ↦ p_img`, `q ↦ q_img` (e.g. `q := p`, or `p := 1, q := q/p`).
    pub fn substitute(&self, p_img: &Scalar, q_img: &Scalar) -> Result<Scalar> {
        let n = substitute_poly(&self.num, p_img, q_img)?;
        let d = substitute_poly(&self.den, p_img, q_img)?;
        n.checked_div(&d)
    }
}

fn substitute_poly(f: &ParamPoly, p_img: &Scalar, q_img: &Scalar) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for ((i, j), c) in f.terms() {
        let t = p_img.pow(*i)? * q_img.pow(*j)?;
        acc = acc + t.scale_rational(c);
    }
    Ok(acc)
}

/// The `(p, q)`-number `[n] = (p^n - q^n)/(p - q)` as a Laurent polynomial.
pub fn pq_number(n: i64) -> Scalar {
    let m = n.unsigned_abs() as i64;
    let pos = ParamPoly::from_terms(
        (0..m).map(|k| ((m - 1 - k, k), BigRational::one())),
    );
    if n >= 0 {
        Scalar::from_poly(pos)
    } else {
        Scalar::from_poly(-pos.shift(n, n))
    }
}

/// The `q = p` degeneration `[n]_{p,p} = n p^(n-1)`.
pub fn pq_number_equal(n: i64) -> Scalar {
    Scalar::monomial(n, n - 1, 0)
}

/// The `r`-number `{n}_r = (1 - r^n)/(1 - r)` for an arbitrary scalar `r`.
pub fn q_number_in(n: i64, r: &Scalar) -> Scalar {
    let m = n.unsigned_abs() as i64;
    let mut acc = Scalar::zero();
    let mut pow = Scalar::one();
    for _ in 0..m {
        acc = &acc + &pow;
        pow = &pow * r;
    }
    if n >= 0 {
        acc
    } else {
        -(acc * r.pow(n).expect("r-numbers need r != 0"))
    }
}

/// `{n}_{q/p}`, the single-parameter number in `r = q/p`.
pub fn q_number(n: i64) -> Scalar {
    q_number_in(n, &ratio_qp())
}

/// The scalar `q/p`.
pub fn ratio_qp() -> Scalar {
    Scalar::monomial(1, -1, 1)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den.is_one() && other.den.is_one() {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Scalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        Scalar::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        Scalar::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero, like the primitive numeric types; use
/// [`Scalar::checked_div`] for a fallible version.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by the zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

fn needs_parens(f: &ParamPoly) -> bool {
    f.len() > 1
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        // Canonical denominators are never single terms, so they always get parentheses.
        write!(f, "/({})", self.den)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Scalar {
        Scalar::p()
    }
    fn q() -> Scalar {
        Scalar::q()
    }
    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn addition_and_cross_multiplication() {
        let a = &p() / &q() + &q() / &p();
        let b = (&p() * &p() + &q() * &q()) / (&p() * &q());
        assert_eq!(a, b);
        assert_eq!(Scalar::zero() + a.clone(), a);
        assert_eq!(pq_number(1) + pq_number(1), Scalar::from_int(2));
    }

    #[test]
    fn lowest_terms() {
        let a = (&p() * &p() - &q() * &q()) / (&p() - &q());
        assert_eq!(a, &p() + &q());
        assert!(a.is_polynomial());
        let inv = Scalar::one() / p();
        assert!(inv.den().is_one());
        assert_eq!(inv.to_string(), "p^-1");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(p().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn pq_numbers() {
        assert!(pq_number(0).is_zero());
        assert_eq!(pq_number(2), &p() + &q());
        let pq = &p() * &q();
        assert_eq!(pq_number(-2), -(pq.pow(-2).unwrap() * (&p() + &q())));
        assert_eq!(pq_number_equal(3), Scalar::monomial(3, 2, 0));
        assert_eq!(pq_number_equal(-1), Scalar::monomial(-1, -2, 0));
    }

    #[test]
    fn q_numbers_and_bridge() {
        assert!(q_number(0).is_zero());
        assert_eq!(q_number(2), Scalar::one() + ratio_qp());
        let lhs = pq_number(3) / p().pow(3).unwrap();
        let rhs = q_number(3) / p();
        assert_eq!(lhs, rhs);
        let expect = (&p() * &p() + &p() * &q() + &q() * &q()) / p().pow(3).unwrap();
        assert_eq!(lhs, expect);
    }

    #[test]
    fn specialization() {
        let s = &p() + &q();
        assert_eq!(s.specialize(&rat(1, 1), &rat(1, 1)).unwrap(), rat(2, 1));
        assert_eq!(pq_number(3).specialize(&rat(1, 1), &rat(2, 1)).unwrap(), rat(7, 1));
        let pole = Scalar::one() / (&p() - &q());
        assert!(matches!(pole.specialize(&rat(1, 1), &rat(1, 1)), Err(Error::PoleAtPoint { .. })));
    }

    #[test]
    fn substitution_degenerates() {
        // q := p sends [n] to n p^(n-1).
        for n in -5..=5 {
            assert_eq!(pq_number(n).substitute(&p(), &p()).unwrap(), pq_number_equal(n));
        }
        let s = Scalar::one() / (&p() - &q());
        assert_eq!(s.substitute(&p(), &p()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_forms() {
        let s = (&p() + &q()) / (Scalar::from_int(2) * p().pow(2).unwrap());
        assert_eq!(s.to_string(), "1/2*p^-1 + 1/2*p^-2*q");
        let t = Scalar::one() / (&p() + &q());
        assert_eq!(t.to_string(), "1/(p + q)");
        let u = Scalar::from_int(-3) / (&p() + &q());
        assert_eq!(u.to_string(), "-3/(p + q)");
    }
}
