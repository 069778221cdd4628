//! Laurent polynomials in the two deformation parameters `p` and `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(i, j)` standing for the monomial `p^i q^j`.
pub type Exp = (i64, i64);

/// A finite sum of terms `c * p^i * q^j` with rational `c` and integer exponents.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map
/// and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Exp, BigRational>,
}

/// Graded-lex key: total degree first, then the `p` exponent.
fn grlex(e: &Exp) -> (i64, i64) {
    (e.0 + e.1, e.0)
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn monomial(c: BigRational, i: i64, j: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn p() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Exp, BigRational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Returns `(c, i, j)` when the polynomial is the single term `c p^i q^j`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i64, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((i, j), c) = self.terms.iter().next()?;
        Some((c, *i, *j))
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Leading exponent and coefficient under graded-lex order.
    pub fn leading(&self) -> Option<(Exp, &BigRational)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| grlex(e))
            .map(|(e, c)| (*e, c))
    }

    /// Componentwise minimum of the exponents, `(0, 0)` for the zero polynomial.
    pub fn min_exponents(&self) -> Exp {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return (0, 0);
        };
        it.fold(*first, |(a, b), (i, j)| (a.min(*i), b.min(*j)))
    }

    /// Multiplies by the monomial `p^di q^dj`.
    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Raises to a nonnegative power by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `gcd(numerators) / lcm(denominators)`, taken positive; zero for the zero polynomial.
    pub fn rational_content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let g = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
        BigRational::new(g, self.denominator_lcm())
    }

    /// Evaluates at a rational point. `None` when a negative power of zero appears.
    pub fn evaluate(&self, p0: &BigRational, q0: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for ((i, j), c) in &self.terms {
            acc += c * rat_pow(p0, *i)? * rat_pow(q0, *j)?;
        }
        Some(acc)
    }

    /// Exact quotient `self / other` inside the Laurent ring, if it exists.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, i, j)) = other.as_monomial() {
            return Some(self.shift(-i, -j).scale(&c.recip()));
        }
        let (ai, aj) = self.min_exponents();
        let (bi, bj) = other.min_exponents();
        let a = self.shift(-ai, -aj);
        let b = other.shift(-bi, -bj);
        let q = div_exact_poly(&a, &b)?;
        Some(q.shift(ai - bi, aj - bj))
    }
}

/// Long division of ordinary polynomials under lex order; `None` unless the remainder is zero.
fn div_exact_poly(a: &ParamPoly, b: &ParamPoly) -> Option<ParamPoly> {
    let (lb, cb) = b.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
    let mut r = a.clone();
    let mut q = ParamPoly::zero();
    while let Some((lr, cr)) = r.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
        let (di, dj) = (lr.0 - lb.0, lr.1 - lb.1);
        if di < 0 || dj < 0 {
            return None;
        }
        let k = cr / &cb;
        for (e, c) in &b.terms {
            r.add_term((e.0 + di, e.1 + dj), -(c * &k));
        }
        q.add_term((di, dj), k);
    }
    Some(q)
}

pub(crate) fn rat_pow(x: &BigRational, e: i64) -> Option<BigRational> {
    if e >= 0 {
        Some(num_traits::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        None
    } else {
        Some(num_traits::pow(x.recip(), e.unsigned_abs() as usize))
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for ((i, j), c) in &self.terms {
            for ((k, l), d) in &rhs.terms {
                out.add_term((i + k, j + l), c * d);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: &str, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

/// Writes `|c| * p^i * q^j` without a sign.
fn fmt_unsigned_term(f: &mut fmt::Formatter<'_>, c: &BigRational, i: i64, j: i64) -> fmt::Result {
    let a = c.abs();
    if i == 0 && j == 0 {
        return write!(f, "{a}");
    }
    let mut need_star = false;
    if !a.is_one() {
        write!(f, "{a}")?;
        need_star = true;
    }
    if i != 0 {
        if need_star {
            f.write_str("*")?;
        }
        fmt_var(f, "p", i)?;
        need_star = true;
    }
    if j != 0 {
        if need_star {
            f.write_str("*")?;
        }
        fmt_var(f, "q", j)?;
    }
    Ok(())
}

impl ParamPoly {
    /// Terms in descending graded-lex order, the order used for printing.
    pub fn sorted_terms(&self) -> Vec<(Exp, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by_key(|(e, _)| std::cmp::Reverse(grlex(e)));
        v
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            fmt_unsigned_term(f, c, i, j)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn display_orders_by_degree() {
        let f = &(&ParamPoly::p() * &ParamPoly::p()) - &ParamPoly::q().scale(&r(3));
        assert_eq!(f.to_string(), "p^2 - 3*q");
        let g = ParamPoly::monomial(BigRational::new(1.into(), 2.into()), -2, 1);
        assert_eq!(g.to_string(), "1/2*p^-2*q");
    }

    #[test]
    fn exact_division() {
        let p = ParamPoly::p();
        let q = ParamPoly::q();
        let a = &(&p * &p) - &(&q * &q);
        let b = &p - &q;
        assert_eq!(a.div_exact(&b), Some(&p + &q));
        assert_eq!((&p + &q).div_exact(&b), None);
        let shifted = a.shift(-3, 2);
        assert_eq!(shifted.div_exact(&b), Some((&p + &q).shift(-3, 2)));
    }

    #[test]
    fn evaluation_reports_poles() {
        let f = ParamPoly::monomial(r(1), -1, 0);
        assert_eq!(f.evaluate(&r(0), &r(1)), None);
        assert_eq!(f.evaluate(&r(2), &r(1)), Some(BigRational::new(1.into(), 2.into())));
    }
}
