//! Greatest common divisors in Q[p, q] via primitive remainder sequences over Z[p][q].
//!
//! Used to bring scalar fractions to lowest terms; equality never depends on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::ParamPoly;

/// Dense univariate polynomial over Z, index = degree, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Polynomial in `q` whose coefficients are polynomials in `p`.
type BPoly = Vec<UPoly>;

fn u_trim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn u_content(a: &UPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn u_div_int(a: &UPoly, k: &BigInt) -> UPoly {
    a.iter().map(|c| c / k).collect()
}

fn u_primitive(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(a);
    if a.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    u_div_int(a, &c)
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(out)
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    u_trim(out)
}

fn u_scale(a: &UPoly, k: &BigInt) -> UPoly {
    u_trim(a.iter().map(|c| c * k).collect())
}

/// Pseudo-remainder of `a` by nonzero `b`.
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().expect("nonempty").clone();
        let mut shifted = vec![BigInt::zero(); shift];
        shifted.extend(b.iter().map(|c| c * &lr));
        r = u_sub(&u_scale(&r, &lb), &shifted);
    }
    r
}

/// Exact division in Z[p]; the caller guarantees divisibility.
fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor").clone();
    if r.len() < b.len() {
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let k = r.last().expect("nonempty") / &lb;
        q[shift] = k.clone();
        let mut sub = vec![BigInt::zero(); shift];
        sub.extend(b.iter().map(|c| c * &k));
        r = u_sub(&r, &sub);
    }
    debug_assert!(r.is_empty(), "inexact univariate division");
    u_trim(q)
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primitive(b);
    }
    if b.is_empty() {
        return u_primitive(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_primitive(&u_prem(&x, &y));
        x = y;
        y = r;
    }
    u_scale(&x, &c)
}

fn b_trim(mut a: BPoly) -> BPoly {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

/// Content in Z[p] (gcd of the coefficients), made primitive-positive only up to the integer gcd.
fn b_content(a: &BPoly) -> UPoly {
    a.iter().fold(Vec::new(), |g, c| u_gcd(&g, c))
}

fn b_div_u(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter()
        .map(|x| if x.is_empty() { Vec::new() } else { u_div_exact(x, c) })
        .collect()
}

fn b_primitive(a: &BPoly) -> BPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let c = b_content(a);
    b_div_u(a, &c)
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().expect("nonempty").clone();
        let n = r.len();
        let mut next: BPoly = r.iter().map(|c| u_mul(c, &lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = u_sub(&next[k + shift], &u_mul(bc, &lr));
        }
        debug_assert!(next.len() == n);
        r = b_trim(next);
    }
    r
}

fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    let c = u_gcd(&b_content(a), &b_content(b));
    let (mut x, mut y) = (b_primitive(a), b_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = b_primitive(&b_prem(&x, &y));
        x = y;
        y = r;
    }
    x.iter().map(|coef| u_mul(coef, &c)).collect()
}

/// Converts a polynomial with nonnegative exponents and integer coefficients.
fn to_bpoly(a: &ParamPoly) -> BPoly {
    let mut out: BPoly = Vec::new();
    for ((i, j), c) in a.terms() {
        let (i, j) = (*i as usize, *j as usize);
        if out.len() <= j {
            out.resize(j + 1, Vec::new());
        }
        let row = &mut out[j];
        if row.len() <= i {
            row.resize(i + 1, BigInt::zero());
        }
        row[i] = c.numer().clone();
    }
    out
}

fn from_bpoly(a: &BPoly) -> ParamPoly {
    ParamPoly::from_terms(a.iter().enumerate().flat_map(|(j, row)| {
        row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| {
            ((i as i64, j as i64), BigRational::from_integer(c.clone()))
        })
    }))
}

/// Shifts to nonnegative exponents and clears denominators and integer content.
fn integral_primitive(a: &ParamPoly) -> ParamPoly {
    let (i, j) = a.min_exponents();
    let shifted = a.shift(-i, -j);
    let k = shifted.rational_content();
    shifted.scale(&k.recip())
}

/// A gcd of two Laurent polynomials in `p, q`, normalized to be free of monomial
/// factors, with coprime integer coefficients and a positive graded-lex leading term.
pub fn param_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() && b.is_zero() {
        return ParamPoly::zero();
    }
    if a.is_zero() || b.is_zero() {
        let nz = if a.is_zero() { b } else { a };
        return normalize_sign(integral_primitive(nz));
    }
    if a.as_monomial().is_some() || b.as_monomial().is_some() {
        return ParamPoly::one();
    }
    let g = from_bpoly(&b_gcd(&to_bpoly(&integral_primitive(a)), &to_bpoly(&integral_primitive(b))));
    normalize_sign(integral_primitive(&g))
}

fn normalize_sign(g: ParamPoly) -> ParamPoly {
    match g.leading() {
        Some((_, c)) if c.is_negative() => -g,
        _ => g,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> ParamPoly {
        ParamPoly::p()
    }
    fn q() -> ParamPoly {
        ParamPoly::q()
    }

    #[test]
    fn gcd_of_power_differences() {
        let p4 = &p().pow(4) - &q().pow(4);
        let p6 = &p().pow(6) - &q().pow(6);
        assert_eq!(param_gcd(&p4, &p6), &p().pow(2) - &q().pow(2));
    }

    #[test]
    fn gcd_ignores_monomials_and_rational_content() {
        let a = (&p() + &q()).shift(-3, 1).scale(&BigRational::new(3.into(), 7.into()));
        let b = (&(&p() + &q()) * &(&p() - &q())).shift(2, -5);
        assert_eq!(param_gcd(&a, &b), &p() + &q());
    }

    #[test]
    fn coprime_inputs() {
        let a = &p() + &q();
        let b = &(&p() * &q()) + &ParamPoly::one();
        assert!(param_gcd(&a, &b).is_one());
    }

    #[test]
    fn content_in_p_survives() {
        // (p + 1)(q - p) and (p + 1)(q + p): common factor p + 1 lives in the content.
        let one = ParamPoly::one();
        let a = &(&p() + &one) * &(&q() - &p());
        let b = &(&p() + &one) * &(&q() + &p());
        assert_eq!(param_gcd(&a, &b), &p() + &one);
    }
}
