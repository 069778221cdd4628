//! A catalogue of `(τ, σ)`-derivations on the polynomial ring `Q(p, q)[t]`, each with its product rule.
//!
//! Every row is verified in the form `D(fg) = D(f)·τ(g) + σ(f)·D(g)`, with `τ` and `σ`
//! read off the row's product rule.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A polynomial in `t` with coefficients in `Q(p, q)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PlainPoly {
    coeffs: BTreeMap<u32, Scalar>,
}

impl PlainPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Scalar, k: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn t_pow(k: u32) -> Self {
        Self::monomial(Scalar::one(), k)
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, Scalar)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(k, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> Scalar {
        self.coeffs.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_coeffs(self.terms().map(|(k, c)| (k, c.clone() * s.clone())))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            out.add_term(k, f(c)?);
        }
        Ok(out)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.terms().filter(|(k, _)| *k > 0).map(|(k, c)| (k - 1, c.clone() * Scalar::from_int(k as i64))),
        )
    }

    /// Divides by `t`; fails when the constant term is nonzero.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NotDivisible { dividend: self.to_string(), divisor: "t".into() });
        }
        Ok(Self::from_coeffs(self.terms().map(|(k, c)| (k - 1, c.clone()))))
    }

    /// `f(c·t)`
    pub fn dilate(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.terms().map(|(k, a)| (k, a.clone() * c.pow(k as i64).expect("nonnegative power"))))
    }

    /// `f(t + 1)`
    pub fn shift(&self) -> Self {
        let mut out = Self::zero();
        for (k, a) in self.terms() {
            let mut binom: i64 = 1;
            for j in 0..=k {
                out.add_term(j, a.clone() * Scalar::from_int(binom));
                binom = binom * (k - j) as i64 / (j + 1) as i64;
            }
        }
        out
    }
}

impl Add for PlainPoly {
    type Output = PlainPoly;
    fn add(mut self, rhs: PlainPoly) -> PlainPoly {
        for (k, c) in rhs.coeffs {
            self.add_term(k, c);
        }
        self
    }
}

impl Sub for PlainPoly {
    type Output = PlainPoly;
    fn sub(self, rhs: PlainPoly) -> PlainPoly {
        self + rhs.scale(&Scalar::from_int(-1))
    }
}

impl Mul for &PlainPoly {
    type Output = PlainPoly;
    fn mul(self, rhs: &PlainPoly) -> PlainPoly {
        let mut out = PlainPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, a.clone() * b.clone());
            }
        }
        out
    }
}

impl fmt::Display for PlainPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PlainPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlainPoly({self})")
    }
}

/// The substitutions that appear in the catalogue.
#[derive(Clone, Debug, PartialEq)]
pub enum PlainSubst {
    Identity,
    /// `t ↦ t + 1`
    Shift,
    /// `t ↦ c·t`
    Dilation(Scalar),
    Zero,
}

impl PlainSubst {
    pub fn apply(&self, f: &PlainPoly) -> PlainPoly {
        match self {
            PlainSubst::Identity => f.clone(),
            PlainSubst::Shift => f.shift(),
            PlainSubst::Dilation(c) => f.dilate(c),
            PlainSubst::Zero => PlainPoly::zero(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            PlainSubst::Identity => "id".into(),
            PlainSubst::Shift => "S".into(),
            PlainSubst::Dilation(c) => format!("T_{{{c}}}"),
            PlainSubst::Zero => "0".into(),
        }
    }
}

type Operator = dyn Fn(&PlainPoly) -> Result<PlainPoly> + Send + Sync;

/// One catalogue row.
#[derive(Clone)]
pub struct CatalogueEntry {
    pub name: &'static str,
    /// `D(f(t))` as printed.
    pub formula: &'static str,
    /// The product rule `D((fg)(t))` as printed.
    pub rule: &'static str,
    /// The `(τ, σ)` label as printed beside the row.
    pub pair: &'static str,
    pub tau: PlainSubst,
    pub sigma: PlainSubst,
    op: Arc<Operator>,
}

impl CatalogueEntry {
    pub fn apply(&self, f: &PlainPoly) -> Result<PlainPoly> {
        (self.op)(f)
    }

    /// `D(f)·τ(g) + σ(f)·D(g)`
    pub fn rule_value(&self, f: &PlainPoly, g: &PlainPoly) -> Result<PlainPoly> {
        Ok(&self.apply(f)? * &self.tau.apply(g) + &self.sigma.apply(f) * &self.apply(g)?)
    }

    /// The same operator with `τ` and `σ` exchanged.
    pub fn swapped(&self) -> CatalogueEntry {
        CatalogueEntry { tau: self.sigma.clone(), sigma: self.tau.clone(), ..self.clone() }
    }
}

impl fmt::Debug for CatalogueEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CatalogueEntry({})", self.name)
    }
}

fn entry(
    name: &'static str,
    formula: &'static str,
    rule: &'static str,
    pair: &'static str,
    tau: PlainSubst,
    sigma: PlainSubst,
    op: impl Fn(&PlainPoly) -> Result<PlainPoly> + Send + Sync + 'static,
) -> CatalogueEntry {
    CatalogueEntry { name, formula, rule, pair, tau, sigma, op: Arc::new(op) }
}

/// `(f(a·t) - f(b·t)) / ((a - b)·t)`
pub fn jackson_quotient(f: &PlainPoly, a: &Scalar, b: &Scalar) -> Result<PlainPoly> {
    let diff = f.dilate(a) - f.dilate(b);
    Ok(diff.div_t()?.scale(&(a.clone() - b.clone()).inv()?))
}

pub fn catalogue() -> Vec<CatalogueEntry> {
    use PlainSubst::*;
    let q = Scalar::q;
    let p = Scalar::p;
    let q_inv = || Scalar::monomial(1, 0, -1);
    vec![
        entry("differentiation", "f'(t)", "D(f(t)) g(t) + f(t) D(g(t))", "(id, id)", Identity, Identity, |f| {
            Ok(f.derivative())
        }),
        entry("shift S", "f(t+1)", "f(t+1) D(g(t))", "(S, 0)", Zero, Shift, |f| Ok(f.shift())),
        entry(
            "shift difference",
            "f(t+1) - f(t)",
            "D(f(t)) g(t) + f(t+1) D(g(t))",
            "(S, id)",
            Identity,
            Shift,
            |f| Ok(f.shift() - f.clone()),
        ),
        entry("q-dilatation T_q", "f(qt)", "f(qt) D(g(t))", "(T_q, 0)", Zero, Dilation(q()), move |f| {
            Ok(f.dilate(&q()))
        }),
        entry(
            "Jackson q-derivative",
            "(f(t) - f(qt)) / (t - qt)",
            "D(f(t)) g(t) + f(qt) D(g(t))",
            "(id, T_q)",
            Identity,
            Dilation(q()),
            move |f| jackson_quotient(f, &Scalar::one(), &q()),
        ),
        entry(
            "Jackson symmetric q-derivative",
            "(f(t/q) - f(qt)) / (t/q - qt)",
            "D(f(t)) g(t/q) + f(qt) D(g(t))",
            "(T_{1/q}, T_q)",
            Dilation(q_inv()),
            Dilation(q()),
            move |f| jackson_quotient(f, &q_inv(), &q()),
        ),
        entry(
            "Jackson (p,q)-derivative",
            "(f(pt) - f(qt)) / (pt - qt)",
            "D(f(t)) g(pt) + f(qt) D(g(t))",
            "(T_p, T_q)",
            Dilation(p()),
            Dilation(q()),
            move |f| jackson_quotient(f, &p(), &q()),
        ),
        entry(
            "p-dilatation derivative",
            "f'(pt)",
            "D(f(t)) g(pt) + f(pt) D(g(t))",
            "(T_p, T_p)",
            Dilation(p()),
            Dilation(p()),
            move |f| Ok(f.derivative().dilate(&p())),
        ),
    ]
}

/// Random polynomial pairs of degree at most `max_degree` with small rational coefficients.
pub fn random_corpus(seed: u64, pairs: usize, max_degree: u32) -> Vec<(PlainPoly, PlainPoly)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let poly = |rng: &mut ChaCha8Rng| {
        let deg = rng.gen_range(0..=max_degree);
        PlainPoly::from_coeffs((0..=deg).map(|k| {
            let r = BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=9).into());
            (k, Scalar::from_rational(r))
        }))
    };
    (0..pairs).map(|_| (poly(&mut rng), poly(&mut rng))).collect()
}

#[derive(Clone, Debug)]
pub struct EntryReport {
    pub name: &'static str,
    pub checked: usize,
    /// First pair where the product rule fails.
    pub failure: Option<(PlainPoly, PlainPoly)>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `D(fg) = D(f)·τ(g) + σ(f)·D(g)` exactly on every pair.
pub fn verify_entry(e: &CatalogueEntry, corpus: &[(PlainPoly, PlainPoly)]) -> Result<EntryReport> {
    let outcomes: Result<Vec<bool>> = corpus
        .par_iter()
        .map(|(f, g)| Ok(e.apply(&(f * g))? == e.rule_value(f, g)?))
        .collect();
    let failure = outcomes?.iter().position(|ok| !ok).map(|i| corpus[i].clone());
    Ok(EntryReport { name: e.name, checked: corpus.len(), failure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::pq_number;

    fn find(name: &str) -> CatalogueEntry {
        catalogue().into_iter().find(|e| e.name == name).unwrap()
    }

    #[test]
    fn eight_rows_all_pass() {
        let corpus = random_corpus(7, 20, 6);
        let rows = catalogue();
        assert_eq!(rows.len(), 8);
        for e in &rows {
            assert!(verify_entry(e, &corpus).unwrap().passed(), "{}", e.name);
        }
    }

    #[test]
    fn sample_values() {
        let d = find("differentiation");
        assert_eq!(d.apply(&PlainPoly::t_pow(3)).unwrap(), PlainPoly::monomial(Scalar::from_int(3), 2));
        let s = find("shift difference");
        let expect = PlainPoly::from_coeffs([(1, Scalar::from_int(2)), (0, Scalar::one())]);
        assert_eq!(s.apply(&PlainPoly::t_pow(2)).unwrap(), expect);
        let j = find("Jackson (p,q)-derivative");
        for n in 1..6 {
            assert_eq!(j.apply(&PlainPoly::t_pow(n)).unwrap(), PlainPoly::monomial(pq_number(n as i64), n - 1));
        }
    }

    #[test]
    fn worked_rule_examples() {
        let j = find("Jackson q-derivative");
        let (t, t2) = (PlainPoly::t_pow(1), PlainPoly::t_pow(2));
        let lhs = j.apply(&(&t * &t2)).unwrap();
        let expect = PlainPoly::monomial(Scalar::one() + Scalar::q() + Scalar::monomial(1, 0, 2), 2);
        assert_eq!(lhs, expect);
        assert_eq!(j.rule_value(&t, &t2).unwrap(), expect);
        let pd = find("p-dilatation derivative");
        let two_pt = PlainPoly::monomial(Scalar::from_int(2) * Scalar::p(), 1);
        assert_eq!(pd.apply(&(&t * &t)).unwrap(), two_pt);
        assert_eq!(pd.rule_value(&t, &t).unwrap(), two_pt);
    }

    #[test]
    fn swapped_orientation_holds_on_every_row() {
        let corpus = random_corpus(11, 10, 5);
        for e in catalogue() {
            assert!(verify_entry(&e.swapped(), &corpus).unwrap().passed(), "{}", e.name);
        }
    }

    #[test]
    fn inexact_division_is_reported() {
        assert!(matches!(PlainPoly::t_pow(0).div_t(), Err(Error::NotDivisible { .. })));
    }
}
