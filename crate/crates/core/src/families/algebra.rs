//! Generators, finite combinations, and bracket structures given by closures.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A basis element: `d_n` of a graded algebra, the `sl(2)` triple, or a central `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    D(i64),
    E,
    F,
    H,
    C,
}

impl Gen {
    pub fn index(&self) -> Option<i64> {
        match self {
            Gen::D(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::D(n) => write!(f, "d_{n}"),
            Gen::E => f.write_str("e"),
            Gen::F => f.write_str("f"),
            Gen::H => f.write_str("h"),
            Gen::C => f.write_str("c"),
        }
    }
}

/// A finite linear combination of generators with scalar coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Combination {
    terms: BTreeMap<Gen, Scalar>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(g: Gen, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn basis(g: Gen) -> Self {
        Self::single(g, Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Gen, Scalar)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (g, c) in it {
            out.add_term(g, c);
        }
        out
    }

    pub fn add_term(&mut self, g: Gen, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&g) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(g, s);
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Gen, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &Gen) -> Scalar {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(g, c)` when the combination is `c·g`.
    pub fn as_single(&self) -> Option<(Gen, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(g, c)| (*g, c))
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(g, c)| (*g, c * s)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Applies a coefficient map, e.g. a specialization-compatible substitution.
    pub fn try_map_coeffs<F: Fn(&Scalar) -> Result<Scalar>>(&self, f: F) -> Result<Self> {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            out.add_term(*g, f(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "({c})*{g}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which generators make up the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// `d_n` for all integers `n`.
    Graded,
    /// `d_n` for all `n`, plus a central `c`.
    GradedCentral,
    /// A finite basis.
    Finite(Vec<Gen>),
}

impl BasisKind {
    pub fn window(&self, w: i64) -> Vec<Gen> {
        match self {
            BasisKind::Graded => (-w..=w).map(Gen::D).collect(),
            BasisKind::GradedCentral => (-w..=w).map(Gen::D).chain([Gen::C]).collect(),
            BasisKind::Finite(v) => v.clone(),
        }
    }
}

/// A bracket structure with a twist map.
pub trait Algebra: Send + Sync {
    fn name(&self) -> &str;
    fn basis_kind(&self) -> BasisKind;
    fn bracket(&self, x: &Gen, y: &Gen) -> Result<Combination>;
    fn twist(&self, x: &Gen) -> Result<Combination>;

    fn basis(&self, w: i64) -> Vec<Gen> {
        self.basis_kind().window(w)
    }
}

/// Bilinear extension of the bracket to combinations.
pub fn bracket_comb(alg: &dyn Algebra, x: &Combination, y: &Combination) -> Result<Combination> {
    let mut out = Combination::zero();
    for (gx, cx) in x.terms() {
        for (gy, cy) in y.terms() {
            let b = alg.bracket(gx, gy)?;
            out = out.add(&b.scale(&(cx * cy)));
        }
    }
    Ok(out)
}

/// Linear extension of the twist map to combinations.
pub fn twist_comb(alg: &dyn Algebra, x: &Combination) -> Result<Combination> {
    map_comb(&|g| alg.twist(g), x)
}

/// Linear extension of a generator map.
pub fn map_comb(f: &dyn Fn(&Gen) -> Result<Combination>, x: &Combination) -> Result<Combination> {
    let mut out = Combination::zero();
    for (g, c) in x.terms() {
        out = out.add(&f(g)?.scale(c));
    }
    Ok(out)
}

type BracketFn = dyn Fn(&Gen, &Gen) -> Result<Combination> + Send + Sync;
type TwistFn = dyn Fn(&Gen) -> Result<Combination> + Send + Sync;

/// An algebra whose bracket and twist are closures; brackets are memoized.
#[derive(Clone)]
pub struct GradedAlgebra {
    name: String,
    provenance: String,
    basis: BasisKind,
    bracket: Arc<BracketFn>,
    twist: Arc<TwistFn>,
    cache: Arc<Mutex<HashMap<(Gen, Gen), Combination>>>,
}

impl GradedAlgebra {
    pub fn new(
        name: impl Into<String>,
        basis: BasisKind,
        bracket: impl Fn(&Gen, &Gen) -> Result<Combination> + Send + Sync + 'static,
        twist: impl Fn(&Gen) -> Result<Combination> + Send + Sync + 'static,
    ) -> Self {
        let name = name.into();
        Self {
            provenance: name.clone(),
            name,
            basis,
            bracket: Arc::new(bracket),
            twist: Arc::new(twist),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Same bracket, different twist.
    pub fn with_twist(&self, twist: impl Fn(&Gen) -> Result<Combination> + Send + Sync + 'static) -> Self {
        Self {
            name: self.name.clone(),
            provenance: self.provenance.clone(),
            basis: self.basis.clone(),
            bracket: self.bracket.clone(),
            twist: Arc::new(twist),
            cache: self.cache.clone(),
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Wraps any algebra as a closure algebra sharing its behavior.
    pub fn from_algebra(alg: Arc<dyn Algebra>) -> Self {
        let (a1, a2) = (alg.clone(), alg.clone());
        Self::new(
            alg.name().to_string(),
            alg.basis_kind(),
            move |x, y| a1.bracket(x, y),
            move |x| a2.twist(x),
        )
    }

    /// Applies a ring substitution to every structure constant and twist coefficient.
    pub fn substitute(&self, name: impl Into<String>, p_img: Scalar, q_img: Scalar) -> Self {
        let src = self.clone();
        let src2 = self.clone();
        let (p1, q1) = (p_img.clone(), q_img.clone());
        Self::new(
            name,
            self.basis.clone(),
            move |x, y| src.bracket(x, y)?.try_map_coeffs(|c| c.substitute(&p1, &q1)),
            move |x| src2.twist(x)?.try_map_coeffs(|c| c.substitute(&p_img, &q_img)),
        )
        .with_provenance(format!("substitution in {}", self.name))
    }
}

impl Algebra for GradedAlgebra {
    fn name(&self) -> &str {
        &self.name
    }

    fn basis_kind(&self) -> BasisKind {
        self.basis.clone()
    }

    fn bracket(&self, x: &Gen, y: &Gen) -> Result<Combination> {
        let key = (*x, *y);
        if let Some(v) = self.cache.lock().expect("cache poisoned").get(&key) {
            return Ok(v.clone());
        }
        let v = (self.bracket)(x, y)?;
        self.cache.lock().expect("cache poisoned").insert(key, v.clone());
        Ok(v)
    }

    fn twist(&self, x: &Gen) -> Result<Combination> {
        (self.twist)(x)
    }
}

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedAlgebra({})", self.name)
    }
}

/// An algebra given by an explicit finite table; lookups outside it fail loudly.
#[derive(Clone, Debug)]
pub struct TableAlgebra {
    pub name: String,
    pub gens: Vec<Gen>,
    pub brackets: BTreeMap<(Gen, Gen), Combination>,
    pub twists: BTreeMap<Gen, Combination>,
}

impl TableAlgebra {
    /// Tabulates an algebra on the window `w`.
    pub fn tabulate(alg: &dyn Algebra, w: i64) -> Result<Self> {
        let gens = alg.basis(w);
        let mut brackets = BTreeMap::new();
        let mut twists = BTreeMap::new();
        for x in &gens {
            twists.insert(*x, alg.twist(x)?);
            for y in &gens {
                brackets.insert((*x, *y), alg.bracket(x, y)?);
            }
        }
        Ok(Self { name: alg.name().to_string(), gens, brackets, twists })
    }
}

impl Algebra for TableAlgebra {
    fn name(&self) -> &str {
        &self.name
    }

    fn basis_kind(&self) -> BasisKind {
        BasisKind::Finite(self.gens.clone())
    }

    fn bracket(&self, x: &Gen, y: &Gen) -> Result<Combination> {
        self.brackets.get(&(*x, *y)).cloned().ok_or_else(|| {
            let out = if self.gens.contains(x) { y } else { x };
            Error::WindowExceeded(out.to_string())
        })
    }

    fn twist(&self, x: &Gen) -> Result<Combination> {
        self.twists.get(x).cloned().ok_or_else(|| Error::WindowExceeded(x.to_string()))
    }
}

/// A linear map given on generators.
pub trait GenMap: Send + Sync {
    fn image(&self, g: &Gen) -> Result<Combination>;

    fn apply(&self, x: &Combination) -> Result<Combination> {
        map_comb(&|g| self.image(g), x)
    }
}

/// A generator map given by a closure.
pub struct FnGenMap<F>(pub F);

impl<F> GenMap for FnGenMap<F>
where
    F: Fn(&Gen) -> Result<Combination> + Send + Sync,
{
    fn image(&self, g: &Gen) -> Result<Combination> {
        (self.0)(g)
    }
}

/// `φ(d_n) = c_n·d_{ν(n)}` with `ν(n) = ν₁·n`; named generators map to multiples of themselves.
pub struct ScaleMorphism {
    pub name: String,
    pub c: Arc<dyn Fn(&Gen) -> Scalar + Send + Sync>,
    pub nu: i64,
}

impl ScaleMorphism {
    pub fn new(name: impl Into<String>, nu: i64, c: impl Fn(&Gen) -> Scalar + Send + Sync + 'static) -> Self {
        Self { name: name.into(), c: Arc::new(c), nu }
    }

    pub fn target(&self, g: &Gen) -> Gen {
        match g {
            Gen::D(n) => Gen::D(self.nu * n),
            other => *other,
        }
    }
}

impl GenMap for ScaleMorphism {
    fn image(&self, g: &Gen) -> Result<Combination> {
        Ok(Combination::single(self.target(g), (self.c)(g)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_arithmetic() {
        let a = Combination::single(Gen::D(1), Scalar::p());
        let b = Combination::single(Gen::D(1), -Scalar::p());
        assert!(a.add(&b).is_zero());
        assert_eq!(a.scale(&Scalar::from_int(2)).coeff(&Gen::D(1)), Scalar::monomial(2, 1, 0));
        assert_eq!(Combination::basis(Gen::E).to_string(), "e");
    }

    #[test]
    fn table_lookup_outside_window() {
        let alg = GradedAlgebra::new(
            "classical",
            BasisKind::Graded,
            |x, y| {
                let (n, m) = (x.index().unwrap(), y.index().unwrap());
                Ok(Combination::single(Gen::D(n + m), Scalar::from_int(n - m)))
            },
            |x| Ok(Combination::basis(*x)),
        );
        let table = TableAlgebra::tabulate(&alg, 2).unwrap();
        assert_eq!(table.bracket(&Gen::D(1), &Gen::D(2)).unwrap(), alg.bracket(&Gen::D(1), &Gen::D(2)).unwrap());
        assert_eq!(table.bracket(&Gen::D(1), &Gen::D(3)), Err(Error::WindowExceeded("d_3".into())));
    }
}
