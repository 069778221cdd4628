//! Morphism checks and the scale-isomorphism solver for graded families.
//!
//! A scale map is `φ(d_n) = c_n·d_{ν(n)}` with `ν(n) = ν₁·n`. Intertwining the
//! brackets gives `c_{n+m}·a_{n,m} = c_n·c_m·b_{ν(n),ν(m)}` for every pair, and
//! intertwining diagonal twists gives `α_n = α'_{ν(n)}`. The solver fixes `c_0`
//! from the pairs `(n, 0)`, then propagates through pairs with a single unknown,
//! introducing a free parameter only when propagation stalls.

use std::collections::BTreeMap;
use std::fmt;

use super::algebra::{bracket_comb, Algebra, BasisKind, Combination, Gen, GenMap};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `ν₁` values explored by [`solve_scale_isomorphism_all`].
pub const NU_CHOICES: [i64; 4] = [-2, -1, 1, 2];

/// How far a linear map goes towards being a morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismVerdict {
    /// Brackets are not intertwined.
    NotMorphism,
    /// Brackets are intertwined, twists are not.
    Weak,
    /// Brackets and twists are intertwined.
    Full,
}

impl fmt::Display for MorphismVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphismVerdict::NotMorphism => "not a morphism",
            MorphismVerdict::Weak => "weak morphism",
            MorphismVerdict::Full => "morphism",
        })
    }
}

#[derive(Clone, Debug)]
pub struct MorphismReport {
    pub verdict: MorphismVerdict,
    pub checked_pairs: usize,
    /// First pair with `φ([x, y]) ≠ [φx, φy]`, and both sides.
    pub bracket_failure: Option<((Gen, Gen), Combination, Combination)>,
    /// First generator with `φ(α x) ≠ α'(φ x)`, and both sides.
    pub twist_failure: Option<(Gen, Combination, Combination)>,
}

impl MorphismReport {
    pub fn witness(&self) -> Option<String> {
        if let Some(((x, y), l, r)) = &self.bracket_failure {
            return Some(format!("phi([{x}, {y}]) = {l} but [phi {x}, phi {y}] = {r}"));
        }
        self.twist_failure
            .as_ref()
            .map(|(x, l, r)| format!("phi(alpha {x}) = {l} but alpha'(phi {x}) = {r}"))
    }
}

/// Checks `φ∘[·,·] = [·,·]'∘(φ⊗φ)` and `φ∘α = α'∘φ` on the generators of the window.
pub fn check_morphism(phi: &dyn GenMap, src: &dyn Algebra, dst: &dyn Algebra, w: i64) -> Result<MorphismReport> {
    let basis = src.basis(w);
    let mut checked_pairs = 0;
    let mut bracket_failure = None;
    'outer: for x in &basis {
        for y in &basis {
            checked_pairs += 1;
            let lhs = phi.apply(&src.bracket(x, y)?)?;
            let rhs = bracket_comb(dst, &phi.image(x)?, &phi.image(y)?)?;
            if lhs != rhs {
                bracket_failure = Some(((*x, *y), lhs, rhs));
                break 'outer;
            }
        }
    }
    let mut twist_failure = None;
    for x in &basis {
        let lhs = phi.apply(&src.twist(x)?)?;
        let rhs = super::algebra::twist_comb(dst, &phi.image(x)?)?;
        if lhs != rhs {
            twist_failure = Some((*x, lhs, rhs));
            break;
        }
    }
    let verdict = match (&bracket_failure, &twist_failure) {
        (Some(_), _) => MorphismVerdict::NotMorphism,
        (None, Some(_)) => MorphismVerdict::Weak,
        (None, None) => MorphismVerdict::Full,
    };
    Ok(MorphismReport { verdict, checked_pairs, bracket_failure, twist_failure })
}

/// A generator map given by an explicit table; generators outside it are an error.
#[derive(Clone, Debug, Default)]
pub struct TableMorphism {
    pub images: BTreeMap<Gen, Combination>,
}

impl TableMorphism {
    pub fn new<I: IntoIterator<Item = (Gen, Combination)>>(it: I) -> Self {
        Self { images: it.into_iter().collect() }
    }
}

impl GenMap for TableMorphism {
    fn image(&self, g: &Gen) -> Result<Combination> {
        self.images.get(g).cloned().ok_or_else(|| Error::WindowExceeded(g.to_string()))
    }
}

/// `scale · Π u_i^(exps_i)` in the free parameters `u_i` of a solution family.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamValue {
    pub scale: Scalar,
    pub exps: Vec<i64>,
}

impl ParamValue {
    pub fn constant(s: Scalar) -> Self {
        Self { scale: s, exps: Vec::new() }
    }

    fn param(j: usize) -> Self {
        let mut exps = vec![0; j + 1];
        exps[j] = 1;
        Self { scale: Scalar::one(), exps }
    }

    pub fn exp(&self, j: usize) -> i64 {
        self.exps.get(j).copied().unwrap_or(0)
    }

    fn trimmed(mut self) -> Self {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
        self
    }

    fn combine(&self, other: &Self, sign: i64, scale: Scalar) -> Self {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n).map(|i| self.exp(i) + sign * other.exp(i)).collect();
        Self { scale, exps }.trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, 1, &self.scale * &other.scale)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.combine(other, -1, self.scale.checked_div(&other.scale)?))
    }

    pub fn times(&self, s: &Scalar) -> Self {
        Self { scale: &self.scale * s, exps: self.exps.clone() }
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        let n = self.exps.len().max(other.exps.len());
        (0..n).all(|i| self.exp(i) == other.exp(i))
    }

    /// Replaces `u_j` by `v`.
    fn substitute(&self, j: usize, v: &Self) -> Result<Self> {
        let e = self.exp(j);
        if e == 0 {
            return Ok(self.clone());
        }
        let mut base = self.clone();
        if j < base.exps.len() {
            base.exps[j] = 0;
        }
        let n = base.exps.len().max(v.exps.len());
        let exps = (0..n).map(|i| base.exp(i) + e * v.exp(i)).collect();
        Ok(Self { scale: &base.scale * &v.scale.pow(e)?, exps }.trimmed())
    }

    /// The value at given parameter values.
    pub fn evaluate(&self, params: &[Scalar]) -> Result<Scalar> {
        let mut out = self.scale.clone();
        for (i, e) in self.exps.iter().enumerate() {
            if *e != 0 {
                let u = params.get(i).ok_or_else(|| Error::Unsupported(format!("missing parameter {i}")))?;
                out = out * u.pow(*e)?;
            }
        }
        Ok(out)
    }

    /// Renders with parameter names, e.g. `(p^-1)*c_1^2`.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, e) in self.exps.iter().enumerate() {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("u{i}"));
            match *e {
                0 => {}
                1 => parts.push(name),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            return self.scale.to_string();
        }
        let monomial = parts.join("*");
        if self.scale.is_one() {
            monomial
        } else {
            format!("({})*{monomial}", self.scale)
        }
    }
}

/// Where a value of `c_n` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Parameter,
    Pair(i64, i64),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Parameter => f.write_str("free parameter"),
            Source::Pair(n, m) => write!(f, "pair ({n}, {m})"),
        }
    }
}

/// Why no scale map exists for a given `ν₁`.
#[derive(Clone, Debug, PartialEq)]
pub enum Infeasibility {
    /// Two pairs force different values of the same `c_n`.
    Conflict {
        index: i64,
        first: (ParamValue, Source),
        second: (ParamValue, Source),
        /// Whether the two values coincide after `p := 1`.
        agree_at_p_one: bool,
    },
    /// One side of a pair's equation vanishes and the other does not.
    ZeroMismatch { pair: (i64, i64), src: Scalar, dst: Scalar },
    /// Diagonal twists differ at `n`.
    Twist { n: i64, src: Scalar, dst: Scalar },
}

/// A family of scale maps: each `c_n` as a monomial in the free parameters.
#[derive(Clone, Debug)]
pub struct ScaleFamily {
    pub nu: i64,
    /// The index `n` whose `c_n` each free parameter stands for.
    pub params: Vec<i64>,
    pub values: BTreeMap<i64, ParamValue>,
    /// Parameter relations that could not be solved by substitution.
    pub residual: Vec<String>,
    pub equations: usize,
}

impl ScaleFamily {
    pub fn param_names(&self) -> Vec<String> {
        self.params.iter().map(|k| format!("c_{k}")).collect()
    }

    pub fn value(&self, n: i64) -> Option<&ParamValue> {
        self.values.get(&n)
    }

    pub fn render(&self, n: i64) -> Option<String> {
        let names = self.param_names();
        self.values.get(&n).map(|v| v.render(&names))
    }

    /// The scale map at the given parameter values.
    pub fn instantiate(&self, params: &[Scalar]) -> Result<TableMorphism> {
        let mut images = BTreeMap::new();
        for (n, v) in &self.values {
            images.insert(Gen::D(*n), Combination::single(Gen::D(self.nu * n), v.evaluate(params)?));
        }
        Ok(TableMorphism { images })
    }

    /// Whether setting every parameter to 1 gives `c_n = 1` throughout.
    pub fn admits_identity(&self) -> Result<bool> {
        let ones = vec![Scalar::one(); self.params.len()];
        for v in self.values.values() {
            if !v.evaluate(&ones)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug)]
pub enum ScaleSolution {
    Family(ScaleFamily),
    Infeasible { nu: i64, reason: Infeasibility },
}

impl ScaleSolution {
    pub fn nu(&self) -> i64 {
        match self {
            ScaleSolution::Family(f) => f.nu,
            ScaleSolution::Infeasible { nu, .. } => *nu,
        }
    }
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasibility::Conflict { index, first, second, agree_at_p_one } => {
                write!(
                    f,
                    "c_{index} = {} from {} but c_{index} = {} from {}",
                    first.0.render(&[]),
                    first.1,
                    second.0.render(&[]),
                    second.1
                )?;
                if *agree_at_p_one {
                    f.write_str("; the two agree only when p = 1")?;
                }
                Ok(())
            }
            Infeasibility::ZeroMismatch { pair: (n, m), src, dst } => {
                write!(f, "pair ({n}, {m}): source coefficient {src} against target {dst}")
            }
            Infeasibility::Twist { n, src, dst } => write!(f, "twist at d_{n}: {src} against {dst}"),
        }
    }
}

/// `a` with `[d_n, d_m] = a·d_target`, or zero.
fn single_coefficient(c: &Combination, target: Gen) -> Result<Scalar> {
    if c.is_zero() {
        return Ok(Scalar::zero());
    }
    match c.as_single() {
        Some((g, s)) if g == target => Ok(s.clone()),
        _ => Err(Error::Unsupported(format!("{c} is not a multiple of {target}"))),
    }
}

struct Equation {
    n: i64,
    m: i64,
    a: Scalar,
    b: Scalar,
}

enum Outcome {
    Progress,
    Stalled,
}

struct Solver {
    known: BTreeMap<i64, (ParamValue, Source)>,
    params: Vec<Option<i64>>,
    residual: Vec<String>,
}

impl Solver {
    fn get(&self, k: i64) -> Option<&ParamValue> {
        self.known.get(&k).map(|(v, _)| v)
    }

    fn set(&mut self, k: i64, v: ParamValue, src: Source) {
        self.known.insert(k, (v, src));
    }

    fn substitute_everywhere(&mut self, j: usize, v: &ParamValue) -> Result<()> {
        for (val, _) in self.known.values_mut() {
            *val = val.substitute(j, v)?;
        }
        self.params[j] = None;
        Ok(())
    }

    /// Requires `c_k = value`; returns an infeasibility when it contradicts what is known.
    fn require(&mut self, k: i64, value: ParamValue, src: Source) -> Result<Option<Infeasibility>> {
        let Some((old, old_src)) = self.known.get(&k).cloned() else {
            self.set(k, value, src);
            return Ok(None);
        };
        if old == value {
            return Ok(None);
        }
        if old.same_shape(&value) {
            let p1 = (Scalar::one(), Scalar::q());
            let agree = old.scale.substitute(&p1.0, &p1.1)? == value.scale.substitute(&p1.0, &p1.1)?;
            return Ok(Some(Infeasibility::Conflict {
                index: k,
                first: (old, old_src),
                second: (value, src),
                agree_at_p_one: agree,
            }));
        }
        // A relation among parameters: solve for one of them when it appears linearly.
        let ratio = old.div(&value)?;
        let pick = (0..ratio.exps.len()).rev().find(|j| ratio.exp(*j).abs() == 1 && self.params[*j].is_some());
        match pick {
            Some(j) => {
                let dj = ratio.exp(j);
                let mut rest = ratio.clone();
                rest.exps[j] = 0;
                let base = ParamValue::constant(Scalar::one()).div(&rest)?;
                let v = if dj == 1 { base } else { ParamValue::constant(Scalar::one()).div(&base)? };
                self.substitute_everywhere(j, &v)?;
            }
            None => {
                let names: Vec<String> = self.params.iter().map(|k| format!("c_{}", k.unwrap_or(0))).collect();
                self.residual.push(format!("{} = {}", old.render(&names), value.render(&names)));
            }
        }
        Ok(None)
    }

    fn step(&mut self, eq: &Equation) -> Result<(Outcome, Option<Infeasibility>)> {
        let Equation { n, m, a, b } = eq;
        let (n, m) = (*n, *m);
        let src = Source::Pair(n, m);
        // With m = 0 (or n = 0) the unknown c_n cancels and the pair fixes c_0 = a/b.
        if n == 0 || m == 0 {
            let v = ParamValue::constant(a.checked_div(b)?);
            let had = self.get(0).is_some();
            let bad = self.require(0, v, src)?;
            return Ok((if had { Outcome::Stalled } else { Outcome::Progress }, bad));
        }
        let s = n + m;
        match (self.get(n).cloned(), self.get(m).cloned(), self.get(s).cloned()) {
            (Some(cn), Some(cm), Some(_)) => {
                let v = cn.mul(&cm).times(&b.checked_div(a)?);
                let before = self.known.get(&s).cloned();
                let bad = self.require(s, v, src)?;
                let changed = self.known.get(&s).cloned() != before;
                Ok((if changed { Outcome::Progress } else { Outcome::Stalled }, bad))
            }
            (Some(cn), Some(cm), None) => {
                self.set(s, cn.mul(&cm).times(&b.checked_div(a)?), src);
                Ok((Outcome::Progress, None))
            }
            (None, Some(cm), Some(cs)) if n != m => {
                self.set(n, cs.times(a).div(&cm.times(b))?, src);
                Ok((Outcome::Progress, None))
            }
            (Some(cn), None, Some(cs)) if n != m => {
                self.set(m, cs.times(a).div(&cn.times(b))?, src);
                Ok((Outcome::Progress, None))
            }
            _ => Ok((Outcome::Stalled, None)),
        }
    }
}

/// Solves for scale maps `src → dst` with `ν(n) = nu·n` from all pairs of the window.
pub fn solve_scale_isomorphism(src: &dyn Algebra, dst: &dyn Algebra, w: i64, nu: i64) -> Result<ScaleSolution> {
    if src.basis_kind() != BasisKind::Graded || dst.basis_kind() != BasisKind::Graded {
        return Err(Error::Unsupported("scale maps are solved on graded algebras only".into()));
    }
    let mut eqs = Vec::new();
    for n in -w..=w {
        for m in -w..=w {
            if (n + m).abs() > w {
                continue;
            }
            let a = single_coefficient(&src.bracket(&Gen::D(n), &Gen::D(m))?, Gen::D(n + m))?;
            let b = single_coefficient(&dst.bracket(&Gen::D(nu * n), &Gen::D(nu * m))?, Gen::D(nu * (n + m)))?;
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (false, false) => eqs.push(Equation { n, m, a, b }),
                _ => {
                    let reason = Infeasibility::ZeroMismatch { pair: (n, m), src: a, dst: b };
                    return Ok(ScaleSolution::Infeasible { nu, reason });
                }
            }
        }
    }
    // Small, nonnegative indices first, so witnesses involve the simplest pairs.
    eqs.sort_by_key(|e| (e.n < 0 || e.m < 0, e.n.abs() + e.m.abs(), -e.n, -e.m));
    let equations = eqs.len();
    let mut solver = Solver { known: BTreeMap::new(), params: Vec::new(), residual: Vec::new() };
    let order: Vec<i64> = {
        let mut v: Vec<i64> = (-w..=w).collect();
        v.sort_by_key(|k| (k.abs(), -k));
        v
    };
    loop {
        let mut progress = false;
        for eq in &eqs {
            let (outcome, bad) = solver.step(eq)?;
            if let Some(reason) = bad {
                return Ok(ScaleSolution::Infeasible { nu, reason });
            }
            progress |= matches!(outcome, Outcome::Progress);
        }
        if progress {
            continue;
        }
        match order.iter().find(|k| solver.get(**k).is_none()) {
            Some(k) => {
                let j = solver.params.len();
                solver.params.push(Some(*k));
                solver.set(*k, ParamValue::param(j), Source::Parameter);
            }
            None => break,
        }
    }
    for n in -w..=w {
        let a = single_coefficient(&src.twist(&Gen::D(n))?, Gen::D(n))?;
        let b = single_coefficient(&dst.twist(&Gen::D(nu * n))?, Gen::D(nu * n))?;
        if a != b {
            return Ok(ScaleSolution::Infeasible { nu, reason: Infeasibility::Twist { n, src: a, dst: b } });
        }
    }
    // Renumber the surviving parameters densely.
    let alive: Vec<usize> = (0..solver.params.len()).filter(|j| solver.params[*j].is_some()).collect();
    let values = solver
        .known
        .into_iter()
        .map(|(k, (v, _))| {
            let exps = alive.iter().map(|j| v.exp(*j)).collect();
            (k, ParamValue { scale: v.scale, exps }.trimmed())
        })
        .collect();
    let params = alive.iter().filter_map(|j| solver.params[*j]).collect();
    let mut residual = solver.residual;
    residual.sort();
    residual.dedup();
    Ok(ScaleSolution::Family(ScaleFamily { nu, params, values, residual, equations }))
}

/// Runs the solver for every `ν₁` in [`NU_CHOICES`].
pub fn solve_scale_isomorphism_all(src: &dyn Algebra, dst: &dyn Algebra, w: i64) -> Result<Vec<ScaleSolution>> {
    NU_CHOICES.iter().map(|nu| solve_scale_isomorphism(src, dst, w, *nu)).collect()
}
