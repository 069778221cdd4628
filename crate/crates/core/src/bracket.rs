//! Brackets on the module `A·Δ` and the identity checkers built on them.
//!
//! Two constructions are provided. The general bracket needs only `τ`
//! invertible and satisfies a six-term quasi-Jacobi identity twisted by
//! `θ = σ∘τ⁻¹` and `δ`. The forced bracket needs `στ = τσ` and
//! `Δσ = δσΔ`, `Δτ = δτΔ`, and is Hom-Lie with twist `σ + τ`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::derivation::{LinearOp, TwistedDerivation};
use crate::error::{Error, Result};
use crate::families::algebra::{
    bracket_comb, twist_comb, Algebra, BasisKind, Combination, Gen, GenMap, GradedAlgebra,
};
use crate::laurent::{Endo, LaurentPoly};

/// Default exponent window for the forced-bracket conditions.
pub const CONDITION_WINDOW: i64 = 8;

/// Coefficient of `[a·Δ, b·Δ] = (θ(a)·Δ(τ⁻¹b) - θ(b)·Δ(τ⁻¹a))·Δ`.
pub fn bracket_general(ctx: &dyn TwistedDerivation, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    let tinv = ctx.tau().invert()?;
    let theta = ctx.theta()?;
    let left = theta.apply(a) * ctx.apply(&tinv.apply(b))?;
    let right = theta.apply(b) * ctx.apply(&tinv.apply(a))?;
    Ok(left - right)
}

/// The general bracket realized as a difference of operator compositions:
/// `(θ(a)·Δ)∘(τ⁻¹(b)·τ⁻¹∘Δ) - (θ(b)·Δ)∘(τ⁻¹(a)·τ⁻¹∘Δ)`.
pub struct OperatorOracle<'a> {
    ctx: &'a dyn TwistedDerivation,
    tinv: Endo,
    theta_a: LaurentPoly,
    theta_b: LaurentPoly,
    tinv_a: LaurentPoly,
    tinv_b: LaurentPoly,
}

pub fn bracket_general_operator_oracle<'a>(
    ctx: &'a dyn TwistedDerivation,
    a: &LaurentPoly,
    b: &LaurentPoly,
) -> Result<OperatorOracle<'a>> {
    let tinv = ctx.tau().invert()?;
    let theta = ctx.theta()?;
    Ok(OperatorOracle {
        ctx,
        theta_a: theta.apply(a),
        theta_b: theta.apply(b),
        tinv_a: tinv.apply(a),
        tinv_b: tinv.apply(b),
        tinv,
    })
}

impl LinearOp for OperatorOracle<'_> {
    fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        let inner = self.tinv.apply(&self.ctx.apply(f)?);
        let left = &self.theta_a * &self.ctx.apply(&(&self.tinv_b * &inner))?;
        let right = &self.theta_b * &self.ctx.apply(&(&self.tinv_a * &inner))?;
        Ok(left - right)
    }
}

/// Which endomorphism multiplies in the forced bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForcedSide {
    Sigma,
    Tau,
}

/// Coefficient of `[a·Δ, b·Δ]' = (σ(a)Δ(b) - σ(b)Δ(a))·Δ` (or with `τ` in place of `σ`),
/// without re-checking the conditions.
pub fn bracket_forced_unchecked(
    ctx: &dyn TwistedDerivation,
    a: &LaurentPoly,
    b: &LaurentPoly,
    side: ForcedSide,
) -> Result<LaurentPoly> {
    let e = match side {
        ForcedSide::Sigma => ctx.sigma(),
        ForcedSide::Tau => ctx.tau(),
    };
    Ok(e.apply(a) * ctx.apply(b)? - e.apply(b) * ctx.apply(a)?)
}

/// The forced bracket; fails with the violated condition when it does not apply.
pub fn bracket_forced(
    ctx: &dyn TwistedDerivation,
    a: &LaurentPoly,
    b: &LaurentPoly,
    side: ForcedSide,
) -> Result<LaurentPoly> {
    check_forced_conditions(ctx, CONDITION_WINDOW).into_result()?;
    bracket_forced_unchecked(ctx, a, b, side)
}

/// Outcome of checking `στ = τσ`, `Δσ = δσΔ`, `Δτ = δτΔ` on a monomial window.
#[derive(Debug, Clone)]
pub struct ForcedConditions {
    /// First exponent where `στ(t^n) ≠ τσ(t^n)`.
    pub commute_failure: Option<i64>,
    /// The `δ` found for `Δσ = δσΔ`, or a description of why none exists.
    pub delta_sigma: std::result::Result<LaurentPoly, String>,
    pub delta_tau: std::result::Result<LaurentPoly, String>,
    /// `σ(g)/g` and `τ(g)/g` when a gcd is known and the quotients exist.
    pub g_ratio_sigma: Option<LaurentPoly>,
    pub g_ratio_tau: Option<LaurentPoly>,
}

impl ForcedConditions {
    /// The common `δ`, when every condition holds.
    pub fn delta(&self) -> Option<&LaurentPoly> {
        match (&self.delta_sigma, &self.delta_tau) {
            (Ok(a), Ok(b)) if a == b && self.commute_failure.is_none() => Some(a),
            _ => None,
        }
    }

    pub fn passed(&self) -> bool {
        self.delta().is_some()
    }

    pub fn into_result(self) -> Result<LaurentPoly> {
        if let Some(n) = self.commute_failure {
            return Err(Error::ConditionsFailed {
                condition: "sigma∘tau = tau∘sigma".into(),
                witness: format!("t^{n}"),
            });
        }
        let ds = self.delta_sigma.map_err(|w| Error::ConditionsFailed {
            condition: "Delta∘sigma = delta·sigma∘Delta".into(),
            witness: w,
        })?;
        let dt = self.delta_tau.map_err(|w| Error::ConditionsFailed {
            condition: "Delta∘tau = delta·tau∘Delta".into(),
            witness: w,
        })?;
        if ds != dt {
            return Err(Error::ConditionsFailed {
                condition: "the same delta for sigma and tau".into(),
                witness: format!("{ds} vs {dt}"),
            });
        }
        Ok(ds)
    }
}

fn find_delta(ctx: &dyn TwistedDerivation, e: &Endo, w: i64) -> std::result::Result<LaurentPoly, String> {
    let mut found: Option<LaurentPoly> = None;
    for n in -w..=w {
        let f = LaurentPoly::t_pow(n);
        let lhs = ctx.apply(&e.apply(&f)).map_err(|err| err.to_string())?;
        let rhs = e.apply(&ctx.apply(&f).map_err(|err| err.to_string())?);
        if rhs.is_zero() {
            if !lhs.is_zero() {
                return Err(format!("t^{n}: {lhs} against 0"));
            }
            continue;
        }
        let ratio = lhs.exact_div(&rhs).map_err(|_| format!("t^{n}: {lhs} is not a multiple of {rhs}"))?;
        match &found {
            None => found = Some(ratio),
            Some(d) if *d == ratio => {}
            Some(d) => return Err(format!("t^{n}: ratio {ratio} differs from {d}")),
        }
    }
    Ok(found.unwrap_or_else(LaurentPoly::one))
}

/// Checks the three forced-bracket conditions on `t^n`, `n ∈ [-w, w]`.
pub fn check_forced_conditions(ctx: &dyn TwistedDerivation, w: i64) -> ForcedConditions {
    let (tau, sigma) = (ctx.tau(), ctx.sigma());
    let commute_failure = (-w..=w).find(|n| {
        let f = LaurentPoly::t_pow(*n);
        sigma.apply(&tau.apply(&f)) != tau.apply(&sigma.apply(&f))
    });
    let ratio = |e: &Endo| {
        ctx.generator_gcd()
            .and_then(|g| e.apply(g).exact_div(g).ok())
    };
    ForcedConditions {
        commute_failure,
        delta_sigma: find_delta(ctx, sigma, w),
        delta_tau: find_delta(ctx, tau, w),
        g_ratio_sigma: ratio(sigma),
        g_ratio_tau: ratio(tau),
    }
}

/// Values of the two six-term groups for one triple.
#[derive(Debug, Clone)]
pub struct QuasiJacobiEntry {
    pub triple: (LaurentPoly, LaurentPoly, LaurentPoly),
    /// `↻ [θ(a)·Δ, [b·Δ, c·Δ]]`
    pub theta_group: LaurentPoly,
    /// `↻ δ·[a·Δ, [b·Δ, c·Δ]]`
    pub delta_group: LaurentPoly,
    pub residue: LaurentPoly,
}

#[derive(Debug, Clone)]
pub struct QuasiJacobiReport {
    pub checked: usize,
    pub failures: Vec<QuasiJacobiEntry>,
}

impl QuasiJacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates both groups of the quasi-Jacobi identity for one triple.
pub fn quasi_jacobi_entry(
    ctx: &dyn TwistedDerivation,
    a: &LaurentPoly,
    b: &LaurentPoly,
    c: &LaurentPoly,
) -> Result<QuasiJacobiEntry> {
    let theta = ctx.theta()?;
    let delta = ctx.delta().ok_or_else(|| Error::NotInvertible(ctx.tau().to_string()))?;
    let mut theta_group = LaurentPoly::zero();
    let mut delta_group = LaurentPoly::zero();
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        let inner = bracket_general(ctx, y, z)?;
        theta_group = theta_group + bracket_general(ctx, &theta.apply(x), &inner)?;
        delta_group = delta_group + delta * &bracket_general(ctx, x, &inner)?;
    }
    let residue = &theta_group + &delta_group;
    Ok(QuasiJacobiEntry { triple: (a.clone(), b.clone(), c.clone()), theta_group, delta_group, residue })
}

/// Checks the quasi-Jacobi identity on every triple; results follow the input order.
pub fn verify_quasi_jacobi(
    ctx: &dyn TwistedDerivation,
    triples: &[(LaurentPoly, LaurentPoly, LaurentPoly)],
) -> Result<QuasiJacobiReport> {
    let entries: Result<Vec<_>> = triples
        .par_iter()
        .map(|(a, b, c)| quasi_jacobi_entry(ctx, a, b, c))
        .collect();
    let failures = entries?.into_iter().filter(|e| !e.residue.is_zero()).collect();
    Ok(QuasiJacobiReport { checked: triples.len(), failures })
}

/// `↻ [α(a)·Δ, [b·Δ, c·Δ]]` with `α = θ + δ·id` on coefficients.
pub fn hom_jacobi_residue_on_module(
    ctx: &dyn TwistedDerivation,
    a: &LaurentPoly,
    b: &LaurentPoly,
    c: &LaurentPoly,
) -> Result<LaurentPoly> {
    let theta = ctx.theta()?;
    let delta = ctx.delta().ok_or_else(|| Error::NotInvertible(ctx.tau().to_string()))?;
    let mut out = LaurentPoly::zero();
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        let alpha_x = theta.apply(x) + delta * x;
        out = out + bracket_general(ctx, &alpha_x, &bracket_general(ctx, y, z)?)?;
    }
    Ok(out)
}

/// Monomial triples `(-t^n, -t^m, -t^k)`, i.e. `(d_n, d_m, d_k)` in coefficient form.
pub fn monomial_triples(w: i64) -> Vec<(LaurentPoly, LaurentPoly, LaurentPoly)> {
    let d = |n: i64| -LaurentPoly::t_pow(n);
    let mut out = Vec::new();
    for n in -w..=w {
        for m in -w..=w {
            for k in -w..=w {
                out.push((d(n), d(m), d(k)));
            }
        }
    }
    out
}

/// A failing triple of a Hom-Jacobi check.
#[derive(Debug, Clone)]
pub struct JacobiFailure {
    pub triple: (Gen, Gen, Gen),
    pub residue: Combination,
}

impl fmt::Display for JacobiFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, z) = &self.triple;
        write!(f, "({x}, {y}, {z}): residue {}", self.residue)
    }
}

#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub checked: usize,
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `↻ [α(x), [y, z]]` for generators.
pub fn hom_jacobi_residue(alg: &dyn Algebra, x: &Gen, y: &Gen, z: &Gen) -> Result<Combination> {
    let mut out = Combination::zero();
    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
        let alpha = twist_comb(alg, &Combination::basis(*a))?;
        let inner = alg.bracket(b, c)?;
        out = out.add(&bracket_comb(alg, &alpha, &inner)?);
    }
    Ok(out)
}

/// Checks the Hom-Jacobi identity with the algebra's own twist on every triple.
pub fn verify_hom_jacobi(alg: &dyn Algebra, triples: &[(Gen, Gen, Gen)]) -> Result<JacobiReport> {
    let residues: Result<Vec<_>> = triples
        .par_iter()
        .map(|(x, y, z)| hom_jacobi_residue(alg, x, y, z).map(|r| ((*x, *y, *z), r)))
        .collect();
    let failures = residues?
        .into_iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|(triple, residue)| JacobiFailure { triple, residue })
        .collect();
    Ok(JacobiReport { checked: triples.len(), failures })
}

/// All ordered triples of generators in the window.
pub fn generator_triples(alg: &dyn Algebra, w: i64) -> Vec<(Gen, Gen, Gen)> {
    let basis = alg.basis(w);
    let mut out = Vec::with_capacity(basis.len().pow(3));
    for x in &basis {
        for y in &basis {
            for z in &basis {
                out.push((*x, *y, *z));
            }
        }
    }
    out
}

/// All ordered pairs of generators in the window.
pub fn generator_pairs(alg: &dyn Algebra, w: i64) -> Vec<(Gen, Gen)> {
    let basis = alg.basis(w);
    basis.iter().flat_map(|x| basis.iter().map(move |y| (*x, *y))).collect()
}

/// First pair where `ρ([x, y]) ≠ [ρx, ρy]`.
pub fn weak_morphism_failure(
    alg: &dyn Algebra,
    rho: &dyn GenMap,
    pairs: &[(Gen, Gen)],
) -> Result<Option<(Gen, Gen)>> {
    for (x, y) in pairs {
        let lhs = rho.apply(&alg.bracket(x, y)?)?;
        let rhs = bracket_comb(alg, &rho.image(x)?, &rho.image(y)?)?;
        if lhs != rhs {
            return Ok(Some((*x, *y)));
        }
    }
    Ok(None)
}

/// The algebra `(A, ρ∘[·,·], ρ∘α)` without checking that `ρ` is a weak morphism.
pub fn compose_with(alg: std::sync::Arc<dyn Algebra>, rho: std::sync::Arc<dyn GenMap>, name: &str) -> GradedAlgebra {
    let (a1, a2) = (alg.clone(), alg.clone());
    let (r1, r2) = (rho.clone(), rho);
    GradedAlgebra::new(
        name.to_string(),
        alg.basis_kind(),
        move |x, y| r1.apply(&a1.bracket(x, y)?),
        move |x| r2.apply(&a2.twist(x)?),
    )
    .with_provenance(format!("{} composed with a generator map", alg.name()))
}

/// Result of [`twist_algebra`]: the twisted algebra and its Hom-Jacobi check.
pub struct Twisted {
    pub algebra: GradedAlgebra,
    pub jacobi: JacobiReport,
}

/// The twisting principle: for a weak morphism `ρ` of a Hom-Lie algebra
/// `(A, [·,·], α)`, the triple `(A, ρ∘[·,·], ρ∘α)` is again Hom-Lie.
pub fn twist_algebra(
    alg: std::sync::Arc<dyn Algebra>,
    rho: std::sync::Arc<dyn GenMap>,
    name: &str,
    w: i64,
) -> Result<Twisted> {
    let pairs = generator_pairs(alg.as_ref(), w);
    if let Some((x, y)) = weak_morphism_failure(alg.as_ref(), rho.as_ref(), &pairs)? {
        return Err(Error::NotWeakMorphism { witness: format!("({x}, {y})") });
    }
    let algebra = compose_with(alg, rho, name);
    let jacobi = verify_hom_jacobi(&algebra, &generator_triples(&algebra, w))?;
    Ok(Twisted { algebra, jacobi })
}

/// `φ∘α∘φ⁻¹∘α⁻¹` on a generator, the twist an isomorphism `φ: A → A_ρ` forces on `ρ`.
pub fn twist_defect(
    phi: &dyn GenMap,
    phi_inv: &dyn GenMap,
    alpha: &dyn GenMap,
    alpha_inv: &dyn GenMap,
    g: &Gen,
) -> Result<Combination> {
    phi.apply(&alpha.apply(&phi_inv.apply(&alpha_inv.image(g)?)?)?)
}

/// Expands a coefficient `c` of `c·Δ` in the basis `d_k = -t^k·Δ`.
pub fn to_d_basis(c: &LaurentPoly) -> Combination {
    Combination::from_terms(c.terms().map(|(k, s)| (Gen::D(k), -s)))
}

/// Inverse of [`to_d_basis`] on combinations of `d_k`.
pub fn from_d_basis(x: &Combination) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (g, s) in x.terms() {
        match g {
            Gen::D(k) => out = out + LaurentPoly::monomial(-s, *k),
            other => return Err(Error::Unsupported(format!("{other} is not a d-generator"))),
        }
    }
    Ok(out)
}

/// A named rule turning two coefficients into the coefficient of their bracket.
pub trait BracketRule: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// Checks whatever the rule needs from the context.
    fn admissible(&self, ctx: &dyn TwistedDerivation) -> Result<()>;
    fn bracket(&self, ctx: &dyn TwistedDerivation, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly>;
    /// The twist on coefficients, so that `α(a·Δ) = twist(a)·Δ`.
    fn twist(&self, ctx: &dyn TwistedDerivation, a: &LaurentPoly) -> Result<LaurentPoly>;
}

pub struct GeneralRule;

impl BracketRule for GeneralRule {
    fn name(&self) -> &'static str {
        "general"
    }

    fn summary(&self) -> &'static str {
        "quasi-Lie bracket for invertible tau, twisted by sigma∘tau^-1 + delta"
    }

    fn admissible(&self, ctx: &dyn TwistedDerivation) -> Result<()> {
        ctx.tau().invert().map(|_| ())
    }

    fn bracket(&self, ctx: &dyn TwistedDerivation, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        bracket_general(ctx, a, b)
    }

    fn twist(&self, ctx: &dyn TwistedDerivation, a: &LaurentPoly) -> Result<LaurentPoly> {
        let delta = ctx.delta().ok_or_else(|| Error::NotInvertible(ctx.tau().to_string()))?;
        Ok(ctx.theta()?.apply(a) + delta * a)
    }
}

pub struct ForcedRule(pub ForcedSide);

impl BracketRule for ForcedRule {
    fn name(&self) -> &'static str {
        match self.0 {
            ForcedSide::Sigma => "forced-sigma",
            ForcedSide::Tau => "forced-tau",
        }
    }

    fn summary(&self) -> &'static str {
        match self.0 {
            ForcedSide::Sigma => "Hom-Lie bracket sigma(a)D(b) - sigma(b)D(a), twisted by sigma + tau",
            ForcedSide::Tau => "Hom-Lie bracket tau(a)D(b) - tau(b)D(a), twisted by sigma + tau",
        }
    }

    fn admissible(&self, ctx: &dyn TwistedDerivation) -> Result<()> {
        check_forced_conditions(ctx, CONDITION_WINDOW).into_result().map(|_| ())
    }

    fn bracket(&self, ctx: &dyn TwistedDerivation, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        bracket_forced_unchecked(ctx, a, b, self.0)
    }

    fn twist(&self, ctx: &dyn TwistedDerivation, a: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(ctx.sigma().apply(a) + ctx.tau().apply(a))
    }
}

/// Bracket rules selectable by name.
pub struct BracketRegistry {
    rules: BTreeMap<&'static str, Box<dyn BracketRule>>,
}

impl BracketRegistry {
    pub fn empty() -> Self {
        Self { rules: BTreeMap::new() }
    }

    pub fn register(&mut self, rule: Box<dyn BracketRule>) {
        self.rules.insert(rule.name(), rule);
    }

    pub fn get(&self, name: &str) -> Option<&dyn BracketRule> {
        self.rules.get(name).map(|r| r.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.rules.keys().copied().collect()
    }
}

impl Default for BracketRegistry {
    fn default() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(GeneralRule));
        reg.register(Box::new(ForcedRule(ForcedSide::Sigma)));
        reg.register(Box::new(ForcedRule(ForcedSide::Tau)));
        reg
    }
}

/// The algebra spanned by `d_n = -t^n·Δ` under a bracket rule, in the `d`-basis.
pub fn algebra_from_context(
    name: &str,
    ctx: std::sync::Arc<dyn TwistedDerivation>,
    rule: std::sync::Arc<dyn BracketRule>,
) -> Result<GradedAlgebra> {
    rule.admissible(ctx.as_ref())?;
    let d = |g: &Gen| -> Result<LaurentPoly> {
        match g {
            Gen::D(n) => Ok(-LaurentPoly::t_pow(*n)),
            other => Err(Error::Unsupported(format!("{other} is not a d-generator"))),
        }
    };
    let (c1, r1) = (ctx.clone(), rule.clone());
    let (c2, r2) = (ctx.clone(), rule.clone());
    Ok(GradedAlgebra::new(
        name.to_string(),
        BasisKind::Graded,
        move |x, y| Ok(to_d_basis(&r1.bracket(c1.as_ref(), &d(x)?, &d(y)?)?)),
        move |x| Ok(to_d_basis(&r2.twist(c2.as_ref(), &d(x)?)?)),
    )
    .with_provenance(format!("{} bracket on {}", rule.name(), ctx.describe())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::make_context;
    use crate::scalar::{pq_number, Scalar};

    fn t(k: i64) -> LaurentPoly {
        LaurentPoly::t_pow(k)
    }

    #[test]
    fn general_bracket_on_monomials() {
        let ctx = make_context(Endo::dilation(Scalar::p()), Endo::dilation(Scalar::q()), None).unwrap();
        let (a, b) = (-t(2), -t(1));
        let c = bracket_general(&ctx, &a, &b).unwrap();
        // [d_2, d_1] = (q/p^2) d_3
        assert_eq!(c, -LaurentPoly::monomial(Scalar::monomial(1, -2, 1), 3));
        assert!(bracket_general(&ctx, &a, &a).unwrap().is_zero());
        let oracle = bracket_general_operator_oracle(&ctx, &a, &b).unwrap();
        for j in -6..=6 {
            let f = t(j);
            assert_eq!(oracle.apply(&f).unwrap(), &c * &ctx.apply(&f).unwrap());
        }
        assert!(oracle.apply(&LaurentPoly::one()).unwrap().is_zero());
    }

    #[test]
    fn forced_bracket_forms() {
        let ctx = make_context(Endo::dilation(Scalar::p()), Endo::dilation(Scalar::q()), None).unwrap();
        let (a, b) = (-t(2), -t(1));
        let s = bracket_forced(&ctx, &a, &b, ForcedSide::Sigma).unwrap();
        let u = bracket_forced(&ctx, &a, &b, ForcedSide::Tau).unwrap();
        assert_eq!(s, u);
        let expect = Scalar::q() * pq_number(2) - Scalar::q().pow(2).unwrap() * pq_number(1);
        assert_eq!(s, -LaurentPoly::monomial(expect, 3));
    }

    #[test]
    fn d_basis_round_trip() {
        let c = LaurentPoly::monomial(Scalar::p(), 3) - t(-1);
        assert_eq!(from_d_basis(&to_d_basis(&c)).unwrap(), c);
        assert_eq!(to_d_basis(&-t(4)), Combination::basis(Gen::D(4)));
    }

    #[test]
    fn registry_lists_rules() {
        let reg = BracketRegistry::default();
        assert_eq!(reg.names(), vec!["forced-sigma", "forced-tau", "general"]);
        assert!(reg.get("general").is_some());
        assert!(reg.get("other").is_none());
    }
}
