//! `(τ, σ)`-derivations of `A = Q(p, q)[t, t⁻¹]`.
//!
//! For `τ ≠ σ` the module of `(τ, σ)`-derivations is free of rank one with
//! generator `Δ = (τ - σ)/g`, where `g` is a gcd of the image `(τ - σ)(A)`.
//! [`DerivationContext`] stores that data; [`SigmaSigmaContext`] covers the
//! degenerate case `τ = σ` where the generator is a dilated ordinary derivative.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{gcd_up_to_unit, Endo, LaurentPoly};
use crate::scalar::Scalar;

/// Default exponent window used to approximate `gcd((τ - σ)(A))`.
pub const DEFAULT_GCD_WINDOW: i64 = 8;

/// Something that acts linearly on `A`.
pub trait LinearOp: Send + Sync {
    fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly>;
}

/// A linear operator given by a closure.
pub struct FnOp<F>(pub F);

impl<F> LinearOp for FnOp<F>
where
    F: Fn(&LaurentPoly) -> Result<LaurentPoly> + Send + Sync,
{
    fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        (self.0)(f)
    }
}

/// Extends a map on monomials linearly to all of `A`.
pub fn linear_on_monomials<F>(f: &LaurentPoly, image: F) -> Result<LaurentPoly>
where
    F: Fn(i64) -> Result<LaurentPoly>,
{
    let mut out = LaurentPoly::zero();
    for (n, c) in f.terms() {
        out = out + image(n)?.scale(c);
    }
    Ok(out)
}

/// A twisted derivation generating its module of `(τ, σ)`-derivations.
pub trait TwistedDerivation: Send + Sync {
    fn tau(&self) -> &Endo;
    fn sigma(&self) -> &Endo;
    /// The generator applied to `f`.
    fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly>;
    /// The element `δ` with `Δ∘τ⁻¹∘σ∘τ⁻¹ = δ·(σ∘τ⁻¹∘Δ∘τ⁻¹)`, when `τ` is invertible.
    fn delta(&self) -> Option<&LaurentPoly>;
    fn describe(&self) -> String;

    /// The element `g` with `Δ = (τ - σ)/g`, when there is one.
    fn generator_gcd(&self) -> Option<&LaurentPoly> {
        None
    }

    /// `στ⁻¹`, the endomorphism twisting the first bracket argument.
    fn theta(&self) -> Result<Endo> {
        Ok(self.sigma().compose(&self.tau().invert()?))
    }

    /// `δ` as a scalar when it is constant.
    fn delta_scalar(&self) -> Option<Scalar> {
        self.delta().and_then(LaurentPoly::as_scalar)
    }
}

/// The context `(τ, σ, g)` with generator `Δ = (τ - σ)/g`.
#[derive(Clone)]
pub struct DerivationContext {
    tau: Endo,
    sigma: Endo,
    g: LaurentPoly,
    delta: Option<LaurentPoly>,
    window: i64,
    window_gcd: LaurentPoly,
    override_agrees: Option<bool>,
}

fn image_window(tau: &Endo, sigma: &Endo, n: i64) -> Vec<LaurentPoly> {
    let mut order: Vec<i64> = (-n..=n).collect();
    order.sort_by_key(|k| (k.abs(), *k));
    order
        .into_iter()
        .map(|k| tau.apply_monomial(k) - sigma.apply_monomial(k))
        .collect()
}

/// Chooses the `t`-shift of a gcd so that `στ⁻¹(g)/g` is a constant whenever
/// some associate of `g` has that property.
fn recenter(g: LaurentPoly, theta: &Endo) -> LaurentPoly {
    let Ok(ratio) = theta.apply(&g).exact_div(&g) else {
        return g;
    };
    let Some((_, e)) = ratio.as_monomial() else {
        return g;
    };
    // θ(t^s g)/(t^s g) picks up t^(s(k-1)), so s(k-1) + e = 0 fixes the shift.
    let k1 = theta.k - 1;
    if e == 0 || k1 == 0 || e % k1 != 0 {
        return g;
    }
    g.shift(-e / k1)
}

/// Builds the context for `τ ≠ σ` with the default window.
pub fn make_context(tau: Endo, sigma: Endo, override_g: Option<LaurentPoly>) -> Result<DerivationContext> {
    make_context_with_window(tau, sigma, override_g, DEFAULT_GCD_WINDOW)
}

/// Builds the context, computing `g` over exponents `[-n, n]` and validating it on `[-2n, 2n]`.
pub fn make_context_with_window(
    tau: Endo,
    sigma: Endo,
    override_g: Option<LaurentPoly>,
    n: i64,
) -> Result<DerivationContext> {
    if tau == sigma {
        return Err(Error::EqualMorphisms);
    }
    let window_gcd = gcd_up_to_unit(&image_window(&tau, &sigma, n))?;
    let theta = tau.invert().ok().map(|ti| sigma.compose(&ti));
    let (g, override_agrees) = match override_g {
        Some(g) => {
            if g.is_zero() {
                return Err(Error::InvalidGcd { g: g.to_string(), reason: "zero".into() });
            }
            let agrees = window_gcd.exact_div(&g).is_ok_and(|u| u.is_unit());
            (g, Some(agrees))
        }
        None => {
            let g = match &theta {
                Some(th) => recenter(window_gcd.clone(), th),
                None => window_gcd.clone(),
            };
            (g, None)
        }
    };
    for (k, img) in (-2 * n..=2 * n).zip(image_window_plain(&tau, &sigma, 2 * n)) {
        if !img.divisible_by(&g) {
            return Err(Error::InvalidGcd {
                g: g.to_string(),
                reason: format!("does not divide (tau - sigma)(t^{k}) = {img}"),
            });
        }
    }
    let delta = match &theta {
        Some(th) => Some(th.apply(&g).exact_div(&g).map_err(|_| Error::InvalidGcd {
            g: g.to_string(),
            reason: "does not divide its image under sigma∘tau^-1".into(),
        })?),
        None => None,
    };
    Ok(DerivationContext { tau, sigma, g, delta, window: n, window_gcd, override_agrees })
}

fn image_window_plain(tau: &Endo, sigma: &Endo, n: i64) -> Vec<LaurentPoly> {
    (-n..=n)
        .map(|k| tau.apply_monomial(k) - sigma.apply_monomial(k))
        .collect()
}

impl DerivationContext {
    pub fn g(&self) -> &LaurentPoly {
        &self.g
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// The gcd computed over the window, before any override or re-centering.
    pub fn window_gcd(&self) -> &LaurentPoly {
        &self.window_gcd
    }

    /// `Some(agrees)` when `g` was supplied by the caller.
    pub fn override_agrees(&self) -> Option<bool> {
        self.override_agrees
    }

    /// The element `a·Δ`.
    pub fn element(&self, coeff: LaurentPoly) -> DerivationElement<'_> {
        DerivationElement { coeff, ctx: self }
    }
}

impl TwistedDerivation for DerivationContext {
    fn tau(&self) -> &Endo {
        &self.tau
    }

    fn sigma(&self) -> &Endo {
        &self.sigma
    }

    fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        (self.tau.apply(f) - self.sigma.apply(f)).exact_div(&self.g)
    }

    fn delta(&self) -> Option<&LaurentPoly> {
        self.delta.as_ref()
    }

    fn describe(&self) -> String {
        format!("tau: t -> {}, sigma: t -> {}, g = {}", self.tau, self.sigma, self.g)
    }

    fn generator_gcd(&self) -> Option<&LaurentPoly> {
        Some(&self.g)
    }
}

impl fmt::Debug for DerivationContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// The degenerate context `τ = σ = (t ↦ p t)` with generator `u·∂`,
/// where `∂(t^n) = n p^(n-1) t^(n-1)`.
#[derive(Clone)]
pub struct SigmaSigmaContext {
    sigma: Endo,
    p: Scalar,
    u: LaurentPoly,
    delta: LaurentPoly,
}

/// The `(σ, σ)` context for the dilatation `t ↦ p t` and generator `u·∂`.
pub fn make_sigma_sigma_context(p: Scalar, u: LaurentPoly) -> Result<SigmaSigmaContext> {
    if u.is_zero() {
        return Err(Error::NotAUnit(u.to_string()));
    }
    if p.is_zero() {
        return Err(Error::NotInvertible("0*t".into()));
    }
    Ok(SigmaSigmaContext {
        sigma: Endo::dilation(p.clone()),
        p,
        u,
        // στ⁻¹ is the identity, so the bracket's δ is 1.
        delta: LaurentPoly::one(),
    })
}

impl SigmaSigmaContext {
    /// `∂(t^n) = n p^(n-1) t^(n-1)`, the Leibniz extension of `t ↦ 1`.
    pub fn partial(&self, f: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (n, c) in f.terms() {
            if n != 0 {
                let k = Scalar::from_int(n) * self.p.pow(n - 1).expect("p is nonzero");
                out = out + LaurentPoly::monomial(c * &k, n - 1);
            }
        }
        out
    }

    pub fn u(&self) -> &LaurentPoly {
        &self.u
    }

    pub fn p(&self) -> &Scalar {
        &self.p
    }
}

impl TwistedDerivation for SigmaSigmaContext {
    fn tau(&self) -> &Endo {
        &self.sigma
    }

    fn sigma(&self) -> &Endo {
        &self.sigma
    }

    fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(&self.u * &self.partial(f))
    }

    fn delta(&self) -> Option<&LaurentPoly> {
        Some(&self.delta)
    }

    fn describe(&self) -> String {
        format!("tau = sigma: t -> {}, generator ({})*d/dt", self.sigma, self.u)
    }
}

/// An element `a·Δ` of the derivation module.
pub struct DerivationElement<'a> {
    pub coeff: LaurentPoly,
    pub ctx: &'a dyn TwistedDerivation,
}

impl<'a> DerivationElement<'a> {
    pub fn new(coeff: LaurentPoly, ctx: &'a dyn TwistedDerivation) -> Self {
        Self { coeff, ctx }
    }
}

impl LinearOp for DerivationElement<'_> {
    fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(&self.coeff * &self.ctx.apply(f)?)
    }
}

/// First failing pair of a Leibniz check, with both sides of the identity.
#[derive(Debug, Clone)]
pub struct LeibnizFailure {
    pub f: LaurentPoly,
    pub g: LaurentPoly,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

#[derive(Debug, Clone)]
pub struct LeibnizReport {
    pub checked: usize,
    pub failure: Option<LeibnizFailure>,
}

impl LeibnizReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `D(fg) = D(f)τ(g) + σ(f)D(g)` on every pair of the corpus.
pub fn verify_leibniz(
    op: &dyn LinearOp,
    tau: &Endo,
    sigma: &Endo,
    corpus: &[(LaurentPoly, LaurentPoly)],
) -> Result<LeibnizReport> {
    for (idx, (f, g)) in corpus.iter().enumerate() {
        let lhs = op.apply(&(f * g))?;
        let rhs = op.apply(f)? * tau.apply(g) + sigma.apply(f) * op.apply(g)?;
        if lhs != rhs {
            let failure = LeibnizFailure { f: f.clone(), g: g.clone(), lhs, rhs };
            return Ok(LeibnizReport { checked: idx + 1, failure: Some(failure) });
        }
    }
    Ok(LeibnizReport { checked: corpus.len(), failure: None })
}

/// All pairs `(t^n, t^m)` with `n, m ∈ [-w, w]`.
pub fn monomial_pairs(w: i64) -> Vec<(LaurentPoly, LaurentPoly)> {
    let mut out = Vec::new();
    for n in -w..=w {
        for m in -w..=w {
            out.push((LaurentPoly::t_pow(n), LaurentPoly::t_pow(m)));
        }
    }
    out
}

/// The operator `D∘D' - D'∘D`.
pub struct Commutator<'a> {
    pub d1: &'a dyn LinearOp,
    pub d2: &'a dyn LinearOp,
}

impl LinearOp for Commutator<'_> {
    fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        let a = self.d1.apply(&self.d2.apply(f)?)?;
        let b = self.d2.apply(&self.d1.apply(f)?)?;
        Ok(a - b)
    }
}

/// Result of [`commutator_derivation`]: the twisting pair and the Leibniz check.
pub struct CommutatorReport<'a> {
    pub op: Commutator<'a>,
    pub tau: Endo,
    pub sigma: Endo,
    pub leibniz: LeibnizReport,
}

fn commutes_on(
    corpus: &[LaurentPoly],
    a: impl Fn(&LaurentPoly) -> Result<LaurentPoly>,
    b: impl Fn(&LaurentPoly) -> Result<LaurentPoly>,
) -> Result<Option<LaurentPoly>> {
    for f in corpus {
        if a(&b(f)?)? != b(&a(f)?)? {
            return Ok(Some(f.clone()));
        }
    }
    Ok(None)
}

/// The commutator of a `(τ, σ)`-derivation and a `(τ', σ')`-derivation, which is a
/// `(ττ', σσ')`-derivation provided the twisting maps commute pairwise and each
/// derivation commutes with the other's twisting maps. Those hypotheses are
/// checked on the monomials of `[-w, w]`, then the conclusion is checked on all
/// monomial pairs of the same window.
pub fn commutator_derivation<'a>(
    d1: &'a DerivationElement<'a>,
    d2: &'a DerivationElement<'a>,
    w: i64,
) -> Result<CommutatorReport<'a>> {
    let (t1, s1) = (d1.ctx.tau(), d1.ctx.sigma());
    let (t2, s2) = (d2.ctx.tau(), d2.ctx.sigma());
    let corpus: Vec<LaurentPoly> = (-w..=w).map(LaurentPoly::t_pow).collect();
    let endo = |e: &Endo| {
        let e = e.clone();
        move |f: &LaurentPoly| Ok(e.apply(f))
    };
    let checks: [(&str, Option<LaurentPoly>); 6] = [
        ("tau commutes with tau'", commutes_on(&corpus, endo(t1), endo(t2))?),
        ("sigma commutes with sigma'", commutes_on(&corpus, endo(s1), endo(s2))?),
        ("D commutes with tau'", commutes_on(&corpus, |f| d1.apply(f), endo(t2))?),
        ("D commutes with sigma'", commutes_on(&corpus, |f| d1.apply(f), endo(s2))?),
        ("D' commutes with tau", commutes_on(&corpus, |f| d2.apply(f), endo(t1))?),
        ("D' commutes with sigma", commutes_on(&corpus, |f| d2.apply(f), endo(s1))?),
    ];
    for (name, bad) in checks {
        if let Some(f) = bad {
            return Err(Error::HypothesisViolated { hypothesis: name.into(), witness: f.to_string() });
        }
    }
    let tau = t1.compose(t2);
    let sigma = s1.compose(s2);
    let op = Commutator { d1, d2 };
    let leibniz = verify_leibniz(&op, &tau, &sigma, &monomial_pairs(w))?;
    Ok(CommutatorReport { op, tau, sigma, leibniz })
}

/// Data recorded when the generator is rescaled by a unit.
#[derive(Debug, Clone)]
pub struct BaseChangeCertificate {
    pub u: LaurentPoly,
    pub theta_u: LaurentPoly,
    /// Pairs `(n, m)` of the window where `u·[x, y]' = στ⁻¹(u)·[x, y]` was checked.
    pub checked: usize,
    /// First pair where that relation fails, if any.
    pub failure: Option<(i64, i64)>,
    /// Whether the relation with the two scalings exchanged also holds on the window.
    pub exchanged_orientation_holds: bool,
}

/// Replaces `g` by `u·g` (so `Δ' = Δ/u` and `δ' = (στ⁻¹(u)/u)·δ`) and certifies
/// the relation between the two brackets on monomials of `[-w, w]`.
pub fn rescale_generator(
    ctx: &DerivationContext,
    u: &LaurentPoly,
    w: i64,
) -> Result<(DerivationContext, BaseChangeCertificate)> {
    if !u.is_unit() {
        return Err(Error::NotAUnit(u.to_string()));
    }
    let theta = ctx.theta()?;
    let theta_u = theta.apply(u);
    let g2 = u * &ctx.g;
    let delta = match &ctx.delta {
        Some(d) => Some((&theta_u * d).exact_div(u)?),
        None => None,
    };
    let new_ctx = DerivationContext {
        tau: ctx.tau.clone(),
        sigma: ctx.sigma.clone(),
        g: g2,
        delta,
        window: ctx.window,
        window_gcd: ctx.window_gcd.clone(),
        override_agrees: Some(ctx.window_gcd.exact_div(&(u * &ctx.g)).is_ok_and(|v| v.is_unit())),
    };
    // An operator x = a·Δ has coefficient a·u with respect to Δ'.
    let mut failure = None;
    let mut exchanged = true;
    let mut checked = 0;
    for n in -w..=w {
        for m in -w..=w {
            let a = LaurentPoly::t_pow(n);
            let b = LaurentPoly::t_pow(m);
            let old = crate::bracket::bracket_general(ctx, &a, &b)?;
            let new = crate::bracket::bracket_general(&new_ctx, &(&a * u), &(&b * u))?;
            // [x, y]' = new·Δ' = (new/u)·Δ, so u·[x, y]' has Δ-coefficient `new`.
            let lhs = new.clone();
            let rhs = &theta_u * &old;
            checked += 1;
            if lhs != rhs && failure.is_none() {
                failure = Some((n, m));
            }
            // Exchanged scalings: στ⁻¹(u)·[x, y]' = u·[x, y].
            if (&theta_u * &new).exact_div(u)? != u * &old {
                exchanged = false;
            }
        }
    }
    let cert = BaseChangeCertificate {
        u: u.clone(),
        theta_u,
        checked,
        failure,
        exchanged_orientation_holds: exchanged,
    };
    Ok((new_ctx, cert))
}

/// Extends `t ↦ h` to `t^n` by the `(τ, σ)`-Leibniz rule, with `D(1) = 0`.
pub fn leibniz_extension(h: &LaurentPoly, tau: &Endo, sigma: &Endo, n: i64) -> Result<LaurentPoly> {
    let t = LaurentPoly::t_pow(1);
    let tinv = LaurentPoly::t_pow(-1);
    // D(t⁻¹) from 0 = D(t·t⁻¹) = D(t)τ(t⁻¹) + σ(t)D(t⁻¹).
    let d_inv = -(h * &tau.apply(&tinv)).exact_div(&sigma.apply(&t))?;
    let (step, dstep, gen) = if n >= 0 { (t, h.clone(), 1) } else { (tinv, d_inv, -1) };
    let mut acc = LaurentPoly::zero();
    let mut k = 0;
    while k != n {
        // D(s·t^k) = D(s)τ(t^k) + σ(s)D(t^k)
        let tk = LaurentPoly::t_pow(k);
        acc = &dstep * &tau.apply(&tk) + sigma.apply(&step) * &acc;
        k += gen;
    }
    Ok(acc)
}

/// Checks `Δ∘τ⁻¹∘σ∘τ⁻¹ = δ·(σ∘τ⁻¹∘Δ∘τ⁻¹)` on `t^n`, `n ∈ [-w, w]`; returns the first failing `n`.
pub fn check_delta_identity(ctx: &dyn TwistedDerivation, w: i64) -> Result<Option<i64>> {
    let tinv = ctx.tau().invert()?;
    let theta = ctx.theta()?;
    let delta = ctx.delta().ok_or(Error::NotInvertible(ctx.tau().to_string()))?;
    for n in -w..=w {
        let f = LaurentPoly::t_pow(n);
        let lhs = ctx.apply(&tinv.apply(&theta.apply(&f)))?;
        let rhs = delta * &theta.apply(&ctx.apply(&tinv.apply(&f))?);
        if lhs != rhs {
            return Ok(Some(n));
        }
    }
    Ok(None)
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
    fn t(k: i64) -> LaurentPoly {
        LaurentPoly::t_pow(k)
    }
    fn pq_ctx() -> DerivationContext {
        make_context(Endo::dilation(p()), Endo::dilation(q()), None).unwrap()
    }

    #[test]
    fn witt_context() {
        let ctx = pq_ctx();
        assert_eq!(ctx.g(), &LaurentPoly::constant(p() - q()));
        assert_eq!(ctx.delta_scalar(), Some(Scalar::one()));
        let d3 = ctx.apply(&t(3)).unwrap();
        assert_eq!(d3, LaurentPoly::monomial(p() * p() + p() * q() + q() * q(), 3));
        assert!(ctx.apply(&LaurentPoly::one()).unwrap().is_zero());
    }

    #[test]
    fn override_generator() {
        let g = LaurentPoly::monomial(p() - q(), 1);
        let ctx = make_context(Endo::dilation(p()), Endo::dilation(q()), Some(g)).unwrap();
        assert_eq!(ctx.delta_scalar(), Some(&q() / &p()));
        assert_eq!(ctx.override_agrees(), Some(true));
        let d3 = ctx.apply(&t(3)).unwrap();
        assert_eq!(d3, LaurentPoly::monomial(p() * p() + p() * q() + q() * q(), 2));
    }

    #[test]
    fn inversion_context() {
        let tau = Endo::new(Scalar::one(), -1).unwrap();
        let ctx = make_context(tau, Endo::dilation(q()), None).unwrap();
        assert_eq!(ctx.g(), &(t(-1) - LaurentPoly::monomial(q(), 1)));
        assert_eq!(ctx.delta_scalar(), Some(Scalar::from_int(-1)));
    }

    #[test]
    fn context_errors() {
        assert!(matches!(
            make_context(Endo::dilation(p()), Endo::dilation(p()), None),
            Err(Error::EqualMorphisms)
        ));
        let bad = t(1) + t(0);
        assert!(matches!(
            make_context(Endo::dilation(p()), Endo::dilation(q()), Some(bad)),
            Err(Error::InvalidGcd { .. })
        ));
    }

    #[test]
    fn leibniz_examples() {
        let ctx = pq_ctx();
        let d = ctx.element(LaurentPoly::one());
        let (tau, sigma) = (ctx.tau().clone(), ctx.sigma().clone());
        let r = verify_leibniz(&d, &tau, &sigma, &[(t(2), t(3))]).unwrap();
        assert!(r.passed());
        let zero = ctx.element(LaurentPoly::zero());
        assert!(verify_leibniz(&zero, &tau, &sigma, &monomial_pairs(2)).unwrap().passed());
        let corrupt = FnOp(|f: &LaurentPoly| {
            linear_on_monomials(f, |n| Ok(LaurentPoly::monomial(Scalar::from_int(n), n)))
        });
        let r = verify_leibniz(&corrupt, &tau, &sigma, &[(t(1), t(1))]).unwrap();
        let fail = r.failure.expect("corrupted map must fail");
        assert_eq!(fail.lhs, LaurentPoly::monomial(Scalar::from_int(2), 2));
        assert_eq!(fail.rhs, LaurentPoly::monomial(p() + q(), 2));
    }

    #[test]
    fn sigma_sigma_generator() {
        let ctx = make_sigma_sigma_context(p(), LaurentPoly::one()).unwrap();
        assert_eq!(ctx.apply(&t(3)).unwrap(), LaurentPoly::monomial(Scalar::monomial(3, 2, 0), 2));
        let d = DerivationElement::new(LaurentPoly::one(), &ctx);
        let r = verify_leibniz(&d, ctx.tau(), ctx.sigma(), &monomial_pairs(4)).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn rescale_by_t() {
        let ctx = pq_ctx();
        let (new, cert) = rescale_generator(&ctx, &t(1), 3).unwrap();
        assert_eq!(new.g(), &LaurentPoly::monomial(p() - q(), 1));
        assert_eq!(new.delta_scalar(), Some(&q() / &p()));
        assert!(cert.failure.is_none());
        let (same, _) = rescale_generator(&ctx, &LaurentPoly::one(), 2).unwrap();
        assert_eq!(same.g(), ctx.g());
        let (two, _) = rescale_generator(&ctx, &LaurentPoly::constant(Scalar::from_int(2)), 2).unwrap();
        assert_eq!(two.delta(), ctx.delta());
        assert!(matches!(
            rescale_generator(&ctx, &(t(1) + t(0)), 1),
            Err(Error::NotAUnit(_))
        ));
    }

    #[test]
    fn commutator_hypotheses() {
        let c1 = pq_ctx();
        let c2 = make_context(Endo::dilation(q()), Endo::identity(), None).unwrap();
        let d1 = c1.element(LaurentPoly::one());
        let d2 = c2.element(LaurentPoly::one());
        let rep = commutator_derivation(&d1, &d2, 3).unwrap();
        assert!(rep.leibniz.passed());
        assert_eq!(rep.tau, Endo::dilation(p() * q()));

        let c3 = make_context(Endo::new(Scalar::one(), -1).unwrap(), Endo::dilation(q()), None).unwrap();
        let d3 = c3.element(LaurentPoly::one());
        assert!(matches!(
            commutator_derivation(&d3, &d1, 3),
            Err(Error::HypothesisViolated { .. })
        ));
    }
}
