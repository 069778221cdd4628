//! `(p, q)`-deformations of `sl(2)` on the span of `e = ∂`, `f = -t²·∂`, `h = -2t·∂`.

use std::sync::Arc;

use super::witt::pq;
use super::Family;
use crate::bracket::{BracketRule, ForcedRule, ForcedSide, GeneralRule};
use crate::derivation::{make_context, make_sigma_sigma_context, TwistedDerivation};
use crate::error::{Error, Result};
use crate::families::algebra::{BasisKind, Combination, Gen, GradedAlgebra};
use crate::laurent::{Endo, LaurentPoly};
use crate::scalar::{ratio_qp, Scalar};

pub(crate) fn sl2_basis() -> BasisKind {
    BasisKind::Finite(vec![Gen::E, Gen::F, Gen::H])
}

/// Coefficient of a generator with respect to `∂`.
pub fn sl2_coefficient(g: &Gen) -> Result<LaurentPoly> {
    match g {
        Gen::E => Ok(LaurentPoly::one()),
        Gen::F => Ok(-LaurentPoly::t_pow(2)),
        Gen::H => Ok(LaurentPoly::monomial(Scalar::from_int(-2), 1)),
        other => Err(Error::Unsupported(format!("{other} is not an sl(2) generator"))),
    }
}

/// Writes `c·∂` as `x e + y f + z h`; anything outside `span{1, t, t²}` is a closure failure.
pub fn sl2_decompose(c: &LaurentPoly) -> Result<Combination> {
    if let Some((k, _)) = c.terms().find(|(k, _)| !(0..=2).contains(k)) {
        return Err(Error::ClosureResidue(format!("term t^{k} in {c}")));
    }
    Ok(Combination::from_terms([
        (Gen::E, c.coeff(0)),
        (Gen::F, -c.coeff(2)),
        (Gen::H, c.coeff(1) * Scalar::ratio(-1, 2)),
    ]))
}

/// The structure constants `[h, e]`, `[h, f]`, `[e, f]` and twist values of `e, f, h`.
pub struct Sl2Table {
    pub he: Scalar,
    pub hf: Scalar,
    pub ef: Scalar,
    pub te: Scalar,
    pub tf: Scalar,
    pub th: Scalar,
}

/// The algebra `[h, e] = he·e`, `[h, f] = hf·f`, `[e, f] = ef·h`, extended skew-symmetrically.
pub fn sl2_from_table(name: &str, t: Sl2Table) -> GradedAlgebra {
    let Sl2Table { he, hf, ef, te, tf, th } = t;
    GradedAlgebra::new(
        name.to_string(),
        sl2_basis(),
        move |x, y| {
            let (sign, key) = if x <= y { (Scalar::one(), (*x, *y)) } else { (-Scalar::one(), (*y, *x)) };
            // Generators are ordered e < f < h.
            let out = match key {
                (Gen::E, Gen::H) => Combination::single(Gen::E, -he.clone()),
                (Gen::F, Gen::H) => Combination::single(Gen::F, -hf.clone()),
                (Gen::E, Gen::F) => Combination::single(Gen::H, ef.clone()),
                (a, b) if a == b && matches!(a, Gen::E | Gen::F | Gen::H) => Combination::zero(),
                (a, b) => return Err(Error::Unsupported(format!("[{a}, {b}] outside sl(2)"))),
            };
            Ok(out.scale(&sign))
        },
        move |x| match x {
            Gen::E => Ok(Combination::single(Gen::E, te.clone())),
            Gen::F => Ok(Combination::single(Gen::F, tf.clone())),
            Gen::H => Ok(Combination::single(Gen::H, th.clone())),
            other => Err(Error::Unsupported(format!("{other} outside sl(2)"))),
        },
    )
}

/// The span of `e, f, h` under a bracket rule of a context, decomposed back onto `e, f, h`.
pub fn sl2_from_context(
    name: &str,
    ctx: Arc<dyn TwistedDerivation>,
    rule: Arc<dyn BracketRule>,
) -> Result<GradedAlgebra> {
    rule.admissible(ctx.as_ref())?;
    let (c1, r1) = (ctx.clone(), rule.clone());
    let (c2, r2) = (ctx.clone(), rule.clone());
    Ok(GradedAlgebra::new(
        name.to_string(),
        sl2_basis(),
        move |x, y| sl2_decompose(&r1.bracket(c1.as_ref(), &sl2_coefficient(x)?, &sl2_coefficient(y)?)?),
        move |x| sl2_decompose(&r2.twist(c2.as_ref(), &sl2_coefficient(x)?)?),
    )
    .with_provenance(format!("{} bracket on span(e, f, h) for {}", rule.name(), ctx.describe())))
}

/// `sl(2)_{p,q}` from `τ(t) = pt`, `σ(t) = qt` and `∂ = (τ - σ)/(t(p - q))`.
pub fn sl2_pq() -> Result<Family> {
    let g = LaurentPoly::monomial(Scalar::p() - Scalar::q(), 1);
    let ctx: Arc<dyn TwistedDerivation> =
        Arc::new(make_context(Endo::dilation(Scalar::p()), Endo::dilation(Scalar::q()), Some(g))?);
    let r = ratio_qp();
    let closed = sl2_from_table(
        "sl2",
        Sl2Table {
            he: Scalar::from_int(2) * pq(-1, 0),
            hf: Scalar::from_int(-2) * pq(-2, 1),
            ef: (Scalar::p() + Scalar::q()) * Scalar::ratio(1, 2) * pq(-2, 0),
            te: Scalar::one() + r.clone(),
            tf: r.clone() * (Scalar::one() + r.clone()),
            th: Scalar::from_int(2) * r,
        },
    )
    .with_provenance("closed formula of sl(2)_{p,q}");
    Ok(Family {
        name: "sl2",
        summary: "sl(2)_{p,q} on e = d, f = -t^2 d, h = -2t d with d = (tau - sigma)/(t(p-q))",
        closed,
        derived: Some(sl2_from_context("sl2", ctx.clone(), Arc::new(GeneralRule))?),
        context: Some(ctx),
    })
}

/// `sl(2)_{q/p}`: the Jackson `sl(2)_r` at `r = q/p`.
pub fn sl2_qp() -> Result<Family> {
    let r = ratio_qp();
    let g = LaurentPoly::monomial(Scalar::one() - r.clone(), 1);
    let ctx: Arc<dyn TwistedDerivation> = Arc::new(make_context(Endo::identity(), Endo::dilation(r.clone()), Some(g))?);
    let closed = sl2_from_table(
        "sl2-qp",
        Sl2Table {
            he: Scalar::from_int(2),
            hf: Scalar::from_int(-2) * r.clone(),
            ef: (Scalar::one() + r.clone()) * Scalar::ratio(1, 2),
            te: Scalar::one() + r.clone(),
            tf: r.clone() * (Scalar::one() + r.clone()),
            th: Scalar::from_int(2) * r,
        },
    )
    .with_provenance("closed formula of sl(2)_q at q/p");
    Ok(Family {
        name: "sl2-qp",
        summary: "Jackson sl(2)_r Hom-Lie algebra with r = q/p",
        closed,
        derived: Some(sl2_from_context("sl2-qp", ctx.clone(), Arc::new(GeneralRule))?),
        context: Some(ctx),
    })
}

/// The classical `sl(2)`: `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`, twist the identity.
pub fn sl2_classical() -> Result<Family> {
    let ctx: Arc<dyn TwistedDerivation> = Arc::new(make_sigma_sigma_context(Scalar::one(), LaurentPoly::one())?);
    let one = Scalar::one();
    let closed = sl2_from_table(
        "sl2-classical",
        Sl2Table {
            he: Scalar::from_int(2),
            hf: Scalar::from_int(-2),
            ef: one.clone(),
            te: one.clone(),
            tf: one.clone(),
            th: one,
        },
    )
    .with_provenance("classical sl(2)");
    // The context twist is 2·id; a Lie algebra is recorded with the identity.
    let derived = sl2_from_context("sl2-classical", ctx.clone(), Arc::new(GeneralRule))?
        .with_twist(|x| Ok(Combination::basis(*x)));
    Ok(Family {
        name: "sl2-classical",
        summary: "classical sl(2) Lie algebra from the ordinary derivative",
        closed,
        derived: Some(derived),
        context: Some(ctx),
    })
}

/// `sl(2)_{p,p}` with the forced bracket of `τ = σ = (t ↦ pt)`, twist `2σ̄`.
pub fn sl2_pp_forced() -> Result<Family> {
    let ctx: Arc<dyn TwistedDerivation> = Arc::new(make_sigma_sigma_context(Scalar::p(), LaurentPoly::one())?);
    let closed = sl2_from_table(
        "sl2-pp-forced",
        Sl2Table {
            he: Scalar::from_int(2),
            hf: Scalar::from_int(-2) * pq(2, 0),
            ef: Scalar::p(),
            te: Scalar::from_int(2),
            tf: Scalar::from_int(2) * pq(2, 0),
            th: Scalar::from_int(2) * Scalar::p(),
        },
    )
    .with_provenance("closed formula of the forced sl(2)_{p,p}");
    Ok(Family {
        name: "sl2-pp-forced",
        summary: "sl(2)_{p,p} with the forced bracket sigma(a)d(b) - sigma(b)d(a) and twist 2 sigma",
        closed,
        derived: Some(sl2_from_context("sl2-pp-forced", ctx.clone(), Arc::new(ForcedRule(ForcedSide::Sigma)))?),
        context: Some(ctx),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::algebra::Algebra;

    #[test]
    fn sl2_brackets_from_context() {
        let fam = sl2_pq().unwrap();
        let alg = fam.derived.unwrap();
        assert_eq!(
            alg.bracket(&Gen::H, &Gen::E).unwrap(),
            Combination::single(Gen::E, Scalar::from_int(2) * pq(-1, 0))
        );
        let ef = (Scalar::p() + Scalar::q()) * Scalar::ratio(1, 2) * pq(-2, 0);
        assert_eq!(alg.bracket(&Gen::E, &Gen::F).unwrap(), Combination::single(Gen::H, ef));
        assert_eq!(fam.context.unwrap().delta_scalar(), Some(ratio_qp()));
    }

    #[test]
    fn classical_specialization() {
        let alg = sl2_pq().unwrap().closed.substitute("sl2 at 1", Scalar::one(), Scalar::one());
        let classical = sl2_classical().unwrap().closed;
        for x in [Gen::E, Gen::F, Gen::H] {
            for y in [Gen::E, Gen::F, Gen::H] {
                assert_eq!(alg.bracket(&x, &y).unwrap(), classical.bracket(&x, &y).unwrap());
            }
        }
    }

    #[test]
    fn decomposition_rejects_residue() {
        assert!(matches!(sl2_decompose(&LaurentPoly::t_pow(3)), Err(Error::ClosureResidue(_))));
    }
}
