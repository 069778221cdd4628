//! The `(p, q)`-Witt family and its degenerations.

use std::sync::Arc;

use super::{graded, Family};
use crate::bracket::{algebra_from_context, BracketRule, ForcedRule, ForcedSide, GeneralRule};
use crate::derivation::{make_context, make_sigma_sigma_context, TwistedDerivation};
use crate::error::Result;
use crate::families::algebra::Combination;
use crate::laurent::{Endo, LaurentPoly};
use crate::scalar::{pq_number, q_number, ratio_qp, Scalar};

/// `p^i q^j`.
pub(crate) fn pq(i: i64, j: i64) -> Scalar {
    Scalar::monomial(1, i, j)
}

/// The context `τ(t) = pt`, `σ(t) = qt` with its computed gcd `p - q`.
pub fn pq_context() -> Result<Arc<dyn TwistedDerivation>> {
    Ok(Arc::new(make_context(Endo::dilation(Scalar::p()), Endo::dilation(Scalar::q()), None)?))
}

/// The `σ`-derivation context `τ = id`, `σ(t) = (q/p)t`, generator `(id - σ)/(1 - q/p)`.
pub fn qp_context() -> Result<Arc<dyn TwistedDerivation>> {
    let r = ratio_qp();
    let g = LaurentPoly::constant(Scalar::one() - r.clone());
    Ok(Arc::new(make_context(Endo::identity(), Endo::dilation(r), Some(g))?))
}

fn general() -> Arc<dyn BracketRule> {
    Arc::new(GeneralRule)
}

/// `[n]/p^n`
fn pq_over_p(n: i64) -> Scalar {
    pq_number(n) * pq(-n, 0)
}

/// `W_{p,q}`: `[d_n, d_m] = ([n]/p^n - [m]/p^m) d_{n+m}`, `α(d_n) = (1 + (q/p)^n) d_n`.
pub fn witt_pq() -> Result<Family> {
    let ctx = pq_context()?;
    let closed = graded("witt", 0, |n, m| pq_over_p(n) - pq_over_p(m), |n| Scalar::one() + pq(-n, n))
        .with_provenance("closed formula of the (p,q)-Witt algebra");
    Ok(Family {
        name: "witt",
        summary: "(p,q)-Witt Hom-Lie algebra from tau(t)=pt, sigma(t)=qt, g=p-q",
        closed,
        derived: Some(algebra_from_context("witt", ctx.clone(), general())?),
        context: Some(ctx),
    })
}

/// `q^m[n] - q^n[m]`
pub fn forced_q_form(n: i64, m: i64) -> Scalar {
    pq(0, m) * pq_number(n) - pq(0, n) * pq_number(m)
}

/// `p^m[n] - p^n[m]`
pub fn forced_p_form(n: i64, m: i64) -> Scalar {
    pq(m, 0) * pq_number(n) - pq(n, 0) * pq_number(m)
}

/// `W_{p,q}` with the forced bracket `[d_n, d_m]' = (q^m[n] - q^n[m]) d_{n+m}`, `α'(d_n) = (p^n + q^n) d_n`.
pub fn witt_pq_forced() -> Result<Family> {
    let ctx = pq_context()?;
    let closed = graded("witt-forced", 0, forced_q_form, |n| pq(n, 0) + pq(0, n))
        .with_provenance("closed formula of the forced (p,q)-Witt bracket");
    let rule: Arc<dyn BracketRule> = Arc::new(ForcedRule(ForcedSide::Sigma));
    Ok(Family {
        name: "witt-forced",
        summary: "(p,q)-Witt Hom-Lie algebra with the forced bracket and twist sigma+tau",
        closed,
        derived: Some(algebra_from_context("witt-forced", ctx.clone(), rule)?),
        context: Some(ctx),
    })
}

/// `W_{q/p}`: `[d_n, d_m] = ({n} - {m}) d_{n+m}` with `{n} = {n}_{q/p}`, `α(d_n) = (1 + (q/p)^n) d_n`.
pub fn witt_qp() -> Result<Family> {
    let ctx = qp_context()?;
    let closed = graded("witt-qp", 0, |n, m| q_number(n) - q_number(m), |n| Scalar::one() + pq(-n, n))
        .with_provenance("closed formula of the q-Witt algebra at q/p");
    Ok(Family {
        name: "witt-qp",
        summary: "q-deformed Witt Hom-Lie algebra with deformation parameter q/p",
        closed,
        derived: Some(algebra_from_context("witt-qp", ctx.clone(), general())?),
        context: Some(ctx),
    })
}

/// Which generator of the `(σ, σ)`-derivations to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaSigmaChoice {
    /// `∂`, giving `[d_n, d_m] = (n - m)/p · d_{n+m-1}`.
    Partial,
    /// `t∂`, giving `[d_n, d_m] = (n - m)/p · d_{n+m}`.
    TPartial,
}

fn identity_twist(x: &crate::families::algebra::Gen) -> Result<Combination> {
    Ok(Combination::basis(*x))
}

fn sigma_sigma_family(
    name: &'static str,
    summary: &'static str,
    p: Scalar,
    choice: SigmaSigmaChoice,
) -> Result<Family> {
    let (u, shift) = match choice {
        SigmaSigmaChoice::Partial => (LaurentPoly::one(), -1),
        SigmaSigmaChoice::TPartial => (LaurentPoly::t_pow(1), 0),
    };
    let ctx: Arc<dyn TwistedDerivation> = Arc::new(make_sigma_sigma_context(p.clone(), u)?);
    let pinv = p.inv()?;
    let closed = graded(name, shift, move |n, m| Scalar::from_int(n - m) * pinv.clone(), |_| Scalar::one())
        .with_provenance("closed formula of the (sigma,sigma) Witt algebra");
    // The context twist is 2·id; a Lie algebra is recorded with the identity.
    let derived = algebra_from_context(name, ctx.clone(), general())?.with_twist(identity_twist);
    Ok(Family { name, summary, closed, derived: Some(derived), context: Some(ctx) })
}

/// `W_{p,p}` from `τ = σ = (t ↦ pt)`, a Lie algebra.
pub fn sigma_sigma_witt(choice: SigmaSigmaChoice) -> Result<Family> {
    match choice {
        SigmaSigmaChoice::TPartial => sigma_sigma_family(
            "witt-pp",
            "W_{p,p} from the (sigma,sigma)-derivation t*d/dt, [d_n,d_m] = (n-m)/p d_{n+m}",
            Scalar::p(),
            choice,
        ),
        SigmaSigmaChoice::Partial => sigma_sigma_family(
            "witt-pp-partial",
            "W_{p,p} from the (sigma,sigma)-derivation d/dt, [d_n,d_m] = (n-m)/p d_{n+m-1}",
            Scalar::p(),
            choice,
        ),
    }
}

/// The classical Witt algebra `[d_n, d_m] = (n - m) d_{n+m}`.
pub fn witt_classical() -> Result<Family> {
    sigma_sigma_family(
        "witt-classical",
        "classical Witt Lie algebra, [d_n,d_m] = (n-m) d_{n+m}",
        Scalar::one(),
        SigmaSigmaChoice::TPartial,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::algebra::{Algebra, Gen};

    fn d(n: i64) -> Gen {
        Gen::D(n)
    }

    #[test]
    fn witt_examples() {
        let w = witt_pq().unwrap();
        for alg in [&w.closed, w.derived.as_ref().unwrap()] {
            assert_eq!(alg.bracket(&d(1), &d(0)).unwrap(), Combination::single(d(1), pq(-1, 0)));
            assert_eq!(alg.bracket(&d(2), &d(1)).unwrap(), Combination::single(d(3), pq(-2, 1)));
            assert!(alg.bracket(&d(4), &d(4)).unwrap().is_zero());
        }
    }

    #[test]
    fn forced_examples() {
        let w = witt_pq_forced().unwrap();
        assert_eq!(w.closed.bracket(&d(1), &d(0)).unwrap(), Combination::basis(d(1)));
        assert_eq!(forced_q_form(3, -2), forced_p_form(3, -2));
    }

    #[test]
    fn sigma_sigma_examples() {
        let w = sigma_sigma_witt(SigmaSigmaChoice::Partial).unwrap();
        let b = w.derived.as_ref().unwrap().bracket(&d(2), &d(0)).unwrap();
        assert_eq!(b, Combination::single(d(1), Scalar::from_int(2) * pq(-1, 0)));
        let c = witt_classical().unwrap();
        assert_eq!(c.closed.bracket(&d(3), &d(1)).unwrap(), Combination::single(d(4), Scalar::from_int(2)));
    }
}
