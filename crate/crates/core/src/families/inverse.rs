//! The example `τ(t) = t⁻¹`, `σ(t) = qt`, where `g = t⁻¹ - qt` is not a unit.
//!
//! Brackets of `d_n` have coefficients `(q^(-m)·t^(n-m) - q^(-n)·t^(m-n))/g` in `A`;
//! the quotient is a finite geometric sum, so each bracket expands to a finite
//! combination of `d_k` with scalar coefficients.

use std::sync::Arc;

use super::witt::pq;
use super::{d_index, Family};
use crate::bracket::{algebra_from_context, to_d_basis, GeneralRule};
use crate::derivation::{make_context, TwistedDerivation};
use crate::error::Result;
use crate::families::algebra::{BasisKind, Combination, Gen, GradedAlgebra};
use crate::laurent::{Endo, LaurentPoly};
use crate::scalar::Scalar;

/// `(t^(-j) - q^j t^j)/(t⁻¹ - qt) = t^(1-j)·(1 + qt² + ⋯ + (qt²)^(j-1))` for `j > 0`.
pub fn geometric_quotient(j: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..j).map(|i| (2 * i - j + 1, pq(0, i))))
}

/// `(t^k - q^(-k) t^(-k))/(t⁻¹ - qt)`.
fn quotient(k: i64) -> LaurentPoly {
    match k {
        0 => LaurentPoly::zero(),
        k if k < 0 => geometric_quotient(-k),
        k => geometric_quotient(k).scale(&-pq(0, -k)),
    }
}

/// The `Δ`-coefficient of `[d_n, d_m]`, from the geometric-sum identity.
pub fn inverse_bracket_coefficient(n: i64, m: i64) -> LaurentPoly {
    quotient(n - m).scale(&-pq(0, -m))
}

/// The bracket algebra of the `(t⁻¹, qt)` context with twist `α(d_n) = q^(-n) d_(-n) - d_n`.
pub fn inverse_twist_example() -> Result<Family> {
    let tau = Endo::new(Scalar::one(), -1)?;
    let ctx: Arc<dyn TwistedDerivation> = Arc::new(make_context(tau, Endo::dilation(Scalar::q()), None)?);
    let closed = GradedAlgebra::new(
        "inverse",
        BasisKind::Graded,
        |x, y| Ok(to_d_basis(&inverse_bracket_coefficient(d_index(x)?, d_index(y)?))),
        |x| {
            let n = d_index(x)?;
            Ok(Combination::single(Gen::D(-n), pq(0, -n)).sub(&Combination::basis(Gen::D(n))))
        },
    )
    .with_provenance("geometric-sum expansion of the (t^-1, qt) bracket");
    Ok(Family {
        name: "inverse",
        summary: "derivations for tau(t)=t^-1, sigma(t)=qt with g = t^-1 - qt and delta = -1",
        closed,
        derived: Some(algebra_from_context("inverse", ctx.clone(), Arc::new(GeneralRule))?),
        context: Some(ctx),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::algebra::Algebra;

    #[test]
    fn geometric_identity() {
        let g = LaurentPoly::t_pow(-1) - LaurentPoly::monomial(Scalar::q(), 1);
        for j in 1..6 {
            let lhs = LaurentPoly::t_pow(-j) - LaurentPoly::monomial(pq(0, j), j);
            assert_eq!(lhs.exact_div(&g).unwrap(), geometric_quotient(j));
        }
    }

    #[test]
    fn inverse_examples() {
        let fam = inverse_twist_example().unwrap();
        let alpha = fam.closed.twist(&Gen::D(2)).unwrap();
        assert_eq!(alpha, Combination::from_terms([(Gen::D(-2), pq(0, -2)), (Gen::D(2), -Scalar::one())]));
        assert!(fam.closed.bracket(&Gen::D(3), &Gen::D(3)).unwrap().is_zero());
        let b = fam.derived.unwrap().bracket(&Gen::D(2), &Gen::D(0)).unwrap();
        assert_eq!(b, Combination::from_terms([(Gen::D(-1), -pq(0, -2)), (Gen::D(1), -pq(0, -1))]));
    }
}
