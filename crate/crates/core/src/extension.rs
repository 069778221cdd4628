//! One-dimensional central extensions of Hom-Lie algebras and the `(p, q)`-Virasoro cocycle.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::bracket::{generator_triples, verify_hom_jacobi, JacobiReport};
use crate::error::{Error, Result};
use crate::families::algebra::{Algebra, BasisKind, Combination, Gen};
use crate::families::twist_comb;
use crate::scalar::{pq_number, Scalar};

/// An alternating bilinear form with values in the span of the central element `c`.
pub trait Cocycle: Send + Sync {
    fn name(&self) -> &str;
    fn value(&self, x: &Gen, y: &Gen) -> Result<Scalar>;
}

type CocycleFn = dyn Fn(&Gen, &Gen) -> Result<Scalar> + Send + Sync;

/// A cocycle given by a closure on generators.
#[derive(Clone)]
pub struct FnCocycle {
    name: String,
    f: Arc<CocycleFn>,
}

impl FnCocycle {
    pub fn new(name: impl Into<String>, f: impl Fn(&Gen, &Gen) -> Result<Scalar> + Send + Sync + 'static) -> Self {
        Self { name: name.into(), f: Arc::new(f) }
    }
}

impl Cocycle for FnCocycle {
    fn name(&self) -> &str {
        &self.name
    }

    fn value(&self, x: &Gen, y: &Gen) -> Result<Scalar> {
        (self.f)(x, y)
    }
}

pub fn zero_cocycle() -> FnCocycle {
    FnCocycle::new("zero", |_, _| Ok(Scalar::zero()))
}

/// `[n]/p^n`
fn normalized(n: i64) -> Scalar {
    pq_number(n) * Scalar::monomial(1, -n, 0)
}

/// `(q/p)^(-n) / (6(1 + (q/p)^n)) · [n-1]/p^(n-1) · [n]/p^n · [n+1]/p^(n+1)`.
pub fn virasoro_coefficient(n: i64) -> Scalar {
    let r_n = Scalar::monomial(1, -n, n);
    let prefactor = Scalar::monomial(1, n, -n)
        .checked_div(&((Scalar::one() + r_n) * Scalar::from_int(6)))
        .expect("1 + (q/p)^n is a nonzero rational function");
    prefactor * normalized(n - 1) * normalized(n) * normalized(n + 1)
}

/// The Virasoro coefficient at rational `p0, q0`, refusing points where `1 + (q0/p0)^n = 0`.
pub fn virasoro_coefficient_at(n: i64, p0: &BigRational, q0: &BigRational) -> Result<BigRational> {
    if p0.is_zero() || q0.is_zero() {
        return Err(Error::PoleAtPoint { p: p0.to_string(), q: q0.to_string() });
    }
    let r = q0 / p0;
    let r_n = if n >= 0 { num_traits::pow(r, n as usize) } else { num_traits::pow(r.recip(), (-n) as usize) };
    if (BigRational::from_integer(1.into()) + r_n).is_zero() {
        return Err(Error::PoleAtSpecialization { n });
    }
    virasoro_coefficient(n).specialize(p0, q0)
}

/// `g(d_n, d_m) = δ_{n+m,0} · virasoro_coefficient(n)`.
pub fn virasoro_cocycle() -> FnCocycle {
    FnCocycle::new("virasoro", |x, y| match (x, y) {
        (Gen::D(n), Gen::D(m)) if n + m == 0 => Ok(virasoro_coefficient(*n)),
        _ => Ok(Scalar::zero()),
    })
}

/// Adds `delta` to the single value `g(x, y)`.
pub fn perturbed_cocycle(base: Arc<dyn Cocycle>, x: Gen, y: Gen, delta: Scalar) -> FnCocycle {
    let name = format!("{} perturbed at ({x}, {y})", base.name());
    FnCocycle::new(name, move |a, b| {
        let v = base.value(a, b)?;
        Ok(if (*a, *b) == (x, y) { v + delta.clone() } else { v })
    })
}

/// Bilinear extension of a cocycle to combinations.
pub fn cocycle_on(g: &dyn Cocycle, x: &Combination, y: &Combination) -> Result<Scalar> {
    let mut out = Scalar::zero();
    for (gx, cx) in x.terms() {
        for (gy, cy) in y.terms() {
            let v = g.value(gx, gy)?;
            if !v.is_zero() {
                out = out + v * cx * cy;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CocycleReport {
    pub checked: usize,
    /// First pair with `g(x, y) ≠ -g(y, x)` (including `g(x, x) ≠ 0`).
    pub alternation_failure: Option<(Gen, Gen)>,
    pub failures: Vec<((Gen, Gen, Gen), Scalar)>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.alternation_failure.is_none() && self.failures.is_empty()
    }

    pub fn witness(&self) -> Option<String> {
        if let Some((x, y)) = &self.alternation_failure {
            return Some(format!("g({x}, {y}) + g({y}, {x}) is not zero"));
        }
        self.failures
            .first()
            .map(|((x, y, z), r)| format!("({x}, {y}, {z}): cyclic sum {r}"))
    }
}

/// Triples `(d_n, d_m, d_k)` with `n + m + k = 0` in the window.
pub fn zero_sum_triples(w: i64) -> Vec<(Gen, Gen, Gen)> {
    let mut out = Vec::new();
    for n in -w..=w {
        for m in -w..=w {
            let k = -n - m;
            if k.abs() <= w {
                out.push((Gen::D(n), Gen::D(m), Gen::D(k)));
            }
        }
    }
    out
}

/// Checks alternation on the generators of the triples, then `↻ g(α(x), [y, z]) = 0` on each triple.
pub fn verify_cocycle_condition(
    g: &dyn Cocycle,
    alg: &dyn Algebra,
    triples: &[(Gen, Gen, Gen)],
) -> Result<CocycleReport> {
    let mut gens: Vec<Gen> = triples.iter().flat_map(|(x, y, z)| [*x, *y, *z]).collect();
    gens.sort();
    gens.dedup();
    let mut alternation_failure = None;
    'outer: for x in &gens {
        for y in &gens {
            if !(g.value(x, y)? + g.value(y, x)?).is_zero() {
                alternation_failure = Some((*x, *y));
                break 'outer;
            }
        }
    }
    let residues: Result<Vec<_>> = triples
        .par_iter()
        .map(|(x, y, z)| {
            let mut total = Scalar::zero();
            for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                let alpha = twist_comb(alg, &Combination::basis(*a))?;
                total = total + cocycle_on(g, &alpha, &alg.bracket(b, c)?)?;
            }
            Ok(((*x, *y, *z), total))
        })
        .collect();
    let failures = residues?.into_iter().filter(|(_, r)| !r.is_zero()).collect();
    Ok(CocycleReport { checked: triples.len(), alternation_failure, failures })
}

/// `L̂ = L ⊕ span{c}` with `[x, y]^ = [x, y] + g(x, y)·c`, `[c, ·] = 0`, `α̂(c) = c`.
#[derive(Clone)]
pub struct CentralExtension {
    name: String,
    pub base: Arc<dyn Algebra>,
    pub cocycle: Arc<dyn Cocycle>,
}

impl Algebra for CentralExtension {
    fn name(&self) -> &str {
        &self.name
    }

    fn basis_kind(&self) -> BasisKind {
        match self.base.basis_kind() {
            BasisKind::Graded | BasisKind::GradedCentral => BasisKind::GradedCentral,
            BasisKind::Finite(mut v) => {
                v.push(Gen::C);
                BasisKind::Finite(v)
            }
        }
    }

    fn bracket(&self, x: &Gen, y: &Gen) -> Result<Combination> {
        if *x == Gen::C || *y == Gen::C {
            return Ok(Combination::zero());
        }
        let central = Combination::single(Gen::C, self.cocycle.value(x, y)?);
        Ok(self.base.bracket(x, y)?.add(&central))
    }

    fn twist(&self, x: &Gen) -> Result<Combination> {
        if *x == Gen::C {
            return Ok(Combination::basis(Gen::C));
        }
        self.base.twist(x)
    }
}

/// The extension together with the checks made while building it.
pub struct ExtensionBuild {
    pub extension: CentralExtension,
    pub cocycle_report: CocycleReport,
    pub jacobi: JacobiReport,
}

/// Builds `L̂` after checking the cocycle condition on `triples`, then re-checks Hom-Jacobi on the extended window.
pub fn make_central_extension(
    name: &str,
    base: Arc<dyn Algebra>,
    g: Arc<dyn Cocycle>,
    triples: &[(Gen, Gen, Gen)],
    w: i64,
) -> Result<ExtensionBuild> {
    let cocycle_report = verify_cocycle_condition(g.as_ref(), base.as_ref(), triples)?;
    if let Some(witness) = cocycle_report.witness() {
        return Err(Error::CocycleConditionFailed(witness));
    }
    let extension = CentralExtension { name: name.to_string(), base, cocycle: g };
    let jacobi = verify_hom_jacobi(&extension, &generator_triples(&extension, w))?;
    Ok(ExtensionBuild { extension, cocycle_report, jacobi })
}

/// First window generator whose bracket with `c` is nonzero, in either order.
pub fn centrality_failure(ext: &dyn Algebra, w: i64) -> Result<Option<Gen>> {
    for x in ext.basis(w) {
        if !ext.bracket(&Gen::C, &x)?.is_zero() || !ext.bracket(&x, &Gen::C)?.is_zero() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct CompatibilityReport {
    pub checked: usize,
    /// Pairs with `g(αx, αy) ≠ f([x, y], g(x, y))`, with both sides.
    pub failures: Vec<((Gen, Gen), Scalar, Scalar)>,
    /// `f(0, 1)` against `α_a(1)` when they differ.
    pub unit_failure: Option<(Scalar, Scalar)>,
}

impl CompatibilityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.unit_failure.is_none()
    }
}

/// Checks `g(α(x), α(y)) = f([x, y], g(x, y))` on window pairs and `f(0, a) = α_a(a)`.
pub fn verify_f_compatibility(
    ext: &CentralExtension,
    f: &dyn Fn(&Combination, &Scalar) -> Result<Scalar>,
    alpha_a: &dyn Fn(&Scalar) -> Scalar,
    w: i64,
) -> Result<CompatibilityReport> {
    let base = ext.base.as_ref();
    let g = ext.cocycle.as_ref();
    let basis = base.basis(w);
    let mut failures = Vec::new();
    let mut checked = 0;
    for x in &basis {
        for y in &basis {
            checked += 1;
            let lhs = cocycle_on(g, &base.twist(x)?, &base.twist(y)?)?;
            let rhs = f(&base.bracket(x, y)?, &g.value(x, y)?)?;
            if lhs != rhs {
                failures.push(((*x, *y), lhs, rhs));
            }
        }
    }
    let one = Scalar::one();
    let (f0, a0) = (f(&Combination::zero(), &one)?, alpha_a(&one));
    let unit_failure = (f0 != a0).then_some((f0, a0));
    Ok(CompatibilityReport { checked, failures, unit_failure })
}

/// Cocycle values `g(d_n, d_-n)` on the window, for tabulation.
pub fn cocycle_table(g: &dyn Cocycle, w: i64) -> Result<Vec<(i64, Scalar)>> {
    (-w..=w).map(|n| Ok((n, g.value(&Gen::D(n), &Gen::D(-n))?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::witt_pq;
    use crate::scalar::q_number;

    fn big(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cocycle_values() {
        assert!(virasoro_coefficient(1).is_zero());
        assert!(virasoro_coefficient(0).is_zero());
        assert!(virasoro_coefficient(-1).is_zero());
        let r2 = Scalar::monomial(1, -2, 2);
        let expect = Scalar::monomial(1, 2, -2).checked_div(&((Scalar::one() + r2) * Scalar::from_int(6))).unwrap()
            * normalized(1)
            * normalized(2)
            * normalized(3);
        assert_eq!(virasoro_coefficient(2), expect);
    }

    #[test]
    fn cocycle_condition_on_witt() {
        let alg = witt_pq().unwrap().closed;
        let rep = verify_cocycle_condition(&virasoro_cocycle(), &alg, &zero_sum_triples(4)).unwrap();
        assert!(rep.passed(), "{:?}", rep.witness());
        let zero = verify_cocycle_condition(&zero_cocycle(), &alg, &zero_sum_triples(3)).unwrap();
        assert!(zero.passed());
        let bad = perturbed_cocycle(Arc::new(virasoro_cocycle()), Gen::D(2), Gen::D(-2), Scalar::one());
        let rep = verify_cocycle_condition(&bad, &alg, &zero_sum_triples(3)).unwrap();
        assert!(!rep.passed());
    }

    #[test]
    fn extension_is_central_and_hom_lie() {
        let base: Arc<dyn Algebra> = Arc::new(witt_pq().unwrap().closed);
        let built =
            make_central_extension("vir", base, Arc::new(virasoro_cocycle()), &zero_sum_triples(3), 2).unwrap();
        assert!(built.jacobi.passed());
        assert_eq!(centrality_failure(&built.extension, 3).unwrap(), None);
        let b = built.extension.bracket(&Gen::D(2), &Gen::D(-2)).unwrap();
        assert_eq!(b.coeff(&Gen::C), virasoro_coefficient(2));
    }

    #[test]
    fn failed_condition_is_an_error() {
        let base: Arc<dyn Algebra> = Arc::new(witt_pq().unwrap().closed);
        let bad = perturbed_cocycle(Arc::new(virasoro_cocycle()), Gen::D(3), Gen::D(-3), Scalar::one());
        let err = make_central_extension("bad", base, Arc::new(bad), &zero_sum_triples(3), 1).err();
        assert!(matches!(err, Some(Error::CocycleConditionFailed(_))));
    }

    #[test]
    fn compatibility_checks() {
        let base: Arc<dyn Algebra> = Arc::new(witt_pq().unwrap().closed);
        let ext = make_central_extension("triv", base, Arc::new(zero_cocycle()), &zero_sum_triples(2), 1)
            .unwrap()
            .extension;
        let f = |_: &Combination, a: &Scalar| Ok(a.clone());
        assert!(verify_f_compatibility(&ext, &f, &|a| a.clone(), 2).unwrap().passed());
        let doubled = |_: &Combination, a: &Scalar| Ok(a.clone() * Scalar::from_int(2));
        let rep = verify_f_compatibility(&ext, &doubled, &|a| a.clone(), 1).unwrap();
        assert!(rep.unit_failure.is_some());
    }

    #[test]
    fn specialization_poles() {
        assert!(matches!(virasoro_coefficient_at(1, &big(1), &big(-1)), Err(Error::PoleAtSpecialization { n: 1 })));
        assert!(virasoro_coefficient_at(2, &big(1), &big(2)).is_ok());
    }

    #[test]
    fn p_one_reduces_to_q_numbers() {
        let r = |n: i64| q_number(n).substitute(&Scalar::one(), &Scalar::q()).unwrap();
        for n in -4..=4 {
            let at_p1 = virasoro_coefficient(n).substitute(&Scalar::one(), &Scalar::q()).unwrap();
            let q_shape = Scalar::monomial(1, 0, -n)
                .checked_div(&((Scalar::one() + Scalar::monomial(1, 0, n)) * Scalar::from_int(6)))
                .unwrap()
                * r(n - 1)
                * r(n)
                * r(n + 1);
            assert_eq!(at_p1, q_shape, "n = {n}");
        }
    }
}
