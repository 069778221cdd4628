//! Concrete deformation families, the morphisms between them, and the diagram of deformations.
//!
//! Every family built from a derivation context comes in two forms: a closed
//! formula for its structure constants, and the same algebra computed from the
//! context through a bracket rule. Checks compare the two.

pub mod algebra;
pub mod diagram;
pub mod inverse;
pub mod morphism;
pub mod sl2;
pub mod witt;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use algebra::{
    bracket_comb, map_comb, twist_comb, Algebra, BasisKind, Combination, FnGenMap, Gen, GenMap, GradedAlgebra,
    ScaleMorphism, TableAlgebra,
};
pub use diagram::{diagram_report, EdgeResult};
pub use inverse::inverse_twist_example;
pub use morphism::{
    check_morphism, solve_scale_isomorphism, solve_scale_isomorphism_all, Infeasibility, MorphismReport,
    MorphismVerdict, ParamValue, ScaleFamily, ScaleSolution, TableMorphism, NU_CHOICES,
};
pub use sl2::{sl2_classical, sl2_pp_forced, sl2_pq, sl2_qp};
pub use witt::{
    forced_p_form, forced_q_form, sigma_sigma_witt, witt_classical, witt_pq, witt_pq_forced, witt_qp,
    SigmaSigmaChoice,
};

use crate::derivation::TwistedDerivation;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default index window for family checks.
pub const DEFAULT_WINDOW: i64 = 8;

/// A family in closed form, together with the algebra its defining context produces.
#[derive(Clone)]
pub struct Family {
    pub name: &'static str,
    pub summary: &'static str,
    pub closed: GradedAlgebra,
    pub derived: Option<GradedAlgebra>,
    pub context: Option<Arc<dyn TwistedDerivation>>,
}

impl Family {
    /// The same family with one structure constant of the closed form perturbed.
    pub fn perturbed(&self, fault: &BracketFault) -> Family {
        Family { closed: perturb(&self.closed, fault), ..self.clone() }
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family({})", self.name)
    }
}

/// Adds `delta·target` to `[x, y]` and subtracts it from `[y, x]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketFault {
    pub x: Gen,
    pub y: Gen,
    pub target: Gen,
    pub delta: Scalar,
}

/// Applies a [`BracketFault`] to an algebra, keeping skew-symmetry.
pub fn perturb(alg: &GradedAlgebra, fault: &BracketFault) -> GradedAlgebra {
    let base = alg.clone();
    let fault2 = fault.clone();
    let twist_src = alg.clone();
    GradedAlgebra::new(
        alg.name().to_string(),
        alg.basis_kind(),
        move |a, b| {
            let mut out = base.bracket(a, b)?;
            if (*a, *b) == (fault2.x, fault2.y) {
                out = out.add(&Combination::single(fault2.target, fault2.delta.clone()));
            }
            if (*b, *a) == (fault2.x, fault2.y) {
                out = out.sub(&Combination::single(fault2.target, fault2.delta.clone()));
            }
            Ok(out)
        },
        move |g| twist_src.twist(g),
    )
    .with_provenance(format!("{} with a perturbed structure constant", alg.provenance()))
}

/// A graded algebra `[d_n, d_m] = coeff(n, m)·d_{n+m+shift}`, `α(d_n) = twist(n)·d_n`.
pub fn graded(
    name: &str,
    shift: i64,
    coeff: impl Fn(i64, i64) -> Scalar + Send + Sync + 'static,
    twist: impl Fn(i64) -> Scalar + Send + Sync + 'static,
) -> GradedAlgebra {
    GradedAlgebra::new(
        name.to_string(),
        BasisKind::Graded,
        move |x, y| {
            let (n, m) = (d_index(x)?, d_index(y)?);
            Ok(Combination::single(Gen::D(n + m + shift), coeff(n, m)))
        },
        move |x| Ok(Combination::single(*x, twist(d_index(x)?))),
    )
}

pub(crate) fn d_index(g: &Gen) -> Result<i64> {
    g.index().ok_or_else(|| Error::Unsupported(format!("{g} is not a graded generator")))
}

/// First generator pair (or twist) where two algebras differ on the window.
pub fn first_difference(a: &dyn Algebra, b: &dyn Algebra, w: i64, twists: bool) -> Result<Option<String>> {
    let basis = a.basis(w);
    for x in &basis {
        for y in &basis {
            let (l, r) = (a.bracket(x, y)?, b.bracket(x, y)?);
            if l != r {
                return Ok(Some(format!("[{x}, {y}]: {l} against {r}")));
            }
        }
    }
    if twists {
        for x in &basis {
            let (l, r) = (a.twist(x)?, b.twist(x)?);
            if l != r {
                return Ok(Some(format!("alpha({x}): {l} against {r}")));
            }
        }
    }
    Ok(None)
}

type Builder = Box<dyn Fn() -> Result<Family> + Send + Sync>;

/// Families selectable by name.
pub struct FamilyRegistry {
    builders: BTreeMap<&'static str, Builder>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        Self { builders: BTreeMap::new() }
    }

    pub fn register(&mut self, name: &'static str, build: impl Fn() -> Result<Family> + Send + Sync + 'static) {
        self.builders.insert(name, Box::new(build));
    }

    pub fn build(&self, name: &str) -> Result<Family> {
        match self.builders.get(name) {
            Some(b) => b(),
            None => Err(Error::Unsupported(format!(
                "unknown family {name}; known: {}",
                self.names().join(", ")
            ))),
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.builders.keys().copied().collect()
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        let mut reg = Self::empty();
        reg.register("witt", witt_pq);
        reg.register("witt-forced", witt_pq_forced);
        reg.register("witt-qp", witt_qp);
        reg.register("witt-classical", witt_classical);
        reg.register("witt-pp", || sigma_sigma_witt(SigmaSigmaChoice::TPartial));
        reg.register("witt-pp-partial", || sigma_sigma_witt(SigmaSigmaChoice::Partial));
        reg.register("sl2", sl2_pq);
        reg.register("sl2-qp", sl2_qp);
        reg.register("sl2-classical", sl2_classical);
        reg.register("sl2-pp-forced", sl2_pp_forced);
        reg.register("inverse", inverse_twist_example);
        reg
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{generator_triples, verify_hom_jacobi};

    #[test]
    fn every_family_matches_its_context() {
        let reg = FamilyRegistry::default();
        for name in reg.names() {
            let fam = reg.build(name).unwrap();
            let derived = fam.derived.as_ref().expect("every registered family has a context");
            let w = 3;
            for x in fam.closed.basis(w) {
                assert_eq!(fam.closed.twist(&x).unwrap(), derived.twist(&x).unwrap(), "{name} twist {x}");
                for y in fam.closed.basis(w) {
                    assert_eq!(
                        fam.closed.bracket(&x, &y).unwrap(),
                        derived.bracket(&x, &y).unwrap(),
                        "{name} [{x}, {y}]"
                    );
                }
            }
            let rep = verify_hom_jacobi(&fam.closed, &generator_triples(&fam.closed, 2)).unwrap();
            assert!(rep.passed(), "{name}: {:?}", rep.failures.first().map(|f| f.to_string()));
        }
    }

    #[test]
    fn perturbation_is_skew_and_detected() {
        let fam = witt_pq().unwrap();
        let fault = BracketFault { x: Gen::D(1), y: Gen::D(2), target: Gen::D(3), delta: Scalar::one() };
        let bad = fam.perturbed(&fault);
        let b12 = bad.closed.bracket(&Gen::D(1), &Gen::D(2)).unwrap();
        let b21 = bad.closed.bracket(&Gen::D(2), &Gen::D(1)).unwrap();
        assert_eq!(b12.add(&b21), Combination::zero());
        assert_ne!(b12, fam.closed.bracket(&Gen::D(1), &Gen::D(2)).unwrap());
    }

    #[test]
    fn unknown_family() {
        assert!(matches!(FamilyRegistry::default().build("nope"), Err(Error::Unsupported(_))));
    }
}
