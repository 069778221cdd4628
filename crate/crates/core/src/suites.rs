//! Named verification suites that sweep the families, contexts and identities on a window.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bracket::{
    bracket_general, bracket_general_operator_oracle, check_forced_conditions, generator_triples, monomial_triples,
    twist_algebra, verify_hom_jacobi, verify_quasi_jacobi,
};
use crate::derivation::{DerivationElement, LinearOp, TwistedDerivation};
use crate::error::{Error, Result};
use crate::extension::{
    centrality_failure, make_central_extension, perturbed_cocycle, verify_cocycle_condition, verify_f_compatibility,
    virasoro_cocycle, virasoro_coefficient, zero_sum_triples, Cocycle,
};
use crate::families::sl2::sl2_decompose;
use crate::families::witt::pq;
use crate::families::{
    check_morphism, diagram_report, first_difference, graded, solve_scale_isomorphism, Algebra, BracketFault,
    Combination, Family, FamilyRegistry, Gen, GenMap, MorphismVerdict, ScaleMorphism, ScaleSolution, TableMorphism,
};
use crate::families::{forced_p_form, forced_q_form};
use crate::laurent::LaurentPoly;
use crate::opcat::{catalogue, random_corpus, verify_entry, CatalogueEntry};
use crate::report::{Report, Status};
use crate::scalar::{q_number, q_number_in, Scalar};

/// Seed of the random polynomial corpus used by the catalogue suite.
pub const CATALOGUE_SEED: u64 = 20_080_219;
pub const CATALOGUE_PAIRS: usize = 100;
pub const CATALOGUE_DEGREE: u32 = 6;

/// A deliberate corruption, for checking that the suites notice.
#[derive(Clone, Debug, PartialEq)]
pub enum Fault {
    /// A structure constant of the named family's closed form.
    Bracket { family: String, fault: BracketFault },
    /// Adds `delta` to the single cocycle value `g(d_n, d_-n)`.
    Cocycle { n: i64, delta: Scalar },
}

impl Fault {
    pub fn describe(&self) -> String {
        match self {
            Fault::Bracket { family, fault } => {
                format!("{family}: [{}, {}] += ({})*{}", fault.x, fault.y, fault.delta, fault.target)
            }
            Fault::Cocycle { n, delta } => format!("g(d_{n}, d_{}) += {delta}", -n),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub window: i64,
    pub faults: Vec<Fault>,
}

impl SuiteConfig {
    pub fn new(window: i64) -> Self {
        Self { window, faults: Vec::new() }
    }

    pub fn with_fault(mut self, fault: Fault) -> Self {
        self.faults.push(fault);
        self
    }

    /// A registered family with every bracket fault aimed at it applied.
    fn family(&self, name: &str) -> Result<Family> {
        let mut fam = FamilyRegistry::default().build(name)?;
        for f in &self.faults {
            if let Fault::Bracket { family, fault } = f {
                if family == name {
                    fam = fam.perturbed(fault);
                }
            }
        }
        Ok(fam)
    }

    fn cocycle(&self) -> Arc<dyn Cocycle> {
        let mut g: Arc<dyn Cocycle> = Arc::new(virasoro_cocycle());
        for f in &self.faults {
            if let Fault::Cocycle { n, delta } = f {
                g = Arc::new(perturbed_cocycle(g, Gen::D(*n), Gen::D(-n), delta.clone()));
            }
        }
        g
    }

    /// Rejects faults the window cannot see.
    pub fn validate(&self) -> Result<()> {
        if self.window < 0 {
            return Err(Error::WindowExceeded(format!("negative window {}", self.window)));
        }
        let registry = FamilyRegistry::default();
        for f in &self.faults {
            match f {
                Fault::Bracket { family, fault } => {
                    let basis = registry.build(family)?.closed.basis(self.window);
                    if !basis.contains(&fault.x) || !basis.contains(&fault.y) {
                        return Err(Error::WindowExceeded(format!(
                            "fault at [{}, {}] lies outside window {}",
                            fault.x, fault.y, self.window
                        )));
                    }
                }
                Fault::Cocycle { n, .. } if n.abs() > self.window => {
                    return Err(Error::WindowExceeded(format!(
                        "cocycle fault at n = {n} lies outside window {}",
                        self.window
                    )));
                }
                Fault::Cocycle { .. } => {}
            }
        }
        Ok(())
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, cfg: &SuiteConfig) -> Result<Report>;
}

/// Closed form against the context, then Hom-Jacobi on the closed form.
fn family_checks(report: &mut Report, fam: &Family, w: i64, anchor: &str) -> Result<()> {
    let derived = fam.derived.as_ref().ok_or_else(|| Error::Unsupported(format!("{} has no context", fam.name)))?;
    report.check(
        format!("{}/closed-matches-context", fam.name),
        anchor,
        first_difference(&fam.closed, derived, w, true)?,
    );
    let jacobi = verify_hom_jacobi(&fam.closed, &generator_triples(&fam.closed, w))?;
    report.check(
        format!("{}/hom-jacobi", fam.name),
        "Hom-Jacobi identity",
        jacobi.failures.first().map(|f| format!("cyclic sum at {f}")),
    );
    Ok(())
}

fn delta_check(report: &mut Report, id: &str, ctx: &dyn TwistedDerivation, expected: Scalar) {
    let got = ctx.delta().cloned();
    let want = LaurentPoly::constant(expected);
    let failure = match got {
        Some(d) if d == want => None,
        Some(d) => Some(format!("delta = {d}, expected {want}")),
        None => Some("delta undefined".into()),
    };
    report.check(id, "delta of the context", failure);
}

fn quasi_check(report: &mut Report, id: &str, ctx: &dyn TwistedDerivation, w: i64) -> Result<()> {
    let rep = verify_quasi_jacobi(ctx, &monomial_triples(w))?;
    report.check(
        id,
        "quasi-Jacobi identity",
        rep.failures.first().map(|e| {
            let (a, b, c) = &e.triple;
            format!("({a}, {b}, {c}): residue {}", e.residue)
        }),
    );
    Ok(())
}

fn context(fam: &Family) -> Result<Arc<dyn TwistedDerivation>> {
    fam.context.clone().ok_or_else(|| Error::Unsupported(format!("{} has no context", fam.name)))
}

fn verdict_failure(verdict: MorphismVerdict, witness: Option<String>) -> Option<String> {
    (verdict != MorphismVerdict::Full).then(|| format!("{verdict}: {}", witness.unwrap_or_default()))
}

/// First `(n, m)` with `q^m[n] - q^n[m] ≠ p^m[n] - p^n[m]`.
pub fn forced_forms_failure(w: i64) -> Option<String> {
    (-w..=w)
        .flat_map(|n| (-w..=w).map(move |m| (n, m)))
        .find(|(n, m)| forced_q_form(*n, *m) != forced_p_form(*n, *m))
        .map(|(n, m)| format!("(n, m) = ({n}, {m})"))
}

fn times_p() -> ScaleMorphism {
    ScaleMorphism::new("multiplication by p", 1, |_| Scalar::p())
}

pub struct WittSuite;

impl Suite for WittSuite {
    fn name(&self) -> &'static str {
        "witt"
    }

    fn summary(&self) -> &'static str {
        "(p,q)-Witt algebra from the Jackson context, its q-Witt form, and their isomorphism"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let w = cfg.window;
        let mut report = Report::new(self.name(), w);
        let fam = cfg.family("witt")?;
        let ctx = context(&fam)?;
        family_checks(&mut report, &fam, w, "(p,q)-Witt commutation relations")?;

        // The bracket realized as operator compositions, applied to monomials.
        let mut oracle_failure = None;
        'outer: for n in -w..=w {
            for m in -w..=w {
                let (a, b) = (-LaurentPoly::t_pow(n), -LaurentPoly::t_pow(m));
                let coefficient = bracket_general(ctx.as_ref(), &a, &b)?;
                let oracle = bracket_general_operator_oracle(ctx.as_ref(), &a, &b)?;
                let element = DerivationElement::new(coefficient, ctx.as_ref());
                for j in -(w + 2)..=(w + 2) {
                    let f = LaurentPoly::t_pow(j);
                    if oracle.apply(&f)? != element.apply(&f)? {
                        oracle_failure = Some(format!("[d_{n}, d_{m}] applied to t^{j}"));
                        break 'outer;
                    }
                }
            }
        }
        report.check("operator-oracle", "bracket as a commutator of operators", oracle_failure);
        delta_check(&mut report, "delta", ctx.as_ref(), Scalar::one());
        quasi_check(&mut report, "quasi-jacobi", ctx.as_ref(), w)?;

        let at_p1 = graded("q-witt", 0, |n, m| q_number_in(n, &Scalar::q()) - q_number_in(m, &Scalar::q()), |n| {
            Scalar::one() + pq(0, n)
        });
        report.check(
            "degeneration-p-one",
            "q-Witt at p = 1",
            first_difference(&fam.closed.substitute("witt at p=1", Scalar::one(), Scalar::q()), &at_p1, w, true)?,
        );
        let classical = graded("witt", 0, |n, m| Scalar::from_int(n - m), |_| Scalar::from_int(2));
        report.check(
            "degeneration-classical",
            "Witt at p = q = 1",
            first_difference(&fam.closed.substitute("witt at 1", Scalar::one(), Scalar::one()), &classical, w, true)?,
        );

        let qp = cfg.family("witt-qp")?;
        family_checks(&mut report, &qp, w, "q-Witt commutation relations at q/p")?;
        let rep = check_morphism(&times_p(), &qp.closed, &fam.closed, w)?;
        report.check(
            "isomorphism-times-p",
            "W_{q/p} isomorphic to W_{p,q}",
            verdict_failure(rep.verdict, rep.witness()),
        );

        // The solver needs index 2 to see the general and forced brackets disagree.
        let sw = w.max(2);
        let failure = match solve_scale_isomorphism(&qp.closed, &fam.closed, sw, 1)? {
            ScaleSolution::Family(sol) => {
                let bad = (-sw..=sw).find(|n| {
                    sol.value(*n).map_or(true, |v| sol.params != [1] || v.scale != pq(1 - n, 0) || v.exp(0) != *n)
                });
                bad.map(|n| format!("c_{n} = {}", sol.render(n).unwrap_or_else(|| "undetermined".into())))
            }
            ScaleSolution::Infeasible { reason, .. } => Some(format!("no scale isomorphism: {reason}")),
        };
        report.check("scale-family", "c_n = c_1^n / p^(n-1)", failure);

        let forced = cfg.family("witt-forced")?;
        match solve_scale_isomorphism(&fam.closed, &forced.closed, sw, 1)? {
            ScaleSolution::Infeasible { reason, .. } => {
                report.push("scale-general-to-forced", "no scale isomorphism between the brackets", Status::Pass, Some(reason.to_string()))
            }
            ScaleSolution::Family(sol) => report.check(
                "scale-general-to-forced",
                "no scale isomorphism between the brackets",
                Some(format!("unexpected family with c_1 = {}", sol.render(1).unwrap_or_default())),
            ),
        }
        Ok(report)
    }
}

pub struct WittForcedSuite;

impl Suite for WittForcedSuite {
    fn name(&self) -> &'static str {
        "witt-forced"
    }

    fn summary(&self) -> &'static str {
        "forced bracket on the (p,q)-Witt generators, its twist, and twist-equivalence with the general bracket"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let w = cfg.window;
        let mut report = Report::new(self.name(), w);
        let fam = cfg.family("witt-forced")?;
        let ctx = context(&fam)?;
        family_checks(&mut report, &fam, w, "forced (p,q)-Witt bracket with twist p^n + q^n")?;
        report.check("forced-forms-agree", "q^m[n] - q^n[m] = p^m[n] - p^n[m]", forced_forms_failure(w));
        let conditions = check_forced_conditions(ctx.as_ref(), w.max(1));
        report.check(
            "forced-conditions",
            "conditions for the forced bracket",
            (!conditions.passed()).then(|| format!("{conditions:?}")),
        );

        let general: Arc<dyn Algebra> = Arc::new(cfg.family("witt")?.closed);
        let rho: Arc<dyn GenMap> = Arc::new(ScaleMorphism::new("d_n -> p^n d_n", 1, |g| match g {
            Gen::D(n) => pq(*n, 0),
            _ => Scalar::one(),
        }));
        let twisted = twist_algebra(general.clone(), rho.clone(), "twisted witt", w)?;
        let failure = match twisted.jacobi.failures.first() {
            Some(f) => Some(format!("Hom-Jacobi fails at {f}")),
            None => first_difference(&twisted.algebra, &fam.closed, w, true)?,
        };
        report.check("twist-equivalence", "twisting W_{p,q} by d_n -> p^n d_n", failure);

        let pp = cfg.family("witt")?.closed.substitute("W_{p,p}", Scalar::p(), Scalar::p());
        let twisted_pp = twist_algebra(Arc::new(pp), rho, "twisted W_{p,p}", w)?;
        let expected = graded("W'_{p,p}", 0, |n, m| Scalar::from_int(n - m) * pq(n + m - 1, 0), |n| {
            Scalar::from_int(2) * pq(n, 0)
        });
        report.check(
            "twist-equivalence-pp",
            "twisting W_{p,p} gives (n-m)p^(n+m-1)",
            first_difference(&twisted_pp.algebra, &expected, w, true)?,
        );
        Ok(report)
    }
}

pub struct Sl2Suite;

impl Suite for Sl2Suite {
    fn name(&self) -> &'static str {
        "sl2"
    }

    fn summary(&self) -> &'static str {
        "sl(2)_{p,q} and sl(2)_{q/p} on span(e, f, h), closure, degenerations and isomorphisms"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let w = cfg.window;
        let mut report = Report::new(self.name(), w);
        let fam = cfg.family("sl2")?;
        let ctx = context(&fam)?;
        family_checks(&mut report, &fam, w, "sl(2)_{p,q} commutation relations")?;
        delta_check(&mut report, "delta", ctx.as_ref(), pq(-1, 1));

        let mut closure = None;
        for x in [Gen::E, Gen::F, Gen::H] {
            for y in [Gen::E, Gen::F, Gen::H] {
                let (a, b) = (crate::families::sl2::sl2_coefficient(&x)?, crate::families::sl2::sl2_coefficient(&y)?);
                if let Err(e) = sl2_decompose(&bracket_general(ctx.as_ref(), &a, &b)?) {
                    closure.get_or_insert(format!("[{x}, {y}]: {e}"));
                }
            }
        }
        report.check("closure", "span(e, f, h) closed under the bracket", closure);

        let classical = cfg.family("sl2-classical")?.closed;
        report.check(
            "degeneration-classical",
            "sl(2) at p = q = 1",
            first_difference(&fam.closed.substitute("sl2 at 1", Scalar::one(), Scalar::one()), &classical, w, false)?,
        );

        let qp = cfg.family("sl2-qp")?;
        family_checks(&mut report, &qp, w, "Jackson sl(2) at q/p")?;
        let rep = check_morphism(&times_p(), &qp.closed, &fam.closed, w)?;
        report.check(
            "isomorphism-times-p",
            "sl(2)_{q/p} isomorphic to sl(2)_{p,q}",
            verdict_failure(rep.verdict, rep.witness()),
        );
        let printed = TableMorphism::new([
            (Gen::E, Combination::single(Gen::E, Scalar::p())),
            (Gen::F, Combination::single(Gen::F, Scalar::from_int(2) * pq(2, 0) * (Scalar::p() + Scalar::q()).inv()?)),
            (Gen::H, Combination::single(Gen::H, Scalar::p())),
        ]);
        let rep = check_morphism(&printed, &qp.closed, &fam.closed, w)?;
        report.info(
            "printed-isomorphism",
            "e -> pe, f -> 2p^2/(p+q) f, h -> ph",
            match rep.verdict {
                MorphismVerdict::Full => "verified as a morphism".into(),
                v => format!("{v}: {}", rep.witness().unwrap_or_default()),
            },
        );
        Ok(report)
    }
}

pub struct SigmaSigmaSuite;

impl Suite for SigmaSigmaSuite {
    fn name(&self) -> &'static str {
        "sigma-sigma"
    }

    fn summary(&self) -> &'static str {
        "Lie algebras from (sigma,sigma)-derivations: W_{p,p}, classical Witt and sl(2), forced sl(2)_{p,p}"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let mut report = Report::new(self.name(), cfg.window);
        for name in ["witt-pp", "witt-pp-partial", "witt-classical", "sl2-classical", "sl2-pp-forced"] {
            family_checks(&mut report, &cfg.family(name)?, cfg.window, "(sigma,sigma)-derivation brackets")?;
        }
        Ok(report)
    }
}

pub struct InverseSuite;

impl Suite for InverseSuite {
    fn name(&self) -> &'static str {
        "inverse"
    }

    fn summary(&self) -> &'static str {
        "the algebra from tau(t) = 1/t, sigma(t) = qt with its non-diagonal twist"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let w = cfg.window;
        let mut report = Report::new(self.name(), w);
        let fam = cfg.family("inverse")?;
        let ctx = context(&fam)?;
        family_checks(&mut report, &fam, w, "brackets from an involutive tau")?;
        delta_check(&mut report, "delta", ctx.as_ref(), Scalar::from_int(-1));
        quasi_check(&mut report, "quasi-jacobi", ctx.as_ref(), w)?;
        Ok(report)
    }
}

pub struct VirasoroSuite;

impl Suite for VirasoroSuite {
    fn name(&self) -> &'static str {
        "virasoro"
    }

    fn summary(&self) -> &'static str {
        "the (p,q)-Virasoro cocycle and the central extension it defines"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let w = cfg.window;
        let mut report = Report::new(self.name(), w);
        let base: Arc<dyn Algebra> = Arc::new(cfg.family("witt")?.closed);
        let g = cfg.cocycle();
        let triples = zero_sum_triples(w);
        let rep = verify_cocycle_condition(g.as_ref(), base.as_ref(), &triples)?;
        report.check(
            "cocycle-alternating",
            "alternating cocycle",
            rep.alternation_failure.map(|(x, y)| format!("g({x}, {y}) + g({y}, {x}) is not zero")),
        );
        report.check(
            "cocycle-condition",
            "cyclic sum of g(alpha(x), [y, z])",
            rep.failures.first().map(|((x, y, z), r)| format!("({x}, {y}, {z}): cyclic sum {r}")),
        );

        match make_central_extension("virasoro", base, g, &triples, w) {
            Ok(built) => {
                let ext = built.extension;
                report.check(
                    "centrality",
                    "c is central",
                    centrality_failure(&ext, w)?.map(|x| format!("[c, {x}] is not zero")),
                );
                report.check(
                    "extension-hom-jacobi",
                    "Hom-Jacobi on the extended basis",
                    built.jacobi.failures.first().map(|f| format!("cyclic sum at {f}")),
                );
                let f = |_: &Combination, a: &Scalar| Ok(a.clone());
                let compat = verify_f_compatibility(&ext, &f, &|a| a.clone(), w)?;
                let note = match compat.failures.first() {
                    None => format!("f(x + a) = a satisfies both equations on {} pairs", compat.checked),
                    Some(((x, y), l, r)) => format!(
                        "f(x + a) = a fails on {} of {} pairs, first ({x}, {y}): {l} against {r}",
                        compat.failures.len(),
                        compat.checked
                    ),
                };
                report.info("f-compatibility", "g(alpha(x), alpha(y)) = f([x, y], g(x, y))", note);
            }
            Err(Error::CocycleConditionFailed(witness)) => {
                report.check("extension", "central extension", Some(format!("not built: {witness}")));
            }
            Err(e) => return Err(e),
        }

        let mut reduction = None;
        for n in -w..=w {
            let at_p1 = virasoro_coefficient(n).substitute(&Scalar::one(), &Scalar::q())?;
            let qn = |k: i64| q_number(k).substitute(&Scalar::one(), &Scalar::q());
            let shape = pq(0, -n).checked_div(&((Scalar::one() + pq(0, n)) * Scalar::from_int(6)))? * qn(n - 1)? * qn(n)? * qn(n + 1)?;
            if at_p1 != shape {
                reduction = Some(format!("n = {n}: {at_p1} against {shape}"));
                break;
            }
        }
        report.check("p-one-reduction", "q-Virasoro coefficient at p = 1", reduction);
        Ok(report)
    }
}

pub struct DiagramSuite;

impl Suite for DiagramSuite {
    fn name(&self) -> &'static str {
        "diagram"
    }

    fn summary(&self) -> &'static str {
        "every edge of the Witt and sl(2) diagrams of deformations"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let mut report = Report::new(self.name(), cfg.window);
        for (i, edge) in diagram_report(cfg.window)?.into_iter().enumerate() {
            report.push(format!("edge-{:02}", i + 1), &edge.edge, edge.status, edge.witness);
        }
        Ok(report)
    }
}

pub struct CatalogueSuite;

fn jackson_p_one_failure(rows: &[CatalogueEntry], corpus: &[(crate::opcat::PlainPoly, crate::opcat::PlainPoly)]) -> Result<Option<String>> {
    let find = |name: &str| rows.iter().find(|e| e.name == name).cloned();
    let (Some(pq_row), Some(q_row)) = (find("Jackson (p,q)-derivative"), find("Jackson q-derivative")) else {
        return Ok(Some("Jackson rows missing".into()));
    };
    for (f, _) in corpus {
        let at_p1 = pq_row.apply(f)?.map_coeffs(|c| c.substitute(&Scalar::one(), &Scalar::q()))?;
        if at_p1 != q_row.apply(f)? {
            return Ok(Some(format!("differs on {f}")));
        }
    }
    Ok(None)
}

impl Suite for CatalogueSuite {
    fn name(&self) -> &'static str {
        "catalogue"
    }

    fn summary(&self) -> &'static str {
        "product rules of eight (tau,sigma)-derivations on polynomials"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let mut report = Report::new(self.name(), cfg.window)
            .param("seed", CATALOGUE_SEED.to_string())
            .param("pairs", CATALOGUE_PAIRS.to_string());
        let corpus = random_corpus(CATALOGUE_SEED, CATALOGUE_PAIRS, CATALOGUE_DEGREE);
        let rows = catalogue();
        for e in &rows {
            let rep = verify_entry(e, &corpus)?;
            report.check(e.name, e.rule, rep.failure.map(|(f, g)| format!("f = {f}, g = {g}")));
        }
        report.check("jackson-p-one", "Jackson (p,q)-derivative at p = 1", jackson_p_one_failure(&rows, &corpus)?);
        Ok(report)
    }
}

/// Suites selectable by name; `all` runs every registered suite in order.
pub struct SuiteRegistry {
    suites: BTreeMap<&'static str, Box<dyn Suite>>,
    order: Vec<&'static str>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        Self { suites: BTreeMap::new(), order: Vec::new() }
    }

    pub fn register(&mut self, suite: Box<dyn Suite>) {
        let name = suite.name();
        if self.suites.insert(name, suite).is_none() {
            self.order.push(name);
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.order.clone()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites.get(name).map(|s| s.as_ref())
    }

    pub fn run(&self, name: &str, cfg: &SuiteConfig) -> Result<Report> {
        cfg.validate()?;
        let mut report = if name == "all" {
            let mut all = Report::new("all", cfg.window);
            for n in &self.order {
                all.absorb(self.suites[n].run(cfg)?);
            }
            all
        } else {
            let suite = self.get(name).ok_or_else(|| {
                Error::Unsupported(format!("unknown suite {name}; known: all, {}", self.order.join(", ")))
            })?;
            suite.run(cfg)?
        };
        for (i, f) in cfg.faults.iter().enumerate() {
            report.params.insert(format!("fault-{i}"), f.describe());
        }
        Ok(report)
    }
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(WittSuite));
        reg.register(Box::new(WittForcedSuite));
        reg.register(Box::new(Sl2Suite));
        reg.register(Box::new(SigmaSigmaSuite));
        reg.register(Box::new(InverseSuite));
        reg.register(Box::new(VirasoroSuite));
        reg.register(Box::new(DiagramSuite));
        reg.register(Box::new(CatalogueSuite));
        reg
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_on_a_small_window() {
        let reg = SuiteRegistry::default();
        let report = reg.run("all", &SuiteConfig::new(2)).unwrap();
        for e in report.failures() {
            panic!("{}: {:?}", e.id, e.witness);
        }
        assert!(report.entries.len() > 30);
    }

    #[test]
    fn window_zero_is_trivial() {
        let report = SuiteRegistry::default().run("witt", &SuiteConfig::new(0)).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn bracket_fault_is_caught() {
        let fault = BracketFault { x: Gen::D(1), y: Gen::D(-2), target: Gen::D(-1), delta: Scalar::one() };
        let cfg = SuiteConfig::new(2).with_fault(Fault::Bracket { family: "witt".into(), fault });
        let report = SuiteRegistry::default().run("witt", &cfg).unwrap();
        assert!(!report.passed());
        assert!(report.params.contains_key("fault-0"));
    }

    #[test]
    fn cocycle_fault_is_caught() {
        let cfg = SuiteConfig::new(3).with_fault(Fault::Cocycle { n: 0, delta: Scalar::one() });
        assert!(!SuiteRegistry::default().run("virasoro", &cfg).unwrap().passed());
    }

    #[test]
    fn faults_outside_the_window_are_rejected() {
        let cfg = SuiteConfig::new(1).with_fault(Fault::Cocycle { n: 4, delta: Scalar::one() });
        assert!(matches!(SuiteRegistry::default().run("virasoro", &cfg), Err(Error::WindowExceeded(_))));
        assert!(matches!(SuiteRegistry::default().run("nope", &SuiteConfig::new(1)), Err(Error::Unsupported(_))));
    }
}
