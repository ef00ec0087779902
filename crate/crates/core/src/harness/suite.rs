use std::cell::{Cell, OnceCell, RefCell};
use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::corpus::{Corpus, CorpusEntry, ManifestLine, SkippedRecipe};
use super::search::{self, SearchQuery, SearchResult};
use super::HarnessError;
use crate::config::Limits;
use crate::constructions::{
    dorroh_extension, quotient_ring, trivial_extension, truncated_poly_ring, ConstructionError, Rng,
};
use crate::poly::{
    check_coefficient_nil_transfer, check_lemma_products, check_nilradical_identity,
    polyring_nil_reversible_bounded, PolyError,
};
use crate::predicates::{
    armendariz_bounded, check_budget, nominal, ideal_predicate, is_nil_reversible, ArmendarizKind, PredicateError, Property, PropertyReport,
};
use crate::ring::{enumerate_ideals, ideal_generated_by, Elem, FiniteRing, Ideal, IdealEnumeration, Witness, WitnessKind};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    PerRing,
    PerRingPair,
    PerIdeal,
}

/// A registered implication, evaluated hypothesis-first on every corpus
/// ring (or ideal, or ideal pair).
#[derive(Clone, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub hypothesis: Vec<String>,
    pub conclusion: Vec<String>,
    pub scope: Scope,
    /// The check tests a finite adaptation of the statement.
    pub adapted: bool,
    #[serde(skip)]
    run: fn(&Ctx) -> Vec<Unit>,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).finish_non_exhaustive()
    }
}

/// A statement with no separate check because it reduces to one that has.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionNote {
    pub id: &'static str,
    pub statement: &'static str,
    pub covered_by: &'static str,
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn registry() -> Vec<TheoremCheck> {
    let t = |id, statement, hyp: &[&str], concl: &[&str], scope, run| TheoremCheck {
        id,
        statement,
        hypothesis: strings(hyp),
        conclusion: strings(concl),
        scope,
        adapted: false,
        run,
    };
    use Scope::*;
    let mut v = vec![
        t(
            "def-chain",
            "reduced => reversible => nil-reversible; semicommutative => weakly semicommutative; 2-primal => NI; abelian => directly finite; finite rings are directly finite",
            &[],
            &["reduced=>reversible", "reversible=>nil-reversible", "semicommutative=>weakly-semicommutative", "2-primal=>ni", "abelian=>directly-finite", "directly-finite"],
            PerRing,
            check_def_chain,
        ),
        t(
            "rem-subring",
            "a unital subring of a nil-reversible ring is nil-reversible (sampled: subrings generated by 1 and one element)",
            &["nil-reversible"],
            &["subring nil-reversible"],
            PerRing,
            check_subrings,
        ),
        t(
            "prop-a2w",
            "nil-reversible rings are abelian, 2-primal and weakly semicommutative",
            &["nil-reversible"],
            &["abelian", "2-primal", "weakly-semicommutative"],
            PerRing,
            check_a2w,
        ),
        t(
            "prop-red-1",
            "a nil-reversible right (or left) principally projective ring is reduced",
            &["nil-reversible", "right-pp|left-pp"],
            &["reduced"],
            PerRing,
            check_red_pp,
        ),
        t(
            "prop-red-2",
            "a nil-reversible semiprime ring is reduced",
            &["nil-reversible", "semiprime"],
            &["reduced"],
            PerRing,
            check_red_semiprime,
        ),
        t(
            "prop-trivext",
            "if the trivial extension T(R,R) is nil-reversible then R is reversible",
            &["T(R,R) nil-reversible"],
            &["reversible"],
            PerRing,
            check_trivext,
        ),
        t(
            "prop-sq",
            "if (wh)^2 = 0 forces wh = 0 and (hw)^2 = 0 forces hw = 0 for nilpotent w, then R is nil-reversible",
            &["square-zero"],
            &["nil-reversible"],
            PerRing,
            check_sq,
        ),
        t(
            "prop-unitcentral",
            "unit-central rings are nil-reversible",
            &["unit-central"],
            &["nil-reversible"],
            PerRing,
            check_unitcentral,
        ),
        t(
            "prop-centralrev",
            "a central reversible ring whose only central nilpotent is 0 is nil-reversible",
            &["central-reversible", "central-nilpotents-zero"],
            &["nil-reversible"],
            PerRing,
            check_centralrev,
        ),
        t(
            "prop-dorroh-adapted",
            "the Dorroh extension of a nil-reversible ring is nil-reversible; tested with coefficients Z_m, m the characteristic of R, instead of Z",
            &["nil-reversible"],
            &["Dorroh(R,char R) nil-reversible"],
            PerRing,
            check_dorroh,
        ),
        t(
            "prop-subdirect",
            "a subdirect product of nil-reversible rings is nil-reversible (tested on pairs of nonzero ideals with zero intersection)",
            &["R/I nil-reversible", "R/J nil-reversible", "I∩J=0"],
            &["nil-reversible"],
            PerRingPair,
            check_subdirect,
        ),
        t(
            "prop-frac",
            "if J is a reduced ideal and R/J is nil-reversible then R is nil-reversible (annihilator equality l(a) = r(a) is tested directly for every nilpotent a)",
            &["reduced-ideal J", "R/J nil-reversible"],
            &["nil-reversible"],
            PerIdeal,
            check_frac,
        ),
        t(
            "prop-bounded-index",
            "if R is nil-reversible and J is an ideal of nilpotents of bounded index then R/J is nil-reversible",
            &["nil-reversible", "bounded-index J"],
            &["R/J nil-reversible"],
            PerIdeal,
            check_bounded_index,
        ),
        t(
            "prop-armendariz-transfer",
            "for an Armendariz ring R, R is nil-reversible iff R[x] is nil-reversible (degrees 1 and 2)",
            &["armendariz:d"],
            &["nil-reversible <=> polyring-nil-reversible:d"],
            PerRing,
            check_armendariz_transfer,
        ),
        t(
            "prop-centralarm-trunc",
            "for right principally projective R and m >= 2, R is nil-reversible iff R[x]/(x^m) is central Armendariz (forward direction checked for m = 2, 3 at degree m-1; the converse is flagged)",
            &["right-pp", "nil-reversible"],
            &["central-armendariz:(m-1) on R[x]/(x^m)"],
            PerRing,
            check_centralarm_trunc,
        ),
        t(
            "prop-coef-transfer",
            "over a nil-reversible ring, if the product f1 f2 has nilpotent coefficients then so does every product of coefficients (two factors, degree 1)",
            &["nil-reversible"],
            &["coefficient-transfer:2:1"],
            PerRing,
            check_coef_transfer,
        ),
        t(
            "prop-nilradical-eq",
            "over a nil-reversible ring, N(R[x]) = N(R)[x] (degrees 1 and 2)",
            &["nil-reversible"],
            &["nilradical-identity:d"],
            PerRing,
            check_nilradical_eq,
        ),
        t(
            "prop-nil-armendariz",
            "nil-reversible rings are nil-Armendariz (degrees 1 and 2)",
            &["nil-reversible"],
            &["nil-armendariz:d"],
            PerRing,
            check_nil_armendariz,
        ),
        t(
            "lemma-semi",
            "under the square-zero condition: xyx = 0 or xy^2 = 0 forces xy = 0, and y^2x = 0 forces yx = 0, for y nilpotent",
            &["square-zero"],
            &["lemma-products"],
            PerRing,
            check_lemma,
        ),
        t(
            "prop-semicomm-poly",
            "a semicommutative ring with the square-zero condition has nil-reversible R[x] (degrees 1 and 2)",
            &["semicommutative", "square-zero"],
            &["polyring-nil-reversible:d"],
            PerRing,
            check_semicomm_poly,
        ),
    ];
    if let Some(d) = v.iter_mut().find(|c| c.id == "prop-dorroh-adapted") {
        d.adapted = true;
    }
    v
}

pub fn reduction_notes() -> Vec<ReductionNote> {
    vec![
        ReductionNote {
            id: "prop-localization",
            statement: "R is nil-reversible iff its localization at central non-zero-divisors is",
            covered_by: "finite rings: central non-zero-divisors are units, so the localization is R itself",
        },
        ReductionNote {
            id: "cor-laurent",
            statement: "R[x] is nil-reversible iff R[x,x^-1] is nil-reversible",
            covered_by: "prop-armendariz-transfer (localization of R[x] at powers of x)",
        },
        ReductionNote {
            id: "cor-armendariz-equivalences",
            statement: "for Armendariz R: R, R[x], R[x,x^-1] nil-reversible are equivalent",
            covered_by: "prop-armendariz-transfer and cor-laurent",
        },
        ReductionNote {
            id: "cor-coef",
            statement: "over a nil-reversible ring, N(R[x]) is contained in N(R)[x]",
            covered_by: "prop-nilradical-eq",
        },
        ReductionNote {
            id: "prop-polyring-nil-armendariz",
            statement: "over a nil-reversible ring, R[x] is nil-Armendariz",
            covered_by: "prop-nil-armendariz and prop-nilradical-eq",
        },
    ]
}

/// Suite configuration. `jobs = 0` uses the global thread pool.
#[derive(Debug, Clone, Copy)]
#[derive(Default)]
pub struct SuiteOptions {
    pub limits: Limits,
    pub jobs: usize,
}


#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledRole {
    pub role: String,
    pub element: Elem,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub kind: WitnessKind,
    pub elements: Vec<LabelledRole>,
}

impl WitnessRecord {
    pub fn new(ring: &FiniteRing, w: &Witness) -> Self {
        WitnessRecord {
            kind: w.kind,
            elements: w
                .elements
                .iter()
                .map(|r| LabelledRole {
                    role: r.role.clone(),
                    element: r.element,
                    label: ring.label(r.element),
                })
                .collect(),
        }
    }
}

/// One evaluated predicate inside a witness chain. `recipe` rebuilds the
/// ring the predicate was evaluated on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub recipe: String,
    pub property: String,
    pub value: bool,
    pub bounded: Option<usize>,
    pub witness: Option<WitnessRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub unit: String,
    pub detail: String,
    pub chain: Vec<ChainLink>,
}

/// A noteworthy configuration that is not a failure.
pub type Exhibit = Failure;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkipRecord {
    pub unit: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremOutcome {
    pub id: String,
    pub statement: String,
    pub hypothesis: Vec<String>,
    pub conclusion: Vec<String>,
    pub scope: Scope,
    pub adapted: bool,
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_not_met: usize,
    pub skipped_budget: usize,
    /// Table lookups spent on predicates first needed by this check.
    pub cost: u64,
    pub failures: Vec<Failure>,
    pub not_met_units: Vec<String>,
    pub skipped: Vec<SkipRecord>,
    pub exhibits: Vec<Exhibit>,
    pub flags: Vec<Exhibit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub rings: usize,
    pub min_order: Option<usize>,
    pub max_order: Option<usize>,
    pub duplicates_removed: usize,
    pub members: Vec<ManifestLine>,
    pub skipped_recipes: Vec<SkippedRecipe>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Totals {
    pub units: usize,
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_not_met: usize,
    pub skipped_budget: usize,
    pub cost: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub limits: Limits,
    pub corpus: CorpusSummary,
    pub theorems: Vec<TheoremOutcome>,
    /// Checks whose hypothesis held on no unit of the corpus.
    pub hypothesis_never_met: Vec<String>,
    pub covered_by_reduction: Vec<ReductionNote>,
    pub searches: Vec<SearchResult>,
    pub totals: Totals,
}

impl RunReport {
    pub fn failures(&self) -> usize {
        self.totals.fail
    }
}

enum Verdict {
    Pass,
    Fail(String, Vec<ChainLink>),
    NotMet,
    Skipped(String),
}

struct Unit {
    key: String,
    verdict: Verdict,
    exhibit: Option<Exhibit>,
    flag: Option<Exhibit>,
}

/// Why a unit could not be decided: a cap or budget breach, or an error
/// that indicates a defect (reported as a failure).
enum Stop {
    Budget(String),
    Broken(String),
}

impl From<PredicateError> for Stop {
    fn from(e: PredicateError) -> Self {
        match e {
            PredicateError::BudgetExceeded { .. } => Stop::Budget(e.to_string()),
            _ => Stop::Broken(e.to_string()),
        }
    }
}

impl From<PolyError> for Stop {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Predicate(p) => p.into(),
            PolyError::ExponentCapExceeded { .. } => Stop::Budget(e.to_string()),
            _ => Stop::Broken(e.to_string()),
        }
    }
}

impl From<ConstructionError> for Stop {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::OrderCapExceeded { .. } => Stop::Budget(e.to_string()),
            _ => Stop::Broken(e.to_string()),
        }
    }
}

impl From<HarnessError> for Stop {
    fn from(e: HarnessError) -> Self {
        if e.is_budget() {
            Stop::Budget(e.to_string())
        } else {
            Stop::Broken(e.to_string())
        }
    }
}

type Eval<T> = Result<T, Stop>;

struct IdealInfo {
    ideal: Ideal,
    gens: Vec<Elem>,
    recipe: String,
    quotient_nr: PropertyReport,
    quotient: FiniteRing,
}

/// Per-ring evaluation state; predicate results are cached so every
/// property is computed at most once per ring.
pub(crate) struct Ctx<'a> {
    entry: &'a CorpusEntry,
    limits: &'a Limits,
    recipe: String,
    props: RefCell<BTreeMap<Property, Result<PropertyReport, PredicateError>>>,
    cost: Cell<u64>,
    ideals: OnceCell<Result<Vec<IdealInfo>, String>>,
}

impl<'a> Ctx<'a> {
    pub(crate) fn new(entry: &'a CorpusEntry, limits: &'a Limits) -> Self {
        Ctx {
            entry,
            limits,
            recipe: entry.recipe.to_string(),
            props: RefCell::new(BTreeMap::new()),
            cost: Cell::new(0),
            ideals: OnceCell::new(),
        }
    }

    pub(crate) fn ring(&self) -> &'a FiniteRing {
        &self.entry.ring
    }

    fn id(&self) -> &'a str {
        &self.entry.id
    }

    fn charge(&self, rep: &PropertyReport) {
        self.cost.set(self.cost.get() + rep.cost);
    }

    pub(crate) fn report(&self, p: Property) -> Result<PropertyReport, PredicateError> {
        if let Some(r) = self.props.borrow().get(&p) {
            return r.clone();
        }
        let r = p.evaluate(self.ring(), self.limits);
        if let Ok(rep) = &r {
            self.charge(rep);
        }
        self.props.borrow_mut().insert(p, r.clone());
        r
    }

    fn link(&self, p: Property) -> Eval<ChainLink> {
        Ok(link_on(&self.recipe, self.ring(), &self.report(p)?))
    }

    fn derived_link(&self, recipe: &str, ring: &FiniteRing, rep: &PropertyReport) -> ChainLink {
        self.charge(rep);
        link_on(recipe, ring, rep)
    }

    fn ideals(&self) -> Result<&Vec<IdealInfo>, String> {
        self.ideals
            .get_or_init(|| {
                let r = self.ring();
                let all = enumerate_ideals(r, IdealEnumeration::Generators { cap: self.limits.ideal_cap })
                    .map_err(|e| e.to_string())?;
                all.into_iter()
                    .map(|ideal| {
                        let gens = generating_set(r, &ideal);
                        let q = quotient_ring(r, &ideal).map_err(|e| e.to_string())?;
                        let list = gens.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                        let recipe = format!("quotient({},[{list}])", self.recipe);
                        let quotient_nr = is_nil_reversible(&q.ring);
                        self.charge(&quotient_nr);
                        Ok(IdealInfo {
                            ideal,
                            gens,
                            recipe,
                            quotient_nr,
                            quotient: q.ring,
                        })
                    })
                    .collect()
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn unit(&self, suffix: Option<String>, verdict: Eval<Verdict>) -> Unit {
        let key = match suffix {
            Some(s) => format!("{} {}", self.id(), s),
            None => self.id().to_string(),
        };
        let verdict = match verdict {
            Ok(v) => v,
            Err(Stop::Budget(r)) => Verdict::Skipped(r),
            Err(Stop::Broken(r)) => Verdict::Fail(format!("evaluation error: {r}"), Vec::new()),
        };
        Unit {
            key,
            verdict,
            exhibit: None,
            flag: None,
        }
    }
}

fn link_on(recipe: &str, ring: &FiniteRing, rep: &PropertyReport) -> ChainLink {
    ChainLink {
        recipe: recipe.to_string(),
        property: rep.property.clone(),
        value: rep.value,
        bounded: rep.bounded,
        witness: rep.witness.as_ref().map(|w| WitnessRecord::new(ring, w)),
    }
}

/// Least generators: ascending members not yet in the ideal generated by
/// the earlier ones.
fn generating_set(r: &FiniteRing, ideal: &Ideal) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = ideal_generated_by(r, &[]).expect("zero ideal");
    for a in ideal.members().iter() {
        if !span.contains(a) {
            gens.push(a);
            span = ideal_generated_by(r, &gens).expect("generated ideal");
        }
    }
    gens
}

type Lazy<'c> = Box<dyn FnOnce() -> Eval<ChainLink> + 'c>;

/// Evaluates hypotheses in order, stopping at the first false one; then
/// every conclusion.
fn gated(hyps: Vec<Lazy>, concls: Vec<Lazy>) -> Eval<Verdict> {
    let mut chain = Vec::new();
    for h in hyps {
        let l = h()?;
        if !l.value {
            return Ok(Verdict::NotMet);
        }
        chain.push(l);
    }
    let mut failed = Vec::new();
    for c in concls {
        let l = c()?;
        if !l.value {
            failed.push(l.property.clone());
        }
        chain.push(l);
    }
    if failed.is_empty() {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail(format!("conclusion failed: {}", failed.join(", ")), chain))
    }
}

fn p<'c>(ctx: &'c Ctx, prop: Property) -> Lazy<'c> {
    Box::new(move || ctx.link(prop))
}

fn per_ring(ctx: &Ctx, hyps: &[Property], concls: &[Property]) -> Vec<Unit> {
    let v = gated(
        hyps.iter().map(|&h| p(ctx, h)).collect(),
        concls.iter().map(|&c| p(ctx, c)).collect(),
    );
    vec![ctx.unit(None, v)]
}

fn check_a2w(ctx: &Ctx) -> Vec<Unit> {
    use Property::*;
    per_ring(ctx, &[NilReversible], &[Abelian, TwoPrimal, WeaklySemicommutative])
}

fn check_red_pp(ctx: &Ctx) -> Vec<Unit> {
    let either = Box::new(|| {
        let r = ctx.link(Property::RightPp)?;
        if r.value {
            return Ok(r);
        }
        ctx.link(Property::LeftPp)
    });
    let v = gated(vec![p(ctx, Property::NilReversible), either], vec![p(ctx, Property::Reduced)]);
    vec![ctx.unit(None, v)]
}

fn check_red_semiprime(ctx: &Ctx) -> Vec<Unit> {
    use Property::*;
    per_ring(ctx, &[NilReversible, Semiprime], &[Reduced])
}

fn check_sq(ctx: &Ctx) -> Vec<Unit> {
    per_ring(ctx, &[Property::SquareZero], &[Property::NilReversible])
}

fn check_unitcentral(ctx: &Ctx) -> Vec<Unit> {
    per_ring(ctx, &[Property::UnitCentral], &[Property::NilReversible])
}

fn check_centralrev(ctx: &Ctx) -> Vec<Unit> {
    let nz = Box::new(|| {
        let r = ctx.ring();
        let w = r
            .center()
            .iter()
            .find(|&a| a != r.zero() && r.is_nilpotent(a))
            .map(|a| WitnessRecord::new(r, &Witness::new(WitnessKind::NonzeroNilpotent, &[("a", a)])));
        Ok(ChainLink {
            recipe: ctx.recipe.clone(),
            property: "central-nilpotents-zero".into(),
            value: w.is_none(),
            bounded: None,
            witness: w,
        })
    });
    let v = gated(vec![p(ctx, Property::CentralReversible), nz], vec![p(ctx, Property::NilReversible)]);
    vec![ctx.unit(None, v)]
}

fn check_def_chain(ctx: &Ctx) -> Vec<Unit> {
    use Property::*;
    let pairs = [
        (Reduced, Reversible),
        (Reversible, NilReversible),
        (Semicommutative, WeaklySemicommutative),
        (TwoPrimal, Ni),
        (Abelian, DirectlyFinite),
    ];
    let v = (|| {
        let mut chain = Vec::new();
        let mut failed = Vec::new();
        for (a, b) in pairs {
            let la = ctx.link(a)?;
            if la.value {
                let lb = ctx.link(b)?;
                if !lb.value {
                    failed.push(format!("{a}=>{b}"));
                    chain.push(la);
                    chain.push(lb);
                }
            }
        }
        let df = ctx.link(DirectlyFinite)?;
        if !df.value {
            failed.push("directly-finite".into());
            chain.push(df);
        }
        Ok(if failed.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(format!("conclusion failed: {}", failed.join(", ")), chain)
        })
    })();
    vec![ctx.unit(None, v)]
}

/// Elements of the subring generated by `1` and `a`: the additive span of
/// the powers of `a`.
fn subring_generated(r: &FiniteRing, a: Elem) -> Vec<Elem> {
    let mut powers = vec![r.one()];
    let mut seen = vec![false; r.order()];
    seen[r.one()] = true;
    let mut x = r.mul(a, r.one());
    while !seen[x] {
        seen[x] = true;
        powers.push(x);
        x = r.mul(x, a);
    }
    let mut inside = vec![false; r.order()];
    inside[r.zero()] = true;
    let mut members = vec![r.zero()];
    for g in powers {
        if inside[g] {
            continue;
        }
        // Add all multiples of g to the current span.
        let old = members.clone();
        let mut m = g;
        loop {
            for &y in &old {
                let s = r.add(y, m);
                if !inside[s] {
                    inside[s] = true;
                    members.push(s);
                }
            }
            m = r.add(m, g);
            if m == r.zero() {
                break;
            }
        }
    }
    members.sort_unstable();
    members
}

fn check_subrings(ctx: &Ctx) -> Vec<Unit> {
    let r = ctx.ring();
    let v = (|| {
        if !ctx.link(Property::NilReversible)?.value {
            return Ok(Verdict::NotMet);
        }
        let z = r.zero();
        let mut done: Vec<Vec<Elem>> = Vec::new();
        for a in r.elements() {
            let s = subring_generated(r, a);
            if done.contains(&s) {
                continue;
            }
            let mut lookups = 0u64;
            let bad = s.iter().filter(|&&x| r.is_nilpotent(x)).find_map(|&x| {
                lookups += 2 * s.len() as u64;
                s.iter()
                    .find(|&&y| (r.mul(x, y) == z) != (r.mul(y, x) == z))
                    .map(|&y| (x, y))
            });
            ctx.cost.set(ctx.cost.get() + lookups);
            if let Some((x, y)) = bad {
                let w = Witness::new(WitnessKind::AnnihilatorAsymmetry, &[("a", x), ("b", y), ("generator", a)]);
                let link = ChainLink {
                    recipe: ctx.recipe.clone(),
                    property: format!("subring<1,{a}> nil-reversible"),
                    value: false,
                    bounded: None,
                    witness: Some(WitnessRecord::new(r, &w)),
                };
                return Ok(Verdict::Fail("conclusion failed: subring nil-reversible".into(), vec![
                    ctx.link(Property::NilReversible)?,
                    link,
                ]));
            }
            done.push(s);
        }
        Ok(Verdict::Pass)
    })();
    vec![ctx.unit(None, v)]
}

fn check_trivext(ctx: &Ctx) -> Vec<Unit> {
    let r = ctx.ring();
    let recipe = format!("trivext({})", ctx.recipe);
    let t = Box::new(|| {
        let t = trivial_extension(r, ctx.limits.order_cap)?;
        let rep = is_nil_reversible(&t);
        Ok(ctx.derived_link(&recipe, &t, &rep))
    });
    let v = gated(vec![t], vec![p(ctx, Property::Reversible)]);
    vec![ctx.unit(None, v)]
}

fn check_dorroh(ctx: &Ctx) -> Vec<Unit> {
    let r = ctx.ring();
    let m = r.characteristic();
    let recipe = format!("dorroh(rng({}),{m})", ctx.recipe);
    let d = Box::new(|| {
        let d = dorroh_extension(&Rng::from_ring(r), m, ctx.limits.order_cap)?;
        let rep = is_nil_reversible(&d);
        Ok(ctx.derived_link(&recipe, &d, &rep))
    });
    let v = gated(vec![p(ctx, Property::NilReversible)], vec![d]);
    vec![ctx.unit(None, v)]
}

fn ideal_key(info: &IdealInfo) -> String {
    let gens = info.gens.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    format!("J=<{gens}>")
}

fn quotient_link(info: &IdealInfo) -> ChainLink {
    link_on(&info.recipe, &info.quotient, &info.quotient_nr)
}

fn ideal_link(ctx: &Ctx, info: &IdealInfo, prop: Property) -> Eval<ChainLink> {
    let rep = ideal_predicate(ctx.ring(), &info.ideal, prop)?;
    let mut l = ctx.derived_link(&ctx.recipe, ctx.ring(), &rep);
    l.property = format!("{} {}", prop, ideal_key(info));
    Ok(l)
}

fn with_ideals(ctx: &Ctx, f: impl Fn(&IdealInfo) -> Unit) -> Vec<Unit> {
    match ctx.ideals() {
        Ok(all) => all.iter().map(f).collect(),
        Err(e) => {
            let mut u = ctx.unit(None, Err(Stop::Budget(format!("ideal enumeration: {e}"))));
            if !e.contains("exceeds the configured cap") {
                u.verdict = Verdict::Fail(format!("ideal enumeration failed: {e}"), Vec::new());
            }
            vec![u]
        }
    }
}

fn check_frac(ctx: &Ctx) -> Vec<Unit> {
    with_ideals(ctx, |info| {
        let v = gated(
            vec![
                Box::new(|| ideal_link(ctx, info, Property::ReducedIdeal)),
                Box::new(|| Ok(quotient_link(info))),
            ],
            vec![p(ctx, Property::NilReversible)],
        );
        let mut u = ctx.unit(Some(ideal_key(info)), v);
        // J not reduced, R/J nil-reversible, R not nil-reversible: the
        // reducedness hypothesis cannot be dropped.
        if matches!(u.verdict, Verdict::NotMet) && info.quotient_nr.value {
            if let (Ok(red), Ok(nr)) = (ideal_link(ctx, info, Property::ReducedIdeal), ctx.link(Property::NilReversible)) {
                if !red.value && !nr.value {
                    u.exhibit = Some(Exhibit {
                        unit: u.key.clone(),
                        detail: "J is not reduced, R/J is nil-reversible and R is not: the reducedness hypothesis is necessary".into(),
                        chain: vec![red, quotient_link(info), nr],
                    });
                }
            }
        }
        u
    })
}

fn check_bounded_index(ctx: &Ctx) -> Vec<Unit> {
    with_ideals(ctx, |info| {
        let v = gated(
            vec![
                p(ctx, Property::NilReversible),
                Box::new(|| ideal_link(ctx, info, Property::BoundedIndex)),
            ],
            vec![Box::new(|| Ok(quotient_link(info)))],
        );
        ctx.unit(Some(ideal_key(info)), v)
    })
}

fn check_subdirect(ctx: &Ctx) -> Vec<Unit> {
    let all = match ctx.ideals() {
        Ok(all) => all,
        Err(_) => return with_ideals(ctx, |_| unreachable!()),
    };
    let proper: Vec<&IdealInfo> = all
        .iter()
        .filter(|i| !i.ideal.is_zero() && !i.ideal.is_whole())
        .collect();
    let mut units = Vec::new();
    for (k, a) in proper.iter().enumerate() {
        for b in &proper[k + 1..] {
            if !a.ideal.intersection(&b.ideal).is_zero() {
                continue;
            }
            let v = gated(
                vec![Box::new(|| Ok(quotient_link(a))), Box::new(|| Ok(quotient_link(b)))],
                vec![p(ctx, Property::NilReversible)],
            );
            let key = format!("{} & {}", ideal_key(a), ideal_key(b).replacen("J=", "I=", 1));
            units.push(ctx.unit(Some(key), v));
        }
    }
    if units.is_empty() {
        let mut u = ctx.unit(None, Ok(Verdict::NotMet));
        u.key = format!("{} (no pair of nonzero proper ideals with zero intersection)", ctx.id());
        units.push(u);
    }
    units
}

fn poly_link(ctx: &Ctx, res: Result<PropertyReport, PolyError>) -> Eval<ChainLink> {
    let rep = res?;
    Ok(ctx.derived_link(&ctx.recipe, ctx.ring(), &rep))
}

fn check_armendariz_transfer(ctx: &Ctx) -> Vec<Unit> {
    [1, 2]
        .into_iter()
        .map(|d| {
            let v = (|| {
                let hyp = ctx.link(Property::Armendariz(d))?;
                if !hyp.value {
                    return Ok(Verdict::NotMet);
                }
                let nr = ctx.link(Property::NilReversible)?;
                let mut poly = poly_link(ctx, polyring_nil_reversible_bounded(ctx.ring(), d, ctx.limits))?;
                let agree = nr.value == poly.value;
                let chain = vec![hyp, nr, poly.clone()];
                Ok(if agree {
                    Verdict::Pass
                } else {
                    poly.property = format!("nil-reversible <=> polyring-nil-reversible:{d}");
                    Verdict::Fail(format!("conclusion failed: {}", poly.property), chain)
                })
            })();
            ctx.unit(Some(format!("d={d}")), v)
        })
        .collect()
}

const FLAG_PROBE_BUDGET: u64 = 1 << 20;

fn check_centralarm_trunc(ctx: &Ctx) -> Vec<Unit> {
    let r = ctx.ring();
    [2usize, 3]
        .into_iter()
        .map(|m| {
            let recipe = format!("polytrunc({},{m})", ctx.recipe);
            let trunc_within = |limits: &Limits| -> Eval<ChainLink> {
                // Fail on the sweep budget before tabulating a large truncation.
                check_budget(nominal(r.order(), 2 * m * m), limits)?;
                let t = truncated_poly_ring(r, m, None, limits.order_cap)?;
                let rep = armendariz_bounded(&t, ArmendarizKind::Central, m - 1, limits)?;
                Ok(ctx.derived_link(&recipe, &t, &rep))
            };
            let trunc = || trunc_within(ctx.limits);
            let v = gated(
                vec![p(ctx, Property::RightPp), p(ctx, Property::NilReversible)],
                vec![Box::new(trunc)],
            );
            let mut u = ctx.unit(Some(format!("m={m}")), v);
            if matches!(u.verdict, Verdict::NotMet) {
                if let (Ok(red), Ok(pp)) = (ctx.link(Property::Reduced), ctx.link(Property::RightPp)) {
                    if !red.value {
                        // The converse probe is informational; keep it cheap.
                        let probe = Limits {
                            poly_budget: ctx.limits.poly_budget.min(FLAG_PROBE_BUDGET),
                            ..*ctx.limits
                        };
                        if let Ok(t) = trunc_within(&probe) {
                            if t.value {
                                u.flag = Some(Exhibit {
                                    unit: u.key.clone(),
                                    detail: format!(
                                        "truncation is central-Armendariz up to degree {} but R is not reduced (right-pp: {})",
                                        m - 1,
                                        pp.value
                                    ),
                                    chain: vec![pp, red, t],
                                });
                            }
                        }
                    }
                }
            }
            u
        })
        .collect()
}

fn check_coef_transfer(ctx: &Ctx) -> Vec<Unit> {
    let v = gated(
        vec![p(ctx, Property::NilReversible)],
        vec![Box::new(|| poly_link(ctx, check_coefficient_nil_transfer(ctx.ring(), 2, 1, ctx.limits)))],
    );
    vec![ctx.unit(None, v)]
}

fn check_nilradical_eq(ctx: &Ctx) -> Vec<Unit> {
    [1, 2]
        .into_iter()
        .map(|d| {
            let v = gated(
                vec![p(ctx, Property::NilReversible)],
                vec![Box::new(move || poly_link(ctx, check_nilradical_identity(ctx.ring(), d, ctx.limits)))],
            );
            ctx.unit(Some(format!("d={d}")), v)
        })
        .collect()
}

fn check_nil_armendariz(ctx: &Ctx) -> Vec<Unit> {
    [1, 2]
        .into_iter()
        .map(|d| {
            let v = gated(vec![p(ctx, Property::NilReversible)], vec![p(ctx, Property::NilArmendariz(d))]);
            ctx.unit(Some(format!("d={d}")), v)
        })
        .collect()
}

fn check_lemma(ctx: &Ctx) -> Vec<Unit> {
    let v = gated(
        vec![p(ctx, Property::SquareZero)],
        vec![Box::new(|| poly_link(ctx, check_lemma_products(ctx.ring())))],
    );
    vec![ctx.unit(None, v)]
}

fn check_semicomm_poly(ctx: &Ctx) -> Vec<Unit> {
    [1, 2]
        .into_iter()
        .map(|d| {
            let v = gated(
                vec![p(ctx, Property::Semicommutative), p(ctx, Property::SquareZero)],
                vec![Box::new(move || poly_link(ctx, polyring_nil_reversible_bounded(ctx.ring(), d, ctx.limits)))],
            );
            ctx.unit(Some(format!("d={d}")), v)
        })
        .collect()
}

struct RingResult {
    units: Vec<Vec<Unit>>,
    costs: Vec<u64>,
    hits: Vec<search::RingHit>,
}

fn evaluate_ring(entry: &CorpusEntry, checks: &[TheoremCheck], queries: &[SearchQuery], limits: &Limits) -> RingResult {
    let ctx = Ctx::new(entry, limits);
    let mut units = Vec::with_capacity(checks.len());
    let mut costs = Vec::with_capacity(checks.len());
    for c in checks {
        let before = ctx.cost.get();
        units.push((c.run)(&ctx));
        costs.push(ctx.cost.get() - before);
    }
    let hits = queries.iter().map(|q| search::evaluate(&ctx, q)).collect();
    RingResult { units, costs, hits }
}

/// The searches every suite run records.
pub(crate) fn default_queries() -> Vec<SearchQuery> {
    let q = |req: &[&str], forbid: &[&str]| SearchQuery::parse(req, forbid).expect("valid property names");
    vec![
        q(&["2-primal"], &["nil-reversible"]),
        q(&[], &["armendariz:1"]),
        q(&["abelian"], &["nil-reversible"]),
        q(&["nil-reversible"], &["reversible"]),
        q(&["nil-reversible"], &["unit-central"]),
        q(&["reduced"], &["reversible"]),
        q(&["weakly-semicommutative"], &["nil-reversible"]),
    ]
}

/// Runs every check on every corpus ring. Rings are independent work units
/// evaluated in parallel; results are merged in corpus order, so the report
/// does not depend on the number of workers.
pub fn run_theorem_suite(corpus: &Corpus, checks: &[TheoremCheck], options: &SuiteOptions) -> RunReport {
    let queries = default_queries();
    let limits = options.limits;
    let work = || -> Vec<RingResult> {
        corpus
            .entries
            .par_iter()
            .map(|e| evaluate_ring(e, checks, &queries, &limits))
            .collect()
    };
    let results = if options.jobs == 0 {
        work()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(options.jobs).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        }
    };

    let mut outcomes: Vec<TheoremOutcome> = checks
        .iter()
        .map(|c| TheoremOutcome {
            id: c.id.to_string(),
            statement: c.statement.to_string(),
            hypothesis: c.hypothesis.clone(),
            conclusion: c.conclusion.clone(),
            scope: c.scope,
            adapted: c.adapted,
            pass: 0,
            fail: 0,
            hypothesis_not_met: 0,
            skipped_budget: 0,
            cost: 0,
            failures: Vec::new(),
            not_met_units: Vec::new(),
            skipped: Vec::new(),
            exhibits: Vec::new(),
            flags: Vec::new(),
        })
        .collect();
    let mut totals = Totals::default();
    for res in &results {
        for (k, units) in res.units.iter().enumerate() {
            let o = &mut outcomes[k];
            o.cost += res.costs[k];
            for u in units {
                match &u.verdict {
                    Verdict::Pass => o.pass += 1,
                    Verdict::Fail(detail, chain) => {
                        o.fail += 1;
                        o.failures.push(Failure {
                            unit: u.key.clone(),
                            detail: detail.clone(),
                            chain: chain.clone(),
                        });
                    }
                    Verdict::NotMet => {
                        o.hypothesis_not_met += 1;
                        o.not_met_units.push(u.key.clone());
                    }
                    Verdict::Skipped(reason) => {
                        o.skipped_budget += 1;
                        o.skipped.push(SkipRecord {
                            unit: u.key.clone(),
                            reason: reason.clone(),
                        });
                    }
                }
                o.exhibits.extend(u.exhibit.clone());
                o.flags.extend(u.flag.clone());
            }
        }
    }
    for o in &outcomes {
        totals.pass += o.pass;
        totals.fail += o.fail;
        totals.hypothesis_not_met += o.hypothesis_not_met;
        totals.skipped_budget += o.skipped_budget;
        totals.cost += o.cost;
    }
    totals.units = totals.pass + totals.fail + totals.hypothesis_not_met + totals.skipped_budget;
    let hypothesis_never_met = outcomes
        .iter()
        .filter(|o| o.pass + o.fail == 0 && o.hypothesis_not_met > 0)
        .map(|o| o.id.clone())
        .collect();
    let searches = queries
        .iter()
        .enumerate()
        .map(|(k, q)| search::merge(corpus, q, results.iter().map(|r| &r.hits[k])))
        .collect();
    let orders = corpus.entries.iter().map(|e| e.ring.order());
    RunReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        limits,
        corpus: CorpusSummary {
            rings: corpus.len(),
            min_order: orders.clone().min(),
            max_order: orders.max(),
            duplicates_removed: corpus.duplicates,
            members: corpus.manifest_lines(),
            skipped_recipes: corpus.skipped.clone(),
        },
        theorems: outcomes,
        hypothesis_never_met,
        covered_by_reduction: reduction_notes(),
        searches,
        totals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, zmod, MatrixShape};
    use crate::harness::corpus::Recipe;

    #[test]
    fn subring_sampler_matches_closure() {
        let u = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap();
        for a in u.elements() {
            let s = subring_generated(&u, a);
            // Closed under + and ·, contains 1 and a.
            assert!(s.contains(&u.one()) && s.contains(&a));
            for &x in &s {
                for &y in &s {
                    assert!(s.contains(&u.add(x, y)) && s.contains(&u.mul(x, y)));
                }
            }
        }
        assert_eq!(subring_generated(&zmod(6).unwrap(), 0), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn generating_sets_regenerate() {
        let r = Recipe::Cong2(Box::new(Recipe::Zmod(4))).build(&Limits::default()).unwrap();
        for i in enumerate_ideals(&r, IdealEnumeration::Generators { cap: 64 }).unwrap() {
            let g = generating_set(&r, &i);
            assert_eq!(ideal_generated_by(&r, &g).unwrap(), i);
        }
    }
}
