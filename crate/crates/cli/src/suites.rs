//! Seeded property suites. Each suite draws random instances from its own
//! stream, so suites can run alone or together with identical results.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use dendrotensor::level::{forget_levels, omega_mor, omega_obj, retract_witness, SimplicialOperator};
use dendrotensor::lurie::{
    check_defect, check_fibrous, d3_check, free_algebra, gen_hom_count, segal_d1_check, verify_chain_bijection,
    verify_naturality, Defect, FiniteOperad, FreeForestOperad,
};
use dendrotensor::omega::{compose, validate, OperadMap};
use dendrotensor::random::{random_forest, random_operator, random_simplex, random_tree};
use dendrotensor::shuffle::{
    assoc_inclusion, inclusion, interior_decomposition, intersect, is_inner_face, max_product, shuffle_count, shuffles,
    stump_transport, stumped_factors, Bracketing, Shuffle, TupleEdge,
};
use dendrotensor::{Forest, Tree};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::oracle::{free_algebra_orbits, interleavings, orbit_min};

/// Largest `|Hom(o(-), P)|` a suite will enumerate; bigger draws are resampled.
pub const HOM_CAP: u128 = 5_000;
/// Largest number of shuffles a suite will enumerate.
pub const SHUFFLE_CAP: u128 = 300;
const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides every suite's tree size bound.
    pub max_edges: Option<usize>,
    /// Overrides the width bound of random simplices.
    pub max_levels: Option<usize>,
    /// Overrides the length bound of random simplices.
    pub max_length: Option<usize>,
    pub truncation: usize,
    pub stump_probability: f64,
    /// Overrides every suite's instance count.
    pub instances: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            max_edges: None,
            max_levels: None,
            max_length: None,
            truncation: 4,
            stump_probability: dendrotensor::random::DEFAULT_STUMP_PROBABILITY,
            instances: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), String> {
        let bounds = [("max-edges", self.max_edges), ("max-levels", self.max_levels), ("max-length", self.max_length)];
        for (name, v) in bounds {
            if v == Some(0) {
                return Err(format!("--{name} must be at least 1"));
            }
        }
        if self.truncation == 0 {
            return Err("--truncation must be at least 1".into());
        }
        if !(0.0..1.0).contains(&self.stump_probability) {
            return Err("stump probability must lie in [0, 1)".into());
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Functoriality,
    Retract,
    Segal,
    D3,
    Nerve,
    Fibrous,
    Shuffles,
    Assoc,
    Interior,
    Freealg,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Functoriality,
        Suite::Retract,
        Suite::Segal,
        Suite::D3,
        Suite::Nerve,
        Suite::Fibrous,
        Suite::Shuffles,
        Suite::Assoc,
        Suite::Interior,
        Suite::Freealg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Functoriality => "functoriality",
            Suite::Retract => "retract",
            Suite::Segal => "segal",
            Suite::D3 => "d3",
            Suite::Nerve => "nerve",
            Suite::Fibrous => "fibrous",
            Suite::Shuffles => "shuffles",
            Suite::Assoc => "assoc",
            Suite::Interior => "interior",
            Suite::Freealg => "freealg",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    fn default_instances(self) -> usize {
        match self {
            Suite::Functoriality => 200,
            Suite::D3 | Suite::Assoc => 50,
            Suite::Fibrous => 25,
            _ => 100,
        }
    }

    fn default_edges(self) -> usize {
        match self {
            Suite::Retract => 10,
            Suite::Segal => 7,
            Suite::D3 | Suite::Nerve => 8,
            Suite::Fibrous | Suite::Assoc => 4,
            Suite::Shuffles | Suite::Interior | Suite::Freealg => 5,
            Suite::Functoriality => 0,
        }
    }

    /// A fixed salt so each suite has its own random stream.
    fn salt(self) -> u64 {
        self.name().bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub instance: usize,
    pub check: String,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub checks: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    /// Kept out of the serialized report so that reports are reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            instances: 0,
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    fn check(&mut self, instance: usize, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure { instance, check: name.to_string(), witness: witness() });
        }
    }

    fn fail(&mut self, instance: usize, name: &str, witness: impl fmt::Display) {
        self.check(instance, name, false, || witness.to_string());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub suites: Vec<SuiteReport>,
    pub failures: usize,
    pub status: &'static str,
}

impl Report {
    pub fn new(config: SuiteConfig, suites: Vec<SuiteReport>) -> Report {
        let failures = suites.iter().map(|s| s.failures.len()).sum();
        Report { config, suites, failures, status: if failures == 0 { "pass" } else { "fail" } }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn wall_time(&self) -> Duration {
        self.suites.iter().map(|s| s.wall_time).sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("{:<14} {status}  {} instances, {} checks\n", s.suite, s.instances, s.checks));
            for n in &s.notes {
                out.push_str(&format!("    {n}\n"));
            }
            for f in &s.failures {
                out.push_str(&format!("    instance {} {}: {}\n", f.instance, f.check, f.witness));
            }
        }
        out.push_str(&format!("{} failures\n", self.failures));
        out
    }
}

pub fn run_suites(suites: &[Suite], config: &SuiteConfig) -> Report {
    Report::new(config.clone(), suites.iter().map(|&s| run_suite(s, config)).collect())
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let mut ctx = Ctx {
        rng: ChaCha8Rng::seed_from_u64(config.seed ^ suite.salt()),
        count: config.instances.unwrap_or(suite.default_instances()),
        edges: config.max_edges.unwrap_or(suite.default_edges()).max(1),
        config,
        report: SuiteReport::new(suite.name()),
    };
    match suite {
        Suite::Functoriality => functoriality(&mut ctx),
        Suite::Retract => retract(&mut ctx),
        Suite::Segal => segal(&mut ctx),
        Suite::D3 => d3(&mut ctx),
        Suite::Nerve => nerve(&mut ctx),
        Suite::Fibrous => fibrous(&mut ctx),
        Suite::Shuffles => shuffle_laws(&mut ctx),
        Suite::Assoc => assoc(&mut ctx),
        Suite::Interior => interior(&mut ctx),
        Suite::Freealg => freealg(&mut ctx),
    }
    ctx.report.instances = ctx.count;
    ctx.report.wall_time = start.elapsed();
    ctx.report
}

/// Runs the fibrous checks on a deliberately broken ℓ(P); every violation is
/// reported as a failure.
pub fn run_defect(defect: Defect, config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let name = serde_json::to_value(defect).expect("unit variant");
    let mut report = SuiteReport::new(&format!("fibrous-defect:{}", name.as_str().unwrap_or("?")));
    let p = fixture_operad();
    let r = check_defect(&p, defect, config.truncation);
    report.instances = 1;
    for (axiom, res) in [("fib1", &r.fib1), ("fib2", &r.fib2), ("fib3", &r.fib3)] {
        report.checks += res.checked;
        for w in &res.witnesses {
            report.failures.push(Failure { instance: 0, check: axiom.into(), witness: w.clone() });
        }
    }
    report.notes.push(r.summary());
    report.wall_time = start.elapsed();
    report
}

fn fixture_operad() -> FreeForestOperad {
    FreeForestOperad::new(Forest::from("r[a,b]".parse::<Tree>().expect("fixture")))
}

struct Ctx<'a> {
    rng: ChaCha8Rng,
    count: usize,
    edges: usize,
    config: &'a SuiteConfig,
    report: SuiteReport,
}

impl Ctx<'_> {
    fn sp(&self) -> f64 {
        self.config.stump_probability
    }

    fn tree(&mut self, max_edges: usize, prefix: &str) -> Tree {
        let sp = self.sp();
        random_tree(&mut self.rng, max_edges, sp, prefix)
    }

    fn forest(&mut self, max_edges: usize, components: usize, prefix: &str) -> Forest {
        let sp = self.sp();
        random_forest(&mut self.rng, max_edges, components, sp, prefix)
    }

    /// Draws until `f` accepts, giving up after [`MAX_ATTEMPTS`].
    fn sample<T>(&mut self, instance: usize, what: &str, mut f: impl FnMut(&mut Self) -> Option<T>) -> Option<T> {
        for _ in 0..MAX_ATTEMPTS {
            if let Some(x) = f(self) {
                return Some(x);
            }
        }
        self.report.fail(instance, "sampling", format!("no acceptable {what} in {MAX_ATTEMPTS} draws"));
        None
    }
}

fn functoriality(ctx: &mut Ctx) {
    let width = ctx.config.max_levels.unwrap_or(5);
    let length = ctx.config.max_length.unwrap_or(4);
    for i in 0..ctx.count {
        let a = random_simplex(&mut ctx.rng, width, length);
        let phi = random_operator(&mut ctx.rng, a.top(), length);
        let psi = random_operator(&mut ctx.rng, phi.source(), length);
        let witness = || format!("A = {}, φ = {:?}, ψ = {:?}", a.to_json(), phi.values(), psi.values());
        let w = Arc::new(omega_obj(&a));
        let id = omega_mor(&SimplicialOperator::identity(a.top()), &a);
        ctx.report.check(i, "identity", id.as_ref().ok() == Some(&OperadMap::identity(w)), witness);
        let outcome = (|| {
            let outer = omega_mor(&phi, &a)?;
            let inner = omega_mor(&psi, &a.restrict(&phi)?)?;
            let whole = omega_mor(&phi.after(&psi)?, &a)?;
            Ok::<_, dendrotensor::Error>((
                validate(&outer).is_ok() && validate(&inner).is_ok(),
                whole == compose(&inner, &outer)?,
            ))
        })();
        match outcome {
            Ok((valid, composes)) => {
                ctx.report.check(i, "validate", valid, witness);
                ctx.report.check(i, "composition", composes, witness);
            }
            Err(e) => ctx.report.fail(i, "composition", format!("{e}; {}", witness())),
        }
    }
}

fn size_note(what: &str, sizes: &[usize]) -> String {
    let max = sizes.iter().max().copied().unwrap_or(0);
    let total: usize = sizes.iter().sum();
    format!("{what}: max {max}, total {total}")
}

fn sorted_components(f: &Forest) -> Vec<Tree> {
    let mut v = f.components().to_vec();
    v.sort();
    v
}

fn retract(ctx: &mut Ctx) {
    let edges = ctx.edges;
    for i in 0..ctx.count {
        let f = ctx.forest(edges, 3, "e");
        let w = match retract_witness(&f) {
            Ok(w) => w,
            Err(e) => {
                ctx.report.fail(i, "witness", format!("{f}: {e}"));
                continue;
            }
        };
        let valid = validate(&w.section).is_ok() && validate(&w.retraction).is_ok();
        ctx.report.check(i, "validate", valid, || f.to_string());
        let rs = compose(&w.section, &w.retraction);
        let ok = rs.as_ref().ok() == Some(&OperadMap::identity(Arc::new(f.clone())));
        ctx.report.check(i, "r∘s = id", ok, || f.to_string());
        let unlabelled = forget_levels(&omega_obj(&w.simplex));
        let iso = unlabelled.map(|u| sorted_components(&u) == sorted_components(&w.padded)).unwrap_or(false);
        ctx.report.check(i, "ω(A) ≅ padded", iso, || format!("{f} padded to {}", w.padded));
    }
}

fn segal(ctx: &mut Ctx) {
    let edges = ctx.edges;
    let mut stump_cuts = 0;
    let mut sizes = Vec::new();
    for i in 0..ctx.count {
        let want_stump = i % 4 == 0;
        let Some((t, b)) = ctx.sample(i, "tree with an inner edge", |c| {
            let t = c.tree(edges, "t");
            let candidates: Vec<_> = if want_stump {
                t.inner_edges().into_iter().filter(|e| t.is_stump_edge(e)).collect()
            } else {
                t.inner_edges().into_iter().collect()
            };
            let b = candidates.choose(&mut c.rng).cloned()?;
            Some((t, b))
        }) else {
            continue;
        };
        let Some(p) = ctx.sample(i, "target operad", |c| {
            let g = c.tree(edges, "g");
            let p = FreeForestOperad::new(Forest::from(g));
            let n = gen_hom_count(&Forest::from(t.clone()), &p);
            (n <= HOM_CAP && (n > 0 || i % 10 == 9)).then_some(p)
        }) else {
            continue;
        };
        if t.is_stump_edge(&b) {
            stump_cuts += 1;
        }
        match segal_d1_check(&p, &t, &b) {
            Ok(r) => ctx.report.check(i, "fiber product", r.ok.then(|| sizes.push(r.whole)).is_some(), || {
                format!("T = {t}, b = {b}, P = o({}): {} vs {}; {:?}", p.forest(), r.whole, r.parts, r.witness)
            }),
            Err(e) => ctx.report.fail(i, "fiber product", format!("T = {t}, b = {b}: {e}")),
        }
    }
    ctx.report.notes.push(format!("{stump_cuts} instances cut directly below a stump"));
    ctx.report.notes.push(size_note("maps per instance", &sizes));
}

fn d3(ctx: &mut Ctx) {
    let edges = ctx.edges;
    let mut sizes = Vec::new();
    for i in 0..ctx.count {
        let Some((f, p)) = ctx.sample(i, "forest and target operad", |c| {
            let f = if i == 0 { Forest::empty() } else { c.forest(edges, 3, "f") };
            let p = FreeForestOperad::new(c.forest(5, 2, "g"));
            let n = gen_hom_count(&f, &p);
            (p.color_count() > 0 && n <= HOM_CAP && (n > 0 || i % 10 == 9)).then_some((f, p))
        }) else {
            continue;
        };
        let r = d3_check(&p, &f);
        sizes.push(r.whole);
        ctx.report.check(i, "product", r.ok, || {
            format!("F = {f}, P = o({}): {} vs {}; {:?}", p.forest(), r.whole, r.parts, r.witness)
        });
        if i == 0 {
            ctx.report.check(i, "empty forest", r.whole == 1 && r.parts == 1, || format!("{r:?}"));
        }
    }
    ctx.report.notes.push(size_note("maps per instance", &sizes));
}

fn nerve(ctx: &mut Ctx) {
    let edges = ctx.edges;
    let width = ctx.config.max_levels.unwrap_or(4);
    let length = ctx.config.max_length.unwrap_or(3);
    let mut sizes = Vec::new();
    for i in 0..ctx.count {
        let Some((p, a)) = ctx.sample(i, "operad and simplex", |c| {
            let f = c.forest(edges, 3, "e");
            if f.is_empty() {
                return None;
            }
            let p = FreeForestOperad::new(f);
            let a = random_simplex(&mut c.rng, width, length);
            (gen_hom_count(&omega_obj(&a), &p) <= HOM_CAP).then_some((p, a))
        }) else {
            continue;
        };
        let witness = || format!("P = o({}), A = {}", p.forest(), a.to_json());
        let r = verify_chain_bijection(&p, &a);
        sizes.push(r.chains);
        ctx.report.check(i, "round trips", r.ok, || format!("{}: {:?}", witness(), r.witness));
        let expected = gen_hom_count(&omega_obj(&a), &p);
        ctx.report.check(i, "cardinality", r.chains as u128 == expected, || {
            format!("{}: {} chains, {expected} maps", witness(), r.chains)
        });
        let phi = random_operator(&mut ctx.rng, a.top(), length);
        match verify_naturality(&p, &a, &phi) {
            Ok(n) => ctx
                .report
                .check(i, "naturality", n.ok, || format!("{}, φ = {:?}: {:?}", witness(), phi.values(), n.witness)),
            Err(e) => ctx.report.fail(i, "naturality", format!("{}: {e}", witness())),
        }
    }
    ctx.report.notes.push(size_note("chains per instance", &sizes));
}

fn fibrous(ctx: &mut Ctx) {
    let edges = ctx.edges;
    let n = ctx.config.truncation;
    for i in 0..ctx.count {
        let f = ctx.forest(edges, 2, "e");
        let p = FreeForestOperad::new(f.clone());
        let r = check_fibrous(&p, n);
        for (axiom, res) in [("fib1", &r.fib1), ("fib2", &r.fib2), ("fib3", &r.fib3)] {
            ctx.report.check(i, axiom, res.passed(), || format!("o({f}): {:?}", res.witnesses));
        }
    }
    let p = fixture_operad();
    let mut detected = 0;
    for d in Defect::ALL {
        let caught = !check_defect(&p, d, n).passed();
        detected += caught as usize;
        ctx.report.check(ctx.count, "defect detected", caught, || format!("{d:?} passed every axiom"));
    }
    ctx.report.notes.push(format!("verified up to ⟨{n}⟩"));
    ctx.report.notes.push(format!("{detected} of {} injected defects detected", Defect::ALL.len()));
}

fn factors(ctx: &mut Ctx, n: usize, edges: usize) -> Vec<Tree> {
    ["a", "b", "c", "d"].iter().take(n).map(|p| ctx.tree(edges, p)).collect()
}

fn sample_factors(ctx: &mut Ctx, i: usize, n: usize, edges: usize) -> Option<Vec<Tree>> {
    ctx.sample(i, "factors", |c| {
        let f = factors(c, n, edges);
        (shuffle_count(&f) <= SHUFFLE_CAP).then_some(f)
    })
}

fn roots(factors: &[Tree]) -> TupleEdge {
    TupleEdge(factors.iter().map(|t| t.root().clone()).collect())
}

fn shuffle_laws(ctx: &mut Ctx) {
    let edges = ctx.edges;
    for i in 0..ctx.count {
        let n = ctx.rng.gen_range(1..=3);
        let Some(fs) = sample_factors(ctx, i, n, edges) else { continue };
        let all = shuffles(&fs);
        let product = max_product(&fs);
        let names = || fs.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ⊗ ");
        for s in &all {
            ctx.report.check(i, "root tuple", *s.root_tuple() == roots(&fs), || format!("{}: {s}", names()));
            ctx.report.check(i, "max edges", s.max_tuples() == product, || format!("{}: {s}", names()));
        }
        // Intersections over the whole family and some random subfamilies.
        let mut families: Vec<Vec<Shuffle>> = vec![all.clone()];
        for _ in 0..6 {
            let pick: Vec<Shuffle> = all.iter().filter(|_| ctx.rng.gen_bool(0.5)).cloned().collect();
            if !pick.is_empty() {
                families.push(pick);
            }
        }
        for alpha in &families {
            let meet = match intersect(alpha) {
                Ok(m) => m,
                Err(e) => {
                    ctx.report.fail(i, "intersection", format!("{}: {e}", names()));
                    continue;
                }
            };
            ctx.report.check(i, "intersection root", *meet.root_tuple() == roots(&fs), names);
            ctx.report
                .check(i, "intersection max edges", meet.max_tuples() == product, || format!("{}: {meet}", names()));
            let beta: Vec<Shuffle> = alpha.choose_multiple(&mut ctx.rng, alpha.len().div_ceil(2)).cloned().collect();
            let mut larger: Vec<Shuffle> = alpha.clone();
            if let Ok(m) = intersect(&beta) {
                larger.push(m);
            }
            for target in &larger {
                let f = inclusion(&meet, target);
                let ok = validate(&f).is_ok() && is_inner_face(&f);
                ctx.report.check(i, "inner face", ok, || format!("{}: {meet} → {target}", names()));
            }
        }
        for (k, t) in fs.iter().enumerate() {
            for e in t.leaves() {
                let pairs = match stump_transport(&fs, k, &e) {
                    Ok(p) => p,
                    Err(err) => {
                        ctx.report.fail(i, "stump transport", format!("{}: {err}", names()));
                        continue;
                    }
                };
                let image: BTreeSet<Shuffle> = pairs.iter().map(|p| p.1.clone()).collect();
                let expected: BTreeSet<Shuffle> =
                    shuffles(&stumped_factors(&fs, k, &e).expect("leaf")).into_iter().collect();
                let ok = image.len() == pairs.len() && image == expected;
                ctx.report.check(i, "stump transport", ok, || format!("{}: stump on {e} of factor {k}", names()));
            }
        }
    }
    for m in 0..=8usize {
        for n in 0..=8 - m {
            let got = shuffles(&[Tree::linear("a", m), Tree::linear("b", n)]).len() as u128;
            let want = interleavings(&[m, n]);
            ctx.report.check(ctx.count, "linear chains", got == want, || format!("{m}+{n}: {got} vs {want}"));
        }
    }
}

fn assoc(ctx: &mut Ctx) {
    let edges = ctx.edges;
    for i in 0..ctx.count {
        let (n, brackets): (usize, &[&str]) = if i % 5 == 4 {
            (4, &["0,(1,(2,3))", "(0,1),(2,3)", "((0,1),2),3"])
        } else {
            (3, &["0,(1,2)", "(0,1),2", "(0,1,2)", "0,(1),2"])
        };
        let e = if n == 4 { edges.min(3) } else { edges };
        let Some(fs) = sample_factors(ctx, i, n, e) else { continue };
        for text in brackets {
            let b = Bracketing::parse(text).expect("fixed bracketing");
            match assoc_inclusion(&fs, &b) {
                Ok(inc) => {
                    let distinct: BTreeSet<usize> = inc.injection.iter().copied().collect();
                    ctx.report.check(i, "injection", distinct.len() == inc.k.len(), || text.to_string());
                    if matches!(*text, "(0,1,2)" | "0,(1),2") {
                        ctx.report.check(i, "trivial grouping", inc.k == inc.j, || text.to_string());
                    }
                }
                Err(err) => {
                    let names = fs.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ");
                    ctx.report.fail(i, "K ⊆ J", format!("{text} on {names}: {err}"));
                }
            }
        }
    }
}

fn interior(ctx: &mut Ctx) {
    let edges = ctx.edges;
    for i in 0..ctx.count {
        let n = ctx.rng.gen_range(1..=3);
        let Some(fs) = sample_factors(ctx, i, n, edges) else { continue };
        let names = || fs.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ⊗ ");
        let d = match interior_decomposition(&fs) {
            Ok(d) => d,
            Err(e) => {
                ctx.report.fail(i, "decomposition", format!("{}: {e}", names()));
                continue;
            }
        };
        let interiors: Vec<Tree> = fs.iter().map(|t| t.interior().0).collect();
        let firsts: Vec<Shuffle> = d.pairing.iter().map(|p| p.0.clone()).collect();
        ctx.report.check(i, "covers interior shuffles", firsts == shuffles(&interiors), names);
        let image: BTreeSet<Shuffle> = d.pairing.iter().map(|p| p.1.clone()).collect();
        let ok = image.len() == d.pairing.len() && image == shuffles(&fs).into_iter().collect();
        ctx.report.check(i, "bijection", ok, names);
        let stumped_ok = d.stumped.iter().all(|t| t.coords().iter().zip(&fs).any(|(e, f)| f.is_stump_edge(e)));
        ctx.report.check(i, "stumped tuples", stumped_ok, names);
    }
}

fn freealg(ctx: &mut Ctx) {
    let edges = ctx.edges;
    let mut element_counts = Vec::new();
    for i in 0..ctx.count {
        let Some(f) = ctx.sample(i, "nonempty forest", |c| Some(c.forest(edges, 2, "e")).filter(|f| !f.is_empty()))
        else {
            continue;
        };
        let p = FreeForestOperad::new(f.clone());
        let colors = p.color_count();
        let mut r: Vec<usize> = (0..colors).collect();
        for _ in 0..ctx.rng.gen_range(0..=2) {
            r.push(ctx.rng.gen_range(0..colors));
        }
        r.shuffle(&mut ctx.rng);
        let sizes: Vec<usize> = r.iter().map(|_| ctx.rng.gen_range(0..=3)).collect();
        for d in 0..colors {
            let witness = || format!("P = o({f}), r = {r:?}, |X| = {sizes:?}, d = {}", p.color_names()[d]);
            let formula = match free_algebra(&p, &r, &sizes, d) {
                Ok(x) => x,
                Err(e) => {
                    ctx.report.fail(i, "formula", format!("{}: {e}", witness()));
                    continue;
                }
            };
            let oracle = free_algebra_orbits(&p, &r, &sizes, d);
            element_counts.push(oracle.len());
            let mapped: BTreeSet<_> =
                formula.iter().map(|e| orbit_min(&(e.gamma.clone(), e.op.clone(), e.labels.clone()))).collect();
            ctx.report.check(i, "distinct orbits", mapped.len() == formula.len(), witness);
            ctx.report.check(i, "agrees with oracle", mapped == oracle, || {
                format!("{}: {} from the formula, {} orbits", witness(), formula.len(), oracle.len())
            });
        }
    }
    ctx.report.notes.push(size_note("elements per color", &element_counts));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig { instances: Some(3), truncation: 3, ..SuiteConfig::default() }
    }

    #[test]
    fn every_suite_runs_small() {
        for s in Suite::ALL {
            let r = run_suite(s, &small());
            assert!(r.passed(), "{s}: {:?}", r.failures);
            assert!(r.checks > 0, "{s} checked nothing");
        }
    }

    #[test]
    fn defects_fail() {
        for d in Defect::ALL {
            assert!(!run_defect(d, &small()).passed(), "{d:?}");
        }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert!(SuiteConfig { truncation: 0, ..SuiteConfig::default() }.validate().is_err());
    }
}
