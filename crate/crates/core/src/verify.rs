//! Named, self-describing checks. Each check binds one statement about abelian
//! ideals, normalisers or gradings to an executable verdict with witnesses.
//!
//! A check either passes (with a confirmation record), fails (with at least one
//! counterexample) or is skipped with the hypothesis it needs. Checks marked
//! report-only never fail a run.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::gradings;
use crate::ideals::{self, AbelianCatalogue, AbelianIdeal, Fiber, UpperIdeal};
use crate::normalisers::{self, Method};
use crate::rootsys::{paper_e6, Family, Root, RootSystem, SimpleTypeId};
use crate::sets::{bit_indices, full_mask, RootSet, SimpleSubset};
use crate::weyl::{self, WeylWord};

pub const REPORT_VERSION: &str = "1";

/// Failing records kept per check; the total is always reported.
const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    #[serde(rename = "type")]
    pub type_id: SimpleTypeId,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    /// Wall-clock time; only present when timings were requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckResult {
    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Seeded upper-ideal samples per type above `exhaustive_upper_rank`.
    pub sample_size: usize,
    pub exhaustive_upper_rank: usize,
    /// Rank bound for the breadth-first search over the finite Weyl group.
    pub exhaustive_weyl_rank: usize,
    /// Restrict to these check ids; `None` runs the whole registry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<String>>,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            sample_size: 10_000,
            exhaustive_upper_rank: 4,
            exhaustive_weyl_rank: 4,
            checks: None,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub types: Vec<SimpleTypeId>,
    #[serde(flatten)]
    pub verify: VerifyConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: ReportConfig,
    pub results: Vec<CheckResult>,
}

impl Report {
    /// A theorem check failed; report-only checks are ignored.
    pub fn failed(&self) -> bool {
        self.results
            .iter()
            .any(|r| r.is_fail() && !lookup(&r.check_id).map_or(false, |c| c.report_only))
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for r in &self.results {
            match r.verdict {
                Verdict::Pass => c.0 += 1,
                Verdict::Fail => c.1 += 1,
                Verdict::Skipped { .. } => c.2 += 1,
            }
        }
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Summary table carrying the same records as the JSON form.
    pub fn to_markdown(&self) -> String {
        let (p, f, s) = self.counts();
        let mut out = String::new();
        let types: Vec<String> = self.config.types.iter().map(|t| t.to_string()).collect();
        let _ = writeln!(out, "# Verification report (version {})\n", self.version);
        let _ = writeln!(
            out,
            "types: {} | seed: {} | samples: {} | exhaustive upper ideals to rank {}\n",
            types.join(", "),
            self.config.verify.seed,
            self.config.verify.sample_size,
            self.config.verify.exhaustive_upper_rank
        );
        let _ = writeln!(out, "pass: {p} | fail: {f} | skipped: {s}\n");
        let _ = writeln!(out, "| check | type | verdict | witnesses |");
        let _ = writeln!(out, "|---|---|---|---|");
        for r in &self.results {
            let verdict = match &r.verdict {
                Verdict::Pass => "pass".to_string(),
                Verdict::Fail => "**fail**".to_string(),
                Verdict::Skipped { reason } => format!("skipped ({reason})"),
            };
            let w: Vec<String> = r.witnesses.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                r.check_id,
                r.type_id,
                verdict,
                w.join("<br>").replace('|', "\\|")
            );
        }
        out
    }
}

/// One registry entry.
pub struct CheckSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub report_only: bool,
    run: fn(&Ctx) -> Result<Outcome>,
}

macro_rules! check {
    ($id:ident, $stmt:expr) => {
        CheckSpec { id: stringify!($id), statement: $stmt, report_only: false, run: $id }
    };
    ($id:ident, $stmt:expr, report) => {
        CheckSpec { id: stringify!($id), statement: $stmt, report_only: true, run: $id }
    };
}

static REGISTRY: &[CheckSpec] = &[
    check!(peterson_count, "there are exactly 2^rank abelian ideals"),
    check!(minuscule_round_trip, "abelian ideals correspond bijectively to minuscule elements"),
    check!(rootlet_surjective, "every long positive root is a rootlet and every rootlet is long"),
    check!(fiber_singleton_iff, "a fibre is a singleton iff its rootlet is not orthogonal to θ"),
    check!(rootminimal_iff_H, "a nonzero ideal is the minimum of its fibre iff it lies in ℋ"),
    check!(mover_minimal_length, "w_μ is the unique shortest element with w(θ) = μ"),
    check!(mover_min_ideal, "w_μ s₀ is the minuscule element of 𝔞(μ)_min"),
    check!(lemma_w_mu_simple, "(β, μ) = 0 for β ∈ Π implies w_μ⁻¹(β) ∈ Π ∩ θ⊥"),
    check!(lemma_w_mu_theta, "θ fundamental and (θ, μ) > 0, μ ≠ θ imply w_μ⁻¹(θ) = θ − α_θ"),
    check!(thm_levi_min, "closed form of Π[μ]_min for every long positive μ"),
    check!(prop_alpha_theta_min, "𝒮[α_θ] is the set of simple roots adjacent to α_θ"),
    check!(thm_min_test, "normaliser test through min(I) agrees with the bracket definition"),
    check!(lemma_root_sum, "μ + α, μ + α̃ ∈ Δ imply μ + α + α̃ ∈ Δ"),
    check!(thm_max_test, "normaliser test through max(Δ⁺ ∖ I) agrees with the bracket definition"),
    check!(minuscule_levi_criterion, "minuscule-element normaliser agrees on abelian ideals"),
    check!(prop_min_max_duality, "γ ∈ min(I(α̃)_min) iff θ − γ ∈ max(Δ⁺ ∖ I(α̃)_max)"),
    check!(thm_S_inclusion, "𝒮[α̃]_max ⊆ 𝒮[α̃]_min"),
    check!(thm_S_refinement, "𝒮[α̃]_max = 𝒮[α̃]_min ∩ θ⊥ away from the type A endpoints"),
    check!(cor_distinct_normalisers, "I(α̃)_min ≠ I(α̃)_max implies 𝔭[α̃]_min ≠ 𝔭[α̃]_max"),
    check!(thm_levi_max, "closed form of Π[α̃]_max for every long simple α̃"),
    check!(examples_3x, "worked examples in types A, C, D4 and E6"),
    check!(grading_tail_abelian, "𝔤(≥j) is abelian for j ≥ ⌊ht/2⌋ + 1"),
    check!(thm_alpha_theta_grading, "[θ:α_θ] = 2, ht(𝔭[α_θ]) = 3 and 𝔞(α_θ) = 𝔤(≥2)"),
    check!(thm_heights, "heights 2n−1 and 2n+1 and the tails recovering 𝔞(α̃)_max, 𝔞(α̃)_min"),
    check!(rmk_height_gap, "(α̃, θ) = 0 implies ht(𝔭[α̃]_min) = ht(𝔭[α̃]_max) + 2"),
    check!(ex_n_tap_one, "[θ:α̃] = 1 gives the maximal parabolic and the height-3 minimum"),
    check!(thm_f2_bijection_AC, "f₂ = f₁⁻¹ in types A and C"),
    check!(thm_f2_collision, "θ fundamental: two parabolics with the same f₂ image"),
    check!(rmk_F_extensive, "ℱ(𝔭) ⊇ 𝔭 for every standard parabolic"),
    check!(rmk_reflexive_extremes, "𝔞(α̃)_min and 𝔞(α̃)_max are fixed by ℱ̃"),
    check!(scan_conjectures, "exhaustive scan of f₁, f₂, ℱ and ℱ̃", report),
];

pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Per-type data shared by all checks.
pub struct Ctx {
    pub rs: RootSystem,
    pub catalogue: AbelianCatalogue,
    config: VerifyConfig,
}

impl Ctx {
    pub fn new(rs: RootSystem, config: &VerifyConfig) -> Result<Self> {
        let catalogue = AbelianCatalogue::build(&rs)?;
        Ok(Self { rs, catalogue, config: config.clone() })
    }

    fn fiber(&self, mu: usize) -> Result<&Fiber> {
        self.catalogue
            .fiber(mu)
            .ok_or_else(|| Error::Internal(format!("no fibre over {}", self.rs.root(mu))))
    }

    fn levi_min(&self, mu: usize) -> Result<SimpleSubset> {
        normalisers::normaliser(&self.rs, &self.fiber(mu)?.min_ideal.upper(), Method::Bracket)
    }

    fn levi_max(&self, mu: usize) -> Result<SimpleSubset> {
        normalisers::normaliser(&self.rs, &self.fiber(mu)?.max_ideal.upper(), Method::Bracket)
    }

    fn seed(&self) -> u64 {
        // FNV-1a over the type name keeps per-type streams independent of run order.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in self.rs.type_id().to_string().bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        h ^ self.config.seed
    }

    /// Upper ideals exercised by the normaliser tests, and whether the list is exhaustive.
    fn upper_domain(&self) -> (Vec<UpperIdeal>, bool) {
        if self.rs.rank() <= self.config.exhaustive_upper_rank {
            (ideals::enumerate_upper(&self.rs), true)
        } else {
            (ideals::sample_upper(&self.rs, self.config.sample_size, self.seed()), false)
        }
    }
}

struct Outcome {
    verdict: Verdict,
    witnesses: Vec<Value>,
}

impl Outcome {
    fn skip(reason: &str) -> Result<Self> {
        Ok(Self { verdict: Verdict::Skipped { reason: reason.into() }, witnesses: vec![] })
    }
}

/// Accumulates assertions; failures become witnesses.
#[derive(Default)]
struct Probe {
    cases: usize,
    failures: usize,
    witnesses: Vec<Value>,
    summary: Map<String, Value>,
}

impl Probe {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.into(), value.into());
    }

    fn finish(mut self) -> Result<Outcome> {
        self.summary.insert("cases".into(), self.cases.into());
        if self.failures == 0 {
            return Ok(Outcome { verdict: Verdict::Pass, witnesses: vec![Value::Object(self.summary)] });
        }
        self.summary.insert("failures".into(), self.failures.into());
        let mut witnesses = vec![Value::Object(self.summary)];
        witnesses.extend(self.witnesses);
        Ok(Outcome { verdict: Verdict::Fail, witnesses })
    }
}

fn execute(spec: &CheckSpec, ctx: &Ctx) -> CheckResult {
    let start = Instant::now();
    let (verdict, witnesses) = match (spec.run)(ctx) {
        Ok(o) => (o.verdict, o.witnesses),
        Err(e) => (Verdict::Fail, vec![json!({ "error": e.to_string() })]),
    };
    CheckResult {
        check_id: spec.id.into(),
        type_id: ctx.rs.type_id(),
        verdict,
        witnesses,
        elapsed_ms: ctx.config.timings.then(|| start.elapsed().as_millis() as u64),
    }
}

fn broken_context(spec: &CheckSpec, t: SimpleTypeId, err: &Error) -> CheckResult {
    CheckResult {
        check_id: spec.id.into(),
        type_id: t,
        verdict: Verdict::Fail,
        witnesses: vec![json!({ "error": err.to_string() })],
        elapsed_ms: None,
    }
}

/// Run one registered check with the default configuration.
pub fn run_check(check_id: &str, rs: &RootSystem) -> Result<CheckResult> {
    run_check_with(check_id, rs, &VerifyConfig::default())
}

pub fn run_check_with(check_id: &str, rs: &RootSystem, config: &VerifyConfig) -> Result<CheckResult> {
    let spec = lookup(check_id).ok_or_else(|| Error::UnknownCheck(check_id.into()))?;
    Ok(match Ctx::new(rs.clone(), config) {
        Ok(ctx) => execute(spec, &ctx),
        Err(e) => broken_context(spec, rs.type_id(), &e),
    })
}

/// Every selected check on every type, in parallel; results in registry order, then type order.
pub fn run_all(types: &[SimpleTypeId], config: &VerifyConfig) -> Result<Report> {
    let specs: Vec<&CheckSpec> = match &config.checks {
        None => REGISTRY.iter().collect(),
        Some(ids) => {
            for id in ids {
                lookup(id).ok_or_else(|| Error::UnknownCheck(id.clone()))?;
            }
            REGISTRY.iter().filter(|c| ids.iter().any(|i| i == c.id)).collect()
        }
    };
    let contexts: Vec<std::result::Result<Ctx, Error>> = types
        .par_iter()
        .map(|&t| Ctx::new(crate::rootsys::build_root_system(t), config))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..specs.len())
        .flat_map(|c| (0..types.len()).map(move |t| (c, t)))
        .collect();
    let results = pairs
        .par_iter()
        .map(|&(c, t)| match &contexts[t] {
            Ok(ctx) => execute(specs[c], ctx),
            Err(e) => broken_context(specs[c], types[t], e),
        })
        .collect();
    Ok(Report {
        version: REPORT_VERSION.into(),
        config: ReportConfig { types: types.to_vec(), verify: config.clone() },
        results,
    })
}

fn labels(bits: u64) -> Vec<usize> {
    bit_indices(bits).into_iter().map(|k| k + 1).collect()
}

fn theta_perp(rs: &RootSystem) -> u64 {
    (0..rs.rank())
        .filter(|&k| rs.inner_idx(k, rs.theta()) == 0)
        .fold(0, |acc, k| acc | 1 << k)
}

fn heis_bits(rs: &RootSystem) -> u64 {
    full_mask(rs.rank()) & !theta_perp(rs)
}

fn orthogonal_to(rs: &RootSystem, k: usize) -> u64 {
    (0..rs.rank())
        .filter(|&j| rs.inner_idx(j, k) == 0)
        .fold(0, |acc, j| acc | 1 << j)
}

fn height(rs: &RootSystem, s: &SimpleSubset) -> i32 {
    gradings::grading(rs, s).height
}

/// Two words act identically on every affine simple root.
fn same_element(rs: &RootSystem, a: &WeylWord, b: &WeylWord) -> Result<bool> {
    for i in 0..=rs.rank() {
        let x = weyl::affine_simple(rs, i);
        if weyl::act(rs, a, &x)? != weyl::act(rs, b, &x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `w⁻¹(β)` as a 0-based simple index, if simple.
fn inverse_image_simple(rs: &RootSystem, w: &WeylWord, k: usize) -> Result<Option<usize>> {
    let image = weyl::act(rs, &w.inverse(), &Root::simple(rs.rank(), k))?;
    Ok(match rs.index_of(&image.coeffs) {
        Some(j) if j < rs.rank() && image.level == 0 => Some(j),
        _ => None,
    })
}

fn peterson_count(ctx: &Ctx) -> Result<Outcome> {
    let n = ctx.catalogue.ideals.len();
    let mut p = Probe::default();
    p.note("count", n);
    p.check(n == 1usize << ctx.rs.rank(), || json!({ "count": n, "expected": 1u64 << ctx.rs.rank() }));
    p.finish()
}

fn minuscule_round_trip(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    let mut seen = BTreeSet::new();
    for (ideal, word) in ctx.catalogue.ideals.iter().zip(&ctx.catalogue.words) {
        let n = weyl::inversion_set(rs, word)?;
        let expected = weyl::minuscule_inversion_set(rs, ideal);
        let back = ideals::ideal_from_minuscule_set(rs, &n)?;
        p.check(n == expected && back == *ideal && word.len() == ideal.dim(), || {
            json!({ "ideal": ideal.roots().indices(), "word": word.to_string() })
        });
        seen.insert(n.0);
    }
    p.check(seen.len() == ctx.catalogue.ideals.len(), || json!({ "distinct_elements": seen.len() }));
    p.finish()
}

fn rootlet_surjective(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    let long: BTreeSet<usize> = rs.long_roots().into_iter().collect();
    let hit: BTreeSet<usize> = ctx.catalogue.rootlets.iter().flatten().copied().collect();
    for (ideal, r) in ctx.catalogue.ideals.iter().zip(&ctx.catalogue.rootlets) {
        p.check(ideal.roots().is_empty() == r.is_none(), || json!({ "ideal": ideal.roots().indices() }));
        if let Some(mu) = r {
            p.check(rs.is_long(*mu), || json!({ "short_rootlet": rs.root(*mu).to_string() }));
        }
    }
    for mu in long.difference(&hit) {
        p.check(false, || json!({ "missed": rs.root(*mu).to_string() }));
    }
    p.note("long_roots", long.len());
    p.note("fibres", ctx.catalogue.fibers.len());
    p.finish()
}

fn fiber_singleton_iff(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    for (&mu, f) in &ctx.catalogue.fibers {
        let singleton = f.ideals.len() == 1;
        let off_perp = rs.inner_idx(mu, rs.theta()) != 0;
        p.check(singleton == off_perp, || {
            json!({ "rootlet": rs.root(mu).to_string(), "fibre_size": f.ideals.len(), "theta_pairing": rs.inner_idx(mu, rs.theta()) })
        });
    }
    p.finish()
}

#[allow(non_snake_case)]
fn rootminimal_iff_H(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let heis = rs.heis_set();
    let mut p = Probe::default();
    for (ideal, r) in ctx.catalogue.ideals.iter().zip(&ctx.catalogue.rootlets) {
        let Some(mu) = r else { continue };
        let is_min = ctx.fiber(*mu)?.min_ideal == *ideal;
        let in_h = ideal.roots().is_subset(&heis);
        p.check(is_min == in_h, || {
            json!({ "ideal": ideal.roots().indices(), "root_minimal": is_min, "inside_H": in_h })
        });
    }
    p.finish()
}

fn mover_minimal_length(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let rank = rs.rank();
    if rank > ctx.config.exhaustive_weyl_rank {
        return Outcome::skip("exhaustive Weyl group search limited to small rank");
    }
    // Elements are keyed by the images of the simple roots; w s_i(α_j) = w(α_j) − ⟨α_j, α_i^∨⟩ w(α_i).
    let simple_images: Vec<Vec<i32>> = (0..rank).map(|k| Root::simple(rank, k).coeffs).collect();
    let theta = rs.theta_root().coeffs.clone();
    let image_of = |images: &[Vec<i32>], x: &[i32]| -> Vec<i32> {
        let mut out = vec![0; rank];
        for (k, &c) in x.iter().enumerate() {
            for (o, v) in out.iter_mut().zip(&images[k]) {
                *o += c * v;
            }
        }
        out
    };
    let mut first: HashMap<usize, (usize, Vec<Vec<Vec<i32>>>)> = HashMap::new();
    let mut seen: BTreeSet<Vec<Vec<i32>>> = BTreeSet::new();
    seen.insert(simple_images.clone());
    let mut level = vec![simple_images];
    let mut length = 0;
    while !level.is_empty() {
        for images in &level {
            if let Some(mu) = rs.index_of(&image_of(images, &theta)) {
                let entry = first.entry(mu).or_insert((length, Vec::new()));
                if entry.0 == length {
                    entry.1.push(images.clone());
                }
            }
        }
        let mut next = Vec::new();
        for images in &level {
            for i in 0..rank {
                let child: Vec<Vec<i32>> = (0..rank)
                    .map(|j| {
                        let c = rs.pairing_simple(&Root::simple(rank, j).coeffs, i);
                        images[j].iter().zip(&images[i]).map(|(a, b)| a - c * b).collect()
                    })
                    .collect();
                if seen.insert(child.clone()) {
                    next.push(child);
                }
            }
        }
        level = next;
        length += 1;
    }
    let mut p = Probe::default();
    p.note("group_order", seen.len());
    for mu in rs.long_roots() {
        let w = weyl::minimal_mover_idx(rs, mu)?;
        let w_images: Vec<Vec<i32>> = (0..rank)
            .map(|k| weyl::act(rs, &w, &Root::simple(rank, k)).map(|r| r.coeffs))
            .collect::<Result<_>>()?;
        let (len, elements) = first.get(&mu).cloned().unwrap_or((usize::MAX, vec![]));
        p.check(len == w.len() && elements == vec![w_images], || {
            json!({ "mu": rs.root(mu).to_string(), "shortest": len, "count": elements.len(), "word": w.to_string() })
        });
    }
    p.finish()
}

fn mover_min_ideal(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    for mu in rs.long_roots() {
        let from_mover = ideals::ideal_min_from_mover(rs, rs.root(mu))?;
        let min = &ctx.fiber(mu)?.min_ideal;
        p.check(from_mover == *min, || {
            json!({ "mu": rs.root(mu).to_string(), "from_mover": from_mover.roots().indices(), "fibre_min": min.roots().indices() })
        });
    }
    p.finish()
}

fn lemma_w_mu_simple(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    for mu in rs.long_roots() {
        let w = weyl::minimal_mover_idx(rs, mu)?;
        for k in (0..rs.rank()).filter(|&k| rs.inner_idx(k, mu) == 0) {
            let image = inverse_image_simple(rs, &w, k)?;
            let ok = image.map_or(false, |j| rs.inner_idx(j, rs.theta()) == 0);
            p.check(ok, || json!({ "mu": rs.root(mu).to_string(), "beta": k + 1 }));
        }
    }
    p.finish()
}

fn lemma_w_mu_theta(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let Some(at) = rs.alpha_theta() else {
        return Outcome::skip("θ not fundamental");
    };
    let theta = rs.theta();
    let expected = rs.diff_index(theta, at).map(|i| rs.root(i).clone());
    let mut p = Probe::default();
    for mu in rs.long_roots() {
        if mu == theta || rs.inner_idx(mu, theta) <= 0 {
            continue;
        }
        let w = weyl::minimal_mover_idx(rs, mu)?;
        let got = weyl::act(rs, &w.inverse(), rs.theta_root())?;
        p.check(Some(&got) == expected.as_ref(), || {
            json!({ "mu": rs.root(mu).to_string(), "w_inv_theta": got.to_string() })
        });
    }
    p.finish()
}

fn thm_levi_min(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let perp = theta_perp(rs);
    let mut p = Probe::default();
    for mu in rs.long_roots() {
        let computed = ctx.levi_min(mu)?;
        let predicted = normalisers::predicted_levi_min_idx(rs, mu)?;
        p.check(computed == predicted, || {
            json!({ "mu": rs.root(mu).to_string(), "computed": labels(computed.levi_bits()), "predicted": labels(predicted.levi_bits()) })
        });
        if mu != rs.theta() {
            let w = weyl::minimal_mover_idx(rs, mu)?;
            let transported = normalisers::transported_orthogonal_simples(rs, mu, &w)?;
            p.check(computed.levi_bits() & perp == transported, || {
                json!({ "mu": rs.root(mu).to_string(), "levi_perp": labels(computed.levi_bits() & perp), "transported": labels(transported) })
            });
        }
        if rs.inner_idx(mu, rs.theta()) == 0 {
            p.check(computed.levi_bits() & !perp == 0, || {
                json!({ "mu": rs.root(mu).to_string(), "levi_outside_perp": labels(computed.levi_bits() & !perp) })
            });
        }
        if rs.type_id().family() == Family::C && mu != rs.theta() {
            p.check(rs.inner_idx(mu, rs.theta()) == 0, || {
                json!({ "long_root_in_H": rs.root(mu).to_string() })
            });
        }
    }
    p.finish()
}

fn prop_alpha_theta_min(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let Some(at) = rs.alpha_theta() else {
        return Outcome::skip("θ not fundamental");
    };
    let levi = ctx.levi_min(at)?;
    let expected_levi = 1u64 << at | orthogonal_to(rs, at);
    let adjacent = rs.neighbours(at).into_iter().fold(0u64, |acc, j| acc | 1 << j);
    let mut p = Probe::default();
    p.check(levi.levi_bits() == expected_levi, || {
        json!({ "levi": labels(levi.levi_bits()), "expected": labels(expected_levi) })
    });
    p.check(levi.excluded_bits() == adjacent, || {
        json!({ "excluded": labels(levi.excluded_bits()), "adjacent": labels(adjacent) })
    });
    p.note("alpha_theta", at + 1);
    p.finish()
}

/// Agreement of `method` with the bracket definition over abelian ideals and the upper-ideal domain.
fn method_agreement(ctx: &Ctx, method: Method, include_upper: bool) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    let test = |u: &UpperIdeal, p: &mut Probe| -> Result<()> {
        if method == Method::ViaMax && u.roots().is_full() {
            return Ok(());
        }
        let reference = normalisers::normaliser(rs, u, Method::Bracket)?;
        let got = normalisers::normaliser(rs, u, method)?;
        p.check(got == reference, || {
            json!({ "ideal": u.roots().indices(), "bracket": labels(reference.levi_bits()), method.name(): labels(got.levi_bits()) })
        });
        Ok(())
    };
    for a in &ctx.catalogue.ideals {
        test(&a.upper(), &mut p)?;
    }
    p.note("abelian_ideals", ctx.catalogue.ideals.len());
    if include_upper {
        let (domain, exhaustive) = ctx.upper_domain();
        for u in &domain {
            test(u, &mut p)?;
        }
        p.note("upper_ideals", domain.len());
        p.note("exhaustive", exhaustive);
    }
    p.finish()
}

fn thm_min_test(ctx: &Ctx) -> Result<Outcome> {
    method_agreement(ctx, Method::ViaMin, true)
}

/// The max-side test as stated. Disagreements are classified: a simple root `α ∈ I` is
/// never normalising (`[𝔤_{−α}, 𝔤_α] ⊆ 𝔱`), which the stated test cannot see when no
/// maximal complement root is `α`-adjacent.
fn thm_max_test(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let rank = rs.rank();
    let (domain, exhaustive) = ctx.upper_domain();
    let mut p = Probe::default();
    let (mut unexplained, mut abelian_disagreements) = (0usize, 0usize);
    let abelian = ctx.catalogue.ideals.iter().map(|a| (a.upper(), true));
    for (u, is_abelian) in abelian.chain(domain.iter().map(|u| (u.clone(), false))) {
        if u.roots().is_full() {
            continue;
        }
        let reference = normalisers::normaliser(rs, &u, Method::Bracket)?;
        let got = normalisers::normaliser(rs, &u, Method::ViaMax)?;
        let diff = reference.levi_bits() ^ got.levi_bits();
        let simple_in_ideal = (0..rank).filter(|&k| u.roots().contains(k)).fold(0u64, |acc, k| acc | 1 << k);
        if diff != 0 {
            unexplained += usize::from(diff & !simple_in_ideal != 0);
            abelian_disagreements += usize::from(is_abelian);
        }
        p.check(diff == 0, || {
            json!({ "ideal": u.roots().indices(), "bracket": labels(reference.levi_bits()), "via_max": labels(got.levi_bits()), "simple_roots_in_ideal": labels(simple_in_ideal) })
        });
    }
    p.note("abelian_ideals", ctx.catalogue.ideals.len());
    p.note("upper_ideals", domain.len());
    p.note("exhaustive", exhaustive);
    p.note("abelian_disagreements", abelian_disagreements);
    p.note("disagreements_not_at_simple_roots_in_ideal", unexplained);
    p.finish()
}

fn minuscule_levi_criterion(ctx: &Ctx) -> Result<Outcome> {
    method_agreement(ctx, Method::Minuscule, false)
}

fn lemma_root_sum(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let rank = rs.rank();
    let mut p = Probe::default();
    for mu in 0..rs.num_pos() {
        for a in 0..rank {
            let Some(s1) = rs.sum_index(mu, a) else { continue };
            for b in (0..rank).filter(|&b| b != a) {
                if rs.sum_index(mu, b).is_none() {
                    continue;
                }
                p.check(rs.sum_index(s1, b).is_some(), || {
                    json!({ "mu": rs.root(mu).to_string(), "alpha": a + 1, "alpha_tilde": b + 1 })
                });
            }
        }
    }
    p.finish()
}

fn prop_min_max_duality(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    if rs.rank() == 1 {
        return Outcome::skip("rank 1: I(α̃)_min = {θ}");
    }
    let theta = rs.theta();
    let heis = rs.heis_set();
    let mut p = Probe::default();
    for k in rs.long_simples() {
        let f = ctx.fiber(k)?;
        let mins = ideals::min_of(rs, f.min_ideal.roots());
        let maxc = ideals::max_of(rs, &f.max_ideal.roots().complement());
        let dual: Option<Vec<usize>> = mins.iter().map(|g| rs.diff_index(theta, g)).collect();
        let dual = dual.map(|d| RootSet::from_indices(rs.num_pos(), d));
        p.check(dual.as_ref() == Some(&maxc), || {
            json!({ "alpha": k + 1, "min": mins.indices(), "max_complement": maxc.indices() })
        });
        p.check(maxc.is_subset(&heis) && !maxc.contains(theta), || {
            json!({ "alpha": k + 1, "max_complement_outside_H": maxc.indices() })
        });
    }
    p.finish()
}

#[allow(non_snake_case)]
fn thm_S_inclusion(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    if rs.rank() == 1 {
        return Outcome::skip("rank 1: requires 𝔤 ≠ 𝔰𝔩₂");
    }
    let mut p = Probe::default();
    for k in rs.long_simples() {
        let (smin, smax) = (ctx.levi_min(k)?.excluded_bits(), ctx.levi_max(k)?.excluded_bits());
        p.check(smax & !smin == 0, || json!({ "alpha": k + 1, "S_min": labels(smin), "S_max": labels(smax) }));
    }
    p.finish()
}

#[allow(non_snake_case)]
fn thm_S_refinement(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let perp = theta_perp(rs);
    let mut p = Probe::default();
    for k in rs.long_simples() {
        let (smin, smax) = (ctx.levi_min(k)?.excluded_bits(), ctx.levi_max(k)?.excluded_bits());
        let f = ctx.fiber(k)?;
        let record = || json!({ "alpha": k + 1, "S_min": labels(smin), "S_max": labels(smax) });
        if normalisers::is_a_endpoint(rs, k) {
            p.check(f.min_ideal == f.max_ideal && smin == 1 << k, record);
        } else {
            p.check(smax == smin & perp, record);
            if rs.inner_idx(k, rs.theta()) != 0 {
                p.check(smax == smin && smin & !perp == 0, record);
            }
        }
    }
    p.finish()
}

fn cor_distinct_normalisers(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    for k in rs.long_simples() {
        let f = ctx.fiber(k)?;
        if f.min_ideal == f.max_ideal {
            continue;
        }
        let (lmin, lmax) = (ctx.levi_min(k)?, ctx.levi_max(k)?);
        p.check(lmin != lmax, || json!({ "alpha": k + 1, "S": labels(lmin.excluded_bits()) }));
    }
    p.finish()
}

fn thm_levi_max(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let heis = heis_bits(rs);
    let mut p = Probe::default();
    for k in rs.long_simples() {
        let (lmin, lmax) = (ctx.levi_min(k)?.levi_bits(), ctx.levi_max(k)?.levi_bits());
        let predicted = normalisers::predicted_levi_max_simple(rs, k)?.levi_bits();
        p.check(lmax == predicted, || {
            json!({ "alpha": k + 1, "computed": labels(lmax), "predicted": labels(predicted) })
        });
        let on_perp = rs.inner_idx(k, rs.theta()) == 0;
        if on_perp && !normalisers::is_a_endpoint(rs, k) {
            p.check(heis & lmin == 0 && lmax == heis | lmin, || {
                json!({ "alpha": k + 1, "levi_max": labels(lmax), "levi_min": labels(lmin) })
            });
        }
        if rs.theta_fundamental() && !on_perp {
            let expected = 1 << k | orthogonal_to(rs, k);
            p.check(lmax == expected && lmin == expected, || {
                json!({ "alpha": k + 1, "levi_max": labels(lmax), "levi_min": labels(lmin), "expected": labels(expected) })
            });
        }
    }
    p.finish()
}

fn record(p: &mut Probe, records: &mut Vec<Value>, name: &str, quantity: &str, expected: Value, computed: Value) {
    let ok = expected == computed;
    p.check(ok, || json!({ "example": name, "quantity": quantity, "expected": expected, "computed": computed }));
    records.push(json!({ "example": name, "quantity": quantity, "expected": expected, "computed": computed, "match": ok }));
}

/// Labels for one worked example; `to_internal` maps a displayed label to a 0-based simple index.
struct ExampleFrame<'a> {
    rs: &'a RootSystem,
    to_internal: fn(usize) -> usize,
    to_label: fn(usize) -> usize,
}

fn identity_internal(l: usize) -> usize {
    l - 1
}

fn identity_from_internal(k: usize) -> usize {
    k + 1
}

fn e6_internal(l: usize) -> usize {
    paper_e6::to_bourbaki(l) - 1
}

fn e6_label(k: usize) -> usize {
    paper_e6::from_bourbaki(k + 1)
}

impl ExampleFrame<'_> {
    fn set(&self, bits: u64) -> Vec<usize> {
        let mut v: Vec<usize> = bit_indices(bits).into_iter().map(self.to_label).collect();
        v.sort_unstable();
        v
    }

    fn word(&self, letters: &[usize]) -> WeylWord {
        WeylWord(letters.iter().map(|&l| (self.to_internal)(l) + 1).collect())
    }

    fn letters(&self, w: &WeylWord) -> Vec<usize> {
        w.letters().iter().map(|&l| (self.to_label)(l - 1)).collect()
    }

    /// Records one example: admissible roots and their images, the word, and both 𝒮-sets.
    fn run(
        &self,
        ctx: &Ctx,
        p: &mut Probe,
        records: &mut Vec<Value>,
        name: &str,
        alpha: usize,
        word: Option<&[usize]>,
        admissible: Option<&[(usize, usize)]>,
        s_min: &[usize],
        s_max: &[usize],
    ) -> Result<()> {
        let rs = self.rs;
        let k = (self.to_internal)(alpha);
        let w = weyl::minimal_mover_idx(rs, k)?;
        if let Some(letters) = word {
            let expected = self.word(letters);
            let group = same_element(rs, &w, &expected)?;
            let ours = self.letters(&w);
            p.check(group, || json!({ "example": name, "quantity": "word", "expected": letters, "computed": ours }));
            records.push(json!({
                "example": name,
                "quantity": "word_as_group_element",
                "expected": letters,
                "computed": ours,
                "match": group,
                "letters_match": ours == letters,
            }));
        }
        if let Some(adm) = admissible {
            let computed: Vec<(usize, usize)> = (0..rs.rank())
                .filter(|&j| rs.inner_idx(j, k) == 0)
                .map(|j| {
                    let image = inverse_image_simple(rs, &w, j)?;
                    Ok(((self.to_label)(j), image.map_or(0, self.to_label)))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            record(p, records, name, "admissible_images", json!(adm), json!(computed));
        }
        let smin = ctx.levi_min(k)?.excluded_bits();
        let smax = ctx.levi_max(k)?.excluded_bits();
        record(p, records, name, "S_min", json!(s_min), json!(self.set(smin)));
        record(p, records, name, "S_max", json!(s_max), json!(self.set(smax)));
        Ok(())
    }
}

fn examples_3x(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let n = rs.rank();
    let t = rs.type_id();
    let plain = ExampleFrame { rs, to_internal: identity_internal, to_label: identity_from_internal };
    let mut p = Probe::default();
    let mut records = Vec::new();
    match (t.family(), n) {
        (Family::A, n) if n >= 3 => {
            let word: Vec<usize> = std::iter::once(1).chain(3..=n).collect();
            let adm: Vec<(usize, usize)> = (4..=n).map(|i| (i, i - 1)).collect();
            plain.run(ctx, &mut p, &mut records, "A_n, α2", 2, Some(&word), Some(&adm), &[1, 2, n], &[2])?;
            for i in 3..n {
                let name = format!("A_n, α{i}");
                plain.run(ctx, &mut p, &mut records, &name, i, None, None, &[1, i, n], &[i])?;
            }
        }
        (Family::D, 4) => {
            plain.run(ctx, &mut p, &mut records, "D4, α1", 1, Some(&[2, 3, 4, 2]), Some(&[(3, 4), (4, 3)]), &[1, 2], &[1])?;
            plain.run(ctx, &mut p, &mut records, "D4, α2", 2, None, Some(&[]), &[1, 3, 4], &[1, 3, 4])?;
            let outside_h = plain.set(full_mask(n) & theta_perp(rs));
            p.check(outside_h == vec![1, 3, 4], || json!({ "example": "D4, α2", "quantity": "Π ∖ ℋ", "computed": outside_h }));
        }
        (Family::C, n) => {
            let word: Vec<usize> = (1..n).rev().collect();
            let adm: Vec<(usize, usize)> = (1..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            plain.run(ctx, &mut p, &mut records, "C_n, α_n", n, Some(&word), Some(&adm), &[1, n], &[n])?;
        }
        (Family::E, 6) => {
            let e6 = ExampleFrame { rs, to_internal: e6_internal, to_label: e6_label };
            e6.run(
                ctx,
                &mut p,
                &mut records,
                "E6, α3",
                3,
                Some(&[6, 4, 2, 5, 3, 1, 2, 4, 3, 6]),
                Some(&[(1, 4), (5, 2)]),
                &[1, 3, 5, 6],
                &[1, 3, 5],
            )?;
            e6.run(
                ctx,
                &mut p,
                &mut records,
                "E6, α2",
                2,
                Some(&[3, 6, 4, 5, 3, 1, 2, 4, 3, 6]),
                Some(&[(4, 3), (5, 2), (6, 5)]),
                &[1, 4, 6],
                &[1, 4],
            )?;
        }
        _ => return Outcome::skip("no worked example for this type"),
    }
    let mut out = p.finish()?;
    out.witnesses.extend(records);
    Ok(out)
}

fn grading_tail_abelian(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let rank = rs.rank();
    let mut p = Probe::default();
    for bits in 0..1u64 << rank {
        let s = SimpleSubset::excluded(rank, bits);
        let h = height(rs, &s);
        if h == 0 {
            continue;
        }
        let ok = gradings::tail(rs, &s, gradings::abelian_threshold(h)).map(|t| t.is_abelian(rs));
        p.check(matches!(ok, Ok(true)), || json!({ "S": labels(bits), "height": h }));
    }
    p.finish()
}

fn thm_alpha_theta_grading(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let Some(at) = rs.alpha_theta() else {
        return Outcome::skip("θ not fundamental");
    };
    let s = ctx.levi_min(at)?.as_excluded();
    let adjacent = rs.neighbours(at).into_iter().fold(0u64, |acc, j| acc | 1 << j);
    let h = height(rs, &s);
    let t = gradings::tail(rs, &s, 2)?;
    let a = &ctx.fiber(at)?.min_ideal;
    let mut p = Probe::default();
    p.check(s.excluded_bits() == adjacent, || json!({ "S": labels(s.excluded_bits()) }));
    p.check(rs.is_long(at), || json!({ "alpha_theta_short": at + 1 }));
    p.check(rs.coefficient(rs.theta(), at) == 2, || json!({ "coefficient": rs.coefficient(rs.theta(), at) }));
    p.check(h == 3, || json!({ "height": h }));
    p.check(t.roots() == a.roots(), || json!({ "tail": t.roots().indices(), "ideal": a.roots().indices() }));
    p.note("alpha_theta", at + 1);
    p.finish()
}

fn thm_heights(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    for k in rs.long_simples() {
        let n = rs.coefficient(rs.theta(), k);
        let f = ctx.fiber(k)?;
        let smax = ctx.levi_max(k)?.as_excluded();
        let hmax = height(rs, &smax);
        let tmax = gradings::tail(rs, &smax, n)?;
        p.check(hmax == 2 * n - 1 && tmax.roots() == f.max_ideal.roots(), || {
            json!({ "alpha": k + 1, "n": n, "height_max": hmax, "tail": tmax.roots().indices(), "ideal_max": f.max_ideal.roots().indices() })
        });
        if rs.inner_idx(k, rs.theta()) == 0 {
            let smin = ctx.levi_min(k)?.as_excluded();
            let hmin = height(rs, &smin);
            let tmin = gradings::tail(rs, &smin, n + 1)?;
            p.check(hmin == 2 * n + 1 && tmin.roots() == f.min_ideal.roots(), || {
                json!({ "alpha": k + 1, "n": n, "height_min": hmin, "tail": tmin.roots().indices(), "ideal_min": f.min_ideal.roots().indices() })
            });
        }
    }
    p.finish()
}

fn rmk_height_gap(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let heis = heis_bits(rs);
    let mut p = Probe::default();
    for k in rs.long_simples() {
        if rs.inner_idx(k, rs.theta()) != 0 {
            continue;
        }
        let (smin, smax) = (ctx.levi_min(k)?.as_excluded(), ctx.levi_max(k)?.as_excluded());
        let (hmin, hmax) = (height(rs, &smin), height(rs, &smax));
        let heis_weight: i32 = bit_indices(heis).into_iter().map(|j| rs.coefficient(rs.theta(), j)).sum();
        p.check(hmin == hmax + 2 && smin.excluded_bits() == heis | smax.excluded_bits() && heis_weight == 2, || {
            json!({ "alpha": k + 1, "height_min": hmin, "height_max": hmax })
        });
    }
    p.finish()
}

fn ex_n_tap_one(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let theta = rs.theta();
    let cases: Vec<usize> = rs.long_simples().into_iter().filter(|&k| rs.coefficient(theta, k) == 1).collect();
    if cases.is_empty() {
        return Outcome::skip("no long simple root with [θ:α̃] = 1");
    }
    let mut p = Probe::default();
    for k in cases {
        let f = ctx.fiber(k)?;
        let expected = RootSet::from_indices(rs.num_pos(), (0..rs.num_pos()).filter(|&i| rs.coefficient(i, k) == 1));
        let smax = ctx.levi_max(k)?.as_excluded();
        p.check(f.max_ideal.roots() == &expected && smax.excluded_bits() == 1 << k && height(rs, &smax) == 1, || {
            json!({ "alpha": k + 1, "S_max": labels(smax.excluded_bits()), "ideal_max": f.max_ideal.roots().indices() })
        });
        if let Some(at) = rs.alpha_theta() {
            let smin = ctx.levi_min(k)?.as_excluded();
            let t = gradings::tail(rs, &smin, 2)?;
            p.check(
                k != at
                    && rs.inner_idx(k, theta) == 0
                    && smin.excluded_bits() == (1 << k | 1 << at)
                    && height(rs, &smin) == 3
                    && t.roots() == f.min_ideal.roots(),
                || json!({ "alpha": k + 1, "S_min": labels(smin.excluded_bits()), "height_min": height(rs, &smin) }),
            );
        }
    }
    p.finish()
}

/// `f₁` on every ideal and `f₂` on every parabolic, as excluded bitmasks and catalogue positions.
fn map_tables(ctx: &Ctx) -> Result<(Vec<u64>, Vec<usize>)> {
    let rs = &ctx.rs;
    let rank = rs.rank();
    let f1: Vec<u64> = ctx
        .catalogue
        .ideals
        .iter()
        .map(|a| gradings::f1(rs, a).map(|s| s.excluded_bits()))
        .collect::<Result<_>>()?;
    let f2: Vec<usize> = (0..1u64 << rank)
        .map(|bits| {
            let a = gradings::f2(rs, &SimpleSubset::excluded(rank, bits))?;
            ctx.catalogue
                .position(&a)
                .ok_or_else(|| Error::Internal("f₂ produced an unlisted ideal".into()))
        })
        .collect::<Result<_>>()?;
    Ok((f1, f2))
}

#[allow(non_snake_case)]
fn thm_f2_bijection_AC(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    if !matches!(rs.type_id().family(), Family::A | Family::C) {
        return Outcome::skip("bijection asserted in types A and C only");
    }
    let (f1, f2) = map_tables(ctx)?;
    let mut p = Probe::default();
    for (bits, &a) in f2.iter().enumerate() {
        p.check(f1[a] == bits as u64, || json!({ "S": labels(bits as u64), "f1_f2": labels(f1[a]) }));
    }
    for (a, &s) in f1.iter().enumerate() {
        p.check(f2[s as usize] == a, || {
            json!({ "ideal": ctx.catalogue.ideals[a].roots().indices(), "f2_f1": ctx.catalogue.ideals[f2[s as usize]].roots().indices() })
        });
    }
    p.finish()
}

fn thm_f2_collision(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    if !rs.theta_fundamental() {
        return Outcome::skip("θ not fundamental");
    }
    let (s1, s2) = gradings::collision_pair(rs)?;
    let (a1, a2) = (gradings::f2(rs, &s1)?, gradings::f2(rs, &s2)?);
    let mut p = Probe::default();
    p.check(s1 != s2 && a1 == a2, || json!({ "S1": labels(s1.excluded_bits()), "S2": labels(s2.excluded_bits()) }));
    p.note("S1", labels(s1.excluded_bits()));
    p.note("S2", labels(s2.excluded_bits()));
    p.note("ideal", a1.roots().indices());
    p.finish()
}

#[allow(non_snake_case)]
fn rmk_F_extensive(ctx: &Ctx) -> Result<Outcome> {
    let (f1, f2) = map_tables(ctx)?;
    let mut p = Probe::default();
    for (bits, &a) in f2.iter().enumerate() {
        // 𝔭(S') ⊇ 𝔭(S) iff S' ⊆ S
        p.check(f1[a] & !(bits as u64) == 0, || json!({ "S": labels(bits as u64), "F": labels(f1[a]) }));
    }
    p.finish()
}

fn rmk_reflexive_extremes(ctx: &Ctx) -> Result<Outcome> {
    let rs = &ctx.rs;
    let mut p = Probe::default();
    for k in rs.long_simples() {
        let f = ctx.fiber(k)?;
        for a in [&f.min_ideal, &f.max_ideal] {
            let back: AbelianIdeal = gradings::f2(rs, &gradings::f1(rs, a)?)?;
            p.check(back == *a, || json!({ "alpha": k + 1, "ideal": a.roots().indices(), "F_tilde": back.roots().indices() }));
        }
    }
    p.finish()
}

fn scan_conjectures(ctx: &Ctx) -> Result<Outcome> {
    let report = gradings::scan_maps(&ctx.rs)?;
    let value = serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(Outcome { verdict: Verdict::Pass, witnesses: vec![value] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn run(id: &str, t: &str) -> CheckResult {
        run_check(id, &build_root_system(t.parse().unwrap())).unwrap()
    }

    #[test]
    fn registry_ids_are_unique() {
        let ids: BTreeSet<&str> = REGISTRY.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), REGISTRY.len());
        assert_eq!(REGISTRY.iter().filter(|c| c.report_only).count(), 1);
    }

    #[test]
    fn peterson_count_e8() {
        let r = run("peterson_count", "E8");
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.witnesses[0]["count"], 256);
    }

    #[test]
    fn collision_skips_in_a5() {
        let r = run("thm_f2_collision", "A5");
        assert_eq!(r.verdict, Verdict::Skipped { reason: "θ not fundamental".into() });
    }

    #[test]
    fn d4_examples_pass() {
        let r = run("examples_3x", "D4");
        assert_eq!(r.verdict, Verdict::Pass, "{:#?}", r.witnesses);
        let records: Vec<_> = r.witnesses.iter().filter(|w| w.get("example").is_some()).collect();
        assert!(records.iter().all(|w| w["match"] == true));
        let word = records.iter().find(|w| w["quantity"] == "word_as_group_element").unwrap();
        assert_eq!(word["letters_match"], true);
    }

    #[test]
    fn a1_degenerate_checks_skip_or_pass() {
        let report = run_all(&["A1".parse().unwrap()], &VerifyConfig::default()).unwrap();
        assert!(!report.failed(), "{}", report.to_markdown());
        let incl = report.results.iter().find(|r| r.check_id == "thm_S_inclusion").unwrap();
        assert!(matches!(incl.verdict, Verdict::Skipped { .. }));
    }

    #[test]
    fn unknown_check_is_rejected() {
        let rs = build_root_system("A2".parse().unwrap());
        assert!(matches!(run_check("nope", &rs), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn report_round_trips_through_json() {
        let cfg = VerifyConfig { checks: Some(vec!["peterson_count".into(), "examples_3x".into()]), ..Default::default() };
        let report = run_all(&["A3".parse().unwrap(), "G2".parse().unwrap()], &cfg).unwrap();
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
        assert_eq!(report.results[0].check_id, "peterson_count");
        assert_eq!(report.results[2].check_id, "examples_3x");
    }
}
