//! Verification suites that re-check the structural results on small graphs,
//! exhaustively over labelled graphs or on seeded random samples.
//!
//! Every suite is split into independent instances (edge masks or trial
//! indices). Instances run in parallel on the current rayon pool and are
//! merged in index order, so a report depends only on the suite parameters.
//! A failing instance is kept as a [`Counterexample`] that [`replay`] can
//! re-check in isolation.

use std::fmt;
use std::ops::Range;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    amalgamate, family_recipe, g6, h_graph, lambda, lambda_minus, random_block_graph, random_tree,
    strong_product,
};
use crate::error::{Error, Result};
use crate::formats::emit_graph6;
use crate::graph::{Edge, Graph, VertexSet};
use crate::solver::{
    forced_vertices, is_mixed_resolving_set, mdim_by_formula, mdim_exact, mdim_upper_greedy, witness_failure,
};
use crate::structure::{
    all_have_maximal_neighbor, cut_vertices_and_blocks, is_tree, maximal_neighbor_witness, pendant_vertices,
    universal_vertices,
};

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_CUT_TRIALS: u64 = 500;
pub const DEFAULT_BLOCK_TRIALS: u64 = 200;
pub const DEFAULT_SOLVER_TRIALS: u64 = 500;
pub const DELTA_SAMPLES: usize = 1000;
/// Largest order of the random graphs drawn by the seeded suites.
pub const RANDOM_MAX_ORDER: usize = 9;

const CHUNK: u64 = 1 << 12;

/// Every labelled connected graph on `n` vertices, by ascending edge mask.
pub fn enumerate_labeled_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let range = mask_range(n)?;
    Ok(enumerate_mask_range(n, range))
}

/// The connected graphs among the masks in `range`; ranges partition the
/// enumeration for parallel workers.
pub fn enumerate_mask_range(n: usize, range: Range<u64>) -> impl Iterator<Item = Graph> {
    range.filter_map(move |mask| connected_from_mask(n, mask))
}

/// All edge masks for order `n`, `2 <= n <= 7`.
pub fn mask_range(n: usize) -> Result<Range<u64>> {
    if !(2..=7).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: 2, max: 7 });
    }
    Ok(0..1u64 << (n * (n - 1) / 2))
}

fn connected_from_mask(n: usize, mask: u64) -> Option<Graph> {
    // a connected graph has at least n - 1 edges
    if (mask.count_ones() as usize) + 1 < n {
        return None;
    }
    let g = Graph::from_upper_mask(n, mask).ok()?;
    g.is_connected().then_some(g)
}

/// Vertex bijection search for graphs of order at most 8.
pub fn are_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    for gr in [g, h] {
        if gr.order() > 8 {
            return Err(Error::OrderOutOfRange { n: gr.order(), min: 1, max: 8 });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; g.order()];
    Ok(extend_isomorphism(g, h, 0, VertexSet::empty(), &mut image))
}

fn extend_isomorphism(g: &Graph, h: &Graph, v: usize, used: VertexSet, image: &mut [usize]) -> bool {
    if v == g.order() {
        return true;
    }
    for w in VertexSet::full(h.order()).difference(used).iter() {
        if g.degree(v) != h.degree(w) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        if extend_isomorphism(g, h, v + 1, used.with(w), image) {
            return true;
        }
    }
    false
}

/// The property a single instance is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// `mdim = n` iff every vertex has a maximal neighbor.
    Characterization,
    /// Order at least 7 and maximum degree at most 4 rule out the predicate.
    DeltaPredicate,
    /// Exact dimension below the order.
    DeltaSample,
    /// Order 6, maximum degree 4 and the predicate imply `≅ G_6`.
    G6Unique,
    /// `mdim ≤ n − ζ`, with equality iff every non-cut vertex has a maximal neighbor.
    CutBound,
    /// Dropping cut vertex `params[0]` from resolving set `params[1..]` keeps it resolving.
    CutRemoval,
    TreeLeaves,
    BlockGraph,
    TwoUniversal,
    OneUniversal,
    /// `G ⊠ K_2` satisfies the predicate; the graph stored is `G`.
    StrongProduct,
    /// `mdim(G ⊠ K_2) = 2 n(G)`; the graph stored is `G`.
    StrongProductDimension,
    /// The stored amalgam satisfies the predicate.
    Amalgam,
    /// The stored graph has order `params[0]`, maximum degree `params[1]` and
    /// satisfies the predicate.
    FamilyRecipe,
    /// Order identities for `Λ_{k,r}` (`params[2] = 0`) or `Λ⁻_{k,r}` (`= 1`).
    LambdaOrder,
    /// Pruned and unpruned search agree; forced vertices lie in both bases;
    /// a closed form, when one applies, agrees; greedy is a valid upper bound.
    SolverConsistency,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        f.write_str(&s)
    }
}

type CheckResult = std::result::Result<(), String>;

fn exact(g: &Graph) -> std::result::Result<usize, String> {
    mdim_exact(g, false).map(|r| r.dimension).map_err(|e| e.to_string())
}

/// Runs one instance check; `Err` carries a description of the violation.
pub fn run_check(check: Check, g: &Graph, params: &[usize]) -> CheckResult {
    let n = g.order();
    let err = |e: Error| e.to_string();
    match check {
        Check::Characterization => {
            let dim = exact(g)?;
            let predicate = all_have_maximal_neighbor(g);
            if (dim == n) != predicate {
                return Err(format!("mdim = {dim}, n = {n}, every vertex has a maximal neighbor: {predicate}"));
            }
        }
        Check::DeltaPredicate => {
            if n >= 7 && g.max_degree() <= 4 && all_have_maximal_neighbor(g) {
                return Err(format!("n = {n}, max degree {}, every vertex has a maximal neighbor", g.max_degree()));
            }
        }
        Check::DeltaSample => {
            let dim = exact(g)?;
            if dim >= n {
                return Err(format!("mdim = {dim} = n with max degree {}", g.max_degree()));
            }
        }
        Check::G6Unique => {
            if n == 6 && g.max_degree() == 4 && all_have_maximal_neighbor(g) && !are_isomorphic_small(g, &g6()).map_err(err)? {
                return Err("max-mdim graph with n = 6, max degree 4 not isomorphic to G6".into());
            }
        }
        Check::CutBound => {
            let dim = exact(g)?;
            let cut = cut_vertices_and_blocks(g).map_err(err)?.cut_vertices;
            let bound = n - cut.len();
            if dim > bound {
                return Err(format!("mdim = {dim} > n - zeta = {bound}"));
            }
            let lacking = VertexSet::full(n)
                .difference(cut)
                .iter()
                .find(|&v| maximal_neighbor_witness(g, v).is_none());
            if (dim == bound) != lacking.is_none() {
                return Err(match lacking {
                    Some(v) => format!("mdim = n - zeta = {bound} but non-cut vertex {v} has no maximal neighbor"),
                    None => format!("every non-cut vertex has a maximal neighbor but mdim = {dim} < {bound}"),
                });
            }
        }
        Check::CutRemoval => {
            let (&v, rest) = params.split_first().ok_or("missing cut vertex parameter")?;
            let w: VertexSet = rest.iter().copied().collect();
            let cut = cut_vertices_and_blocks(g).map_err(err)?.cut_vertices;
            if cut.contains(v) && w.contains(v) && is_mixed_resolving_set(g, w).map_err(err)? {
                if let Some(pair) = witness_failure(g, w.without(v)).map_err(err)? {
                    return Err(format!("W = {w} resolves but W - {{{v}}} leaves {pair}"));
                }
            }
        }
        Check::TreeLeaves => {
            let dim = exact(g)?;
            let leaves = pendant_vertices(g).len();
            if is_tree(g) && dim != leaves {
                return Err(format!("tree with {leaves} leaves has mdim = {dim}"));
            }
        }
        Check::BlockGraph => {
            let dim = exact(g)?;
            let dec = cut_vertices_and_blocks(g).map_err(err)?;
            let zeta = dec.cut_vertices.len();
            let is_block = dec.blocks.iter().all(|&b| crate::structure::is_clique(g, b));
            if is_block && dim != n - zeta {
                return Err(format!("block graph with n - zeta = {} has mdim = {dim}", n - zeta));
            }
        }
        Check::TwoUniversal => {
            let dim = exact(g)?;
            if universal_vertices(g).len() >= 2 && dim != n {
                return Err(format!("{} universal vertices but mdim = {dim} < n", universal_vertices(g).len()));
            }
        }
        Check::OneUniversal => {
            let dim = exact(g)?;
            if universal_vertices(g).len() == 1 && dim != n - 1 {
                return Err(format!("one universal vertex but mdim = {dim} != n - 1"));
            }
        }
        Check::StrongProduct => {
            let p = strong_product(g, &k2()).map_err(err)?;
            if !all_have_maximal_neighbor(&p) {
                let v = (0..p.order()).find(|&v| maximal_neighbor_witness(&p, v).is_none()).unwrap_or(0);
                return Err(format!("vertex {v} of G x K2 has no maximal neighbor"));
            }
        }
        Check::StrongProductDimension => {
            let p = strong_product(g, &k2()).map_err(err)?;
            let dim = exact(&p)?;
            if dim != 2 * n {
                return Err(format!("mdim(G x K2) = {dim}, expected {}", 2 * n));
            }
        }
        Check::Amalgam => {
            if !all_have_maximal_neighbor(g) {
                let v = (0..n).find(|&v| maximal_neighbor_witness(g, v).is_none()).unwrap_or(0);
                return Err(format!("vertex {v} of the amalgam has no maximal neighbor"));
            }
        }
        Check::FamilyRecipe => {
            let [order, degree] = params else {
                return Err("expected parameters [n, t]".into());
            };
            let mut problems = Vec::new();
            if n != *order {
                problems.push(format!("order {n} != {order}"));
            }
            if g.max_degree() != *degree {
                problems.push(format!("max degree {} != {degree}", g.max_degree()));
            }
            if !all_have_maximal_neighbor(g) {
                problems.push("some vertex has no maximal neighbor".into());
            }
            if !problems.is_empty() {
                return Err(problems.join("; "));
            }
        }
        Check::LambdaOrder => {
            let [k, r, minus] = params else {
                return Err("expected parameters [k, r, minus]".into());
            };
            let expected = k + 2 * (r - 1) - minus;
            if n != expected {
                return Err(format!("order {n}, expected {expected}"));
            }
        }
        Check::SolverConsistency => {
            let pruned = mdim_exact(g, true).map_err(err)?;
            let full = mdim_exact(g, false).map_err(err)?;
            if pruned.dimension != full.dimension {
                return Err(format!("pruned {} != unpruned {}", pruned.dimension, full.dimension));
            }
            let forced = forced_vertices(g);
            for r in [&pruned, &full] {
                if !forced.is_subset(r.basis) {
                    return Err(format!("forced {forced} not inside basis {}", r.basis));
                }
                if !is_mixed_resolving_set(g, r.basis).map_err(err)? {
                    return Err(format!("basis {} does not resolve", r.basis));
                }
            }
            if let Some((dim, tag)) = mdim_by_formula(g).map_err(err)? {
                if dim != full.dimension {
                    return Err(format!("{tag} formula gives {dim}, search gives {}", full.dimension));
                }
            }
            let (size, w) = mdim_upper_greedy(g).map_err(err)?;
            if size < full.dimension || !is_mixed_resolving_set(g, w).map_err(err)? {
                return Err(format!("greedy returned {w} against mdim {}", full.dimension));
            }
        }
    }
    Ok(())
}

fn k2() -> Graph {
    Graph::complete(2).expect("K2")
}

/// A failing instance, replayable with [`replay`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: Check,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub graph6: String,
    pub params: Vec<usize>,
    pub witness: String,
}

impl Counterexample {
    fn new(check: Check, g: &Graph, params: Vec<usize>, witness: String) -> Self {
        Counterexample { check, n: g.order(), edges: g.edge_pairs(), graph6: emit_graph6(g), params, witness }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edge_list(self.n, &self.edges)
    }
}

/// Re-runs the recorded check; `Ok(true)` when the instance still fails.
pub fn replay(cx: &Counterexample) -> Result<bool> {
    Ok(run_check(cx.check, &cx.graph()?, &cx.params).is_err())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: String,
    pub instances_checked: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn from_tally(suite: &str, parameters: String, tally: Tally, started: Instant) -> Self {
        let mut notes = tally.notes;
        if tally.failures > 1 {
            notes.push(format!("{} failing instances in total", tally.failures));
        }
        VerificationReport {
            suite: suite.into(),
            parameters,
            instances_checked: tally.checked,
            passed: tally.failure.is_none(),
            counterexample: tally.failure,
            notes,
            elapsed: started.elapsed(),
        }
    }

    /// Combines part reports; the first failing part supplies the counterexample.
    pub fn merge(suite: &str, parameters: String, parts: Vec<VerificationReport>) -> Self {
        let mut out = VerificationReport {
            suite: suite.into(),
            parameters,
            instances_checked: 0,
            passed: true,
            counterexample: None,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        };
        for part in parts {
            out.instances_checked += part.instances_checked;
            out.passed &= part.passed;
            if out.counterexample.is_none() {
                out.counterexample = part.counterexample;
            }
            let status = if part.passed { "ok" } else { "FAILED" };
            let label = format!("{} ({})", part.suite, part.parameters);
            out.notes.push(format!("{label}: {status}, {} instances", part.instances_checked));
            out.notes.extend(part.notes.into_iter().map(|n| format!("{label}: {n}")));
            out.elapsed += part.elapsed;
        }
        out
    }

    pub fn render_text(&self, timings: bool) -> String {
        let mut out = format!(
            "suite {} ({}): {} after {} instances\n",
            self.suite,
            self.parameters,
            if self.passed { "PASSED" } else { "FAILED" },
            self.instances_checked
        );
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        if let Some(cx) = &self.counterexample {
            out.push_str(&format!(
                "  counterexample [{}] n={} graph6={} params={:?}\n  edges: {:?}\n  witness: {}\n",
                cx.check, cx.n, cx.graph6, cx.params, cx.edges, cx.witness
            ));
        }
        if timings {
            out.push_str(&format!("  elapsed: {:.3}s\n", self.elapsed.as_secs_f64()));
        }
        out
    }
}

/// Outcome of one instance.
#[derive(Default)]
struct Step {
    checked: u64,
    flagged: u64,
    extra: u64,
    failure: Option<Counterexample>,
    failures: u64,
}

impl Step {
    fn skip() -> Self {
        Step::default()
    }

    fn check(check: Check, g: &Graph, params: Vec<usize>) -> Self {
        Step::check_flagged(check, g, params, false)
    }

    fn check_flagged(check: Check, g: &Graph, params: Vec<usize>, flagged: bool) -> Self {
        let failure = run_check(check, g, &params).err().map(|w| Counterexample::new(check, g, params, w));
        Step { checked: 1, flagged: u64::from(flagged), extra: 0, failures: u64::from(failure.is_some()), failure }
    }

    fn absorb(&mut self, other: Step) {
        self.checked += other.checked;
        self.flagged += other.flagged;
        self.extra += other.extra;
        self.failures += other.failures;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: u64,
    failure: Option<Counterexample>,
    notes: Vec<String>,
}

impl Tally {
    fn add(&mut self, step: Step) -> u64 {
        self.checked += step.checked;
        self.failures += step.failures;
        if self.failure.is_none() {
            self.failure = step.failure;
        }
        step.flagged
    }
}

/// Runs `f` over `range` in parallel chunks, merging in index order.
fn scan<F>(range: Range<u64>, f: F) -> Step
where
    F: Fn(u64) -> Step + Sync,
{
    let starts: Vec<u64> = (range.start..range.end).step_by(CHUNK as usize).collect();
    let parts: Vec<Step> = starts
        .into_par_iter()
        .map(|start| {
            let mut acc = Step::default();
            for i in start..(start + CHUNK).min(range.end) {
                acc.absorb(f(i));
            }
            acc
        })
        .collect();
    let mut total = Step::default();
    for p in parts {
        total.absorb(p);
    }
    total
}

/// Per-trial generator: one ChaCha stream per index.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomModel {
    Tree,
    Unicyclic,
    BlockGraph,
    ErdosRenyi,
}

const MODELS: [RandomModel; 4] =
    [RandomModel::Tree, RandomModel::Unicyclic, RandomModel::BlockGraph, RandomModel::ErdosRenyi];

/// A connected graph on `n` vertices from the given model.
pub fn random_connected<R: Rng>(model: RandomModel, n: usize, rng: &mut R) -> Result<Graph> {
    match model {
        RandomModel::Tree => random_tree(n, rng),
        RandomModel::BlockGraph => random_block_graph(n, rng),
        RandomModel::Unicyclic => {
            let t = random_tree(n, rng)?;
            let non_edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !t.has_edge(u, v)).collect();
            if non_edges.is_empty() {
                return Ok(t);
            }
            let mut edges = t.edge_pairs();
            edges.push(non_edges[rng.gen_range(0..non_edges.len())]);
            Graph::from_edge_list(n, &edges)
        }
        RandomModel::ErdosRenyi => {
            let p: f64 = rng.gen_range(0.2..0.8);
            loop {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edge_list(n, &edges)?;
                if g.is_connected() {
                    return Ok(g);
                }
            }
        }
    }
}

/// Graph of trial `trial` in the cut-bound and solver suites.
pub fn mixed_trial(seed: u64, trial: u64) -> Graph {
    mixed_trial_graph(seed, trial).0
}

/// Graph of trial `trial` in the random block-graph part of the class suite.
pub fn block_trial(seed: u64, trial: u64) -> Graph {
    let mut rng = trial_rng(seed, trial);
    let n = rng.gen_range(2..=RANDOM_MAX_ORDER);
    random_block_graph(n, &mut rng).expect("order within range")
}

/// Trial `i` of the mixed-model generator: model `i mod 4`, order uniform in
/// `2..=RANDOM_MAX_ORDER`.
fn mixed_trial_graph(seed: u64, trial: u64) -> (Graph, ChaCha8Rng) {
    let mut rng = trial_rng(seed, trial);
    let model = MODELS[(trial % 4) as usize];
    let n = rng.gen_range(2..=RANDOM_MAX_ORDER);
    let g = random_connected(model, n, &mut rng).expect("order within range");
    (g, rng)
}

fn exhaustive(n_range: std::ops::RangeInclusive<usize>, f: impl Fn(&Graph) -> Step + Sync) -> Step {
    let mut total = Step::default();
    for n in n_range {
        let range = mask_range(n).expect("order within enumeration range");
        total.absorb(scan(range, |mask| connected_from_mask(n, mask).map_or_else(Step::skip, |g| f(&g))));
    }
    total
}

/// `mdim(G) = n` exactly when every vertex has a maximal neighbor, over all
/// connected labelled graphs of order `n`.
pub fn verify_characterization(n: usize) -> Result<VerificationReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: 2, max: 6 });
    }
    let started = Instant::now();
    let step = exhaustive(n..=n, |g| {
        let mut s = Step::check_flagged(Check::Characterization, g, vec![], all_have_maximal_neighbor(g));
        s.extra = u64::from(mdim_exact(g, false).is_ok_and(|r| r.dimension == n));
        s
    });
    let mut tally = Tally::default();
    let full = step.extra;
    let flagged = tally.add(step);
    tally.notes.push(format!("{flagged} labelled graphs where every vertex has a maximal neighbor"));
    tally.notes.push(format!("{full} labelled graphs with mdim = n"));
    Ok(VerificationReport::from_tally("characterization", format!("n={n}"), tally, started))
}

/// No connected graph on 7 vertices with maximum degree at most 4 has every
/// vertex with a maximal neighbor; a seeded sample is cross-checked with the
/// exact solver.
pub fn verify_delta_theorem() -> VerificationReport {
    verify_delta_theorem_with(DELTA_SAMPLES, DEFAULT_SEED)
}

pub fn verify_delta_theorem_with(samples: usize, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let n = 7;
    let range = mask_range(n).expect("7 is enumerable");
    let starts: Vec<u64> = (range.start..range.end).step_by(CHUNK as usize).collect();
    let parts: Vec<(Step, Vec<u64>)> = starts
        .into_par_iter()
        .map(|start| {
            let mut acc = Step::default();
            let mut masks = Vec::new();
            for mask in start..(start + CHUNK).min(range.end) {
                if let Some(g) = connected_from_mask(n, mask).filter(|g| g.max_degree() <= 4) {
                    acc.absorb(Step::check(Check::DeltaPredicate, &g, vec![]));
                    masks.push(mask);
                }
            }
            (acc, masks)
        })
        .collect();
    let mut tally = Tally::default();
    let mut chemical = Vec::new();
    for (step, masks) in parts {
        tally.add(step);
        chemical.extend(masks);
    }
    tally.notes.push(format!("{} connected labelled chemical graphs on 7 vertices", chemical.len()));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks = sample(&mut rng, chemical.len(), samples.min(chemical.len())).into_vec();
    let sampled: Vec<Step> = picks
        .par_iter()
        .map(|&i| {
            let g = Graph::from_upper_mask(n, chemical[i]).expect("enumerated mask");
            Step::check(Check::DeltaSample, &g, vec![])
        })
        .collect();
    let mut sample_step = Step::default();
    for s in sampled {
        sample_step.absorb(s);
    }
    let max_dim_note = format!("{} sampled graphs solved exactly", sample_step.checked);
    tally.add(sample_step);
    tally.notes.push(max_dim_note);
    VerificationReport::from_tally("delta", format!("n=7 samples={samples} seed={seed}"), tally, started)
}

/// Every connected labelled graph on 6 vertices with maximum degree 4 whose
/// vertices all have maximal neighbors is isomorphic to `G_6`.
pub fn verify_g6_uniqueness() -> VerificationReport {
    let started = Instant::now();
    let reference = g6();
    let mut tally = Tally::default();
    tally.add(Step::check(Check::Amalgam, &reference, vec![]));
    let step = exhaustive(6..=6, |g| {
        if g.max_degree() == 4 && all_have_maximal_neighbor(g) {
            Step::check_flagged(Check::G6Unique, g, vec![], true)
        } else {
            Step::skip()
        }
    });
    let found = tally.add(step);
    tally.notes.push(format!("{found} labelled max-mdim graphs with n = 6 and max degree 4"));
    if found == 0 && tally.failure.is_none() {
        tally.failure = Some(Counterexample::new(
            Check::G6Unique,
            &reference,
            vec![],
            "no labelled copy of G6 found by the enumeration".into(),
        ));
    }
    VerificationReport::from_tally("g6-uniqueness", "n=6".into(), tally, started)
}

/// `mdim ≤ n − ζ` with its equality condition, and removal of cut vertices
/// from resolving sets, on seeded random connected graphs.
pub fn verify_cut_bound(trials: u64, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    let fixed = [
        crate::constructions::path(5).expect("P5"),
        Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)]).expect("C6 + pendant"),
    ];
    for g in &fixed {
        tally.add(Step::check(Check::CutBound, g, vec![]));
    }
    let step = scan(0..trials, |trial| {
        let (g, mut rng) = mixed_trial_graph(seed, trial);
        let mut acc = Step::check(Check::CutBound, &g, vec![]);
        acc.absorb(cut_removal_steps(&g, &mut rng));
        let zeta = cut_vertices_and_blocks(&g).map(|d| d.cut_vertices.len()).unwrap_or(0);
        acc.flagged = u64::from(mdim_exact(&g, true).is_ok_and(|r| r.dimension == g.order() - zeta));
        acc
    });
    let equal = tally.add(step);
    tally.notes.push(format!("{equal} of {trials} random graphs attain mdim = n - zeta"));
    VerificationReport::from_tally("cut-bound", format!("trials={trials} seed={seed}"), tally, started)
}

/// Random supersets of a basis, each checked with every cut vertex removed.
fn cut_removal_steps(g: &Graph, rng: &mut ChaCha8Rng) -> Step {
    let mut acc = Step::default();
    let Ok(result) = mdim_exact(g, false) else {
        return acc;
    };
    let cut = cut_vertices_and_blocks(g).map(|d| d.cut_vertices).unwrap_or_default();
    let mut sets = vec![VertexSet::full(g.order()), result.basis];
    for _ in 0..2 {
        let extra: VertexSet = (0..g.order()).filter(|_| rng.gen_bool(0.5)).collect();
        sets.push(result.basis.union(extra));
    }
    for w in sets {
        for v in w.intersection(cut).iter() {
            let params = std::iter::once(v).chain(w.iter()).collect();
            acc.absorb(Step::check(Check::CutRemoval, g, params));
        }
    }
    acc
}

/// Closed forms: trees, block graphs, and graphs with universal vertices.
pub fn verify_class_formulas(trials: u64, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    let star = crate::constructions::star(5).expect("K_{1,5}");
    let k4k4 = Graph::from_edge_list(
        7,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
    )
    .expect("two K4 sharing a vertex");
    let wheel = Graph::from_edge_list(
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 5), (2, 5), (3, 5), (4, 5)],
    )
    .expect("W5");
    tally.add(Step::check(Check::TreeLeaves, &star, vec![]));
    tally.add(Step::check(Check::BlockGraph, &k4k4, vec![]));
    tally.add(Step::check(Check::OneUniversal, &wheel, vec![]));

    let trees = exhaustive(2..=7, |g| if is_tree(g) { Step::check(Check::TreeLeaves, g, vec![]) } else { Step::skip() });
    let tree_count = trees.checked;
    tally.add(trees);
    tally.notes.push(format!("{tree_count} labelled trees with n <= 7"));

    let blocks = scan(0..trials, |trial| Step::check(Check::BlockGraph, &block_trial(seed, trial), vec![]));
    tally.add(blocks);

    let universal = exhaustive(2..=6, |g| match universal_vertices(g).len() {
        0 => Step::skip(),
        1 => Step::check_flagged(Check::OneUniversal, g, vec![], true),
        _ => Step::check(Check::TwoUniversal, g, vec![]),
    });
    let (checked, one) = (universal.checked, universal.flagged);
    tally.add(universal);
    tally.notes.push(format!("{checked} graphs with n <= 6 and a universal vertex, {one} with exactly one"));
    VerificationReport::from_tally("class-formulas", format!("trials={trials} seed={seed}"), tally, started)
}

/// `G ⊠ K_2` for every connected `G` with `n(G) ≤ 5`; exact dimension `2n`
/// for `n(G) ≤ 4`.
pub fn verify_strong_products() -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    let step = exhaustive(2..=5, |g| {
        let mut acc = Step::check(Check::StrongProduct, g, vec![]);
        if g.order() <= 4 {
            acc.absorb(Step::check(Check::StrongProductDimension, g, vec![]));
        }
        acc
    });
    tally.add(step);
    tally.add(Step::check(Check::StrongProduct, &Graph::from_edge_list(1, &[]).expect("K1"), vec![]));
    VerificationReport::from_tally("strong-product", "n<=5".into(), tally, started)
}

/// Amalgams of `K_4..K_6` and `H_4..H_6` along every edge whose endpoints
/// are maximal neighbors of each other.
pub fn verify_amalgams() -> VerificationReport {
    let started = Instant::now();
    let mut pieces = Vec::new();
    for k in 4..=6 {
        pieces.push(Graph::complete(k).expect("clique"));
    }
    for r in 4..=6 {
        pieces.push(h_graph(r).expect("H_r"));
    }
    let mutual = |g: &Graph| -> Vec<Edge> {
        g.edges()
            .filter(|e| {
                let (nu, nv) = (g.closed_neighbors(e.u), g.closed_neighbors(e.v));
                nu == nv
            })
            .collect()
    };
    let mut jobs = Vec::new();
    for (i, g) in pieces.iter().enumerate() {
        for (j, h) in pieces.iter().enumerate() {
            for &eg in &mutual(g) {
                for &eh in &mutual(h) {
                    jobs.push((i, j, eg, eh));
                }
            }
        }
    }
    let steps: Vec<Step> = jobs
        .par_iter()
        .map(|&(i, j, eg, eh)| match amalgamate(&pieces[i], eg, &pieces[j], eh) {
            Ok(a) => Step::check(Check::Amalgam, &a, vec![]),
            Err(e) => {
                let mut s = Step::check(Check::Amalgam, &pieces[i], vec![]);
                s.failure = Some(Counterexample::new(Check::Amalgam, &pieces[i], vec![], e.to_string()));
                s.failures = 1;
                s
            }
        })
        .collect();
    let mut tally = Tally::default();
    for s in steps {
        tally.add(s);
    }
    tally.notes.push(format!("{} amalgams of {} base graphs", jobs.len(), pieces.len()));
    VerificationReport::from_tally("amalgamation", "K4..K6, H4..H6".into(), tally, started)
}

/// For `5 ≤ t ≤ n ≤ 13`, the Λ / Λ⁻ recipe graph has order `n`, maximum
/// degree `t` and every vertex has a maximal neighbor; plus the order
/// identities of `Λ_{k,r}` and `Λ⁻_{k,r}`.
pub fn verify_family_recipe() -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    let mut failing = Vec::new();
    for n in 5..=13 {
        for t in 5..=n {
            let step = match family_recipe(n, t) {
                Ok((g, _)) => Step::check(Check::FamilyRecipe, &g, vec![n, t]),
                Err(e) => {
                    let g = k2();
                    let mut s = Step::check(Check::FamilyRecipe, &g, vec![n, t]);
                    s.failure.get_or_insert_with(|| Counterexample::new(Check::FamilyRecipe, &g, vec![n, t], e.to_string()));
                    s
                }
            };
            if step.failure.is_some() {
                failing.push(format!("({n},{t})"));
            }
            tally.add(step);
        }
    }
    for k in 3..=8 {
        for r in 2..=8 {
            for minus in [0, 1] {
                let g = if minus == 0 { lambda(k, r) } else { lambda_minus(k, r) };
                if let Ok(g) = g {
                    tally.add(Step::check(Check::LambdaOrder, &g, vec![k, r, minus]));
                }
            }
        }
    }
    if !failing.is_empty() {
        tally.notes.push(format!("recipe fails for (n,t) in {}", failing.join(" ")));
    }
    VerificationReport::from_tally("family-recipe", "5<=t<=n<=13".into(), tally, started)
}

pub fn verify_products_and_amalgams() -> VerificationReport {
    let started = Instant::now();
    let mut r = VerificationReport::merge(
        "products",
        "strong products n<=5, amalgams, family recipe".into(),
        vec![verify_strong_products(), verify_amalgams(), verify_family_recipe()],
    );
    r.elapsed = started.elapsed();
    r
}

/// Pruned versus unpruned search, closed forms and the greedy bound, over all
/// connected graphs with `n ≤ 6` and seeded random graphs with `n ≤ 9`.
pub fn verify_solver_consistency(trials: u64, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    tally.add(exhaustive(2..=6, |g| Step::check(Check::SolverConsistency, g, vec![])));
    tally.add(scan(0..trials, |trial| {
        let (g, _) = mixed_trial_graph(seed, trial);
        Step::check(Check::SolverConsistency, &g, vec![])
    }));
    VerificationReport::from_tally("solver", format!("n<=6 exhaustive, trials={trials} seed={seed}"), tally, started)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Characterization,
    Delta,
    G6Uniqueness,
    CutBound,
    ClassFormulas,
    Products,
    Solver,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Characterization,
        Suite::Delta,
        Suite::G6Uniqueness,
        Suite::CutBound,
        Suite::ClassFormulas,
        Suite::Products,
        Suite::Solver,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Order for the characterization suite; `None` runs `2..=6`.
    pub n: Option<usize>,
    pub trials: Option<u64>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: None, trials: None, seed: DEFAULT_SEED }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<VerificationReport> {
    let seed = cfg.seed;
    Ok(match suite {
        Suite::Characterization => match cfg.n {
            Some(n) => verify_characterization(n)?,
            None => {
                let parts = (2..=6).map(verify_characterization).collect::<Result<Vec<_>>>()?;
                VerificationReport::merge("characterization", "n=2..6".into(), parts)
            }
        },
        Suite::Delta => verify_delta_theorem_with(DELTA_SAMPLES, seed),
        Suite::G6Uniqueness => verify_g6_uniqueness(),
        Suite::CutBound => verify_cut_bound(cfg.trials.unwrap_or(DEFAULT_CUT_TRIALS), seed),
        Suite::ClassFormulas => verify_class_formulas(cfg.trials.unwrap_or(DEFAULT_BLOCK_TRIALS), seed),
        Suite::Products => verify_products_and_amalgams(),
        Suite::Solver => verify_solver_consistency(cfg.trials.unwrap_or(DEFAULT_SOLVER_TRIALS), seed),
    })
}
