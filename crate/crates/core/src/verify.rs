//! Desk-scale verification suites: each suite checks a batch of claims
//! about the solver, the synthesizers, and the generators, and reports one
//! pass/fail line per claim.
//!
//! Suites are deterministic given `(options, seed)`: randomized corpora
//! derive one RNG per instance index, so results do not depend on the
//! worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::caterpillar;
use crate::engine::{self, Protocol, UnitMove};
use crate::generators;
use crate::graph::{is_ascending_tree, Graph, RootedTreeView, WeightConfig};
use crate::solver::{self, SolveOutcome};
use crate::synthesis;

#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub claims: Vec<ClaimOutcome>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    /// One line per claim plus a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{}] {}: {}\n", tag, c.name, c.details));
        }
        let status = if self.passed() { "ok" } else { "FAILED" };
        out.push_str(&format!(
            "suite {}: {} ({} claims, {} ms)\n",
            self.suite,
            status,
            self.claims.len(),
            self.elapsed_ms
        ));
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Largest instance size, where a suite scales by size.
    pub max_n: Option<usize>,
    /// Randomized corpus size, where a suite samples.
    pub samples: Option<usize>,
    /// Seed for randomized suites; those suites refuse to run without one.
    pub seed: Option<u64>,
    /// Solver state budget.
    pub budget: u64,
    /// Worker threads for per-instance fan-out.
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            max_n: None,
            samples: None,
            seed: None,
            budget: solver::DEFAULT_STATE_BUDGET,
            jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PathsCycles,
    Figures,
    Diameter2,
    Bounds,
    Td,
    Gmk,
    MaxWeight,
    CaterpillarOracle,
    Properties,
}

impl Suite {
    pub fn all() -> [Suite; 9] {
        [
            Suite::PathsCycles,
            Suite::Figures,
            Suite::Diameter2,
            Suite::Bounds,
            Suite::Td,
            Suite::Gmk,
            Suite::MaxWeight,
            Suite::CaterpillarOracle,
            Suite::Properties,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::PathsCycles => "paths-cycles",
            Suite::Figures => "figures",
            Suite::Diameter2 => "diameter2",
            Suite::Bounds => "bounds",
            Suite::Td => "td",
            Suite::Gmk => "gmk",
            Suite::MaxWeight => "max-weight",
            Suite::CaterpillarOracle => "caterpillar-oracle",
            Suite::Properties => "properties",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::all().into_iter().find(|s| s.name() == name)
    }

    /// Whether the suite draws random corpora and therefore needs a seed.
    pub fn randomized(&self) -> bool {
        matches!(
            self,
            Suite::Diameter2 | Suite::Bounds | Suite::MaxWeight | Suite::Properties
        )
    }
}

/// Runs one suite. Randomized suites require `options.seed`.
pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Result<SuiteReport, String> {
    if suite.randomized() && options.seed.is_none() {
        return Err(format!("suite {} is randomized and requires a seed", suite.name()));
    }
    let start = Instant::now();
    let mut claims = match suite {
        Suite::PathsCycles => paths_cycles(options),
        Suite::Figures => figures(options),
        Suite::Diameter2 => diameter2(options),
        Suite::Bounds => bounds(options),
        Suite::Td => td(options),
        Suite::Gmk => gmk(options),
        Suite::MaxWeight => max_weight(options),
        Suite::CaterpillarOracle => caterpillar_oracle(options),
        Suite::Properties => properties(options),
    };
    claims.shrink_to_fit();
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        claims,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Index-ordered parallel map over a slice; the output order never depends
/// on scheduling.
pub fn parallel_map<T: Sync, R: Send>(
    items: &[T],
    jobs: usize,
    f: impl Fn(&T) -> R + Sync,
) -> Vec<R> {
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs <= 1 {
        return items.iter().map(f).collect();
    }
    let counter = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<R>>> = items.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = counter.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                *slots[i].lock().unwrap() = Some(r);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("worker filled every slot"))
        .collect()
}

fn claim(name: impl Into<String>, pass: bool, details: impl Into<String>) -> ClaimOutcome {
    ClaimOutcome { name: name.into(), pass, details: details.into() }
}

/// Exact solve expecting a conclusive answer; failures become claim text.
fn solve_exact(g: &Graph, budget: u64) -> Result<usize, String> {
    let res = solver::unit_acquisition_number(g, budget).map_err(|e| e.to_string())?;
    match res.outcome {
        SolveOutcome::Exact { value, witness } => {
            let end = engine::replay(g, &witness).map_err(|e| format!("witness replay: {}", e))?;
            if end.support() != value {
                return Err(format!(
                    "witness reaches support {}, reported {}",
                    end.support(),
                    value
                ));
            }
            Ok(value)
        }
        SolveOutcome::Inconclusive { best_upper_bound } => {
            Err(format!("inconclusive, best bound {}", best_upper_bound))
        }
    }
}

fn paths_cycles(options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let max_n = options.max_n.unwrap_or(12);
    let mut instances: Vec<(String, Graph, usize)> = Vec::new();
    for n in 2..=max_n {
        instances.push((format!("path n={}", n), generators::path(n).unwrap(), n.div_ceil(4)));
    }
    for n in 3..=max_n {
        instances.push((format!("cycle n={}", n), generators::cycle(n).unwrap(), n.div_ceil(4)));
    }
    parallel_map(&instances, options.jobs, |(name, g, expected)| {
        match solve_exact(g, options.budget) {
            Ok(value) => claim(
                name,
                value == *expected,
                format!("value {} expected {}", value, expected),
            ),
            Err(e) => claim(name, false, e),
        }
    })
}

fn figures(options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let mut claims = Vec::new();
    let g = generators::cycle_needing_graph();
    match solve_exact(&g, options.budget) {
        Ok(v) => claims.push(claim("cycle-needing graph", v == 1, format!("value {}", v))),
        Err(e) => claims.push(claim("cycle-needing graph", false, e)),
    }
    let edges: Vec<(usize, usize)> = g.edges().to_vec();
    let deletion_claims = parallel_map(&edges, options.jobs, |&(u, v)| {
        let name = format!("cycle-needing graph minus edge {} {}", u, v);
        let cut = g.without_edge(u, v);
        match solver::unit_acquisition_number_components(&cut, options.budget) {
            Ok(total) => claim(name, total == 2, format!("value {}", total)),
            Err(e) => claim(name, false, e.to_string()),
        }
    });
    claims.extend(deletion_claims);

    let t = generators::max_degree3_unit_tree();
    let shape_ok = t.n() == 10 && t.max_degree() == 3 && t.is_tree();
    claims.push(claim(
        "10-vertex degree-3 tree shape",
        shape_ok,
        format!("n={} max-degree={}", t.n(), t.max_degree()),
    ));
    match solve_exact(&t, options.budget) {
        Ok(v) => claims.push(claim("10-vertex degree-3 tree consolidates", v == 1, format!("value {}", v))),
        Err(e) => claims.push(claim("10-vertex degree-3 tree consolidates", false, e)),
    }
    let view = caterpillar::recognize(&t).expect("the tree is a caterpillar");
    let cond = caterpillar::condition_check(&view).is_ok();
    let scan = caterpillar::a_u_caterpillar(&view).value;
    claims.push(claim(
        "10-vertex degree-3 tree run condition",
        cond && scan == 1,
        format!("condition {} scan {}", cond, scan),
    ));
    claims
}

fn diameter2(options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let seed = options.seed.expect("checked by run_suite");
    let samples = options.samples.unwrap_or(1000);
    let max_n = options.max_n.unwrap_or(12);
    let mut claims = Vec::new();

    let p = generators::petersen();
    match solve_exact(&p, options.budget) {
        Ok(v) => claims.push(claim("petersen exact value", v == 2, format!("value {}", v))),
        Err(e) => claims.push(claim("petersen exact value", false, e)),
    }
    match synthesis::level2_protocol(&p, 0) {
        Some(out) => {
            let replayed = engine::replay(&p, &out.protocol)
                .map(|w| w.support())
                .unwrap_or(usize::MAX);
            claims.push(claim(
                "petersen level-2 protocol",
                out.final_support == 2 && replayed == 2,
                format!("support {} replayed {}", out.final_support, replayed),
            ));
        }
        None => claims.push(claim("petersen level-2 protocol", false, "inapplicable")),
    }
    match synthesis::diam2_protocol(&p) {
        Ok(out) => {
            let replayed = engine::replay(&p, &out.protocol)
                .map(|w| w.support())
                .unwrap_or(usize::MAX);
            claims.push(claim(
                "petersen diameter-2 protocol",
                out.final_support == 2 && replayed == 2,
                format!("method {} support {}", out.method, out.final_support),
            ));
        }
        Err(e) => claims.push(claim("petersen diameter-2 protocol", false, e.to_string())),
    }
    let c5 = generators::cycle(5).unwrap();
    match synthesis::diam2_protocol(&c5) {
        Ok(out) => claims.push(claim(
            "5-cycle diameter-2 protocol",
            out.final_support == 2,
            format!("method {} support {}", out.method, out.final_support),
        )),
        Err(e) => claims.push(claim("5-cycle diameter-2 protocol", false, e.to_string())),
    }

    let indices: Vec<usize> = (0..samples).collect();
    let results = parallel_map(&indices, options.jobs, |&i| -> Result<(), String> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let c5 = generators::cycle(5).unwrap();
        let petersen = generators::petersen();
        let mut attempt = 0u64;
        let g = loop {
            let n = rng.random_range(4..=max_n);
            let p_edge = rng.random_range(0.35..0.9);
            let sub_seed = seed
                .wrapping_mul(0x9e3779b97f4a7c15)
                .wrapping_add((i as u64) << 20)
                .wrapping_add(attempt);
            attempt += 1;
            let Ok(g) = generators::random_diameter2_graph(n, p_edge, sub_seed, 2_000) else {
                continue;
            };
            let exceptional = (g.n() == 5 && g.is_isomorphic(&c5))
                || (g.n() == 10 && g.is_isomorphic(&petersen));
            if !exceptional {
                break g;
            }
        };
        let out = synthesis::diam2_protocol(&g).map_err(|e| format!("sample {}: {}", i, e))?;
        let end = engine::replay(&g, &out.protocol).map_err(|e| format!("sample {}: {}", i, e))?;
        if end.support() != 1 || out.final_support != 1 {
            return Err(format!("sample {}: support {}", i, end.support()));
        }
        let value = solve_exact(&g, options.budget).map_err(|e| format!("sample {}: {}", i, e))?;
        if value != 1 {
            return Err(format!("sample {}: solver disagrees, value {}", i, value));
        }
        Ok(())
    });
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    claims.push(claim(
        "random diameter-2 corpus consolidates",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} graphs (n <= {}), protocol support 1 and solver agreed", samples, max_n)
        } else {
            failures[0].clone()
        },
    ));
    claims
}

/// Sandwich check used by the bounds suite.
fn sandwich(g: &Graph, budget: u64) -> Result<(), String> {
    let value = solve_exact(g, budget)?;
    let lower = solver::cut_lower_bound(g).map_err(|e| e.to_string())?;
    for cert in &lower.certificates {
        if !solver::verify_certificate(g, cert) {
            return Err("invalid certificate in lower-bound witness".into());
        }
    }
    let degree_bound = (g.n() - 1) / g.min_degree().max(1);
    let matching_bound = if g.edge_count() > 0 {
        solver::min_maximal_matching(g).map_err(|e| e.to_string())?.0
    } else {
        usize::MAX
    };
    if lower.size > value {
        return Err(format!("cut bound {} exceeds value {}", lower.size, value));
    }
    if g.n() >= 2 && value > degree_bound {
        return Err(format!("value {} exceeds degree bound {}", value, degree_bound));
    }
    if value > matching_bound {
        return Err(format!("value {} exceeds matching bound {}", value, matching_bound));
    }
    Ok(())
}

fn bounds(options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let seed = options.seed.expect("checked by run_suite");
    let samples = options.samples.unwrap_or(10_000);
    let mut claims = Vec::new();

    // Exhaustive over every connected labeled graph on 2..=6 vertices.
    let mut instances: Vec<(usize, u32)> = Vec::new();
    for n in 2..=6usize {
        let bits = n * (n - 1) / 2;
        for mask in 0..(1u32 << bits) {
            instances.push((n, mask));
        }
    }
    let results = parallel_map(&instances, options.jobs, |&(n, mask)| -> Result<bool, String> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if !g.is_connected() {
            return Ok(false);
        }
        sandwich(&g, options.budget).map_err(|e| format!("n={} mask={}: {}", n, mask, e))?;
        Ok(true)
    });
    let mut checked = 0usize;
    let mut first_failure: Option<String> = None;
    for r in results {
        match r {
            Ok(true) => checked += 1,
            Ok(false) => {}
            Err(e) => {
                first_failure.get_or_insert(e);
            }
        }
    }
    claims.push(claim(
        "bound sandwich, exhaustive n <= 6",
        first_failure.is_none(),
        first_failure.clone().unwrap_or(format!("{} connected graphs", checked)),
    ));

    // Seeded random corpus up to 8 vertices.
    let indices: Vec<usize> = (0..samples).collect();
    let results = parallel_map(&indices, options.jobs, |&i| -> Result<(), String> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(0x517c_c1b7_2722_0a95).wrapping_add(i as u64));
        let n = rng.random_range(2..=8);
        let p = rng.random_range(0.25..0.9);
        let g = generators::random_connected_graph(n, p, rng.random(), 10_000)
            .map_err(|e| e.to_string())?;
        sandwich(&g, options.budget).map_err(|e| format!("sample {}: {}", i, e))
    });
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    claims.push(claim(
        "bound sandwich, random corpus n <= 8",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} graphs", samples)
        } else {
            failures[0].clone()
        },
    ));

    // Constructive upper bounds never dip below the exact value.
    let synth_samples = (samples / 5).max(500);
    let indices: Vec<usize> = (0..synth_samples).collect();
    let results = parallel_map(&indices, options.jobs, |&i| -> Result<(), String> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(0x2545_f491_4f6c_dd1d).wrapping_add(i as u64));
        let n = rng.random_range(3..=8);
        let p = rng.random_range(0.3..0.9);
        let g = generators::random_connected_graph(n, p, rng.random(), 10_000)
            .map_err(|e| e.to_string())?;
        let exact = solve_exact(&g, options.budget).map_err(|e| format!("sample {}: {}", i, e))?;
        let mut outcomes = vec![
            synthesis::radius2_partition_protocol(&g).map_err(|e| e.to_string())?,
            synthesis::matching_partition_protocol(&g).map_err(|e| e.to_string())?,
        ];
        for root in 0..g.n() {
            if let Some(out) = synthesis::level2_protocol(&g, root) {
                outcomes.push(out);
            }
        }
        if g.diameter() == Some(2) {
            outcomes.push(synthesis::diam2_protocol(&g).map_err(|e| e.to_string())?);
        }
        for out in outcomes {
            let end = engine::replay(&g, &out.protocol).map_err(|e| e.to_string())?;
            if end.support() != out.final_support {
                return Err(format!("sample {}: {} misreports support", i, out.method));
            }
            if out.final_support < exact {
                return Err(format!(
                    "sample {}: {} reached {} below exact {}",
                    i, out.method, out.final_support, exact
                ));
            }
        }
        Ok(())
    });
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    claims.push(claim(
        "synthesized protocols are upper bounds",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} graphs, all methods replay-verified", synth_samples)
        } else {
            failures[0].clone()
        },
    ));
    claims
}

fn td(options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let max_d = options.max_n.unwrap_or(8);
    let mut claims = Vec::new();
    for d in 1..=max_d {
        let t = match generators::make_td(d, 5) {
            Ok(t) => t,
            Err(e) => {
                claims.push(claim(format!("grown tree d={}", d), false, e.to_string()));
                continue;
            }
        };
        let prefix = Protocol::new(t.protocol.moves()[..t.ascending_prefix].to_vec());
        let staged = engine::replay(&t.graph, &prefix);
        let ascending = staged
            .as_ref()
            .ok()
            .map(|w| {
                RootedTreeView::over_support(&t.graph, 0, w)
                    .map(|view| is_ascending_tree(&t.graph, &view, w).unwrap_or(false))
                    .unwrap_or(false)
            })
            .unwrap_or(false);
        let end = engine::replay(&t.graph, &t.protocol);
        let consolidated = end.map(|w| w.support() == 1 && w.get(0) as usize == t.graph.n());
        let counts_ok = (2..=d).all(|j| {
            let closed = (3 * j as i64 + 2) * (1i64 << j) / 8;
            t.active_counts[j - 1] == closed
        });
        let pass = ascending && consolidated == Ok(true) && counts_ok && t.graph.max_degree() <= 5;
        claims.push(claim(
            format!("grown tree d={}", d),
            pass,
            format!(
                "n={} staged ascending {} consolidated {:?} counts (3d+2)2^(d-3) {}",
                t.graph.n(),
                ascending,
                consolidated,
                counts_ok
            ),
        ));
    }
    // The closed form must be the corrected one: (3d+5)2^(d-2) evaluates to
    // 11 at d=2 and cannot reproduce a_2 = 4.
    let counts = generators::td_active_counts(3, 5).unwrap();
    let rejected_form = |d: u32| (3 * i64::from(d) + 5) * 2i64.pow(d - 2);
    claims.push(claim(
        "closed form base case",
        counts[1] == 4 && rejected_form(2) != counts[1],
        format!("a_2 = {}, rejected form gives {}", counts[1], rejected_form(2)),
    ));

    let t5 = generators::make_td(5, 4);
    match t5 {
        Ok(t) => {
            let end = engine::replay(&t.graph, &t.protocol);
            let consolidated = end.map(|w| w.support() == 1);
            let pass = t.active_counts == vec![1, 3, 5, 6, 3]
                && t.graph.n() == 47
                && t.graph.n() + 3 * t.active_counts[4] as usize == 56
                && t.graph.max_degree() <= 4
                && consolidated == Ok(true);
            claims.push(claim(
                "degree-4 growth reaches 47 then 56 vertices",
                pass,
                format!("counts {:?} n={} (+9 leaves = 56)", t.active_counts, t.graph.n()),
            ));
        }
        Err(e) => claims.push(claim("degree-4 growth reaches 47 then 56 vertices", false, e.to_string())),
    }
    let dead = generators::make_td(6, 4);
    claims.push(claim(
        "degree-4 growth dies at depth 6",
        matches!(dead, Err(generators::GeneratorError::GrowthDies { depth: 6, active: -9 })),
        format!("{:?}", dead.err()),
    ));
    claims
}

fn gmk(_options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let mut claims = Vec::new();
    for m in 1..=4usize {
        for k in [4usize, 5] {
            let name = format!("chained double stars m={} k={}", m, k);
            let built = generators::chained_double_stars(m, k).unwrap();
            let g = &built.graph;
            let expected_n = 2 * k * m - 2 * (m - 1);
            let lower = match solver::cut_lower_bound(g) {
                Ok(report) => report,
                Err(e) => {
                    claims.push(claim(name, false, e.to_string()));
                    continue;
                }
            };
            let synth = match synthesis::matching_partition_protocol(g) {
                Ok(out) => out,
                Err(e) => {
                    claims.push(claim(name, false, e.to_string()));
                    continue;
                }
            };
            let replayed = engine::replay(g, &synth.protocol)
                .map(|w| w.support())
                .unwrap_or(usize::MAX);
            let pass = g.n() == expected_n
                && lower.size == m
                && synth.final_support == m
                && replayed == m;
            claims.push(claim(
                name,
                pass,
                format!(
                    "n={} cut bound {} protocol support {} (so the value is exactly {})",
                    g.n(),
                    lower.size,
                    synth.final_support,
                    m
                ),
            ));
        }
    }
    let g45 = generators::chained_double_stars(4, 5).unwrap().graph;
    let (mmm, _) = solver::min_maximal_matching(&g45).unwrap();
    claims.push(claim(
        "m=4 k=5 structure",
        g45.n() == 34 && g45.max_degree() == 5 && mmm == 4,
        format!("n={} max-degree={} min maximal matching {}", g45.n(), g45.max_degree(), mmm),
    ));
    claims
}

fn max_weight(options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let seed = options.seed.expect("checked by run_suite");
    let samples = options.samples.unwrap_or(200);
    let max_n = options.max_n.unwrap_or(11);
    let mut claims = Vec::new();

    // Max-degree-2 trees are exactly the paths.
    let mut family_max = 0;
    let mut per_path = Vec::new();
    for n in 2..=10usize {
        let g = generators::path(n).unwrap();
        let report = solver::max_acquirable_weight(&g, options.budget).unwrap();
        family_max = family_max.max(report.global);
        per_path.push(report.global);
    }
    claims.push(claim(
        "paths acquire at most 4",
        family_max == 4 && per_path[0] == 2,
        format!("per-path maxima {:?}", per_path),
    ));

    // Seeded sample of max-degree-3 trees.
    let mut trees = Vec::new();
    let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(0xa076_1d64_78bd_642f));
    let mut attempts = 0u64;
    while trees.len() < samples && attempts < 200_000 {
        attempts += 1;
        let n = rng.random_range(4..=max_n);
        let t = generators::random_tree(n, rng.random()).unwrap();
        if t.max_degree() == 3 {
            trees.push(t);
        }
    }
    let results = parallel_map(&trees, options.jobs, |t| {
        solver::max_acquirable_weight(t, options.budget).map(|r| r.global)
    });
    let mut observed = 0;
    let mut ok = trees.len() >= samples;
    let mut detail = String::new();
    for r in &results {
        match r {
            Ok(global) => {
                observed = observed.max(*global);
                if *global > 10 {
                    ok = false;
                    detail = format!("tree exceeded 10: reached {}", global);
                }
            }
            Err(e) => {
                ok = false;
                detail = e.to_string();
            }
        }
    }
    claims.push(claim(
        "degree-3 trees acquire at most 10",
        ok,
        if detail.is_empty() {
            format!("{} trees (n <= {}), observed max {}", trees.len(), max_n, observed)
        } else {
            detail
        },
    ));

    let k2 = solver::max_acquirable_weight(&generators::path(2).unwrap(), options.budget).unwrap();
    claims.push(claim("single edge acquires 2", k2.global == 2, format!("max {}", k2.global)));
    claims
}

fn caterpillar_oracle(options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let max_n = options.max_n.unwrap_or(12);
    let corpus = generators::enumerate_caterpillars(max_n);
    let results = parallel_map(&corpus, options.jobs, |g| -> Result<(), String> {
        let view = caterpillar::recognize(g).map_err(|e| e.to_string())?;
        let scan = caterpillar::a_u_caterpillar(&view);
        let exact = solve_exact(g, options.budget)?;
        if scan.value != exact {
            return Err(format!(
                "scan {} vs solver {} on leaf counts {:?}",
                scan.value,
                exact,
                view.leaf_counts()
            ));
        }
        let condition = caterpillar::condition_check(&view).is_ok();
        if condition != (exact == 1) {
            return Err(format!(
                "condition {} but value {} on leaf counts {:?}",
                condition,
                exact,
                view.leaf_counts()
            ));
        }
        if condition {
            let proto = caterpillar::unit_protocol(g, &view).map_err(|e| e.to_string())?;
            let end = engine::replay(g, &proto).map_err(|e| e.to_string())?;
            if end.support() != 1 {
                return Err(format!("synthesized protocol ends at support {}", end.support()));
            }
        }
        let reversed = caterpillar::a_u_caterpillar(&view.reversed());
        if reversed.value != scan.value {
            return Err(format!("orientation changes value on {:?}", view.leaf_counts()));
        }
        Ok(())
    });
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    vec![claim(
        "caterpillar scan matches exhaustive solver",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} caterpillars (n <= {}), zero mismatches", corpus.len(), max_n)
        } else {
            failures[0].clone()
        },
    )]
}

/// Random walk data for the conservation and length-bound properties.
fn random_walk(rng: &mut ChaCha12Rng, max_n: usize) -> (Graph, Vec<UnitMove>) {
    let n = rng.random_range(2..=max_n);
    let p = rng.random_range(0.3..0.9);
    let g = generators::random_connected_graph(n, p, rng.random(), 10_000).unwrap();
    let mut w = WeightConfig::all_ones(n);
    let mut moves = Vec::new();
    loop {
        let legal: Vec<UnitMove> = (0..n)
            .flat_map(|u| g.neighbors(u).iter().map(move |&v| UnitMove::new(u, v)))
            .filter(|&m| engine::is_legal(&g, &w, m))
            .collect();
        if legal.is_empty() {
            break;
        }
        let m = legal[rng.random_range(0..legal.len())];
        w = engine::apply(&g, &w, m).unwrap();
        moves.push(m);
    }
    (g, moves)
}

fn properties(options: &VerifyOptions) -> Vec<ClaimOutcome> {
    let seed = options.seed.expect("checked by run_suite");
    let cases = options.samples.unwrap_or(10_000);
    let indices: Vec<usize> = (0..cases).collect();
    let mut claims = Vec::new();

    // Conservation, the potential step, and the length bound share one
    // corpus of exhausted random walks but are reported separately.
    #[derive(Default)]
    struct WalkFailures {
        conservation: Option<String>,
        potential: Option<String>,
        length: Option<String>,
    }
    let results = parallel_map(&indices, options.jobs, |&i| {
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(i as u64));
        let (g, moves) = random_walk(&mut rng, 8);
        let n = g.n() as u64;
        let mut out = WalkFailures::default();
        let mut w = WeightConfig::all_ones(g.n());
        for &m in &moves {
            let before_total = w.total();
            let before_potential = w.potential();
            w = engine::apply(&g, &w, m).expect("walk moves were legal when chosen");
            if w.total() != before_total && out.conservation.is_none() {
                out.conservation = Some(format!("case {}: weight not conserved", i));
            }
            if w.potential() < before_potential + 2 && out.potential.is_none() {
                out.potential = Some(format!("case {}: potential step below 2", i));
            }
        }
        if (moves.len() as u64) > (n * n - n) / 2 {
            out.length = Some(format!("case {}: walk of length {} exceeds bound", i, moves.len()));
        }
        out
    });
    let mut conservation = None;
    let mut potential = None;
    let mut length = None;
    for r in results {
        conservation = conservation.or(r.conservation);
        potential = potential.or(r.potential);
        length = length.or(r.length);
    }
    let corpus_note = format!("{} exhausted random walks", cases);
    claims.push(claim(
        "total weight is conserved by every move",
        conservation.is_none(),
        conservation.unwrap_or(corpus_note.clone()),
    ));
    claims.push(claim(
        "potential rises by at least 2 per move",
        potential.is_none(),
        potential.unwrap_or(corpus_note.clone()),
    ));
    claims.push(claim(
        "no walk exceeds (n^2 - n)/2 moves",
        length.is_none(),
        length.unwrap_or(corpus_note),
    ));

    // Legality is monotone under adding edges, and the exact value is
    // antitone: checked on the same graph/supergraph pairs.
    #[derive(Default)]
    struct PairFailures {
        legality: Option<String>,
        antitone: Option<String>,
    }
    let results = parallel_map(&indices, options.jobs, |&i| {
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(i as u64));
        let mut out = PairFailures::default();
        let n = rng.random_range(3..=7);
        let p = rng.random_range(0.3..0.8);
        let g = generators::random_connected_graph(n, p, rng.random(), 10_000).unwrap();
        let mut w = WeightConfig::all_ones(n);
        let mut moves = Vec::new();
        for _ in 0..3 * n {
            let legal: Vec<UnitMove> = (0..n)
                .flat_map(|u| g.neighbors(u).iter().map(move |&v| UnitMove::new(u, v)))
                .filter(|&m| engine::is_legal(&g, &w, m))
                .collect();
            if legal.is_empty() {
                break;
            }
            let m = legal[rng.random_range(0..legal.len())];
            w = engine::apply(&g, &w, m).unwrap();
            moves.push(m);
        }
        let non_edges: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        if non_edges.is_empty() {
            return out;
        }
        let (u, v) = non_edges[rng.random_range(0..non_edges.len())];
        let bigger = g.with_edge(u, v).unwrap();
        if let Err(e) = engine::replay(&bigger, &Protocol::new(moves)) {
            out.legality = Some(format!("case {}: protocol broke on supergraph: {}", i, e));
        }
        let before = solve_exact(&g, options.budget);
        let after = solve_exact(&bigger, options.budget);
        match (before, after) {
            (Ok(before), Ok(after)) => {
                if after > before {
                    out.antitone = Some(format!(
                        "case {}: adding an edge raised the value {} -> {}",
                        i, before, after
                    ));
                }
            }
            (Err(e), _) | (_, Err(e)) => out.antitone = Some(format!("case {}: {}", i, e)),
        }
        out
    });
    let mut legality = None;
    let mut antitone = None;
    for r in results {
        legality = legality.or(r.legality);
        antitone = antitone.or(r.antitone);
    }
    let corpus_note = format!("{} graph/supergraph pairs", cases);
    claims.push(claim(
        "protocols stay legal after adding an edge",
        legality.is_none(),
        legality.unwrap_or(corpus_note.clone()),
    ));
    claims.push(claim(
        "adding an edge never raises the value",
        antitone.is_none(),
        antitone.unwrap_or(corpus_note),
    ));

    // Drain liveness: every randomly weighted ascending tree drains fully.
    let results = parallel_map(&indices, options.jobs, |&i| -> Result<(), String> {
        let mut rng = ChaCha12Rng::seed_from_u64(seed.wrapping_add(0x2545_f491_4f6c_dd1d).wrapping_add(i as u64));
        let n = rng.random_range(1..=10);
        let t = generators::random_tree(n, rng.random()).unwrap();
        let root = rng.random_range(0..n);
        let view = RootedTreeView::spanning(&t, root).unwrap();
        // Assign ascending weights bottom-up: parents strictly outweigh
        // internal children and match or outweigh leaf children.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(view.depth(v).unwrap()));
        let mut weights = vec![0u32; n];
        for &v in &order {
            let kids = view.children(v);
            let floor = kids
                .iter()
                .map(|&c| if view.children(c).is_empty() { weights[c] } else { weights[c] + 1 })
                .max()
                .unwrap_or(1);
            weights[v] = floor.max(1) + rng.random_range(0..2);
        }
        let w = WeightConfig::from_weights(weights);
        let total = w.total();
        let proto = engine::drain_ascending(&t, &view, &w).map_err(|e| format!("case {}: {}", i, e))?;
        let end = engine::replay_from(&t, w, &proto).map_err(|e| format!("case {}: {}", i, e))?;
        if end.support() != 1 || u64::from(end.get(root)) != total {
            return Err(format!("case {}: drain left support {}", i, end.support()));
        }
        Ok(())
    });
    let failures: Vec<String> = results.into_iter().filter_map(|r| r.err()).collect();
    claims.push(claim(
        "ascending trees always drain to their root",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} weighted trees", cases)
        } else {
            failures[0].clone()
        },
    ));
    claims
}
