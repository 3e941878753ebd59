//! Exact computation of the unit acquisition number and related extremal
//! quantities by exhaustive search over the reachable configuration space.
//!
//! The potential (sum of squared weights) strictly increases with every
//! move, so the space is acyclic and finite; a depth-first traversal with a
//! visited set enumerates it completely. The answer is the minimum support
//! over all reachable configurations, and the search path at the moment the
//! minimum is first reached is the witness protocol.

use std::error::Error;
use std::fmt;
use std::time::{Duration, Instant};

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::engine::{Protocol, UnitMove};
use crate::graph::Graph;

/// Default cap on distinct visited configurations.
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverError {
    Disconnected,
    EmptyGraph,
    TooManyVertices { n: usize, max: usize },
    NoEdges,
    BudgetExhausted { states: u64 },
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match *self {
            SolverError::Disconnected => write!(f, "graph is disconnected"),
            SolverError::EmptyGraph => write!(f, "graph has no vertices"),
            SolverError::TooManyVertices { n, max } => {
                write!(f, "exhaustive search supports up to {} vertices, got {}", max, n)
            }
            SolverError::NoEdges => write!(f, "graph has no edges"),
            SolverError::BudgetExhausted { states } => {
                write!(f, "state budget exhausted after {} states", states)
            }
        }
    }
}

impl Error for SolverError {}

/// Outcome of an exact solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// The exact value together with a protocol reaching it.
    Exact { value: usize, witness: Protocol },
    /// The budget ran out; the true value is somewhere in
    /// `1..=best_upper_bound`.
    Inconclusive { best_upper_bound: usize },
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub outcome: SolveOutcome,
    pub states_explored: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            SolveOutcome::Exact { value, .. } => Some(*value),
            SolveOutcome::Inconclusive { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Protocol> {
        match &self.outcome {
            SolveOutcome::Exact { witness, .. } => Some(witness),
            SolveOutcome::Inconclusive { .. } => None,
        }
    }

    /// JSON rendering including the witness in the protocol wire format.
    pub fn to_json(&self, g: &Graph) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            status: &'a str,
            value: Option<usize>,
            best_upper_bound: Option<usize>,
            witness: Option<serde_json::Value>,
            states_explored: u64,
            elapsed_ms: u128,
        }
        let (status, value, bound, witness) = match &self.outcome {
            SolveOutcome::Exact { value, witness } => (
                "exact",
                Some(*value),
                None,
                Some(serde_json::from_str(&witness.to_json(g)).unwrap()),
            ),
            SolveOutcome::Inconclusive { best_upper_bound } => {
                ("inconclusive", None, Some(*best_upper_bound), None)
            }
        };
        serde_json::to_string(&Doc {
            status,
            value,
            best_upper_bound: bound,
            witness,
            states_explored: self.states_explored,
            elapsed_ms: self.elapsed.as_millis(),
        })
        .unwrap()
    }
}

/// Packed state keys: 4 bits per vertex up to 15 vertices, 6 bits up to 21.
trait StateKey: Copy + Eq + std::hash::Hash {
    fn encode(w: &[u32]) -> Self;
}

impl StateKey for u64 {
    fn encode(w: &[u32]) -> u64 {
        let mut k = 0u64;
        for (i, &x) in w.iter().enumerate() {
            k |= u64::from(x) << (4 * i);
        }
        k
    }
}

impl StateKey for u128 {
    fn encode(w: &[u32]) -> u128 {
        let mut k = 0u128;
        for (i, &x) in w.iter().enumerate() {
            k |= u128::from(x) << (6 * i);
        }
        k
    }
}

const MAX_SOLVER_VERTICES: usize = 21;

fn check_solver_input(g: &Graph) -> Result<(), SolverError> {
    if g.n() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    if g.n() > MAX_SOLVER_VERTICES {
        return Err(SolverError::TooManyVertices { n: g.n(), max: MAX_SOLVER_VERTICES });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    Ok(())
}

/// Both oriented versions of every edge, in lexicographic `(from, to)`
/// order; the fixed order makes every witness deterministic.
fn oriented_moves(g: &Graph) -> Vec<UnitMove> {
    let mut out = Vec::with_capacity(2 * g.edge_count());
    for from in 0..g.n() {
        for &to in g.neighbors(from) {
            out.push(UnitMove::new(from, to));
        }
    }
    out
}

struct Search<'g, K: StateKey> {
    moves: &'g [UnitMove],
    seen: FxHashSet<K>,
    budget: u64,
    best_support: usize,
    best_path: Vec<UnitMove>,
    exhausted: bool,
}

impl<'g, K: StateKey> Search<'g, K> {
    /// Depth-first over all configurations reachable from `w`; stops early
    /// only when support 1 (the global minimum) is found or the budget dies.
    fn run(&mut self, w: &mut Vec<u32>, support: usize, path: &mut Vec<UnitMove>) {
        if support < self.best_support {
            self.best_support = support;
            self.best_path = path.clone();
            if support == 1 {
                return;
            }
        }
        for i in 0..self.moves.len() {
            let m = self.moves[i];
            let wf = w[m.from];
            if wf == 0 || w[m.to] < wf {
                continue;
            }
            w[m.from] -= 1;
            w[m.to] += 1;
            let key = K::encode(w);
            if self.seen.contains(&key) {
                w[m.to] -= 1;
                w[m.from] += 1;
                continue;
            }
            if self.seen.len() as u64 >= self.budget {
                self.exhausted = true;
                w[m.to] -= 1;
                w[m.from] += 1;
                return;
            }
            self.seen.insert(key);
            let next_support = if w[m.from] == 0 { support - 1 } else { support };
            path.push(m);
            self.run(w, next_support, path);
            path.pop();
            w[m.to] -= 1;
            w[m.from] += 1;
            if self.best_support == 1 || self.exhausted {
                return;
            }
        }
    }
}

fn solve_with_key<K: StateKey>(g: &Graph, budget: u64) -> (SolveOutcome, u64) {
    let moves = oriented_moves(g);
    let mut w: Vec<u32> = vec![1; g.n()];
    let mut search = Search::<K> {
        moves: &moves,
        seen: FxHashSet::default(),
        budget,
        best_support: usize::MAX,
        best_path: Vec::new(),
        exhausted: false,
    };
    search.seen.insert(K::encode(&w));
    let mut path = Vec::new();
    let n = g.n();
    search.run(&mut w, n, &mut path);
    let states = search.seen.len() as u64;
    if search.exhausted && search.best_support > 1 {
        (SolveOutcome::Inconclusive { best_upper_bound: search.best_support }, states)
    } else {
        (
            SolveOutcome::Exact {
                value: search.best_support,
                witness: Protocol::new(search.best_path),
            },
            states,
        )
    }
}

/// Exact unit acquisition number of a connected graph: the minimum number
/// of positive-weight vertices over every configuration reachable from
/// all-ones. Requires a connected graph; honors a state budget and reports
/// an explicit inconclusive outcome instead of a wrong answer.
pub fn unit_acquisition_number(g: &Graph, budget: u64) -> Result<SolveResult, SolverError> {
    check_solver_input(g)?;
    let start = Instant::now();
    let (outcome, states_explored) = if g.n() <= 15 {
        solve_with_key::<u64>(g, budget)
    } else {
        solve_with_key::<u128>(g, budget)
    };
    Ok(SolveResult { outcome, states_explored, elapsed: start.elapsed() })
}

/// Convenience wrapper with the default budget.
pub fn unit_acquisition_number_default(g: &Graph) -> Result<SolveResult, SolverError> {
    unit_acquisition_number(g, DEFAULT_STATE_BUDGET)
}

/// Unit acquisition number of a possibly disconnected graph: weight never
/// crosses between components, so the value is the sum over components.
pub fn unit_acquisition_number_components(g: &Graph, budget: u64) -> Result<usize, SolverError> {
    let mut total = 0;
    for comp in g.components() {
        let (sub, _) = g.induced(&comp);
        let res = unit_acquisition_number(&sub, budget)?;
        match res.outcome {
            SolveOutcome::Exact { value, .. } => total += value,
            SolveOutcome::Inconclusive { .. } => {
                return Err(SolverError::BudgetExhausted { states: res.states_explored })
            }
        }
    }
    Ok(total)
}

/// Per-vertex and global maxima of acquirable weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxWeightReport {
    pub per_vertex: Vec<u32>,
    pub global: u32,
    pub states_explored: u64,
}

fn max_weight_with_key<K: StateKey>(g: &Graph, budget: u64) -> Result<MaxWeightReport, SolverError> {
    let moves = oriented_moves(g);
    let mut w: Vec<u32> = vec![1; g.n()];
    let mut per_vertex = vec![1u32; g.n()];
    let mut seen: FxHashSet<K> = FxHashSet::default();
    seen.insert(K::encode(&w));

    // Iterative DFS over the full reachable space; frames remember how far
    // the move scan got.
    let mut frames: Vec<usize> = vec![0];
    let mut trail: Vec<UnitMove> = Vec::new();
    while let Some(next_move) = frames.last_mut() {
        let mut advanced = false;
        while *next_move < moves.len() {
            let m = moves[*next_move];
            *next_move += 1;
            let wf = w[m.from];
            if wf == 0 || w[m.to] < wf {
                continue;
            }
            w[m.from] -= 1;
            w[m.to] += 1;
            let key = K::encode(&w);
            if seen.contains(&key) {
                w[m.to] -= 1;
                w[m.from] += 1;
                continue;
            }
            if seen.len() as u64 >= budget {
                return Err(SolverError::BudgetExhausted { states: seen.len() as u64 });
            }
            seen.insert(key);
            if w[m.to] > per_vertex[m.to] {
                per_vertex[m.to] = w[m.to];
            }
            trail.push(m);
            frames.push(0);
            advanced = true;
            break;
        }
        if !advanced {
            frames.pop();
            if let Some(m) = trail.pop() {
                w[m.to] -= 1;
                w[m.from] += 1;
            }
        }
    }
    let global = per_vertex.iter().copied().max().unwrap_or(0);
    Ok(MaxWeightReport { per_vertex, global, states_explored: seen.len() as u64 })
}

/// For each vertex, the maximum weight it can hold in any reachable
/// configuration, plus the global maximum. Explores the whole space.
pub fn max_acquirable_weight(g: &Graph, budget: u64) -> Result<MaxWeightReport, SolverError> {
    check_solver_input(g)?;
    if g.n() <= 15 {
        max_weight_with_key::<u64>(g, budget)
    } else {
        max_weight_with_key::<u128>(g, budget)
    }
}

/// Smallest maximal matching: cardinality plus a witness edge set.
///
/// Branch and bound: take the first addable edge `{u, v}`; any maximal
/// matching must cover `u` or `v`, so branching over every addable edge at
/// `u` or `v` is exhaustive. A greedy maximal matching seeds the bound.
pub fn min_maximal_matching(g: &Graph) -> Result<(usize, Vec<(usize, usize)>), SolverError> {
    if g.edge_count() == 0 {
        return Err(SolverError::NoEdges);
    }
    let mut covered = vec![false; g.n()];
    let mut greedy = Vec::new();
    for &(u, v) in g.edges() {
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            greedy.push((u, v));
        }
    }
    let mut best = greedy;
    let mut covered = vec![false; g.n()];
    let mut current = Vec::new();
    mmm_branch(g, &mut covered, &mut current, &mut best);
    best.sort_unstable();
    Ok((best.len(), best))
}

fn first_addable_edge(g: &Graph, covered: &[bool]) -> Option<(usize, usize)> {
    g.edges().iter().copied().find(|&(u, v)| !covered[u] && !covered[v])
}

fn mmm_branch(
    g: &Graph,
    covered: &mut Vec<bool>,
    current: &mut Vec<(usize, usize)>,
    best: &mut Vec<(usize, usize)>,
) {
    match first_addable_edge(g, covered) {
        None => {
            if current.len() < best.len() {
                *best = current.clone();
            }
        }
        Some((u, v)) => {
            if current.len() + 1 >= best.len() {
                return;
            }
            let mut candidates: Vec<(usize, usize)> = Vec::new();
            for &x in g.neighbors(u) {
                if !covered[x] {
                    candidates.push((u.min(x), u.max(x)));
                }
            }
            for &y in g.neighbors(v) {
                if !covered[y] && y != u {
                    candidates.push((v.min(y), v.max(y)));
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            for (a, b) in candidates {
                covered[a] = true;
                covered[b] = true;
                current.push((a, b));
                mmm_branch(g, covered, current, best);
                current.pop();
                covered[a] = false;
                covered[b] = false;
            }
        }
    }
}

/// Witness that the chips of `u` and `v` can never share a vertex: a
/// minimal `u,v`-separator made of degree-2 vertices, none adjacent to `u`
/// or `v`. Chips crossing such a separator burn its vertices, so the two
/// distinguished chips stay on opposite sides forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub u: usize,
    pub v: usize,
    pub cut: Vec<usize>,
}

fn separates(g: &Graph, removed: &[usize], u: usize, v: usize) -> bool {
    g.bfs_distances_avoiding(u, removed)[v].is_none()
}

/// Checks all certificate conditions: degree-2 cut vertices, non-adjacency
/// to the endpoints, separation, and minimality as a separator.
pub fn verify_certificate(g: &Graph, cert: &CutCertificate) -> bool {
    let CutCertificate { u, v, cut } = cert;
    let (u, v) = (*u, *v);
    if u >= g.n() || v >= g.n() || u == v || cut.is_empty() {
        return false;
    }
    for &s in cut {
        if s >= g.n() || s == u || s == v || g.degree(s) != 2 {
            return false;
        }
        if g.has_edge(u, s) || g.has_edge(v, s) {
            return false;
        }
    }
    if !separates(g, cut, u, v) {
        return false;
    }
    // Minimal as a set: dropping any single vertex must reconnect. Because
    // separation is monotone under supersets, single drops are enough.
    for i in 0..cut.len() {
        let rest: Vec<usize> = cut.iter().copied().filter(|&s| s != cut[i]).collect();
        if separates(g, &rest, u, v) {
            return false;
        }
    }
    true
}

/// Finds a certificate for one pair, if any: collect every degree-2 vertex
/// not in the closed neighborhoods of `u` and `v`. Any eligible separator
/// is a subset of that pool, so the pool separates iff one exists, and
/// greedily pruning the pool leaves a minimal one.
pub fn find_certificate(g: &Graph, u: usize, v: usize) -> Option<CutCertificate> {
    if u == v {
        return None;
    }
    let mut pool: Vec<usize> = (0..g.n())
        .filter(|&s| {
            s != u && s != v && g.degree(s) == 2 && !g.has_edge(u, s) && !g.has_edge(v, s)
        })
        .collect();
    if !separates(g, &pool, u, v) {
        return None;
    }
    let mut i = 0;
    while i < pool.len() {
        let mut trial = pool.clone();
        trial.remove(i);
        if separates(g, &trial, u, v) {
            pool = trial;
        } else {
            i += 1;
        }
    }
    let cert = CutCertificate { u, v, cut: pool };
    debug_assert!(verify_certificate(g, &cert));
    Some(cert)
}

/// Lower-bound report: a vertex set whose chips can pairwise never meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutBoundReport {
    pub size: usize,
    pub witness: Vec<usize>,
    pub certificates: Vec<CutCertificate>,
}

/// Largest vertex set that is pairwise separated by degree-2 cut
/// certificates; its size is a lower bound on the unit acquisition number.
/// Returns size 1 when no certified pair exists.
pub fn cut_lower_bound(g: &Graph) -> Result<CutBoundReport, SolverError> {
    if g.n() == 0 {
        return Err(SolverError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let mut pair_edges = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if find_certificate(g, u, v).is_some() {
                pair_edges.push((u, v));
            }
        }
    }
    if pair_edges.is_empty() {
        return Ok(CutBoundReport { size: 1, witness: vec![0], certificates: Vec::new() });
    }
    // A pairwise-certified set is a clique of the certified-pair graph.
    let pair_graph = Graph::new(g.n(), &pair_edges).unwrap();
    let witness = pair_graph.max_clique();
    let mut certificates = Vec::new();
    for i in 0..witness.len() {
        for j in i + 1..witness.len() {
            certificates.push(find_certificate(g, witness[i], witness[j]).unwrap());
        }
    }
    Ok(CutBoundReport { size: witness.len(), witness, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::replay;
    use crate::generators;

    fn solve(g: &Graph) -> usize {
        let res = unit_acquisition_number_default(g).unwrap();
        let value = res.value().expect("budget is ample for test graphs");
        // The witness must replay cleanly and reach the reported support.
        let w = replay(g, res.witness().unwrap()).unwrap();
        assert_eq!(w.support(), value);
        value
    }

    /// Independent route: breadth-first enumeration of reachable weight
    /// vectors with no packing, no path tracking, no early exit.
    fn oracle_min_support(g: &Graph) -> usize {
        use std::collections::{HashSet, VecDeque};
        let start = vec![1u32; g.n()];
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        let mut best = usize::MAX;
        while let Some(w) = queue.pop_front() {
            best = best.min(w.iter().filter(|&&x| x > 0).count());
            for u in 0..g.n() {
                if w[u] == 0 {
                    continue;
                }
                for &v in g.neighbors(u) {
                    if w[v] >= w[u] {
                        let mut next = w.clone();
                        next[u] -= 1;
                        next[v] += 1;
                        if seen.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        best
    }

    #[test]
    fn solver_examples() {
        assert_eq!(solve(&generators::path(5).unwrap()), 2);
        assert_eq!(solve(&generators::complete(6).unwrap()), 1);
        assert_eq!(solve(&generators::path(1).unwrap()), 1);
    }

    #[test]
    fn petersen_needs_two_piles() {
        assert_eq!(solve(&generators::petersen()), 2);
    }

    #[test]
    fn wide_state_keys_kick_in_past_fifteen_vertices() {
        // Sixteen vertices overflow the 4-bit packing and take the wide
        // encoder; the quarter rule pins the answer.
        assert_eq!(solve(&generators::path(16).unwrap()), 4);
        let too_big = generators::path(22).unwrap();
        assert!(matches!(
            unit_acquisition_number_default(&too_big),
            Err(SolverError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn cycle_needing_graph_and_deletions() {
        let g = generators::cycle_needing_graph();
        assert_eq!(solve(&g), 1);
        // Deleting a cycle edge (the graph stays connected) pushes the
        // value to 2; disconnecting deletions are covered at suite level.
        let cut = g.without_edge(1, 2);
        assert!(cut.is_connected());
        assert_eq!(solve(&cut), 2);
    }

    #[test]
    fn matches_bfs_oracle_on_small_graphs() {
        for seed in 0..150u64 {
            let n = 3 + (seed % 4) as usize;
            let g = generators::random_graph(n, 0.55, 1000 + seed).unwrap();
            if !g.is_connected() {
                continue;
            }
            assert_eq!(solve(&g), oracle_min_support(&g), "seed={}", seed);
        }
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edge_list("0 1\n3").unwrap();
        assert_eq!(unit_acquisition_number_default(&g).unwrap_err(), SolverError::Disconnected);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let g = generators::cycle(8).unwrap();
        let res = unit_acquisition_number(&g, 10).unwrap();
        match res.outcome {
            SolveOutcome::Inconclusive { best_upper_bound } => {
                assert!(best_upper_bound >= 2);
            }
            SolveOutcome::Exact { .. } => panic!("10 states cannot settle an 8-cycle"),
        }
    }

    #[test]
    fn max_weight_examples() {
        let report = max_acquirable_weight(&generators::path(2).unwrap(), 1 << 20).unwrap();
        assert_eq!(report.global, 2);

        // A four-vertex path consolidates fully, so some vertex reaches 4;
        // by hand: 0->1, 3->2, 2->1, 2->1.
        let report = max_acquirable_weight(&generators::path(4).unwrap(), 1 << 20).unwrap();
        assert_eq!(report.global, 4);

        let report = max_acquirable_weight(&generators::path(5).unwrap(), 1 << 20).unwrap();
        assert_eq!(report.global, 4);

        let report = max_acquirable_weight(&generators::path(3).unwrap(), 1 << 20).unwrap();
        assert_eq!(report.global, 3);
        assert_eq!(report.per_vertex, vec![2, 3, 2]);

        // The max-degree-2 ceiling of 4 holds out to eleven vertices.
        let report = max_acquirable_weight(&generators::path(11).unwrap(), 1 << 22).unwrap();
        assert_eq!(report.global, 4);
    }

    #[test]
    fn chained_double_stars_solve_to_their_matching_size() {
        let g24 = generators::chained_double_stars(2, 4).unwrap().graph;
        assert_eq!(solve(&g24), 2);
    }

    #[test]
    fn bound_sandwich_holds_on_nine_vertex_samples() {
        let mut checked = 0;
        for seed in 0..400u64 {
            let g = generators::random_graph(9, 0.4, 3_000 + seed).unwrap();
            if !g.is_connected() {
                continue;
            }
            let value = solve(&g);
            let lower = cut_lower_bound(&g).unwrap().size;
            let degree_bound = (g.n() - 1) / g.min_degree();
            let matching_bound = min_maximal_matching(&g).unwrap().0;
            assert!(lower <= value, "seed {}", seed);
            assert!(value <= degree_bound.min(matching_bound), "seed {}", seed);
            checked += 1;
        }
        assert!(checked >= 200);
    }

    /// Brute-force enumeration of every maximal matching.
    fn oracle_min_maximal_matching(g: &Graph) -> usize {
        fn rec(g: &Graph, idx: usize, covered: &mut Vec<bool>, size: usize, best: &mut usize) {
            if idx == g.edge_count() {
                let maximal =
                    g.edges().iter().all(|&(u, v)| covered[u] || covered[v]);
                if maximal {
                    *best = (*best).min(size);
                }
                return;
            }
            let (u, v) = g.edges()[idx];
            rec(g, idx + 1, covered, size, best);
            if !covered[u] && !covered[v] {
                covered[u] = true;
                covered[v] = true;
                rec(g, idx + 1, covered, size + 1, best);
                covered[u] = false;
                covered[v] = false;
            }
        }
        let mut best = usize::MAX;
        rec(g, 0, &mut vec![false; g.n()], 0, &mut best);
        best
    }

    #[test]
    fn mmm_examples() {
        let (size, witness) = min_maximal_matching(&generators::path(4).unwrap()).unwrap();
        assert_eq!(size, 1);
        assert_eq!(witness, vec![(1, 2)]);

        let (size, witness) = min_maximal_matching(&generators::petersen()).unwrap();
        assert_eq!(size, 3);
        assert_eq!(size, oracle_min_maximal_matching(&generators::petersen()));
        // Witness is itself a maximal matching.
        let mut covered = [false; 10];
        for &(u, v) in &witness {
            assert!(!covered[u] && !covered[v]);
            covered[u] = true;
            covered[v] = true;
        }
        let p = generators::petersen();
        assert!(p.edges().iter().all(|&(u, v)| covered[u] || covered[v]));

        let g24 = generators::chained_double_stars(2, 4).unwrap().graph;
        assert_eq!(min_maximal_matching(&g24).unwrap().0, 2);

        assert_eq!(
            min_maximal_matching(&Graph::new(3, &[]).unwrap()).unwrap_err(),
            SolverError::NoEdges
        );
    }

    #[test]
    fn mmm_matches_oracle_on_random_graphs() {
        for seed in 0..60u64 {
            let n = 4 + (seed % 4) as usize;
            let g = generators::random_graph(n, 0.5, 500 + seed).unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            assert_eq!(
                min_maximal_matching(&g).unwrap().0,
                oracle_min_maximal_matching(&g),
                "seed={}",
                seed
            );
        }
    }

    #[test]
    fn certificate_examples() {
        let p9 = generators::path(9).unwrap();
        assert!(verify_certificate(&p9, &CutCertificate { u: 0, v: 8, cut: vec![4] }));
        let p5 = generators::path(5).unwrap();
        assert!(verify_certificate(&p5, &CutCertificate { u: 0, v: 4, cut: vec![2] }));

        // Not a separator: C4 minus one vertex still connects the other pair.
        let c4 = generators::cycle(4).unwrap();
        assert!(!verify_certificate(&c4, &CutCertificate { u: 0, v: 2, cut: vec![1] }));

        // No degree-2 vertices at all.
        let k4 = generators::complete(4).unwrap();
        assert!(!verify_certificate(&k4, &CutCertificate { u: 0, v: 2, cut: vec![1] }));

        // Non-minimal: either vertex of the pair separates alone.
        let p9 = generators::path(9).unwrap();
        assert!(!verify_certificate(&p9, &CutCertificate { u: 0, v: 8, cut: vec![3, 5] }));

        // Adjacent to an endpoint.
        assert!(!verify_certificate(&p9, &CutCertificate { u: 0, v: 8, cut: vec![1] }));
    }

    #[test]
    fn cut_bound_examples() {
        let report = cut_lower_bound(&generators::path(9).unwrap()).unwrap();
        assert_eq!(report.size, 3);
        assert_eq!(report.witness, vec![0, 4, 8]);
        for cert in &report.certificates {
            assert!(verify_certificate(&generators::path(9).unwrap(), cert));
        }

        let report = cut_lower_bound(&generators::complete(5).unwrap()).unwrap();
        assert_eq!(report.size, 1);

        let g45 = generators::chained_double_stars(4, 5).unwrap().graph;
        assert_eq!(cut_lower_bound(&g45).unwrap().size, 4);
    }
}
