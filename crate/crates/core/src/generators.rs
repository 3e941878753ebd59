//! Deterministic constructors for the graph families used throughout the
//! crate, plus seeded random graphs and trees for corpus-style testing.
//!
//! Every generator documents its labeling so that emitted edge lists can be
//! cross-checked against drawings.

use std::error::Error;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::engine::{drain_ascending, Protocol, ProtocolBuilder, UnitMove};
use crate::graph::{Graph, RootedTreeView};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    InvalidParameter { family: &'static str, message: String },
    /// The level-by-level growth runs out of fresh leaves: the recurrence
    /// for active vertices went nonpositive at the quoted depth.
    GrowthDies { depth: usize, active: i64 },
    RejectionBudgetExceeded { attempts: usize },
}

impl fmt::Display for GeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            GeneratorError::InvalidParameter { family, message } => {
                write!(f, "{}: {}", family, message)
            }
            GeneratorError::GrowthDies { depth, active } => write!(
                f,
                "construction dies at depth {}: active-vertex recurrence gives {}",
                depth, active
            ),
            GeneratorError::RejectionBudgetExceeded { attempts } => {
                write!(f, "rejection sampling failed after {} attempts", attempts)
            }
        }
    }
}

impl Error for GeneratorError {}

fn invalid(family: &'static str, message: impl Into<String>) -> GeneratorError {
    GeneratorError::InvalidParameter { family, message: message.into() }
}

/// Path on vertices `0..n` in order.
pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(invalid("path", "n must be at least 1"));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(n, &edges).unwrap())
}

/// Cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(invalid("cycle", "n must be at least 3"));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Ok(Graph::new(n, &edges).unwrap())
}

/// Complete graph on `0..n`.
pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(invalid("complete", "n must be at least 1"));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::new(n, &edges).unwrap())
}

/// Star on `n` vertices: center `0`, leaves `1..n`.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n.max(1), &edges).unwrap()
}

/// Double star with `2k` vertices: adjacent centers `0` and `1`, both of
/// degree `k`; leaves `2..=k` hang on `0` and `k+1..2k` hang on `1`.
pub fn double_star(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(invalid("double-star", "k must be at least 1"));
    }
    let mut edges = vec![(0, 1)];
    for l in 0..k - 1 {
        edges.push((0, 2 + l));
        edges.push((1, k + 1 + l));
    }
    Ok(Graph::new(2 * k, &edges).unwrap())
}

/// A chain of double stars joined through merged leaf pairs.
#[derive(Debug, Clone)]
pub struct ChainedDoubleStars {
    pub graph: Graph,
    /// The merged degree-2 vertices, one `(x, y)` pair per junction between
    /// consecutive copies. Each pair is a vertex cut.
    pub junctions: Vec<(usize, usize)>,
    /// Whether the parameters are in the range where the matching bound is
    /// tight (`k >= 4`).
    pub sharp: bool,
}

/// Builds the chain of `m` double stars with centers of degree `k`.
///
/// Copy `i` contributes centers `A_i`, `B_i` plus its fresh leaves; between
/// copies `i` and `i+1` one leaf of each center pair is merged into a shared
/// degree-2 vertex. Ids are assigned copy by copy: `A_i`, `B_i`, fresh
/// A-leaves, fresh B-leaves, then the junction pair `(x_i, y_i)` when the
/// copy is not the last. Vertex count is `2km - 2(m-1)`.
pub fn chained_double_stars(m: usize, k: usize) -> Result<ChainedDoubleStars, GeneratorError> {
    if m < 1 {
        return Err(invalid("gmk", "m must be at least 1"));
    }
    if k < 2 {
        return Err(invalid("gmk", "k must be at least 2"));
    }
    if m >= 3 && k < 3 {
        return Err(invalid("gmk", "middle copies need two junction leaves per center, so k >= 3"));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut junctions: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    let mut alloc = || {
        let v = next;
        next += 1;
        v
    };
    for i in 0..m {
        let a = alloc();
        let b = alloc();
        edges.push((a, b));
        let mut a_leaves = 1usize; // the center edge counts toward degree k
        let mut b_leaves = 1usize;
        if i > 0 {
            let (x, y) = junctions[i - 1];
            edges.push((a, x));
            edges.push((b, y));
            a_leaves += 1;
            b_leaves += 1;
        }
        let reserve_right = usize::from(i + 1 < m);
        for _ in 0..(k - a_leaves - reserve_right) {
            let l = alloc();
            edges.push((a, l));
        }
        for _ in 0..(k - b_leaves - reserve_right) {
            let l = alloc();
            edges.push((b, l));
        }
        if i + 1 < m {
            let x = alloc();
            let y = alloc();
            edges.push((a, x));
            edges.push((b, y));
            junctions.push((x, y));
        }
    }
    let graph = Graph::new(next, &edges).unwrap();
    debug_assert_eq!(graph.n(), 2 * k * m - 2 * (m - 1));
    Ok(ChainedDoubleStars { graph, junctions, sharp: k >= 4 })
}

/// The extremal diameter-4 tree with `n - 1 = k^2`: center `0` of degree
/// `k`, its neighbors `1..=k` each of degree `k`, carrying `k - 1` leaves.
/// Leaves of neighbor `i` are `k + 1 + (i-1)(k-1) ..` consecutively.
pub fn diameter4_extremal_tree(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(invalid("diam4-tree", "k must be at least 1"));
    }
    let mut edges = Vec::new();
    let mut next = k + 1;
    for i in 1..=k {
        edges.push((0, i));
        for _ in 0..k - 1 {
            edges.push((i, next));
            next += 1;
        }
    }
    Ok(Graph::new(next, &edges).unwrap())
}

/// The 7-vertex, 7-edge graph that consolidates fully but loses that
/// ability when any single edge is removed; its one cycle is essential.
/// Layout: path `0-1-2-3-4` along the bottom, apex `5` adjacent to `1` and
/// `2`, and a pendant `6` on top of `5`.
pub fn cycle_needing_graph() -> Graph {
    Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (5, 6)]).unwrap()
}

/// The 10-vertex caterpillar with maximum degree 3 whose weight can fully
/// consolidate: spine `0-1-2-3`, two leaves (`4`, `5`) on `0`, one leaf each
/// on `1` (`6`) and `2` (`7`), and two leaves (`8`, `9`) on `3`.
pub fn max_degree3_unit_tree() -> Graph {
    Graph::new(
        10,
        &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (3, 9)],
    )
    .unwrap()
}

/// Petersen graph: outer cycle `0..5`, inner pentagram `5..10` joining
/// `i+5` to `((i+2) mod 5) + 5`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, ((i + 2) % 5) + 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// Named family selector used by the command-line generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { n: usize },
    DoubleStar { k: usize },
    Gmk { m: usize, k: usize },
    Td { d: usize, branching: usize },
    Diam4Tree { k: usize },
    CycleNeeding,
    UnitTree10,
    Petersen,
}

/// Builds the graph for a family; for protocols and metadata of the grown
/// trees use [`make_td`], and for junction metadata use
/// [`chained_double_stars`].
pub fn make(spec: &FamilySpec) -> Result<Graph, GeneratorError> {
    match *spec {
        FamilySpec::Path { n } => path(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Complete { n } => complete(n),
        FamilySpec::Star { n } => {
            if n < 1 {
                return Err(invalid("star", "n must be at least 1"));
            }
            Ok(star(n))
        }
        FamilySpec::DoubleStar { k } => double_star(k),
        FamilySpec::Gmk { m, k } => chained_double_stars(m, k).map(|g| g.graph),
        FamilySpec::Td { d, branching } => make_td(d, branching).map(|t| t.graph),
        FamilySpec::Diam4Tree { k } => diameter4_extremal_tree(k),
        FamilySpec::CycleNeeding => Ok(cycle_needing_graph()),
        FamilySpec::UnitTree10 => Ok(max_degree3_unit_tree()),
        FamilySpec::Petersen => Ok(petersen()),
    }
}

/// Active-vertex counts `a_1..a_d` for the level-grown trees with maximum
/// degree `branching`: `a_1 = 1`, `a_2 = branching - 1`, and thereafter
/// `a_j = (branching - 1) a_{j-1} - (a_1 + ... + a_{j-1})`.
///
/// Fails when the count would go negative, which is where the growth dies
/// (depth 6 for branching 4).
pub fn td_active_counts(d: usize, branching: usize) -> Result<Vec<i64>, GeneratorError> {
    if !(branching == 4 || branching == 5) {
        return Err(invalid("td", "branching must be 4 or 5"));
    }
    if d < 1 {
        return Err(invalid("td", "d must be at least 1"));
    }
    let grow = branching as i64 - 1;
    let mut a = vec![1i64];
    if d >= 2 {
        a.push(grow); // a_2 = branching - 1
    }
    let mut sum: i64 = a.iter().sum();
    for depth in 3..=d {
        let next = grow * a[depth - 2] - sum;
        if next < 0 {
            return Err(GeneratorError::GrowthDies { depth, active: next });
        }
        a.push(next);
        sum += next;
    }
    Ok(a)
}

/// A grown tree together with its consolidation protocol.
#[derive(Debug, Clone)]
pub struct TdConstruction {
    pub graph: Graph,
    /// Full protocol from all-ones to a single occupied vertex (the root).
    pub protocol: Protocol,
    /// Prefix of `protocol` after which the configuration is an ascending
    /// tree rooted at `0`; the remainder is the drain.
    pub ascending_prefix: usize,
    /// `a_1..a_d`, as realized by the construction.
    pub active_counts: Vec<i64>,
    /// Vertex ids level by level (level 1 is the root).
    pub levels: Vec<Vec<usize>>,
}

/// Grows the depth-`d` tree with maximum degree `branching` (4 or 5) whose
/// root acquires all the weight.
///
/// Level 1 is the root `0`; level 2 has `branching` children `1..=branching`;
/// each later level appends `branching - 1` leaves at every active vertex of
/// the previous level, ids assigned left to right. The protocol replays the
/// previous stage, then routes one leaf chip up to each active non-leaf
/// vertex (levels processed top-down, vertices in id order, donor leaf the
/// smallest active one below; when none exists below, the smallest remaining
/// active leaf anywhere is retired instead), and finally drains the
/// resulting ascending tree to the root.
pub fn make_td(d: usize, branching: usize) -> Result<TdConstruction, GeneratorError> {
    let counts = td_active_counts(d, branching)?;

    let mut parent: Vec<usize> = vec![usize::MAX];
    let mut level_of: Vec<usize> = vec![1];
    let mut levels: Vec<Vec<usize>> = vec![vec![0]];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut active: Vec<bool> = vec![true];
    let mut moves: Vec<UnitMove> = Vec::new();

    if d >= 2 {
        let children: Vec<usize> = (1..=branching).collect();
        for &c in &children {
            parent.push(0);
            level_of.push(2);
            active.push(true);
            edges.push((0, c));
        }
        levels.push(children);
        // One child's chip seeds the root.
        moves.push(UnitMove::new(1, 0));
        active[1] = false;
    }

    for depth in 3..=d {
        // Append branching-1 fresh leaves under each active vertex of the
        // previous level, in id order.
        let mut new_level = Vec::new();
        for &u in &levels[depth - 2] {
            if !active[u] {
                continue;
            }
            for _ in 0..branching - 1 {
                let c = parent.len();
                parent.push(u);
                level_of.push(depth);
                active.push(true);
                edges.push((u, c));
                new_level.push(c);
            }
        }
        levels.push(new_level);

        // Route one fresh chip to each active vertex of levels 1..depth-1.
        let ancestor_at = |mut v: usize, lvl: usize, parent: &[usize], level_of: &[usize]| {
            while level_of[v] > lvl {
                v = parent[v];
            }
            v
        };
        for lvl in 1..depth {
            let targets: Vec<usize> =
                levels[lvl - 1].iter().copied().filter(|&u| active[u]).collect();
            for u in targets {
                let donor = levels[depth - 1]
                    .iter()
                    .copied()
                    .find(|&leaf| active[leaf] && ancestor_at(leaf, lvl, &parent, &level_of) == u);
                match donor {
                    Some(leaf) => {
                        let mut cur = leaf;
                        while cur != u {
                            moves.push(UnitMove::new(cur, parent[cur]));
                            cur = parent[cur];
                        }
                        active[leaf] = false;
                    }
                    None => {
                        let retired = levels[depth - 1]
                            .iter()
                            .copied()
                            .find(|&leaf| active[leaf])
                            .expect("active counts stay nonnegative, so a spare leaf exists");
                        active[retired] = false;
                    }
                }
            }
        }
        let realized = levels[depth - 1].iter().filter(|&&v| active[v]).count() as i64;
        assert_eq!(realized, counts[depth - 1], "active count mismatch at depth {}", depth);
    }

    let graph = Graph::new(parent.len(), &edges).unwrap();

    // Validate the staged moves, then drain the ascending remainder.
    let mut builder = ProtocolBuilder::new(&graph);
    for &m in &moves {
        builder
            .push(m.from, m.to)
            .expect("staged growth moves are legal by construction");
    }
    let ascending_prefix = builder.move_count();
    let w = builder.weights().clone();
    let view = RootedTreeView::over_support(&graph, 0, &w)
        .expect("positive weight stays connected through the root");
    let drain = drain_ascending(&graph, &view, &w)
        .expect("the staged configuration is an ascending tree");
    builder.extend(&drain).expect("drain moves are legal");
    assert_eq!(builder.weights().support(), 1);
    let (protocol, _) = builder.finish();

    Ok(TdConstruction { graph, protocol, ascending_prefix, active_counts: counts, levels })
}

/// Leaf-count code of a caterpillar: entry `i` is the number of leaves on
/// spine vertex `i`. Codes are emitted with the lexicographically smaller of
/// the two reading directions, so each isomorphism class appears once.
pub fn caterpillar_codes(max_n: usize) -> Vec<Vec<usize>> {
    let mut codes = Vec::new();
    for n in 3..=max_n {
        for spine_len in 1..=n.saturating_sub(2) {
            let leaves = n - spine_len;
            let mut code = vec![0usize; spine_len];
            compositions(leaves, spine_len, 0, &mut code, &mut codes);
        }
    }
    codes
}

fn compositions(remaining: usize, len: usize, pos: usize, code: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pos == len {
        if remaining == 0 {
            // Spine ends must carry a leaf, otherwise they would not survive
            // leaf deletion. Single-vertex spines need two leaves to be a
            // non-leaf at all.
            let ok = if len == 1 {
                code[0] >= 2
            } else {
                code[0] >= 1 && code[len - 1] >= 1
            };
            let mut rev = code.clone();
            rev.reverse();
            if ok && *code <= rev {
                out.push(code.clone());
            }
        }
        return;
    }
    for c in 0..=remaining {
        code[pos] = c;
        compositions(remaining - c, len, pos + 1, code, out);
    }
}

/// Builds the caterpillar for a leaf-count code: spine `0..len` as a path,
/// then the leaves of spine vertex `i` appended in spine order.
pub fn caterpillar_from_code(code: &[usize]) -> Graph {
    let spine_len = code.len();
    let mut edges: Vec<(usize, usize)> = (0..spine_len.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let mut next = spine_len;
    for (i, &c) in code.iter().enumerate() {
        for _ in 0..c {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next.max(1), &edges).unwrap()
}

/// Every caterpillar with at most `max_n` vertices, one per isomorphism
/// class. The one- and two-vertex trees are included for completeness.
pub fn enumerate_caterpillars(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_n >= 1 {
        out.push(Graph::new(1, &[]).unwrap());
    }
    if max_n >= 2 {
        out.push(path(2).unwrap());
    }
    for code in caterpillar_codes(max_n) {
        out.push(caterpillar_from_code(&code));
    }
    out
}

/// Seeded uniform-edge-probability random graph; identical output for
/// identical `(n, p, seed)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(invalid("random", "n must be at least 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid("random", "p must lie in [0, 1]"));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges).unwrap())
}

/// Rejection-samples seeded random graphs until one is connected.
pub fn random_connected_graph(
    n: usize,
    p: f64,
    seed: u64,
    max_attempts: usize,
) -> Result<Graph, GeneratorError> {
    for attempt in 0..max_attempts {
        let g = random_graph(n, p, seed.wrapping_add(attempt as u64).wrapping_mul(0x9e3779b97f4a7c15))?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GeneratorError::RejectionBudgetExceeded { attempts: max_attempts })
}

/// Rejection-samples seeded random graphs until one has diameter exactly 2.
pub fn random_diameter2_graph(
    n: usize,
    p: f64,
    seed: u64,
    max_attempts: usize,
) -> Result<Graph, GeneratorError> {
    for attempt in 0..max_attempts {
        let g = random_graph(n, p, seed.wrapping_add(attempt as u64).wrapping_mul(0x9e3779b97f4a7c15))?;
        if g.diameter() == Some(2) {
            return Ok(g);
        }
    }
    Err(GeneratorError::RejectionBudgetExceeded { attempts: max_attempts })
}

/// Seeded uniform random labeled tree on `n` vertices via sequence decoding.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(invalid("random-tree", "n must be at least 1"));
    }
    if n == 1 {
        return Ok(Graph::new(1, &[]).unwrap());
    }
    if n == 2 {
        return path(2);
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Ok(tree_from_pruefer(&seq))
}

/// Decodes a Pruefer sequence over `0..seq.len()+2` into its labeled tree.
pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in seq {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().expect("sequence decoding keeps a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaf_heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
    let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
    edges.push((a, b));
    Graph::new(n, &edges).unwrap()
}
