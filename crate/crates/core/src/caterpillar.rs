//! Caterpillar trees: recognition, the staircase feasibility condition for
//! full consolidation, assignment-based protocol synthesis, and a
//! linear-scan computation of the unit acquisition number.
//!
//! A caterpillar's spine is what remains after deleting its leaves. Over
//! any run of `s` consecutive internal spine vertices stands a pyramid of
//! `ell(s)` cells (`min(i, s+1-i)` cells over the `i`th vertex). Full
//! consolidation is possible exactly when every such run carries at least
//! as many leaves as its pyramid has cells; the protocol fills the cells
//! with leaf chips via a minimum-cost assignment and then drains the
//! resulting ascending tree.

use std::error::Error;
use std::fmt;

use crate::engine::{drain_view, merge_adjacent_piles, MoveError, Protocol, ProtocolBuilder};
use crate::graph::{Graph, RootedTreeView};
use crate::hungarian::min_cost_assignment;

/// Why a graph is not a caterpillar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotCaterpillar {
    Disconnected,
    /// An edge lying on a cycle.
    CycleEdge(usize, usize),
    /// A non-leaf vertex with three or more non-leaf neighbors.
    BranchVertex(usize),
}

impl fmt::Display for NotCaterpillar {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match *self {
            NotCaterpillar::Disconnected => write!(f, "graph is disconnected"),
            NotCaterpillar::CycleEdge(u, v) => write!(f, "edge {} {} lies on a cycle", u, v),
            NotCaterpillar::BranchVertex(v) => {
                write!(f, "vertex {} branches off the spine", v)
            }
        }
    }
}

impl Error for NotCaterpillar {}

/// Spine decomposition of a caterpillar.
///
/// `spine` is the path of non-leaf vertices in canonical orientation (the
/// leaf-count sequence is lexicographically no larger than its reversal,
/// with vertex ids breaking ties). `leaves[i]` lists the leaf neighbors of
/// `spine[i]` in ascending order. Trees with at most two vertices have an
/// empty spine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarView {
    n: usize,
    spine: Vec<usize>,
    leaves: Vec<Vec<usize>>,
}

impl CaterpillarView {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    pub fn leaves_of(&self, spine_index: usize) -> &[usize] {
        &self.leaves[spine_index]
    }

    /// Leaf counts along the spine.
    pub fn leaf_counts(&self) -> Vec<usize> {
        self.leaves.iter().map(|l| l.len()).collect()
    }

    /// Number of internal spine vertices (spine minus its two ends).
    pub fn internal_len(&self) -> usize {
        self.spine.len().saturating_sub(2)
    }

    /// The internal spine vertices, in spine order.
    pub fn internal(&self) -> &[usize] {
        if self.spine.len() < 3 {
            &[]
        } else {
            &self.spine[1..self.spine.len() - 1]
        }
    }

    /// View with the spine read in the opposite direction.
    pub fn reversed(&self) -> CaterpillarView {
        CaterpillarView {
            n: self.n,
            spine: self.spine.iter().rev().copied().collect(),
            leaves: self.leaves.iter().rev().cloned().collect(),
        }
    }
}

/// Recognizes a caterpillar and returns its spine decomposition, or a
/// witness for why the graph is not one.
pub fn recognize(g: &Graph) -> Result<CaterpillarView, NotCaterpillar> {
    if !g.is_connected() {
        return Err(NotCaterpillar::Disconnected);
    }
    if g.n() >= 1 && g.edge_count() != g.n() - 1 {
        // Connected with too many edges: exhibit a cycle edge.
        let cycle = g.shortest_cycle().expect("connected non-tree has a cycle");
        return Err(NotCaterpillar::CycleEdge(cycle[0], cycle[1]));
    }
    let non_leaf: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    if non_leaf.is_empty() {
        // Single vertex or single edge.
        return Ok(CaterpillarView { n: g.n(), spine: Vec::new(), leaves: Vec::new() });
    }
    let spine_degree = |v: usize| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count();
    for &v in &non_leaf {
        if spine_degree(v) >= 3 {
            return Err(NotCaterpillar::BranchVertex(v));
        }
    }
    // The non-leaves of a tree induce a subtree; with all degrees <= 2 it is
    // a path. Walk it from an end.
    let start = *non_leaf
        .iter()
        .find(|&&v| spine_degree(v) <= 1)
        .expect("a path has an end");
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    loop {
        let cur = *spine.last().unwrap();
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| g.degree(w) >= 2 && w != prev);
        match next {
            Some(w) => {
                prev = cur;
                spine.push(w);
            }
            None => break,
        }
    }
    debug_assert_eq!(spine.len(), non_leaf.len());
    let leaves_for = |spine: &[usize]| -> Vec<Vec<usize>> {
        spine
            .iter()
            .map(|&v| g.neighbors(v).iter().copied().filter(|&w| g.degree(w) <= 1).collect())
            .collect()
    };
    let leaves = leaves_for(&spine);
    let counts: Vec<usize> = leaves.iter().map(|l| l.len()).collect();
    let reversed_counts: Vec<usize> = counts.iter().rev().copied().collect();
    let forward = match counts.cmp(&reversed_counts) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => spine.first() <= spine.last(),
    };
    if !forward {
        spine.reverse();
    }
    let leaves = leaves_for(&spine);
    Ok(CaterpillarView { n: g.n(), spine, leaves })
}

/// Cell count of the pyramid over a run of `s` consecutive internal spine
/// vertices: the sum of `ceil(i/2)` for `i = 1..=s`, in closed form.
/// Panics when `s` is zero; runs have positive length.
pub fn ell(s: usize) -> usize {
    assert!(s >= 1, "pyramid runs have positive length");
    (s + 1).div_ceil(2) * s.div_ceil(2)
}

/// A violated run of internal spine vertices: the leftmost shortest run
/// whose leaf count falls below its pyramid size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingRun {
    /// Index into the internal vertex list where the run starts (0-based).
    pub start: usize,
    pub len: usize,
    pub leaf_sum: usize,
    pub required: usize,
    /// The run's spine vertex ids.
    pub vertices: Vec<usize>,
}

/// Checks the consolidation condition: every run of `s` consecutive
/// internal spine vertices carries at least `ell(s)` leaves.
pub fn condition_check(view: &CaterpillarView) -> Result<(), FailingRun> {
    let counts = view.leaf_counts();
    let k = view.internal_len();
    if k == 0 {
        return Ok(());
    }
    let internal_counts: Vec<usize> = counts[1..=k].to_vec();
    let mut prefix = vec![0usize; k + 1];
    for i in 0..k {
        prefix[i + 1] = prefix[i] + internal_counts[i];
    }
    for len in 1..=k {
        for start in 0..=k - len {
            let sum = prefix[start + len] - prefix[start];
            let required = ell(len);
            if sum < required {
                return Err(FailingRun {
                    start,
                    len,
                    leaf_sum: sum,
                    required,
                    vertices: view.internal()[start..start + len].to_vec(),
                });
            }
        }
    }
    Ok(())
}

/// One pyramid cell `(position, height)`: positions are 1-based along the
/// internal spine, heights run from 1 to `min(position, k+1-position)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    pub position: usize,
    pub height: usize,
}

/// A chip route: the leaf whose chip fills `cell`, attached at internal
/// position `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellAssignment {
    pub cell: Cell,
    pub leaf: usize,
    pub source: usize,
}

/// A minimum-cost matching of internal leaves onto pyramid cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub pairs: Vec<CellAssignment>,
    pub cost: u64,
}

fn heights(k: usize) -> Vec<usize> {
    (1..=k).map(|i| i.min(k + 1 - i)).collect()
}

/// The pyramid over a run of `k` internal spine vertices: `min(i, k+1-i)`
/// cells stacked over position `i`, `ell(k)` cells in all, listed in
/// `(position, height)` order.
pub fn pyramid_cells(k: usize) -> Vec<Cell> {
    let mu = heights(k);
    let mut cells = Vec::new();
    for pos in 1..=k {
        for h in 1..=mu[pos - 1] {
            cells.push(Cell { position: pos, height: h });
        }
    }
    debug_assert!(k == 0 || cells.len() == ell(k));
    cells
}

/// Builds the minimum-cost assignment of internal-spine leaves onto the
/// pyramid over the whole internal spine. A leaf at position `j` may fill a
/// cell at position `i` and height `h` only when `h > |i - j|`, at cost
/// `|i - j|`; pairs out of reach have no edge at all. Returns `None`
/// exactly when the consolidation condition fails.
pub fn build_assignment(view: &CaterpillarView) -> Option<Assignment> {
    let k = view.internal_len();
    if k == 0 {
        return Some(Assignment { pairs: Vec::new(), cost: 0 });
    }
    // Columns: internal leaves in spine order.
    let mut columns: Vec<(usize, usize)> = Vec::new(); // (position, leaf id)
    for pos in 1..=k {
        for &leaf in view.leaves_of(pos) {
            columns.push((pos, leaf));
        }
    }
    // Rows: pyramid cells in (position, height) order.
    let cells = pyramid_cells(k);
    let adjacency: Vec<Vec<(usize, i64)>> = cells
        .iter()
        .map(|cell| {
            columns
                .iter()
                .enumerate()
                .filter(|&(_, &(pos, _))| cell.position.abs_diff(pos) < cell.height)
                .map(|(c, &(pos, _))| (c, cell.position.abs_diff(pos) as i64))
                .collect()
        })
        .collect();
    let (cost, row_to_col) = min_cost_assignment(cells.len(), columns.len(), &adjacency)?;
    let pairs = cells
        .iter()
        .zip(&row_to_col)
        .map(|(&cell, &c)| CellAssignment { cell, leaf: columns[c].1, source: columns[c].0 })
        .collect();
    Some(Assignment { pairs, cost: cost as u64 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SynthesisError {
    /// The consolidation condition fails, so no assignment exists.
    Infeasible(FailingRun),
    /// The fill order required by the assignment contains a cycle; only a
    /// non-minimum matching can produce this.
    OrderingViolation,
    IllegalMove(MoveError),
    Drain(crate::engine::DrainError),
}

impl fmt::Display for SynthesisError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            SynthesisError::Infeasible(run) => write!(
                f,
                "cannot consolidate: internal run of length {} carries {} leaves, needs {}",
                run.len, run.leaf_sum, run.required
            ),
            SynthesisError::OrderingViolation => {
                write!(f, "assignment fill order is cyclic; matching is not minimum-cost")
            }
            SynthesisError::IllegalMove(e) => write!(f, "internal error, illegal move: {}", e),
            SynthesisError::Drain(e) => write!(f, "internal error, drain failed: {}", e),
        }
    }
}

impl Error for SynthesisError {}

impl From<MoveError> for SynthesisError {
    fn from(e: MoveError) -> SynthesisError {
        SynthesisError::IllegalMove(e)
    }
}

impl From<crate::engine::DrainError> for SynthesisError {
    fn from(e: crate::engine::DrainError) -> SynthesisError {
        SynthesisError::Drain(e)
    }
}

/// Diagonal segment drawn for one assigned cell: from
/// `(source, height - distance)` up to `(position, height)`.
struct Diagonal {
    x_lo: usize,
    x_hi: usize,
    /// y at x, valid on `[x_lo, x_hi]`.
    dest_pos: usize,
    dest_h: usize,
}

impl Diagonal {
    fn of(a: &CellAssignment) -> Diagonal {
        Diagonal {
            x_lo: a.cell.position.min(a.source),
            x_hi: a.cell.position.max(a.source),
            dest_pos: a.cell.position,
            dest_h: a.cell.height,
        }
    }

    fn y_at(&self, x: usize) -> i64 {
        self.dest_h as i64 - (self.dest_pos as i64 - x as i64).abs()
    }
}

/// Pairwise fill order: `a` must fill before `b` when `a`'s segment runs
/// strictly below `b`'s somewhere. When the segments agree on their whole
/// shared range (collinear overlap, or one touching lattice point), the
/// chip that merely passes through goes first: a cell whose destination
/// lies on the other segment's span would block that chip if it filled
/// early. Returns `(a_below_b, b_below_a)`.
fn below(a: &Diagonal, b: &Diagonal) -> (bool, bool) {
    let lo = a.x_lo.max(b.x_lo);
    let hi = a.x_hi.min(b.x_hi);
    if lo > hi {
        return (false, false);
    }
    let mut a_below = false;
    let mut b_below = false;
    for x in [lo, hi] {
        match a.y_at(x).cmp(&b.y_at(x)) {
            std::cmp::Ordering::Less => a_below = true,
            std::cmp::Ordering::Greater => b_below = true,
            std::cmp::Ordering::Equal => {}
        }
    }
    if !a_below && !b_below {
        if (lo..=hi).contains(&a.dest_pos) {
            // a's destination sits on b's span: b passes through it first.
            b_below = true;
        } else if (lo..=hi).contains(&b.dest_pos) {
            a_below = true;
        }
    }
    (a_below, b_below)
}

/// Orders the assigned cells so that every chip can physically ride to its
/// cell: segments lower in the diagram fill first.
fn fill_order(pairs: &[CellAssignment]) -> Result<Vec<usize>, SynthesisError> {
    let n = pairs.len();
    let diags: Vec<Diagonal> = pairs.iter().map(Diagonal::of).collect();
    let mut after = vec![Vec::new(); n]; // edges a -> b: a fills before b
    let mut indegree = vec![0usize; n];
    for i in 0..n {
        for j in i + 1..n {
            let (i_below, j_below) = below(&diags[i], &diags[j]);
            if i_below && j_below {
                return Err(SynthesisError::OrderingViolation);
            }
            if i_below {
                after[i].push(j);
                indegree[j] += 1;
            } else if j_below {
                after[j].push(i);
                indegree[i] += 1;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: std::collections::BTreeSet<(Cell, usize)> = (0..n)
        .filter(|&i| indegree[i] == 0)
        .map(|i| (pairs[i].cell, i))
        .collect();
    while let Some(&(cell, i)) = ready.iter().next() {
        ready.remove(&(cell, i));
        order.push(i);
        for &j in &after[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.insert((pairs[j].cell, j));
            }
        }
    }
    if order.len() != n {
        return Err(SynthesisError::OrderingViolation);
    }
    Ok(order)
}

/// Converts a finite-cost assignment into a full protocol from all-ones to
/// a single occupied vertex.
///
/// Cells are filled bottom-up in the diagram order; each fill moves one
/// leaf chip onto its spine vertex and walks it along the spine to its
/// cell's position. Afterwards the internal vertex at position `i` carries
/// `1 + min(i, k+1-i)` weight: a single-peak profile drains straight to the
/// peak, a two-peak profile drains each side to its peak and merges the two
/// piles across the middle edge.
pub fn assignment_to_protocol(
    g: &Graph,
    view: &CaterpillarView,
    assignment: &Assignment,
) -> Result<Protocol, SynthesisError> {
    let k = view.internal_len();
    if k == 0 {
        debug_assert!(assignment.pairs.is_empty());
        return short_spine_protocol(g, view);
    }
    let mut builder = ProtocolBuilder::new(g);
    let order = fill_order(&assignment.pairs)?;
    for idx in order {
        let pair = &assignment.pairs[idx];
        let spine_of = |pos: usize| view.spine()[pos];
        builder.push(pair.leaf, spine_of(pair.source))?;
        let mut pos = pair.source;
        while pos != pair.cell.position {
            let next = if pos < pair.cell.position { pos + 1 } else { pos - 1 };
            builder.push(spine_of(pos), spine_of(next))?;
            pos = next;
        }
    }

    // Drain to the pyramid peak(s).
    if k % 2 == 1 {
        let root = view.spine()[k.div_ceil(2)];
        let members = positive_members(&builder);
        let tree = RootedTreeView::over_members(g, root, &members)
            .expect("positive weight spans a subtree");
        drain_view(&mut builder, &tree)?;
    } else {
        let left_peak = view.spine()[k / 2];
        let right_peak = view.spine()[k / 2 + 1];
        let members = positive_members(&builder);
        let left: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| side_of(view, v) <= k / 2)
            .collect();
        let right: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| side_of(view, v) > k / 2)
            .collect();
        let left_tree = RootedTreeView::over_members(g, left_peak, &left)
            .expect("left half spans a subtree");
        drain_view(&mut builder, &left_tree)?;
        let right_tree = RootedTreeView::over_members(g, right_peak, &right)
            .expect("right half spans a subtree");
        drain_view(&mut builder, &right_tree)?;
        merge_adjacent_piles(&mut builder, left_peak, right_peak)?;
    }
    let (protocol, end) = builder.finish();
    debug_assert_eq!(end.support(), 1);
    Ok(protocol)
}

/// Consolidation for caterpillars without internal spine vertices: the
/// empty graph on one vertex, a single edge, stars, and double stars.
fn short_spine_protocol(g: &Graph, view: &CaterpillarView) -> Result<Protocol, SynthesisError> {
    if view.n() <= 1 {
        return Ok(Protocol::empty());
    }
    let mut builder = ProtocolBuilder::new(g);
    if view.spine().is_empty() {
        // A single edge.
        builder.push(0, 1)?;
        return Ok(builder.finish().0);
    }
    // Star or double star: prime the root with one of its leaf chips when
    // the tree is not already root-drainable.
    let root = *view.spine().last().unwrap();
    if view.spine().len() == 2 {
        let leaf = view.leaves_of(1).first().copied().expect("spine ends carry leaves");
        builder.push(leaf, root)?;
    }
    let members = positive_members(&builder);
    let tree =
        RootedTreeView::over_members(g, root, &members).expect("caterpillar is connected");
    drain_view(&mut builder, &tree)?;
    let (protocol, end) = builder.finish();
    debug_assert_eq!(end.support(), 1);
    Ok(protocol)
}

fn positive_members(builder: &ProtocolBuilder) -> Vec<usize> {
    builder.weights().positive_vertices()
}

/// Spine position owning vertex `v` (itself, or the spine vertex it hangs
/// from).
fn side_of(view: &CaterpillarView, v: usize) -> usize {
    for (i, &s) in view.spine().iter().enumerate() {
        if s == v || view.leaves_of(i).contains(&v) {
            return i;
        }
    }
    unreachable!("every caterpillar vertex is on the spine or hangs from it")
}

/// Full consolidation protocol for a caterpillar whose condition holds.
pub fn unit_protocol(g: &Graph, view: &CaterpillarView) -> Result<Protocol, SynthesisError> {
    if let Err(run) = condition_check(view) {
        return Err(SynthesisError::Infeasible(run));
    }
    if view.internal_len() == 0 {
        return short_spine_protocol(g, view);
    }
    let assignment = build_assignment(view).expect("condition was checked above");
    assignment_to_protocol(g, view, &assignment)
}

/// A piece of the greedy spine partition: a run of spine vertices plus all
/// their leaves, consolidating to one vertex on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    /// Range of spine indices, inclusive.
    pub spine_range: (usize, usize),
    pub vertices: Vec<usize>,
}

/// Result of the linear scan: the exact unit acquisition number of the
/// caterpillar with a witness partition, plus the number of run-sum
/// comparisons performed (the scan's work measure).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarNumber {
    pub value: usize,
    pub pieces: Vec<Piece>,
    pub run_sums_evaluated: u64,
}

/// Exact unit acquisition number of a caterpillar by one left-to-right
/// scan: repeatedly extend a piece while it still consolidates on its own
/// (testing only the runs that end at each newly internal vertex), cut
/// where extension first fails, and start the next piece there.
///
/// Whether a spine vertex counts as internal is decided within the piece:
/// a piece-end vertex without leaves is a leaf of the piece, hanging off
/// its neighbor, so the piece's own spine shrinks accordingly.
pub fn a_u_caterpillar(view: &CaterpillarView) -> CaterpillarNumber {
    let spine_len = view.spine().len();
    if spine_len == 0 {
        return CaterpillarNumber {
            value: 1,
            pieces: vec![Piece { spine_range: (0, 0), vertices: (0..view.n()).collect() }],
            run_sums_evaluated: 0,
        };
    }
    let counts = view.leaf_counts();
    let mut pieces = Vec::new();
    let mut sums: u64 = 0;
    let mut a = 0usize;
    while a < spine_len {
        // First spine index of the piece's own spine: a leafless left end
        // hangs as a leaf of its right neighbor.
        let piece_spine_start = if counts[a] == 0 { a + 1 } else { a };
        let mut internal_counts: Vec<usize> = Vec::new();
        let mut prefix: Vec<usize> = vec![0];
        let mut internal_watermark = piece_spine_start; // next internal candidate
        let mut best_b = a;
        let mut b = a;
        'extend: loop {
            // Piece [a, b]: its own spine ends at b when b carries leaves,
            // else at b-1 (with b hanging as a leaf).
            let piece_spine_end = if counts[b] > 0 { b } else { b.saturating_sub(1) };
            let internal_end = piece_spine_end.saturating_sub(1); // inclusive
            while internal_watermark <= internal_end && internal_watermark < spine_len {
                let t = internal_watermark;
                if t <= piece_spine_start {
                    internal_watermark += 1;
                    continue;
                }
                internal_counts.push(counts[t]);
                prefix.push(prefix.last().unwrap() + counts[t]);
                let m = internal_counts.len();
                let mut running = 0usize;
                for len in 1..=m {
                    running += internal_counts[m - len];
                    sums += 1;
                    if running < ell(len) {
                        break 'extend;
                    }
                }
                internal_watermark += 1;
            }
            best_b = b;
            if b + 1 == spine_len {
                break;
            }
            b += 1;
        }
        let mut vertices = Vec::new();
        for i in a..=best_b {
            vertices.push(view.spine()[i]);
            vertices.extend_from_slice(view.leaves_of(i));
        }
        vertices.sort_unstable();
        pieces.push(Piece { spine_range: (a, best_b), vertices });
        a = best_b + 1;
    }
    CaterpillarNumber { value: pieces.len(), pieces, run_sums_evaluated: sums }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::replay;
    use crate::generators;
    use crate::solver::unit_acquisition_number_default;

    /// The 6-vertex caterpillar: a 5-path with one extra leaf on its center.
    fn j_graph() -> Graph {
        Graph::from_edge_list("0 1\n1 2\n2 3\n3 4\n2 5").unwrap()
    }

    #[test]
    fn recognize_paths() {
        let view = recognize(&generators::path(6).unwrap()).unwrap();
        assert_eq!(view.spine(), &[1, 2, 3, 4]);
        assert_eq!(view.internal_len(), 2);
        assert_eq!(view.leaf_counts(), vec![1, 0, 0, 1]);

        let view = recognize(&generators::path(2).unwrap()).unwrap();
        assert!(view.spine().is_empty());
        let view = recognize(&generators::path(1).unwrap()).unwrap();
        assert!(view.spine().is_empty());
    }

    #[test]
    fn recognize_ten_vertex_unit_tree() {
        // Deleting the six leaves keeps the four spine vertices; the two
        // middle ones are internal with one leaf each, so every internal
        // run carries enough leaves (1 >= ell(1), 2 >= ell(2)).
        let t = generators::max_degree3_unit_tree();
        let view = recognize(&t).unwrap();
        assert_eq!(view.spine().len(), 4);
        assert_eq!(view.internal_len(), 2);
        let counts = view.leaf_counts();
        assert_eq!(counts, vec![2, 1, 1, 2]);
        assert!(condition_check(&view).is_ok());
    }

    #[test]
    fn recognize_rejects_spider() {
        // Three paths of length 2 glued at a center: the center has three
        // non-leaf neighbors.
        let spider = Graph::from_edge_list("0 1\n1 2\n0 3\n3 4\n0 5\n5 6").unwrap();
        assert_eq!(recognize(&spider), Err(NotCaterpillar::BranchVertex(0)));
    }

    #[test]
    fn recognize_rejects_cycles_and_disconnected() {
        let c4 = generators::cycle(4).unwrap();
        assert!(matches!(recognize(&c4), Err(NotCaterpillar::CycleEdge(_, _))));
        let two = Graph::from_edge_list("0 1\n2 3").unwrap();
        assert_eq!(recognize(&two), Err(NotCaterpillar::Disconnected));
    }

    #[test]
    fn orientation_is_canonical() {
        // Leaf counts (1,2) read forward; reversal gives (2,1), so the
        // canonical orientation is the (1,2) direction regardless of input
        // labeling.
        let g = generators::caterpillar_from_code(&[2, 1]);
        let view = recognize(&g).unwrap();
        assert_eq!(view.leaf_counts(), vec![1, 2]);
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell(1), 1);
        assert_eq!(ell(2), 2);
        assert_eq!(ell(3), 4);
        assert_eq!(ell(4), 6);
        assert_eq!(ell(7), 16);
        // Closed form agrees with the cell-count sum.
        for s in 1..=50 {
            let sum: usize = (1..=s).map(|i: usize| i.div_ceil(2)).sum();
            assert_eq!(ell(s), sum);
        }
    }

    #[test]
    fn condition_examples() {
        let j = recognize(&j_graph()).unwrap();
        assert!(condition_check(&j).is_ok());

        let p5 = recognize(&generators::path(5).unwrap()).unwrap();
        let run = condition_check(&p5).unwrap_err();
        assert_eq!(run.len, 1);
        assert_eq!(run.leaf_sum, 0);
        assert_eq!(run.required, 1);
        assert_eq!(run.vertices, vec![2]);

        // Internal counts (1,1,1): every short run passes but the full run
        // carries 3 < ell(3) = 4.
        let g = generators::caterpillar_from_code(&[1, 1, 1, 1, 1]);
        let view = recognize(&g).unwrap();
        assert_eq!(view.leaf_counts(), vec![1, 1, 1, 1, 1]);
        let run = condition_check(&view).unwrap_err();
        assert_eq!((run.start, run.len), (0, 3));
        assert_eq!(run.leaf_sum, 3);
        assert_eq!(run.required, 4);
    }

    #[test]
    fn assignment_on_j() {
        let j = recognize(&j_graph()).unwrap();
        let a = build_assignment(&j).unwrap();
        assert_eq!(a.pairs.len(), 1);
        assert_eq!(a.cost, 0);
        assert_eq!(a.pairs[0].cell, Cell { position: 1, height: 1 });
        assert_eq!(a.pairs[0].leaf, 5);
    }

    #[test]
    fn assignment_infeasible_iff_condition_fails() {
        for g in generators::enumerate_caterpillars(10) {
            let view = recognize(&g).unwrap();
            assert_eq!(build_assignment(&view).is_some(), condition_check(&view).is_ok());
        }
    }

    #[test]
    fn protocol_examples() {
        let j = j_graph();
        let view = recognize(&j).unwrap();
        let proto = unit_protocol(&j, &view).unwrap();
        let end = replay(&j, &proto).unwrap();
        assert_eq!(end.support(), 1);

        // Internal leaf counts (1,2,1): four cells, and the filled profile
        // peaks in the middle.
        let g = generators::caterpillar_from_code(&[1, 1, 2, 1, 1]);
        let view = recognize(&g).unwrap();
        let a = build_assignment(&view).unwrap();
        let cells: Vec<Cell> = a.pairs.iter().map(|p| p.cell).collect();
        assert_eq!(
            cells,
            vec![
                Cell { position: 1, height: 1 },
                Cell { position: 2, height: 1 },
                Cell { position: 2, height: 2 },
                Cell { position: 3, height: 1 }
            ]
        );
        let proto = assignment_to_protocol(&g, &view, &a).unwrap();
        let end = replay(&g, &proto).unwrap();
        assert_eq!(end.support(), 1);
        assert_eq!(
            unit_acquisition_number_default(&g).unwrap().value(),
            Some(1)
        );

        let p5 = recognize(&generators::path(5).unwrap()).unwrap();
        assert!(matches!(
            unit_protocol(&generators::path(5).unwrap(), &p5),
            Err(SynthesisError::Infeasible(_))
        ));
    }

    #[test]
    fn crossing_assignment_is_rejected() {
        // Two cells at positions 1 and 2, each filled from the other side:
        // the diagram's segments cross, which a minimum-cost matching never
        // produces.
        let g = generators::caterpillar_from_code(&[1, 1, 1, 1]);
        let view = recognize(&g).unwrap();
        let leaf1 = view.leaves_of(1)[0];
        let leaf2 = view.leaves_of(2)[0];
        let bad = Assignment {
            pairs: vec![
                CellAssignment { cell: Cell { position: 1, height: 2 }, leaf: leaf2, source: 2 },
                CellAssignment { cell: Cell { position: 2, height: 2 }, leaf: leaf1, source: 1 },
            ],
            cost: 2,
        };
        assert!(matches!(
            assignment_to_protocol(&g, &view, &bad),
            Err(SynthesisError::OrderingViolation)
        ));
    }

    #[test]
    fn unit_protocol_degenerate_trees() {
        for code in [vec![4usize], vec![2, 3]] {
            let g = generators::caterpillar_from_code(&code);
            let view = recognize(&g).unwrap();
            let proto = unit_protocol(&g, &view).unwrap();
            assert_eq!(replay(&g, &proto).unwrap().support(), 1);
        }
        for n in 1..=4usize {
            let g = generators::path(n).unwrap();
            let view = recognize(&g).unwrap();
            let proto = unit_protocol(&g, &view).unwrap();
            assert_eq!(replay(&g, &proto).unwrap().support(), 1);
        }
    }

    #[test]
    fn scan_values() {
        for (n, expect) in [(2, 1), (4, 1), (5, 2), (8, 2), (9, 3), (12, 3)] {
            let g = generators::path(n).unwrap();
            let view = recognize(&g).unwrap();
            assert_eq!(a_u_caterpillar(&view).value, expect, "path n={}", n);
        }
        let j = recognize(&j_graph()).unwrap();
        assert_eq!(a_u_caterpillar(&j).value, 1);
    }

    #[test]
    fn scan_matches_solver_on_small_corpus() {
        for g in generators::enumerate_caterpillars(9) {
            let view = recognize(&g).unwrap();
            let scan = a_u_caterpillar(&view);
            let exact = unit_acquisition_number_default(&g).unwrap().value().unwrap();
            assert_eq!(scan.value, exact, "counts {:?}", view.leaf_counts());
            assert_eq!(scan.value == 1, condition_check(&view).is_ok());
        }
    }

    #[test]
    fn scan_is_orientation_invariant() {
        for g in generators::enumerate_caterpillars(11) {
            let view = recognize(&g).unwrap();
            let fwd = a_u_caterpillar(&view).value;
            let rev = a_u_caterpillar(&view.reversed()).value;
            assert_eq!(fwd, rev, "counts {:?}", view.leaf_counts());
        }
    }

    #[test]
    fn scan_pieces_partition_and_consolidate() {
        for g in generators::enumerate_caterpillars(10) {
            let view = recognize(&g).unwrap();
            let result = a_u_caterpillar(&view);
            let mut all: Vec<usize> = Vec::new();
            for piece in &result.pieces {
                all.extend_from_slice(&piece.vertices);
                let (sub, _) = g.induced(&piece.vertices);
                let sub_view = recognize(&sub).expect("pieces are caterpillars");
                assert!(condition_check(&sub_view).is_ok(), "counts {:?}", view.leaf_counts());
            }
            all.sort_unstable();
            let expected: Vec<usize> = (0..g.n()).collect();
            assert_eq!(all, expected, "pieces must partition the vertex set");
        }
    }

    #[test]
    fn scan_work_is_linear_in_vertices() {
        // Run-sum comparisons stay within a fixed multiple of the vertex
        // count over the whole corpus: each passing prefix owns at least
        // quadratically many leaves, so the quadratic number of sums it
        // triggers amortizes against its own vertices.
        for g in generators::enumerate_caterpillars(16) {
            let view = recognize(&g).unwrap();
            let result = a_u_caterpillar(&view);
            assert!(
                result.run_sums_evaluated <= 4 * g.n() as u64 + 8,
                "counts {:?}: {} sums for {} vertices",
                view.leaf_counts(),
                result.run_sums_evaluated,
                g.n()
            );
        }
    }
}
