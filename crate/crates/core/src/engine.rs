//! Move semantics for unit acquisition.
//!
//! A unit move transfers one unit of weight from a vertex to a neighbor
//! that currently holds at least as much weight as the source. Protocols
//! are ordered move sequences; they serve as upper-bound certificates and
//! replay deterministically from the all-ones configuration.

use std::error::Error;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{is_ascending_tree, Graph, RootedTreeView, WeightConfig};

/// A single transfer of one unit of weight between adjacent vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitMove {
    pub from: usize,
    pub to: usize,
}

impl UnitMove {
    pub fn new(from: usize, to: usize) -> UnitMove {
        UnitMove { from, to }
    }
}

impl fmt::Display for UnitMove {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// Why a move is not legal in a given configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveError {
    OutOfRange(usize),
    SelfMove(usize),
    NonAdjacent(usize, usize),
    EmptySource(usize),
    TargetLighter { from: usize, to: usize, from_weight: u32, to_weight: u32 },
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match *self {
            MoveError::OutOfRange(v) => write!(f, "vertex {} out of range", v),
            MoveError::SelfMove(v) => write!(f, "move from {} to itself", v),
            MoveError::NonAdjacent(u, v) => write!(f, "vertices {} and {} are not adjacent", u, v),
            MoveError::EmptySource(v) => write!(f, "source vertex {} has no weight", v),
            MoveError::TargetLighter { from, to, from_weight, to_weight } => write!(
                f,
                "target {} (weight {}) is lighter than source {} (weight {})",
                to, to_weight, from, from_weight
            ),
        }
    }
}

impl Error for MoveError {}

/// Checks a move and reports the first violated condition.
pub fn check_move(g: &Graph, w: &WeightConfig, m: UnitMove) -> Result<(), MoveError> {
    if m.from >= g.n() {
        return Err(MoveError::OutOfRange(m.from));
    }
    if m.to >= g.n() {
        return Err(MoveError::OutOfRange(m.to));
    }
    if m.from == m.to {
        return Err(MoveError::SelfMove(m.from));
    }
    if !g.has_edge(m.from, m.to) {
        return Err(MoveError::NonAdjacent(m.from, m.to));
    }
    let wf = w.get(m.from);
    let wt = w.get(m.to);
    if wf == 0 {
        return Err(MoveError::EmptySource(m.from));
    }
    if wt < wf {
        return Err(MoveError::TargetLighter { from: m.from, to: m.to, from_weight: wf, to_weight: wt });
    }
    Ok(())
}

/// True iff the move is legal: the endpoints are adjacent, the source has
/// weight, and the target holds at least as much weight as the source.
pub fn is_legal(g: &Graph, w: &WeightConfig, m: UnitMove) -> bool {
    check_move(g, w, m).is_ok()
}

/// Applies a legal move, returning the new configuration.
pub fn apply(g: &Graph, w: &WeightConfig, m: UnitMove) -> Result<WeightConfig, MoveError> {
    check_move(g, w, m)?;
    let mut next = w.clone();
    next.weights[m.from] -= 1;
    next.weights[m.to] += 1;
    Ok(next)
}

/// An ordered sequence of unit moves.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Protocol {
    moves: Vec<UnitMove>,
}

/// Replay failure: the offending move index and the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayError {
    pub index: usize,
    pub reason: MoveError,
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "illegal move at index {}: {}", self.index, self.reason)
    }
}

impl Error for ReplayError {}

/// Serialized form: the graph digest plus `[from, to]` pairs.
#[derive(Serialize, Deserialize)]
struct ProtocolDoc {
    graph_hash: String,
    moves: Vec<(usize, usize)>,
}

impl Protocol {
    pub fn new(moves: Vec<UnitMove>) -> Protocol {
        Protocol { moves }
    }

    pub fn empty() -> Protocol {
        Protocol { moves: Vec::new() }
    }

    pub fn moves(&self) -> &[UnitMove] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn push(&mut self, m: UnitMove) {
        self.moves.push(m);
    }

    pub fn extend(&mut self, other: &Protocol) {
        self.moves.extend_from_slice(&other.moves);
    }

    /// JSON wire format tying the protocol to its graph by digest.
    pub fn to_json(&self, g: &Graph) -> String {
        let doc = ProtocolDoc {
            graph_hash: g.hash_hex(),
            moves: self.moves.iter().map(|m| (m.from, m.to)).collect(),
        };
        serde_json::to_string(&doc).expect("protocol serialization cannot fail")
    }

    /// Parses the JSON wire format; rejects a digest that does not match `g`.
    pub fn from_json(g: &Graph, json: &str) -> Result<Protocol, String> {
        let doc: ProtocolDoc = serde_json::from_str(json).map_err(|e| e.to_string())?;
        if doc.graph_hash != g.hash_hex() {
            return Err(format!(
                "protocol was recorded for graph {}, not {}",
                doc.graph_hash,
                g.hash_hex()
            ));
        }
        Ok(Protocol::new(doc.moves.into_iter().map(|(a, b)| UnitMove::new(a, b)).collect()))
    }
}

/// Replays a protocol from the all-ones configuration, failing fast on the
/// first illegal move.
pub fn replay(g: &Graph, p: &Protocol) -> Result<WeightConfig, ReplayError> {
    replay_from(g, WeightConfig::all_ones(g.n()), p)
}

/// Replays a protocol from an arbitrary starting configuration.
pub fn replay_from(g: &Graph, start: WeightConfig, p: &Protocol) -> Result<WeightConfig, ReplayError> {
    let mut w = start;
    for (index, &m) in p.moves().iter().enumerate() {
        check_move(g, &w, m).map_err(|reason| ReplayError { index, reason })?;
        w.weights[m.from] -= 1;
        w.weights[m.to] += 1;
    }
    Ok(w)
}

/// Incrementally builds a protocol, validating each move as it is pushed.
/// The final protocol is replayable by construction.
pub struct ProtocolBuilder<'g> {
    pub(crate) g: &'g Graph,
    pub(crate) w: WeightConfig,
    moves: Vec<UnitMove>,
}

impl<'g> ProtocolBuilder<'g> {
    pub fn new(g: &'g Graph) -> ProtocolBuilder<'g> {
        ProtocolBuilder { g, w: WeightConfig::all_ones(g.n()), moves: Vec::new() }
    }

    pub fn from_config(g: &'g Graph, w: WeightConfig) -> ProtocolBuilder<'g> {
        ProtocolBuilder { g, w, moves: Vec::new() }
    }

    pub fn push(&mut self, from: usize, to: usize) -> Result<(), MoveError> {
        let m = UnitMove::new(from, to);
        check_move(self.g, &self.w, m)?;
        self.w.weights[from] -= 1;
        self.w.weights[to] += 1;
        self.moves.push(m);
        Ok(())
    }

    /// Moves `count` units one at a time from `from` to `to`.
    pub fn push_units(&mut self, from: usize, to: usize, count: u32) -> Result<(), MoveError> {
        for _ in 0..count {
            self.push(from, to)?;
        }
        Ok(())
    }

    pub fn extend(&mut self, p: &Protocol) -> Result<(), ReplayError> {
        for (i, &m) in p.moves().iter().enumerate() {
            self.push(m.from, m.to).map_err(|reason| ReplayError { index: i, reason })?;
        }
        Ok(())
    }

    pub fn weights(&self) -> &WeightConfig {
        &self.w
    }

    pub fn move_count(&self) -> usize {
        self.moves.len()
    }

    pub fn finish(self) -> (Protocol, WeightConfig) {
        (Protocol::new(self.moves), self.w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrainError {
    View(crate::graph::ViewError),
    NotAscending,
    SupportOutsideView { vertex: usize },
    IllegalMove(MoveError),
}

impl fmt::Display for DrainError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            DrainError::View(e) => write!(f, "invalid tree view: {}", e),
            DrainError::NotAscending => write!(f, "configuration is not an ascending tree"),
            DrainError::SupportOutsideView { vertex } => {
                write!(f, "positive-weight vertex {} is outside the view", vertex)
            }
            DrainError::IllegalMove(e) => write!(f, "drain produced an illegal move: {}", e),
        }
    }
}

impl Error for DrainError {}

impl From<crate::graph::ViewError> for DrainError {
    fn from(e: crate::graph::ViewError) -> DrainError {
        DrainError::View(e)
    }
}

/// Drains an ascending tree: moves every unit of weight to the view's root.
///
/// Non-root vertices are emptied in order of decreasing depth, one unit at a
/// time, each unit riding the parent chain all the way to the root. A unit
/// leaving weight `h` arrives at a parent of weight at least `h`, and from
/// there every ancestor step sees exactly equal weights, so every move is
/// legal and intermediate weights are restored once the unit lands.
///
/// The returned protocol continues from `w` (it does not start at all-ones);
/// after it, the root carries the entire drained weight and the view's
/// support is exactly the root.
pub fn drain_ascending(
    g: &Graph,
    view: &RootedTreeView,
    w: &WeightConfig,
) -> Result<Protocol, DrainError> {
    for v in 0..g.n() {
        if w.get(v) > 0 && !view.contains(v) {
            return Err(DrainError::SupportOutsideView { vertex: v });
        }
    }
    let mut builder = ProtocolBuilder::from_config(g, w.clone());
    drain_view(&mut builder, view)?;
    debug_assert_eq!(builder.weights().get(view.root()) as u64, w.total());
    let (protocol, _) = builder.finish();
    Ok(protocol)
}

/// Drains only the view's members into the view's root, leaving weight
/// outside the view untouched. The restriction of the current configuration
/// to the view must be an ascending tree.
pub fn drain_view(builder: &mut ProtocolBuilder, view: &RootedTreeView) -> Result<(), DrainError> {
    if !is_ascending_tree(builder.g, view, &builder.w)? {
        return Err(DrainError::NotAscending);
    }
    let mut order: Vec<usize> = view
        .members()
        .into_iter()
        .filter(|&v| v != view.root() && builder.w.get(v) > 0)
        .collect();
    // Deepest first; ties by id keep the protocol deterministic.
    order.sort_by_key(|&v| (std::cmp::Reverse(view.depth(v).unwrap()), v));

    for &v in &order {
        let units = builder.w.get(v);
        for _ in 0..units {
            let mut cur = v;
            while cur != view.root() {
                let p = view.parent(cur).expect("non-root members have parents");
                builder.push(cur, p).map_err(DrainError::IllegalMove)?;
                cur = p;
            }
        }
    }
    Ok(())
}

/// Consolidates two piles across an edge: the lighter side (ties go to
/// `a`) empties into the other, one unit at a time. Returns the vertex
/// holding the merged pile.
pub fn merge_adjacent_piles(
    builder: &mut ProtocolBuilder,
    a: usize,
    b: usize,
) -> Result<usize, MoveError> {
    let (src, dst) = if builder.w.get(a) <= builder.w.get(b) { (a, b) } else { (b, a) };
    let units = builder.w.get(src);
    builder.push_units(src, dst, units)?;
    Ok(dst)
}
