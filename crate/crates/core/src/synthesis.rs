//! Constructive protocol synthesizers: each builds an explicit move
//! sequence from all-ones and reports the support it reaches, giving a
//! certified upper bound without any search.

use std::error::Error;
use std::fmt;

use crate::engine::{
    drain_view, merge_adjacent_piles, DrainError, MoveError, Protocol, ProtocolBuilder,
};
use crate::graph::{Graph, RootedTreeView};
use crate::solver::{min_maximal_matching, SolverError};
use crate::generators;

/// Which construction produced an outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Level2,
    Radius2Partition,
    MatchingPartition,
    Star,
    Diam2Girth3,
    Diam2Girth4,
    Diam2Girth5,
    SpecialC5,
    SpecialPetersen,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        let name = match self {
            Method::Level2 => "level2",
            Method::Radius2Partition => "radius2-partition",
            Method::MatchingPartition => "matching-partition",
            Method::Star => "star",
            Method::Diam2Girth3 => "diam2-girth3",
            Method::Diam2Girth4 => "diam2-girth4",
            Method::Diam2Girth5 => "diam2-girth5",
            Method::SpecialC5 => "special-c5",
            Method::SpecialPetersen => "special-petersen",
        };
        write!(f, "{}", name)
    }
}

#[derive(Debug, Clone)]
pub struct SynthesisOutcome {
    pub protocol: Protocol,
    pub final_support: usize,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SynthesisError {
    NotConnected,
    NotDiameter2 { diameter: Option<usize> },
    Solver(SolverError),
    /// A structural guarantee failed; indicates a bug or an input outside
    /// the construction's hypotheses.
    Internal(&'static str),
    Move(MoveError),
    Drain(DrainError),
}

impl fmt::Display for SynthesisError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            SynthesisError::NotConnected => write!(f, "graph is disconnected"),
            SynthesisError::NotDiameter2 { diameter: Some(d) } => {
                write!(f, "graph has diameter {}, not 2", d)
            }
            SynthesisError::NotDiameter2 { diameter: None } => {
                write!(f, "graph has infinite diameter, not 2")
            }
            SynthesisError::Solver(e) => write!(f, "{}", e),
            SynthesisError::Internal(msg) => write!(f, "internal inconsistency: {}", msg),
            SynthesisError::Move(e) => write!(f, "internal error, illegal move: {}", e),
            SynthesisError::Drain(e) => write!(f, "internal error, drain failed: {}", e),
        }
    }
}

impl Error for SynthesisError {}

impl From<MoveError> for SynthesisError {
    fn from(e: MoveError) -> SynthesisError {
        SynthesisError::Move(e)
    }
}

impl From<DrainError> for SynthesisError {
    fn from(e: DrainError) -> SynthesisError {
        SynthesisError::Drain(e)
    }
}

impl From<SolverError> for SynthesisError {
    fn from(e: SolverError) -> SynthesisError {
        SynthesisError::Solver(e)
    }
}

fn finish(builder: ProtocolBuilder, method: Method) -> SynthesisOutcome {
    let (protocol, end) = builder.finish();
    SynthesisOutcome { protocol, final_support: end.support(), method }
}

/// Two-pile protocol for graphs with a spanning tree of depth at most 2
/// rooted at `root` and an edge joining two depth-2 vertices.
///
/// One depth-2 endpoint of that edge becomes a collection point: it takes
/// the chip across the edge, then the chips of its tree siblings two steps
/// each through their common parent, whose own chip finally leaves to the
/// root. Everything else is an ascending tree under the root, so at most
/// two piles remain. Returns `None` when no root-respecting depth-2 edge
/// exists.
pub fn level2_protocol(g: &Graph, root: usize) -> Option<SynthesisOutcome> {
    if root >= g.n() || !g.is_connected() {
        return None;
    }
    let dist = g.bfs_distances(root);
    if dist.iter().any(|d| d.is_none_or(|d| d > 2)) {
        return None;
    }
    let (z, w) = g
        .edges()
        .iter()
        .copied()
        .find(|&(a, b)| dist[a] == Some(2) && dist[b] == Some(2))?;
    // Tree parents: every depth-2 vertex hangs under its smallest depth-1
    // neighbor.
    let parent_of = |v: usize| {
        g.neighbors(v).iter().copied().find(|&x| dist[x] == Some(1)).expect("depth-2 has a parent")
    };
    let x1 = parent_of(z);
    let mut builder = ProtocolBuilder::new(g);
    builder.push(w, z).ok()?;
    let siblings: Vec<usize> = (0..g.n())
        .filter(|&y| y != z && dist[y] == Some(2) && parent_of(y) == x1)
        .collect();
    for y in siblings {
        if builder.weights().get(y) == 0 {
            continue; // the donor w may itself hang under x1
        }
        builder.push(y, x1).ok()?;
        builder.push(x1, z).ok()?;
    }
    builder.push(x1, root).ok()?;
    // Drain everything except the collection pile into the root.
    let members: Vec<usize> =
        builder.weights().positive_vertices().into_iter().filter(|&v| v != z).collect();
    let view = RootedTreeView::over_members(g, root, &members).ok()?;
    drain_view(&mut builder, &view).ok()?;
    let outcome = finish(builder, Method::Level2);
    debug_assert_eq!(outcome.final_support, 2);
    Some(outcome)
}

/// Partition protocol behind the `(n-1)/min-degree` bound: greedily pick
/// centers pairwise at distance 3 or more, give every vertex to its
/// nearest center, and consolidate each part around its center after
/// sacrificing the center's lightest child.
pub fn radius2_partition_protocol(g: &Graph) -> Result<SynthesisOutcome, SynthesisError> {
    if !g.is_connected() {
        return Err(SynthesisError::NotConnected);
    }
    let n = g.n();
    let mut builder = ProtocolBuilder::new(g);
    if n <= 1 {
        return Ok(finish(builder, Method::Radius2Partition));
    }
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|v| g.bfs_distances(v)).collect();
    let mut centers: Vec<usize> = Vec::new();
    for v in 0..n {
        if centers.iter().all(|&c| dist[c][v].unwrap() >= 3) {
            centers.push(v);
        }
    }
    // Nearest-center assignment; center neighbors are strictly nearest
    // their own center, ties elsewhere go to the smaller center id.
    let mut part = vec![usize::MAX; n];
    for v in 0..n {
        let mut best = (usize::MAX, usize::MAX);
        for &c in &centers {
            let d = dist[c][v].unwrap();
            if d < best.0 {
                best = (d, c);
            }
        }
        part[v] = best.1;
    }
    for &c in &centers {
        let members: Vec<usize> = (0..n).filter(|&v| part[v] == c).collect();
        if members.len() == 1 {
            continue;
        }
        let tree = RootedTreeView::over_members(g, c, &members)
            .map_err(|_| SynthesisError::Internal("part does not span a radius-2 tree"))?;
        // Sacrifice: the center child of least tree degree moves its chip
        // to the center and abandons its own children.
        let child = tree
            .children(c)
            .into_iter()
            .min_by_key(|&x| (tree.children(x).len(), x))
            .expect("non-singleton part has center children");
        let abandoned = tree.children(child);
        builder.push(child, c)?;
        let drained: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| v != child && !abandoned.contains(&v))
            .collect();
        let drain_tree = RootedTreeView::over_members(g, c, &drained)
            .map_err(|_| SynthesisError::Internal("drained part is not connected"))?;
        drain_view(&mut builder, &drain_tree)?;
    }
    Ok(finish(builder, Method::Radius2Partition))
}

/// Partition protocol behind the maximal-matching bound: the parts around
/// a smallest maximal matching induce double stars, and each consolidates
/// to a single vertex.
pub fn matching_partition_protocol(g: &Graph) -> Result<SynthesisOutcome, SynthesisError> {
    if !g.is_connected() {
        return Err(SynthesisError::NotConnected);
    }
    let (_, matching) = min_maximal_matching(g)?;
    let mut part = vec![usize::MAX; g.n()];
    let mut hangs_on = vec![usize::MAX; g.n()];
    for (i, &(a, b)) in matching.iter().enumerate() {
        part[a] = i;
        part[b] = i;
    }
    for v in 0..g.n() {
        if part[v] == usize::MAX {
            // Maximality: every uncovered vertex has a covered neighbor.
            let host = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&x| part[x] != usize::MAX)
                .ok_or(SynthesisError::Internal("matching is not maximal"))?;
            part[v] = part[host];
            hangs_on[v] = host;
        }
    }
    let mut builder = ProtocolBuilder::new(g);
    for (i, &(a, b)) in matching.iter().enumerate() {
        let hangers_b: Vec<usize> = (0..g.n()).filter(|&v| hangs_on[v] == b).collect();
        let hangers_a: Vec<usize> = (0..g.n()).filter(|&v| hangs_on[v] == a).collect();
        // Root the double star where a leaf chip can prime the pile.
        let root = if !hangers_b.is_empty() {
            builder.push(hangers_b[0], b)?;
            b
        } else if !hangers_a.is_empty() {
            builder.push(hangers_a[0], a)?;
            a
        } else {
            builder.push(a, b)?;
            continue;
        };
        let members: Vec<usize> = (0..g.n())
            .filter(|&v| part[v] == i && builder.weights().get(v) > 0)
            .collect();
        let tree = RootedTreeView::over_members(g, root, &members)
            .map_err(|_| SynthesisError::Internal("part is not a connected double star"))?;
        drain_view(&mut builder, &tree)?;
    }
    Ok(finish(builder, Method::MatchingPartition))
}

/// Full-consolidation protocol for diameter-2 graphs, dispatching on girth.
/// The two exceptional graphs (the 5-cycle and the Petersen graph) get
/// two-pile protocols; every other diameter-2 graph reaches a single pile.
pub fn diam2_protocol(g: &Graph) -> Result<SynthesisOutcome, SynthesisError> {
    let diameter = g.diameter();
    if diameter != Some(2) {
        return Err(SynthesisError::NotDiameter2 { diameter });
    }
    // Stars first: a diameter-2 graph that is not a star has girth <= 5.
    if g.edge_count() == g.n() - 1 && g.max_degree() == g.n() - 1 {
        let center = (0..g.n()).find(|&v| g.degree(v) == g.n() - 1).unwrap();
        let mut builder = ProtocolBuilder::new(g);
        for v in 0..g.n() {
            if v != center {
                builder.push(v, center)?;
            }
        }
        let outcome = finish(builder, Method::Star);
        debug_assert_eq!(outcome.final_support, 1);
        return Ok(outcome);
    }
    if g.n() == 5 && (0..5).all(|v| g.degree(v) == 2) {
        let mut outcome = level2_protocol(g, 0)
            .ok_or(SynthesisError::Internal("5-cycle admits a level-2 protocol"))?;
        outcome.method = Method::SpecialC5;
        return Ok(outcome);
    }
    if g.n() == 10 && (0..10).all(|v| g.degree(v) == 3) && g.girth() == Some(5) {
        return petersen_protocol(g);
    }
    match g.girth() {
        Some(3) => girth3_protocol(g),
        Some(4) => girth4_protocol(g),
        Some(5) => girth5_protocol(g),
        _ => Err(SynthesisError::Internal("non-star diameter-2 graph has girth at most 5")),
    }
}

/// Petersen-shaped input: move the chips of a perfect matching onto a
/// 5-cycle, then fold the doubled cycle into two piles.
fn petersen_protocol(g: &Graph) -> Result<SynthesisOutcome, SynthesisError> {
    let template = generators::petersen();
    let map = template
        .isomorphism_to(g)
        .ok_or(SynthesisError::Internal("3-regular girth-5 diameter-2 graph must be Petersen"))?;
    let mut builder = ProtocolBuilder::new(g);
    for i in 0..5 {
        builder.push(map[i + 5], map[i])?;
    }
    // Outer cycle now carries weight 2 everywhere; gather into two piles.
    builder.push_units(map[0], map[1], 2)?;
    builder.push_units(map[2], map[3], 2)?;
    builder.push_units(map[4], map[3], 2)?;
    let outcome = finish(builder, Method::SpecialPetersen);
    debug_assert_eq!(outcome.final_support, 2);
    Ok(outcome)
}

/// Attaches every listed vertex under a parent chosen by `pick`; parents
/// are `(child, parent)` pairs for an explicit tree view.
fn attach_all(
    unplaced: &mut Vec<usize>,
    links: &mut Vec<(usize, usize)>,
    placed: &mut [bool],
    mut pick: impl FnMut(usize, &[bool]) -> Option<usize>,
) {
    let mut i = 0;
    while i < unplaced.len() {
        let v = unplaced[i];
        match pick(v, placed) {
            Some(p) => {
                links.push((v, p));
                placed[v] = true;
                unplaced.swap_remove(i);
            }
            None => i += 1,
        }
    }
}

fn girth3_protocol(g: &Graph) -> Result<SynthesisOutcome, SynthesisError> {
    let clique = g.max_clique();
    if clique.len() < 3 {
        return Err(SynthesisError::Internal("girth-3 graph has a triangle"));
    }
    let in_clique = |v: usize| clique.contains(&v);
    // Solo neighbors: outside vertices whose only clique neighbor is u.
    let solo = |u: usize| -> Vec<usize> {
        (0..g.n())
            .filter(|&s| {
                !in_clique(s)
                    && g.has_edge(s, u)
                    && clique.iter().all(|&q| q == u || !g.has_edge(s, q))
            })
            .collect()
    };

    if let Some(&u) = clique.iter().find(|&&u| solo(u).is_empty()) {
        // No solo neighbor: after u's chip leaves, everything still reaches
        // the sink within two steps, avoiding u.
        let v = *clique.iter().find(|&&q| q != u).unwrap();
        let mut builder = ProtocolBuilder::new(g);
        builder.push(u, v)?;
        let members = builder.weights().positive_vertices();
        let view = RootedTreeView::over_members(g, v, &members)
            .map_err(|_| SynthesisError::Internal("sink does not reach all weight"))?;
        drain_view(&mut builder, &view)?;
        let outcome = finish(builder, Method::Diam2Girth3);
        debug_assert_eq!(outcome.final_support, 1);
        return Ok(outcome);
    }

    // Every clique vertex has a solo neighbor. Pick the sink v, the emptied
    // vertex u, and the receiver w.
    let (u, v, w) = (clique[0], clique[1], clique[2]);
    // Sanity: no outside vertex may see only solo neighbors of the clique
    // minus w, or it could not reach w in two steps.
    let solo_not_w: Vec<usize> =
        clique.iter().filter(|&&q| q != w).flat_map(|&q| solo(q)).collect();
    for z in 0..g.n() {
        let outside = !in_clique(z) && !g.neighbors(z).iter().any(|&x| in_clique(x));
        if outside && g.neighbors(z).iter().all(|&x| solo_not_w.contains(&x)) {
            return Err(SynthesisError::Internal("vertex cannot reach the clique in two steps"));
        }
    }

    let mut builder = ProtocolBuilder::new(g);
    for s in solo(v) {
        builder.push(s, v)?;
    }
    for s in solo(u) {
        builder.push(s, u)?;
        builder.push(u, v)?;
    }
    builder.push(u, w)?;
    for &q in &clique {
        if q == u || q == v || q == w {
            continue;
        }
        let s = solo(q)[0];
        builder.push(s, q)?;
    }

    // Ascending tree rooted at the sink: heavy clique vertices first, then
    // unit-weight vertices by how they reach the clique.
    let mut links: Vec<(usize, usize)> = Vec::new();
    let mut placed = vec![false; g.n()];
    placed[v] = true;
    let weights = builder.weights().clone();
    let mut unplaced: Vec<usize> =
        (0..g.n()).filter(|&x| x != v && weights.get(x) > 0).collect();
    // Clique vertices (weight 2) and direct neighbors of the sink.
    attach_all(&mut unplaced, &mut links, &mut placed, |x, _| {
        if g.has_edge(x, v) {
            Some(v)
        } else {
            None
        }
    });
    // Unit vertices adjacent to a weight-2 clique vertex.
    attach_all(&mut unplaced, &mut links, &mut placed, |x, placed| {
        clique
            .iter()
            .copied()
            .find(|&q| q != u && q != v && placed[q] && g.has_edge(x, q))
    });
    // Unit vertices adjacent to an already placed unit vertex.
    let placed_snapshot = placed.clone();
    attach_all(&mut unplaced, &mut links, &mut placed, |x, _| {
        (0..g.n()).find(|&p| placed_snapshot[p] && weights.get(p) == 1 && g.has_edge(x, p))
    });
    if !unplaced.is_empty() {
        return Err(SynthesisError::Internal("weight stranded outside the ascending tree"));
    }
    let view = RootedTreeView::from_parents(g, v, &links)
        .map_err(|_| SynthesisError::Internal("assembled links do not form a tree"))?;
    drain_view(&mut builder, &view)?;
    let outcome = finish(builder, Method::Diam2Girth3);
    debug_assert_eq!(outcome.final_support, 1);
    Ok(outcome)
}

fn girth4_protocol(g: &Graph) -> Result<SynthesisOutcome, SynthesisError> {
    let cycle = g.shortest_cycle().expect("girth-4 graph has a cycle");
    let (a0, a1, a2, a3) = (cycle[0], cycle[1], cycle[2], cycle[3]);
    let mut builder = ProtocolBuilder::new(g);
    builder.push(a0, a1)?;
    builder.push(a3, a2)?;
    let on_cycle = |v: usize| v == a0 || v == a1 || v == a2 || v == a3;
    let x_side: Vec<usize> =
        g.neighbors(a1).iter().copied().filter(|&v| !on_cycle(v)).collect();
    let y_side: Vec<usize> =
        g.neighbors(a2).iter().copied().filter(|&v| !on_cycle(v)).collect();
    let mut x_links: Vec<(usize, usize)> = x_side.iter().map(|&v| (v, a1)).collect();
    let mut y_links: Vec<(usize, usize)> = y_side.iter().map(|&v| (v, a2)).collect();
    for z in 0..g.n() {
        if on_cycle(z) || x_side.contains(&z) || y_side.contains(&z) {
            continue;
        }
        // Triangle-freeness forces a neighbor among the two stars.
        if let Some(&p) = g.neighbors(z).iter().find(|&&p| x_side.contains(&p)) {
            x_links.push((z, p));
        } else if let Some(&p) = g.neighbors(z).iter().find(|&&p| y_side.contains(&p)) {
            y_links.push((z, p));
        } else {
            return Err(SynthesisError::Internal("vertex sees neither collection star"));
        }
    }
    let x_tree = RootedTreeView::from_parents(g, a1, &x_links)
        .map_err(|_| SynthesisError::Internal("x-side links are not a tree"))?;
    drain_view(&mut builder, &x_tree)?;
    let y_tree = RootedTreeView::from_parents(g, a2, &y_links)
        .map_err(|_| SynthesisError::Internal("y-side links are not a tree"))?;
    drain_view(&mut builder, &y_tree)?;
    merge_adjacent_piles(&mut builder, a1, a2)?;
    let outcome = finish(builder, Method::Diam2Girth4);
    debug_assert_eq!(outcome.final_support, 1);
    Ok(outcome)
}

fn girth5_protocol(g: &Graph) -> Result<SynthesisOutcome, SynthesisError> {
    // Past the two exceptional graphs, diameter 2 with girth 5 forces
    // minimum degree at least 4.
    if g.min_degree() < 4 {
        return Err(SynthesisError::Internal("girth-5 diameter-2 graph needs minimum degree 4"));
    }
    let cycle = g.shortest_cycle().expect("girth-5 graph has a cycle");
    let (c0, c1, c2, c3, c4) = (cycle[0], cycle[1], cycle[2], cycle[3], cycle[4]);
    let on_cycle = |v: usize| cycle.contains(&v);
    let fringe = |c: usize| -> Vec<usize> {
        g.neighbors(c).iter().copied().filter(|&v| !on_cycle(v)).collect()
    };
    let (v_set, w_set, x_set, y_set, z_set) =
        (fringe(c0), fringe(c1), fringe(c2), fringe(c3), fringe(c4));

    let mut builder = ProtocolBuilder::new(g);
    // Two fringe chips make the sink heavy.
    builder.push(x_set[0], c2)?;
    builder.push(x_set[1], c2)?;
    // An edge between the w- and y-fringes exists because the y-fringe must
    // reach c1 in two steps.
    let mut bridge = None;
    'outer: for &wp in &w_set {
        for &yp in &y_set {
            if g.has_edge(wp, yp) {
                bridge = Some((wp, yp));
                break 'outer;
            }
        }
    }
    let (w_prime, y_prime) =
        bridge.ok_or(SynthesisError::Internal("no edge joins the two side fringes"))?;
    builder.push(w_prime, c1)?;
    builder.push(y_prime, c3)?;

    let mut links: Vec<(usize, usize)> = vec![(c1, c2), (c3, c2), (c0, c1), (c4, c3)];
    for &x in &x_set[2..] {
        links.push((x, c2));
    }
    for &w in &w_set {
        if w != w_prime {
            links.push((w, c1));
        }
    }
    for &y in &y_set {
        if y != y_prime {
            links.push((y, c3));
        }
    }
    for &v in &v_set {
        links.push((v, c0));
    }
    for &z in &z_set {
        links.push((z, c4));
    }
    let weights = builder.weights().clone();
    for n_vertex in 0..g.n() {
        if on_cycle(n_vertex) || g.neighbors(n_vertex).iter().any(|&p| on_cycle(p)) {
            continue;
        }
        // No cycle neighbors: girth keeps it off both used fringe vertices,
        // so a unit-weight side parent exists.
        let parent = g
            .neighbors(n_vertex)
            .iter()
            .copied()
            .find(|&p| weights.get(p) == 1 && (w_set.contains(&p) || y_set.contains(&p)))
            .ok_or(SynthesisError::Internal("vertex has no unit-weight side parent"))?;
        links.push((n_vertex, parent));
    }
    let view = RootedTreeView::from_parents(g, c2, &links)
        .map_err(|_| SynthesisError::Internal("assembled links do not form a tree"))?;
    drain_view(&mut builder, &view)?;
    let outcome = finish(builder, Method::Diam2Girth5);
    debug_assert_eq!(outcome.final_support, 1);
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::replay;
    use crate::generators;
    use crate::solver::unit_acquisition_number_default;

    fn check(g: &Graph, outcome: &SynthesisOutcome) {
        let end = replay(g, &outcome.protocol).expect("synthesized protocols replay");
        assert_eq!(end.support(), outcome.final_support);
    }

    #[test]
    fn level2_examples() {
        let c5 = generators::cycle(5).unwrap();
        let out = level2_protocol(&c5, 0).unwrap();
        check(&c5, &out);
        assert_eq!(out.final_support, 2);

        let p = generators::petersen();
        for root in 0..10 {
            let out = level2_protocol(&p, root).unwrap();
            check(&p, &out);
            assert_eq!(out.final_support, 2);
        }

        assert!(level2_protocol(&generators::path(7).unwrap(), 0).is_none());
        assert!(level2_protocol(&generators::path(7).unwrap(), 3).is_none());
        // Depth fits but no depth-2 edge: stars and C4.
        assert!(level2_protocol(&generators::cycle(4).unwrap(), 0).is_none());
    }

    #[test]
    fn radius2_examples() {
        let k7 = generators::complete(7).unwrap();
        let out = radius2_partition_protocol(&k7).unwrap();
        check(&k7, &out);
        assert_eq!(out.final_support, 1);

        let c5 = generators::cycle(5).unwrap();
        let out = radius2_partition_protocol(&c5).unwrap();
        check(&c5, &out);
        assert_eq!(out.final_support, 2);

        let p = generators::petersen();
        let out = radius2_partition_protocol(&p).unwrap();
        check(&p, &out);
        assert!(out.final_support <= 3);
    }

    #[test]
    fn radius2_respects_degree_bound() {
        for seed in 0..200u64 {
            let n = 3 + (seed % 8) as usize;
            let g = generators::random_graph(n, 0.45, 40_000 + seed).unwrap();
            if !g.is_connected() {
                continue;
            }
            let out = radius2_partition_protocol(&g).unwrap();
            check(&g, &out);
            let bound = (g.n() - 1) / g.min_degree();
            assert!(
                out.final_support <= bound,
                "support {} exceeds bound {} (seed {})",
                out.final_support,
                bound,
                seed
            );
        }
    }

    #[test]
    fn matching_partition_examples() {
        let p4 = generators::path(4).unwrap();
        let out = matching_partition_protocol(&p4).unwrap();
        check(&p4, &out);
        assert_eq!(out.final_support, 1);

        let g45 = generators::chained_double_stars(4, 5).unwrap().graph;
        let out = matching_partition_protocol(&g45).unwrap();
        check(&g45, &out);
        assert_eq!(out.final_support, 4);

        let p = generators::petersen();
        let out = matching_partition_protocol(&p).unwrap();
        check(&p, &out);
        assert!(out.final_support <= 3);
    }

    #[test]
    fn diam2_fixed_cases() {
        let c4 = generators::cycle(4).unwrap();
        let out = diam2_protocol(&c4).unwrap();
        check(&c4, &out);
        assert_eq!((out.method, out.final_support), (Method::Diam2Girth4, 1));

        let c5 = generators::cycle(5).unwrap();
        let out = diam2_protocol(&c5).unwrap();
        check(&c5, &out);
        assert_eq!((out.method, out.final_support), (Method::SpecialC5, 2));

        let p = generators::petersen();
        let out = diam2_protocol(&p).unwrap();
        check(&p, &out);
        assert_eq!((out.method, out.final_support), (Method::SpecialPetersen, 2));

        let star = generators::star(7);
        let out = diam2_protocol(&star).unwrap();
        check(&star, &out);
        assert_eq!((out.method, out.final_support), (Method::Star, 1));

        // K_{3,3} has diameter 2 and girth 4.
        let k33 = Graph::new(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
            .unwrap();
        let out = diam2_protocol(&k33).unwrap();
        check(&k33, &out);
        assert_eq!((out.method, out.final_support), (Method::Diam2Girth4, 1));

        // Diamond: triangle route where some clique vertex has no solo
        // neighbor.
        let diamond = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let out = diam2_protocol(&diamond).unwrap();
        check(&diamond, &out);
        assert_eq!((out.method, out.final_support), (Method::Diam2Girth3, 1));

        assert!(matches!(
            diam2_protocol(&generators::path(5).unwrap()),
            Err(SynthesisError::NotDiameter2 { diameter: Some(4) })
        ));
        assert!(matches!(
            diam2_protocol(&generators::complete(4).unwrap()),
            Err(SynthesisError::NotDiameter2 { diameter: Some(1) })
        ));
    }

    #[test]
    fn diam2_girth3_with_all_solo_neighbors() {
        // Two size-4 cliques joined by a perfect matching: every vertex of
        // the first clique has exactly one private neighbor in the second,
        // so the long triangle branch runs.
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
                edges.push((u + 4, v + 4));
            }
            edges.push((u, u + 4));
        }
        let g = Graph::new(8, &edges).unwrap();
        assert_eq!(g.diameter(), Some(2));
        let out = diam2_protocol(&g).unwrap();
        check(&g, &out);
        assert_eq!((out.method, out.final_support), (Method::Diam2Girth3, 1));
        assert_eq!(unit_acquisition_number_default(&g).unwrap().value(), Some(1));
    }

    #[test]
    fn diam2_relabeled_petersen() {
        // The special case must recognize any labeling of the graph.
        let p = generators::petersen();
        let perm: Vec<usize> = vec![7, 3, 9, 0, 5, 2, 8, 1, 6, 4];
        let edges: Vec<(usize, usize)> =
            p.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let q = Graph::new(10, &edges).unwrap();
        let out = diam2_protocol(&q).unwrap();
        check(&q, &out);
        assert_eq!((out.method, out.final_support), (Method::SpecialPetersen, 2));
    }

    #[test]
    fn diam2_girth5_on_moore_graph_of_degree_seven() {
        // The 50-vertex Moore graph of degree 7 (girth 5, diameter 2)
        // exercises the deep girth-5 branch; the protocol is a certificate
        // that its unit acquisition number is 1.
        let g = hoffman_singleton();
        assert_eq!(g.n(), 50);
        assert_eq!(g.girth(), Some(5));
        assert_eq!(g.diameter(), Some(2));
        assert!((0..50).all(|v| g.degree(v) == 7));
        let out = diam2_protocol(&g).unwrap();
        check(&g, &out);
        assert_eq!((out.method, out.final_support), (Method::Diam2Girth5, 1));
    }

    /// Robertson's pentagon/pentagram construction: pentagons P_0..P_4,
    /// pentagrams Q_0..Q_4, and vertex j of P_h adjacent to vertex
    /// (h*i + j) mod 5 of Q_i.
    fn hoffman_singleton() -> Graph {
        let p = |h: usize, j: usize| 5 * h + j;
        let q = |i: usize, j: usize| 25 + 5 * i + j;
        let mut edges = Vec::new();
        for h in 0..5 {
            for j in 0..5 {
                edges.push((p(h, j), p(h, (j + 1) % 5)));
                edges.push((q(h, j), q(h, (j + 2) % 5)));
            }
        }
        for h in 0..5 {
            for i in 0..5 {
                for j in 0..5 {
                    edges.push((p(h, j), q(i, (h * i + j) % 5)));
                }
            }
        }
        edges.iter_mut().for_each(|e| {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        });
        edges.sort_unstable();
        edges.dedup();
        Graph::new(50, &edges).unwrap()
    }

    #[test]
    fn diam2_random_girth3_matches_solver() {
        let mut solved = 0;
        for seed in 0..40u64 {
            let n = 6 + (seed % 6) as usize;
            let Ok(g) = generators::random_diameter2_graph(n, 0.45, 90_000 + seed, 5_000) else {
                continue;
            };
            let out = diam2_protocol(&g).unwrap();
            check(&g, &out);
            assert_eq!(out.final_support, 1, "seed {}", seed);
            assert_eq!(unit_acquisition_number_default(&g).unwrap().value(), Some(1));
            solved += 1;
        }
        assert!(solved >= 20, "rejection sampling starved the corpus");
    }

    #[test]
    fn synthesizers_never_beat_the_exact_value() {
        for seed in 0..120u64 {
            let n = 4 + (seed % 6) as usize;
            let g = generators::random_graph(n, 0.5, 70_000 + seed).unwrap();
            if !g.is_connected() {
                continue;
            }
            let exact = unit_acquisition_number_default(&g).unwrap().value().unwrap();
            let mut bounds = vec![
                radius2_partition_protocol(&g).unwrap().final_support,
                matching_partition_protocol(&g).unwrap().final_support,
            ];
            for root in 0..g.n() {
                if let Some(out) = level2_protocol(&g, root) {
                    check(&g, &out);
                    bounds.push(out.final_support);
                }
            }
            if g.diameter() == Some(2) {
                bounds.push(diam2_protocol(&g).unwrap().final_support);
            }
            for b in bounds {
                assert!(b >= exact, "synthesized support {} below exact {} (seed {})", b, exact, seed);
            }
        }
    }
}
