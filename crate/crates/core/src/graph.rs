//! Simple undirected graphs with dense integer vertex ids, weight
//! configurations, and rooted tree views over vertex subsets.
//!
//! All types are immutable values after construction and safe to share
//! across threads.

use std::error::Error;
use std::fmt;

/// A simple undirected graph on vertices `0..n`.
///
/// No self-loops, no parallel edges. Edges are kept sorted as `(u, v)` with
/// `u < v`, and neighbor lists are sorted ascending, so every derived
/// artifact (serialization, hashes, witnesses) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    VertexOutOfRange { vertex: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match *self {
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {}", v),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {} {}", u, v),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {} out of range (n = {})", vertex, n)
            }
        }
    }
}

impl Error for GraphError {}

/// Error from parsing the line-oriented edge-list format, carrying the
/// 1-based line number of the offending line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    BadToken(String),
    TooManyTokens,
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::BadToken(t) => write!(f, "line {}: bad token {:?}", self.line, t),
            ParseErrorKind::TooManyTokens => {
                write!(f, "line {}: expected \"u v\" or a single vertex id", self.line)
            }
            ParseErrorKind::SelfLoop(v) => write!(f, "line {}: self-loop at vertex {}", self.line, v),
            ParseErrorKind::DuplicateEdge(u, v) => {
                write!(f, "line {}: duplicate edge {} {}", self.line, u, v)
            }
        }
    }
}

impl Error for ParseError {}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list, in any order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    /// Parses the line-oriented edge-list format.
    ///
    /// Each line is either `u v` (an edge) or a single id `u` (declares an
    /// otherwise isolated vertex, so that single-vertex graphs are
    /// expressible). Blank lines and lines starting with `#` are ignored.
    /// The vertex count is `1 + max id`, so parsing is independent of line
    /// order.
    pub fn from_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut max_id: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut ids = [0usize; 2];
            let mut count = 0;
            for tok in line.split_whitespace() {
                if count == 2 {
                    return Err(ParseError { line: line_no, kind: ParseErrorKind::TooManyTokens });
                }
                ids[count] = tok.parse::<usize>().map_err(|_| ParseError {
                    line: line_no,
                    kind: ParseErrorKind::BadToken(tok.to_string()),
                })?;
                count += 1;
            }
            match count {
                1 => max_id = Some(max_id.map_or(ids[0], |m: usize| m.max(ids[0]))),
                2 => {
                    let (u, v) = (ids[0], ids[1]);
                    if u == v {
                        return Err(ParseError { line: line_no, kind: ParseErrorKind::SelfLoop(u) });
                    }
                    let e = (u.min(v), u.max(v));
                    if edges.contains(&e) {
                        return Err(ParseError {
                            line: line_no,
                            kind: ParseErrorKind::DuplicateEdge(e.0, e.1),
                        });
                    }
                    edges.push(e);
                    max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
                }
                _ => unreachable!("blank lines are skipped above"),
            }
        }
        let n = max_id.map_or(0, |m| m + 1);
        // Duplicates and self-loops were already rejected with line numbers.
        Ok(Graph::new(n, &edges).expect("validated during parse"))
    }

    /// Serializes back to the edge-list format; `from_edge_list` of the
    /// output reproduces the graph byte-for-byte deterministically.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let mut mentioned = vec![false; self.n];
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
            mentioned[u] = true;
            mentioned[v] = true;
        }
        for v in 0..self.n {
            if !mentioned[v] {
                out.push_str(&format!("{}\n", v));
            }
        }
        out
    }

    /// DOT rendering for figures; byte-deterministic for a given graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {};\n", v));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {} -- {};\n", u, v));
        }
        out.push_str("}\n");
        out
    }

    /// Stable FNV-1a digest of the vertex count and sorted edge list,
    /// rendered as 16 hex digits. Used to tie protocols to their graph.
    pub fn hash_hex(&self) -> String {
        const OFFSET: u64 = 0xcbf29ce484222325;
        const PRIME: u64 = 0x100000001b3;
        let mut h = OFFSET;
        let mut eat = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(PRIME);
            }
        };
        eat(self.n as u64);
        for &(u, v) in &self.edges {
            eat(u as u64);
            eat(v as u64);
        }
        format!("{:016x}", h)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Returns a new graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if self.has_edge(u, v) || self.has_edge(v, u) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// Returns a new graph with one edge removed; vertex set is unchanged.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let e = (u.min(v), u.max(v));
        let edges: Vec<_> = self.edges.iter().copied().filter(|&x| x != e).collect();
        Graph::new(self.n, &edges).expect("removing an edge keeps the graph valid")
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        self.bfs_distances_avoiding(src, &[])
    }

    /// BFS distances from `src` in the graph with `removed` vertices deleted.
    pub fn bfs_distances_avoiding(&self, src: usize, removed: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if removed.contains(&src) {
            return dist;
        }
        let mut queue = std::collections::VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() && !removed.contains(&w) {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced by `vertices` (must be sorted, distinct); returns the
    /// subgraph on ids `0..vertices.len()` together with the id map back to
    /// the original vertices.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        let g = Graph::new(vertices.len(), &edges).expect("induced subgraph is valid");
        (g, vertices.to_vec())
    }

    /// Max over reachable vertices of the BFS distance; `None` when some
    /// vertex is unreachable from `v`.
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let dist = self.bfs_distances(v);
        let mut ecc = 0;
        for d in dist {
            ecc = ecc.max(d?);
        }
        Some(ecc)
    }

    /// Longest shortest path; `None` means infinite (disconnected).
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let mut diam = 0;
        for v in 0..self.n {
            diam = diam.max(self.eccentricity(v)?);
        }
        Some(diam)
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// For each root, BFS records tree parents; every non-tree edge `{x, y}`
    /// closes a walk of length `d(r,x) + d(r,y) + 1` that contains a cycle no
    /// longer than itself, and the minimum over all roots is attained with
    /// the root on a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for r in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[r] = 0;
            queue.push_back(r);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// A shortest cycle as a vertex sequence, lexicographically smallest in
    /// the canonical orientation (starts at its smallest vertex, second
    /// element smaller than the last). `None` for forests.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let g = self.girth()?;
        for start in 0..self.n {
            let mut path = vec![start];
            let mut used = vec![false; self.n];
            used[start] = true;
            if let Some(cycle) = self.cycle_dfs(start, g, &mut path, &mut used) {
                return Some(cycle);
            }
        }
        None
    }

    fn cycle_dfs(
        &self,
        start: usize,
        target: usize,
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> Option<Vec<usize>> {
        if path.len() == target {
            let last = *path.last().unwrap();
            // Close the cycle; require second < last so each cycle is
            // produced in exactly one orientation.
            if self.has_edge(last, start) && path[1] < last {
                return Some(path.clone());
            }
            return None;
        }
        let cur = *path.last().unwrap();
        for &w in &self.adj[cur] {
            if w <= start || used[w] {
                continue;
            }
            path.push(w);
            used[w] = true;
            if let Some(c) = self.cycle_dfs(start, target, path, used) {
                return Some(c);
            }
            used[w] = false;
            path.pop();
        }
        None
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// A maximum clique, found by branch and bound; deterministic, preferring
    /// smaller vertex ids. Intended for desk-scale graphs.
    pub fn max_clique(&self) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        let candidates: Vec<usize> = (0..self.n).collect();
        self.clique_extend(&mut current, &candidates, &mut best);
        best
    }

    fn clique_extend(&self, current: &mut Vec<usize>, candidates: &[usize], best: &mut Vec<usize>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + (candidates.len() - i) <= best.len() {
                return;
            }
            let next: Vec<usize> =
                candidates[i + 1..].iter().copied().filter(|&w| self.has_edge(v, w)).collect();
            current.push(v);
            self.clique_extend(current, &next, best);
            current.pop();
        }
    }

    /// Isomorphism test by backtracking on a degree-compatible vertex order.
    /// Desk scale only.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut deg_a: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut deg_b: Vec<usize> = (0..self.n).map(|v| other.degree(v)).collect();
        deg_a.sort_unstable();
        deg_b.sort_unstable();
        if deg_a != deg_b {
            return false;
        }
        // Map vertices in descending-degree order; high degree first fails fast.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.iso_extend(other, &order, 0, &mut image, &mut used)
    }

    fn iso_extend(
        &self,
        other: &Graph,
        order: &[usize],
        k: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        'cand: for w in 0..other.n {
            if used[w] || other.degree(w) != self.degree(v) {
                continue;
            }
            for &p in &order[..k] {
                if self.has_edge(v, p) != other.has_edge(w, image[p]) {
                    continue 'cand;
                }
            }
            image[v] = w;
            used[w] = true;
            if self.iso_extend(other, order, k + 1, image, used) {
                return true;
            }
            used[w] = false;
            image[v] = usize::MAX;
        }
        false
    }

    /// The isomorphism as a vertex map `self -> other`, if one exists.
    pub fn isomorphism_to(&self, other: &Graph) -> Option<Vec<usize>> {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return None;
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        if self.iso_extend(other, &order, 0, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }
}

/// Per-vertex nonnegative integer weights; the state a protocol acts on.
/// Total weight is invariant under legal moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightConfig {
    pub(crate) weights: Vec<u32>,
}

impl WeightConfig {
    pub fn all_ones(n: usize) -> WeightConfig {
        WeightConfig { weights: vec![1; n] }
    }

    pub fn from_weights(weights: Vec<u32>) -> WeightConfig {
        WeightConfig { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.weights
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().map(|&w| u64::from(w)).sum()
    }

    /// Number of vertices with positive weight.
    pub fn support(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0).count()
    }

    pub fn positive_vertices(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&v| self.weights[v] > 0).collect()
    }

    /// Sum of squared weights. Strictly increases by at least 2 on every
    /// legal move, which makes the configuration space acyclic.
    pub fn potential(&self) -> u64 {
        self.weights.iter().map(|&w| u64::from(w) * u64::from(w)).sum()
    }
}

impl std::ops::Index<usize> for WeightConfig {
    type Output = u32;
    fn index(&self, v: usize) -> &u32 {
        &self.weights[v]
    }
}

/// A rooted tree over a subset of a graph's vertices: parent links and
/// depths for members, `None` elsewhere. The root is a member with depth 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTreeView {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViewError {
    RootOutOfRange(usize),
    NotAMember(usize),
    MissingEdge(usize, usize),
    NotSpanning { missing: usize },
    BadDepth(usize),
}

impl fmt::Display for ViewError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match *self {
            ViewError::RootOutOfRange(v) => write!(f, "root {} out of range", v),
            ViewError::NotAMember(v) => write!(f, "vertex {} is not in the view", v),
            ViewError::MissingEdge(u, v) => {
                write!(f, "parent link {} -> {} is not an edge of the graph", u, v)
            }
            ViewError::NotSpanning { missing } => {
                write!(f, "view does not cover positive-weight vertex {}", missing)
            }
            ViewError::BadDepth(v) => write!(f, "depth of vertex {} is inconsistent", v),
        }
    }
}

impl Error for ViewError {}

impl RootedTreeView {
    /// BFS tree over the whole graph; fails if the graph is disconnected.
    pub fn spanning(g: &Graph, root: usize) -> Result<RootedTreeView, ViewError> {
        let members: Vec<usize> = (0..g.n()).collect();
        RootedTreeView::over_members(g, root, &members)
    }

    /// BFS tree over exactly the positive-weight vertices of `w`; fails if
    /// they do not induce a connected subgraph containing `root`.
    pub fn over_support(g: &Graph, root: usize, w: &WeightConfig) -> Result<RootedTreeView, ViewError> {
        RootedTreeView::over_members(g, root, &w.positive_vertices())
    }

    /// BFS tree over `members` (need not be sorted); all members must be
    /// reachable from `root` inside the member set.
    pub fn over_members(g: &Graph, root: usize, members: &[usize]) -> Result<RootedTreeView, ViewError> {
        if root >= g.n() {
            return Err(ViewError::RootOutOfRange(root));
        }
        let mut is_member = vec![false; g.n()];
        for &v in members {
            is_member[v] = true;
        }
        if !is_member[root] {
            return Err(ViewError::NotAMember(root));
        }
        let mut parent = vec![None; g.n()];
        let mut depth = vec![None; g.n()];
        depth[root] = Some(0);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if is_member[w] && depth[w].is_none() {
                    depth[w] = Some(depth[u].unwrap() + 1);
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        for &v in members {
            if depth[v].is_none() {
                return Err(ViewError::NotSpanning { missing: v });
            }
        }
        Ok(RootedTreeView { root, parent, depth })
    }

    /// Builds a view from explicit `(child, parent)` links.
    pub fn from_parents(
        g: &Graph,
        root: usize,
        links: &[(usize, usize)],
    ) -> Result<RootedTreeView, ViewError> {
        if root >= g.n() {
            return Err(ViewError::RootOutOfRange(root));
        }
        let mut parent = vec![None; g.n()];
        let mut depth = vec![None; g.n()];
        depth[root] = Some(0);
        for &(c, p) in links {
            if c >= g.n() || p >= g.n() {
                return Err(ViewError::RootOutOfRange(c.max(p)));
            }
            if !g.has_edge(c, p) {
                return Err(ViewError::MissingEdge(c, p));
            }
            parent[c] = Some(p);
        }
        // Resolve depths; a cycle or a parent outside the view surfaces as
        // an unresolvable vertex.
        let mut changed = true;
        while changed {
            changed = false;
            for &(c, p) in links {
                if depth[c].is_none() {
                    if let Some(dp) = depth[p] {
                        depth[c] = Some(dp + 1);
                        changed = true;
                    }
                }
            }
        }
        for &(c, _) in links {
            if depth[c].is_none() {
                return Err(ViewError::BadDepth(c));
            }
        }
        Ok(RootedTreeView { root, parent, depth })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn contains(&self, v: usize) -> bool {
        self.depth[v].is_some()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> Option<usize> {
        self.depth[v]
    }

    /// Members sorted by id.
    pub fn members(&self) -> Vec<usize> {
        (0..self.depth.len()).filter(|&v| self.depth[v].is_some()).collect()
    }

    /// Members of the view whose parent is `v`.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.parent.len()).filter(|&c| self.parent[c] == Some(v)).collect()
    }

    /// Checks the view against the graph: parent links are edges, depths are
    /// parent depth plus one, and the root is the only parentless member.
    pub fn validate(&self, g: &Graph) -> Result<(), ViewError> {
        if self.root >= g.n() || self.depth.len() != g.n() {
            return Err(ViewError::RootOutOfRange(self.root));
        }
        if self.depth[self.root] != Some(0) {
            return Err(ViewError::BadDepth(self.root));
        }
        for v in 0..g.n() {
            match (self.depth[v], self.parent[v]) {
                (None, None) => {}
                (None, Some(_)) => return Err(ViewError::NotAMember(v)),
                (Some(0), None) if v == self.root => {}
                (Some(_), None) => return Err(ViewError::BadDepth(v)),
                (Some(d), Some(p)) => {
                    if !g.has_edge(v, p) {
                        return Err(ViewError::MissingEdge(v, p));
                    }
                    if self.depth[p].map(|dp| dp + 1) != Some(d) {
                        return Err(ViewError::BadDepth(v));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Whether the weighted view is an ascending tree: every leaf weighs at most
/// its parent, and every non-root internal vertex weighs strictly less than
/// its parent. Leaf/internal status is taken within the view.
pub fn is_ascending_tree(g: &Graph, view: &RootedTreeView, w: &WeightConfig) -> Result<bool, ViewError> {
    view.validate(g)?;
    let members = view.members();
    let mut child_count = vec![0usize; g.n()];
    for &v in &members {
        if let Some(p) = view.parent(v) {
            child_count[p] += 1;
        }
    }
    for &v in &members {
        let Some(p) = view.parent(v) else { continue };
        let wv = w.get(v);
        let wp = w.get(p);
        let internal = child_count[v] > 0;
        if internal {
            if wv >= wp {
                return Ok(false);
            }
        } else if wv > wp {
            return Ok(false);
        }
    }
    Ok(true)
}
