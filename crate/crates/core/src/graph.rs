//! Simple graphs: diagram graphs, induced matchings, blocks, and closed
//! labelings with their initial-ideal graphs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::CellDiagram;
use crate::{Error, Result};

/// Graphs are stored as adjacency bitmasks.
pub const MAX_VERTICES: usize = 64;
/// Induced-matching search keeps edge sets in a `u128`.
pub const MAX_MATCHING_EDGES: usize = 128;
/// Exhaustive closed-labeling search is factorial in the vertex count.
pub const MAX_CLOSED_SEARCH: usize = 9;

/// A vertex label. Row and column vertices of a diagram graph carry their
/// side of the bipartition in the label itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Int(u32),
    X(u32),
    Y(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Vertex {
    pub fn side(self) -> Option<Side> {
        match self {
            Vertex::Int(_) => None,
            Vertex::X(_) => Some(Side::X),
            Vertex::Y(_) => Some(Side::Y),
        }
    }

    /// The numeric part of the label.
    pub fn index(self) -> u32 {
        match self {
            Vertex::Int(k) | Vertex::X(k) | Vertex::Y(k) => k,
        }
    }

    fn shifted(self, by: u32) -> Vertex {
        match self {
            Vertex::Int(k) => Vertex::Int(k + by),
            Vertex::X(k) => Vertex::X(k + by),
            Vertex::Y(k) => Vertex::Y(k + by),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Int(k) => write!(f, "{k}"),
            Vertex::X(k) => write!(f, "x{k}"),
            Vertex::Y(k) => write!(f, "y{k}"),
        }
    }
}

/// Accepts `7`, `x3`, `y3` (case-insensitive prefix).
impl core::str::FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadVertex(String::from(s));
        let (make, digits): (fn(u32) -> Vertex, &str) = match s.as_bytes().first() {
            Some(b'x' | b'X') => (Vertex::X, &s[1..]),
            Some(b'y' | b'Y') => (Vertex::Y, &s[1..]),
            _ => (Vertex::Int, s),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        digits.parse().map(make).map_err(|_| bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: Vec<Vertex>,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// Builds a graph on `vertices` (kept in the given order).
    ///
    /// Rejects loops, repeated edges, unknown endpoints, and edges joining
    /// two vertices on the same side of the bipartition.
    pub fn new(vertices: Vec<Vertex>, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                got: vertices.len(),
                limit: MAX_VERTICES,
            });
        }
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(*v) {
                return Err(Error::DuplicateLabel(format!("{v}")));
            }
        }
        let mut g = SimpleGraph {
            adj: alloc::vec![0; vertices.len()],
            vertices,
        };
        for &(a, b) in edges {
            let (Some(i), Some(j)) = (g.index_of(a), g.index_of(b)) else {
                let missing = if g.index_of(a).is_none() { a } else { b };
                return Err(Error::UnknownLabel(format!("{missing}")));
            };
            if i == j {
                return Err(Error::InvalidEdge(format!("loop at {a}")));
            }
            if g.adjacent(i, j) {
                return Err(Error::InvalidEdge(format!("{a}-{b} listed twice")));
            }
            if let (Some(sa), Some(sb)) = (a.side(), b.side()) {
                if sa == sb {
                    return Err(Error::InvalidEdge(format!("{a}-{b} does not cross the bipartition")));
                }
            }
            g.adj[i] |= 1 << j;
            g.adj[j] |= 1 << i;
        }
        Ok(g)
    }

    /// Graph whose vertex set is exactly the endpoints of `edges`, sorted.
    pub fn from_edges(edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let vertices: BTreeSet<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        Self::new(vertices.into_iter().collect(), edges)
    }

    /// Convenience constructor for integer-labeled graphs.
    pub fn from_int_edges(edges: &[(u32, u32)]) -> Result<Self> {
        let edges: Vec<_> = edges.iter().map(|&(a, b)| (Vertex::Int(a), Vertex::Int(b))).collect();
        Self::from_edges(&edges)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    /// Neighborhood of the vertex at index `i`, as a bitmask over indices.
    pub fn neighbors(&self, i: usize) -> u64 {
        self.adj[i]
    }

    /// Bitmask of all vertex indices.
    pub fn full_mask(&self) -> u64 {
        low_bits(self.vertices.len())
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            let mut up = self.adj[i] & !low_bits(i + 1);
            while up != 0 {
                let j = up.trailing_zeros() as usize;
                up &= up - 1;
                out.push((i, j));
            }
        }
        out
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.edge_indices()
            .into_iter()
            .map(|(i, j)| (self.vertices[i], self.vertices[j]))
            .collect()
    }

    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<SimpleGraph> {
        let mut mask = 0u64;
        for &v in keep {
            let i = self.index_of(v).ok_or_else(|| Error::UnknownLabel(format!("{v}")))?;
            mask |= 1 << i;
        }
        Ok(self.induced_by_mask(mask))
    }

    /// Induced subgraph on the vertex indices in `mask`, keeping vertex order.
    pub fn induced_by_mask(&self, mask: u64) -> SimpleGraph {
        let kept: Vec<usize> = (0..self.vertices.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let adj = kept
            .iter()
            .map(|&i| {
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.adjacent(i, j))
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        SimpleGraph {
            vertices: kept.iter().map(|&i| self.vertices[i]).collect(),
            adj,
        }
    }

    /// Union of two graphs on disjoint label sets.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices);
        let mut edges = self.edges();
        edges.extend(other.edges());
        SimpleGraph::new(vertices, &edges)
    }

    /// Adds `by` to the numeric part of every label.
    pub fn shift_labels(&self, by: u32) -> SimpleGraph {
        SimpleGraph {
            vertices: self.vertices.iter().map(|v| v.shifted(by)).collect(),
            adj: self.adj.clone(),
        }
    }

    /// Connected components as index masks, ordered by smallest index.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.full_mask();
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = 1u64 << left.trailing_zeros();
            loop {
                let grown = comp | comp_neighbors(&self.adj, comp);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, b)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn comp_neighbors(adj: &[u64], mask: u64) -> u64 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= adj[i];
    }
    out
}

/// Bipartite graph with an edge `x_i – y_j` per cell `(i, j)`. Only rows and
/// columns that contain a cell become vertices.
pub fn graph_of_diagram(d: &CellDiagram) -> SimpleGraph {
    let cells = d.cells();
    let rows: BTreeSet<u32> = cells.iter().map(|c| c.0).collect();
    let cols: BTreeSet<u32> = cells.iter().map(|c| c.1).collect();
    let vertices: Vec<Vertex> = rows
        .iter()
        .map(|&r| Vertex::X(r))
        .chain(cols.iter().map(|&c| Vertex::Y(c)))
        .collect();
    let edges: Vec<_> = cells.iter().map(|&(r, c)| (Vertex::X(r), Vertex::Y(c))).collect();
    SimpleGraph::new(vertices, &edges).expect("diagram graphs are simple and bipartite")
}

type IndexEdges = Vec<(usize, usize)>;

/// Edges plus, per edge, the set of edges it cannot share an induced
/// matching with (itself included).
fn edge_conflicts(g: &SimpleGraph) -> Result<(IndexEdges, Vec<u128>)> {
    let edges = g.edge_indices();
    if edges.len() > MAX_MATCHING_EDGES {
        return Err(Error::TooLarge {
            what: "edge set",
            got: edges.len(),
            limit: MAX_MATCHING_EDGES,
        });
    }
    let conflicts = edges
        .iter()
        .map(|&(u, v)| {
            let closed = g.adj[u] | g.adj[v] | 1 << u | 1 << v;
            edges
                .iter()
                .enumerate()
                .filter(|&(_, &(a, b))| closed >> a & 1 == 1 || closed >> b & 1 == 1)
                .fold(0u128, |m, (f, _)| m | 1 << f)
        })
        .collect();
    Ok((edges, conflicts))
}

fn all_edges(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Size of a largest induced matching, by branch and bound over edges.
pub fn induced_matching_number(g: &SimpleGraph) -> Result<usize> {
    fn search(cand: u128, size: usize, conflicts: &[u128], best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = size;
            return;
        }
        let e = cand.trailing_zeros() as usize;
        search(cand & !conflicts[e], size + 1, conflicts, best);
        search(cand & !(1 << e), size, conflicts, best);
    }
    let (edges, conflicts) = edge_conflicts(g)?;
    let mut best = 0;
    search(all_edges(edges.len()), 0, &conflicts, &mut best);
    Ok(best)
}

/// Number of induced matchings of maximum size.
pub fn count_max_induced_matchings(g: &SimpleGraph) -> Result<u64> {
    fn count(cand: u128, need: usize, conflicts: &[u128]) -> u64 {
        if need == 0 {
            return 1;
        }
        if (cand.count_ones() as usize) < need {
            return 0;
        }
        let e = cand.trailing_zeros() as usize;
        count(cand & !conflicts[e], need - 1, conflicts) + count(cand & !(1 << e), need, conflicts)
    }
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let nu = induced_matching_number(g)?;
    let (edges, conflicts) = edge_conflicts(g)?;
    Ok(count(all_edges(edges.len()), nu, &conflicts))
}

struct BlockSearch<'a> {
    g: &'a SimpleGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    cut: u64,
    blocks: Vec<Vec<(usize, usize)>>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        let mut nbrs = self.g.adj[u];
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if self.disc[v] == 0 {
                children += 1;
                self.stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() {
                        self.cut |= 1 << u;
                    }
                    let mut block = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cut |= 1 << u;
        }
    }
}

fn block_search(g: &SimpleGraph) -> BlockSearch<'_> {
    let n = g.vertex_count();
    let mut s = BlockSearch {
        g,
        disc: alloc::vec![0; n],
        low: alloc::vec![0; n],
        time: 0,
        stack: Vec::new(),
        cut: 0,
        blocks: Vec::new(),
    };
    for u in 0..n {
        if s.disc[u] == 0 {
            s.visit(u, None);
        }
    }
    s
}

/// Articulation points, in vertex order.
pub fn cut_vertices(g: &SimpleGraph) -> Vec<Vertex> {
    let cut = block_search(g).cut;
    (0..g.vertex_count())
        .filter(|&i| cut >> i & 1 == 1)
        .map(|i| g.vertices[i])
        .collect()
}

/// Maximal subgraphs without cut vertices (bridges count as blocks), each
/// keeping the original labels, ordered by their smallest vertex index.
pub fn blocks(g: &SimpleGraph) -> Result<Vec<SimpleGraph>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() == 1 {
        return Ok(alloc::vec![g.clone()]);
    }
    let search = block_search(g);
    let mut out: Vec<(u64, SimpleGraph)> = search
        .blocks
        .iter()
        .map(|edges| {
            let mask = edges.iter().fold(0u64, |m, &(a, b)| m | 1 << a | 1 << b);
            (mask, g.induced_by_mask(mask))
        })
        .collect();
    out.sort_by_key(|(mask, _)| (mask.trailing_zeros(), *mask));
    Ok(out.into_iter().map(|(_, b)| b).collect())
}

/// Positions (0-based) of each vertex index under `labeling`.
fn positions(g: &SimpleGraph, labeling: &[Vertex]) -> Result<Vec<usize>> {
    if labeling.len() != g.vertex_count() {
        return Err(Error::InvalidLabeling);
    }
    let mut pos = alloc::vec![usize::MAX; g.vertex_count()];
    for (p, &v) in labeling.iter().enumerate() {
        let i = g.index_of(v).ok_or(Error::InvalidLabeling)?;
        if pos[i] != usize::MAX {
            return Err(Error::InvalidLabeling);
        }
        pos[i] = p;
    }
    Ok(pos)
}

/// Adjacency re-indexed so that index `p` is the vertex at position `p` of
/// the labeling.
fn relabeled_adjacency(g: &SimpleGraph, labeling: &[Vertex]) -> Result<Vec<u64>> {
    let pos = positions(g, labeling)?;
    Ok(labeling
        .iter()
        .map(|&v| {
            let i = g.index_of(v).expect("checked by positions");
            (0..g.vertex_count())
                .filter(|&j| g.adjacent(i, j))
                .fold(0u64, |m, j| m | 1 << pos[j])
        })
        .collect())
}

fn is_clique(adj: &[u64], mask: u64) -> bool {
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        if mask & !(1 << i) & !adj[i] != 0 {
            return false;
        }
    }
    true
}

fn closed_adjacency(adj: &[u64]) -> bool {
    (0..adj.len()).all(|i| {
        let above = adj[i] & !low_bits(i + 1);
        let below = adj[i] & low_bits(i);
        is_clique(adj, above) && is_clique(adj, below)
    })
}

/// Whether the vertex order `labeling` (first entry gets label 1) is a
/// closed labeling: every upper and every lower neighborhood is a clique.
pub fn is_closed_labeling(g: &SimpleGraph, labeling: &[Vertex]) -> Result<bool> {
    Ok(closed_adjacency(&relabeled_adjacency(g, labeling)?))
}

/// Whether every upper and lower neighborhood under `labeling` is a run of
/// consecutive labels.
pub fn neighborhoods_are_intervals(g: &SimpleGraph, labeling: &[Vertex]) -> Result<bool> {
    let adj = relabeled_adjacency(g, labeling)?;
    let run = |m: u64| {
        let x = m.checked_shr(m.trailing_zeros()).unwrap_or(0);
        x & x.wrapping_add(1) == 0
    };
    Ok((0..adj.len()).all(|i| run(adj[i] & !low_bits(i + 1)) && run(adj[i] & low_bits(i))))
}

/// Searches all vertex orders, in lexicographic order of the vertex list,
/// for a closed labeling. Partial orders are pruned as soon as a triple
/// among the placed vertices violates the condition, which does not change
/// which labeling is found first.
pub fn find_closed_labeling(g: &SimpleGraph) -> Result<Option<Vec<Vertex>>> {
    let n = g.vertex_count();
    if n > MAX_CLOSED_SEARCH {
        return Err(Error::TooLarge {
            what: "closed-labeling search",
            got: n,
            limit: MAX_CLOSED_SEARCH,
        });
    }
    fn extend(g: &SimpleGraph, order: &mut Vec<usize>, used: u64) -> bool {
        let n = g.vertex_count();
        if order.len() == n {
            return true;
        }
        for c in 0..n {
            if used >> c & 1 == 1 {
                continue;
            }
            // every triple a < b < c must satisfy both one-sided conditions
            let ok = order.iter().enumerate().all(|(k, &a)| {
                order[k + 1..].iter().all(|&b| {
                    let upper = !(g.adjacent(a, b) && g.adjacent(a, c)) || g.adjacent(b, c);
                    let lower = !(g.adjacent(c, a) && g.adjacent(c, b)) || g.adjacent(a, b);
                    upper && lower
                })
            });
            if !ok {
                continue;
            }
            order.push(c);
            if extend(g, order, used | 1 << c) {
                return true;
            }
            order.pop();
        }
        false
    }
    let mut order = Vec::with_capacity(n);
    Ok(extend(g, &mut order, 0).then(|| order.iter().map(|&i| g.vertices[i]).collect()))
}

/// `mu_j = n - j - deg_up(j)` for `j = 1..=n`, and
/// `s = min{k - 1 : mu_k = 0}`.
pub fn mu_vector(g: &SimpleGraph, labeling: &[Vertex]) -> Result<(Vec<u32>, usize)> {
    let adj = relabeled_adjacency(g, labeling)?;
    if !closed_adjacency(&adj) {
        return Err(Error::NotClosed(String::from(" under the given labeling")));
    }
    let n = adj.len();
    let mu: Vec<u32> = (0..n)
        .map(|j| {
            let up = (adj[j] & !low_bits(j + 1)).count_ones() as usize;
            // label j+1: mu = n - (j+1) - up
            (n - (j + 1) - up) as u32
        })
        .collect();
    let s = mu
        .iter()
        .position(|&x| x == 0)
        .ok_or_else(|| Error::Structural(String::from("mu vector has no zero entry")))?;
    Ok((mu, s))
}

/// Graph of the initial ideal of the binomial edge ideal: edge `{i, j}`
/// with `i < j` becomes `x_i – y_{j-1}`, so both sides are indexed
/// `1..=n-1`.
///
/// The input must be connected, closed under `labeling`, and free of cut
/// vertices. The result is checked against the skew Ferrers diagram with
/// `lambda_i = n - i` and the graph's mu vector.
pub fn initial_closed_graph(g: &SimpleGraph, labeling: &[Vertex]) -> Result<SimpleGraph> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Edgeless);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !cut_vertices(g).is_empty() {
        return Err(Error::Structural(String::from(
            "initial-closed graph needs a graph without cut vertices",
        )));
    }
    let (mu, _) = mu_vector(g, labeling)?;
    let h = initial_graph_unchecked(g, labeling, 0)?;

    let lambda: Vec<u32> = (1..n as u32).rev().collect();
    let diagram = CellDiagram::new_skew_ferrers(&lambda, &mu[..n - 1])
        .map_err(|e| Error::Structural(format!("mu vector does not give a skew Ferrers shape: {e}")))?;
    let expected = graph_of_diagram(&diagram);
    let found: BTreeSet<_> = h.edges().into_iter().collect();
    let wanted: BTreeSet<_> = expected.edges().into_iter().collect();
    if found != wanted || expected.vertex_count() != h.vertex_count() {
        return Err(Error::Structural(String::from(
            "initial-closed graph does not match its skew Ferrers diagram",
        )));
    }
    Ok(h)
}

/// `x_{i+offset} – y_{j-1+offset}` for every edge `i < j` of the labeling,
/// without any shape checks.
pub(crate) fn initial_graph_unchecked(g: &SimpleGraph, labeling: &[Vertex], offset: u32) -> Result<SimpleGraph> {
    let pos = positions(g, labeling)?;
    let n = g.vertex_count() as u32;
    let vertices: Vec<Vertex> = (1..n)
        .map(|i| Vertex::X(i + offset))
        .chain((1..n).map(|j| Vertex::Y(j + offset)))
        .collect();
    let mut edges = Vec::new();
    for (a, b) in g.edge_indices() {
        let (i, j) = if pos[a] < pos[b] {
            (pos[a], pos[b])
        } else {
            (pos[b], pos[a])
        };
        // 1-based labels i+1 < j+1; column j+1-1
        edges.push((Vertex::X(i as u32 + 1 + offset), Vertex::Y(j as u32 + offset)));
    }
    SimpleGraph::new(vertices, &edges)
}

/// A closed graph split along its cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedAnalysis {
    /// Vertices in label order; the first gets label 1.
    pub labeling: Vec<Vertex>,
    pub mu: Vec<u32>,
    pub s: usize,
    pub cut_vertices: Vec<Vertex>,
    /// Blocks in chain order: consecutive blocks share exactly one cut
    /// vertex and no other pair meets.
    pub blocks: Vec<SimpleGraph>,
    /// Each block's vertices in the order induced by `labeling`.
    pub block_labelings: Vec<Vec<Vertex>>,
}

/// Labels (or verifies the given labeling of) a connected closed graph and
/// splits it into blocks.
pub fn analyze_closed(g: &SimpleGraph, labeling: Option<&[Vertex]>) -> Result<ClosedAnalysis> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let labeling = match labeling {
        Some(l) => {
            if !is_closed_labeling(g, l)? {
                return Err(Error::NotClosed(String::from(" under the given labeling")));
            }
            l.to_vec()
        }
        None => find_closed_labeling(g)?.ok_or_else(|| Error::NotClosed(String::new()))?,
    };
    let (mu, s) = mu_vector(g, &labeling)?;
    let pos = positions(g, &labeling)?;
    let mut blocks = blocks(g)?;
    let span = |b: &SimpleGraph| -> (usize, usize) {
        let ps = b.vertices().iter().map(|&v| pos[g.index_of(v).expect("block vertex")]);
        (ps.clone().min().unwrap_or(0), ps.max().unwrap_or(0))
    };
    blocks.sort_by_key(|b| span(b));

    // chain check: blocks occupy label intervals that overlap in one label
    for (k, b) in blocks.iter().enumerate() {
        let (lo, hi) = span(b);
        if hi + 1 - lo != b.vertex_count() {
            return Err(Error::Structural(format!(
                "block {} is not a run of consecutive labels",
                k + 1
            )));
        }
        if k > 0 && span(&blocks[k - 1]).1 != lo {
            return Err(Error::Structural(format!(
                "blocks {} and {} do not form a chain",
                k,
                k + 1
            )));
        }
    }
    let block_labelings = blocks
        .iter()
        .map(|b| {
            let mut vs = b.vertices().to_vec();
            vs.sort_by_key(|&v| pos[g.index_of(v).expect("block vertex")]);
            vs
        })
        .collect();
    Ok(ClosedAnalysis {
        cut_vertices: cut_vertices(g),
        labeling,
        mu,
        s,
        blocks,
        block_labelings,
    })
}
