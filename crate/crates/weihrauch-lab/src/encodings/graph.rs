//! Infinite graphs as edge characteristic functions, finite truncations, and
//! the brute-force combinatorics used on them.
//!
//! An unordered edge `{a, b}` is present when the edge function is nonzero at
//! the code of the increasing pair `(min, max)`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::encodings::pairing::unordered_pair_encode;
use crate::error::{Error, Result};
use crate::oracle::OracleFn;
use crate::verdict::Verdict;

/// Which naturals are vertices of a [`GraphCode`].
#[derive(Clone)]
pub enum VertexUniverse {
    /// Every natural number is a vertex.
    All,
    /// Vertices re-indexed through a strictly increasing enumeration; the
    /// graph's vertex `i` is the `i`-th listed natural, and the edge
    /// function is queried at pair codes of positions.
    Enumerated(Vec<u64>),
    /// Membership predicate, for constructions whose vertex set is e.g. the
    /// node set of a tree. The edge function is queried at raw labels.
    Computed(Arc<dyn Fn(u64) -> Result<bool> + Send + Sync>),
}

impl fmt::Debug for VertexUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexUniverse::All => f.write_str("All"),
            VertexUniverse::Enumerated(v) => f.debug_tuple("Enumerated").field(v).finish(),
            VertexUniverse::Computed(_) => f.write_str("Computed(..)"),
        }
    }
}

/// A countable graph given by an edge characteristic function.
#[derive(Clone, Debug)]
pub struct GraphCode {
    pub edge_fn: OracleFn,
    pub vertex_universe: VertexUniverse,
}

impl GraphCode {
    pub fn new(edge_fn: OracleFn) -> Self {
        GraphCode {
            edge_fn,
            vertex_universe: VertexUniverse::All,
        }
    }

    pub fn with_universe(mut self, universe: VertexUniverse) -> Self {
        if let VertexUniverse::Enumerated(v) = &universe {
            debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        }
        self.vertex_universe = universe;
        self
    }

    /// Empty graph on all of ℕ.
    pub fn empty() -> Self {
        GraphCode::new(OracleFn::constant(0))
    }

    /// Graph on ℕ whose edge set is exactly `edges` (arbitrary order within
    /// each pair).
    pub fn from_edges(edges: &[(u64, u64)]) -> Result<Self> {
        let mut entries = Vec::new();
        for &(a, b) in edges {
            entries.push((unordered_pair_encode(a, b)?, 1));
        }
        entries.sort();
        entries.dedup();
        Ok(GraphCode::new(OracleFn::finite_support(entries, 0)))
    }

    pub fn contains_vertex(&self, v: u64) -> Result<bool> {
        match &self.vertex_universe {
            VertexUniverse::All => Ok(true),
            VertexUniverse::Enumerated(list) => Ok((v as usize) < list.len()),
            VertexUniverse::Computed(pred) => pred(v),
        }
    }

    /// Edge test under the encoding convention, symmetrized in `a`, `b`.
    pub fn edge(&self, a: u64, b: u64) -> Result<bool> {
        if a == b {
            return Err(Error::Precondition(format!(
                "edge query needs distinct endpoints, got ({a}, {b})"
            )));
        }
        for v in [a, b] {
            if !self.contains_vertex(v)? {
                return Err(Error::Precondition(format!(
                    "vertex {v} outside the graph's universe"
                )));
            }
        }
        let code = unordered_pair_encode(a, b)?;
        Ok(self.edge_fn.eval(code)? != 0)
    }
}

/// Explicit finite graph on vertices `0..num_vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGraph {
    num_vertices: u64,
    edges: BTreeSet<(u64, u64)>,
}

impl FiniteGraph {
    pub fn new(num_vertices: u64, edges: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Precondition(format!("self-loop at vertex {a}")));
            }
            let (a, b) = (a.min(b), a.max(b));
            if b >= num_vertices {
                return Err(Error::Precondition(format!(
                    "edge ({a}, {b}) outside vertex range 0..{num_vertices}"
                )));
            }
            set.insert((a, b));
        }
        Ok(FiniteGraph {
            num_vertices,
            edges: set,
        })
    }

    pub fn empty(num_vertices: u64) -> Self {
        FiniteGraph {
            num_vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(num_vertices: u64) -> Self {
        let mut edges = BTreeSet::new();
        for b in 0..num_vertices {
            for a in 0..b {
                edges.insert((a, b));
            }
        }
        FiniteGraph {
            num_vertices,
            edges,
        }
    }

    pub fn triangle() -> Self {
        FiniteGraph::complete(3)
    }

    pub fn path(num_vertices: u64) -> Self {
        FiniteGraph::new(num_vertices, (1..num_vertices).map(|v| (v - 1, v))).unwrap()
    }

    pub fn cycle(num_vertices: u64) -> Self {
        assert!(num_vertices >= 3);
        let mut edges: Vec<_> = (1..num_vertices).map(|v| (v - 1, v)).collect();
        edges.push((0, num_vertices - 1));
        FiniteGraph::new(num_vertices, edges).unwrap()
    }

    pub fn num_vertices(&self) -> u64 {
        self.num_vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u64, b: u64) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn complement(&self) -> FiniteGraph {
        let mut edges = BTreeSet::new();
        for b in 0..self.num_vertices {
            for a in 0..b {
                if !self.edges.contains(&(a, b)) {
                    edges.insert((a, b));
                }
            }
        }
        FiniteGraph {
            num_vertices: self.num_vertices,
            edges,
        }
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.num_vertices as usize;
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in &self.edges {
            adj[a as usize][b as usize] = true;
            adj[b as usize][a as usize] = true;
        }
        adj
    }
}

/// Finite truncation `G_m`: vertices `{0..m}` with the edges of `G` among
/// them.
pub fn finite_subgraph(g: &GraphCode, m: u64) -> Result<FiniteGraph> {
    let mut edges = Vec::new();
    for b in 0..=m {
        for a in 0..b {
            if g.edge(a, b)? {
                edges.push((a, b));
            }
        }
    }
    FiniteGraph::new(m + 1, edges)
}

/// Search order: the fixed prefix in place, then the remaining vertices by
/// descending degree. Isolated vertices past the prefix never constrain
/// anything and are left out entirely (colorable for any k >= 1), which
/// keeps the backtracking from branching k-fold on them.
fn colorable_order(adj: &[Vec<bool>], prefix_len: usize) -> Vec<usize> {
    let degree = |v: usize| adj[v].iter().filter(|&&e| e).count();
    let mut rest: Vec<usize> = (prefix_len..adj.len()).filter(|&v| degree(v) > 0).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(degree(v)));
    let mut order: Vec<usize> = (0..prefix_len).collect();
    order.extend(rest);
    order
}

fn colorable_rec(
    adj: &[Vec<bool>],
    k: u64,
    order: &[usize],
    colors: &mut Vec<u64>,
    next: usize,
) -> bool {
    if next == order.len() {
        return true;
    }
    let v = order[next];
    'colors: for c in 0..k {
        for (idx, &assigned) in colors.iter().enumerate() {
            if adj[v][order[idx]] && assigned == c {
                continue 'colors;
            }
        }
        colors.push(c);
        if colorable_rec(adj, k, order, colors, next + 1) {
            colors.pop();
            return true;
        }
        colors.pop();
    }
    false
}

/// Whether `f` has a proper `k`-coloring, by exhaustive backtracking.
pub fn is_k_colorable(f: &FiniteGraph, k: u64) -> bool {
    assert!(k >= 1, "coloring needs at least one color");
    let adj = f.adjacency();
    let order = colorable_order(&adj, 0);
    colorable_rec(&adj, k, &order, &mut Vec::new(), 0)
}

/// Whether some proper `k`-coloring of `f` extends the partial assignment
/// `prefix` (colors for vertices `0..prefix.len()`).
pub fn is_k_colorable_extending(f: &FiniteGraph, k: u64, prefix: &[u64]) -> bool {
    assert!(k >= 1);
    let n = f.num_vertices() as usize;
    let prefix = &prefix[..prefix.len().min(n)];
    if prefix.iter().any(|&c| c >= k) {
        return false;
    }
    let adj = f.adjacency();
    for (i, &ci) in prefix.iter().enumerate() {
        for (j, &cj) in prefix.iter().enumerate().take(i) {
            if adj[i][j] && ci == cj {
                return false;
            }
        }
    }
    let mut colors = prefix.to_vec();
    let order = colorable_order(&adj, prefix.len());
    colorable_rec(&adj, k, &order, &mut colors, prefix.len())
}

/// Truncation check: is `f` a proper `k`-coloring of `g` on all edges among
/// vertices below `bound`, with all values below `k`? Never claims anything
/// beyond the bound.
pub fn check_coloring(g: &GraphCode, f: &OracleFn, k: u64, bound: u64) -> Verdict {
    for v in 0..bound {
        match g.contains_vertex(v) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(e) => return Verdict::unknown(e.to_string()),
        }
        let cv = match f.eval(v) {
            Ok(c) => c,
            Err(e) => return Verdict::unknown(e.to_string()),
        };
        if cv >= k {
            return Verdict::invalid(format!("vertex {v} colored {cv} >= {k}"));
        }
        for u in 0..v {
            match g.contains_vertex(u) {
                Ok(true) => {}
                Ok(false) => continue,
                Err(e) => return Verdict::unknown(e.to_string()),
            }
            match g.edge(u, v) {
                Ok(true) => {
                    let cu = match f.eval(u) {
                        Ok(c) => c,
                        Err(e) => return Verdict::unknown(e.to_string()),
                    };
                    if cu == cv {
                        return Verdict::invalid(format!(
                            "edge ({u}, {v}) monochromatic in color {cv}"
                        ));
                    }
                }
                Ok(false) => {}
                Err(Error::FuelExhausted { .. }) => {
                    return Verdict::unknown(format!("fuel exhausted probing edge ({u}, {v})"))
                }
                Err(e) => return Verdict::unknown(e.to_string()),
            }
        }
    }
    Verdict::Valid
}

fn embed_rec(
    h_adj: &[Vec<bool>],
    f_adj: &[Vec<bool>],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let next = map.len();
    if next == h_adj.len() {
        return true;
    }
    'targets: for t in 0..f_adj.len() {
        if used[t] {
            continue;
        }
        // Prune: every already-mapped H-neighbor must land on an F-neighbor.
        for (s, &img) in map.iter().enumerate() {
            if h_adj[next][s] && !f_adj[t][img] {
                continue 'targets;
            }
        }
        map.push(t);
        used[t] = true;
        if embed_rec(h_adj, f_adj, map, used) {
            return true;
        }
        used[t] = false;
        map.pop();
    }
    false
}

/// Whether an injective vertex map from `h` into `f` carries every `h`-edge
/// to an `f`-edge (non-induced subgraph embedding), by pruned backtracking.
pub fn embedding_exists(h: &FiniteGraph, f: &FiniteGraph) -> bool {
    if h.num_vertices() > f.num_vertices() {
        return false;
    }
    let h_adj = h.adjacency();
    let f_adj = f.adjacency();
    let mut used = vec![false; f_adj.len()];
    embed_rec(&h_adj, &f_adj, &mut Vec::new(), &mut used)
}

/// Pattern search semantics for a fixed finite pattern: a pattern with edges
/// embeds as a subgraph, while an edgeless pattern asks for an independent
/// set of its size (the complement-clique reading).
pub fn pattern_embeds(f: &FiniteGraph, host: &FiniteGraph) -> bool {
    if f.num_edges() > 0 {
        embedding_exists(f, host)
    } else {
        embedding_exists(&FiniteGraph::complete(f.num_vertices()), &host.complement())
    }
}

/// Whether `map` witnesses [`pattern_embeds`].
pub fn pattern_map_ok(f: &FiniteGraph, host: &FiniteGraph, map: &[u64]) -> bool {
    if f.num_edges() > 0 {
        is_embedding(f, host, map)
    } else {
        is_embedding(
            &FiniteGraph::complete(f.num_vertices()),
            &host.complement(),
            map,
        )
    }
}

/// Checks that `map` (h-vertex `i` to f-vertex `map[i]`) is an injective
/// edge-preserving embedding.
pub fn is_embedding(h: &FiniteGraph, f: &FiniteGraph, map: &[u64]) -> bool {
    if map.len() != h.num_vertices() as usize {
        return false;
    }
    if map.iter().any(|&v| v >= f.num_vertices()) {
        return false;
    }
    let mut seen = BTreeSet::new();
    if !map.iter().all(|&v| seen.insert(v)) {
        return false;
    }
    h.edges()
        .all(|(a, b)| f.has_edge(map[a as usize], map[b as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::pairing::pair_encode;

    #[test]
    fn empty_graph_has_no_edges() {
        let g = GraphCode::empty();
        assert!(!g.edge(0, 1).unwrap());
    }

    #[test]
    fn edge_query_symmetrizes() {
        let code = pair_encode(2, 3).unwrap();
        let g = GraphCode::new(OracleFn::finite_support(vec![(code, 1)], 0));
        assert!(g.edge(3, 2).unwrap());
        assert!(g.edge(2, 3).unwrap());
        assert!(!g.edge(2, 4).unwrap());
        assert!(g.edge(1, 1).is_err());
    }

    #[test]
    fn fuel_exhaustion_propagates_from_edge_query() {
        let g = GraphCode::new(OracleFn::constant(0).with_fuel(1));
        assert!(matches!(g.edge(5, 9), Err(Error::FuelExhausted { .. })));
    }

    #[test]
    fn finite_subgraph_restricts() {
        let tri = GraphCode::from_edges(&[(0, 1), (0, 2), (1, 2)]).unwrap();
        let g1 = finite_subgraph(&tri, 1).unwrap();
        assert_eq!(g1.num_vertices(), 2);
        assert_eq!(g1.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let g5 = finite_subgraph(&tri, 5).unwrap();
        assert_eq!(g5.num_vertices(), 6);
        assert_eq!(g5.num_edges(), 3);

        let empty3 = finite_subgraph(&GraphCode::empty(), 3).unwrap();
        assert_eq!(empty3.num_vertices(), 4);
        assert_eq!(empty3.num_edges(), 0);
    }

    #[test]
    fn triangle_coloring() {
        let tri = FiniteGraph::triangle();
        assert!(!is_k_colorable(&tri, 2));
        assert!(is_k_colorable(&tri, 3));
    }

    #[test]
    fn near_complete_graph() {
        // K_4 minus one edge is 3-colorable.
        let mut edges: Vec<_> = FiniteGraph::complete(4).edges().collect();
        edges.pop();
        let g = FiniteGraph::new(4, edges).unwrap();
        assert!(is_k_colorable(&g, 3));
        assert!(!is_k_colorable(&FiniteGraph::complete(4), 3));
    }

    #[test]
    fn extending_prefix() {
        let tri = FiniteGraph::triangle();
        assert!(is_k_colorable_extending(&tri, 3, &[0]));
        assert!(is_k_colorable_extending(&tri, 3, &[0, 1]));
        assert!(!is_k_colorable_extending(&tri, 3, &[0, 0]));
        assert!(!is_k_colorable_extending(&tri, 2, &[0]));
    }

    #[test]
    fn check_coloring_verdicts() {
        let empty = GraphCode::empty();
        assert!(check_coloring(&empty, &OracleFn::constant(0), 2, 10).is_valid());

        let one_edge = GraphCode::from_edges(&[(0, 1)]).unwrap();
        assert!(check_coloring(&one_edge, &OracleFn::constant(0), 2, 2).is_invalid());

        let parity = OracleFn::periodic(vec![], vec![0, 1]);
        assert!(check_coloring(&one_edge, &parity, 2, 50).is_valid());

        let starved = GraphCode::new(OracleFn::constant(0).with_fuel(1));
        assert!(check_coloring(&starved, &OracleFn::constant(0), 2, 10).is_unknown());
    }

    #[test]
    fn embeddings() {
        let edge = FiniteGraph::path(2);
        let tri = FiniteGraph::triangle();
        let c4 = FiniteGraph::cycle(4);
        assert!(embedding_exists(&edge, &tri));
        assert!(!embedding_exists(&tri, &c4));
        assert!(embedding_exists(&FiniteGraph::path(3), &tri));
    }

    #[test]
    fn is_embedding_checks_injectivity() {
        let edge = FiniteGraph::path(2);
        let tri = FiniteGraph::triangle();
        assert!(is_embedding(&edge, &tri, &[0, 2]));
        assert!(!is_embedding(&edge, &tri, &[1, 1]));
        assert!(!is_embedding(&edge, &tri, &[0]));
    }
}
