//! Simple undirected graphs on vertices `0..n`, vertex subsets and component analysis.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as sorted pairs `(u, v)` with `u < v`, in lexicographic order, and the
/// adjacency lists are sorted. A `Graph` is immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate pairs and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidEdge {
                    u: a,
                    v: b,
                    reason: "loop",
                });
            }
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge {
                u: w[0].0,
                v: w[0].1,
                reason: "duplicate edge",
            });
        }
        Ok(Self::from_sorted(n, normalized))
    }

    /// Builds a graph from pairs that may repeat; duplicates are merged. Loops and
    /// out-of-range endpoints are still rejected.
    pub fn from_edges_dedup(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut all: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        all.sort_unstable();
        all.dedup();
        Self::new(n, all)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each pair with `u < v`.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Adjacency rows as bitmasks. Only meaningful for `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
            .collect()
    }

    /// A copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, edges)
    }

    /// The subgraph induced by `keep`, relabelled to `0..keep.len()` in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(keep.len(), edges).expect("induced subgraph of a valid graph is valid")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_sorted(self.n + other.n, edges)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || components(self, &VertexSet::empty()).components.len() == 1
    }

    /// Human-readable adjacency list, one `v: w1 w2 ...` line per vertex.
    pub fn adjacency_text(&self) -> String {
        let mut out = String::new();
        for (v, list) in self.adj.iter().enumerate() {
            out.push_str(&v.to_string());
            out.push(':');
            for w in list {
                out.push(' ');
                out.push_str(&w.to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A sorted, duplicate-free set of vertices of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }

    /// Checks membership in the vertex range of `g`.
    pub fn within(g: &Graph, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: VertexSet = members.into_iter().collect();
        if let Some(&v) = set.0.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        Ok(set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

/// Component structure of `G - S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentProfile {
    /// Number of components with an odd number of vertices.
    pub odd: usize,
    /// Number of isolated vertices.
    pub isolated: usize,
    /// Number of odd components with at least three vertices.
    pub odd_nontrivial: usize,
    /// Components ordered by their smallest vertex.
    pub components: Vec<VertexSet>,
}

impl ComponentProfile {
    pub fn even(&self) -> usize {
        self.components.len() - self.odd
    }
}

/// Connected components of `g - removed`.
pub fn components(g: &Graph, removed: &VertexSet) -> ComponentProfile {
    let n = g.n();
    let mut seen = vec![false; n];
    for v in removed.iter() {
        if v < n {
            seen[v] = true;
        }
    }
    let mut comps = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comps.push(members.into_iter().collect::<VertexSet>());
    }
    let odd = comps.iter().filter(|c| c.len() % 2 == 1).count();
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    ComponentProfile {
        odd,
        isolated,
        odd_nontrivial: odd - isolated,
        components: comps,
    }
}

/// Bitmask components of the subgraph induced by `alive`, for `n <= 64`.
pub(crate) fn mask_components(adj: &[u64], alive: u64) -> impl Iterator<Item = u64> + '_ {
    let mut rest = alive;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        Some(comp)
    })
}

/// Whether the vertices of `mask` carry a spanning cycle of the induced subgraph.
/// Sets of fewer than three vertices have none.
pub(crate) fn has_hamiltonian_cycle(adj: &[u64], mask: u64) -> bool {
    let size = mask.count_ones();
    if size < 3 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    fn extend(adj: &[u64], mask: u64, start: usize, at: usize, visited: u64, size: u32) -> bool {
        if visited.count_ones() == size {
            return adj[at] >> start & 1 == 1;
        }
        let mut next = adj[at] & mask & !visited;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if extend(adj, mask, start, w, visited | 1 << w, size) {
                return true;
            }
        }
        false
    }
    extend(adj, mask, start, start, 1 << start, size)
}
