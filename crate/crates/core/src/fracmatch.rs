//! Fractional matchings in exact half-units.
//!
//! A weight of `0`, `1` or `2` half-units stands for `0`, `1/2` or `1`. The fractional
//! matching number is read off the bipartite double cover: a maximum matching there has
//! exactly `2 * alpha_f` edges, and folding it back gives a half-integral optimum.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{has_hamiltonian_cycle, Graph, VertexSet};
use crate::matching::{
    brute_force_witness, matching_number, max_matching, DeficiencyWitness, Flavor, DEFAULT_CAP,
};

/// Largest order accepted by [`fpm_partition`].
pub const FPM_CAP: usize = 12;

/// Bipartite double cover on `2n` vertices: each edge `uv` yields `(u, n+v)` and `(v, n+u)`.
pub fn double_cover(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, n + v), (v, n + u)]);
    Graph::new(2 * n, edges).expect("double cover of a simple graph is simple")
}

/// `2 * alpha_f(g)`.
pub fn alpha_f_halves(g: &Graph) -> usize {
    matching_number(&double_cover(g))
}

/// Half-integral edge weights on a host graph, indexed like `host.edges()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralMatching {
    host: Graph,
    weights: Vec<u8>,
}

impl HalfIntegralMatching {
    /// Validates weights in `{0, 1, 2}` and per-vertex load at most two half-units.
    pub fn new(host: &Graph, weights: Vec<u8>) -> Result<Self> {
        if weights.len() != host.edge_count() {
            return Err(Error::InvalidWeights(format!(
                "{} weights for {} edges",
                weights.len(),
                host.edge_count()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w > 2) {
            let (u, v) = host.edges()[i];
            return Err(Error::InvalidWeights(format!(
                "edge {u}-{v} has weight {} half-units",
                weights[i]
            )));
        }
        let f = HalfIntegralMatching {
            host: host.clone(),
            weights,
        };
        if let Some(v) = (0..host.n()).find(|&v| f.load(v) > 2) {
            return Err(Error::InvalidWeights(format!(
                "vertex {v} carries load {}",
                f.load(v)
            )));
        }
        Ok(f)
    }

    /// Builds from `(u, v, half_units)` triples; unlisted edges get weight 0.
    pub fn from_triples(
        host: &Graph,
        triples: impl IntoIterator<Item = (usize, usize, u8)>,
    ) -> Result<Self> {
        let mut weights = vec![0; host.edge_count()];
        for (u, v, w) in triples {
            let idx = host.edge_index(u, v).ok_or(Error::InvalidEdge {
                u,
                v,
                reason: "not an edge of the host graph",
            })?;
            weights[idx] = w;
        }
        Self::new(host, weights)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn weight(&self, u: usize, v: usize) -> u8 {
        self.host.edge_index(u, v).map_or(0, |i| self.weights[i])
    }

    /// Sum of incident weights at `v`, in half-units.
    pub fn load(&self, v: usize) -> u8 {
        self.host
            .neighbors(v)
            .iter()
            .map(|&w| self.weight(v, w))
            .sum()
    }

    pub fn size_halves(&self) -> usize {
        self.weights.iter().map(|&w| usize::from(w)).sum()
    }

    /// Whether `v` is an endpoint of a weight-one edge.
    pub fn is_full(&self, v: usize) -> bool {
        self.host
            .neighbors(v)
            .iter()
            .any(|&w| self.weight(v, w) == 2)
    }

    /// Edges with positive weight as `(u, v, half_units)`.
    pub fn triples(&self) -> Vec<(usize, usize, u8)> {
        self.host
            .edges()
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w > 0)
            .map(|(&(u, v), &w)| (u, v, w))
            .collect()
    }

    fn set(&mut self, u: usize, v: usize, w: u8) {
        let i = self
            .host
            .edge_index(u, v)
            .expect("rewrite touches host edges only");
        self.weights[i] = w;
    }

    /// Neighbours of `v` along half-weight edges.
    fn half_neighbors(&self, v: usize) -> Vec<usize> {
        self.host
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.weight(v, w) == 1)
            .collect()
    }
}

impl Serialize for HalfIntegralMatching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.triples().serialize(s)
    }
}

/// Folds a maximum matching of the double cover into a half-integral optimum.
pub fn extract_half_integral(g: &Graph) -> HalfIntegralMatching {
    let n = g.n();
    let cover = max_matching(&double_cover(g));
    let weights = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            u8::from(cover.mate(u) == Some(n + v)) + u8::from(cover.mate(v) == Some(n + u))
        })
        .collect();
    HalfIntegralMatching::new(g, weights).expect("double-cover fold respects vertex loads")
}

/// One applied improvement of the weight-one edge count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Rewrite {
    /// A half-weight path with an even number of edges, listed from the end that received weight one.
    Path { vertices: Vec<usize> },
    /// An even half-weight cycle, listed from its first weight-one edge.
    EvenCycle { vertices: Vec<usize> },
    /// A zero edge between two distinct odd half-weight cycles.
    CycleMerge { edge: (usize, usize) },
}

/// Half-weight structure: components of the subgraph of half-weight edges.
enum HalfPiece {
    Path(Vec<usize>),
    Cycle(Vec<usize>),
}

/// Components of the half-weight subgraph, in order of their smallest vertex.
/// Paths start at their smaller endpoint; cycles start at their smallest vertex and
/// continue towards its smaller half-neighbour.
fn half_pieces(f: &HalfIntegralMatching) -> Vec<HalfPiece> {
    let n = f.host.n();
    let halves: Vec<Vec<usize>> = (0..n).map(|v| f.half_neighbors(v)).collect();
    let mut seen = vec![false; n];
    let mut pieces = Vec::new();
    for start in 0..n {
        if seen[start] || halves[start].is_empty() {
            continue;
        }
        // Collect the component, then find an endpoint if it is a path.
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in &halves[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let endpoint = comp.iter().copied().filter(|&v| halves[v].len() == 1).min();
        let first = endpoint.unwrap_or_else(|| *comp.iter().min().unwrap());
        let mut order = vec![first];
        let mut prev = usize::MAX;
        let mut at = first;
        loop {
            let next = halves[at].iter().copied().filter(|&w| w != prev).min();
            match next {
                Some(w) if w != first && order.len() < comp.len() => {
                    order.push(w);
                    prev = at;
                    at = w;
                }
                _ => break,
            }
        }
        pieces.push(if endpoint.is_some() {
            HalfPiece::Path(order)
        } else {
            HalfPiece::Cycle(order)
        });
    }
    pieces
}

/// [`canonicalize_traced`] without the rewrite log.
pub fn canonicalize(g: &Graph, f: &HalfIntegralMatching) -> Result<HalfIntegralMatching> {
    canonicalize_traced(g, f).map(|(f, _)| f)
}

/// Applies the weight-one-increasing rewrites until none applies: half-weight paths and
/// even cycles are replaced by alternating `1, 0` weights, and a zero edge between two odd
/// half-weight cycles becomes a weight-one edge with both cycles matched alternately
/// around it. Each scan picks the first path, then the first even cycle, then the first
/// merge edge in edge order.
///
/// The input must be an optimal half-integral matching. An odd half-weight path, an
/// unweighted vertex next to a vertex that is not full, or a size below the optimum is
/// reported as [`Error::NonOptimal`].
pub fn canonicalize_traced(
    g: &Graph,
    f: &HalfIntegralMatching,
) -> Result<(HalfIntegralMatching, Vec<Rewrite>)> {
    if f.host() != g {
        return Err(Error::Precondition(
            "matching belongs to a different graph".into(),
        ));
    }
    let mut f = f.clone();
    let mut log = Vec::new();
    while let Some(step) = next_rewrite(&f)? {
        apply(&mut f, &step);
        log.push(step);
    }

    for v in 0..g.n() {
        if f.load(v) != 0 {
            continue;
        }
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| !f.is_full(w)) {
            return Err(Error::NonOptimal(format!(
                "unweighted vertex {v} is adjacent to vertex {w}, which is not full"
            )));
        }
    }
    let optimum = alpha_f_halves(g);
    if f.size_halves() != optimum {
        return Err(Error::NonOptimal(format!(
            "size {} half-units, optimum is {optimum}",
            f.size_halves()
        )));
    }
    Ok((f, log))
}

fn next_rewrite(f: &HalfIntegralMatching) -> Result<Option<Rewrite>> {
    let pieces = half_pieces(f);
    for piece in &pieces {
        if let HalfPiece::Path(p) = piece {
            if p.len() % 2 == 0 {
                return Err(Error::NonOptimal(format!("odd half-weight path {p:?}")));
            }
            return Ok(Some(Rewrite::Path {
                vertices: p.clone(),
            }));
        }
    }
    for piece in &pieces {
        if let HalfPiece::Cycle(c) = piece {
            if c.len() % 2 == 0 {
                return Ok(Some(Rewrite::EvenCycle {
                    vertices: c.clone(),
                }));
            }
        }
    }
    let mut cycle_of = vec![usize::MAX; f.host.n()];
    for (id, piece) in pieces.iter().enumerate() {
        if let HalfPiece::Cycle(c) = piece {
            for &v in c {
                cycle_of[v] = id;
            }
        }
    }
    for &(u, v) in f.host.edges() {
        if cycle_of[u] != usize::MAX && cycle_of[v] != usize::MAX && cycle_of[u] != cycle_of[v] {
            return Ok(Some(Rewrite::CycleMerge { edge: (u, v) }));
        }
    }
    Ok(None)
}

fn apply(f: &mut HalfIntegralMatching, step: &Rewrite) {
    match step {
        Rewrite::Path { vertices } => {
            for (i, pair) in vertices.windows(2).enumerate() {
                f.set(pair[0], pair[1], if i % 2 == 0 { 2 } else { 0 });
            }
        }
        Rewrite::EvenCycle { vertices } => {
            let len = vertices.len();
            for i in 0..len {
                f.set(
                    vertices[i],
                    vertices[(i + 1) % len],
                    if i % 2 == 0 { 2 } else { 0 },
                );
            }
        }
        Rewrite::CycleMerge { edge: (u, v) } => {
            for root in [*u, *v] {
                let cycle = walk_cycle_from(f, root);
                let len = cycle.len();
                // Edges around the cycle from `root`: both root edges drop to 0, the
                // path between them alternates starting with 1.
                for i in 0..len {
                    let w = if i == 0 || i == len - 1 {
                        0
                    } else if i % 2 == 1 {
                        2
                    } else {
                        0
                    };
                    f.set(cycle[i], cycle[(i + 1) % len], w);
                }
            }
            f.set(*u, *v, 2);
        }
    }
}

/// The half-weight cycle through `root`, starting there and heading to its smaller half-neighbour.
fn walk_cycle_from(f: &HalfIntegralMatching, root: usize) -> Vec<usize> {
    let mut order = vec![root];
    let mut prev = usize::MAX;
    let mut at = root;
    loop {
        let next = f
            .half_neighbors(at)
            .into_iter()
            .filter(|&w| w != prev)
            .min()
            .expect("vertex on a half cycle");
        if next == root {
            return order;
        }
        order.push(next);
        prev = at;
        at = next;
    }
}

/// Counts describing a canonical matching: unweighted vertices, weight-one edges, and
/// half-weight odd cycles by half-length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CanonicalStats {
    pub w0: usize,
    pub w1: usize,
    /// `i -> number of half-weight cycles of length 2i + 1`.
    pub cycles: BTreeMap<usize, usize>,
}

impl CanonicalStats {
    pub fn cycle_count(&self) -> usize {
        self.cycles.values().sum()
    }

    /// `w0 + 2 w1 + sum (2i+1) c_i`.
    pub fn vertex_total(&self) -> usize {
        self.w0
            + 2 * self.w1
            + self
                .cycles
                .iter()
                .map(|(&i, &c)| (2 * i + 1) * c)
                .sum::<usize>()
    }

    /// `2 w1 + sum (2i+1) c_i`, the matching size in half-units.
    pub fn size_halves(&self) -> usize {
        2 * self.w1
            + self
                .cycles
                .iter()
                .map(|(&i, &c)| (2 * i + 1) * c)
                .sum::<usize>()
    }

    /// `w1 + sum i c_i`, a lower bound on the matching number.
    pub fn matching_lower_bound(&self) -> usize {
        self.w1 + self.cycles.iter().map(|(&i, &c)| i * c).sum::<usize>()
    }
}

impl Serialize for CanonicalStats {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CanonicalStats", 3)?;
        st.serialize_field("w0", &self.w0)?;
        st.serialize_field("w1", &self.w1)?;
        st.serialize_field("c", &self.cycles)?;
        st.end()
    }
}

/// Reads `(w0, w1, c)` off a matching whose half-weight edges form disjoint odd cycles.
pub fn canonical_stats(g: &Graph, f: &HalfIntegralMatching) -> Result<CanonicalStats> {
    if f.host() != g {
        return Err(Error::Precondition(
            "matching belongs to a different graph".into(),
        ));
    }
    let mut cycles = BTreeMap::new();
    for piece in half_pieces(f) {
        match piece {
            HalfPiece::Path(p) => {
                return Err(Error::NonCanonical(format!("half-weight path {p:?}")));
            }
            HalfPiece::Cycle(c) if c.len() % 2 == 0 => {
                return Err(Error::NonCanonical(format!("even half-weight cycle {c:?}")));
            }
            HalfPiece::Cycle(c) => *cycles.entry(c.len() / 2).or_insert(0) += 1,
        }
    }
    Ok(CanonicalStats {
        w0: (0..g.n()).filter(|&v| f.load(v) == 0).count(),
        w1: f.weights().iter().filter(|&&w| w == 2).count(),
        cycles,
    })
}

/// Isolated-vertex witness: `S` maximizing `i(G - S) - |S|`.
pub fn frac_deficiency_witness(g: &Graph) -> Result<DeficiencyWitness> {
    brute_force_witness(g, Flavor::IsolatedVertex, DEFAULT_CAP)
}

/// A partition of the vertex set into parts inducing `K_2` or an odd graph with a
/// spanning cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FpmPartition {
    pub parts: Vec<VertexSet>,
}

impl FpmPartition {
    /// Checks the partition and the shape of every part.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut covered = vec![false; g.n()];
        let adj = g.adjacency_masks();
        for part in &self.parts {
            for v in part.iter() {
                if v >= g.n() || std::mem::replace(&mut covered[v], true) {
                    return Err(Error::Precondition(format!(
                        "vertex {v} repeated or out of range"
                    )));
                }
            }
            let ok = match part.len() {
                2 => g.has_edge(part.as_slice()[0], part.as_slice()[1]),
                k if k % 2 == 1 => has_hamiltonian_cycle(&adj, part.to_mask()),
                _ => false,
            };
            if !ok {
                return Err(Error::Precondition(format!(
                    "part {:?} is neither K2 nor odd Hamiltonian",
                    part
                )));
            }
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::Precondition(format!("vertex {v} not covered")));
        }
        Ok(())
    }
}

/// Searches for a partition into `K_2` parts and odd Hamiltonian parts, `n <= 12`.
pub fn fpm_partition(g: &Graph) -> Result<Option<FpmPartition>> {
    let n = g.n();
    if n > FPM_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: FPM_CAP,
            hint: " for partition search",
        });
    }
    let adj = g.adjacency_masks();
    let mut search = PartitionSearch {
        adj: &adj,
        failed: HashSet::new(),
        hamiltonian: HashMap::new(),
        parts: Vec::new(),
    };
    let all = (1u64 << n) - 1;
    Ok(search.solve(all).then(|| FpmPartition {
        parts: search
            .parts
            .iter()
            .map(|&m| VertexSet::from_mask(m))
            .collect(),
    }))
}

struct PartitionSearch<'a> {
    adj: &'a [u64],
    failed: HashSet<u64>,
    hamiltonian: HashMap<u64, bool>,
    parts: Vec<u64>,
}

impl PartitionSearch<'_> {
    fn solve(&mut self, uncovered: u64) -> bool {
        if uncovered == 0 {
            return true;
        }
        if self.failed.contains(&uncovered) {
            return false;
        }
        let v = uncovered.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let mut partners = self.adj[v] & uncovered;
        while partners != 0 {
            let w = partners & partners.wrapping_neg();
            partners &= partners - 1;
            if self.try_part(uncovered, bit | w) {
                return true;
            }
        }
        let others = uncovered & !bit;
        let available = uncovered.count_ones();
        for size in (3..=available).step_by(2) {
            // Submasks of `others` with size - 1 members, in decreasing mask order.
            let mut sub = others;
            loop {
                if sub.count_ones() == size - 1 {
                    let part = sub | bit;
                    if self.is_hamiltonian(part) && self.try_part(uncovered, part) {
                        return true;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & others;
            }
        }
        self.failed.insert(uncovered);
        false
    }

    fn try_part(&mut self, uncovered: u64, part: u64) -> bool {
        self.parts.push(part);
        if self.solve(uncovered & !part) {
            return true;
        }
        self.parts.pop();
        false
    }

    fn is_hamiltonian(&mut self, part: u64) -> bool {
        let adj = self.adj;
        *self
            .hamiltonian
            .entry(part)
            .or_insert_with(|| has_hamiltonian_cycle(adj, part))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Fractional matching number from the isolated-vertex deficiency, in half-units.
    fn oracle_halves(g: &Graph) -> usize {
        (g.n() as i64 - frac_deficiency_witness(g).unwrap().value) as usize
    }

    #[test]
    fn double_cover_shapes() {
        let k2 = double_cover(&families::complete(2));
        assert_eq!(k2.edges(), &[(0, 3), (1, 2)]);

        let k3 = double_cover(&families::complete(3));
        assert_eq!(k3.n(), 6);
        assert!(k3.is_connected());
        assert!((0..6).all(|v| k3.degree(v) == 2));

        let c5 = double_cover(&families::cycle(5));
        assert!(c5.is_connected());
        assert!((0..10).all(|v| c5.degree(v) == 2));
        assert_eq!(c5.edge_count(), 10);
    }

    #[test]
    fn alpha_f_examples() {
        assert_eq!(alpha_f_halves(&families::complete(3)), 3);
        assert_eq!(alpha_f_halves(&families::star(3)), 2);
        assert_eq!(alpha_f_halves(&families::cycle(5)), 5);
        assert_eq!(oracle_halves(&families::cycle(5)), 5);
        let k3k2 = families::complete(3).disjoint_union(&families::complete(2));
        assert_eq!(extract_half_integral(&k3k2).size_halves(), 5);
    }

    #[test]
    fn extraction_is_half_integral_and_optimal() {
        for g in [
            families::cycle(5),
            families::triangle_star(2),
            families::star(4),
            families::complete(7),
        ] {
            let f = extract_half_integral(&g);
            assert!(f.weights().iter().all(|&w| w <= 2));
            assert!((0..g.n()).all(|v| f.load(v) <= 2));
            assert_eq!(f.size_halves(), oracle_halves(&g));
        }
        let k2 = extract_half_integral(&families::complete(2));
        assert_eq!(k2.weights(), &[2]);
    }

    #[test]
    fn even_cycle_rewrite() {
        let c6 = families::cycle(6);
        let f = HalfIntegralMatching::new(&c6, vec![1; 6]).unwrap();
        let (out, log) = canonicalize_traced(&c6, &f).unwrap();
        assert_eq!(log.len(), 1);
        assert!(matches!(log[0], Rewrite::EvenCycle { .. }));
        let stats = canonical_stats(&c6, &out).unwrap();
        assert_eq!((stats.w0, stats.w1, stats.cycle_count()), (0, 3, 0));
        assert_eq!(out.size_halves(), 6);
    }

    #[test]
    fn cycle_merge_rewrite() {
        // Triangles {0,1,2} and {3,4,5} joined by 2-3.
        let g = Graph::new(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]).unwrap();
        let f = HalfIntegralMatching::from_triples(
            &g,
            [
                (0, 1, 1),
                (0, 2, 1),
                (1, 2, 1),
                (3, 4, 1),
                (3, 5, 1),
                (4, 5, 1),
            ],
        )
        .unwrap();
        let (out, log) = canonicalize_traced(&g, &f).unwrap();
        assert_eq!(log, vec![Rewrite::CycleMerge { edge: (2, 3) }]);
        assert_eq!(out.triples(), vec![(0, 1, 2), (2, 3, 2), (4, 5, 2)]);
    }

    #[test]
    fn path_rewrite() {
        let p5 = families::path(5);
        assert_eq!(oracle_halves(&p5), 4);
        let f = HalfIntegralMatching::new(&p5, vec![1; 4]).unwrap();
        let (out, log) = canonicalize_traced(&p5, &f).unwrap();
        assert_eq!(log.len(), 1);
        assert_eq!(out.weights(), &[2, 0, 2, 0]);
        assert_eq!(canonical_stats(&p5, &out).unwrap().w1, 2);
    }

    #[test]
    fn rejects_odd_half_path() {
        let p4 = families::path(4);
        let f = HalfIntegralMatching::new(&p4, vec![1, 1, 1]).unwrap();
        assert!(
            matches!(canonicalize(&p4, &f), Err(Error::NonOptimal(msg)) if msg.contains("odd half-weight path"))
        );
    }

    #[test]
    fn rejects_stranded_unweighted_vertex() {
        // Triangle at half weight with a pendant vertex 3 on vertex 0.
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let f = HalfIntegralMatching::from_triples(&g, [(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap();
        assert!(
            matches!(canonicalize(&g, &f), Err(Error::NonOptimal(msg)) if msg.contains("unweighted vertex 3"))
        );
    }

    #[test]
    fn rejects_small_size() {
        let p4 = families::path(4);
        let f = HalfIntegralMatching::from_triples(&p4, [(1, 2, 2)]).unwrap();
        assert!(
            matches!(canonicalize(&p4, &f), Err(Error::NonOptimal(msg)) if msg.contains("optimum"))
        );
    }

    #[test]
    fn invalid_weights() {
        let k3 = families::complete(3);
        assert!(HalfIntegralMatching::new(&k3, vec![3, 0, 0]).is_err());
        assert!(HalfIntegralMatching::new(&k3, vec![2, 2, 0]).is_err());
        assert!(HalfIntegralMatching::new(&k3, vec![1, 1]).is_err());
    }

    #[test]
    fn stats_examples() {
        let c5 = families::cycle(5);
        let f = canonicalize(&c5, &extract_half_integral(&c5)).unwrap();
        let s = canonical_stats(&c5, &f).unwrap();
        assert_eq!((s.w0, s.w1), (0, 0));
        assert_eq!(s.cycles, BTreeMap::from([(2, 1)]));

        let star = families::triangle_star(2);
        let f = canonicalize(&star, &extract_half_integral(&star)).unwrap();
        let s = canonical_stats(&star, &f).unwrap();
        assert_eq!((s.w0, s.w1), (0, 1));
        assert_eq!(s.cycles, BTreeMap::from([(1, 2)]));

        let k2 = families::complete(2);
        let s = canonical_stats(&k2, &extract_half_integral(&k2)).unwrap();
        assert_eq!((s.w0, s.w1, s.cycle_count()), (0, 1, 0));

        let k13 = families::star(3);
        let f = canonicalize(&k13, &extract_half_integral(&k13)).unwrap();
        let s = canonical_stats(&k13, &f).unwrap();
        assert_eq!((s.w0, s.w1, s.cycle_count()), (2, 1, 0));
    }

    #[test]
    fn stats_rejects_non_canonical() {
        let c6 = families::cycle(6);
        let f = HalfIntegralMatching::new(&c6, vec![1; 6]).unwrap();
        assert!(matches!(
            canonical_stats(&c6, &f),
            Err(Error::NonCanonical(_))
        ));
    }

    #[test]
    fn stats_json_shape() {
        let c5 = families::cycle(5);
        let f = canonicalize(&c5, &extract_half_integral(&c5)).unwrap();
        let json = serde_json::to_string(&canonical_stats(&c5, &f).unwrap()).unwrap();
        assert_eq!(json, r#"{"w0":0,"w1":0,"c":{"2":1}}"#);
    }

    #[test]
    fn frac_witness_examples() {
        let w = frac_deficiency_witness(&families::star(3)).unwrap();
        assert_eq!((w.set.as_slice(), w.value), (&[0usize][..], 2));
        assert_eq!(
            frac_deficiency_witness(&families::complete(3))
                .unwrap()
                .value,
            0
        );
        assert_eq!(
            frac_deficiency_witness(&families::triangle_star(1))
                .unwrap()
                .value,
            0
        );
    }

    #[test]
    fn partition_examples() {
        let c5 = fpm_partition(&families::cycle(5)).unwrap().unwrap();
        assert_eq!(c5.parts, vec![(0..5).collect::<VertexSet>()]);

        assert_eq!(fpm_partition(&families::star(3)).unwrap(), None);

        let p4 = fpm_partition(&families::path(4)).unwrap().unwrap();
        assert_eq!(
            p4.parts,
            vec![[0, 1].into_iter().collect(), [2, 3].into_iter().collect()]
        );

        let star = families::triangle_star(2);
        fpm_partition(&star)
            .unwrap()
            .unwrap()
            .validate(&star)
            .unwrap();

        assert!(fpm_partition(&families::path(13)).is_err());
    }
}
