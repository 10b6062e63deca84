//! Maximum matchings in general graphs, Tutte–Berge deficiency witnesses and the
//! Gallai–Edmonds decomposition.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components, mask_components, Graph, VertexSet};

/// Default limit on `n` for the `2^n` subset searches.
pub const DEFAULT_CAP: usize = 16;
/// Hard ceiling accepted for a cap override.
pub const MAX_CAP: usize = 20;

const NONE: usize = usize::MAX;

/// A matching of a host graph, stored as a mate array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Checks that every pair is an edge of `g` and the mate relation is symmetric.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.mate.len() != g.n() {
            return Err(Error::Precondition(
                "matching sized for a different graph".into(),
            ));
        }
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = *m {
                if self.mate.get(v).copied().flatten() != Some(u) {
                    return Err(Error::Precondition(format!(
                        "mate relation broken at {u}-{v}"
                    )));
                }
                if !g.has_edge(u, v) {
                    return Err(Error::Precondition(format!(
                        "matched pair {u}-{v} is not an edge"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Maximum matching by Edmonds' blossom search, seeded with a greedy maximal matching.
/// Vertices are scanned in increasing order, so the result is deterministic.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut search = Blossom::new(g, mate);
    for root in 0..n {
        if search.mate[root] == NONE {
            if let Some(end) = search.augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    Matching {
        mate: search
            .mate
            .into_iter()
            .map(|m| (m != NONE).then_some(m))
            .collect(),
    }
}

/// Matching number of `g`.
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).size()
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, mate: Vec<usize>) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize) {
        while self.base[v] != stem {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating trees from `root`; returns the free endpoint of an
    /// augmenting path, with the path recorded in `parent`.
    fn augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let stem = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, stem, to);
                    self.mark_path(to, stem, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = stem;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Which deficiency a witness certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// `o(G - S) - |S|`, odd components.
    OddComponent,
    /// `i(G - S) - |S|`, isolated vertices.
    IsolatedVertex,
}

/// A vertex set attaining the maximum deficiency of its flavor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyWitness {
    pub set: VertexSet,
    pub value: i64,
    pub flavor: Flavor,
}

/// Deficiency of one vertex set.
pub fn deficiency(g: &Graph, set: &VertexSet, flavor: Flavor) -> i64 {
    let profile = components(g, set);
    let count = match flavor {
        Flavor::OddComponent => profile.odd,
        Flavor::IsolatedVertex => profile.isolated,
    };
    count as i64 - set.len() as i64
}

/// Odd-component witness with the default cap.
pub fn tutte_berge_witness(g: &Graph) -> Result<DeficiencyWitness> {
    brute_force_witness(g, Flavor::OddComponent, DEFAULT_CAP)
}

/// Exhaustive search over all `2^n` subsets. Among maximizers the largest set wins,
/// then the lexicographically least member list.
pub fn brute_force_witness(g: &Graph, flavor: Flavor, cap: usize) -> Result<DeficiencyWitness> {
    let n = g.n();
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(Error::CapExceeded {
            n,
            cap,
            hint: match flavor {
                Flavor::OddComponent => "; use gallai_edmonds for larger graphs",
                Flavor::IsolatedVertex => "; use alpha_f for larger graphs",
            },
        });
    }
    let adj = g.adjacency_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Option<(i64, u64)> = None;
    for set in 0..=full {
        let alive = full & !set;
        let count = match flavor {
            Flavor::OddComponent => mask_components(&adj, alive)
                .filter(|c| c.count_ones() % 2 == 1)
                .count(),
            Flavor::IsolatedVertex => {
                let mut isolated = 0;
                let mut rest = alive;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if adj[v] & alive == 0 {
                        isolated += 1;
                    }
                }
                isolated
            }
        };
        let value = count as i64 - set.count_ones() as i64;
        let better = match best {
            None => true,
            Some((bv, bs)) => {
                value > bv
                    || (value == bv
                        && (set.count_ones() > bs.count_ones()
                            || (set.count_ones() == bs.count_ones()
                                && VertexSet::from_mask(set) < VertexSet::from_mask(bs))))
            }
        };
        if better {
            best = Some((value, set));
        }
        if set == full {
            break;
        }
    }
    let (value, set) = best.expect("at least the empty set is examined");
    Ok(DeficiencyWitness {
        set: VertexSet::from_mask(set),
        value,
        flavor,
    })
}

/// Gallai–Edmonds partition `(D, A, C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    /// Vertices missed by some maximum matching.
    pub d: VertexSet,
    /// Neighbours of `D` outside `D`.
    pub a: VertexSet,
    /// Everything else.
    pub c: VertexSet,
}

impl GallaiEdmonds {
    /// `c(G[D]) - |A|`, which equals the Tutte–Berge deficiency.
    pub fn deficiency(&self, g: &Graph) -> i64 {
        let d_components = components(&g.induced(&self.d), &VertexSet::empty())
            .components
            .len();
        d_components as i64 - self.a.len() as i64
    }
}

/// Computes `D` by re-solving with each vertex's edges removed.
pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let nu = matching_number(g);
    let d: VertexSet = (0..g.n())
        .filter(|&v| {
            if g.degree(v) == 0 {
                return true;
            }
            let without = Graph::new(
                g.n(),
                g.edges().iter().copied().filter(|&(a, b)| a != v && b != v),
            )
            .expect("subgraph of a valid graph");
            matching_number(&without) == nu
        })
        .collect();
    let a: VertexSet = d
        .iter()
        .flat_map(|v| g.neighbors(v).iter().copied())
        .filter(|&w| !d.contains(w))
        .collect();
    let c = (0..g.n())
        .filter(|&v| !d.contains(v) && !a.contains(v))
        .collect();
    GallaiEdmonds { d, a, c }
}
