//! Canonical labelling of small graphs by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an equitable one,
//! individualize each vertex of the first non-singleton cell in turn, and recurse. The
//! canonical form is the leaf with the largest adjacency certificate. When a leaf
//! reproduces the best certificate seen so far the two leaves differ by an automorphism
//! that fixes their common prefix, so the search jumps back to the node where the two
//! paths diverge.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled; the certificate packs `n(n-1)/2` bits into a `u128`.
pub const MAX_CANON_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub n: usize,
    /// Upper-triangle adjacency bits of the relabelled graph, column order, first bit most significant.
    pub certificate: u128,
    /// `labeling[i]` is the original vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        graph_from_certificate(self.n, self.certificate)
    }
}

/// Rebuilds the graph whose certificate is `cert`.
pub fn graph_from_certificate(n: usize, cert: u128) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if cert >> (bits - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("certificate decodes to a simple graph")
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize {
            n,
            max: MAX_CANON_ORDER,
            hint: " for canonical labelling",
        });
    }
    let adj: Vec<u32> = g.adjacency_masks().into_iter().map(|m| m as u32).collect();
    Ok(canonical_from_masks(&adj))
}

/// Certificate only; the hot path of the enumerator.
pub(crate) fn canonical_from_masks(adj: &[u32]) -> CanonicalForm {
    let n = adj.len();
    if n == 0 {
        return CanonicalForm {
            n,
            certificate: 0,
            labeling: Vec::new(),
        };
    }
    let mut search = Search { adj, best: None };
    let root = vec![if n == 32 { u32::MAX } else { (1u32 << n) - 1 }];
    let mut path = Vec::with_capacity(n);
    search.descend(root, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    CanonicalForm {
        n,
        certificate: best.certificate,
        labeling: best.labeling,
    }
}

struct Leaf {
    certificate: u128,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u32],
    best: Option<Leaf>,
}

impl Search<'_> {
    /// Returns `Some(depth)` to abandon every node deeper than `depth`.
    fn descend(&mut self, mut cells: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.adj, &mut cells);
        let n = self.adj.len();
        if cells.len() == n {
            let labeling: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let certificate = certificate(self.adj, &labeling);
            return match &self.best {
                Some(best) if certificate < best.certificate => None,
                Some(best) if certificate == best.certificate => Some(
                    best.path
                        .iter()
                        .zip(path.iter())
                        .take_while(|(a, b)| a == b)
                        .count(),
                ),
                _ => {
                    self.best = Some(Leaf {
                        certificate,
                        labeling,
                        path: path.clone(),
                    });
                    None
                }
            };
        }
        let target = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition");
        let cell = cells[target];
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(depth) = jump {
                if depth < path.len() {
                    return Some(depth);
                }
            }
        }
        None
    }
}

/// Splits cells by neighbour counts into each cell until the partition is equitable.
/// Sub-cells are ordered by increasing count, so the result is label-invariant.
fn refine(adj: &[u32], cells: &mut Vec<u32>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() == 1 {
                    continue;
                }
                let mut groups = [0u32; 33];
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    groups[(adj[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                if groups.iter().filter(|&&m| m != 0).count() > 1 {
                    let parts: Vec<u32> = groups.iter().copied().filter(|&m| m != 0).collect();
                    cells.splice(c..=c, parts);
                    continue 'restart;
                }
            }
        }
        return;
    }
}

fn certificate(adj: &[u32], labeling: &[usize]) -> u128 {
    let mut cert = 0u128;
    for j in 1..labeling.len() {
        let row = adj[labeling[j]];
        for &u in &labeling[..j] {
            cert = cert << 1 | u128::from(row >> u & 1);
        }
    }
    cert
}
