//! Isomorphism-free generation of connected graphs.
//!
//! Every connected graph on `n + 1` vertices has a vertex whose removal leaves a
//! connected graph, so each level is produced by attaching a new vertex to a nonempty
//! subset of every graph of the previous level and rejecting isomorphic copies by
//! canonical certificate.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_from_masks, graph_from_certificate, MAX_CANON_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order served by [`enumerate_connected`]; bigger corpora come from graph6 files.
pub const ENUMERATION_CAP: usize = 8;

/// One representative per isomorphism class of connected graphs on `n` vertices,
/// `1 <= n <= 8`, in canonical-certificate order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(1..=ENUMERATION_CAP).contains(&n) {
        return Err(Error::UnsupportedSize {
            n,
            max: ENUMERATION_CAP,
            hint: "; ingest larger corpora from graph6 files",
        });
    }
    Ok(connected_graphs(n))
}

/// Same generator without the size cap. Runtime grows steeply: `n = 9` takes seconds,
/// `n = 10` is impractical.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_CANON_ORDER).contains(&n),
        "order must be in 1..=16"
    );
    let mut level: Vec<u128> = vec![0];
    for m in 1..n {
        level = extend_level(m, &level);
    }
    level
        .into_iter()
        .map(|c| graph_from_certificate(n, c))
        .collect()
}

/// Certificates of all connected graphs on `m + 1` vertices from those on `m`.
fn extend_level(m: usize, parents: &[u128]) -> Vec<u128> {
    let found = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, &parent| {
            let mut adj = vec![0u32; m + 1];
            for (u, v) in graph_from_certificate(m, parent).edges() {
                adj[*u] |= 1 << v;
                adj[*v] |= 1 << u;
            }
            for subset in 1u32..(1 << m) {
                let mut child = adj.clone();
                child[m] = subset;
                let mut rest = subset;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    child[v] |= 1 << m;
                }
                acc.insert(canonical_from_masks(&child).certificate);
            }
            acc
        })
        .reduce(HashSet::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            big.extend(small);
            big
        });
    let mut certs: Vec<u128> = found.into_iter().collect();
    certs.sort_unstable();
    certs
}

/// Every graph on `1..=max_n` vertices with at least one edge, built as a multiset of
/// connected components from `connected[k - 1]` (the connected graphs on `k` vertices).
pub fn unions_of_connected(connected: &[Vec<Graph>], max_n: usize) -> Vec<Graph> {
    assert!(
        connected.len() >= max_n,
        "need connected graphs for every order up to max_n"
    );
    // Components are chosen in nondecreasing (order, index) so each multiset appears once.
    fn build(
        connected: &[Vec<Graph>],
        remaining: usize,
        min_key: (usize, usize),
        current: &Graph,
        out: &mut Vec<Graph>,
    ) {
        if current.n() > 0 && current.edge_count() > 0 {
            out.push(current.clone());
        }
        for k in min_key.0..=remaining {
            let start = if k == min_key.0 { min_key.1 } else { 0 };
            for idx in start..connected[k - 1].len() {
                let next = current.disjoint_union(&connected[k - 1][idx]);
                build(connected, remaining - k, (k, idx), &next, out);
            }
        }
    }
    let mut out = Vec::new();
    build(connected, max_n, (1, 0), &Graph::empty(0), &mut out);
    out
}
