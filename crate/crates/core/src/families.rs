//! Named graphs and the extremal families of the gap and ratio bounds.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

/// The star `K_{1,leaves}` with center `0`.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

/// Hub `0` adjacent to a pendant vertex `1` and to the first vertex of each of `k`
/// disjoint triangles `{2+3j, 3+3j, 4+3j}`. Removing the hub leaves `k` triangles and
/// one isolated vertex. `n = 3k + 2`.
pub fn triangle_star(k: usize) -> Graph {
    assert!(k >= 1, "triangle-star needs k >= 1");
    let mut edges = vec![(0, 1)];
    for j in 0..k {
        let a = 2 + 3 * j;
        edges.extend([(0, a), (a, a + 1), (a, a + 2), (a + 1, a + 2)]);
    }
    Graph::new(3 * k + 2, edges).unwrap()
}

/// `K_2` on `{0, 1}` and `K_3` on `{2, 3, 4}` joined by the single edge `1-2`.
pub fn k2_k3_bridged() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
}

/// The two minimal 5-vertex equality graphs: `C_5` and bridged `K_2 + K_3`.
pub fn equality_small() -> Vec<Graph> {
    vec![cycle(5), k2_k3_bridged()]
}

/// `k` vertex-disjoint triangles.
pub fn disjoint_triangles(k: usize) -> Graph {
    assert!(k >= 1, "need at least one triangle");
    let edges = (0..k).flat_map(|j| {
        let a = 3 * j;
        [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
    });
    Graph::new(3 * k, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{components, VertexSet};

    #[test]
    fn triangle_star_shape() {
        for k in 1..=6 {
            let g = triangle_star(k);
            assert_eq!(g.n(), 3 * k + 2);
            assert!(g.is_connected());
            let p = components(&g, &VertexSet::within(&g, [0]).unwrap());
            assert_eq!(p.components.len(), k + 1);
            assert_eq!(p.isolated, 1);
            let triangles = p
                .components
                .iter()
                .filter(|c| c.len() == 3 && g.induced(c).edge_count() == 3)
                .count();
            assert_eq!(triangles, k);
        }
    }

    #[test]
    fn small_members() {
        let members = equality_small();
        assert_eq!(members.len(), 2);
        assert!(members.iter().all(|g| g.n() == 5 && g.is_connected()));
    }

    #[test]
    fn disjoint_triangles_shape() {
        let g = disjoint_triangles(4);
        assert_eq!(g.n(), 12);
        assert_eq!(components(&g, &VertexSet::empty()).components.len(), 4);
    }
}
