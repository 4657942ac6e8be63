//! Maximal clique enumeration, Bron-Kerbosch with pivoting over bit rows.

use crate::graph::{bits, full_mask, Graph, VertexId};

/// Every maximal clique exactly once, each ascending, list lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueList {
    pub cliques: Vec<Vec<VertexId>>,
}

impl CliqueList {
    pub(crate) fn masks(&self) -> Vec<u128> {
        self.cliques
            .iter()
            .map(|c| c.iter().fold(0u128, |m, &v| m | 1 << v))
            .collect()
    }
}

pub fn maximal_cliques(g: &Graph) -> CliqueList {
    let mut found = Vec::new();
    if g.order() > 0 {
        expand(g, 0, full_mask(g.order()), 0, &mut found);
    }
    let mut cliques: Vec<Vec<VertexId>> =
        found.into_iter().map(|m| bits(m).collect()).collect();
    cliques.sort();
    CliqueList { cliques }
}

// r: current clique, p: candidates, x: already-covered extensions.
fn expand(g: &Graph, r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // pivot maximizing eliminated candidates
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & g.row(u)).count_ones())
        .expect("p | x nonempty");
    for v in bits(p & !g.row(pivot)) {
        let nv = g.row(v);
        expand(g, r | 1 << v, p & nv, x & nv, out);
        p &= !(1u128 << v);
        x |= 1u128 << v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::random_graph;
    use rand::prelude::*;

    fn brute_force(g: &Graph) -> Vec<Vec<VertexId>> {
        let n = g.order();
        let mut out = Vec::new();
        for mask in 1u32..1 << n {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let is_clique = verts
                .iter()
                .all(|&u| verts.iter().all(|&v| u == v || g.has_edge(u, v)));
            if !is_clique {
                continue;
            }
            let maximal = (0..n)
                .filter(|&w| mask >> w & 1 == 0)
                .all(|w| !verts.iter().all(|&u| g.has_edge(u, w)));
            if maximal {
                out.push(verts);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn k5_minus_edge_has_two_4_cliques() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                if (u, v) != (3, 4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(5, &edges).unwrap();
        let cl = maximal_cliques(&g);
        assert_eq!(cl.cliques, vec![vec![0, 1, 2, 3], vec![0, 1, 2, 4]]);
    }

    #[test]
    fn cycle_cliques_are_edges() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let cl = maximal_cliques(&g);
        assert_eq!(
            cl.cliques,
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
    }

    #[test]
    fn delta_2_cliques_match_figure() {
        // chain vertices 0..3, apex 4
        let g = Graph::from_edge_list(
            5,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 4)],
        )
        .unwrap();
        let cl = maximal_cliques(&g);
        assert_eq!(
            cl.cliques,
            vec![vec![0, 1, 2], vec![0, 4], vec![1, 2, 3], vec![3, 4]]
        );
    }

    #[test]
    fn degenerate_graphs() {
        assert!(maximal_cliques(&Graph::empty(0).unwrap()).cliques.is_empty());
        assert_eq!(
            maximal_cliques(&Graph::empty(1).unwrap()).cliques,
            vec![vec![0]]
        );
        assert_eq!(
            maximal_cliques(&Graph::empty(2).unwrap()).cliques,
            vec![vec![0], vec![1]]
        );
    }

    #[test]
    fn agrees_with_subset_scan() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..60 {
            let n = rng.random_range(1..=8);
            let g = random_graph(&mut rng, n, 0.5);
            assert_eq!(maximal_cliques(&g).cliques, brute_force(&g));
        }
    }
}
