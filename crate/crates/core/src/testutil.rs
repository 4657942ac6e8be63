//! Helpers shared by the unit tests.

use crate::graph::Graph;
use rand::prelude::*;

/// Erdos-Renyi graph with edge probability `p`.
pub(crate) fn random_graph(rng: &mut impl Rng, order: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(order, &edges).unwrap()
}

/// Random tree on `order` vertices (random parent attachment), empty for 0.
pub(crate) fn random_tree(rng: &mut impl Rng, order: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..order {
        edges.push((rng.random_range(0..v), v));
    }
    Graph::from_edge_list(order, &edges).unwrap()
}
