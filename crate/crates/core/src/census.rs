//! Exhaustive small-graph censuses up to isomorphism.

use crate::graph::Graph;
use crate::iso::{invariant_key, is_isomorphic};
use std::collections::HashMap;

/// Generation caps: beyond these the counts explode and callers are
/// expected to pipe in externally generated streams instead.
pub const MAX_CONNECTED_ORDER: usize = 7;
pub const MAX_ALL_ORDER: usize = 6;

/// Isomorphism-class store: invariant buckets, exact check within a bucket.
#[derive(Default)]
pub(crate) struct IsoClasses {
    buckets: HashMap<(usize, usize, Vec<u32>), Vec<usize>>,
    pub(crate) graphs: Vec<Graph>,
}

impl IsoClasses {
    /// Insert unless an isomorphic member exists; true when new.
    pub(crate) fn insert(&mut self, g: Graph) -> bool {
        let key = invariant_key(&g);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&self.graphs[i], &g).is_some()) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    /// Index of the stored class isomorphic to `g`, if any.
    pub(crate) fn find(&self, g: &Graph) -> Option<usize> {
        let key = invariant_key(g);
        self.buckets
            .get(&key)?
            .iter()
            .copied()
            .find(|&i| is_isomorphic(&self.graphs[i], g).is_some())
    }
}

/// All connected graphs of the given order up to isomorphism, grown by
/// vertex extension: every connected graph has a non-cut vertex, so gluing
/// a new vertex onto every smaller class in all 2^k - 1 ways is complete.
pub fn enumerate_connected(order: usize) -> Vec<Graph> {
    assert!(
        order <= MAX_CONNECTED_ORDER,
        "connected census capped at order {MAX_CONNECTED_ORDER}"
    );
    if order == 0 {
        return Vec::new();
    }
    let mut classes = vec![Graph::empty(1).unwrap()];
    for k in 2..=order {
        let mut next = IsoClasses::default();
        for g in &classes {
            let base = g.edges();
            for attach in 1u32..1 << (k - 1) {
                let mut edges = base.clone();
                for u in 0..k - 1 {
                    if attach >> u & 1 == 1 {
                        edges.push((u, k - 1));
                    }
                }
                next.insert(Graph::from_edge_list(k, &edges).unwrap());
            }
        }
        classes = next.graphs;
    }
    classes
}

/// All graphs (connected or not) of the given order up to isomorphism, by
/// scanning every labeled graph.
pub fn enumerate_all(order: usize) -> Vec<Graph> {
    assert!(
        order <= MAX_ALL_ORDER,
        "full census capped at order {MAX_ALL_ORDER}"
    );
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect();
    let mut classes = IsoClasses::default();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        classes.insert(Graph::from_edge_list(order, &edges).unwrap());
    }
    classes.graphs
}
