//! Edge-move distance between graphs of equal order and size, distance
//! graphs over families of such graphs, and the constructions tying them
//! to set-family realizations.

use crate::census::IsoClasses;
use crate::graph::Graph;
use crate::iso::is_isomorphic;
use crate::realization::SetFamily;
use crate::Error;

/// A family of graphs sharing one order and one size, the domain on which
/// edge-move distance is defined.
#[derive(Debug, Clone)]
pub struct EmdInstance {
    graphs: Vec<Graph>,
}

impl EmdInstance {
    pub fn new(graphs: Vec<Graph>) -> Result<Self, Error> {
        if let Some(first) = graphs.first() {
            for g in &graphs[1..] {
                if g.order() != first.order() || g.size() != first.size() {
                    return Err(Error::EmdShapeMismatch {
                        order_g: first.order(),
                        size_g: first.size(),
                        order_h: g.order(),
                        size_h: g.size(),
                    });
                }
            }
        }
        Ok(EmdInstance { graphs })
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// Every graph reachable by deleting one edge and adding one non-edge of
/// G. Distinct (edge, non-edge) choices always give distinct labeled
/// results, so no dedup pass is needed; empty when G has no edge or no
/// non-edge.
pub fn single_edge_moves(g: &Graph) -> Vec<Graph> {
    let edges = g.edges();
    let mut non_edges = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if !g.has_edge(u, v) {
                non_edges.push((u, v));
            }
        }
    }
    let mut out = Vec::with_capacity(edges.len() * non_edges.len());
    for &(a, b) in &edges {
        for &(c, d) in &non_edges {
            let mut h = g.clone();
            h.remove_edge(a, b);
            h.add_edge(c, d);
            out.push(h);
        }
    }
    out
}

/// Fewest edge moves from G to (a graph isomorphic to) H; breadth-first
/// search over isomorphism classes. Defined only for equal order and
/// size, within which the move space is connected, so this terminates.
pub fn edge_move_distance(g: &Graph, h: &Graph) -> Result<usize, Error> {
    if g.order() != h.order() || g.size() != h.size() {
        return Err(Error::EmdShapeMismatch {
            order_g: g.order(),
            size_g: g.size(),
            order_h: h.order(),
            size_h: h.size(),
        });
    }
    if is_isomorphic(g, h).is_some() {
        return Ok(0);
    }
    let mut classes = IsoClasses::default();
    classes.insert(g.clone());
    let mut frontier = vec![g.clone()];
    let mut dist = 0;
    loop {
        dist += 1;
        let mut next = Vec::new();
        for cur in &frontier {
            for mv in single_edge_moves(cur) {
                if is_isomorphic(&mv, h).is_some() {
                    return Ok(dist);
                }
                if classes.insert(mv.clone()) {
                    next.push(mv);
                }
            }
        }
        frontier = next;
        assert!(
            !frontier.is_empty(),
            "every equal-order equal-size pair is connected by edge moves"
        );
    }
}

/// The graph on the family's members with adjacency iff edge-move distance
/// one. Members must be pairwise non-isomorphic (they stand for
/// isomorphism classes).
pub fn distance_graph(instance: &EmdInstance) -> Result<Graph, Error> {
    let members = instance.graphs();
    let mut classes = IsoClasses::default();
    for (i, g) in members.iter().enumerate() {
        if !classes.insert(g.clone()) {
            let j = classes.find(g).expect("just matched an earlier member");
            return Err(Error::IsomorphicMembers(j, i));
        }
    }
    let mut out = Graph::empty(members.len())?;
    for (i, g) in members.iter().enumerate() {
        for mv in single_edge_moves(g) {
            match classes.find(&mv) {
                Some(j) if j != i => out.add_edge(i, j),
                _ => {}
            }
        }
    }
    Ok(out)
}

/// One graph per family member: a path p_0..p_2k, k one past the largest
/// ground element, plus the chords p_i p_{2k-i} for i in S_v. Every chord
/// index satisfies 1 <= i <= k-1, so chords never coincide with path
/// edges, and the members share order 2k+1 and size 2k+m.
pub fn jis_family_to_graphs(f: &SetFamily) -> EmdInstance {
    let max_elem = (0..f.len())
        .flat_map(|v| f.set(v))
        .max()
        .unwrap_or(0) as usize;
    let k = 1 + max_elem;
    let mut members = Vec::with_capacity(f.len());
    for v in 0..f.len() {
        let mut edges: Vec<(usize, usize)> = (0..2 * k).map(|i| (i, i + 1)).collect();
        for e in f.set(v) {
            let i = e as usize;
            debug_assert!((1..k).contains(&i));
            edges.push((i, 2 * k - i));
        }
        members.push(Graph::from_edge_list(2 * k + 1, &edges).expect("path plus chords"));
    }
    EmdInstance::new(members).expect("members share order and size by construction")
}

/// The n graphs on n+2 vertices: Q_1..Q_{n-1} share a path 0..n plus the
/// edge (n-2, n), with a pendant vertex n+1 attached at i-1; Q_n moves
/// Q_1's edge (n-3, n-2) to (0, n-3), leaving a cycle 0..n-3 with a
/// pendant plus a disjoint triangle.
///
/// For n >= 6 the distance graph is K_n minus the edge between Q_{n-1}
/// and Q_n. At n = 5 exactly, Q_n's cycle component is itself a triangle,
/// so the move that cuts Q_{n-1}'s path and closes the stub already lands
/// on a graph isomorphic to Q_n; the distance graph degenerates to K_5.
pub fn q_family(n: usize) -> Result<EmdInstance, Error> {
    if n < 5 {
        return Err(Error::ParameterTooSmall { what: "q-family size", min: 5, got: n });
    }
    let base: Vec<(usize, usize)> = (0..n).map(|j| (j, j + 1)).chain([(n - 2, n)]).collect();
    let mut members = Vec::with_capacity(n);
    for i in 1..n {
        let mut edges = base.clone();
        edges.push((i - 1, n + 1));
        members.push(Graph::from_edge_list(n + 2, &edges)?);
    }
    let mut last: Vec<(usize, usize)> = base
        .iter()
        .copied()
        .filter(|&e| e != (n - 3, n - 2))
        .chain([(0, n + 1), (0, n - 3)])
        .collect();
    last.sort_unstable();
    members.push(Graph::from_edge_list(n + 2, &last)?);
    EmdInstance::new(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::realization::{realize_complete, realize_cycle};
    use crate::testutil::random_graph;
    use rand::prelude::*;

    #[test]
    fn k3_has_no_moves() {
        assert!(single_edge_moves(&named::complete(3).unwrap()).is_empty());
        assert!(single_edge_moves(&Graph::empty(4).unwrap()).is_empty());
    }

    #[test]
    fn p3_moves_enumerated() {
        let p3 = named::path(3).unwrap();
        let moves = single_edge_moves(&p3);
        assert_eq!(moves.len(), 2);
        let cherry = Graph::from_edge_list(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(moves.contains(&cherry));
        // a move can land on a graph isomorphic to the original
        assert!(moves.iter().any(|m| edge_move_distance(m, &p3).unwrap() == 0));
    }

    #[test]
    fn moves_preserve_shape_and_are_distinct() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.random_range(2..=7);
            let g = random_graph(&mut rng, n, 0.5);
            let moves = single_edge_moves(&g);
            let non_edges = g.order() * (g.order() - 1) / 2 - g.size();
            assert_eq!(moves.len(), g.size() * non_edges);
            for m in &moves {
                assert_eq!((m.order(), m.size()), (g.order(), g.size()));
                assert_ne!(m, &g);
            }
            for i in 0..moves.len() {
                for j in i + 1..moves.len() {
                    assert_ne!(moves[i], moves[j]);
                }
            }
        }
    }

    #[test]
    fn distance_p4_star_is_one() {
        let p4 = named::path(4).unwrap();
        let star = Graph::from_edge_list(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(edge_move_distance(&p4, &star).unwrap(), 1);
        assert_eq!(edge_move_distance(&star, &p4).unwrap(), 1);
        assert_eq!(edge_move_distance(&p4, &p4).unwrap(), 0);
    }

    #[test]
    fn distance_rejects_shape_mismatch() {
        let p3 = named::path(3).unwrap();
        let k3 = named::complete(3).unwrap();
        assert!(matches!(
            edge_move_distance(&p3, &k3),
            Err(Error::EmdShapeMismatch { .. })
        ));
    }

    #[test]
    fn q_family_shape_and_distance_graph() {
        for n in 5..=8 {
            let fam = q_family(n).unwrap();
            assert_eq!(fam.len(), n);
            for g in fam.graphs() {
                assert_eq!(g.order(), n + 2);
                assert_eq!(g.size(), n + 2);
            }
            for i in 0..n {
                for j in i + 1..n {
                    assert!(
                        is_isomorphic(&fam.graphs()[i], &fam.graphs()[j]).is_none(),
                        "Q_{} and Q_{} isomorphic at n={n}",
                        i + 1,
                        j + 1
                    );
                }
            }
        }

        let fam = q_family(6).unwrap();
        let d = distance_graph(&fam).unwrap();
        for i in 0..6 {
            for j in i + 1..6 {
                assert_eq!(d.has_edge(i, j), (i, j) != (4, 5), "pair ({i},{j})");
            }
        }
        // K_6 minus one edge
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if (u, v) != (0, 1) {
                    edges.push((u, v));
                }
            }
        }
        let k6_minus_e = Graph::from_edge_list(6, &edges).unwrap();
        assert!(is_isomorphic(&d, &k6_minus_e).is_some());
    }

    #[test]
    fn q_family_member_distances() {
        let fam = q_family(5).unwrap();
        assert_eq!(
            edge_move_distance(&fam.graphs()[0], &fam.graphs()[4]).unwrap(),
            1
        );
        // the n = 5 degeneration: Q_4 minus its (2,3) edge plus (0,2) is
        // K_3 plus a paw, isomorphic to Q_5
        assert_eq!(
            edge_move_distance(&fam.graphs()[3], &fam.graphs()[4]).unwrap(),
            1
        );
        let d5 = distance_graph(&fam).unwrap();
        assert_eq!(d5.size(), 5 * 4 / 2, "n = 5 distance graph is complete");

        // from n = 6 on the last pair really is two moves apart
        let fam = q_family(6).unwrap();
        assert_eq!(
            edge_move_distance(&fam.graphs()[4], &fam.graphs()[5]).unwrap(),
            2
        );
        assert!(matches!(q_family(4), Err(Error::ParameterTooSmall { .. })));
    }

    #[test]
    fn family_to_graphs_k2() {
        let f = SetFamily::new(1, 2, vec![vec![1], vec![2]]).unwrap();
        let inst = jis_family_to_graphs(&f);
        assert_eq!(inst.len(), 2);
        let g1 = &inst.graphs()[0];
        assert_eq!(g1.order(), 7);
        assert_eq!(g1.size(), 7);
        assert!(g1.has_edge(1, 5));
        assert!(inst.graphs()[1].has_edge(2, 4));
        assert_eq!(
            edge_move_distance(g1, &inst.graphs()[1]).unwrap(),
            1
        );
        let d = distance_graph(&inst).unwrap();
        assert!(d.has_edge(0, 1));
    }

    #[test]
    fn round_trip_cycle5() {
        let inst = jis_family_to_graphs(&realize_cycle(5).unwrap());
        let d = distance_graph(&inst).unwrap();
        assert!(is_isomorphic(&d, &named::cycle(5).unwrap()).is_some());
    }

    #[test]
    fn round_trip_complete3() {
        let inst = jis_family_to_graphs(&realize_complete(3).unwrap());
        let d = distance_graph(&inst).unwrap();
        assert!(is_isomorphic(&d, &named::complete(3).unwrap()).is_some());
    }

    #[test]
    fn distance_graph_rejects_isomorphic_members() {
        let p4 = named::path(4).unwrap();
        let relabeled = Graph::from_edge_list(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let inst = EmdInstance::new(vec![p4, relabeled]).unwrap();
        assert!(matches!(
            distance_graph(&inst),
            Err(Error::IsomorphicMembers(0, 1))
        ));

        let single = EmdInstance::new(vec![named::cycle(4).unwrap()]).unwrap();
        assert_eq!(distance_graph(&single).unwrap().order(), 1);
    }

    #[test]
    fn instance_shape_validation() {
        let p3 = named::path(3).unwrap();
        let k3 = named::complete(3).unwrap();
        assert!(matches!(
            EmdInstance::new(vec![p3, k3]),
            Err(Error::EmdShapeMismatch { .. })
        ));
        assert!(EmdInstance::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn metric_axioms_on_random_pools() {
        let mut rng = StdRng::seed_from_u64(61);
        let mut pools = 0;
        while pools < 6 {
            let n = rng.random_range(4..=6);
            let a = random_graph(&mut rng, n, 0.5);
            if a.size() == 0 || a.size() == n * (n - 1) / 2 {
                continue;
            }
            // resample until shapes match
            let mut b = random_graph(&mut rng, n, 0.5);
            let mut c = random_graph(&mut rng, n, 0.5);
            for _ in 0..200 {
                if b.size() == a.size() {
                    break;
                }
                b = random_graph(&mut rng, n, 0.5);
            }
            for _ in 0..200 {
                if c.size() == a.size() {
                    break;
                }
                c = random_graph(&mut rng, n, 0.5);
            }
            if b.size() != a.size() || c.size() != a.size() {
                continue;
            }
            pools += 1;
            let dab = edge_move_distance(&a, &b).unwrap();
            let dba = edge_move_distance(&b, &a).unwrap();
            let dac = edge_move_distance(&a, &c).unwrap();
            let dbc = edge_move_distance(&b, &c).unwrap();
            assert_eq!(dab, dba);
            assert_eq!(dab == 0, is_isomorphic(&a, &b).is_some());
            assert!(dac <= dab + dbc, "triangle violated: {dac} > {dab}+{dbc}");
        }
    }
}
