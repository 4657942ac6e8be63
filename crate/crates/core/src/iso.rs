//! Graph isomorphism for small graphs: iterated neighborhood refinement to
//! screen, backtracking over color classes to decide.

use crate::graph::{Graph, VertexId};

/// Isomorphism-invariant fingerprint for bucketing candidates before the
/// exact check: order, size, and the sorted stable refinement colors.
pub fn invariant_key(g: &Graph) -> (usize, usize, Vec<u32>) {
    let mut colors = refine(&[g])[0].clone();
    colors.sort_unstable();
    (g.order(), g.size(), colors)
}

/// Vertex bijection `map` with `map[v]` in H for v in G, preserving both
/// adjacency and non-adjacency; `None` if no isomorphism exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<VertexId>> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    // joint refinement keeps color ids comparable across the two graphs
    let colors = refine(&[g, h]);
    let (cg, ch) = (&colors[0], &colors[1]);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }

    // candidates per G vertex: same-color H vertices
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| ch[w] == cg[v]).collect())
        .collect();
    // assign most-constrained vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), v));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        candidates: &[Vec<usize>],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&gv) = order.get(depth) else {
            return true;
        };
        for &hv in &candidates[gv] {
            if used[hv] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&gu| g.has_edge(gu, gv) == h.has_edge(map[gu], hv));
            if !consistent {
                continue;
            }
            map[gv] = hv;
            used[hv] = true;
            if assign(g, h, order, candidates, depth + 1, map, used) {
                return true;
            }
            used[hv] = false;
        }
        false
    }
    if assign(g, h, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Refine all graphs against a shared signature space. Initial color is the
/// rank of (degree, triangle count); each round re-ranks (color, sorted
/// neighbor colors) until the number of distinct colors stops growing.
fn refine(graphs: &[&Graph]) -> Vec<Vec<u32>> {
    let seeds: Vec<Vec<(usize, usize)>> = graphs
        .iter()
        .map(|g| {
            (0..g.order())
                .map(|v| {
                    let tri: usize = g
                        .neighbors(v)
                        .map(|u| (g.row(u) & g.row(v)).count_ones() as usize)
                        .sum();
                    (g.degree(v), tri / 2)
                })
                .collect()
        })
        .collect();
    let mut pool: Vec<(usize, usize)> = seeds.iter().flatten().copied().collect();
    pool.sort_unstable();
    pool.dedup();
    let mut colors: Vec<Vec<u32>> = seeds
        .iter()
        .map(|s| {
            s.iter()
                .map(|x| pool.binary_search(x).unwrap() as u32)
                .collect()
        })
        .collect();
    let mut distinct = pool.len();
    loop {
        let sigs: Vec<Vec<(u32, Vec<u32>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, c)| {
                (0..g.order())
                    .map(|v| {
                        let mut nc: Vec<u32> = g.neighbors(v).map(|u| c[u]).collect();
                        nc.sort_unstable();
                        (c[v], nc)
                    })
                    .collect()
            })
            .collect();
        let mut pool: Vec<&(u32, Vec<u32>)> = sigs.iter().flatten().collect();
        pool.sort_unstable();
        pool.dedup();
        if pool.len() == distinct {
            return colors;
        }
        distinct = pool.len();
        colors = sigs
            .iter()
            .map(|s| {
                s.iter()
                    .map(|x| pool.binary_search(&x).unwrap() as u32)
                    .collect()
            })
            .collect();
    }
}
