//! Counterexample filters: structural conditions every realizable graph
//! satisfies, checked on maximal cliques. A violation is a proof of
//! non-membership with an explicit witness; passing proves nothing.

use crate::cliques::maximal_cliques;
use crate::graph::{bits, Graph, VertexId};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FilterRule {
    MaxcliqueOverlap,
    TwoSharedCrossEdge,
    OneSharedDoubleEdge,
    OddParityCycle,
}

#[derive(Debug, Clone, Serialize)]
pub struct CliquePairWitness {
    pub clique_a: Vec<VertexId>,
    pub clique_b: Vec<VertexId>,
    pub shared: Vec<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_edge: Option<(VertexId, VertexId)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub double_neighbors: Option<(VertexId, (VertexId, VertexId))>,
}

/// A closed walk in the auxiliary graph whose vertices are maximal cliques
/// and whose edges join cliques sharing exactly two vertices.
#[derive(Debug, Clone, Serialize)]
pub struct ParityWitness {
    pub cycle: Vec<usize>,
    pub cliques: Vec<Vec<VertexId>>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum FilterWitness {
    CliquePair(CliquePairWitness),
    Parity(ParityWitness),
}

#[derive(Debug, Clone, Serialize)]
pub struct FilterViolation {
    pub rule: FilterRule,
    pub witness: FilterWitness,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum FilterVerdict {
    Pass,
    Violation(FilterViolation),
}

impl FilterVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, FilterVerdict::Pass)
    }
}

fn vertices(mask: u128) -> Vec<VertexId> {
    bits(mask).collect()
}

/// Pairwise conditions on maximal cliques: two maximal cliques share at
/// most two vertices; cliques sharing exactly two admit no edge between
/// their difference sets; cliques sharing exactly one admit at most one
/// cross neighbor per difference vertex.
pub fn check_maxclique_intersections(g: &Graph) -> FilterVerdict {
    let cliques = maximal_cliques(g);
    let masks = cliques.masks();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            let shared = masks[i] & masks[j];
            let pair = |cross_edge, double_neighbors| CliquePairWitness {
                clique_a: cliques.cliques[i].clone(),
                clique_b: cliques.cliques[j].clone(),
                shared: vertices(shared),
                cross_edge,
                double_neighbors,
            };
            match shared.count_ones() {
                3.. => {
                    return FilterVerdict::Violation(FilterViolation {
                        rule: FilterRule::MaxcliqueOverlap,
                        witness: FilterWitness::CliquePair(pair(None, None)),
                    });
                }
                2 => {
                    let a = masks[i] & !shared;
                    let b = masks[j] & !shared;
                    for u in bits(a) {
                        let hits = g.row(u) & b;
                        if hits != 0 {
                            let v = hits.trailing_zeros() as VertexId;
                            return FilterVerdict::Violation(FilterViolation {
                                rule: FilterRule::TwoSharedCrossEdge,
                                witness: FilterWitness::CliquePair(pair(Some((u, v)), None)),
                            });
                        }
                    }
                }
                1 => {
                    let a = masks[i] & !shared;
                    let b = masks[j] & !shared;
                    for (own, other) in [(a, b), (b, a)] {
                        for u in bits(own) {
                            let hits = g.row(u) & other;
                            if hits.count_ones() >= 2 {
                                let mut it = bits(hits);
                                let n1 = it.next().unwrap();
                                let n2 = it.next().unwrap();
                                return FilterVerdict::Violation(FilterViolation {
                                    rule: FilterRule::OneSharedDoubleEdge,
                                    witness: FilterWitness::CliquePair(pair(
                                        None,
                                        Some((u, (n1, n2))),
                                    )),
                                });
                            }
                        }
                    }
                }
                0 => {}
            }
        }
    }
    FilterVerdict::Pass
}

/// Two-color the auxiliary graph whose edges join maximal cliques sharing
/// exactly two vertices; an odd cycle there is a parity obstruction. The
/// witness lists the clique indices around the cycle.
pub fn check_parity(g: &Graph) -> FilterVerdict {
    let cliques = maximal_cliques(g);
    let masks = cliques.masks();
    let n = masks.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if (masks[i] & masks[j]).count_ones() == 2 {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if color[j] == u8::MAX {
                    color[j] = color[i] ^ 1;
                    parent[j] = i;
                    queue.push_back(j);
                } else if color[j] == color[i] {
                    let cycle = odd_cycle(&parent, i, j);
                    let witness = ParityWitness {
                        cliques: cycle.iter().map(|&k| cliques.cliques[k].clone()).collect(),
                        cycle,
                    };
                    return FilterVerdict::Violation(FilterViolation {
                        rule: FilterRule::OddParityCycle,
                        witness: FilterWitness::Parity(witness),
                    });
                }
            }
        }
    }
    FilterVerdict::Pass
}

/// Join the tree paths of two same-color BFS endpoints at their lowest
/// common ancestor; same color means equal path parity, so the cycle
/// through the edge (i, j) is odd.
fn odd_cycle(parent: &[usize], i: usize, j: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let pi = path_to_root(i);
    let pj = path_to_root(j);
    let mut k = 0;
    while k < pi.len().min(pj.len())
        && pi[pi.len() - 1 - k] == pj[pj.len() - 1 - k]
    {
        k += 1;
    }
    // pi[..=len-k] runs i -> lca, then lca -> j reversed along pj
    let mut cycle: Vec<usize> = pi[..=pi.len() - k].to_vec();
    cycle.extend(pj[..pj.len() - k].iter().rev());
    cycle
}

/// Run every filter; the first violation wins. Sound but incomplete: a
/// graph passing all filters may still fail realization.
pub fn run_filters(g: &Graph) -> FilterVerdict {
    let verdict = check_maxclique_intersections(g);
    if !verdict.is_pass() {
        return verdict;
    }
    check_parity(g)
}
