//! Bit-packed simple graphs on up to 128 vertices.

use crate::Error;

pub type VertexId = usize;

/// Hard cap imposed by the per-vertex `u128` adjacency rows.
pub const MAX_ORDER: usize = 128;

/// A finite simple graph. Row `v` has bit `w` set iff `v ~ w`; the relation
/// stays symmetric and irreflexive because all construction goes through
/// `add_edge`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<u128>,
}

/// One step of the 2-core peeling: the vertex removed and the neighbor it
/// still had at removal time (`None` for degree 0). Indices refer to the
/// original graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Removal {
    pub vertex: VertexId,
    pub neighbor: Option<VertexId>,
}

/// Result of peeling to minimum degree 2. `core` is the induced subgraph on
/// `core_vertices` (ascending original indices, relabeled by position).
pub struct TwoCore {
    pub core: Graph,
    pub core_vertices: Vec<VertexId>,
    pub removals: Vec<Removal>,
}

impl Graph {
    pub fn empty(order: usize) -> Result<Self, Error> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    pub fn from_edge_list(order: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Neighbor bitmask of `v`.
    pub fn row(&self, v: VertexId) -> u128 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        bits(self.rows[v])
    }

    /// Edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.rows[u] |= 1u128 << v;
        self.rows[v] |= 1u128 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        self.rows[u] &= !(1u128 << v);
        self.rows[v] &= !(1u128 << u);
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// least vertex. The empty graph has no components.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = 0u128;
        let mut blocks = Vec::new();
        for start in 0..self.order {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u128 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u128;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            blocks.push(bits(comp).collect());
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Induced subgraph on `vertices`, which must be ascending and in range;
    /// vertex i of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(vertices.iter().all(|&v| v < self.order));
        let mut g = Graph {
            order: vertices.len(),
            rows: vec![0; vertices.len()],
        };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Peel vertices of degree < 2, lowest index first, until none remain.
    pub fn two_core(&self) -> TwoCore {
        let mut alive = full_mask(self.order);
        let mut removals = Vec::new();
        'peel: loop {
            for v in bits(alive) {
                let nbrs = self.rows[v] & alive;
                if nbrs.count_ones() < 2 {
                    removals.push(Removal {
                        vertex: v,
                        neighbor: bits(nbrs).next(),
                    });
                    alive &= !(1u128 << v);
                    continue 'peel;
                }
            }
            break;
        }
        let core_vertices: Vec<VertexId> = bits(alive).collect();
        TwoCore {
            core: self.induced_subgraph(&core_vertices),
            core_vertices,
            removals,
        }
    }

    /// Cartesian product; vertex (x, y) gets index x * other.order + y.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph, Error> {
        let mut g = Graph::empty(self.order * other.order)?;
        let idx = |x: usize, y: usize| x * other.order + y;
        for x in 0..self.order {
            for y in 0..other.order {
                for y2 in other.neighbors(y) {
                    if y2 > y {
                        g.add_edge(idx(x, y), idx(x, y2));
                    }
                }
                for x2 in self.neighbors(x) {
                    if x2 > x {
                        g.add_edge(idx(x, y), idx(x2, y));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are re-indexed after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, Error> {
        let mut g = Graph::empty(self.order + other.order)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.order + u, self.order + v);
        }
        Ok(g)
    }

    /// Text form: first line `n m`, then one `u v` line per edge.
    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{} {}\n", self.order, self.size());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, Error> {
        let fail = |line: usize, reason: &str| Error::EdgeList {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| fail(1, "missing `n m` header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n, m] = fields[..] else {
            return Err(fail(1, "header must be `n m`"));
        };
        let n: usize = n.parse().map_err(|_| fail(1, "bad vertex count"))?;
        let m: usize = m.parse().map_err(|_| fail(1, "bad edge count"))?;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut g = Graph::empty(n)?;
        let mut read = 0;
        for (i, line) in lines {
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            if read == m {
                return Err(fail(lineno, "more edge lines than the header announced"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = fields[..] else {
                return Err(fail(lineno, "edge line must be `u v`"));
            };
            let u: usize = u.parse().map_err(|_| fail(lineno, "bad endpoint"))?;
            let v: usize = v.parse().map_err(|_| fail(lineno, "bad endpoint"))?;
            if u >= n || v >= n {
                return Err(fail(lineno, "endpoint out of range"));
            }
            if u == v {
                return Err(fail(lineno, "self-loop"));
            }
            g.add_edge(u, v);
            read += 1;
        }
        if read < m {
            return Err(fail(
                text.lines().count(),
                "fewer edge lines than the header announced",
            ));
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

/// Iterate set bit positions, ascending.
pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Mask with the low `order` bits set.
pub(crate) fn full_mask(order: usize) -> u128 {
    debug_assert!(order <= MAX_ORDER);
    if order == MAX_ORDER {
        !0
    } else {
        (1u128 << order) - 1
    }
}
