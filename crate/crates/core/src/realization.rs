//! Set-family certificates: families of m-subsets of {1..N} assigned to
//! vertices, with adjacency exactly at intersection size m-1.

use crate::graph::{bits, Graph, TwoCore, VertexId};
use crate::Error;
use serde::{Deserialize, Serialize};

/// Largest supported ground set. Keeps sets in one u64 and keeps the
/// edge-move path construction (order 2k+1 with k <= N+1) within the graph
/// order cap.
pub const MAX_GROUND: usize = 62;

/// One m-subset of {1..ground_size} per vertex. Element e is stored as mask
/// bit e-1. Families are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    m: usize,
    ground_size: usize,
    sets: Vec<u64>,
}

impl SetFamily {
    /// Validates shape: each set has exactly m distinct elements inside
    /// 1..=ground_size. Cross-set duplicates are allowed here; they are a
    /// verification failure, not a construction failure.
    pub fn new(m: usize, ground_size: usize, sets: Vec<Vec<u32>>) -> Result<Self, Error> {
        if ground_size > MAX_GROUND {
            return Err(Error::GroundTooLarge { size: ground_size, max: MAX_GROUND });
        }
        let mut masks = Vec::with_capacity(sets.len());
        for (v, set) in sets.iter().enumerate() {
            if set.len() != m {
                return Err(Error::Family(format!(
                    "set {v} has {} elements, expected m = {m}",
                    set.len()
                )));
            }
            let mut mask = 0u64;
            for &e in set {
                if e == 0 || e as usize > ground_size {
                    return Err(Error::Family(format!(
                        "set {v} contains {e}, outside 1..={ground_size}"
                    )));
                }
                mask |= 1 << (e - 1);
            }
            if mask.count_ones() as usize != m {
                return Err(Error::Family(format!("set {v} repeats an element")));
            }
            masks.push(mask);
        }
        Ok(SetFamily { m, ground_size, sets: masks })
    }

    pub fn empty() -> Self {
        SetFamily { m: 0, ground_size: 0, sets: Vec::new() }
    }

    pub(crate) fn from_masks(m: usize, ground_size: usize, sets: Vec<u64>) -> Self {
        debug_assert!(ground_size <= MAX_GROUND);
        debug_assert!(sets
            .iter()
            .all(|s| s.count_ones() as usize == m && s >> ground_size == 0));
        SetFamily { m, ground_size, sets }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Elements of S_v, ascending.
    pub fn set(&self, v: VertexId) -> Vec<u32> {
        bits(self.sets[v] as u128).map(|b| b as u32 + 1).collect()
    }

    pub fn sets(&self) -> Vec<Vec<u32>> {
        (0..self.len()).map(|v| self.set(v)).collect()
    }

    pub(crate) fn mask(&self, v: VertexId) -> u64 {
        self.sets[v]
    }
}

impl Serialize for SetFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            m: usize,
            ground_size: usize,
            sets: Vec<Vec<u32>>,
        }
        Wire { m: self.m, ground_size: self.ground_size, sets: self.sets() }.serialize(s)
    }
}

/// |S_v \ S_w|; a metric on the vertex set for verified families.
pub fn f_distance(f: &SetFamily, v: VertexId, w: VertexId) -> usize {
    (f.sets[v] & !f.sets[w]).count_ones() as usize
}

// ---------------------------------------------------------------------------
// verification

#[derive(Debug, Clone, Serialize)]
pub struct PairViolation {
    pub pair: (VertexId, VertexId),
    pub intersection: usize,
    pub adjacent: bool,
}

/// Full pairwise audit; `ok` iff no violations and no duplicate sets.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub violations: Vec<PairViolation>,
    pub duplicate_sets: Vec<(VertexId, VertexId)>,
}

/// Check that F realizes G: all sets distinct and, for every pair,
/// adjacency iff the sets share exactly m-1 elements. Reports every
/// violating pair, not just the first.
pub fn verify_realization(g: &Graph, f: &SetFamily) -> Result<VerifyReport, Error> {
    if f.len() != g.order() {
        return Err(Error::FamilyOrderMismatch { sets: f.len(), order: g.order() });
    }
    if f.m == 0 && g.order() >= 2 {
        return Err(Error::ZeroSetSize(g.order()));
    }
    let mut violations = Vec::new();
    let mut duplicate_sets = Vec::new();
    for v in 0..f.len() {
        for w in v + 1..f.len() {
            let inter = (f.sets[v] & f.sets[w]).count_ones() as usize;
            let adjacent = g.has_edge(v, w);
            if f.sets[v] == f.sets[w] {
                duplicate_sets.push((v, w));
            }
            if adjacent != (f.m >= 1 && inter == f.m - 1) {
                violations.push(PairViolation { pair: (v, w), intersection: inter, adjacent });
            }
        }
    }
    let ok = violations.is_empty() && duplicate_sets.is_empty();
    Ok(VerifyReport { ok, violations, duplicate_sets })
}

// ---------------------------------------------------------------------------
// normalization

/// Strip the global intersection from every set, then relabel the surviving
/// elements 1..N' in order of first appearance (vertices in index order,
/// elements ascending). Preserves every pairwise difference |S_v \ S_w|.
pub fn normalize(f: &SetFamily) -> SetFamily {
    if f.is_empty() {
        return f.clone();
    }
    let core = f.sets.iter().fold(!0u64, |acc, &s| acc & s);
    let stripped: Vec<u64> = f.sets.iter().map(|&s| s & !core).collect();
    let mut relabel = vec![0u32; f.ground_size + 1];
    let mut next = 0u32;
    let mut seen = 0u64;
    for &s in &stripped {
        for b in bits(s as u128) {
            if seen >> b & 1 == 0 {
                seen |= 1 << b;
                next += 1;
                relabel[b + 1] = next;
            }
        }
    }
    let sets: Vec<u64> = stripped
        .iter()
        .map(|&s| {
            bits(s as u128).fold(0u64, |acc, b| acc | 1 << (relabel[b + 1] - 1))
        })
        .collect();
    SetFamily {
        m: f.m - core.count_ones() as usize,
        ground_size: next as usize,
        sets,
    }
}

// ---------------------------------------------------------------------------
// constructive realizers

/// K_k as the 1-sets {1}, {2}, ..., {k}.
pub fn realize_complete(k: usize) -> Result<SetFamily, Error> {
    if k < 1 {
        return Err(Error::ParameterTooSmall { what: "complete order", min: 1, got: k });
    }
    if k > MAX_GROUND {
        return Err(Error::GroundTooLarge { size: k, max: MAX_GROUND });
    }
    Ok(SetFamily {
        m: 1,
        ground_size: k,
        sets: (0..k).map(|i| 1u64 << i).collect(),
    })
}

/// C_k as the 2-sets {1,2}, {2,3}, ..., {k,1}.
pub fn realize_cycle(k: usize) -> Result<SetFamily, Error> {
    if k < 3 {
        return Err(Error::ParameterTooSmall { what: "cycle length", min: 3, got: k });
    }
    if k > MAX_GROUND {
        return Err(Error::GroundTooLarge { size: k, max: MAX_GROUND });
    }
    Ok(SetFamily {
        m: 2,
        ground_size: k,
        sets: (0..k).map(|i| 1u64 << i | 1u64 << ((i + 1) % k)).collect(),
    })
}

/// Grow a realization by one vertex of degree <= 1. Every existing set
/// gains a fresh element a. With a neighbor v the new vertex gets S_v plus
/// a fresh b, making it adjacent to v alone; with none it gets S_0 minus
/// its least element plus two fresh elements, which undercuts the
/// intersection threshold against every set. On an empty family the new
/// vertex simply gets {1..m+1}.
pub fn extend_low_degree(f: &SetFamily, neighbor: Option<VertexId>) -> Result<SetFamily, Error> {
    if let Some(v) = neighbor {
        if v >= f.len() {
            return Err(Error::NeighborOutOfRange { neighbor: v, len: f.len() });
        }
    }
    if f.is_empty() {
        let m = f.m + 1;
        if m > MAX_GROUND {
            return Err(Error::GroundTooLarge { size: m, max: MAX_GROUND });
        }
        return Ok(SetFamily { m, ground_size: m, sets: vec![(1u64 << m) - 1] });
    }
    let fresh = if neighbor.is_some() { 2 } else { 3 };
    let ground_size = f.ground_size + fresh;
    if ground_size > MAX_GROUND {
        return Err(Error::GroundTooLarge { size: ground_size, max: MAX_GROUND });
    }
    let a = 1u64 << f.ground_size;
    let b = 1u64 << (f.ground_size + 1);
    let mut sets: Vec<u64> = f.sets.iter().map(|&s| s | a).collect();
    match neighbor {
        Some(v) => sets.push(f.sets[v] | b),
        None => {
            // any two distinct 1-sets meet in 0 = m-1 elements, so no
            // isolated vertex can join a family of empty sets
            if f.m == 0 {
                return Err(Error::Family(
                    "cannot add an isolated vertex to a family of empty sets".to_string(),
                ));
            }
            let c = 1u64 << (f.ground_size + 2);
            let least = 1u64 << f.sets[0].trailing_zeros();
            sets.push(f.sets[0] & !least | b | c);
        }
    }
    Ok(SetFamily { m: f.m + 1, ground_size, sets })
}

/// Rebuild a whole-graph realization from one of its 2-core by replaying
/// the peeling in reverse; the result is indexed by original vertices.
pub fn replay_removals(core_family: &SetFamily, tc: &TwoCore) -> Result<SetFamily, Error> {
    if core_family.len() != tc.core_vertices.len() {
        return Err(Error::FamilyOrderMismatch {
            sets: core_family.len(),
            order: tc.core_vertices.len(),
        });
    }
    let order = tc.core_vertices.len() + tc.removals.len();
    let mut pos: Vec<Option<usize>> = vec![None; order];
    for (i, &v) in tc.core_vertices.iter().enumerate() {
        pos[v] = Some(i);
    }
    let mut f = core_family.clone();
    for r in tc.removals.iter().rev() {
        // the recorded neighbor was alive after this removal, so it has
        // already been placed when we replay in reverse
        let anchor = match r.neighbor {
            Some(w) => Some(pos[w].ok_or_else(|| {
                Error::Family("removal record references a vertex not yet replayed".to_string())
            })?),
            None => None,
        };
        f = extend_low_degree(&f, anchor)?;
        pos[r.vertex] = Some(f.len() - 1);
    }
    let sets: Vec<u64> = (0..order)
        .map(|v| f.sets[pos[v].expect("every vertex is core or removed")])
        .collect();
    Ok(SetFamily { m: f.m, ground_size: f.ground_size, sets })
}

/// Realize a disjoint union from verified per-component realizations:
/// offset the ground sets apart, pad every family to the largest set size
/// with a prefix of that family's first set, and append one fresh tag
/// element per component. The result is re-verified against the union and
/// construction fails loudly if that audit fails.
pub fn combine_components(parts: &[(Graph, SetFamily)]) -> Result<SetFamily, Error> {
    if parts.is_empty() {
        return Err(Error::NoParts);
    }
    for (g, f) in parts {
        if f.len() != g.order() {
            return Err(Error::FamilyOrderMismatch { sets: f.len(), order: g.order() });
        }
    }
    // order-0 parts contribute nothing; order-1 parts realized with m = 0
    // are upgraded to {{1}} since the padding arithmetic needs m >= 1
    let fixed: Vec<(&Graph, SetFamily)> = parts
        .iter()
        .filter(|(g, _)| g.order() > 0)
        .map(|(g, f)| {
            if f.m == 0 && f.len() == 1 {
                (g, SetFamily { m: 1, ground_size: 1, sets: vec![1] })
            } else {
                (g, f.clone())
            }
        })
        .collect();
    if fixed.is_empty() {
        return Ok(SetFamily::empty());
    }

    let m1_idx = (0..fixed.len())
        .max_by_key(|&i| (fixed[i].1.m, std::cmp::Reverse(i)))
        .expect("nonempty");
    let m1 = fixed[m1_idx].1.m;
    let offsets: Vec<usize> = fixed
        .iter()
        .scan(0usize, |acc, (_, f)| {
            let off = *acc;
            *acc += f.ground_size;
            Some(off)
        })
        .collect();
    let total_ground: usize = fixed.iter().map(|(_, f)| f.ground_size).sum();
    let ground_size = total_ground + fixed.len();
    if ground_size > MAX_GROUND {
        return Err(Error::GroundTooLarge { size: ground_size, max: MAX_GROUND });
    }

    // ascending elements of F_1's first set, already offset
    let first_set = fixed[m1_idx].1.sets[0] << offsets[m1_idx];
    let mut sets = Vec::new();
    for (i, (_, f)) in fixed.iter().enumerate() {
        let pad: u64 = bits(first_set as u128)
            .take(m1 - f.m)
            .fold(0, |acc, b| acc | 1 << b);
        let tag = 1u64 << (total_ground + i);
        for &s in &f.sets {
            sets.push(s << offsets[i] | pad | tag);
        }
    }
    let combined = SetFamily { m: m1 + 1, ground_size, sets };

    let union = fixed
        .iter()
        .try_fold(Graph::empty(0)?, |acc, (g, _)| acc.disjoint_union(g))?;
    let report = verify_realization(&union, &combined)?;
    if !report.ok {
        return Err(Error::ConstructionUnsound(format!(
            "component padding broke {} pair(s), first: {:?}",
            report.violations.len() + report.duplicate_sets.len(),
            report
                .violations
                .first()
                .map(|v| v.pair)
                .or_else(|| report.duplicate_sets.first().copied()),
        )));
    }
    Ok(combined)
}

/// Realize the Cartesian product: T_(x,y) = S_x union S'_y with the second
/// ground set offset, indexed row-major to match `cartesian_product`.
pub fn product_realization(f: &SetFamily, g: &SetFamily) -> Result<SetFamily, Error> {
    let ground_size = f.ground_size + g.ground_size;
    if ground_size > MAX_GROUND {
        return Err(Error::GroundTooLarge { size: ground_size, max: MAX_GROUND });
    }
    let mut sets = Vec::with_capacity(f.len() * g.len());
    for x in 0..f.len() {
        for y in 0..g.len() {
            sets.push(f.sets[x] | g.sets[y] << f.ground_size);
        }
    }
    Ok(SetFamily { m: f.m + g.m, ground_size, sets })
}

// ---------------------------------------------------------------------------
// certificates

/// A family asserted to realize a graph of the given order. `verified` is
/// set only by `checked`, never by deserialization.
#[derive(Debug, Clone)]
pub struct Certificate {
    family: SetFamily,
    graph_order: usize,
    verified: bool,
}

#[derive(Serialize, Deserialize)]
struct CertificateWire {
    order: usize,
    m: usize,
    ground_size: usize,
    sets: Vec<Vec<u32>>,
}

impl Certificate {
    /// Issue a certificate only if the family verifies against the graph.
    pub fn checked(g: &Graph, family: SetFamily) -> Result<Certificate, Error> {
        let report = verify_realization(g, &family)?;
        if !report.ok {
            return Err(Error::ConstructionUnsound(format!(
                "{} pair violation(s), {} duplicate set(s)",
                report.violations.len(),
                report.duplicate_sets.len()
            )));
        }
        Ok(Certificate { family, graph_order: g.order(), verified: true })
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn graph_order(&self) -> usize {
        self.graph_order
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }

    /// Parse the interchange form; the result is unverified until checked
    /// against a graph.
    pub fn from_json(text: &str) -> Result<Certificate, Error> {
        let wire: CertificateWire = serde_json::from_str(text)
            .map_err(|e| Error::Family(format!("bad certificate JSON: {e}")))?;
        if wire.order != wire.sets.len() {
            return Err(Error::FamilyOrderMismatch { sets: wire.sets.len(), order: wire.order });
        }
        let family = SetFamily::new(wire.m, wire.ground_size, wire.sets)?;
        Ok(Certificate { family, graph_order: wire.order, verified: false })
    }
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CertificateWire {
            order: self.graph_order,
            m: self.family.m,
            ground_size: self.family.ground_size,
            sets: self.family.sets(),
        }
        .serialize(s)
    }
}
