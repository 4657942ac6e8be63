//! Exact JIS decision: canonical backtracking search per connected
//! component, component assembly, an independent brute-force oracle, and
//! JIS-diameter over exhaustive realization enumeration.

use crate::filters::{run_filters, FilterVerdict, FilterViolation};
use crate::graph::{bits, Graph, VertexId};
use crate::realization::{
    combine_components, f_distance, Certificate, SetFamily, MAX_GROUND,
};
use crate::Error;
use serde::Serialize;
use std::time::Instant;

/// Caps for the decision search. `None` bounds default to the exact values
/// completeness requires (per component: m <= n-1 and N <= m+n-1 for
/// n >= 2, m = N = 1 for n = 1); tightening either below those values
/// trades NotJIS power for speed, and an exhausted search under tightened
/// bounds reports Inconclusive rather than NotJIS.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_m: Option<usize>,
    pub ground_bound: Option<usize>,
    pub node_limit: Option<u64>,
    /// Return the enumeration-least certificate. The sequential search
    /// always does; the flag pins the contract for any alternative
    /// scheduler.
    pub deterministic_certificate: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_m: None,
            ground_bound: None,
            node_limit: None,
            deterministic_certificate: true,
        }
    }
}

/// Accumulates search effort across calls; `nodes` counts accepted partial
/// placements.
#[derive(Debug)]
pub struct SearchCounters {
    pub nodes: u64,
    pub max_depth: usize,
    node_limit: Option<u64>,
}

impl SearchCounters {
    pub fn new(node_limit: Option<u64>) -> Self {
        SearchCounters { nodes: 0, max_depth: 0, node_limit }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// Every assignment in the canonical form was tried or pruned.
    Exhausted,
    /// The visitor requested a stop.
    VisitorStop,
    /// The node budget ran out; exhaustion was not established.
    BudgetStop,
}

struct Searcher<'a> {
    m: usize,
    ground: usize,
    order: &'a [VertexId],
    anchor: &'a [usize],
    adj: &'a [u128],
    masks: Vec<u64>,
    counters: &'a mut SearchCounters,
    visitor: &'a mut dyn FnMut(&SetFamily) -> bool,
}

impl Searcher<'_> {
    /// true to keep going, false to stop
    fn bump(&mut self, depth: usize) -> bool {
        self.counters.nodes += 1;
        if depth > self.counters.max_depth {
            self.counters.max_depth = depth;
        }
        self.counters.node_limit.is_none_or(|l| self.counters.nodes <= l)
    }

    fn place(&mut self, i: usize, max_used: usize) -> SearchStatus {
        if i == self.order.len() {
            let mut sets = vec![0u64; self.order.len()];
            for (pos, &v) in self.order.iter().enumerate() {
                sets[v] = self.masks[pos];
            }
            let family = SetFamily::from_masks(self.m, max_used, sets);
            return if (self.visitor)(&family) {
                SearchStatus::Exhausted
            } else {
                SearchStatus::VisitorStop
            };
        }
        // sets of adjacent vertices differ by one swap, so every candidate
        // is the anchor's set with one element replaced; a fresh element
        // must be the lowest unused one (canonical labeling)
        let sa = self.masks[self.anchor[i]];
        let y_cap = self.ground.min(max_used + 1);
        for x in bits(sa as u128) {
            let removed = sa ^ (1u64 << x);
            'cand: for y in 0..y_cap {
                if sa >> y & 1 == 1 {
                    continue;
                }
                let cand = removed | 1u64 << y;
                for j in 0..i {
                    let inter = (cand & self.masks[j]).count_ones() as usize;
                    let adjacent = self.adj[i] >> j & 1 == 1;
                    if inter == self.m || adjacent != (inter == self.m - 1) {
                        continue 'cand;
                    }
                }
                self.masks[i] = cand;
                if !self.bump(i + 1) {
                    return SearchStatus::BudgetStop;
                }
                match self.place(i + 1, max_used.max(y + 1)) {
                    SearchStatus::Exhausted => {}
                    stop => return stop,
                }
            }
        }
        SearchStatus::Exhausted
    }
}

/// Enumerate, in a fixed canonical order, every assignment of distinct
/// m-subsets of {1..ground} to the vertices of connected G with adjacency
/// iff intersection size m-1, up to relabeling of the ground set: vertices
/// are placed in BFS order from vertex 0, the first set is {1..m}, and
/// fresh elements enter ascending. The visitor sees each complete
/// realization (indexed by original vertex) and returns false to stop.
pub fn search_connected(
    g: &Graph,
    m: usize,
    ground: usize,
    counters: &mut SearchCounters,
    visitor: &mut dyn FnMut(&SetFamily) -> bool,
) -> SearchStatus {
    assert!(g.order() >= 1, "search requires at least one vertex");
    assert!(g.is_connected(), "search requires a connected graph");
    assert!(m >= 1, "set size must be positive");
    assert!(ground <= MAX_GROUND, "ground set exceeds representation limit");
    if m > ground {
        return SearchStatus::Exhausted;
    }
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut seen = 1u128;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for u in g.neighbors(v) {
            if seen >> u & 1 == 0 {
                seen |= 1 << u;
                order.push(u);
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    let mut anchor = vec![usize::MAX; n];
    let mut adj = vec![0u128; n];
    for i in 1..n {
        for j in 0..i {
            if g.has_edge(order[j], order[i]) {
                adj[i] |= 1 << j;
                if anchor[i] == usize::MAX {
                    anchor[i] = j;
                }
            }
        }
        debug_assert_ne!(anchor[i], usize::MAX);
    }
    let mut s = Searcher {
        m,
        ground,
        order: &order,
        anchor: &anchor,
        adj: &adj,
        masks: vec![0; n],
        counters,
        visitor,
    };
    s.masks[0] = (1u64 << m) - 1;
    if !s.bump(1) {
        return SearchStatus::BudgetStop;
    }
    s.place(1, m)
}

// ---------------------------------------------------------------------------
// decision

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MOutcome {
    Exhausted,
    Found,
    Budget,
}

/// One (component, m) search attempt.
#[derive(Debug, Clone, Serialize)]
pub struct MRecord {
    pub component: usize,
    pub m: usize,
    pub ground: usize,
    pub outcome: MOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub wall_ms: u64,
    pub per_m: Vec<MRecord>,
}

#[derive(Debug, Clone)]
pub enum NotJisReason {
    Filter(FilterViolation),
    SearchExhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InconclusiveReason {
    BudgetExhausted,
    /// max_m or ground_bound was tightened below what completeness needs,
    /// so exhaustion proves nothing.
    BoundsCapped,
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Jis(Certificate),
    NotJis(NotJisReason),
    Inconclusive(InconclusiveReason),
}

#[derive(Debug, Clone)]
pub struct Decision {
    pub outcome: Outcome,
    pub stats: SearchStats,
}

impl Decision {
    pub fn is_jis(&self) -> bool {
        matches!(self.outcome, Outcome::Jis(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::Jis(cert) => Some(cert),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let stats = serde_json::to_value(&self.stats).expect("stats serialize");
        match &self.outcome {
            Outcome::Jis(cert) => serde_json::json!({
                "outcome": "jis",
                "certificate": cert,
                "stats": stats,
            }),
            Outcome::NotJis(NotJisReason::Filter(v)) => serde_json::json!({
                "outcome": "not_jis",
                "reason": "filter_violation",
                "violation": v,
                "stats": stats,
            }),
            Outcome::NotJis(NotJisReason::SearchExhausted) => serde_json::json!({
                "outcome": "not_jis",
                "reason": "search_exhausted",
                "stats": stats,
            }),
            Outcome::Inconclusive(reason) => serde_json::json!({
                "outcome": "inconclusive",
                "reason": match reason {
                    InconclusiveReason::BudgetExhausted => "budget_exhausted",
                    InconclusiveReason::BoundsCapped => "bounds_capped",
                },
                "stats": stats,
            }),
        }
    }
}

fn make_stats(start: Instant, counters: &SearchCounters, per_m: Vec<MRecord>) -> SearchStats {
    SearchStats {
        nodes: counters.nodes,
        max_depth: counters.max_depth,
        wall_ms: start.elapsed().as_millis() as u64,
        per_m,
    }
}

/// Decide JIS membership exactly. Filters run first (a violation is a
/// proof); otherwise each connected component is searched with ascending m
/// and the component realizations are assembled into one certificate,
/// re-verified before return. NotJIS(SearchExhausted) is claimed only when
/// every required (m, ground) level was fully exhausted; budget or bound
/// caps yield Inconclusive, never a wrong verdict.
pub fn decide_jis(g: &Graph, cfg: &SearchConfig) -> Decision {
    let start = Instant::now();
    let mut counters = SearchCounters::new(cfg.node_limit);
    let mut per_m: Vec<MRecord> = Vec::new();

    if g.order() == 0 {
        let cert = Certificate::checked(g, SetFamily::empty())
            .expect("the empty family realizes the empty graph");
        return Decision {
            outcome: Outcome::Jis(cert),
            stats: make_stats(start, &counters, per_m),
        };
    }
    if let FilterVerdict::Violation(v) = run_filters(g) {
        return Decision {
            outcome: Outcome::NotJis(NotJisReason::Filter(v)),
            stats: make_stats(start, &counters, per_m),
        };
    }

    let comps = g.connected_components();
    let mut parts: Vec<(Graph, SetFamily)> = Vec::new();
    for (ci, verts) in comps.iter().enumerate() {
        let cg = g.induced_subgraph(verts);
        let n_c = cg.order();
        let m_needed = if n_c == 1 { 1 } else { n_c - 1 };
        let m_hi = m_needed.min(cfg.max_m.unwrap_or(m_needed));
        let mut capped = m_hi < m_needed;
        let mut found: Option<SetFamily> = None;
        for m in 1..=m_hi {
            let ground_needed = m + n_c - 1;
            let ground = ground_needed
                .min(cfg.ground_bound.unwrap_or(ground_needed))
                .min(MAX_GROUND);
            if ground < ground_needed {
                capped = true;
            }
            let mut sol: Option<SetFamily> = None;
            let status = search_connected(&cg, m, ground, &mut counters, &mut |f| {
                sol = Some(f.clone());
                false
            });
            match status {
                SearchStatus::BudgetStop => {
                    per_m.push(MRecord { component: ci, m, ground, outcome: MOutcome::Budget });
                    return Decision {
                        outcome: Outcome::Inconclusive(InconclusiveReason::BudgetExhausted),
                        stats: make_stats(start, &counters, per_m),
                    };
                }
                SearchStatus::VisitorStop => {
                    per_m.push(MRecord { component: ci, m, ground, outcome: MOutcome::Found });
                    found = sol;
                    break;
                }
                SearchStatus::Exhausted => {
                    per_m.push(MRecord { component: ci, m, ground, outcome: MOutcome::Exhausted });
                }
            }
        }
        match found {
            Some(f) => parts.push((cg, f)),
            None => {
                let outcome = if capped {
                    Outcome::Inconclusive(InconclusiveReason::BoundsCapped)
                } else {
                    Outcome::NotJis(NotJisReason::SearchExhausted)
                };
                return Decision { outcome, stats: make_stats(start, &counters, per_m) };
            }
        }
    }

    let family = if parts.len() == 1 {
        parts.pop().expect("one part").1
    } else {
        let combined = combine_components(&parts).expect("verified parts combine soundly");
        // combine_components concatenates parts in component order;
        // reindex by original vertex
        let concat: Vec<VertexId> = comps.concat();
        let mut sets = vec![0u64; g.order()];
        for (pos, &v) in concat.iter().enumerate() {
            sets[v] = combined.mask(pos);
        }
        SetFamily::from_masks(combined.m(), combined.ground_size(), sets)
    };
    let cert = Certificate::checked(g, family)
        .expect("a family produced by the search must verify");
    Decision { outcome: Outcome::Jis(cert), stats: make_stats(start, &counters, per_m) }
}

// ---------------------------------------------------------------------------
// brute-force oracle

/// Independent cross-check for order <= 5: assign to vertices, in index
/// order, arbitrary m-subsets of {1..2n} for each m <= n, rejecting a
/// partial assignment only on a violated pair or duplicate set. No
/// filters, no canonical form, no connectivity order, no bound tightening;
/// completeness for N = 2n, m <= n is the point being cross-checked.
pub fn brute_force_oracle(g: &Graph) -> Result<Decision, Error> {
    let n = g.order();
    if n > 5 {
        return Err(Error::OracleOrder(n));
    }
    let start = Instant::now();
    let mut counters = SearchCounters::new(None);
    let mut per_m = Vec::new();
    if n == 0 {
        let cert = Certificate::checked(g, SetFamily::empty()).expect("empty graph");
        return Ok(Decision {
            outcome: Outcome::Jis(cert),
            stats: make_stats(start, &counters, per_m),
        });
    }
    let big_n = 2 * n;
    for m in 1..=n {
        let subsets: Vec<u64> = (1u64..1 << big_n)
            .filter(|s| s.count_ones() as usize == m)
            .collect();
        let mut chosen = vec![0u64; n];
        if oracle_assign(g, m, &subsets, &mut chosen, 0, &mut counters) {
            let family = SetFamily::from_masks(m, big_n, chosen);
            per_m.push(MRecord { component: 0, m, ground: big_n, outcome: MOutcome::Found });
            let cert = Certificate::checked(g, family)
                .expect("oracle assignment passed the same pair checks");
            return Ok(Decision {
                outcome: Outcome::Jis(cert),
                stats: make_stats(start, &counters, per_m),
            });
        }
        per_m.push(MRecord { component: 0, m, ground: big_n, outcome: MOutcome::Exhausted });
    }
    Ok(Decision {
        outcome: Outcome::NotJis(NotJisReason::SearchExhausted),
        stats: make_stats(start, &counters, per_m),
    })
}

fn oracle_assign(
    g: &Graph,
    m: usize,
    subsets: &[u64],
    chosen: &mut Vec<u64>,
    v: usize,
    counters: &mut SearchCounters,
) -> bool {
    if v == g.order() {
        return true;
    }
    'cand: for &s in subsets {
        for (j, &t) in chosen.iter().enumerate().take(v) {
            let inter = (s & t).count_ones() as usize;
            if inter == m || g.has_edge(j, v) != (inter == m - 1) {
                continue 'cand;
            }
        }
        chosen[v] = s;
        counters.nodes += 1;
        if v + 1 > counters.max_depth {
            counters.max_depth = v + 1;
        }
        if oracle_assign(g, m, subsets, chosen, v + 1, counters) {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// JIS-diameter

/// Least d_F(pair) over all realizations, with one family attaining it.
#[derive(Debug, Clone, Serialize)]
pub struct PairMinimum {
    pub pair: (VertexId, VertexId),
    pub distance: usize,
    pub family: SetFamily,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiameterResult {
    pub diameter: usize,
    pub witness: Option<(VertexId, VertexId)>,
    pub pairs: Vec<PairMinimum>,
}

/// max over vertex pairs of the min over realizations of d_F. Defined for
/// connected JIS graphs; the enumeration covers every realization up to
/// core-stripping and ground relabeling, both of which preserve all
/// pairwise differences, so the minima are exact.
pub fn jis_diameter(g: &Graph, cfg: &SearchConfig) -> Result<DiameterResult, Error> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let decision = decide_jis(g, cfg);
    match decision.outcome {
        Outcome::Jis(_) => {}
        Outcome::NotJis(_) => return Err(Error::NotJis),
        Outcome::Inconclusive(_) => return Err(Error::Undecided),
    }
    let n = g.order();
    if n == 1 {
        return Ok(DiameterResult { diameter: 0, witness: None, pairs: Vec::new() });
    }
    let m_top = n - 1;
    if cfg.max_m.is_some_and(|c| c < m_top) {
        return Err(Error::Undecided);
    }
    let mut best: Vec<Option<(usize, SetFamily)>> = vec![None; n * n];
    let mut counters = SearchCounters::new(cfg.node_limit);
    for m in 1..=m_top {
        let ground = m + n - 1;
        if ground > MAX_GROUND || cfg.ground_bound.is_some_and(|c| c < ground) {
            return Err(Error::Undecided);
        }
        let status = search_connected(g, m, ground, &mut counters, &mut |f| {
            for v in 0..n {
                for w in v + 1..n {
                    let d = f_distance(f, v, w);
                    let slot = &mut best[v * n + w];
                    if slot.as_ref().is_none_or(|(old, _)| d < *old) {
                        *slot = Some((d, f.clone()));
                    }
                }
            }
            true
        });
        if status == SearchStatus::BudgetStop {
            return Err(Error::Undecided);
        }
    }
    let mut diameter = 0;
    let mut witness = None;
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 0..n {
        for w in v + 1..n {
            let (d, family) = best[v * n + w]
                .take()
                .expect("a JIS graph has at least one realization covering every pair");
            if d > diameter {
                diameter = d;
                witness = Some((v, w));
            }
            pairs.push(PairMinimum { pair: (v, w), distance: d, family });
        }
    }
    Ok(DiameterResult { diameter, witness, pairs })
}
