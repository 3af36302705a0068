//! Exhaustive reference computations for small graphs, executable checks of
//! the structural facts about s-t min cuts that the Xist sweep relies on, and
//! a seeded random-graph property suite built from both.
//!
//! Nothing here touches the Xist code path: enumeration works on bitmasks, and
//! the checkers only call the flow module.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cuts::{crossing_weight, xcut_value, CutKind, CutResult};
use crate::error::{Error, Result};
use crate::flow::{st_min_cut, FlowNetwork};
use crate::graph::{build_graph, VertexSet, WeightedGraph};
use crate::sweep::{xist, xvst_basic};

/// Largest graph the enumeration routines accept.
pub const MAX_ENUMERATION_N: usize = 16;

/// Values closer than this (relative to their magnitude) count as equal.
pub const VALUE_TOL: f64 = 1e-9;

pub fn same_value(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= VALUE_TOL * a.abs().max(b.abs()).max(1.0)
}

fn check_size(g: &WeightedGraph) -> Result<()> {
    if g.n() > MAX_ENUMERATION_N {
        return Err(Error::TooLarge {
            n: g.n(),
            max: MAX_ENUMERATION_N,
        });
    }
    Ok(())
}

fn mask_cut(g: &WeightedGraph, mask: u64) -> f64 {
    g.edges()
        .iter()
        .filter(|e| (mask >> e.u & 1) != (mask >> e.v & 1))
        .map(|e| e.weight)
        .sum()
}

fn mask_value(g: &WeightedGraph, kind: CutKind, mask: u64, degrees: &[f64]) -> f64 {
    let n = g.n();
    let size = mask.count_ones() as usize;
    let (mut vol_s, mut vol_c) = (0.0, 0.0);
    for (v, d) in degrees.iter().enumerate() {
        if mask >> v & 1 == 1 {
            vol_s += d;
        } else {
            vol_c += d;
        }
    }
    let bal = kind.balance_from((size, n - size), (vol_s, vol_c));
    if bal > 0.0 {
        mask_cut(g, mask) / bal
    } else {
        f64::INFINITY
    }
}

/// Global minimum of `XC_S(G)` over every proper subset containing vertex 0.
///
/// Ties go to the smallest bitmask.
pub fn exact_xcut(g: &WeightedGraph, kind: CutKind) -> Result<CutResult> {
    check_size(g)?;
    let n = g.n();
    if n < 2 {
        return Err(Error::SubsetTooSmall(n));
    }
    let full = (1u64 << n) - 1;
    let degrees = g.degrees();
    let mut best = (f64::INFINITY, 1u64);
    for mask in (1..full).step_by(2) {
        let value = mask_value(g, kind, mask, degrees);
        if value < best.0 {
            best = (value, mask);
        }
    }
    CutResult::evaluate(g, kind, VertexSet::from_mask(n, best.1))
}

/// Every minimum s-t cut side (containing `s`, not `t`), smallest mask first.
pub fn enumerate_st_mincuts(
    g: &WeightedGraph,
    s: usize,
    t: usize,
) -> Result<(f64, Vec<VertexSet>)> {
    check_size(g)?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameVertex(s));
    }
    let n = g.n();
    let mut best = f64::INFINITY;
    let mut masks: Vec<(u64, f64)> = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask >> s & 1 == 0 || mask >> t & 1 == 1 {
            continue;
        }
        let w = mask_cut(g, mask);
        if w < best {
            best = w;
        }
        if same_value(w, best) {
            masks.push((mask, w));
        }
    }
    let sets = masks
        .into_iter()
        .filter(|&(_, w)| same_value(w, best))
        .map(|(m, _)| VertexSet::from_mask(n, m))
        .collect();
    Ok((best, sets))
}

/// Best XCut value over all attaining s-t min cut sides.
pub fn best_st_mincut_xcut(g: &WeightedGraph, kind: CutKind, s: usize, t: usize) -> Result<f64> {
    let (_, sets) = enumerate_st_mincuts(g, s, t)?;
    let mut best = f64::INFINITY;
    for side in &sets {
        best = best.min(xcut_value(g, kind, side)?);
    }
    Ok(best)
}

fn distinct_pairs(seq: &[usize]) -> Result<()> {
    if let Some(w) = seq.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::PreconditionViolated(format!(
            "consecutive vertices must differ, got {} twice",
            w[0]
        )));
    }
    Ok(())
}

/// `c(v_1, v_k) >= min_i c(v_i, v_{i+1})` for s-t min cut values `c`.
pub fn check_path_inequality(g: &WeightedGraph, sequence: &[usize]) -> Result<bool> {
    if sequence.len() < 2 {
        return Err(Error::PreconditionViolated(
            "need at least two vertices".into(),
        ));
    }
    distinct_pairs(sequence)?;
    let mut net = FlowNetwork::new(g);
    let first = sequence[0];
    let last = sequence[sequence.len() - 1];
    let mut min_link = f64::INFINITY;
    for w in sequence.windows(2) {
        min_link = min_link.min(net.min_cut(w[0], w[1])?.value);
    }
    if first == last {
        // c(v, v) is unbounded
        return Ok(true);
    }
    let direct = net.min_cut(first, last)?.value;
    Ok(direct >= min_link || same_value(direct, min_link))
}

/// The minimum of `c(s,t)`, `c(s,v)`, `c(v,t)` is attained at least twice.
pub fn check_three_cut_nonuniqueness(
    g: &WeightedGraph,
    s: usize,
    t: usize,
    v: usize,
) -> Result<bool> {
    if s == t || s == v || t == v {
        return Err(Error::PreconditionViolated(
            "s, t, v must be pairwise distinct".into(),
        ));
    }
    let mut net = FlowNetwork::new(g);
    let values = [
        net.min_cut(s, t)?.value,
        net.min_cut(s, v)?.value,
        net.min_cut(v, t)?.value,
    ];
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(values.iter().filter(|&&x| same_value(x, min)).count() >= 2)
}

/// For `u, v` on the source side of the s-t min cut `S_st`: for every u-v min
/// cut side `S_uv`, the set `S_st ∩ S_uv` (if `t ∉ S_uv`) or `S_st ∩ S̄_uv`
/// (if `t ∈ S_uv`) is itself a u-v min cut.
pub fn check_noncrossing(
    g: &WeightedGraph,
    s: usize,
    t: usize,
    u: usize,
    v: usize,
) -> Result<bool> {
    let all = [s, t, u, v];
    for (i, a) in all.iter().enumerate() {
        if all[i + 1..].contains(a) {
            return Err(Error::PreconditionViolated(
                "s, t, u, v must be distinct".into(),
            ));
        }
    }
    let s_st = st_min_cut(g, s, t)?.side_s;
    if !s_st.contains(u) || !s_st.contains(v) {
        return Err(Error::PreconditionViolated(
            "u and v must lie on the source side of the s-t min cut".into(),
        ));
    }
    let (value, sides) = enumerate_st_mincuts(g, u, v)?;
    Ok(sides.iter().all(|s_uv| {
        let candidate = if s_uv.contains(t) {
            s_st.intersection(&s_uv.complement())
        } else {
            s_st.intersection(s_uv)
        };
        same_value(crossing_weight(g, &candidate), value)
    }))
}

/// Number of distinct s-t min cut values over all pairs of `terminals`.
pub fn distinct_pair_values(g: &WeightedGraph, terminals: &[usize]) -> Result<usize> {
    let mut net = FlowNetwork::new(g);
    let mut values: Vec<f64> = Vec::new();
    for (a, &s) in terminals.iter().enumerate() {
        for &t in &terminals[a + 1..] {
            let c = net.min_cut(s, t)?.value;
            if !values.iter().any(|&x| same_value(x, c)) {
                values.push(c);
            }
        }
    }
    Ok(values.len())
}

/// G(n, p) with i.i.d. uniform weights in `[lo, hi)`, resampled until
/// connected.
pub fn random_connected_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    p: f64,
    lo: f64,
    hi: f64,
) -> WeightedGraph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v, rng.random_range(lo..hi)));
                }
            }
        }
        let g = build_graph(n, edges).expect("generated edges are valid");
        if g.is_connected() {
            return g;
        }
    }
}

/// Settings for [`property_suite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 100,
            min_n: 4,
            max_n: 12,
            edge_probability: 0.5,
            seed: 0,
        }
    }
}

/// Pass/fail tally of one property.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub trials: usize,
    pub properties: Vec<PropertyTally>,
}

impl SuiteReport {
    pub fn violations(&self) -> usize {
        self.properties.iter().map(|p| p.violations).sum()
    }
}

/// Runs every oracle comparison and structural check on seeded random graphs
/// with weights uniform in `[0.5, 1.5)`.
pub fn property_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.max_n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge {
            n: config.max_n,
            max: MAX_ENUMERATION_N,
        });
    }
    if config.min_n < 4 || config.min_n > config.max_n {
        return Err(Error::PreconditionViolated(format!(
            "vertex range {}..={} must start at 4 or more",
            config.min_n, config.max_n
        )));
    }
    let names = [
        "xist_equals_pairwise_enumeration",
        "xist_flow_calls",
        "distinct_pair_values",
        "exact_le_basic_le_xist",
        "path_inequality",
        "three_cut_nonuniqueness",
        "noncrossing",
    ];
    let mut tallies: Vec<PropertyTally> = names
        .iter()
        .map(|&name| PropertyTally {
            name,
            ..Default::default()
        })
        .collect();
    let mut record = |idx: usize, ok: bool| {
        tallies[idx].checked += 1;
        tallies[idx].violations += usize::from(!ok);
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.trials {
        let n = rng.random_range(config.min_n..=config.max_n);
        let g = random_connected_graph(&mut rng, n, config.edge_probability, 0.5, 1.5);
        let vloc = g.local_maxima();
        for kind in CutKind::BALANCED {
            let exact = exact_xcut(&g, kind)?.value;
            let basic = xvst_basic(&g, kind, None)?.result.value;
            if vloc.len() < 2 {
                record(3, exact <= basic || same_value(exact, basic));
                continue;
            }
            let run = xist(&g, kind)?;
            let mut pairwise = f64::INFINITY;
            for (a, &s) in vloc.iter().enumerate() {
                for &t in &vloc[a + 1..] {
                    pairwise = pairwise.min(best_st_mincut_xcut(&g, kind, s, t)?);
                }
            }
            record(0, same_value(run.result.value, pairwise));
            record(1, run.flow_calls == vloc.len() - 1);
            let chain = (exact <= basic || same_value(exact, basic))
                && (basic <= run.result.value || same_value(basic, run.result.value));
            record(3, chain);
        }
        if vloc.len() >= 2 {
            record(2, distinct_pair_values(&g, &vloc)? < vloc.len());
        }

        let len = rng.random_range(2..=n.min(6));
        let mut seq = Vec::with_capacity(len);
        while seq.len() < len {
            let v = rng.random_range(0..n);
            if seq.last() != Some(&v) {
                seq.push(v);
            }
        }
        record(4, check_path_inequality(&g, &seq)?);

        let [s, t, v] = distinct_vertices(&mut rng, n);
        record(5, check_three_cut_nonuniqueness(&g, s, t, v)?);

        if let Some((s, t, u, v)) = noncrossing_quadruple(&mut rng, &g) {
            record(6, check_noncrossing(&g, s, t, u, v)?);
        }
    }
    Ok(SuiteReport {
        trials: config.trials,
        properties: tallies,
    })
}

fn distinct_vertices<R: Rng, const K: usize>(rng: &mut R, n: usize) -> [usize; K] {
    let mut out = [0; K];
    let mut i = 0;
    while i < K {
        let v = rng.random_range(0..n);
        if !out[..i].contains(&v) {
            out[i] = v;
            i += 1;
        }
    }
    out
}

/// Random `(s, t, u, v)` with `u, v` on the source side of the s-t min cut.
pub fn noncrossing_quadruple<R: Rng>(
    rng: &mut R,
    g: &WeightedGraph,
) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    for _ in 0..32 {
        let [s, t] = distinct_vertices(rng, n);
        let side = st_min_cut(g, s, t).ok()?.side_s;
        let others: Vec<usize> = side.iter().filter(|&x| x != s).collect();
        if others.len() < 2 {
            continue;
        }
        let a = rng.random_range(0..others.len());
        let mut b = rng.random_range(0..others.len() - 1);
        if b >= a {
            b += 1;
        }
        return Some((s, t, others[a], others[b]));
    }
    None
}
