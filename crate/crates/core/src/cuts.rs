//! Balanced cut functionals.
//!
//! `XC_S(G) = cut(S, S̄) / bal(S, S̄)` with the balancing terms
//!
//! | kind     | bal(S, S̄)              |
//! |----------|-------------------------|
//! | MinCut   | 1                       |
//! | RatioCut | \|S\| · \|S̄\|          |
//! | NCut     | vol(S) · vol(S̄)        |
//! | Cheeger  | min(vol(S), vol(S̄))    |
//!
//! The crossing weight counts every edge between `S` and `S̄` once. A zero
//! balancing term makes the value `+∞`, so such a partition never wins a
//! minimization.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CutKind {
    #[serde(rename = "mincut")]
    MinCut,
    #[serde(rename = "ratio")]
    RatioCut,
    #[serde(rename = "ncut")]
    NCut,
    #[serde(rename = "cheeger")]
    CheegerCut,
}

impl CutKind {
    pub const ALL: [CutKind; 4] = [
        CutKind::MinCut,
        CutKind::RatioCut,
        CutKind::NCut,
        CutKind::CheegerCut,
    ];

    /// The kinds with a partition-dependent balancing term.
    pub const BALANCED: [CutKind; 3] = [CutKind::RatioCut, CutKind::NCut, CutKind::CheegerCut];

    pub fn name(self) -> &'static str {
        match self {
            CutKind::MinCut => "mincut",
            CutKind::RatioCut => "ratio",
            CutKind::NCut => "ncut",
            CutKind::CheegerCut => "cheeger",
        }
    }

    /// Balancing term from the sizes and volumes of both sides.
    pub fn balance_from(self, size: (usize, usize), vol: (f64, f64)) -> f64 {
        match self {
            CutKind::MinCut => 1.0,
            CutKind::RatioCut => size.0 as f64 * size.1 as f64,
            CutKind::NCut => vol.0 * vol.1,
            CutKind::CheegerCut => vol.0.min(vol.1),
        }
    }
}

impl fmt::Display for CutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CutKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "mincut" | "min" => Ok(CutKind::MinCut),
            "ratio" | "ratiocut" | "rc" => Ok(CutKind::RatioCut),
            "ncut" | "normalized" => Ok(CutKind::NCut),
            "cheeger" | "cheegercut" | "cc" => Ok(CutKind::CheegerCut),
            other => Err(format!("unknown cut kind `{other}`")),
        }
    }
}

/// A partition scored under one functional.
#[derive(Debug, Clone, PartialEq)]
pub struct CutResult {
    pub kind: CutKind,
    /// `XC_S(G)`.
    pub value: f64,
    /// One side of the cut.
    pub partition: VertexSet,
    /// `value · bal(V, V) / vol(V)`.
    pub normalized_value: f64,
    /// Weight of the edges crossing the cut.
    pub cut_weight: f64,
}

impl CutResult {
    pub fn evaluate(g: &WeightedGraph, kind: CutKind, partition: VertexSet) -> Result<Self> {
        let cut_weight = cut_weight(g, &partition)?;
        let value = ratio(cut_weight, balance_unchecked(g, kind, &partition));
        Ok(CutResult {
            kind,
            value,
            normalized_value: normalize(value, normalization_factor(g, kind)),
            partition,
            cut_weight,
        })
    }
}

/// Crossing weight without validating the partition.
pub(crate) fn crossing_weight(g: &WeightedGraph, s: &VertexSet) -> f64 {
    g.edges()
        .iter()
        .filter(|e| s.contains(e.u) != s.contains(e.v))
        .map(|e| e.weight)
        .sum()
}

fn check_partition(g: &WeightedGraph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() || !s.is_proper() {
        return Err(Error::DegeneratePartition);
    }
    Ok(())
}

pub fn cut_weight(g: &WeightedGraph, s: &VertexSet) -> Result<f64> {
    check_partition(g, s)?;
    Ok(crossing_weight(g, s))
}

fn balance_unchecked(g: &WeightedGraph, kind: CutKind, s: &VertexSet) -> f64 {
    let vol_s = g.vol(s);
    let vol_c = g.vol(&s.complement());
    kind.balance_from((s.len(), g.n() - s.len()), (vol_s, vol_c))
}

pub fn balance(g: &WeightedGraph, kind: CutKind, s: &VertexSet) -> Result<f64> {
    check_partition(g, s)?;
    match balance_unchecked(g, kind, s) {
        b if b > 0.0 => Ok(b),
        _ => Err(Error::ZeroBalance),
    }
}

fn ratio(cut: f64, bal: f64) -> f64 {
    if bal > 0.0 {
        cut / bal
    } else {
        f64::INFINITY
    }
}

/// `XC_S(G)`; `+∞` when the balancing term vanishes.
pub fn xcut_value(g: &WeightedGraph, kind: CutKind, s: &VertexSet) -> Result<f64> {
    let cut = cut_weight(g, s)?;
    Ok(ratio(cut, balance_unchecked(g, kind, s)))
}

/// `bal(V, V) / Σ_{i,j} w_ij`, the factor that makes values scale-free.
pub fn normalization_factor(g: &WeightedGraph, kind: CutKind) -> f64 {
    let vol = g.volume();
    kind.balance_from((g.n(), g.n()), (vol, vol)) / vol
}

pub(crate) fn normalize(value: f64, factor: f64) -> f64 {
    if value == 0.0 {
        0.0
    } else if value.is_infinite() {
        f64::INFINITY
    } else {
        value * factor
    }
}

pub fn normalized_xcut_value(g: &WeightedGraph, kind: CutKind, s: &VertexSet) -> Result<f64> {
    Ok(normalize(
        xcut_value(g, kind, s)?,
        normalization_factor(g, kind),
    ))
}

/// `½ Σ_i XC_{T_i}(G)` over the parts of a k-way partition.
pub fn multiway_xcut_value(g: &WeightedGraph, kind: CutKind, parts: &[VertexSet]) -> Result<f64> {
    if parts.len() < 2 {
        return Err(Error::NotAPartition(format!(
            "need at least 2 parts, got {}",
            parts.len()
        )));
    }
    let mut covered = VertexSet::empty(g.n());
    for (i, p) in parts.iter().enumerate() {
        if p.universe() != g.n() {
            return Err(Error::NotAPartition(format!(
                "part {i} has the wrong universe"
            )));
        }
        if p.is_empty() {
            return Err(Error::NotAPartition(format!("part {i} is empty")));
        }
        if !covered.is_disjoint(p) {
            return Err(Error::NotAPartition(format!(
                "part {i} overlaps an earlier part"
            )));
        }
        covered = covered.union(p);
    }
    if covered.len() != g.n() {
        return Err(Error::NotAPartition(format!(
            "parts cover {} of {} vertices",
            covered.len(),
            g.n()
        )));
    }
    let mut total = 0.0;
    for p in parts {
        total += xcut_value(g, kind, p)?;
    }
    Ok(total / 2.0)
}
