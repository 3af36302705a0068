//! Greedy k-way partitioning by repeated Xist cuts.
//!
//! Every cluster carries a pending split into two halves together with the
//! normalized cost of that split. Each round realizes the cheapest pending
//! split and computes fresh pending splits for both new clusters, until `k`
//! nonempty clusters exist.
//!
//! Slots are created on demand, so no slot is ever empty and the loop stops
//! exactly when `k` clusters exist.
//!
//! The cost of splitting a cluster `T` (restricted subgraph `G_T`) with an
//! Xist value `r` is `r · bal_{G_T}(T, T) / Σ_{i,j∈V} w_ij`, where the
//! denominator is taken over the whole input graph.

use crate::cuts::{multiway_xcut_value, CutKind, CutResult};
use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::sweep::{xvst_basic, Xist};

/// How the terminal set of each (sub)graph sweep is chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum Terminals {
    /// Local degree maxima; falls back to all pairs when there is only one.
    LocalMaxima,
    /// Every vertex, via the all-pairs sweep.
    All,
    /// A fixed vertex set of the input graph (e.g. intensity maxima of an
    /// image), intersected with each cluster. Clusters holding fewer than two
    /// of them fall back to all pairs.
    Fixed(VertexSet),
}

/// Outcome of a single cut of one (sub)graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCut {
    pub result: CutResult,
    pub flow_calls: usize,
    /// Number of terminals the sweep ran over (0 for the disconnected shortcut).
    pub terminals: usize,
    /// The all-pairs fallback was used.
    pub fell_back: bool,
}

/// Cut `g` once under the given terminal rule.
pub fn cut_with(g: &WeightedGraph, kind: CutKind, terminals: &Terminals) -> Result<SweepCut> {
    let fallback = || {
        xvst_basic(g, kind, None).map(|run| SweepCut {
            terminals: run.terminals.len(),
            result: run.result,
            flow_calls: run.flow_calls,
            fell_back: true,
        })
    };
    let run = match terminals {
        Terminals::All => return fallback(),
        Terminals::LocalMaxima => Xist::new(kind).run(g),
        Terminals::Fixed(set) if set.len() < 2 => return fallback(),
        Terminals::Fixed(set) => Xist::new(kind).run_on_subset(g, set),
    };
    match run {
        Ok(run) => Ok(SweepCut {
            terminals: run.terminals.len(),
            result: run.result,
            flow_calls: run.flow_calls,
            fell_back: false,
        }),
        Err(Error::DegenerateVloc) => fallback(),
        Err(e) => Err(e),
    }
}

/// One realized split.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiStep {
    /// Slot whose pending split was realized.
    pub slot: usize,
    /// Its recorded cost (minimal among all pending costs).
    pub cost: f64,
    /// Sizes of the two clusters produced.
    pub sizes: (usize, usize),
    /// Pending costs computed for the two new clusters.
    pub sub_costs: [f64; 2],
    /// Nonempty clusters after the step, ordered by smallest vertex.
    pub clusters: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiXistRun {
    /// Clusters ordered by smallest vertex; cluster `i` has label `i`.
    pub clusters: Vec<VertexSet>,
    pub labels: Vec<usize>,
    /// Multiway XCut value of the clustering.
    pub value: f64,
    pub steps: Vec<MultiStep>,
    pub flow_calls: usize,
}

#[derive(Debug, Clone)]
struct Slot {
    halves: (VertexSet, VertexSet),
    cost: f64,
}

impl Slot {
    fn cluster(&self) -> VertexSet {
        self.halves.0.union(&self.halves.1)
    }

    /// A split into two nonempty halves is pending.
    fn splittable(&self) -> bool {
        !self.halves.0.is_empty() && !self.halves.1.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct MultiXist {
    kind: CutKind,
    terminals: Terminals,
}

impl MultiXist {
    pub fn new(kind: CutKind) -> Self {
        MultiXist {
            kind,
            terminals: Terminals::LocalMaxima,
        }
    }

    pub fn terminals(mut self, terminals: Terminals) -> Self {
        self.terminals = terminals;
        self
    }

    pub fn run(&self, g: &WeightedGraph, k: usize) -> Result<MultiXistRun> {
        let n = g.n();
        if k < 2 {
            return Err(Error::PreconditionViolated(format!(
                "k must be at least 2, got {k}"
            )));
        }
        if k > n {
            return Err(Error::TooManyClusters { k, n });
        }
        if let Terminals::Fixed(set) = &self.terminals {
            if set.universe() != n {
                return Err(Error::PreconditionViolated(
                    "terminal set does not match the graph".into(),
                ));
            }
        }
        let total = g.volume();
        // the first round of the greedy loop always splits V itself
        let (root, mut flow_calls) = self.pending_split(g, &VertexSet::full(n), total)?;
        let mut slots = vec![root];
        let mut steps = Vec::new();
        while slots.len() < k {
            let Some(chosen) = pick_slot(&slots) else {
                return Err(Error::UnreachableK {
                    clusters: ordered_clusters(&slots),
                });
            };
            let cost = slots[chosen].cost;
            let (t1, t2) = slots[chosen].halves.clone();
            let (first, calls1) = self.pending_split(g, &t1, total)?;
            let (second, calls2) = self.pending_split(g, &t2, total)?;
            flow_calls += calls1 + calls2;
            let sub_costs = [first.cost, second.cost];
            slots[chosen] = first;
            slots.push(second);
            steps.push(MultiStep {
                slot: chosen,
                cost,
                sizes: (t1.len(), t2.len()),
                sub_costs,
                clusters: ordered_clusters(&slots),
            });
        }
        let clusters = ordered_clusters(&slots);
        let mut labels = vec![0; n];
        for (label, c) in clusters.iter().enumerate() {
            for v in c.iter() {
                labels[v] = label;
            }
        }
        let value = multiway_xcut_value(g, self.kind, &clusters)?;
        Ok(MultiXistRun {
            clusters,
            labels,
            value,
            steps,
            flow_calls,
        })
    }

    /// Pending split of cluster `t`: `(R, T \ R)` and its normalized cost.
    fn pending_split(&self, g: &WeightedGraph, t: &VertexSet, total: f64) -> Result<(Slot, usize)> {
        if t.len() <= 1 {
            let slot = Slot {
                halves: (VertexSet::empty(g.n()), t.clone()),
                cost: f64::INFINITY,
            };
            return Ok((slot, 0));
        }
        let sub = g.restrict(t)?;
        let rule = match &self.terminals {
            Terminals::Fixed(set) => Terminals::Fixed(sub.project(set)),
            other => other.clone(),
        };
        let cut = cut_with(&sub.graph, self.kind, &rule)?;
        let r = cut.result.value;
        let bal_tt = {
            let vol = sub.graph.volume();
            self.kind.balance_from((t.len(), t.len()), (vol, vol))
        };
        let cost = if r == 0.0 {
            0.0
        } else if r.is_infinite() {
            f64::INFINITY
        } else {
            r * bal_tt / total
        };
        let part = sub.lift(&cut.result.partition, g.n());
        let rest = t.difference(&part);
        Ok((
            Slot {
                halves: (part, rest),
                cost,
            },
            cut.flow_calls,
        ))
    }
}

/// Lowest-cost splittable slot, lowest index on ties. Infinite-cost splits
/// are only taken when nothing finite is pending.
fn pick_slot(slots: &[Slot]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (j, slot) in slots.iter().enumerate() {
        if !slot.splittable() {
            continue;
        }
        if best.is_none_or(|b| slot.cost < slots[b].cost) {
            best = Some(j);
        }
    }
    best
}

fn ordered_clusters(slots: &[Slot]) -> Vec<VertexSet> {
    let mut clusters: Vec<VertexSet> = slots.iter().map(Slot::cluster).collect();
    clusters.sort_by_key(|c| c.first());
    clusters
}

pub fn multi_xist(g: &WeightedGraph, kind: CutKind, k: usize) -> Result<MultiXistRun> {
    MultiXist::new(kind).run(g, k)
}
