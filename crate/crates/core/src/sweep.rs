//! Balanced-cut imitation through s-t min cuts.
//!
//! [`xvst_basic`] scores the min cut of every terminal pair. [`Xist`] reaches
//! the same set of min cuts with one flow computation per terminal beyond the
//! first, by maintaining a parent vector `tau` over the terminals that grows
//! into an implicit Gomory-Hu (Gusfield) tree:
//!
//! ```text
//! tau <- (0, ..., 0)
//! for i in 1..N:
//!     s, t <- terminal[i], terminal[tau[i]]
//!     S    <- source side of an s-t min cut
//!     keep S if XC_S(G) beats the best value so far (strictly)
//!     for j in i+1..N:
//!         if terminal[j] in S and tau[j] == tau[i]: tau[j] <- i
//! ```
//!
//! Positions are 0-based here, so `tau[i] < i` for every processed `i >= 1`.
//! By default the terminals are the local degree maxima of the graph.

use crate::cuts::{xcut_value, CutKind, CutResult};
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{VertexSet, WeightedGraph};

/// One iteration of the Xist sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct XistStep {
    /// Position `i` of the source in the terminal list.
    pub position: usize,
    /// `tau[i]` at the time of the cut.
    pub parent: usize,
    pub source: usize,
    pub sink: usize,
    pub min_cut_value: f64,
    pub xcut_value: f64,
    pub side_s: VertexSet,
    /// `tau` after this iteration's update, when snapshots are enabled.
    pub tau: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct XistRun {
    pub result: CutResult,
    /// Terminal vertices in sweep order (ascending id).
    pub terminals: Vec<usize>,
    /// Final parent positions; `tau[0] == 0` is the root.
    pub tau: Vec<usize>,
    pub steps: Vec<XistStep>,
    pub flow_calls: usize,
    /// The graph was disconnected and a zero-valued component cut was returned
    /// without sweeping.
    pub disconnected: bool,
}

impl XistRun {
    /// Edges `(terminal, parent terminal, min-cut value)` of the `tau` tree.
    pub fn tree_edges(&self) -> Vec<(usize, usize, f64)> {
        self.steps
            .iter()
            .map(|st| (st.source, st.sink, st.min_cut_value))
            .collect()
    }

    /// Min-cut value between two terminals as implied by the `tau` tree:
    /// the smallest edge value on the tree path between them.
    pub fn tree_min_cut(&self, a: usize, b: usize) -> Option<f64> {
        let pa = self.terminals.iter().position(|&v| v == a)?;
        let pb = self.terminals.iter().position(|&v| v == b)?;
        if pa == pb {
            return None;
        }
        let value_of = |p: usize| self.steps[p - 1].min_cut_value;
        let ancestors = |mut p: usize| {
            let mut chain = vec![p];
            while p != 0 {
                p = self.tau[p];
                chain.push(p);
            }
            chain
        };
        let (ca, cb) = (ancestors(pa), ancestors(pb));
        let lca = *ca.iter().find(|p| cb.contains(p))?;
        let upto = |chain: &[usize]| {
            chain
                .iter()
                .take_while(|&&p| p != lca)
                .map(|&p| value_of(p))
                .fold(f64::INFINITY, f64::min)
        };
        Some(upto(&ca).min(upto(&cb)))
    }
}

/// Output of the all-pairs sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct XvstRun {
    pub result: CutResult,
    pub terminals: Vec<usize>,
    pub flow_calls: usize,
    pub disconnected: bool,
}

/// Configurable Xist sweep.
#[derive(Debug, Clone, Copy)]
pub struct Xist {
    kind: CutKind,
    record_tau: bool,
}

impl Xist {
    pub fn new(kind: CutKind) -> Self {
        Xist {
            kind,
            record_tau: false,
        }
    }

    /// Keep a copy of `tau` after every iteration (quadratic memory).
    pub fn record_tau(mut self, yes: bool) -> Self {
        self.record_tau = yes;
        self
    }

    pub fn kind(&self) -> CutKind {
        self.kind
    }

    /// Sweep over the local degree maxima.
    pub fn run(&self, g: &WeightedGraph) -> Result<XistRun> {
        if let Some(run) = self.disconnected_shortcut(g) {
            return Ok(run);
        }
        let terminals = g.local_maxima();
        match terminals.len() {
            0 => Err(Error::SubsetTooSmall(0)),
            1 => Err(Error::DegenerateVloc),
            _ => self.sweep(g, terminals),
        }
    }

    /// Sweep over an arbitrary terminal set, visited in ascending id order.
    pub fn run_on_subset(&self, g: &WeightedGraph, subset: &VertexSet) -> Result<XistRun> {
        let terminals = checked_terminals(g, subset)?;
        if let Some(run) = self.disconnected_shortcut(g) {
            return Ok(run);
        }
        self.sweep(g, terminals)
    }

    fn disconnected_shortcut(&self, g: &WeightedGraph) -> Option<XistRun> {
        component_cut(g, self.kind).map(|result| XistRun {
            result,
            terminals: Vec::new(),
            tau: Vec::new(),
            steps: Vec::new(),
            flow_calls: 0,
            disconnected: true,
        })
    }

    fn sweep(&self, g: &WeightedGraph, terminals: Vec<usize>) -> Result<XistRun> {
        let count = terminals.len();
        let mut net = FlowNetwork::new(g);
        let mut tau = vec![0usize; count];
        let mut best: Option<(f64, VertexSet)> = None;
        let mut steps = Vec::with_capacity(count.saturating_sub(1));
        for i in 1..count {
            let parent = tau[i];
            let (s, t) = (terminals[i], terminals[parent]);
            let cut = net.min_cut(s, t)?;
            let value = xcut_value(g, self.kind, &cut.side_s)?;
            if best.as_ref().is_none_or(|(c_min, _)| value < *c_min) {
                best = Some((value, cut.side_s.clone()));
            }
            for j in i + 1..count {
                if tau[j] == parent && cut.side_s.contains(terminals[j]) {
                    tau[j] = i;
                }
            }
            steps.push(XistStep {
                position: i,
                parent,
                source: s,
                sink: t,
                min_cut_value: cut.value,
                xcut_value: value,
                side_s: cut.side_s,
                tau: self.record_tau.then(|| tau.clone()),
            });
        }
        let (_, partition) = best.ok_or(Error::SubsetTooSmall(count))?;
        Ok(XistRun {
            result: CutResult::evaluate(g, self.kind, canonical_side(partition))?,
            terminals,
            tau,
            steps,
            flow_calls: net.calls(),
            disconnected: false,
        })
    }
}

pub fn xist(g: &WeightedGraph, kind: CutKind) -> Result<XistRun> {
    Xist::new(kind).run(g)
}

pub fn xist_on_subset(g: &WeightedGraph, kind: CutKind, subset: &VertexSet) -> Result<XistRun> {
    Xist::new(kind).run_on_subset(g, subset)
}

/// Best cut among the source-side min cuts of all terminal pairs.
///
/// `subset` defaults to every vertex. Pairs `(s, t)` with `s < t` are visited
/// in lexicographic order and only a strict improvement replaces the current
/// best, so ties go to the smallest pair.
pub fn xvst_basic(g: &WeightedGraph, kind: CutKind, subset: Option<&VertexSet>) -> Result<XvstRun> {
    let terminals = match subset {
        Some(s) => checked_terminals(g, s)?,
        None if g.n() < 2 => return Err(Error::SubsetTooSmall(g.n())),
        None => (0..g.n()).collect(),
    };
    if let Some(result) = component_cut(g, kind) {
        return Ok(XvstRun {
            result,
            terminals,
            flow_calls: 0,
            disconnected: true,
        });
    }
    let mut net = FlowNetwork::new(g);
    let mut best: Option<(f64, VertexSet)> = None;
    for (a, &s) in terminals.iter().enumerate() {
        for &t in &terminals[a + 1..] {
            let cut = net.min_cut(s, t)?;
            let value = xcut_value(g, kind, &cut.side_s)?;
            if best.as_ref().is_none_or(|(c_min, _)| value < *c_min) {
                best = Some((value, cut.side_s));
            }
        }
    }
    let (_, partition) = best.ok_or(Error::SubsetTooSmall(terminals.len()))?;
    Ok(XvstRun {
        result: CutResult::evaluate(g, kind, canonical_side(partition))?,
        terminals,
        flow_calls: net.calls(),
        disconnected: false,
    })
}

/// The side of the cut that contains vertex 0.
pub(crate) fn canonical_side(side: VertexSet) -> VertexSet {
    if side.contains(0) {
        side
    } else {
        side.complement()
    }
}

fn checked_terminals(g: &WeightedGraph, subset: &VertexSet) -> Result<Vec<usize>> {
    if subset.universe() != g.n() {
        return Err(Error::PreconditionViolated(format!(
            "terminal set over {} vertices used with graph of {}",
            subset.universe(),
            g.n()
        )));
    }
    if subset.len() < 2 {
        return Err(Error::SubsetTooSmall(subset.len()));
    }
    Ok(subset.to_vec())
}

/// For a disconnected graph, the first component (by smallest vertex) whose
/// cut scores exactly zero. `None` for connected graphs, or when every
/// component cut has a vanishing balancing term.
fn component_cut(g: &WeightedGraph, kind: CutKind) -> Option<CutResult> {
    let comps = g.connected_components();
    if comps.len() < 2 {
        return None;
    }
    comps
        .into_iter()
        .find(|c| xcut_value(g, kind, c).is_ok_and(|v| v == 0.0))
        .and_then(|c| CutResult::evaluate(g, kind, c).ok())
}
