//! Exact s-t max-flow / min-cut on undirected weighted graphs.
//!
//! Dinic's algorithm (BFS level graph, blocking flow with current-arc
//! pointers) over real capacities. Each undirected edge becomes a pair of
//! opposite arcs that are each other's reverse, both with the edge weight as
//! capacity. The reported partition is always the set of vertices reachable
//! from `s` in the final residual network, i.e. the source-side-minimal min
//! cut, and its value is recomputed from the graph rather than taken from the
//! flow.

use std::collections::VecDeque;

use crate::cuts::crossing_weight;
use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};

/// Residual capacities at or below this fraction of the largest edge weight
/// count as saturated.
pub const RESIDUAL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct StMinCut {
    /// Crossing weight of `side_s`, recomputed from the graph.
    pub value: f64,
    /// Value of the maximum flow that certified the cut.
    pub flow: f64,
    /// Vertices reachable from `s` in the residual network.
    pub side_s: VertexSet,
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    rev: usize,
}

/// Reusable residual network for repeated s-t min-cut queries on one graph.
pub struct FlowNetwork<'g> {
    graph: &'g WeightedGraph,
    offsets: Vec<usize>,
    arcs: Vec<Arc>,
    capacity: Vec<f64>,
    residual: Vec<f64>,
    level: Vec<u32>,
    next_arc: Vec<usize>,
    eps: f64,
    calls: usize,
}

const UNSEEN: u32 = u32::MAX;

impl<'g> FlowNetwork<'g> {
    pub fn new(graph: &'g WeightedGraph) -> Self {
        let n = graph.n();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for v in 0..n {
            offsets.push(offsets[v] + graph.neighbors(v).len());
        }
        // arc_of[2e] is the arc u->v of edge e = (u, v), arc_of[2e + 1] is v->u
        let mut arc_of = vec![0usize; 2 * graph.m()];
        let mut arcs = Vec::with_capacity(offsets[n]);
        let mut capacity = Vec::with_capacity(offsets[n]);
        for v in 0..n {
            for nb in graph.neighbors(v) {
                let e = graph.edges()[nb.edge];
                let dir = usize::from(v != e.u);
                arc_of[2 * nb.edge + dir] = arcs.len();
                arcs.push(Arc {
                    to: nb.vertex,
                    rev: 0,
                });
                capacity.push(nb.weight);
            }
        }
        for e in 0..graph.m() {
            let (a, b) = (arc_of[2 * e], arc_of[2 * e + 1]);
            arcs[a].rev = b;
            arcs[b].rev = a;
        }
        let max_w = graph.edges().iter().map(|e| e.weight).fold(0.0, f64::max);
        FlowNetwork {
            graph,
            offsets,
            residual: capacity.clone(),
            capacity,
            arcs,
            level: vec![UNSEEN; n],
            next_arc: vec![0; n],
            eps: RESIDUAL_EPS * max_w,
            calls: 0,
        }
    }

    /// Number of min-cut computations performed so far.
    pub fn calls(&self) -> usize {
        self.calls
    }

    pub fn min_cut(&mut self, s: usize, t: usize) -> Result<StMinCut> {
        self.graph.check_vertex(s)?;
        self.graph.check_vertex(t)?;
        if s == t {
            return Err(Error::SameVertex(s));
        }
        self.calls += 1;
        self.residual.copy_from_slice(&self.capacity);
        let mut flow = 0.0;
        while self.build_levels(s, t) {
            self.next_arc
                .copy_from_slice(&self.offsets[..self.graph.n()]);
            flow += self.blocking_flow(s, t);
        }
        // build_levels left `level` marking exactly the residual-reachable set
        let side_s = VertexSet::from_vertices(
            self.graph.n(),
            (0..self.graph.n()).filter(|&v| self.level[v] != UNSEEN),
        );
        let value = crossing_weight(self.graph, &side_s);
        Ok(StMinCut {
            value,
            flow,
            side_s,
        })
    }

    /// BFS over residual arcs. Returns whether `t` is reachable.
    fn build_levels(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(UNSEEN);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in self.offsets[u]..self.offsets[u + 1] {
                let to = self.arcs[a].to;
                if self.level[to] == UNSEEN && self.residual[a] > self.eps {
                    self.level[to] = self.level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[t] != UNSEEN
    }

    fn blocking_flow(&mut self, s: usize, t: usize) -> f64 {
        let mut total = 0.0;
        let mut path: Vec<usize> = Vec::new();
        let mut u = s;
        loop {
            if u == t {
                let push = path
                    .iter()
                    .map(|&a| self.residual[a])
                    .fold(f64::INFINITY, f64::min);
                for &a in &path {
                    self.residual[a] -= push;
                    self.residual[self.arcs[a].rev] += push;
                }
                total += push;
                path.clear();
                u = s;
                continue;
            }
            let mut advanced = false;
            while self.next_arc[u] < self.offsets[u + 1] {
                let a = self.next_arc[u];
                let to = self.arcs[a].to;
                if self.residual[a] > self.eps
                    && self.level[to] != UNSEEN
                    && self.level[to] == self.level[u] + 1
                {
                    path.push(a);
                    u = to;
                    advanced = true;
                    break;
                }
                self.next_arc[u] += 1;
            }
            if advanced {
                continue;
            }
            if u == s {
                return total;
            }
            // dead end: prune u from the level graph and retreat
            self.level[u] = UNSEEN - 1;
            let a = path.pop().expect("non-source vertex on an empty path");
            u = self.arcs[self.arcs[a].rev].to;
            self.next_arc[u] += 1;
        }
    }
}

/// Minimum s-t cut of `g` with the source-side-minimal partition.
///
/// If `s` and `t` lie in different components the cut has value 0 and
/// `side_s` is the component of `s`.
pub fn st_min_cut(g: &WeightedGraph, s: usize, t: usize) -> Result<StMinCut> {
    FlowNetwork::new(g).min_cut(s, t)
}

pub fn max_flow_value(g: &WeightedGraph, s: usize, t: usize) -> Result<f64> {
    st_min_cut(g, s, t).map(|c| c.flow)
}
