//! Immutable weighted undirected graphs and vertex subsets.
//!
//! A [`WeightedGraph`] is simple (no self-loops, one edge per unordered
//! pair), symmetric, and stores only strictly positive weights. Edges are kept
//! sorted by `(u, v)` with `u < v` and every adjacency list is sorted by
//! neighbor id, so every traversal order is a function of the graph alone and
//! never of the order in which edges were supplied.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A subset of `0..universe` with bitset storage and a cached cardinality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
    len: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from vertex ids. Panics if an id is `>= universe`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::empty(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Bit `i` of `mask` selects vertex `i`. Requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "mask sets hold at most 64 vertices");
        let mut s = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == 64 {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            s.words[0] = mask & keep;
            s.len = s.words[0].count_ones() as usize;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `∅ ⊊ self ⊊ V`.
    pub fn is_proper(&self) -> bool {
        self.len > 0 && self.len < self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    /// Returns `true` if `v` was not yet present.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let bit = 1u64 << (v % 64);
        let word = &mut self.words[v / 64];
        let fresh = *word & bit == 0;
        *word |= bit;
        self.len += fresh as usize;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let bit = 1u64 << (v % 64);
        let word = &mut self.words[v / 64];
        let present = *word & bit != 0;
        *word &= !bit;
        self.len -= present as usize;
        present
    }

    pub fn complement(&self) -> Self {
        let mut out = VertexSet::empty(self.universe);
        for (o, w) in out.words.iter_mut().zip(&self.words) {
            *o = !w;
        }
        out.trim();
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn combine(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
        let mut out = VertexSet::empty(self.universe);
        for ((o, a), b) in out.words.iter_mut().zip(&self.words).zip(&other.words) {
            *o = op(*a, *b);
        }
        out.trim();
        out
    }

    fn trim(&mut self) {
        let tail = self.universe % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// One entry of a vertex's adjacency list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighbor {
    pub vertex: usize,
    pub weight: f64,
    /// Index into [`WeightedGraph::edges`].
    pub edge: usize,
}

/// What [`build_graph_with_report`] had to clean up in the raw edge list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildReport {
    pub self_loops_dropped: usize,
    pub duplicates_merged: usize,
    pub zero_weights_dropped: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    adjacency: Vec<Neighbor>,
    degrees: Vec<f64>,
}

/// Builds a simple graph from a raw edge list.
///
/// Duplicate unordered pairs are merged by summing their weights, self-loops
/// and zero-weight edges are dropped.
pub fn build_graph<I>(n: usize, edges: I) -> Result<WeightedGraph>
where
    I: IntoIterator<Item = (usize, usize, f64)>,
{
    build_graph_with_report(n, edges).map(|(g, _)| g)
}

pub fn build_graph_with_report<I>(n: usize, edges: I) -> Result<(WeightedGraph, BuildReport)>
where
    I: IntoIterator<Item = (usize, usize, f64)>,
{
    let mut report = BuildReport::default();
    let mut merged: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for (u, v, w) in edges {
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if !w.is_finite() {
            return Err(Error::NonFiniteWeight { u, v });
        }
        if w < 0.0 {
            return Err(Error::NegativeWeight { u, v, weight: w });
        }
        if u == v {
            report.self_loops_dropped += 1;
            continue;
        }
        if w == 0.0 {
            report.zero_weights_dropped += 1;
            continue;
        }
        let key = (u.min(v), u.max(v));
        match merged.get_mut(&key) {
            Some(acc) => {
                *acc += w;
                report.duplicates_merged += 1;
            }
            None => {
                merged.insert(key, w);
            }
        }
    }
    let edges = merged
        .into_iter()
        .map(|((u, v), weight)| Edge { u, v, weight })
        .collect();
    Ok((WeightedGraph::from_sorted_edges(n, edges), report))
}

impl WeightedGraph {
    /// `edges` must be sorted by `(u, v)`, with `u < v`, unique and positive.
    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut counts = vec![0usize; n + 1];
        for e in &edges {
            counts[e.u + 1] += 1;
            counts[e.v + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts;
        let mut fill = offsets.clone();
        let placeholder = Neighbor {
            vertex: 0,
            weight: 0.0,
            edge: 0,
        };
        let mut adjacency = vec![placeholder; 2 * edges.len()];
        for (id, e) in edges.iter().enumerate() {
            adjacency[fill[e.u]] = Neighbor {
                vertex: e.v,
                weight: e.weight,
                edge: id,
            };
            fill[e.u] += 1;
            adjacency[fill[e.v]] = Neighbor {
                vertex: e.u,
                weight: e.weight,
                edge: id,
            };
            fill[e.v] += 1;
        }
        for v in 0..n {
            adjacency[offsets[v]..offsets[v + 1]].sort_by_key(|nb| nb.vertex);
        }
        let degrees = (0..n)
            .map(|v| {
                adjacency[offsets[v]..offsets[v + 1]]
                    .iter()
                    .map(|nb| nb.weight)
                    .sum()
            })
            .collect();
        WeightedGraph {
            n,
            edges,
            offsets,
            adjacency,
            degrees,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[Neighbor] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> Result<f64> {
        self.degrees.get(v).copied().ok_or(Error::VertexOutOfRange {
            vertex: v,
            n: self.n,
        })
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    /// Weight of edge `{u, v}`, zero for non-edges.
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        if u >= self.n || v >= self.n {
            return 0.0;
        }
        let nbs = self.neighbors(u);
        nbs.binary_search_by_key(&v, |nb| nb.vertex)
            .map(|i| nbs[i].weight)
            .unwrap_or(0.0)
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Vertices whose degree is at least that of every neighbor, ascending.
    ///
    /// Isolated vertices qualify vacuously. The position in the returned list
    /// is the terminal index used by the Xist sweep.
    pub fn local_maxima(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| {
                let du = self.degrees[u];
                self.neighbors(u)
                    .iter()
                    .all(|nb| du >= self.degrees[nb.vertex])
            })
            .collect()
    }

    pub fn vol(&self, s: &VertexSet) -> f64 {
        s.iter()
            .filter(|&v| v < self.n)
            .map(|v| self.degrees[v])
            .sum()
    }

    /// `vol(V)`, the sum of `w_ij` over ordered pairs.
    pub fn volume(&self) -> f64 {
        self.degrees.iter().sum()
    }

    /// Induced subgraph on `s`, re-indexed to `0..|s|` in ascending id order.
    pub fn restrict(&self, s: &VertexSet) -> Result<Subgraph> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if s.universe() != self.n {
            return Err(Error::PreconditionViolated(format!(
                "vertex set over {} vertices used with graph of {}",
                s.universe(),
                self.n
            )));
        }
        let to_parent = s.to_vec();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in to_parent.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| s.contains(e.u) && s.contains(e.v))
            .map(|e| Edge {
                u: local[e.u],
                v: local[e.v],
                weight: e.weight,
            })
            .collect();
        // the order-preserving relabel keeps (u, v) sorted
        let graph = WeightedGraph::from_sorted_edges(to_parent.len(), edges);
        Ok(Subgraph { graph, to_parent })
    }

    /// Components in order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for nb in self.neighbors(u) {
                    if !seen[nb.vertex] {
                        seen[nb.vertex] = true;
                        queue.push_back(nb.vertex);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub fn scale_weights(&self, c: f64) -> Result<WeightedGraph> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::NonPositiveScale(c));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                weight: e.weight * c,
                ..*e
            })
            .collect();
        Ok(WeightedGraph::from_sorted_edges(self.n, edges))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }
}

/// An induced subgraph together with the map back to parent vertex ids.
#[derive(Debug, Clone, PartialEq)]
pub struct Subgraph {
    pub graph: WeightedGraph,
    /// `to_parent[i]` is the parent id of local vertex `i` (ascending).
    pub to_parent: Vec<usize>,
}

impl Subgraph {
    /// Maps a set of local vertices to a set over the parent graph.
    pub fn lift(&self, local: &VertexSet, parent_n: usize) -> VertexSet {
        VertexSet::from_vertices(parent_n, local.iter().map(|v| self.to_parent[v]))
    }

    /// Maps a parent set to local ids, dropping vertices outside the subgraph.
    pub fn project(&self, parent: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(
            self.to_parent.len(),
            self.to_parent
                .iter()
                .enumerate()
                .filter(|(_, &p)| parent.contains(p))
                .map(|(i, _)| i),
        )
    }
}
