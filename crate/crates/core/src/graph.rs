//! Abstract simple graphs with dense vertex ids `0..n`.
//!
//! Connectivity is computed exactly with unit-capacity vertex-split flows;
//! girth with per-vertex BFS. Both are cheap at the instance sizes this
//! crate targets (a few hundred vertices).

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A set of vertex ids of some host graph.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// A vertex id is outside `[0, n)`.
    OutOfRange { vertex: usize, n: usize },
    /// An edge `(v, v)` was supplied.
    LoopEdge(usize),
    /// `remove_vertices` was asked to delete every vertex.
    FullRemoval,
    /// The crossing budget `k` must be at least 1.
    NonPositiveK,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph with n={n}")
            }
            GraphError::LoopEdge(v) => write!(f, "loop edge ({v}, {v}) rejected"),
            GraphError::FullRemoval => write!(f, "cannot remove all vertices"),
            GraphError::NonPositiveK => write!(f, "crossing budget k must be >= 1"),
        }
    }
}

/// An immutable simple graph: vertex count plus sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating parallel entries.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            n,
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.adj.iter().all(|nb| nb.len() == self.n - 1)
    }

    /// Connected components as a partition of `0..n`, each part sorted.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&(0..self.n).collect())
    }

    /// Components of the subgraph induced by `keep`.
    fn components_within(&self, keep: &VertexSet) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for &start in keep {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::new();
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] && keep.contains(&w) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `V \ s`, with ids relabeled densely.
    ///
    /// Returns the new graph and the old→new id mapping (`None` for removed
    /// vertices).
    pub fn remove_vertices(
        &self,
        s: &VertexSet,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        for &v in s {
            if v >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if s.len() == self.n {
            return Err(GraphError::FullRemoval);
        }
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !s.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut adj = vec![Vec::new(); next];
        for v in 0..self.n {
            if let Some(nv) = map[v] {
                for &w in &self.adj[v] {
                    if let Some(nw) = map[w] {
                        adj[nv].push(nw);
                    }
                }
            }
        }
        // neighbors stay sorted because relabeling preserves order
        Ok((Graph { n: next, adj }, map))
    }

    /// Exact vertex connectivity.
    ///
    /// Complete graphs give `n - 1`; otherwise the minimum over maximum
    /// systems of internally disjoint paths, computed with unit-capacity
    /// vertex-split flows. A minimum-degree vertex `u` is fixed and paired
    /// against its non-neighbors; pairs of non-adjacent neighbors of `u`
    /// cover the case where `u` itself sits in the minimum cut.
    pub fn vertex_connectivity(&self) -> usize {
        if self.n <= 1 {
            return 0;
        }
        if self.is_complete() {
            return self.n - 1;
        }
        if self.components().len() > 1 {
            return 0;
        }
        let u = (0..self.n).min_by_key(|&v| self.degree(v)).unwrap();
        let mut best = self.degree(u);
        for w in 0..self.n {
            if w != u && !self.has_edge(u, w) {
                best = best.min(self.max_vertex_flow(u, w, best));
            }
        }
        let nb = self.adj[u].clone();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !self.has_edge(x, y) {
                    best = best.min(self.max_vertex_flow(x, y, best));
                }
            }
        }
        best
    }

    /// Maximum number of internally disjoint s–t paths, stopping early once
    /// `cap` is reached. Vertex splitting: node `v` becomes `2v` (in) and
    /// `2v + 1` (out) with a unit arc between them.
    fn max_vertex_flow(&self, s: usize, t: usize, cap: usize) -> usize {
        debug_assert!(!self.has_edge(s, t));
        let nodes = 2 * self.n;
        // residual arcs as adjacency sets over split nodes
        let mut res: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes];
        for v in 0..self.n {
            res[2 * v].insert(2 * v + 1);
        }
        for v in 0..self.n {
            for &w in &self.adj[v] {
                res[2 * v + 1].insert(2 * w);
            }
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        while flow < cap {
            // BFS for an augmenting path in the residual network
            let mut prev: Vec<Option<usize>> = vec![None; nodes];
            let mut queue = VecDeque::new();
            prev[source] = Some(source);
            queue.push_back(source);
            while let Some(v) = queue.pop_front() {
                if v == sink {
                    break;
                }
                for &w in &res[v] {
                    if prev[w].is_none() {
                        prev[w] = Some(v);
                        queue.push_back(w);
                    }
                }
            }
            if prev[sink].is_none() {
                break;
            }
            let mut v = sink;
            while v != source {
                let p = prev[v].unwrap();
                res[p].remove(&v);
                res[v].insert(p);
                v = p;
            }
            flow += 1;
        }
        flow
    }

    /// Length of the shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        // non-tree edge closes a cycle through the root side
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Tutte–Berge upper bound on the matching number from the cut `s`:
    /// counts odd-order components of `G - s` and returns
    /// `(odd_components, floor((n - odd + |s|) / 2))`.
    pub fn matching_upper_bound(&self, s: &VertexSet) -> (usize, usize) {
        let keep: VertexSet = (0..self.n).filter(|v| !s.contains(v)).collect();
        let odd = self
            .components_within(&keep)
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count();
        (odd, (self.n - odd + s.len()) / 2)
    }
}

/// Edge-density and connectivity bounds for k-planar graphs derived from
/// the crossing lemma: `m <= 3.81 sqrt(k) n` and `kappa <= 7.62 sqrt(k)`.
pub fn connectivity_upper_bound(k: u64) -> Result<(f64, u64), GraphError> {
    if k == 0 {
        return Err(GraphError::NonPositiveK);
    }
    let root = libm::sqrt(k as f64);
    Ok((3.81 * root, (7.62 * root) as u64))
}
