//! Multigraphs with loops and parallel edges, rotation systems on them, and
//! the algorithms the complex-level code needs: connectivity, face tracing,
//! planar embedding, degree-2 suppression and unique-embeddability.
//!
//! Every edge has two *darts* (edge-ends). Dart `2 * i` sits at the first
//! endpoint of the edge stored at position `i`, dart `2 * i + 1` at the second.
//! For a loop both darts sit at the same vertex.

mod classify;
mod planarity;
mod suppress;

pub use classify::{classify_unique_embeddability, is_in_f, BShape, EmbeddingClass, FClass, Uniqueness};
pub use planarity::{planar_embedding, Planarity};
pub use suppress::{suppress_degree2, Suppression};

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("rotation is invalid: {0}")]
    InvalidRotation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub id: usize,
    pub ends: [usize; 2],
}

impl GraphEdge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

/// A finite multigraph on vertices `0..n`.
///
/// `labels[v]` carries an external identifier for vertex `v` (a vertex of
/// the host complex, or of the graph a suppression started from).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    labels: Vec<usize>,
    edges: Vec<GraphEdge>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { labels: (0..n).collect(), edges: Vec::new() }
    }

    pub fn with_labels(labels: Vec<usize>) -> Self {
        Multigraph { labels, edges: Vec::new() }
    }

    /// Builds a graph whose edge ids are their positions.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Multigraph::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(i, u, v);
        }
        g
    }

    pub fn add_edge(&mut self, id: usize, u: usize, v: usize) -> usize {
        assert!(u < self.labels.len() && v < self.labels.len(), "endpoint out of range");
        debug_assert!(self.edges.iter().all(|e| e.id != id), "duplicate edge id {id}");
        self.edges.push(GraphEdge { id, ends: [u, v] });
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn edge(&self, pos: usize) -> &GraphEdge {
        &self.edges[pos]
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// The vertex a dart is attached to.
    pub fn dart_vertex(&self, dart: usize) -> usize {
        self.edges[dart / 2].ends[dart % 2]
    }

    /// Darts at each vertex in increasing order.
    pub fn darts_by_vertex(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for d in 0..self.dart_count() {
            out[self.dart_vertex(d)].push(d);
        }
        out
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|e| e.ends.iter().filter(|&&x| x == v).count()).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for e in &self.edges {
            deg[e.ends[0]] += 1;
            deg[e.ends[1]] += 1;
        }
        deg
    }

    /// Adjacency lists with multiplicity; a loop is listed once.
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            let [u, v] = e.ends;
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        adj
    }

    /// Component index per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        self.components_without(&vec![false; self.vertex_count()])
    }

    fn components_without(&self, removed: &[bool]) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut count = 0;
        for s in 0..self.vertex_count() {
            if removed[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !removed[w] && comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Connected and non-empty.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().1 == 1
    }

    /// True when the graph has no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if e.is_loop() {
                return false;
            }
            let [u, v] = e.ends;
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }

    /// Whether the graph has at least `k` vertices and stays connected after
    /// deleting any set of fewer than `k` vertices.
    ///
    /// Two vertices count as 2-connected only when joined by at least two
    /// parallel edges; a single edge does not.
    pub fn is_k_connected(&self, k: usize) -> bool {
        assert!(k >= 1, "k must be positive");
        let n = self.vertex_count();
        if n < k || !self.is_connected() {
            return false;
        }
        if k >= 2 && n == 2 {
            let links = self.edges.iter().filter(|e| !e.is_loop()).count();
            return links >= k;
        }
        let mut removed = vec![false; n];
        for size in 1..k {
            if size >= n {
                break;
            }
            if !subsets_keep_connected(self, &mut removed, 0, size) {
                return false;
            }
        }
        true
    }

    /// The smallest vertex whose deletion disconnects the graph.
    pub fn cut_vertex(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n < 3 {
            return None;
        }
        let mut removed = vec![false; n];
        (0..n).find(|&v| {
            removed[v] = true;
            let (_, count) = self.components_without(&removed);
            removed[v] = false;
            count > 1
        })
    }

    /// The graph with edge at position `pos` replaced by a path through a
    /// new vertex. The halves get ids `id` (first endpoint side) and `fresh_id`.
    pub fn subdivide(&self, pos: usize, fresh_label: usize, fresh_id: usize) -> Multigraph {
        let mut g = self.clone();
        let m = g.labels.len();
        g.labels.push(fresh_label);
        let [u, v] = g.edges[pos].ends;
        g.edges[pos].ends = [u, m];
        g.edges.push(GraphEdge { id: fresh_id, ends: [m, v] });
        g
    }
}

fn subsets_keep_connected(g: &Multigraph, removed: &mut [bool], start: usize, left: usize) -> bool {
    if left == 0 {
        let (_, count) = g.components_without(removed);
        return count == 1;
    }
    for v in start..g.vertex_count() {
        removed[v] = true;
        let ok = subsets_keep_connected(g, removed, v + 1, left - 1);
        removed[v] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// A cyclic order of darts around every vertex of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GraphRotation {
    cycles: Vec<Vec<usize>>,
}

impl GraphRotation {
    /// Checks that every dart appears exactly once, at its own vertex.
    pub fn new(g: &Multigraph, cycles: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if cycles.len() != g.vertex_count() {
            return Err(GraphError::InvalidRotation(format!(
                "{} vertex cycles for {} vertices",
                cycles.len(),
                g.vertex_count()
            )));
        }
        let mut seen = vec![false; g.dart_count()];
        for (v, cycle) in cycles.iter().enumerate() {
            for &d in cycle {
                if d >= g.dart_count() || g.dart_vertex(d) != v {
                    return Err(GraphError::InvalidRotation(format!("dart {d} is not at vertex {v}")));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return Err(GraphError::InvalidRotation(format!("dart {d} repeated")));
                }
            }
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(GraphError::InvalidRotation(format!("dart {d} missing")));
        }
        Ok(GraphRotation { cycles })
    }

    pub(crate) fn from_cycles_unchecked(cycles: Vec<Vec<usize>>) -> Self {
        GraphRotation { cycles }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle(&self, v: usize) -> &[usize] {
        &self.cycles[v]
    }

    /// The mirror image: every vertex cycle reversed.
    pub fn reversed(&self) -> Self {
        GraphRotation {
            cycles: self
                .cycles
                .iter()
                .map(|c| {
                    let mut r = c.clone();
                    r.reverse();
                    r
                })
                .collect(),
        }
    }

    /// Successor table indexed by dart.
    pub fn successors(&self, dart_count: usize) -> Vec<usize> {
        let mut next = vec![usize::MAX; dart_count];
        for cycle in &self.cycles {
            for (i, &d) in cycle.iter().enumerate() {
                next[d] = cycle[(i + 1) % cycle.len()];
            }
        }
        next
    }

    /// Each vertex cycle rotated to start at its smallest dart.
    pub fn canonical(&self) -> Self {
        GraphRotation { cycles: self.cycles.iter().map(|c| crate::complex::canonical_cycle(c)).collect() }
    }
}

/// Orbits of the face permutation `d -> next(opposite(d))`.
pub fn trace_faces(g: &Multigraph, rotation: &GraphRotation) -> Vec<Vec<usize>> {
    let next = rotation.successors(g.dart_count());
    let mut seen = vec![false; g.dart_count()];
    let mut faces = Vec::new();
    for start in 0..g.dart_count() {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = next[d ^ 1];
        }
        faces.push(face);
    }
    faces
}

/// Number of traced faces and the genus of the surface the rotation defines.
pub fn face_trace_genus(g: &Multigraph, rotation: &GraphRotation) -> Result<(usize, usize), GraphError> {
    if !g.is_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    Ok(face_count_and_genus(g, rotation))
}

/// Face count and total genus summed over components.
pub(crate) fn face_count_and_genus(g: &Multigraph, rotation: &GraphRotation) -> (usize, usize) {
    let (_, components) = g.components();
    let isolated = g.degrees().iter().filter(|&&d| d == 0).count();
    let faces = trace_faces(g, rotation).len() + isolated;
    // sum over components of (2 - V + E - F) / 2
    let twice = 2 * components as i64 - g.vertex_count() as i64 + g.edge_count() as i64 - faces as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0, "Euler bound violated");
    (faces, (twice / 2) as usize)
}
