//! Suppression of degree-2 vertices.

use serde::Serialize;

use super::{GraphError, Multigraph};

/// One edge of a suppressed graph together with the path it replaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuppressedPath {
    /// Id of the new edge: the smallest id along the path.
    pub id: usize,
    /// Original edge ids in walk order.
    pub edges: Vec<usize>,
    /// Labels of the suppressed interior vertices in walk order.
    pub interior: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Suppression {
    /// Every vertex has degree 2: the graph is a single cycle.
    Cycle { edges: Vec<usize>, vertices: Vec<usize> },
    /// Degree-2 vertices removed. Vertex labels of `graph` are labels of
    /// the input graph, and `paths[i]` belongs to the edge at position `i`.
    Reduced { graph: Multigraph, paths: Vec<SuppressedPath> },
}

impl Suppression {
    pub fn graph(&self) -> Option<&Multigraph> {
        match self {
            Suppression::Cycle { .. } => None,
            Suppression::Reduced { graph, .. } => Some(graph),
        }
    }
}

pub fn suppress_degree2(g: &Multigraph) -> Result<Suppression, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    let degrees = g.degrees();
    let darts = g.darts_by_vertex();
    let mut used = vec![false; g.edge_count()];

    if degrees.iter().all(|&d| d == 2) {
        // walk the cycle from the first dart of vertex 0
        let mut edges = Vec::new();
        let mut vertices = vec![g.label(0)];
        let mut dart = darts[0][0];
        loop {
            let pos = dart / 2;
            used[pos] = true;
            edges.push(g.edge(pos).id);
            let arrival = dart ^ 1;
            let w = g.dart_vertex(arrival);
            if w == 0 {
                break;
            }
            vertices.push(g.label(w));
            dart = other_dart(&darts[w], arrival);
        }
        return Ok(Suppression::Cycle { edges, vertices });
    }

    let branch: Vec<usize> = (0..g.vertex_count()).filter(|&v| degrees[v] != 2).collect();
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in branch.iter().enumerate() {
        index[v] = i;
    }
    let mut reduced = Multigraph::with_labels(branch.iter().map(|&v| g.label(v)).collect());
    let mut paths = Vec::new();
    for &v in &branch {
        for &start in &darts[v] {
            if used[start / 2] {
                continue;
            }
            let mut edges = Vec::new();
            let mut interior = Vec::new();
            let mut dart = start;
            let end = loop {
                let pos = dart / 2;
                used[pos] = true;
                edges.push(g.edge(pos).id);
                let arrival = dart ^ 1;
                let w = g.dart_vertex(arrival);
                if index[w] != usize::MAX {
                    break w;
                }
                interior.push(g.label(w));
                dart = other_dart(&darts[w], arrival);
            };
            let id = *edges.iter().min().expect("path has an edge");
            reduced.add_edge(id, index[v], index[end]);
            paths.push(SuppressedPath { id, edges, interior });
        }
    }
    Ok(Suppression::Reduced { graph: reduced, paths })
}

fn other_dart(pair: &[usize], arrival: usize) -> usize {
    debug_assert_eq!(pair.len(), 2);
    if pair[0] == arrival {
        pair[1]
    } else {
        pair[0]
    }
}
