//! Unique embeddability in the sphere and membership in the class F of
//! admissible link graphs.
//!
//! A connected multigraph has a unique embedding in the sphere, up to
//! reflection, exactly when its degree-2 suppression is a simple 3-connected
//! planar graph or one of a short list of small shapes.

use serde::Serialize;

use super::{planar_embedding, suppress_degree2, GraphError, Multigraph, Suppression};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Uniqueness {
    /// The suppression is a simple 3-connected planar graph.
    UniqueA,
    /// The suppression is one of the small shapes in [`BShape`].
    UniqueB,
    NotUnique,
}

impl Uniqueness {
    pub fn is_unique(self) -> bool {
        self != Uniqueness::NotUnique
    }
}

/// Small suppressed shapes with a unique embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BShape {
    /// A single vertex.
    Vertex,
    /// A single edge between two vertices.
    Edge,
    /// The suppression is a cycle.
    Cycle,
    /// Two vertices joined by three parallel edges.
    Theta,
    /// A vertex joined to three leaves.
    Claw,
    /// A loop with one pendant edge.
    LoopWithPendant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingClass {
    pub tag: Uniqueness,
    pub shape: Option<BShape>,
    pub reduced: Suppression,
}

/// The clause under which a graph belongs to F.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FClass {
    Cycle,
    Theta,
    ThreeConnected,
}

pub fn classify_unique_embeddability(g: &Multigraph) -> Result<EmbeddingClass, GraphError> {
    let reduced = suppress_degree2(g)?;
    let (tag, shape) = match &reduced {
        Suppression::Cycle { .. } => (Uniqueness::UniqueB, Some(BShape::Cycle)),
        Suppression::Reduced { graph, .. } => match small_shape(graph) {
            Some(shape) => (Uniqueness::UniqueB, Some(shape)),
            None if is_three_connected_planar(graph)? => (Uniqueness::UniqueA, None),
            None => (Uniqueness::NotUnique, None),
        },
    };
    Ok(EmbeddingClass { tag, shape, reduced })
}

/// `Some(clause)` when the graph is a cycle, a subdivided theta graph or a
/// subdivision of a simple 3-connected planar graph.
pub fn is_in_f(g: &Multigraph) -> Result<Option<FClass>, GraphError> {
    Ok(match suppress_degree2(g)? {
        Suppression::Cycle { vertices, .. } => (vertices.len() >= 2).then_some(FClass::Cycle),
        Suppression::Reduced { graph, .. } => {
            if small_shape(&graph) == Some(BShape::Theta) {
                Some(FClass::Theta)
            } else if is_three_connected_planar(&graph)? {
                Some(FClass::ThreeConnected)
            } else {
                None
            }
        }
    })
}

fn small_shape(g: &Multigraph) -> Option<BShape> {
    let loops = g.edges().iter().filter(|e| e.is_loop()).count();
    match (g.vertex_count(), g.edge_count(), loops) {
        (1, 0, _) => Some(BShape::Vertex),
        (2, 1, 0) => Some(BShape::Edge),
        (2, 3, 0) => Some(BShape::Theta),
        (2, 2, 1) => Some(BShape::LoopWithPendant),
        (4, 3, 0) if g.degrees().iter().any(|&d| d == 3) => Some(BShape::Claw),
        _ => None,
    }
}

fn is_three_connected_planar(g: &Multigraph) -> Result<bool, GraphError> {
    Ok(g.is_simple() && g.is_k_connected(3) && planar_embedding(g)?.is_planar())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Multigraph::from_edges(n, &edges)
    }

    fn k23() -> Multigraph {
        let mut edges = Vec::new();
        for a in 0..2 {
            for b in 2..5 {
                edges.push((a, b));
            }
        }
        Multigraph::from_edges(5, &edges)
    }

    fn tag(g: &Multigraph) -> Uniqueness {
        classify_unique_embeddability(g).unwrap().tag
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(tag(&complete(4)), Uniqueness::UniqueA);
        assert_eq!(tag(&Multigraph::from_edges(2, &[(0, 1); 4])), Uniqueness::NotUnique);
        let theta = classify_unique_embeddability(&k23()).unwrap();
        assert_eq!((theta.tag, theta.shape), (Uniqueness::UniqueB, Some(BShape::Theta)));
        assert_eq!(tag(&complete(5)), Uniqueness::NotUnique);
        assert_eq!(tag(&Multigraph::new(1)), Uniqueness::UniqueB);
    }

    #[test]
    fn small_shapes() {
        let claw = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(classify_unique_embeddability(&claw).unwrap().shape, Some(BShape::Claw));
        let c2k2 = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(classify_unique_embeddability(&c2k2).unwrap().shape, Some(BShape::LoopWithPendant));
        let path = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(classify_unique_embeddability(&path).unwrap().shape, Some(BShape::Edge));
        // a figure eight has two inequivalent embeddings
        let eight = Multigraph::from_edges(1, &[(0, 0), (0, 0)]);
        assert_eq!(tag(&eight), Uniqueness::NotUnique);
        // so does a path with loops at both ends
        let dumbbell = Multigraph::from_edges(2, &[(0, 0), (0, 1), (1, 1)]);
        assert_eq!(tag(&dumbbell), Uniqueness::NotUnique);
    }

    #[test]
    fn membership_in_f() {
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        assert_eq!(is_in_f(&Multigraph::from_edges(5, &c5)).unwrap(), Some(FClass::Cycle));
        assert_eq!(is_in_f(&k23()).unwrap(), Some(FClass::Theta));
        assert_eq!(is_in_f(&Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)])).unwrap(), None);
        assert_eq!(is_in_f(&complete(4)).unwrap(), Some(FClass::ThreeConnected));
        assert_eq!(is_in_f(&complete(5)).unwrap(), None);
        assert_eq!(is_in_f(&Multigraph::from_edges(2, &[(0, 1), (0, 1)])).unwrap(), Some(FClass::Cycle));
        assert_eq!(is_in_f(&Multigraph::from_edges(1, &[(0, 0)])).unwrap(), None);
        let claw = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(is_in_f(&claw).unwrap(), None);
    }

    #[test]
    fn subdivision_does_not_change_the_class() {
        let k4 = complete(4);
        for pos in 0..k4.edge_count() {
            let sub = k4.subdivide(pos, 99, 99);
            assert_eq!(tag(&sub), Uniqueness::UniqueA);
            assert_eq!(is_in_f(&sub).unwrap(), Some(FClass::ThreeConnected));
        }
    }
}
