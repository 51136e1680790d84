//! Finite regular 2-complexes.
//!
//! A [`Complex2`] is a vertex list plus faces given as simple cyclic vertex
//! sequences. Edges are never declared: they are the unordered pairs that
//! occur consecutively in some face. Everything downstream (link graphs,
//! rotation systems, local surfaces) is derived from these face lists.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Multigraph;

/// Errors raised while validating raw vertex and face lists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex `{0}` is declared more than once")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("face {face} has {len} vertices; at least 3 are required")]
    FaceTooShort { face: usize, len: usize },
    #[error("face {face} joins vertex `{vertex}` to itself")]
    LoopEdge { face: usize, vertex: String },
    #[error("face {face} visits vertex `{vertex}` more than once")]
    RepeatedVertexInFace { face: usize, vertex: String },
    #[error("vertex `{0}` lies in no face")]
    IsolatedVertex(String),
}

/// One of the two orientations of a face.
///
/// Encoded as `2 * face + orientation`, where orientation 0 follows the
/// stored cyclic order and 1 runs against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DirectedFace(pub usize);

impl DirectedFace {
    pub fn new(face: usize, reversed: bool) -> Self {
        DirectedFace(2 * face + reversed as usize)
    }

    pub fn face(self) -> usize {
        self.0 / 2
    }

    pub fn is_reversed(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn reverse(self) -> Self {
        DirectedFace(self.0 ^ 1)
    }

    pub fn id(self) -> usize {
        self.0
    }
}

impl fmt::Display for DirectedFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.face(), if self.is_reversed() { '-' } else { '+' })
    }
}

/// An oriented 1-cell `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub tail: usize,
    pub head: usize,
}

impl DirectedEdge {
    pub fn new(tail: usize, head: usize) -> Self {
        debug_assert_ne!(tail, head);
        DirectedEdge { tail, head }
    }

    pub fn reverse(self) -> Self {
        DirectedEdge { tail: self.head, head: self.tail }
    }

    /// True when this is the orientation from the smaller to the larger endpoint.
    pub fn is_canonical(self) -> bool {
        self.tail < self.head
    }
}

/// A validated finite regular 2-complex with a simple 1-skeleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex2 {
    names: Vec<String>,
    lookup: BTreeMap<String, usize>,
    faces: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_lookup: BTreeMap<(usize, usize), usize>,
    edge_faces: Vec<Vec<usize>>,
    vertex_faces: Vec<Vec<usize>>,
    vertex_edges: Vec<Vec<usize>>,
}

impl Complex2 {
    /// Validates named vertex and face lists.
    pub fn build<S: AsRef<str>, T: AsRef<str>>(vertices: &[S], faces: &[Vec<T>]) -> Result<Self, ComplexError> {
        let names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut lookup = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if lookup.insert(name.clone(), i).is_some() {
                return Err(ComplexError::DuplicateVertex(name.clone()));
            }
        }
        let mut indexed = Vec::with_capacity(faces.len());
        for face in faces {
            let mut ids = Vec::with_capacity(face.len());
            for v in face {
                let v = v.as_ref();
                match lookup.get(v) {
                    Some(&i) => ids.push(i),
                    None => return Err(ComplexError::UnknownVertex(v.to_string())),
                }
            }
            indexed.push(ids);
        }
        Self::from_indexed(names, indexed)
    }

    /// Validates faces given as indices into `names`.
    pub fn from_indexed(names: Vec<String>, faces: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        let n = names.len();
        let mut lookup = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if lookup.insert(name.clone(), i).is_some() {
                return Err(ComplexError::DuplicateVertex(name.clone()));
            }
        }
        for (fi, face) in faces.iter().enumerate() {
            if let Some(&bad) = face.iter().find(|&&v| v >= n) {
                return Err(ComplexError::UnknownVertex(format!("#{bad}")));
            }
            if face.len() < 3 {
                return Err(ComplexError::FaceTooShort { face: fi, len: face.len() });
            }
            let k = face.len();
            for i in 0..k {
                if face[i] == face[(i + 1) % k] {
                    return Err(ComplexError::LoopEdge { face: fi, vertex: names[face[i]].clone() });
                }
            }
            let mut seen = vec![false; n];
            for &v in face {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(ComplexError::RepeatedVertexInFace { face: fi, vertex: names[v].clone() });
                }
            }
        }

        let mut pairs: Vec<(usize, usize)> = faces
            .iter()
            .flat_map(|face| {
                let k = face.len();
                (0..k).map(move |i| ordered(face[i], face[(i + 1) % k]))
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        let edge_lookup: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();

        let mut edge_faces = vec![Vec::new(); pairs.len()];
        let mut vertex_faces = vec![Vec::new(); n];
        for (fi, face) in faces.iter().enumerate() {
            let k = face.len();
            for i in 0..k {
                vertex_faces[face[i]].push(fi);
                let e = edge_lookup[&ordered(face[i], face[(i + 1) % k])];
                edge_faces[e].push(fi);
            }
        }
        let mut vertex_edges = vec![Vec::new(); n];
        for (e, &(a, b)) in pairs.iter().enumerate() {
            vertex_edges[a].push(e);
            vertex_edges[b].push(e);
        }
        if let Some(v) = (0..n).find(|&v| vertex_faces[v].is_empty()) {
            return Err(ComplexError::IsolatedVertex(names[v].clone()));
        }

        Ok(Complex2 { names, lookup, faces, edges: pairs, edge_lookup, edge_faces, vertex_faces, vertex_edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_lookup.get(&ordered(a, b)).copied()
    }

    /// Faces containing edge `e`, in increasing order.
    pub fn faces_on_edge(&self, e: usize) -> &[usize] {
        &self.edge_faces[e]
    }

    /// Faces containing vertex `v`, in increasing order.
    pub fn faces_at(&self, v: usize) -> &[usize] {
        &self.vertex_faces[v]
    }

    /// Edges incident with vertex `v`, in increasing order.
    pub fn edges_at(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.vertex_edges[v]
            .iter()
            .map(|&e| {
                let (a, b) = self.edges[e];
                if a == v {
                    b
                } else {
                    a
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn directed_face_count(&self) -> usize {
        2 * self.faces.len()
    }

    pub fn directed_faces(&self) -> impl Iterator<Item = DirectedFace> {
        (0..self.directed_face_count()).map(DirectedFace)
    }

    /// The boundary walk of a directed face.
    pub fn directed_vertices(&self, df: DirectedFace) -> Vec<usize> {
        let mut seq = self.faces[df.face()].clone();
        if df.is_reversed() {
            seq.reverse();
        }
        seq
    }

    /// The orientation of face `f` in which `tail` comes right before `head`,
    /// if the face contains that edge.
    pub fn orient_face(&self, f: usize, tail: usize, head: usize) -> Option<DirectedFace> {
        let face = &self.faces[f];
        let k = face.len();
        let i = face.iter().position(|&x| x == tail)?;
        if face[(i + 1) % k] == head {
            Some(DirectedFace::new(f, false))
        } else if face[(i + k - 1) % k] == head {
            Some(DirectedFace::new(f, true))
        } else {
            None
        }
    }

    /// Vertices before and after `v` in directed face `df`.
    pub fn around(&self, df: DirectedFace, v: usize) -> Option<(usize, usize)> {
        let face = &self.faces[df.face()];
        let k = face.len();
        let i = face.iter().position(|&x| x == v)?;
        let (p, s) = (face[(i + k - 1) % k], face[(i + 1) % k]);
        Some(if df.is_reversed() { (s, p) } else { (p, s) })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Every face is a triangle and no two faces share a vertex set.
    pub fn is_simplicial(&self) -> bool {
        if self.faces.iter().any(|f| f.len() != 3) {
            return false;
        }
        let mut keys: Vec<[usize; 3]> = self
            .faces
            .iter()
            .map(|f| {
                let mut k = [f[0], f[1], f[2]];
                k.sort_unstable();
                k
            })
            .collect();
        keys.sort_unstable();
        keys.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_connected(&self) -> bool {
        self.skeleton().is_connected()
    }

    /// The 1-skeleton; graph edge ids are complex edge ids.
    pub fn skeleton(&self) -> Multigraph {
        let mut g = Multigraph::with_labels((0..self.vertex_count()).collect());
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            g.add_edge(e, a, b);
        }
        g
    }
}

pub(crate) fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Canonical rotation of a cyclic sequence: smallest element first.
pub(crate) fn canonical_cycle<T: Ord + Copy>(cycle: &[T]) -> Vec<T> {
    match cycle.iter().enumerate().min_by_key(|(_, &x)| x) {
        Some((i, _)) => cycle[i..].iter().chain(&cycle[..i]).copied().collect(),
        None => Vec::new(),
    }
}
