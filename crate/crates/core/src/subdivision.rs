//! Barycentric subdivision of a regular 2-complex.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::Complex2;

/// A cell of the original complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cell {
    Vertex(usize),
    Edge(usize),
    Face(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    #[serde(skip)]
    pub complex: Complex2,
    /// The original cell whose barycenter each new vertex is.
    pub vertex_origin: Vec<Cell>,
    /// The original face containing each new triangle.
    pub face_origin: Vec<usize>,
}

/// Subdivides every edge at its midpoint and cones every k-gon from a
/// centre vertex into 2k triangles that follow the face orientation.
pub fn barycentric_subdivision(x: &Complex2) -> Subdivision {
    let n = x.vertex_count();
    let mut names: Vec<String> = x.names().to_vec();
    let mut taken: BTreeSet<String> = names.iter().cloned().collect();
    let mut vertex_origin: Vec<Cell> = (0..n).map(Cell::Vertex).collect();
    for (e, &(a, b)) in x.edges().iter().enumerate() {
        names.push(fresh_name(&mut taken, format!("{}~{}", x.name(a), x.name(b))));
        vertex_origin.push(Cell::Edge(e));
    }
    let centre0 = names.len();
    for f in 0..x.face_count() {
        names.push(fresh_name(&mut taken, format!("#{f}")));
        vertex_origin.push(Cell::Face(f));
    }

    let mut faces = Vec::new();
    let mut face_origin = Vec::new();
    for (f, face) in x.faces().iter().enumerate() {
        let c = centre0 + f;
        let k = face.len();
        for i in 0..k {
            let (a, b) = (face[i], face[(i + 1) % k]);
            let m = n + x.edge_id(a, b).expect("face edge exists");
            faces.push(vec![c, a, m]);
            faces.push(vec![c, m, b]);
            face_origin.extend([f, f]);
        }
    }
    let complex = Complex2::from_indexed(names, faces).expect("subdivision of a regular complex is regular");
    Subdivision { complex, vertex_origin, face_origin }
}

/// `base`, or `base` with primes appended until it is unused.
pub(crate) fn fresh_name(taken: &mut BTreeSet<String>, base: String) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}
