//! Link graphs, the graph G(X) of edges in at least three faces, the vertex
//! set Y(X), and the Whitney test.

use serde::Serialize;

use crate::complex::{Complex2, ComplexError};
use crate::graph::{is_in_f, planar_embedding, FClass, Multigraph};

/// The link graph of a vertex `v`: one vertex per neighbour of `v`, and one
/// edge per face through `v` joining the two neighbours of `v` in that face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkGraph {
    pub vertex: usize,
    /// Vertex labels are complex vertex ids; edge ids are face indices and
    /// each edge runs from the predecessor of `v` to its successor in the
    /// stored orientation of the face.
    pub graph: Multigraph,
}

impl LinkGraph {
    /// Position of complex vertex `u` among the link vertices.
    pub fn link_vertex(&self, u: usize) -> Option<usize> {
        self.graph.labels().binary_search(&u).ok()
    }

    /// Position of the link edge contributed by face `f`.
    pub fn edge_of_face(&self, f: usize) -> Option<usize> {
        self.graph.edges().binary_search_by_key(&f, |e| e.id).ok()
    }

    /// The face that contributed the link edge at position `pos`.
    pub fn face_of_edge(&self, pos: usize) -> usize {
        self.graph.edge(pos).id
    }
}

pub fn link_graph(x: &Complex2, v: usize) -> Result<LinkGraph, ComplexError> {
    if v >= x.vertex_count() {
        return Err(ComplexError::UnknownVertex(format!("#{v}")));
    }
    let neighbours = x.neighbours(v);
    let mut graph = Multigraph::with_labels(neighbours.clone());
    let index = |u: usize| neighbours.binary_search(&u).expect("face neighbour is adjacent");
    for &f in x.faces_at(v) {
        let face = x.face(f);
        let k = face.len();
        let i = face.iter().position(|&y| y == v).expect("face contains v");
        let (pred, succ) = (face[(i + k - 1) % k], face[(i + 1) % k]);
        graph.add_edge(f, index(pred), index(succ));
    }
    Ok(LinkGraph { vertex: v, graph })
}

/// The subgraph of the 1-skeleton formed by edges lying in at least three
/// faces. Vertex labels and edge ids refer to the complex.
pub fn g_subgraph(x: &Complex2) -> Multigraph {
    let heavy: Vec<usize> = (0..x.edge_count()).filter(|&e| x.faces_on_edge(e).len() >= 3).collect();
    let mut vertices: Vec<usize> = heavy
        .iter()
        .flat_map(|&e| {
            let (a, b) = x.edge(e);
            [a, b]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    let mut g = Multigraph::with_labels(vertices.clone());
    for e in heavy {
        let (a, b) = x.edge(e);
        let ia = vertices.binary_search(&a).unwrap();
        let ib = vertices.binary_search(&b).unwrap();
        g.add_edge(e, ia, ib);
    }
    g
}

/// Vertices whose link graph has a vertex of degree at least three.
pub fn y_vertices(x: &Complex2) -> Vec<usize> {
    (0..x.vertex_count()).filter(|&v| x.edges_at(v).iter().any(|&e| x.faces_on_edge(e).len() >= 3)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkVerdict {
    pub vertex: String,
    pub class: Option<FClass>,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WhitneyReport {
    pub is_whitney: bool,
    pub links: Vec<LinkVerdict>,
    pub y_vertices: Vec<String>,
    pub g_edge_count: usize,
    /// Vertex sets of the components of G(X).
    pub g_components: Vec<Vec<String>>,
    /// The empty graph counts as connected.
    pub g_connected: bool,
    pub witnesses: Vec<String>,
}

pub fn check_whitney(x: &Complex2) -> WhitneyReport {
    let mut links = Vec::with_capacity(x.vertex_count());
    let mut witnesses = Vec::new();
    for v in 0..x.vertex_count() {
        let link = link_graph(x, v).expect("vertex in range");
        let class = is_in_f(&link.graph).unwrap_or(None);
        let witness = class.is_none().then(|| link_failure(x, &link));
        if let Some(w) = &witness {
            witnesses.push(w.clone());
        }
        links.push(LinkVerdict { vertex: x.name(v).to_string(), class, witness });
    }

    let g = g_subgraph(x);
    let (comp, count) = g.components();
    let mut g_components = vec![Vec::new(); count];
    for (i, &c) in comp.iter().enumerate() {
        g_components[c].push(x.name(g.label(i)).to_string());
    }
    let g_connected = count <= 1;
    if !g_connected {
        let parts: Vec<String> = g_components.iter().map(|c| format!("{{{}}}", c.join(", "))).collect();
        witnesses.push(format!("G(X) has {count} components: {}", parts.join(" | ")));
    }

    WhitneyReport {
        is_whitney: witnesses.is_empty(),
        links,
        y_vertices: y_vertices(x).into_iter().map(|v| x.name(v).to_string()).collect(),
        g_edge_count: g.edge_count(),
        g_components,
        g_connected,
        witnesses,
    }
}

fn link_failure(x: &Complex2, link: &LinkGraph) -> String {
    let name = x.name(link.vertex);
    let g = &link.graph;
    if !g.is_connected() {
        return format!("link of `{name}` is disconnected");
    }
    if let Some(c) = g.cut_vertex() {
        return format!("link of `{name}` has cut vertex `{}`", x.name(g.label(c)));
    }
    if !g.is_k_connected(2) {
        return format!("link of `{name}` is not 2-connected");
    }
    if matches!(planar_embedding(g), Ok(p) if !p.is_planar()) {
        return format!("link of `{name}` is not planar");
    }
    format!("link of `{name}` is not a cycle, a theta subdivision or a subdivided 3-connected planar graph")
}

/// The first vertex whose link graph is not 2-connected.
pub fn first_non_2_connected_link(x: &Complex2) -> Option<usize> {
    (0..x.vertex_count()).find(|&v| !link_graph(x, v).expect("vertex in range").graph.is_k_connected(2))
}
