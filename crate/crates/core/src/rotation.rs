//! Rotation systems of 2-complexes: a cyclic order of the faces around every
//! directed edge, reversed for the opposite direction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::complex::{canonical_cycle, Complex2, DirectedEdge};
use crate::graph::{face_count_and_genus, planar_embedding, GraphRotation};
use crate::whitney::{check_whitney, g_subgraph, link_graph, y_vertices, LinkGraph};

pub const DEFAULT_ORACLE_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("the cycle at {tail}->{head} is not the reverse of the cycle at {head}->{tail}")]
    ReversalViolation { tail: String, head: String },
    #[error("face {face} lies on edge {tail}-{head} but is missing from its cycle")]
    MissingFace { tail: String, head: String, face: usize },
    #[error("face {face} does not lie on edge {tail}-{head}")]
    ForeignFace { tail: String, head: String, face: usize },
    #[error("face {face} appears twice in the cycle at {tail}->{head}")]
    DuplicateFace { tail: String, head: String, face: usize },
    #[error("{tail}->{head} is not an edge")]
    UnknownEdge { tail: String, head: String },
    #[error("no cycle given for edge {tail}-{head}, which lies in {faces} faces")]
    MissingEdge { tail: String, head: String, faces: usize },
    #[error("complex is not Whitney: {0}")]
    NotWhitney(String),
    #[error("oracle search exceeded its budget of {budget} nodes")]
    TooLarge { budget: u64 },
}

/// Face cycles indexed by edge id. The cycle for edge `(a, b)` with `a < b`
/// is the order around the direction `a -> b`, rotated to start at its
/// smallest face.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RotationSystem {
    cycles: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub(crate) fn from_edge_cycles(cycles: Vec<Vec<usize>>) -> Self {
        RotationSystem { cycles: cycles.iter().map(|c| canonical_cycle(c)).collect() }
    }

    /// The unique system of a complex in which no edge lies in more than two faces.
    pub fn trivial(x: &Complex2) -> Option<Self> {
        (0..x.edge_count())
            .all(|e| x.faces_on_edge(e).len() <= 2)
            .then(|| Self::from_edge_cycles((0..x.edge_count()).map(|e| x.faces_on_edge(e).to_vec()).collect()))
    }

    pub fn edge_cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// The cycle around the edge with id `e`, in the direction from its
    /// smaller endpoint to its larger one.
    pub fn edge_cycle(&self, e: usize) -> &[usize] {
        &self.cycles[e]
    }

    /// The cycle around a directed edge.
    pub fn cycle(&self, x: &Complex2, tail: usize, head: usize) -> Option<Vec<usize>> {
        let e = x.edge_id(tail, head)?;
        let mut c = self.cycles[e].clone();
        if tail > head {
            c.reverse();
        }
        Some(canonical_cycle(&c))
    }

    pub fn reversed(&self) -> Self {
        Self::from_edge_cycles(
            self.cycles
                .iter()
                .map(|c| {
                    let mut r = c.clone();
                    r.reverse();
                    r
                })
                .collect(),
        )
    }

    /// The smaller of this system and its reversal.
    pub fn canonical_up_to_reversal(&self) -> Self {
        let r = self.reversed();
        if r < *self {
            r
        } else {
            self.clone()
        }
    }

    /// Cycles keyed by `"u->v"`, with `u` the endpoint of smaller index.
    pub fn to_named_map(&self, x: &Complex2) -> BTreeMap<String, Vec<usize>> {
        x.edges()
            .iter()
            .zip(&self.cycles)
            .map(|(&(a, b), c)| (format!("{}->{}", x.name(a), x.name(b)), c.clone()))
            .collect()
    }
}

/// Completes a partial map of directed-edge cycles into a rotation system.
/// Edges lying in at most two faces may be omitted.
pub fn validate_rotation(
    x: &Complex2,
    raw: &BTreeMap<DirectedEdge, Vec<usize>>,
) -> Result<RotationSystem, RotationError> {
    let names = |t: usize, h: usize| (x.name(t).to_string(), x.name(h).to_string());
    let mut cycles: Vec<Option<Vec<usize>>> = vec![None; x.edge_count()];
    for (de, cycle) in raw {
        let (tail, head) = names(de.tail, de.head);
        let Some(e) = x.edge_id(de.tail, de.head) else {
            return Err(RotationError::UnknownEdge { tail, head });
        };
        let on_edge = x.faces_on_edge(e);
        let mut seen = BTreeSet::new();
        for &f in cycle {
            if !on_edge.contains(&f) {
                return Err(RotationError::ForeignFace { tail, head, face: f });
            }
            if !seen.insert(f) {
                return Err(RotationError::DuplicateFace { tail, head, face: f });
            }
        }
        if let Some(&f) = on_edge.iter().find(|f| !seen.contains(f)) {
            return Err(RotationError::MissingFace { tail, head, face: f });
        }
        let mut forward = cycle.clone();
        if de.tail > de.head {
            forward.reverse();
        }
        let forward = canonical_cycle(&forward);
        match &cycles[e] {
            Some(existing) if *existing != forward => {
                return Err(RotationError::ReversalViolation { tail, head });
            }
            _ => cycles[e] = Some(forward),
        }
    }
    let mut out = Vec::with_capacity(cycles.len());
    for (e, c) in cycles.into_iter().enumerate() {
        match c {
            Some(c) => out.push(c),
            None if x.faces_on_edge(e).len() <= 2 => out.push(x.faces_on_edge(e).to_vec()),
            None => {
                let (a, b) = x.edge(e);
                let (tail, head) = names(a, b);
                return Err(RotationError::MissingEdge { tail, head, faces: x.faces_on_edge(e).len() });
            }
        }
    }
    Ok(RotationSystem::from_edge_cycles(out))
}

/// The rotation of the link graph at `v` obtained by replacing every face
/// of the cycle at `v -> u` by the end at `u` of the link edge it contributes.
pub fn induce_link_rotation(x: &Complex2, sigma: &RotationSystem, link: &LinkGraph) -> GraphRotation {
    let v = link.vertex;
    let g = &link.graph;
    let cycles = (0..g.vertex_count())
        .map(|i| {
            let u = g.label(i);
            sigma
                .cycle(x, v, u)
                .expect("link vertices are neighbours")
                .into_iter()
                .map(|f| {
                    let pos = link.edge_of_face(f).expect("face through v");
                    if g.edge(pos).ends[0] == i {
                        2 * pos
                    } else {
                        2 * pos + 1
                    }
                })
                .collect()
        })
        .collect();
    GraphRotation::new(g, cycles).expect("induced rotation covers every link dart")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarityCheck {
    pub planar: bool,
    /// Genus of the induced rotation at each vertex, summed over link components.
    pub genera: Vec<usize>,
}

pub fn is_planar_rotation_system(x: &Complex2, sigma: &RotationSystem) -> PlanarityCheck {
    let genera: Vec<usize> = (0..x.vertex_count())
        .map(|v| {
            let link = link_graph(x, v).expect("vertex in range");
            let rot = induce_link_rotation(x, sigma, &link);
            face_count_and_genus(&link.graph, &rot).1
        })
        .collect();
    PlanarityCheck { planar: genera.iter().all(|&g| g == 0), genera }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Propagation,
    Oracle,
}

/// Planar rotation systems up to global reversal; each is reported as the
/// smaller of itself and its reversal, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub method: Method,
    pub systems: Vec<RotationSystem>,
    /// Why no system exists, when the search can say.
    pub witness: Option<String>,
    /// Search nodes visited by the oracle.
    pub nodes: u64,
}

/// Propagates the reflection of one link embedding along G(X).
pub fn enumerate_planar_rotation_systems(x: &Complex2) -> Result<Enumeration, RotationError> {
    let report = check_whitney(x);
    if !report.is_whitney {
        return Err(RotationError::NotWhitney(report.witnesses.join("; ")));
    }
    let empty = |witness: String| Enumeration {
        method: Method::Propagation,
        systems: Vec::new(),
        witness: Some(witness),
        nodes: 0,
    };

    // candidate cycle at v -> u read off the planar embedding of the link of v
    let y = y_vertices(x);
    let mut candidate: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for &v in &y {
        let link = link_graph(x, v).expect("vertex in range");
        let embedding = planar_embedding(&link.graph).expect("Whitney links are connected");
        let rot = embedding.rotation().expect("Whitney links are planar");
        for i in 0..link.graph.vertex_count() {
            let faces = rot.cycle(i).iter().map(|&d| link.face_of_edge(d / 2)).collect();
            candidate.insert((v, link.graph.label(i)), faces);
        }
    }
    let reverse = |c: &[usize]| {
        let mut r = c.to_vec();
        r.reverse();
        canonical_cycle(&r)
    };

    let g = g_subgraph(x);
    let mut flip: BTreeMap<usize, bool> = BTreeMap::new();
    if let Some(&root) = y.first() {
        flip.insert(root, false);
        let root_pos = g.labels().binary_search(&root).expect("Y(X) is the vertex set of G(X)");
        let mut adjacency = vec![Vec::new(); g.vertex_count()];
        for e in g.edges() {
            adjacency[e.ends[0]].push(e.ends[1]);
            adjacency[e.ends[1]].push(e.ends[0]);
        }
        let mut queue = VecDeque::from([root_pos]);
        let mut visited = vec![false; g.vertex_count()];
        visited[root_pos] = true;
        while let Some(p) = queue.pop_front() {
            let v = g.label(p);
            for &q in &adjacency[p] {
                let w = g.label(q);
                let a = canonical_cycle(&candidate[&(v, w)]);
                let b = canonical_cycle(&candidate[&(w, v)]);
                let relative = if reverse(&a) == b {
                    false
                } else if a == b {
                    true
                } else {
                    return Ok(empty(format!(
                        "the link embeddings at `{}` and `{}` order the faces on their edge differently",
                        x.name(v),
                        x.name(w)
                    )));
                };
                let wanted = flip[&v] ^ relative;
                match flip.get(&w) {
                    Some(&have) if have != wanted => {
                        return Ok(empty(format!(
                            "reflection choices conflict across edge {}-{}",
                            x.name(v),
                            x.name(w)
                        )));
                    }
                    Some(_) => {}
                    None => {
                        flip.insert(w, wanted);
                    }
                }
                if !visited[q] {
                    visited[q] = true;
                    queue.push_back(q);
                }
            }
        }
    }

    let oriented = |v: usize, u: usize| {
        let c = &candidate[&(v, u)];
        if flip[&v] {
            reverse(c)
        } else {
            c.clone()
        }
    };
    let cycles = x
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| {
            if flip.contains_key(&a) {
                oriented(a, b)
            } else if flip.contains_key(&b) {
                reverse(&oriented(b, a))
            } else {
                x.faces_on_edge(e).to_vec()
            }
        })
        .collect();
    let sigma = RotationSystem::from_edge_cycles(cycles);
    let check = is_planar_rotation_system(x, &sigma);
    if let Some(v) = check.genera.iter().position(|&g| g > 0) {
        return Ok(empty(format!("the induced rotation at `{}` has genus {}", x.name(v), check.genera[v])));
    }
    Ok(Enumeration {
        method: Method::Propagation,
        systems: vec![sigma.canonical_up_to_reversal()],
        witness: None,
        nodes: 0,
    })
}

/// Exhaustive search over cyclic orders around every edge in three or more
/// faces, pruning as soon as the rotation at some vertex is fully determined
/// and not planar.
pub fn enumerate_by_oracle(x: &Complex2, budget: u64) -> Result<Enumeration, RotationError> {
    let free: Vec<usize> = (0..x.edge_count()).filter(|&e| x.faces_on_edge(e).len() >= 3).collect();

    // order free edges so that vertices are completed early
    let rank = bfs_rank(x);
    let mut order = free.clone();
    order.sort_by_key(|&e| {
        let (a, b) = x.edge(e);
        (rank[a].max(rank[b]), rank[a].min(rank[b]), e)
    });
    let mut last_step = vec![None; x.vertex_count()];
    for (step, &e) in order.iter().enumerate() {
        let (a, b) = x.edge(e);
        last_step[a] = Some(step);
        last_step[b] = Some(step);
    }
    let mut completes = vec![Vec::new(); order.len()];
    let mut fixed_vertices = Vec::new();
    for v in 0..x.vertex_count() {
        match last_step[v] {
            Some(s) => completes[s].push(v),
            None => fixed_vertices.push(v),
        }
    }

    let mut search = Search {
        x,
        links: (0..x.vertex_count()).map(|v| link_graph(x, v).expect("vertex in range")).collect(),
        cycles: (0..x.edge_count()).map(|e| x.faces_on_edge(e).to_vec()).collect(),
        options: order.iter().map(|&e| cyclic_orders(x.faces_on_edge(e))).collect(),
        order,
        completes,
        nodes: 0,
        budget,
        found: BTreeSet::new(),
    };
    let witness = fixed_vertices
        .iter()
        .find(|&&v| !search.planar_at(v))
        .map(|&v| format!("the forced rotation at `{}` is not planar", x.name(v)));
    if witness.is_none() {
        search.descend(0)?;
    }
    let systems: Vec<RotationSystem> = search.found.into_iter().collect();
    let witness = witness.or_else(|| {
        systems.is_empty().then(|| "no combination of cyclic orders is planar at every vertex".to_string())
    });
    Ok(Enumeration { method: Method::Oracle, systems, witness, nodes: search.nodes })
}

struct Search<'a> {
    x: &'a Complex2,
    links: Vec<LinkGraph>,
    cycles: Vec<Vec<usize>>,
    options: Vec<Vec<Vec<usize>>>,
    order: Vec<usize>,
    completes: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
    found: BTreeSet<RotationSystem>,
}

impl Search<'_> {
    fn descend(&mut self, step: usize) -> Result<(), RotationError> {
        if step == self.order.len() {
            let sigma = RotationSystem::from_edge_cycles(self.cycles.clone());
            self.found.insert(sigma.canonical_up_to_reversal());
            return Ok(());
        }
        let e = self.order[step];
        for i in 0..self.options[step].len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(RotationError::TooLarge { budget: self.budget });
            }
            self.cycles[e] = self.options[step][i].clone();
            if (0..self.completes[step].len()).all(|j| self.planar_at(self.completes[step][j])) {
                self.descend(step + 1)?;
            }
        }
        Ok(())
    }

    fn planar_at(&self, v: usize) -> bool {
        let link = &self.links[v];
        let g = &link.graph;
        let cycles = (0..g.vertex_count())
            .map(|i| {
                let u = g.label(i);
                let e = self.x.edge_id(v, u).expect("link vertices are neighbours");
                let mut faces = self.cycles[e].clone();
                if v > u {
                    faces.reverse();
                }
                faces
                    .into_iter()
                    .map(|f| {
                        let pos = link.edge_of_face(f).expect("face through v");
                        if g.edge(pos).ends[0] == i {
                            2 * pos
                        } else {
                            2 * pos + 1
                        }
                    })
                    .collect()
            })
            .collect();
        face_count_and_genus(g, &GraphRotation::from_cycles_unchecked(cycles)).1 == 0
    }
}

/// Breadth-first discovery rank of every vertex of the 1-skeleton.
fn bfs_rank(x: &Complex2) -> Vec<usize> {
    let mut rank = vec![usize::MAX; x.vertex_count()];
    let mut next = 0;
    for s in 0..x.vertex_count() {
        if rank[s] != usize::MAX {
            continue;
        }
        rank[s] = next;
        next += 1;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in x.neighbours(v) {
                if rank[u] == usize::MAX {
                    rank[u] = next;
                    next += 1;
                    queue.push_back(u);
                }
            }
        }
    }
    rank
}

/// All cyclic orders of `items` starting with the first item.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let item = rest.remove(i);
            prefix.push(item);
            extend(prefix, rest, out);
            prefix.pop();
            rest.insert(i, item);
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![items[0]], &mut items[1..].to_vec(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::example;

    fn book_rotation(uv: Vec<usize>, vu: Vec<usize>) -> Result<RotationSystem, RotationError> {
        let book = example("book3").unwrap();
        let raw = BTreeMap::from([(DirectedEdge::new(0, 1), uv), (DirectedEdge::new(1, 0), vu)]);
        validate_rotation(&book, &raw)
    }

    #[test]
    fn validation_examples() {
        let tet = example("tetrahedron").unwrap();
        let sigma = validate_rotation(&tet, &BTreeMap::new()).unwrap();
        assert_eq!(Some(sigma.clone()), RotationSystem::trivial(&tet));
        assert_eq!(sigma.reversed(), sigma);

        assert!(matches!(book_rotation(vec![0, 1, 2], vec![0, 1, 2]), Err(RotationError::ReversalViolation { .. })));
        let sigma = book_rotation(vec![0, 1, 2], vec![2, 1, 0]).unwrap();
        assert_eq!(sigma.edge_cycle(0), &[0, 1, 2]);

        let book = example("book3").unwrap();
        assert!(matches!(validate_rotation(&book, &BTreeMap::new()), Err(RotationError::MissingEdge { faces: 3, .. })));
        let one = |c: Vec<usize>| validate_rotation(&book, &BTreeMap::from([(DirectedEdge::new(1, 0), c)]));
        assert!(matches!(one(vec![0, 1]), Err(RotationError::MissingFace { face: 2, .. })));
        assert!(matches!(one(vec![0, 1, 1]), Err(RotationError::DuplicateFace { face: 1, .. })));
        let bad = validate_rotation(&book, &BTreeMap::from([(DirectedEdge::new(0, 2), vec![0, 1, 2])]));
        assert!(matches!(bad, Err(RotationError::ForeignFace { face: 1, .. })));
        let bad = validate_rotation(&book, &BTreeMap::from([(DirectedEdge::new(2, 3), vec![0])]));
        assert!(matches!(bad, Err(RotationError::UnknownEdge { .. })));
        assert_eq!(one(vec![0, 2, 1]).unwrap().edge_cycle(0), &[0, 1, 2]);
    }

    #[test]
    fn induced_rotation_on_book_spine() {
        let book = example("book3").unwrap();
        let sigma = book_rotation(vec![0, 1, 2], vec![2, 1, 0]).unwrap();
        let link = link_graph(&book, 0).unwrap();
        let rot = induce_link_rotation(&book, &sigma, &link);
        let centre = link.link_vertex(1).unwrap();
        let around: Vec<&str> =
            rot.cycle(centre).iter().map(|&d| book.name(link.graph.label(link.graph.dart_vertex(d ^ 1)))).collect();
        assert_eq!(around, vec!["a", "b", "c"]);
        assert!(is_planar_rotation_system(&book, &sigma).planar);
    }

    #[test]
    fn planarity_examples() {
        let tet = example("tetrahedron").unwrap();
        let check = is_planar_rotation_system(&tet, &RotationSystem::trivial(&tet).unwrap());
        assert_eq!(check, PlanarityCheck { planar: true, genera: vec![0; 4] });
        let torus = example("csaszar-torus").unwrap();
        assert!(is_planar_rotation_system(&torus, &RotationSystem::trivial(&torus).unwrap()).planar);
    }

    #[test]
    fn cone_over_k5_has_no_planar_system() {
        let cone = example("cone-k5").unwrap();
        let result = enumerate_by_oracle(&cone, DEFAULT_ORACLE_BUDGET).unwrap();
        assert!(result.systems.is_empty());
        assert!(result.witness.is_some());
        assert!(matches!(enumerate_planar_rotation_systems(&cone), Err(RotationError::NotWhitney(_))));
    }

    #[test]
    fn propagation_agrees_with_oracle() {
        for name in ["tetrahedron", "octahedron", "icosahedron", "csaszar-torus"] {
            let x = example(name).unwrap();
            let prop = enumerate_planar_rotation_systems(&x).unwrap();
            let oracle = enumerate_by_oracle(&x, DEFAULT_ORACLE_BUDGET).unwrap();
            assert_eq!(prop.systems.len(), 1, "{name}");
            assert_eq!(prop.systems, oracle.systems, "{name}");
        }
    }

    #[test]
    fn oracle_on_non_whitney_complexes() {
        let book = example("book3").unwrap();
        assert_eq!(enumerate_by_oracle(&book, DEFAULT_ORACLE_BUDGET).unwrap().systems.len(), 1);
        assert!(matches!(enumerate_by_oracle(&book, 1), Err(RotationError::TooLarge { budget: 1 })));
    }

    #[test]
    fn cyclic_order_counts() {
        assert_eq!(cyclic_orders(&[4, 5, 6]), vec![vec![4, 5, 6], vec![4, 6, 5]]);
        assert_eq!(cyclic_orders(&[1, 2, 3, 4, 5]).len(), 24);
    }
}
