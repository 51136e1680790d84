//! The fattening of a simplicial complex with a planar rotation system.
//!
//! fat(X, σ) adds a vertex `v_D` for every local disk `D`, a triangle `h_f`
//! for every directed face `f`, and a quadrilateral `R = [u, w, v_D', v_D]`
//! for every pair of locally related directed faces. The carrier keeps the
//! vertices and faces of X at their original indices; disk vertices follow
//! the original vertices, and h-faces (indexed by directed face id) and
//! rectangles follow the original faces.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::complex::{Complex2, DirectedEdge, DirectedFace};
use crate::graph::{classify_unique_embeddability, is_in_f, FClass, Multigraph, Uniqueness};
use crate::rotation::{is_planar_rotation_system, validate_rotation, RotationError, RotationSystem};
use crate::subdivision::fresh_name;
use crate::surfaces::{LocalDisk, LocalStructure, SurfaceStats};
use crate::topology::{is_simply_connected, Verdict, DEFAULT_TIETZE_BUDGET};
use crate::whitney::{check_whitney, first_non_2_connected_link, link_graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FatError {
    #[error("fattening needs a simplicial complex")]
    NotSimplicial,
    #[error("the link of `{0}` is not 2-connected")]
    NotLocally2Connected(String),
    #[error("the rotation system is not planar at `{0}`")]
    NonPlanarRotation(String),
    #[error("the induced rotation of the fattening is not planar at `{0}`")]
    PlanarityPostconditionFailed(String),
    #[error("the induced rotation of the fattening is inconsistent: {0}")]
    InconsistentRotation(RotationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiskVertex {
    /// Vertex index in the carrier.
    pub vertex: usize,
    pub disk: LocalDisk,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rectangle {
    /// Face index in the carrier.
    pub face: usize,
    /// The directed face whose step `edge.0 -> edge.1` the rectangle sits on.
    pub first: DirectedFace,
    /// The directed face related to `first`, running `edge.1 -> edge.0`.
    pub second: DirectedFace,
    pub edge: (usize, usize),
    /// Disks (indices into `disks`) at `edge.0` containing `first` and at
    /// `edge.1` containing `second`.
    pub disks: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatComplex {
    pub carrier: Complex2,
    pub original: Complex2,
    pub sigma: RotationSystem,
    pub disks: Vec<DiskVertex>,
    pub rectangles: Vec<Rectangle>,
    disk_of: BTreeMap<(usize, DirectedFace), usize>,
    rectangle_of_slot: BTreeMap<(DirectedFace, usize), usize>,
}

impl FatComplex {
    /// Carrier index of the face `h_f`.
    pub fn h_face(&self, df: DirectedFace) -> usize {
        self.original.face_count() + df.id()
    }

    /// Index into `disks` of the disk at `w` containing `df`.
    pub fn disk_of(&self, w: usize, df: DirectedFace) -> Option<usize> {
        self.disk_of.get(&(w, df)).copied()
    }

    /// Index into `rectangles` of the rectangle on the step of `df` leaving `tail`.
    pub fn rectangle_of_slot(&self, df: DirectedFace, tail: usize) -> Option<usize> {
        self.rectangle_of_slot.get(&(df, tail)).copied()
    }

    pub fn is_disk_vertex(&self, v: usize) -> bool {
        v >= self.original.vertex_count()
    }

    /// Names-based provenance for serialization.
    pub fn provenance(&self) -> Provenance {
        let name = |v: usize| self.carrier.name(v).to_string();
        Provenance {
            disks: self
                .disks
                .iter()
                .map(|d| DiskProvenance {
                    vertex: name(d.vertex),
                    anchor: name(d.disk.anchor),
                    faces: d.disk.faces.iter().map(|f| f.to_string()).collect(),
                })
                .collect(),
            h_faces: self
                .original
                .directed_faces()
                .map(|df| HProvenance { face: self.h_face(df), source: df.to_string() })
                .collect(),
            rectangles: self
                .rectangles
                .iter()
                .map(|r| RectangleProvenance {
                    face: r.face,
                    first: r.first.to_string(),
                    second: r.second.to_string(),
                    edge: [name(r.edge.0), name(r.edge.1)],
                    disks: [name(self.disks[r.disks.0].vertex), name(self.disks[r.disks.1].vertex)],
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub disks: Vec<DiskProvenance>,
    pub h_faces: Vec<HProvenance>,
    pub rectangles: Vec<RectangleProvenance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiskProvenance {
    pub vertex: String,
    pub anchor: String,
    pub faces: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HProvenance {
    pub face: usize,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectangleProvenance {
    pub face: usize,
    pub first: String,
    pub second: String,
    pub edge: [String; 2],
    pub disks: [String; 2],
}

pub fn fatten(x: &Complex2, sigma: &RotationSystem) -> Result<FatComplex, FatError> {
    if !x.is_simplicial() {
        return Err(FatError::NotSimplicial);
    }
    if let Some(v) = first_non_2_connected_link(x) {
        return Err(FatError::NotLocally2Connected(x.name(v).to_string()));
    }
    let check = is_planar_rotation_system(x, sigma);
    if let Some(v) = check.genera.iter().position(|&g| g > 0) {
        return Err(FatError::NonPlanarRotation(x.name(v).to_string()));
    }

    let ls = LocalStructure::new(x, sigma);
    let n0 = x.vertex_count();
    let mut names: Vec<String> = x.names().to_vec();
    let mut taken: BTreeSet<String> = names.iter().cloned().collect();
    let mut disks = Vec::new();
    let mut disk_of = BTreeMap::new();
    for w in 0..n0 {
        for disk in ls.walks_at(w) {
            let index = disks.len();
            for &df in &disk.faces {
                disk_of.insert((w, df), index);
            }
            names.push(fresh_name(&mut taken, format!("{}|{}", x.name(w), disk.faces[0])));
            disks.push(DiskVertex { vertex: n0 + index, disk });
        }
    }

    let mut faces: Vec<Vec<usize>> = x.faces().to_vec();
    for df in x.directed_faces() {
        faces.push(x.directed_vertices(df).into_iter().map(|w| n0 + disk_of[&(w, df)]).collect());
    }
    let mut rectangles = Vec::new();
    let mut rectangle_of_slot = BTreeMap::new();
    for s in 0..ls.slot_count() {
        let t = ls.partner(s);
        if s > t {
            continue;
        }
        let (u, w) = ls.slot_edge(s);
        let (first, second) = (ls.slot_face(s), ls.slot_face(t));
        let (d, d2) = (disk_of[&(u, first)], disk_of[&(w, second)]);
        let index = rectangles.len();
        rectangle_of_slot.insert((first, u), index);
        rectangle_of_slot.insert((second, w), index);
        rectangles.push(Rectangle { face: faces.len(), first, second, edge: (u, w), disks: (d, d2) });
        faces.push(vec![u, w, n0 + d2, n0 + d]);
    }

    let carrier = Complex2::from_indexed(names, faces).expect("fattening is a regular complex");
    Ok(FatComplex { carrier, original: x.clone(), sigma: sigma.clone(), disks, rectangles, disk_of, rectangle_of_slot })
}

/// The rotation system of the fattening: around an original edge the
/// original faces alternate with the rectangles between them, around the
/// h-edge of a rectangle the cycle is `(h_first, h_second, R)`, and around
/// a vertical edge the rectangles follow the disk walk.
pub fn induced_fat_rotation(fat: &FatComplex) -> Result<RotationSystem, FatError> {
    let x = &fat.original;
    let n0 = x.vertex_count();
    let mut raw: BTreeMap<DirectedEdge, Vec<usize>> = BTreeMap::new();
    for &(a, b) in x.edges() {
        let cycle = fat.sigma.cycle(x, a, b).expect("edge of the original");
        let mut out = Vec::with_capacity(2 * cycle.len());
        for &f in &cycle {
            let df = x.orient_face(f, a, b).expect("face lies on its edge");
            out.push(f);
            out.push(fat.rectangles[fat.rectangle_of_slot[&(df, a)]].face);
        }
        raw.insert(DirectedEdge::new(a, b), out);
    }
    for r in &fat.rectangles {
        let (d, d2) = (n0 + r.disks.0, n0 + r.disks.1);
        raw.insert(DirectedEdge::new(d, d2), vec![fat.h_face(r.first), fat.h_face(r.second), r.face]);
    }
    for dv in &fat.disks {
        let u = dv.disk.anchor;
        let cycle = dv.disk.faces.iter().map(|&df| fat.rectangles[fat.rectangle_of_slot[&(df, u)]].face).collect();
        raw.insert(DirectedEdge::new(dv.vertex, u), cycle);
    }
    let sigma = validate_rotation(&fat.carrier, &raw).map_err(FatError::InconsistentRotation)?;
    let check = is_planar_rotation_system(&fat.carrier, &sigma);
    if let Some(v) = check.genera.iter().position(|&g| g > 0) {
        return Err(FatError::PlanarityPostconditionFailed(fat.carrier.name(v).to_string()));
    }
    Ok(sigma)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FatSurfaceType {
    /// `{h_f : f in S}` for the local surface `S` of X with this index.
    SFat(usize),
    /// `f`, `h_f` reversed and the rectangles on the steps of `f`.
    TFace(DirectedFace),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FatSurfaceEntry {
    pub faces: usize,
    pub kind: Option<FatSurfaceType>,
    pub stats: SurfaceStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FatReport {
    /// Every link classifies as 3-connected planar or theta.
    pub links_ok: bool,
    /// Every disk vertex has a wheel as its link.
    pub wheels_ok: bool,
    /// Every edge lies in at least three faces.
    pub edges_ok: bool,
    /// One local disk per vertex and surface, and every walk is a disk.
    pub disks_ok: bool,
    /// Every local surface is of type S_fat or T_f.
    pub types_ok: bool,
    /// Whether X was proven simply connected, in which case every local
    /// surface must have Euler characteristic 2.
    pub simply_connected: bool,
    pub euler_ok: bool,
    pub whitney: bool,
    pub s_fat_count: usize,
    pub t_face_count: usize,
    pub directed_faces_covered: usize,
    pub surfaces: Vec<FatSurfaceEntry>,
    pub failures: Vec<String>,
    pub ok: bool,
}

pub fn verify_fat(fat: &FatComplex, sigma: &RotationSystem) -> FatReport {
    let carrier = &fat.carrier;
    let mut failures = Vec::new();

    let mut links_ok = true;
    let mut wheels_ok = true;
    for v in 0..carrier.vertex_count() {
        let link = link_graph(carrier, v).expect("vertex in range");
        let unique = classify_unique_embeddability(&link.graph).map(|c| c.tag == Uniqueness::UniqueA).unwrap_or(false);
        let theta = matches!(is_in_f(&link.graph), Ok(Some(FClass::Theta)));
        if !unique && !theta {
            links_ok = false;
            failures.push(format!("link of `{}` is neither 3-connected planar nor theta", carrier.name(v)));
        }
        if fat.is_disk_vertex(v) && !is_wheel(&link.graph) {
            wheels_ok = false;
            failures.push(format!("link of `{}` is not a wheel", carrier.name(v)));
        }
    }

    let mut edges_ok = true;
    for (e, &(a, b)) in carrier.edges().iter().enumerate() {
        if carrier.faces_on_edge(e).len() < 3 {
            edges_ok = false;
            failures.push(format!("edge {}-{} lies in fewer than three faces", carrier.name(a), carrier.name(b)));
        }
    }

    let expected = expected_types(fat);
    let analysed = LocalStructure::new(carrier, sigma).analyse();
    let simply_connected = matches!(
        is_simply_connected(&fat.original, DEFAULT_TIETZE_BUDGET),
        Ok(sc) if sc.verdict == Verdict::Proven
    );
    let (mut disks_ok, mut types_ok, mut euler_ok) = (true, true, true);
    let (mut s_fat_count, mut t_face_count, mut covered) = (0, 0, 0);
    let mut surfaces = Vec::with_capacity(analysed.len());
    for (i, (surface, stats)) in analysed.iter().enumerate() {
        covered += surface.faces.len();
        if !stats.one_disk_per_vertex || !stats.all_disks {
            disks_ok = false;
            failures.push(format!("local surface {i} has a vertex without exactly one disk"));
        }
        let kind = expected.get(&surface.faces).copied();
        match kind {
            Some(FatSurfaceType::SFat(_)) => s_fat_count += 1,
            Some(FatSurfaceType::TFace(_)) => t_face_count += 1,
            None => {
                types_ok = false;
                failures.push(format!("local surface {i} is neither S_fat nor T_f"));
            }
        }
        if simply_connected && stats.euler_characteristic != 2 {
            euler_ok = false;
            failures.push(format!("local surface {i} has Euler characteristic {}", stats.euler_characteristic));
        }
        surfaces.push(FatSurfaceEntry { faces: surface.faces.len(), kind, stats: *stats });
    }
    let whitney = check_whitney(carrier).is_whitney;
    if !whitney {
        failures.push("the fattening is not Whitney".to_string());
    }
    FatReport {
        links_ok,
        wheels_ok,
        edges_ok,
        disks_ok,
        types_ok,
        simply_connected,
        euler_ok,
        whitney,
        s_fat_count,
        t_face_count,
        directed_faces_covered: covered,
        surfaces,
        ok: failures.is_empty(),
        failures,
    }
}

/// The face sets of the S_fat and T_f surfaces, keyed by sorted faces.
fn expected_types(fat: &FatComplex) -> BTreeMap<Vec<DirectedFace>, FatSurfaceType> {
    let x = &fat.original;
    let mut out = BTreeMap::new();
    for (i, surface) in LocalStructure::new(x, &fat.sigma).surfaces().iter().enumerate() {
        let mut faces: Vec<DirectedFace> =
            surface.faces.iter().map(|&df| DirectedFace::new(fat.h_face(df), false)).collect();
        faces.sort_unstable();
        out.insert(faces, FatSurfaceType::SFat(i));
    }
    for df in x.directed_faces() {
        let mut faces = vec![df, DirectedFace::new(fat.h_face(df), true)];
        let walk = x.directed_vertices(df);
        for i in 0..walk.len() {
            let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
            let r = &fat.rectangles[fat.rectangle_of_slot[&(df, a)]];
            faces.push(fat.carrier.orient_face(r.face, b, a).expect("rectangle contains its edge"));
        }
        faces.sort_unstable();
        out.insert(faces, FatSurfaceType::TFace(df));
    }
    out
}

/// A hub adjacent to every other vertex, which form a cycle of length at
/// least three; the graph is simple.
pub fn is_wheel(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    if n < 4 || !g.is_simple() || g.edge_count() != 2 * (n - 1) {
        return false;
    }
    let degrees = g.degrees();
    let Some(hub) = (0..n).find(|&v| degrees[v] == n - 1) else { return false };
    let rim: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
    let mut cycle = Multigraph::new(n - 1);
    for (i, e) in g.edges().iter().enumerate() {
        if !e.ends.contains(&hub) {
            let [a, b] = e.ends.map(|v| rim.binary_search(&v).unwrap());
            cycle.add_edge(i, a, b);
        }
    }
    cycle.is_connected() && cycle.degrees().iter().all(|&d| d == 2)
}
