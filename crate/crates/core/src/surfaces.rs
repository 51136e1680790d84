//! Local relatedness of directed faces, local surfaces and local disks.
//!
//! A *slot* is a directed face together with one of its boundary steps
//! `u -> v`. Its partner is the next face after `f` in the cycle at `u -> v`,
//! oriented so that it runs `v -> u`. Partnering is a fixed-point-free
//! involution on slots, and local surfaces are the classes of directed faces
//! it generates.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::complex::{Complex2, DirectedFace};
use crate::rotation::RotationSystem;

/// Two locally related directed faces. `first` runs `edge.0 -> edge.1` and
/// `second` runs the other way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelatedPair {
    pub first: DirectedFace,
    pub second: DirectedFace,
    pub edge: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalSurface {
    /// Sorted directed faces of the class.
    pub faces: Vec<DirectedFace>,
    pub pairs: Vec<RelatedPair>,
}

/// A closed walk of directed faces around `anchor`. Face `faces[i]` is
/// related to `faces[i + 1]` through the edge from `anchor` to `spokes[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalDisk {
    pub anchor: usize,
    pub faces: Vec<DirectedFace>,
    pub spokes: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub all_disks: bool,
    pub one_disk_per_vertex: bool,
    pub sphere: bool,
}

/// Slot tables for a complex with a rotation system.
pub struct LocalStructure<'a> {
    x: &'a Complex2,
    walks: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    slot_face: Vec<DirectedFace>,
    partner: Vec<usize>,
}

impl<'a> LocalStructure<'a> {
    pub fn new(x: &'a Complex2, sigma: &RotationSystem) -> Self {
        let walks: Vec<Vec<usize>> = x.directed_faces().map(|df| x.directed_vertices(df)).collect();
        let mut offsets = Vec::with_capacity(walks.len() + 1);
        let mut slot_face = Vec::new();
        offsets.push(0);
        for (id, w) in walks.iter().enumerate() {
            slot_face.extend(std::iter::repeat(DirectedFace(id)).take(w.len()));
            offsets.push(slot_face.len());
        }
        let mut partner = vec![usize::MAX; slot_face.len()];
        for s in 0..slot_face.len() {
            let df = slot_face[s];
            let walk = &walks[df.id()];
            let i = s - offsets[df.id()];
            let (u, v) = (walk[i], walk[(i + 1) % walk.len()]);
            let cycle = sigma.cycle(x, u, v).expect("boundary step is an edge");
            let at = cycle.iter().position(|&f| f == df.face()).expect("face lies on its edge");
            let next = cycle[(at + 1) % cycle.len()];
            let other = x.orient_face(next, v, u).expect("next face lies on the edge");
            let j = walks[other.id()].iter().position(|&y| y == v).unwrap();
            partner[s] = offsets[other.id()] + j;
        }
        LocalStructure { x, walks, offsets, slot_face, partner }
    }

    pub fn slot_count(&self) -> usize {
        self.partner.len()
    }

    /// Slot of `df` whose step starts at vertex `u`.
    pub fn slot_at(&self, df: DirectedFace, u: usize) -> Option<usize> {
        let i = self.walks[df.id()].iter().position(|&y| y == u)?;
        Some(self.offsets[df.id()] + i)
    }

    pub fn slot_face(&self, s: usize) -> DirectedFace {
        self.slot_face[s]
    }

    /// The step `tail -> head` of a slot.
    pub fn slot_edge(&self, s: usize) -> (usize, usize) {
        let df = self.slot_face[s];
        let walk = &self.walks[df.id()];
        let i = s - self.offsets[df.id()];
        (walk[i], walk[(i + 1) % walk.len()])
    }

    pub fn partner(&self, s: usize) -> usize {
        self.partner[s]
    }

    /// Surface index of every directed face, with surfaces numbered in
    /// order of their smallest directed face.
    pub fn classes(&self) -> (Vec<usize>, usize) {
        let n = self.walks.len();
        let mut class = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if class[start] != usize::MAX {
                continue;
            }
            class[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(d) = queue.pop_front() {
                for s in self.offsets[d]..self.offsets[d + 1] {
                    let other = self.slot_face[self.partner[s]].id();
                    if class[other] == usize::MAX {
                        class[other] = count;
                        queue.push_back(other);
                    }
                }
            }
            count += 1;
        }
        (class, count)
    }

    pub fn surfaces(&self) -> Vec<LocalSurface> {
        let (class, count) = self.classes();
        let mut out = vec![LocalSurface { faces: Vec::new(), pairs: Vec::new() }; count];
        for (d, &c) in class.iter().enumerate() {
            out[c].faces.push(DirectedFace(d));
        }
        for s in 0..self.slot_count() {
            let t = self.partner[s];
            if s < t {
                let first = self.slot_face[s];
                out[class[first.id()]].pairs.push(RelatedPair {
                    first,
                    second: self.slot_face[t],
                    edge: self.slot_edge(s),
                });
            }
        }
        out
    }

    /// The local disks at `w`, each starting from its smallest directed face.
    pub fn walks_at(&self, w: usize) -> Vec<LocalDisk> {
        let mut faces_here: Vec<DirectedFace> = self
            .x
            .faces_at(w)
            .iter()
            .flat_map(|&f| [DirectedFace::new(f, false), DirectedFace::new(f, true)])
            .collect();
        faces_here.sort_unstable();
        let mut seen: BTreeMap<DirectedFace, bool> = faces_here.iter().map(|&d| (d, false)).collect();
        let mut out = Vec::new();
        for &start in &faces_here {
            if seen[&start] {
                continue;
            }
            let mut disk = LocalDisk { anchor: w, faces: Vec::new(), spokes: Vec::new() };
            let mut df = start;
            while !seen[&df] {
                seen.insert(df, true);
                let s = self.slot_at(df, w).expect("face contains w");
                disk.faces.push(df);
                disk.spokes.push(self.slot_edge(s).1);
                df = self.slot_face[self.partner[s]];
            }
            out.push(disk);
        }
        out
    }

    /// Surfaces paired with their statistics.
    pub fn analyse(&self) -> Vec<(LocalSurface, SurfaceStats)> {
        let surfaces = self.surfaces();
        let (class, _) = self.classes();
        let mut disks = vec![0usize; surfaces.len()];
        let mut all_disks = vec![true; surfaces.len()];
        let mut one_per_vertex = vec![true; surfaces.len()];
        for w in 0..self.x.vertex_count() {
            let mut here = vec![0usize; surfaces.len()];
            for disk in self.walks_at(w) {
                let c = class[disk.faces[0].id()];
                here[c] += 1;
                disks[c] += 1;
                all_disks[c] &= is_disk(&disk);
            }
            for (c, &k) in here.iter().enumerate() {
                if k > 1 {
                    one_per_vertex[c] = false;
                }
            }
        }
        surfaces
            .into_iter()
            .enumerate()
            .map(|(c, s)| {
                let (v, e, f) = (disks[c], s.pairs.len(), s.faces.len());
                let chi = v as i64 - e as i64 + f as i64;
                let stats = SurfaceStats {
                    vertices: v,
                    edges: e,
                    faces: f,
                    euler_characteristic: chi,
                    all_disks: all_disks[c],
                    one_disk_per_vertex: one_per_vertex[c],
                    sphere: all_disks[c] && one_per_vertex[c] && chi == 2,
                };
                (s, stats)
            })
            .collect()
    }
}

pub fn local_surfaces(x: &Complex2, sigma: &RotationSystem) -> Vec<LocalSurface> {
    LocalStructure::new(x, sigma).surfaces()
}

pub fn disk_walks_at(x: &Complex2, sigma: &RotationSystem, w: usize) -> Vec<LocalDisk> {
    LocalStructure::new(x, sigma).walks_at(w)
}

/// A walk is a disk when its spokes and its faces are pairwise distinct.
pub fn is_disk(disk: &LocalDisk) -> bool {
    let mut spokes = disk.spokes.clone();
    spokes.sort_unstable();
    let mut faces = disk.faces.clone();
    faces.sort_unstable();
    spokes.windows(2).all(|p| p[0] != p[1]) && faces.windows(2).all(|p| p[0] != p[1])
}

pub fn surface_stats(x: &Complex2, sigma: &RotationSystem, surface: &LocalSurface) -> SurfaceStats {
    LocalStructure::new(x, sigma)
        .analyse()
        .into_iter()
        .find(|(s, _)| s.faces == surface.faces)
        .map(|(_, stats)| stats)
        .expect("surface belongs to this complex and rotation system")
}
