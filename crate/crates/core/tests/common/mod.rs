//! Exhaustive small multigraphs and brute-force embedding oracles shared by
//! the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

/// A multigraph as a symmetric multiplicity matrix; the diagonal counts loops.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmallGraph {
    pub n: usize,
    pub mult: Vec<Vec<u8>>,
}

impl SmallGraph {
    pub fn single_vertex() -> Self {
        SmallGraph { n: 1, mult: vec![vec![0]] }
    }

    pub fn edge_count(&self) -> usize {
        let mut m = 0;
        for i in 0..self.n {
            for j in i..self.n {
                m += self.mult[i][j] as usize;
            }
        }
        m
    }

    /// Edge list with loops and parallel edges spelled out, in matrix order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i..self.n {
                for _ in 0..self.mult[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn with_edge(&self, i: usize, j: usize) -> Self {
        let mut g = self.clone();
        g.mult[i][j] += 1;
        if i != j {
            g.mult[j][i] += 1;
        }
        g
    }

    fn with_pendant(&self, i: usize) -> Self {
        let mut mult: Vec<Vec<u8>> = self.mult.iter().map(|r| r.iter().copied().chain([0]).collect()).collect();
        mult.push(vec![0; self.n + 1]);
        mult[i][self.n] = 1;
        mult[self.n][i] = 1;
        SmallGraph { n: self.n + 1, mult }
    }

    fn degree(&self, v: usize) -> usize {
        (0..self.n).map(|u| self.mult[v][u] as usize * if u == v { 2 } else { 1 }).sum()
    }

    /// The lexicographically smallest relabelled matrix over all relabellings
    /// that respect a vertex invariant.
    pub fn canonical(&self) -> Self {
        let invariant = |v: usize| {
            let mut row: Vec<u8> = (0..self.n).filter(|&u| u != v).map(|u| self.mult[v][u]).collect();
            row.sort_unstable();
            (self.degree(v), self.mult[v][v], row)
        };
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| invariant(v));
        let classes: Vec<_> = order.iter().map(|&v| invariant(v)).collect();
        let mut best: Option<Vec<Vec<u8>>> = None;
        let mut perm = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.search(&order, &classes, &invariant, &mut perm, &mut used, &mut best);
        SmallGraph { n: self.n, mult: best.unwrap() }
    }

    fn search<I: Fn(usize) -> (usize, u8, Vec<u8>)>(
        &self,
        order: &[usize],
        classes: &[(usize, u8, Vec<u8>)],
        invariant: &I,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut Option<Vec<Vec<u8>>>,
    ) {
        let p = perm.len();
        if p == self.n {
            let m: Vec<Vec<u8>> =
                (0..self.n).map(|i| (0..self.n).map(|j| self.mult[perm[i]][perm[j]]).collect()).collect();
            if best.as_ref().is_none_or(|b| m < *b) {
                *best = Some(m);
            }
            return;
        }
        for &v in order {
            if !used[v] && invariant(v) == classes[p] {
                used[v] = true;
                perm.push(v);
                self.search(order, classes, invariant, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
}

/// Connected multigraphs with loops, up to isomorphism, grouped by edge
/// count from 0 to `max_edges`. Every connected graph with an edge loses a
/// non-bridge edge or a leaf and stays connected, so growing by one edge or
/// one pendant reaches every graph.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Vec<SmallGraph>> {
    let mut levels = vec![vec![SmallGraph::single_vertex()]];
    for _ in 0..max_edges {
        let mut next = BTreeSet::new();
        for g in levels.last().unwrap() {
            for i in 0..g.n {
                for j in i..g.n {
                    next.insert(g.with_edge(i, j).canonical());
                }
                next.insert(g.with_pendant(i).canonical());
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// Darts `2i` and `2i + 1` are the ends of edge `i` at its first and second endpoint.
fn darts_by_vertex(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        out[a].push(2 * i);
        out[b].push(2 * i + 1);
    }
    out
}

/// A vertex without darts bounds one face.
fn face_count(succ: &[usize]) -> usize {
    if succ.is_empty() {
        return 1;
    }
    let mut seen = vec![false; succ.len()];
    let mut faces = 0;
    for start in 0..succ.len() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = succ[d ^ 1];
        }
    }
    faces
}

/// Steps to the next permutation in lexicographic order, wrapping around
/// to the first one after the last.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Visits every rotation system of a connected multigraph that embeds in
/// the sphere, as a successor array on darts. The visitor returns `false`
/// to stop.
pub fn for_each_planar_rotation(n: usize, edges: &[(usize, usize)], visit: &mut dyn FnMut(&[usize]) -> bool) {
    let darts = darts_by_vertex(n, edges);
    let mut orders: Vec<Vec<usize>> = darts.clone();
    let mut succ = vec![0; 2 * edges.len()];
    let faces_needed = 2 + edges.len() - n;
    fn rec(
        v: usize,
        orders: &mut Vec<Vec<usize>>,
        succ: &mut Vec<usize>,
        faces_needed: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if v == orders.len() {
            if face_count(succ) == faces_needed {
                return visit(succ);
            }
            return true;
        }
        loop {
            let order = &orders[v];
            for k in 0..order.len() {
                succ[order[k]] = order[(k + 1) % order.len()];
            }
            if !rec(v + 1, orders, succ, faces_needed, visit) {
                return false;
            }
            if orders[v].is_empty() || !next_permutation(&mut orders[v][1..]) {
                break;
            }
        }
        true
    }
    rec(0, &mut orders, &mut succ, faces_needed, visit);
}

fn inverse(succ: &[usize]) -> Vec<usize> {
    let mut pred = vec![0; succ.len()];
    for (d, &s) in succ.iter().enumerate() {
        pred[s] = d;
    }
    pred
}

/// Unique embeddability of labelled graphs: all planar rotation systems
/// agree up to reversing every cyclic order.
pub fn strictly_unique(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut classes = BTreeSet::new();
    for_each_planar_rotation(n, edges, &mut |succ| {
        let pred = inverse(succ);
        classes.insert(std::cmp::min(succ.to_vec(), pred));
        classes.len() < 2
    });
    classes.len() == 1
}

/// Canonical code of a connected combinatorial map up to isomorphism and
/// reflection: the smallest breadth-first relabelling over all start darts
/// and both orientations.
fn map_code(succ: &[usize]) -> Vec<(usize, usize)> {
    let pred = inverse(succ);
    let mut best: Option<Vec<(usize, usize)>> = None;
    for rot in [succ, &pred[..]] {
        for start in 0..succ.len() {
            let mut label = vec![usize::MAX; succ.len()];
            let mut order = Vec::with_capacity(succ.len());
            let mut queue = VecDeque::from([start]);
            label[start] = 0;
            while let Some(d) = queue.pop_front() {
                order.push(d);
                for e in [rot[d], d ^ 1] {
                    if label[e] == usize::MAX {
                        label[e] = order.len() + queue.len();
                        queue.push_back(e);
                    }
                }
            }
            let code: Vec<(usize, usize)> = order.iter().map(|&d| (label[rot[d]], label[d ^ 1])).collect();
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

/// Unique embeddability when graph automorphisms may also relabel the
/// embedding: all planar rotation systems give isomorphic maps.
pub fn unique_up_to_automorphism(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut classes = BTreeSet::new();
    for_each_planar_rotation(n, edges, &mut |succ| {
        classes.insert(map_code(succ));
        classes.len() < 2
    });
    classes.len() == 1
}
