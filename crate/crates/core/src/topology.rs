//! Evidence for simple connectivity: integral first homology through the
//! Smith normal form of the boundary matrices, and a presentation of the
//! fundamental group simplified by Tietze moves.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::Complex2;

pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;

/// Relator words longer than this in total stop the simplification.
const MAX_TOTAL_LENGTH: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("complex is disconnected")]
    Disconnected,
    #[error("integer overflow during Smith normal form")]
    Overflow,
}

/// Integral boundary matrices. `d1` is vertices by edges and `d2` is edges
/// by faces; an edge `(a, b)` with `a < b` runs from `a` to `b`, and a face
/// follows its stored cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    pub d1: Vec<Vec<i64>>,
    pub d2: Vec<Vec<i64>>,
}

impl ChainComplex {
    pub fn new(x: &Complex2) -> Self {
        let mut d1 = vec![vec![0; x.edge_count()]; x.vertex_count()];
        for (e, &(a, b)) in x.edges().iter().enumerate() {
            d1[a][e] -= 1;
            d1[b][e] += 1;
        }
        let mut d2 = vec![vec![0; x.face_count()]; x.edge_count()];
        for (f, face) in x.faces().iter().enumerate() {
            let k = face.len();
            for i in 0..k {
                let (a, b) = (face[i], face[(i + 1) % k]);
                let e = x.edge_id(a, b).expect("face edge exists");
                d2[e][f] += if a < b { 1 } else { -1 };
            }
        }
        ChainComplex { d1, d2 }
    }

    /// Whether `d1 * d2` is the zero matrix.
    pub fn composition_vanishes(&self) -> bool {
        let faces = self.d2.first().map_or(0, Vec::len);
        self.d1
            .iter()
            .all(|row| (0..faces).all(|f| row.iter().zip(&self.d2).map(|(&a, col)| a * col[f]).sum::<i64>() == 0))
    }
}

/// Nonzero invariant factors of an integer matrix, in divisibility order.
pub fn smith_diagonal(mut a: Vec<Vec<i64>>) -> Result<Vec<i64>, TopologyError> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t, rows, cols) else { break };
        move_to_pivot(&mut a, t, pi, pj);
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t] / p;
                    for j in t..cols {
                        a[i][j] = a[i][j]
                            .checked_sub(q.checked_mul(a[t][j]).ok_or(TopologyError::Overflow)?)
                            .ok_or(TopologyError::Overflow)?;
                    }
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j] / p;
                    for i in t..rows {
                        a[i][j] = a[i][j]
                            .checked_sub(q.checked_mul(a[i][t]).ok_or(TopologyError::Overflow)?)
                            .ok_or(TopologyError::Overflow)?;
                    }
                    clean &= a[t][j] == 0;
                }
            }
            if clean {
                // the pivot must divide the rest of the matrix
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..cols {
                            a[t][j] = a[t][j].checked_add(a[i][j]).ok_or(TopologyError::Overflow)?;
                        }
                    }
                }
                continue;
            }
            let (pi, pj) = smallest_in_cross(&a, t, rows, cols);
            move_to_pivot(&mut a, t, pi, pj);
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}

fn smallest_entry(a: &[Vec<i64>], t: usize, rows: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().take(rows).skip(t) {
        for (j, &v) in row.iter().enumerate().take(cols).skip(t) {
            if v != 0 && best.map_or(true, |(b, _, _)| v.abs() < b) {
                best = Some((v.abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn smallest_in_cross(a: &[Vec<i64>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (a[t][t].abs(), t, t);
    for i in t + 1..rows {
        if a[i][t] != 0 && a[i][t].abs() < best.0 {
            best = (a[i][t].abs(), i, t);
        }
    }
    for j in t + 1..cols {
        if a[t][j] != 0 && a[t][j].abs() < best.0 {
            best = (a[t][j].abs(), t, j);
        }
    }
    (best.1, best.2)
}

fn move_to_pivot(a: &mut [Vec<i64>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    for row in a.iter_mut() {
        row.swap(t, j);
    }
}

/// A finitely generated abelian group `Z^rank + Z/t1 + Z/t2 + ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1 {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl H1 {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for H1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn h1(x: &Complex2) -> Result<H1, TopologyError> {
    if !x.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    let chains = ChainComplex::new(x);
    let factors = smith_diagonal(chains.d2)?;
    let rank_d1 = x.vertex_count() - 1;
    Ok(H1 { rank: x.edge_count() - rank_d1 - factors.len(), torsion: factors.into_iter().filter(|&d| d > 1).collect() })
}

/// Generators are the edges outside a breadth-first spanning tree of the
/// 1-skeleton; letter `g + 1` is generator `g` and `-(g + 1)` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<usize>,
    pub relators: Vec<Vec<i64>>,
}

pub fn presentation(x: &Complex2) -> Result<Presentation, TopologyError> {
    if !x.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    let mut in_tree = vec![false; x.edge_count()];
    let mut reached = vec![false; x.vertex_count()];
    reached[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &e in x.edges_at(v) {
            let (a, b) = x.edge(e);
            let w = if a == v { b } else { a };
            if !reached[w] {
                reached[w] = true;
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    let generators: Vec<usize> = (0..x.edge_count()).filter(|&e| !in_tree[e]).collect();
    let mut letter = vec![0i64; x.edge_count()];
    for (g, &e) in generators.iter().enumerate() {
        letter[e] = g as i64 + 1;
    }
    let relators = x
        .faces()
        .iter()
        .map(|face| {
            let k = face.len();
            let word: Vec<i64> = (0..k)
                .filter_map(|i| {
                    let (a, b) = (face[i], face[(i + 1) % k]);
                    let l = letter[x.edge_id(a, b).expect("face edge exists")];
                    (l != 0).then_some(if a < b { l } else { -l })
                })
                .collect();
            reduce(&word)
        })
        .collect();
    Ok(Presentation { generators, relators })
}

/// Free and cyclic reduction.
fn reduce(word: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    let mut start = 0;
    let mut end = out.len();
    while end - start >= 2 && out[start] == -out[end - 1] {
        start += 1;
        end -= 1;
    }
    out[start..end].to_vec()
}

fn inverse(word: &[i64]) -> Vec<i64> {
    word.iter().rev().map(|&l| -l).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Proven,
    Disproven,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleConnectivity {
    pub verdict: Verdict,
    pub h1: H1,
    pub generators: usize,
    pub remaining_generators: usize,
    pub remaining_relators: usize,
    pub moves: usize,
}

/// Disproven when H1 is nonzero, proven when Tietze moves eliminate every
/// generator within `budget` moves, unknown otherwise.
pub fn is_simply_connected(x: &Complex2, budget: usize) -> Result<SimpleConnectivity, TopologyError> {
    let h1 = h1(x)?;
    let mut p = presentation(x)?;
    let generators = p.generators.len();
    if !h1.is_trivial() {
        return Ok(SimpleConnectivity {
            verdict: Verdict::Disproven,
            h1,
            generators,
            remaining_generators: generators,
            remaining_relators: p.relators.len(),
            moves: 0,
        });
    }
    let (remaining, moves) = simplify(&mut p, budget);
    Ok(SimpleConnectivity {
        verdict: if remaining == 0 { Verdict::Proven } else { Verdict::Unknown },
        h1,
        generators,
        remaining_generators: remaining,
        remaining_relators: p.relators.len(),
        moves,
    })
}

/// Repeatedly uses the shortest relator in which some generator occurs
/// exactly once to eliminate that generator. Returns the number of
/// generators left and the number of moves made.
fn simplify(p: &mut Presentation, budget: usize) -> (usize, usize) {
    let mut alive = vec![true; p.generators.len()];
    let mut moves = 0;
    loop {
        p.relators = p.relators.iter().map(|r| reduce(r)).filter(|r| !r.is_empty()).collect();
        p.relators.sort();
        p.relators.dedup();
        let remaining = alive.iter().filter(|&&a| a).count();
        if remaining == 0 || moves >= budget {
            return (remaining, moves);
        }
        if p.relators.iter().map(Vec::len).sum::<usize>() > MAX_TOTAL_LENGTH {
            return (remaining, moves);
        }
        let Some((r, g)) = elimination_candidate(&p.relators) else {
            return (remaining, moves);
        };
        let relator = p.relators.remove(r);
        let at = relator.iter().position(|&l| l.unsigned_abs() as usize == g).unwrap();
        // relator = x^e C after rotation, so x^e = C^-1
        let rest: Vec<i64> = relator[at + 1..].iter().chain(&relator[..at]).copied().collect();
        let replacement = if relator[at] > 0 { inverse(&rest) } else { rest };
        let replacement_inv = inverse(&replacement);
        for word in &mut p.relators {
            if word.iter().any(|&l| l.unsigned_abs() as usize == g) {
                *word = word
                    .iter()
                    .flat_map(|&l| {
                        if l == g as i64 {
                            replacement.clone()
                        } else if l == -(g as i64) {
                            replacement_inv.clone()
                        } else {
                            vec![l]
                        }
                    })
                    .collect();
            }
        }
        alive[g - 1] = false;
        moves += 1;
    }
}

/// The shortest relator with a letter occurring exactly once, and that letter.
fn elimination_candidate(relators: &[Vec<i64>]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (r, word) in relators.iter().enumerate() {
        if best.is_some_and(|(len, _, _)| word.len() >= len) {
            continue;
        }
        let mut counts = std::collections::BTreeMap::new();
        for &l in word {
            *counts.entry(l.unsigned_abs() as usize).or_insert(0usize) += 1;
        }
        if let Some((&g, _)) = counts.iter().find(|(_, &c)| c == 1) {
            best = Some((word.len(), r, g));
        }
    }
    best.map(|(_, r, g)| (r, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{example, GALLERY};

    #[test]
    fn boundary_of_boundary_vanishes() {
        for name in GALLERY {
            assert!(ChainComplex::new(&example(name).unwrap()).composition_vanishes(), "{name}");
        }
    }

    #[test]
    fn smith_form_examples() {
        assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]]).unwrap(), vec![1, 6]);
        assert_eq!(smith_diagonal(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap(), vec![2, 6, 12]);
        assert_eq!(smith_diagonal(vec![vec![0, 0], vec![0, 0]]).unwrap(), Vec::<i64>::new());
        assert_eq!(smith_diagonal(Vec::new()).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn homology_examples() {
        assert_eq!(h1(&example("tetrahedron").unwrap()).unwrap(), H1 { rank: 0, torsion: vec![] });
        let torus = h1(&example("csaszar-torus").unwrap()).unwrap();
        assert_eq!(torus, H1 { rank: 2, torsion: vec![] });
        assert_eq!(torus.to_string(), "Z^2");
        let triangle = Complex2::build(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        assert!(h1(&triangle).unwrap().is_trivial());
    }

    #[test]
    fn projective_plane_has_torsion() {
        // six-vertex real projective plane
        let faces = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let names: Vec<String> = (0..6).map(|i| i.to_string()).collect();
        let x = Complex2::from_indexed(names, faces.iter().map(|f| f.to_vec()).collect()).unwrap();
        let h = h1(&x).unwrap();
        assert_eq!(h, H1 { rank: 0, torsion: vec![2] });
        assert_eq!(h.to_string(), "Z/2");
        let sc = is_simply_connected(&x, DEFAULT_TIETZE_BUDGET).unwrap();
        assert_eq!(sc.verdict, Verdict::Disproven);
    }

    #[test]
    fn simple_connectivity_examples() {
        let tet = is_simply_connected(&example("tetrahedron").unwrap(), DEFAULT_TIETZE_BUDGET).unwrap();
        assert_eq!(tet.verdict, Verdict::Proven);
        assert_eq!(tet.remaining_generators, 0);
        let torus = is_simply_connected(&example("csaszar-torus").unwrap(), DEFAULT_TIETZE_BUDGET).unwrap();
        assert_eq!(torus.verdict, Verdict::Disproven);
        for name in ["octahedron", "icosahedron", "book3", "glued-tetrahedra", "cone-k5", "tube-joined-spheres"] {
            let sc = is_simply_connected(&example(name).unwrap(), DEFAULT_TIETZE_BUDGET).unwrap();
            assert_eq!(sc.verdict, Verdict::Proven, "{name}");
        }
        let icosa = is_simply_connected(&example("icosahedron").unwrap(), 0).unwrap();
        assert_eq!(icosa.verdict, Verdict::Unknown);
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let x = Complex2::build(&["a", "b", "c", "d", "e", "f"], &[vec!["a", "b", "c"], vec!["d", "e", "f"]]).unwrap();
        assert_eq!(h1(&x), Err(TopologyError::Disconnected));
        assert_eq!(is_simply_connected(&x, 10).unwrap_err(), TopologyError::Disconnected);
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce(&[1, 2, -2, 3]), vec![1, 3]);
        assert_eq!(reduce(&[-1, 2, 3, 1]), vec![2, 3]);
        assert_eq!(reduce(&[1, -1]), Vec::<i64>::new());
    }
}
