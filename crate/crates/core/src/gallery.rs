//! Named example complexes.

use crate::complex::Complex2;

pub const GALLERY: [&str; 8] = [
    "tetrahedron",
    "octahedron",
    "icosahedron",
    "book3",
    "glued-tetrahedra",
    "csaszar-torus",
    "cone-k5",
    "tube-joined-spheres",
];

pub fn example(name: &str) -> Option<Complex2> {
    let (vertices, faces) = match name {
        "tetrahedron" => (names(&["a", "b", "c", "d"]), tetra(["a", "b", "c", "d"])),
        "octahedron" => octahedron(),
        "icosahedron" => icosahedron(),
        "book3" => {
            (names(&["u", "v", "a", "b", "c"]), vec![tri("u", "v", "a"), tri("u", "v", "b"), tri("u", "v", "c")])
        }
        "glued-tetrahedra" => {
            let mut faces = tetra(["u", "v", "a", "b"]);
            faces.extend(tetra(["u", "v", "c", "d"]));
            (names(&["u", "v", "a", "b", "c", "d"]), faces)
        }
        "csaszar-torus" => {
            let vertices: Vec<String> = (0..7).map(|i| i.to_string()).collect();
            let mut faces = Vec::new();
            for i in 0..7 {
                faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
                faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
            }
            let faces = faces.into_iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect();
            (vertices, faces)
        }
        "cone-k5" => {
            let mut vertices = vec!["p".to_string()];
            vertices.extend((0..5).map(|i| i.to_string()));
            let mut faces = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    faces.push(vec!["p".to_string(), i.to_string(), j.to_string()]);
                }
            }
            (vertices, faces)
        }
        "tube-joined-spheres" => {
            let mut faces = tetra(["a0", "a1", "a2", "a3"]);
            faces.extend(tetra(["b0", "b1", "b2", "b3"]));
            for i in 0..3 {
                let j = (i + 1) % 3;
                let (ai, aj, bi, bj) = (format!("a{i}"), format!("a{j}"), format!("b{i}"), format!("b{j}"));
                faces.push(tri(&ai, &aj, &bi));
                faces.push(tri(&aj, &bj, &bi));
            }
            (names(&["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"]), faces)
        }
        _ => return None,
    };
    Some(Complex2::build(&vertices, &faces).expect("gallery complexes are valid"))
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn tri(a: &str, b: &str, c: &str) -> Vec<String> {
    names(&[a, b, c])
}

/// Boundary of a tetrahedron, consistently oriented.
fn tetra([p0, p1, p2, p3]: [&str; 4]) -> Vec<Vec<String>> {
    vec![tri(p0, p2, p1), tri(p0, p1, p3), tri(p0, p3, p2), tri(p1, p2, p3)]
}

fn octahedron() -> (Vec<String>, Vec<Vec<String>>) {
    let ring = ["0", "1", "2", "3"];
    let mut faces = Vec::new();
    for i in 0..4 {
        let (a, b) = (ring[i], ring[(i + 1) % 4]);
        faces.push(tri("t", a, b));
        faces.push(tri("s", b, a));
    }
    (names(&["t", "s", "0", "1", "2", "3"]), faces)
}

fn icosahedron() -> (Vec<String>, Vec<Vec<String>>) {
    let u = |i: usize| format!("u{}", i % 5);
    let l = |i: usize| format!("l{}", i % 5);
    let mut vertices = vec!["t".to_string()];
    vertices.extend((0..5).map(u));
    vertices.extend((0..5).map(l));
    vertices.push("s".to_string());
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(tri("t", &u(i), &u(i + 1)));
        faces.push(tri(&u(i), &l(i), &u(i + 1)));
        faces.push(tri(&u(i + 1), &l(i), &l(i + 1)));
        faces.push(tri("s", &l(i + 1), &l(i)));
    }
    (vertices, faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(name: &str) -> (usize, usize, usize) {
        let x = example(name).unwrap();
        (x.vertex_count(), x.edge_count(), x.face_count())
    }

    #[test]
    fn gallery_counts() {
        assert_eq!(counts("tetrahedron"), (4, 6, 4));
        assert_eq!(counts("octahedron"), (6, 12, 8));
        assert_eq!(counts("icosahedron"), (12, 30, 20));
        assert_eq!(counts("book3"), (5, 7, 3));
        assert_eq!(counts("glued-tetrahedra"), (6, 11, 8));
        assert_eq!(counts("csaszar-torus"), (7, 21, 14));
        assert_eq!(counts("cone-k5"), (6, 15, 10));
        assert_eq!(counts("tube-joined-spheres"), (8, 18, 14));
        assert!(example("klein-bottle").is_none());
    }

    #[test]
    fn csaszar_torus_is_a_closed_surface() {
        let x = example("csaszar-torus").unwrap();
        assert_eq!(x.edge_count(), 21);
        assert!((0..21).all(|e| x.faces_on_edge(e).len() == 2));
        assert!(x.is_simplicial());
        assert_eq!(x.euler_characteristic(), 0);
    }

    #[test]
    fn spheres_are_consistently_oriented() {
        // every edge is traversed once in each direction
        for name in ["tetrahedron", "octahedron", "icosahedron"] {
            let x = example(name).unwrap();
            let mut directed = Vec::new();
            for f in x.faces() {
                for i in 0..3 {
                    directed.push((f[i], f[(i + 1) % 3]));
                }
            }
            directed.sort_unstable();
            let before = directed.len();
            directed.dedup();
            assert_eq!(directed.len(), before, "{name}");
            assert_eq!(x.euler_characteristic(), 2, "{name}");
        }
    }
}
