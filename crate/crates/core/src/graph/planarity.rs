//! Planarity testing with embedding extraction.
//!
//! Loops and parallel edges are set aside, the underlying simple graph is
//! split into blocks, and each 2-connected block is embedded by path
//! addition (Demoucron, Malgrange and Pertuiset). Block rotations are then
//! concatenated at cut vertices, and the set-aside edges are re-inserted
//! next to a representative so that they only create new faces.

use std::collections::{BTreeMap, HashSet, VecDeque};

use super::{GraphError, GraphRotation, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    /// A rotation whose face trace has genus 0.
    Planar(GraphRotation),
    NonPlanar,
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn rotation(&self) -> Option<&GraphRotation> {
        match self {
            Planarity::Planar(r) => Some(r),
            Planarity::NonPlanar => None,
        }
    }
}

pub fn planar_embedding(g: &Multigraph) -> Result<Planarity, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::DisconnectedInput);
    }
    let n = g.vertex_count();
    let mut representative: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut parallels = Vec::new();
    let mut loops = Vec::new();
    for (pos, e) in g.edges().iter().enumerate() {
        let [u, v] = e.ends;
        if u == v {
            loops.push(pos);
            continue;
        }
        let key = (u.min(v), u.max(v));
        match representative.get(&key) {
            Some(&rep) => parallels.push((rep, pos)),
            None => {
                representative.insert(key, pos);
            }
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in representative.keys() {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let dart_at = |pos: usize, x: usize| if g.edge(pos).ends[0] == x { 2 * pos } else { 2 * pos + 1 };

    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(&adj) {
        if block.len() == 1 {
            let (u, v) = block[0];
            let pos = representative[&(u.min(v), u.max(v))];
            rotation[u].push(dart_at(pos, u));
            rotation[v].push(dart_at(pos, v));
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut local_adj = vec![Vec::new(); verts.len()];
        for &(u, v) in &block {
            local_adj[local[&u]].push(local[&v]);
            local_adj[local[&v]].push(local[&u]);
        }
        for list in &mut local_adj {
            list.sort_unstable();
        }
        let Some(orders) = embed_biconnected(&local_adj) else {
            return Ok(Planarity::NonPlanar);
        };
        for (lx, order) in orders.iter().enumerate() {
            let x = verts[lx];
            for &ly in order {
                let y = verts[ly];
                let pos = representative[&(x.min(y), x.max(y))];
                rotation[x].push(dart_at(pos, x));
            }
        }
    }

    for (rep, pos) in parallels {
        let [u, v] = g.edge(rep).ends;
        let (ru, rv) = (dart_at(rep, u), dart_at(rep, v));
        let (pu, pv) = (dart_at(pos, u), dart_at(pos, v));
        let i = rotation[u].iter().position(|&d| d == ru).expect("representative placed");
        rotation[u].insert(i + 1, pu);
        let j = rotation[v].iter().position(|&d| d == rv).expect("representative placed");
        rotation[v].insert(j, pv);
    }
    for pos in loops {
        let x = g.edge(pos).ends[0];
        rotation[x].push(2 * pos);
        rotation[x].push(2 * pos + 1);
    }
    Ok(Planarity::Planar(GraphRotation::from_cycles_unchecked(rotation)))
}

/// Edge sets of the blocks of a simple graph (Tarjan).
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn visit(s: &mut State<'_>, u: usize, parent: usize) {
        s.disc[u] = s.timer;
        s.low[u] = s.timer;
        s.timer += 1;
        for i in 0..s.adj[u].len() {
            let w = s.adj[u][i];
            if s.disc[w] == usize::MAX {
                s.stack.push((u, w));
                visit(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let n = adj.len();
    let mut s =
        State { adj, disc: vec![usize::MAX; n], low: vec![0; n], timer: 0, stack: Vec::new(), blocks: Vec::new() };
    for v in 0..n {
        if s.disc[v] == usize::MAX {
            visit(&mut s, v, usize::MAX);
        }
    }
    s.blocks
}

struct Fragment {
    attachments: Vec<usize>,
    /// Chord endpoints, or the vertices of a component of the unembedded part.
    interior: Vec<usize>,
}

/// Path-addition embedding of a simple 2-connected graph with at least
/// three vertices. Returns the cyclic neighbour order at every vertex.
fn embed_biconnected(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let total_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    let cycle = initial_cycle(adj);
    let mut placed_v = vec![false; n];
    let mut placed_e: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        placed_v[cycle[i]] = true;
        placed_e.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces = vec![cycle, reversed];

    while placed_e.len() < total_edges {
        let fragments = fragments(adj, &placed_v, &placed_e);
        let mut membership = vec![false; n];
        let mut best: Option<(usize, usize, usize)> = None; // (count, fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let mut count = 0;
            let mut first = usize::MAX;
            for (k, face) in faces.iter().enumerate() {
                face.iter().for_each(|&v| membership[v] = true);
                if frag.attachments.iter().all(|&a| membership[a]) {
                    count += 1;
                    first = first.min(k);
                }
                face.iter().for_each(|&v| membership[v] = false);
            }
            if count == 0 {
                return None;
            }
            if best.map_or(true, |(c, _, _)| count < c) {
                best = Some((count, fi, first));
            }
        }
        let (_, fi, face_idx) = best.expect("unembedded edges leave a fragment");
        let path = fragment_path(adj, &fragments[fi], &placed_v);
        for w in path.windows(2) {
            placed_e.insert(key(w[0], w[1]));
        }
        for &v in &path {
            placed_v[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&v| v == a).unwrap();
        let j = face.iter().position(|&v| v == b).unwrap();
        let k = face.len();
        let inner = &path[1..path.len() - 1];
        let mut first: Vec<usize> = (0..=(j + k - i) % k).map(|t| face[(i + t) % k]).collect();
        first.extend(inner.iter().rev());
        let mut second: Vec<usize> = (0..=(i + k - j) % k).map(|t| face[(j + t) % k]).collect();
        second.extend(inner.iter());
        faces.push(first);
        faces.push(second);
    }

    // A face walk prev -> v -> next means next follows prev in the rotation at v.
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for face in &faces {
        let k = face.len();
        for t in 0..k {
            let (p, v, s) = (face[(t + k - 1) % k], face[t], face[(t + 1) % k]);
            succ[v].insert(p, s);
        }
    }
    let mut orders = Vec::with_capacity(n);
    for (v, table) in succ.iter().enumerate() {
        let start = adj[v][0];
        let mut order = vec![start];
        let mut cur = table[&start];
        while cur != start {
            order.push(cur);
            cur = table[&cur];
        }
        debug_assert_eq!(order.len(), adj[v].len());
        orders.push(order);
    }
    Some(orders)
}

/// A cycle through vertex 0: its two smallest neighbours joined by a
/// shortest path that avoids 0.
fn initial_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let (a, b) = (adj[0][0], adj[0][1]);
    let mut parent = vec![usize::MAX; adj.len()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for &w in &adj[u] {
            if w != 0 && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    let mut cycle = vec![0];
    cycle.extend(path);
    cycle
}

fn fragments(adj: &[Vec<usize>], placed_v: &[bool], placed_e: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !placed_v[u] {
            continue;
        }
        for &w in &adj[u] {
            if u < w && placed_v[w] && !placed_e.contains(&(u, w)) {
                out.push(Fragment { attachments: vec![u, w], interior: vec![u, w] });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if placed_v[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut attachments = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if placed_v[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        comp.sort_unstable();
        out.push(Fragment { attachments, interior: comp });
    }
    out
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], frag: &Fragment, placed_v: &[bool]) -> Vec<usize> {
    if frag.interior.iter().all(|&v| placed_v[v]) {
        return frag.interior.clone();
    }
    let a = frag.attachments[0];
    let start = *frag.interior.iter().find(|&&k| adj[k].contains(&a)).expect("attachment adjacent to its fragment");
    let mut parent = vec![usize::MAX; adj.len()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = adj[u].iter().find(|&&w| placed_v[w] && w != a) {
            let mut path = vec![b, u];
            let mut cur = u;
            while cur != start {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[u] {
            if !placed_v[w] && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("2-connected blocks give every fragment two attachments")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::face_trace_genus;

    fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Multigraph::from_edges(n, &edges)
    }

    fn assert_planar_rotation(g: &Multigraph) -> usize {
        let rot = planar_embedding(g).unwrap().rotation().cloned().expect("planar");
        let rot = GraphRotation::new(g, rot.cycles().to_vec()).expect("valid rotation");
        let (faces, genus) = face_trace_genus(g, &rot).unwrap();
        assert_eq!(genus, 0);
        assert_eq!(faces as i64, 2 - g.vertex_count() as i64 + g.edge_count() as i64);
        faces
    }

    #[test]
    fn k4_embeds_with_four_faces() {
        assert_eq!(assert_planar_rotation(&complete(4)), 4);
    }

    #[test]
    fn kuratowski_graphs_are_rejected() {
        assert_eq!(planar_embedding(&complete(5)).unwrap(), Planarity::NonPlanar);
        let mut k33 = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                k33.push((i, j));
            }
        }
        assert_eq!(planar_embedding(&Multigraph::from_edges(6, &k33)).unwrap(), Planarity::NonPlanar);
    }

    #[test]
    fn multigraph_features() {
        // C2 v K2: a doubled edge plus a pendant edge
        assert_eq!(assert_planar_rotation(&Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)])), 2);
        // four parallel edges
        assert_eq!(assert_planar_rotation(&Multigraph::from_edges(2, &[(0, 1); 4])), 4);
        // loops only
        assert_eq!(assert_planar_rotation(&Multigraph::from_edges(1, &[(0, 0), (0, 0)])), 3);
        assert_eq!(assert_planar_rotation(&Multigraph::new(1)), 1);
        // bowtie with a loop and a pendant
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 4), (2, 5)]);
        assert_planar_rotation(&g);
    }

    #[test]
    fn wheels_and_grids() {
        for spokes in 3..9 {
            let mut edges = Vec::new();
            for i in 0..spokes {
                edges.push((0, i + 1));
                edges.push((i + 1, (i + 1) % spokes + 1));
            }
            assert_planar_rotation(&Multigraph::from_edges(spokes + 1, &edges));
        }
        let mut grid = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                let v = 4 * r + c;
                if c < 3 {
                    grid.push((v, v + 1));
                }
                if r < 3 {
                    grid.push((v, v + 4));
                }
            }
        }
        assert_planar_rotation(&Multigraph::from_edges(16, &grid));
    }

    #[test]
    fn petersen_is_nonplanar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        assert!(!planar_embedding(&Multigraph::from_edges(10, &edges)).unwrap().is_planar());
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Multigraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(planar_embedding(&g), Err(GraphError::DisconnectedInput));
    }
}
