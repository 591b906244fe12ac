//! Planarity by path addition (Demoucron, Malgrange and Pertuiset).
//!
//! A graph is planar iff each biconnected component is. For a biconnected
//! component we embed a cycle, then repeatedly pick a fragment (bridge) of
//! the not-yet-embedded part, preferring one with a single admissible face,
//! and route one of its attachment-to-attachment paths through that face.
//! A fragment with no admissible face certifies non-planarity.

use super::UGraph;
use crate::digraph::Bits;

/// Whether `g` has a plane embedding.
pub fn is_planar(g: &UGraph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    biconnected_components(g.adjacency())
        .into_iter()
        // K3,3 with nine edges is the smallest non-planar graph.
        .filter(|edges| edges.len() >= 9)
        .all(|edges| embeds(g.order(), &edges))
}

fn biconnected_components(adj: &[u64]) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        adj: &'a [u64],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        components: Vec<Vec<(usize, usize)>>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: usize) {
            self.disc[u] = self.time;
            self.low[u] = self.time;
            self.time += 1;
            for v in Bits::new(self.adj[u]) {
                if self.disc[v] == usize::MAX {
                    self.stack.push((u, v));
                    self.visit(v, u);
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut component = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            component.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        self.components.push(component);
                    }
                } else if v != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }

    let n = adj.len();
    let mut dfs = Dfs {
        adj,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        components: Vec::new(),
    };
    for v in 0..n {
        if dfs.disc[v] == usize::MAX {
            dfs.visit(v, usize::MAX);
        }
    }
    dfs.components
}

enum Fragment {
    Edge(usize, usize),
    Component { vertices: u64, attachments: u64 },
}

impl Fragment {
    fn attachments(&self) -> u64 {
        match *self {
            Fragment::Edge(u, v) => 1 << u | 1 << v,
            Fragment::Component { attachments, .. } => attachments,
        }
    }
}

struct Embedding {
    /// Adjacency of the component being embedded.
    adj: Vec<u64>,
    /// Adjacency of the embedded part.
    placed: Vec<u64>,
    placed_vertices: u64,
    faces: Vec<Vec<usize>>,
}

fn embeds(order: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![0u64; order];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let cycle = find_cycle(&adj);
    let mut emb = Embedding {
        adj,
        placed: vec![0; order],
        placed_vertices: 0,
        faces: vec![cycle.clone(), cycle.clone()],
    };
    emb.place_path(&cycle);
    let last = cycle.len() - 1;
    emb.place_edge(cycle[last], cycle[0]);

    let total = edges.len();
    loop {
        let placed_edges = emb.placed.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2;
        if placed_edges == total {
            return true;
        }
        let fragments = emb.fragments();
        let face_masks: Vec<u64> =
            emb.faces.iter().map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> =
                (0..face_masks.len()).filter(|&f| att & !face_masks[f] == 0).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (frag, face) = choice.expect("a fragment remains while edges remain");
        let path = emb.fragment_path(&fragments[frag]);
        emb.split_face(face, &path);
        emb.place_path(&path);
    }
}

fn find_cycle(adj: &[u64]) -> Vec<usize> {
    // Depth-first search until an edge closes back onto the current path.
    let start = adj.iter().position(|&m| m != 0).unwrap();
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut on_path = vec![false; n];
    let mut stack = vec![(start, adj[start])];
    on_path[start] = true;
    parent[start] = start;
    while let Some((u, rest)) = stack.last_mut() {
        let u = *u;
        if *rest == 0 {
            on_path[u] = false;
            stack.pop();
            continue;
        }
        let v = rest.trailing_zeros() as usize;
        *rest &= *rest - 1;
        if v == parent[u] {
            continue;
        }
        if on_path[v] {
            let mut cycle = vec![u];
            let mut x = u;
            while x != v {
                x = parent[x];
                cycle.push(x);
            }
            cycle.reverse();
            return cycle;
        }
        if parent[v] == usize::MAX {
            parent[v] = u;
            on_path[v] = true;
            stack.push((v, adj[v]));
        }
    }
    unreachable!("a biconnected component with at least three edges has a cycle")
}

impl Embedding {
    fn place_edge(&mut self, u: usize, v: usize) {
        self.placed[u] |= 1 << v;
        self.placed[v] |= 1 << u;
        self.placed_vertices |= 1 << u | 1 << v;
    }

    fn place_path(&mut self, path: &[usize]) {
        for w in path.windows(2) {
            self.place_edge(w[0], w[1]);
        }
    }

    fn fragments(&self) -> Vec<Fragment> {
        let mut out = Vec::new();
        let n = self.adj.len();
        for u in Bits::new(self.placed_vertices) {
            let pending = self.adj[u] & !self.placed[u] & self.placed_vertices;
            for v in Bits::new(pending >> u >> 1) {
                out.push(Fragment::Edge(u, u + 1 + v));
            }
        }
        let all = self.adj.iter().enumerate().filter(|(_, &m)| m != 0).fold(0u64, |m, (v, _)| m | 1 << v);
        let mut free = all & !self.placed_vertices;
        while free != 0 {
            let start = free.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits::new(frontier) {
                    next |= self.adj[v];
                }
                next &= free & !comp;
                comp |= next;
                frontier = next;
            }
            let attachments = Bits::new(comp).fold(0u64, |m, v| m | self.adj[v]) & self.placed_vertices;
            out.push(Fragment::Component { vertices: comp, attachments });
            free &= !comp;
        }
        debug_assert!(out.iter().all(|f| f.attachments().count_ones() >= 2 || n == 0));
        out
    }

    /// A path between two distinct attachments through the fragment.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        match *frag {
            Fragment::Edge(u, v) => vec![u, v],
            Fragment::Component { vertices, attachments } => {
                let a = attachments.trailing_zeros() as usize;
                let targets = attachments & !(1 << a);
                let n = self.adj.len();
                let mut prev = vec![usize::MAX; n];
                let mut queue = std::collections::VecDeque::new();
                for c in Bits::new(self.adj[a] & vertices) {
                    prev[c] = a;
                    queue.push_back(c);
                }
                while let Some(c) = queue.pop_front() {
                    let hits = self.adj[c] & targets;
                    if hits != 0 {
                        let b = hits.trailing_zeros() as usize;
                        let mut path = vec![b, c];
                        let mut x = c;
                        while prev[x] != a {
                            x = prev[x];
                            path.push(x);
                        }
                        path.push(a);
                        path.reverse();
                        return path;
                    }
                    for d in Bits::new(self.adj[c] & vertices) {
                        if prev[d] == usize::MAX {
                            prev[d] = c;
                            queue.push_back(d);
                        }
                    }
                }
                unreachable!("fragments of a biconnected graph reach two attachments")
            }
        }
    }

    /// Replaces `face` by the two faces obtained by drawing `path` inside it.
    fn split_face(&mut self, face: usize, path: &[usize]) {
        let f = self.faces.swap_remove(face);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = f.iter().position(|&x| x == a).unwrap();
        let ib = f.iter().position(|&x| x == b).unwrap();
        let len = f.len();
        let walk = |from: usize, to: usize| {
            let mut w = Vec::new();
            let mut i = from;
            loop {
                w.push(f[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % len;
            }
            w
        };
        let inner = &path[1..path.len() - 1];
        let mut first = walk(ia, ib);
        first.extend(inner.iter().rev());
        let mut second = walk(ib, ia);
        second.extend(inner.iter());
        self.faces.push(first);
        self.faces.push(second);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UGraph {
        UGraph::new(n, edges.iter().copied()).unwrap()
    }

    fn k33() -> UGraph {
        graph(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    }

    fn petersen() -> UGraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        graph(10, &e)
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&UGraph::complete(4)));
        assert!(!is_planar(&UGraph::complete(5)));
        assert!(!is_planar(&k33()));
        assert!(!is_planar(&petersen()));
    }

    #[test]
    fn planar_families() {
        let mut k5_minus = UGraph::complete(5).edges();
        k5_minus.retain(|&e| e != (0, 1));
        assert!(is_planar(&graph(5, &k5_minus)));
        let mut k33_minus = k33().edges();
        k33_minus.pop();
        assert!(is_planar(&graph(6, &k33_minus)));
        let cube = [
            (0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7),
        ];
        assert!(is_planar(&graph(8, &cube)));
        let octahedron: Vec<(usize, usize)> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .filter(|&(u, v)| v != u + 3 || u >= 3)
            .collect();
        assert_eq!(octahedron.len(), 12);
        assert!(is_planar(&graph(6, &octahedron)));
        let wheel: Vec<(usize, usize)> =
            (1..8).flat_map(|i| [(0, i), (i, if i == 7 { 1 } else { i + 1 })]).collect();
        assert!(is_planar(&graph(8, &wheel)));
    }

    #[test]
    fn subdivided_and_padded_obstructions() {
        // K5 with edge {0,1} subdivided by vertex 5, plus a pendant vertex.
        let mut e: Vec<(usize, usize)> = UGraph::complete(5).edges();
        e.retain(|&x| x != (0, 1));
        e.extend([(0, 5), (1, 5), (2, 6)]);
        assert!(!is_planar(&graph(7, &e)));
        // Two disjoint K4s joined at a vertex remain planar.
        let mut e: Vec<(usize, usize)> = UGraph::complete(4).edges();
        e.extend([(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]);
        assert!(is_planar(&graph(7, &e)));
    }

    /// Planarity by brute force over rotation systems: a connected graph is
    /// planar iff some rotation system traces `E - V + 2` faces.
    fn planar_by_rotations(g: &UGraph) -> bool {
        let n = g.order();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
        let target = g.edge_count() as i64 - n as i64 + 2;
        let mut rot: Vec<Vec<usize>> = nbrs.clone();
        fn perms(rest: &[usize]) -> Vec<Vec<usize>> {
            if rest.len() <= 1 {
                return vec![rest.to_vec()];
            }
            let mut out = Vec::new();
            for i in 0..rest.len() {
                let mut r = rest.to_vec();
                let x = r.remove(i);
                for mut p in perms(&r) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        let choices: Vec<Vec<Vec<usize>>> = nbrs
            .iter()
            .map(|ns| {
                if ns.len() <= 2 {
                    vec![ns.clone()]
                } else {
                    perms(&ns[1..]).into_iter().map(|mut p| { p.insert(0, ns[0]); p }).collect()
                }
            })
            .collect();
        fn faces(rot: &[Vec<usize>]) -> i64 {
            let mut seen = std::collections::HashSet::new();
            let mut count = 0;
            for u in 0..rot.len() {
                for &v in &rot[u] {
                    if seen.contains(&(u, v)) {
                        continue;
                    }
                    count += 1;
                    let (mut a, mut b) = (u, v);
                    while seen.insert((a, b)) {
                        let r = &rot[b];
                        let i = r.iter().position(|&x| x == a).unwrap();
                        let c = r[(i + 1) % r.len()];
                        a = b;
                        b = c;
                    }
                }
            }
            count
        }
        fn search(i: usize, choices: &[Vec<Vec<usize>>], rot: &mut Vec<Vec<usize>>, target: i64) -> bool {
            if i == choices.len() {
                return faces(rot) == target;
            }
            for c in &choices[i] {
                rot[i] = c.clone();
                if search(i + 1, choices, rot, target) {
                    return true;
                }
            }
            false
        }
        search(0, &choices, &mut rot, target)
    }

    #[test]
    fn matches_rotation_system_oracle_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 150 {
            let n = rng.gen_range(5..=7);
            let p = rng.gen_range(0.4..0.8);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = graph(n, &edges);
            if !g.is_connected() {
                continue;
            }
            let work: usize = (0..n).map(|v| (1..g.neighbors(v).len().max(1)).product::<usize>()).product();
            if work > 200_000 {
                continue;
            }
            assert_eq!(is_planar(&g), planar_by_rotations(&g), "{g:?}");
            checked += 1;
        }
    }
}
