//! Undirected graphs and the auxiliary invariants the digraph bounds refer
//! to: vertex connectivity, connected domatic number, clique domination
//! number and planarity.

mod planarity;

use std::time::Instant;

use crate::digraph::{full_mask, Bits, Digraph, VertexSet};
use crate::domination::VertexPartition;
use crate::error::{Error, Result};
use crate::search::VertexSearch;
use crate::solver::{SearchStats, SolveResult};

pub use planarity::is_planar;

/// A simple undirected graph on `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UGraph {
    adj: Vec<u64>,
}

impl std::fmt::Debug for UGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UGraph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl UGraph {
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order > crate::MAX_ORDER {
            return Err(Error::TooManyVertices(order));
        }
        let mut adj = vec![0u64; order];
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::DuplicateArc(u.min(v), u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(UGraph { adj })
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        UGraph { adj }
    }

    pub fn complete(order: usize) -> Self {
        let all = full_mask(order);
        UGraph { adj: (0..order).map(|v| all & !(1 << v)).collect() }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (u, &m) in self.adj.iter().enumerate() {
            edges.extend(Bits::new(m >> u >> 1).map(|i| (u, u + 1 + i)));
        }
        edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|m| m.count_ones() as usize).min()
    }

    fn component_of(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits::new(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn connected_within(&self, s: u64) -> bool {
        s != 0 && self.component_of(s.trailing_zeros() as usize, s) == s
    }

    /// Connected and nonempty.
    pub fn is_connected(&self) -> bool {
        self.connected_within(full_mask(self.order()))
    }

    pub fn is_complete(&self) -> bool {
        *self == UGraph::complete(self.order())
    }

    /// The digraph with both arcs for every edge.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        Digraph::from_out_masks(self.adj.clone())
    }
}

/// `UG(D)`: `{u, v}` is an edge when `(u, v)` or `(v, u)` is an arc.
pub fn underlying_graph(d: &Digraph) -> UGraph {
    UGraph::from_adjacency(
        d.out_masks().iter().zip(d.in_masks()).map(|(o, i)| o | i).collect(),
    )
}

/// Every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating_set(g: &UGraph, s: VertexSet) -> bool {
    let outside = full_mask(g.order()) & !s.bits();
    Bits::new(outside).all(|x| g.adj[x] & s.bits() != 0)
}

/// Every two members of `s` are adjacent.
pub fn is_clique(g: &UGraph, s: VertexSet) -> bool {
    s.iter().all(|v| s.bits() & !(1 << v) & !g.adj[v] == 0)
}

/// `s` is nonempty and induces a connected subgraph.
pub fn is_connected_subset(g: &UGraph, s: VertexSet) -> bool {
    g.connected_within(s.bits())
}

fn check_connected(g: &UGraph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyDigraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// κ(G) via Menger: the minimum, over non-adjacent pairs, of the maximum
/// number of internally vertex-disjoint paths. `κ(K_n) = n - 1`.
pub fn vertex_connectivity(g: &UGraph) -> Result<usize> {
    if g.order() < 2 {
        return Err(Error::TrivialGraph);
    }
    check_connected(g)?;
    let n = g.order();
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
    }
    Ok(best)
}

/// Maximum number of internally disjoint `s`–`t` paths, stopping at `cap`.
fn local_connectivity(g: &UGraph, s: usize, t: usize, cap: usize) -> usize {
    // Vertex v becomes v_in = 2v and v_out = 2v + 1 joined by a unit arc.
    let n = g.order();
    let size = 2 * n;
    let inf = i32::MAX / 2;
    let mut cap_m = vec![0i32; size * size];
    for v in 0..n {
        cap_m[2 * v * size + 2 * v + 1] = if v == s || v == t { inf } else { 1 };
        for w in Bits::new(g.adj[v]) {
            cap_m[(2 * v + 1) * size + 2 * w] = inf;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; size];
    while flow < cap {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..size {
                if prev[y] == usize::MAX && cap_m[x * size + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap_m[x * size + y] -= 1;
            cap_m[y * size + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// κ(G) by trying every vertex set in order of size.
pub fn vertex_connectivity_exhaustive(g: &UGraph) -> Result<usize> {
    if g.order() < 2 {
        return Err(Error::TrivialGraph);
    }
    check_connected(g)?;
    let n = g.order();
    let all = full_mask(n);
    for size in 0..n.saturating_sub(1) {
        let separates = subsets_of_size(n, size).any(|cut| {
            let rest = all & !cut;
            rest.count_ones() >= 2 && !g.connected_within(rest)
        });
        if separates {
            return Ok(size);
        }
    }
    Ok(n - 1)
}

/// All `size`-subsets of `0..n` as masks, in Gosper order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let mut next = (size <= n).then(|| full_mask(size));
    std::iter::from_fn(move || {
        let cur = next?;
        let c = cur & cur.wrapping_neg();
        let r = cur.wrapping_add(c);
        next = if cur == 0 || r == 0 {
            None
        } else {
            let succ = (((r ^ cur) >> 2) / c) | r;
            (n >= 64 || succ >> n == 0).then_some(succ)
        };
        Some(cur)
    })
}

/// d_c(G): the maximum number of blocks in a partition of `V(G)` into
/// connected dominating sets, with a witness.
///
/// Runs the vertex partition search on the symmetric digraph of `g`, where
/// strong in-dominating sets are exactly connected dominating sets.
pub fn connected_domatic_number(g: &UGraph) -> Result<SolveResult<VertexPartition>> {
    check_connected(g)?;
    let started = Instant::now();
    let n = g.order();
    let bound = g.min_degree().unwrap() + 1;
    let mut best = VertexPartition::whole(n);
    let mut nodes = 0;
    for k in 2..=bound.min(n) {
        let mut search = VertexSearch::new(&g.adj, &g.adj, k, true);
        let mut found = None;
        search.run(&mut |assignment| {
            found = Some(assignment.to_vec());
            true
        });
        nodes += search.nodes;
        match found {
            Some(a) => best = VertexPartition::from_assignment(a)?.canonical(),
            None => break,
        }
    }
    Ok(SolveResult {
        value: best.block_count(),
        witness: best,
        stats: SearchStats { nodes, elapsed: started.elapsed() },
    })
}

/// Outcome of [`clique_domination_number`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueDomination {
    Number(usize),
    NoDominatingClique,
}

/// γ_cl(G): the minimum size of a dominating clique.
pub fn clique_domination_number(g: &UGraph) -> Result<CliqueDomination> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    // Cliques of the current size, grown by appending a larger vertex.
    let mut layer: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    let mut size = 1;
    while !layer.is_empty() {
        if layer.iter().any(|&c| is_dominating_set(g, VertexSet::from_bits(c))) {
            return Ok(CliqueDomination::Number(size));
        }
        let mut next = Vec::new();
        for &c in &layer {
            let top = 63 - c.leading_zeros() as usize;
            let common = (0..n).filter(|&v| c >> v & 1 == 1).fold(full_mask(n), |acc, v| acc & g.adj[v]);
            for w in Bits::new(common >> top >> 1) {
                next.push(c | 1 << (top + 1 + w));
            }
        }
        layer = next;
        size += 1;
    }
    Ok(CliqueDomination::NoDominatingClique)
}
