//! Derived digraphs and the partition lifts that carry strong in-domatic
//! partitions from a digraph to its derived digraphs.
//!
//! Every construction returns the map needed to interpret output vertices:
//! coordinates for products, origins for compositions, arcs for line
//! digraphs and [`TaggedVertex`] for the four digraphs on `V(D) ∪ A(D)`.

use crate::digraph::{Arc, Digraph, VertexSet};
use crate::domination::{is_strong_in_domatic_partition, VertexPartition};
use crate::error::{Error, Result};
use crate::MAX_ORDER;

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(Error::TooManyVertices(order))
    } else {
        Ok(())
    }
}

/// A Cartesian product with the coordinates of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub digraph: Digraph,
    /// `coords[id] = (x, y)`; ids run `x * |V(H)| + y`.
    pub coords: Vec<(usize, usize)>,
}

impl Product {
    pub fn id(&self, x: usize, y: usize) -> usize {
        let m = self.coords.last().map_or(0, |c| c.1 + 1);
        x * m + y
    }
}

/// `D □ H`: `(x, z) → (u, v)` iff `x = u` and `z → v` in `H`, or `z = v` and
/// `x → u` in `D`.
pub fn cartesian_product(d: &Digraph, h: &Digraph) -> Result<Product> {
    if d.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyDigraph);
    }
    let (n, m) = (d.order(), h.order());
    check_order(n * m)?;
    let id = |x: usize, y: usize| x * m + y;
    let mut arcs = Vec::new();
    for x in 0..n {
        for (z, v) in h.arcs() {
            arcs.push((id(x, z), id(x, v)));
        }
    }
    for (x, u) in d.arcs() {
        for z in 0..m {
            arcs.push((id(x, z), id(u, z)));
        }
    }
    let coords = (0..n).flat_map(|x| (0..m).map(move |y| (x, y))).collect();
    Ok(Product { digraph: Digraph::new(n * m, arcs)?, coords })
}

/// A host digraph with one part digraph per host vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSpec {
    pub host: Digraph,
    pub parts: Vec<Digraph>,
}

impl CompositionSpec {
    pub fn new(host: Digraph, parts: Vec<Digraph>) -> Result<Self> {
        if parts.len() != host.order() {
            return Err(Error::InvalidParameters(format!(
                "{} parts for a host of order {}",
                parts.len(),
                host.order()
            )));
        }
        if parts.iter().any(|p| p.order() == 0) {
            return Err(Error::EmptyDigraph);
        }
        Ok(CompositionSpec { host, parts })
    }

    /// First output id of each part.
    fn offsets(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, p| {
                let start = *acc;
                *acc += p.order();
                Some(start)
            })
            .collect()
    }
}

/// `D[α]` with the origin of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub digraph: Digraph,
    /// `origin[id] = (host vertex, vertex inside its part)`.
    pub origin: Vec<(usize, usize)>,
}

/// Replaces each host vertex `v` by its part `D_v` and joins every vertex
/// of `D_v` to every vertex of `D_u` when `v → u`. Parts are numbered
/// consecutively in host order.
pub fn composition(spec: &CompositionSpec) -> Result<Composition> {
    let offsets = spec.offsets();
    let total: usize = spec.parts.iter().map(Digraph::order).sum();
    check_order(total)?;
    let mut arcs = Vec::new();
    for (v, part) in spec.parts.iter().enumerate() {
        arcs.extend(part.arcs().into_iter().map(|(a, b)| (offsets[v] + a, offsets[v] + b)));
    }
    for (v, u) in spec.host.arcs() {
        for a in 0..spec.parts[v].order() {
            for b in 0..spec.parts[u].order() {
                arcs.push((offsets[v] + a, offsets[u] + b));
            }
        }
    }
    let origin = spec
        .parts
        .iter()
        .enumerate()
        .flat_map(|(v, p)| (0..p.order()).map(move |i| (v, i)))
        .collect();
    Ok(Composition { digraph: Digraph::new(total, arcs)?, origin })
}

/// A line digraph; vertex `i` is `arcs[i]`, the `i`-th arc of the source in
/// sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineDigraph {
    pub digraph: Digraph,
    pub arcs: Vec<Arc>,
}

impl LineDigraph {
    pub fn vertex_of(&self, arc: Arc) -> Option<usize> {
        self.arcs.binary_search(&arc).ok()
    }
}

/// `L(D)`: `(u, v) → (w, z)` iff `v = w`.
pub fn line_digraph(d: &Digraph) -> Result<LineDigraph> {
    let arcs = d.arcs();
    if arcs.is_empty() {
        return Err(Error::NoArcs);
    }
    check_order(arcs.len())?;
    let mut line_arcs = Vec::new();
    for (i, &(_, v)) in arcs.iter().enumerate() {
        for (j, &(w, _)) in arcs.iter().enumerate() {
            if v == w {
                line_arcs.push((i, j));
            }
        }
    }
    Ok(LineDigraph { digraph: Digraph::new(arcs.len(), line_arcs)?, arcs })
}

/// A vertex of `S(D)`, `R(D)`, `Q(D)` or `T(D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TaggedVertex {
    Original(usize),
    ArcVertex(usize, usize),
}

impl std::fmt::Display for TaggedVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TaggedVertex::Original(v) => write!(f, "{v}"),
            TaggedVertex::ArcVertex(u, v) => write!(f, "({u},{v})"),
        }
    }
}

/// A digraph on `V(D) ∪ A(D)`. Ids `0..n` are the original vertices, then
/// one id per arc in sorted arc order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcVertexDigraph {
    pub digraph: Digraph,
    pub tags: Vec<TaggedVertex>,
}

impl ArcVertexDigraph {
    pub fn id_of(&self, tag: TaggedVertex) -> Option<usize> {
        self.tags.iter().position(|&t| t == tag)
    }

    /// Ids of the original vertices, `0..n`.
    pub fn originals(&self) -> VertexSet {
        self.tags
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, TaggedVertex::Original(_)))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn arc_vertices(&self) -> VertexSet {
        VertexSet::full(self.tags.len()).difference(self.originals())
    }
}

#[derive(Clone, Copy)]
struct ArcVertexRules {
    /// Originals keep their arcs of `D` (root, total).
    original_arcs: bool,
    /// Arc-vertices `(u, v)` point at every `(v, y)` (middle, total).
    arc_successors: bool,
}

fn arc_vertex_digraph(d: &Digraph, rules: ArcVertexRules) -> Result<ArcVertexDigraph> {
    let arcs = d.arcs();
    if arcs.is_empty() {
        return Err(Error::NoArcs);
    }
    let n = d.order();
    check_order(n + arcs.len())?;
    let arc_id = |i: usize| n + i;
    let mut out = Vec::new();
    for (i, &(u, v)) in arcs.iter().enumerate() {
        out.push((u, arc_id(i)));
        out.push((arc_id(i), v));
        if rules.original_arcs {
            out.push((u, v));
        }
        if rules.arc_successors {
            for (j, &(w, _)) in arcs.iter().enumerate() {
                if w == v {
                    out.push((arc_id(i), arc_id(j)));
                }
            }
        }
    }
    let tags = (0..n)
        .map(TaggedVertex::Original)
        .chain(arcs.iter().map(|&(u, v)| TaggedVertex::ArcVertex(u, v)))
        .collect();
    Ok(ArcVertexDigraph { digraph: Digraph::new(n + arcs.len(), out)?, tags })
}

/// `S(D)`: every arc `(u, v)` becomes the path `u → (u,v) → v`.
pub fn subdivision(d: &Digraph) -> Result<ArcVertexDigraph> {
    arc_vertex_digraph(d, ArcVertexRules { original_arcs: false, arc_successors: false })
}

/// `R(D)`: the subdivision plus the original arcs.
pub fn root(d: &Digraph) -> Result<ArcVertexDigraph> {
    arc_vertex_digraph(d, ArcVertexRules { original_arcs: true, arc_successors: false })
}

/// `Q(D)`: the subdivision plus `(u,v) → (v,y)` for consecutive arcs.
pub fn middle(d: &Digraph) -> Result<ArcVertexDigraph> {
    arc_vertex_digraph(d, ArcVertexRules { original_arcs: false, arc_successors: true })
}

/// `T(D)`: the middle digraph plus the original arcs.
pub fn total(d: &Digraph) -> Result<ArcVertexDigraph> {
    arc_vertex_digraph(d, ArcVertexRules { original_arcs: true, arc_successors: true })
}

fn require_valid(d: &Digraph, p: &VertexPartition) -> Result<()> {
    if p.order() != d.order() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} vertices, digraph has {}",
            p.order(),
            d.order()
        )));
    }
    let check = is_strong_in_domatic_partition(d, p)?;
    if check.is_valid() {
        Ok(())
    } else {
        Err(Error::MalformedPartition(format!("not a strong in-domatic partition: {check}")))
    }
}

/// Lifts a strong in-domatic partition `{S_i}` of `D` to `D □ H` as
/// `V_i = {(x, y) : x ∈ S_i}`.
pub fn lift_product_partition(
    p: &VertexPartition,
    d: &Digraph,
    h: &Digraph,
) -> Result<VertexPartition> {
    if !d.is_strong()? || !h.is_strong()? {
        return Err(Error::NotStrong);
    }
    require_valid(d, p)?;
    let m = h.order();
    let assignment = (0..d.order() * m).map(|id| p.block_of(id / m)).collect();
    VertexPartition::from_assignment(assignment)
}

/// The partition of `D[α]` into `n = min |V(D_v)|` blocks: block `k < n-1`
/// takes the `k`-th vertex of every part and the last block takes the rest.
pub fn composition_partition(spec: &CompositionSpec) -> Result<VertexPartition> {
    if spec.host.order() < 2 {
        return Err(Error::Precondition("the host must have at least two vertices".into()));
    }
    if !spec.host.is_strong()? {
        return Err(Error::NotStrong);
    }
    let n = spec.parts.iter().map(Digraph::order).min().unwrap();
    let assignment = spec
        .parts
        .iter()
        .flat_map(|part| (0..part.order()).map(move |i| i.min(n - 1)))
        .collect();
    VertexPartition::from_assignment(assignment)
}

fn require_line_input(p: &VertexPartition, d: &Digraph) -> Result<LineDigraph> {
    if !d.is_strong()? {
        return Err(Error::NotStrong);
    }
    let line = line_digraph(d)?;
    require_valid(&line.digraph, p)?;
    Ok(line)
}

/// `{S_1 ∪ V(D), S_2, ..., S_k}` on `Q(D)` from a strong in-domatic partition
/// `{S_i}` of `L(D)`. Requires order at least 3: for `K_2` the two
/// singletons of `L(K_2)` lift to `{0, 1, (0,1)}, {(1,0)}`, and `0` has no
/// out-neighbor in the second block.
pub fn lift_middle_partition(p: &VertexPartition, d: &Digraph) -> Result<VertexPartition> {
    if d.order() < 3 {
        return Err(Error::Precondition("the digraph must have order at least 3".into()));
    }
    require_line_input(p, d)?;
    let assignment = std::iter::repeat_n(0, d.order())
        .chain(p.assignment().iter().copied())
        .collect();
    VertexPartition::from_assignment(assignment)
}

/// `{V(D), S_1, ..., S_k}` on `T(D)` from a strong in-domatic partition
/// `{S_i}` of `L(D)`. Requires order at least 3.
pub fn lift_total_partition(p: &VertexPartition, d: &Digraph) -> Result<VertexPartition> {
    if d.order() < 3 {
        return Err(Error::Precondition("the digraph must have order at least 3".into()));
    }
    require_line_input(p, d)?;
    let assignment = std::iter::repeat_n(0, d.order())
        .chain(p.assignment().iter().map(|&b| b + 1))
        .collect();
    VertexPartition::from_assignment(assignment)
}
