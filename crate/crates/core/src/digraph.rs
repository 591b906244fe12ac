//! The digraph value type and its structural queries.
//!
//! Vertices are dense ids `0..order`. Adjacency is stored as one 64-bit mask
//! per vertex in each direction, which caps the order at [`MAX_ORDER`] and
//! makes neighborhood intersections single instructions. Values are
//! immutable once built.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// An ordered pair `(tail, head)`.
pub type Arc = (usize, usize);

/// A set of vertex ids, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// `{0, 1, ..., order - 1}`.
    pub fn full(order: usize) -> Self {
        VertexSet(full_mask(order))
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_ORDER, "vertex id {v} out of range");
        VertexSet(1 << v)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_ORDER, "vertex id {v} out of range");
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_ORDER {
            self.0 &= !(1 << v);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(u64);

impl Bits {
    pub(crate) fn new(mask: u64) -> Self {
        Bits(mask)
    }
}

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// A set of arcs, kept in lexicographic order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ArcSet(BTreeSet<Arc>);

impl ArcSet {
    pub fn new() -> Self {
        ArcSet(BTreeSet::new())
    }

    pub fn insert(&mut self, arc: Arc) -> bool {
        self.0.insert(arc)
    }

    pub fn contains(&self, arc: Arc) -> bool {
        self.0.contains(&arc)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Arc> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Arc> for ArcSet {
    fn from_iter<I: IntoIterator<Item = Arc>>(iter: I) -> Self {
        ArcSet(iter.into_iter().collect())
    }
}

pub(crate) fn full_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// A loopless digraph without parallel arcs on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    /// Builds a digraph, rejecting loops, out-of-range endpoints and
    /// repeated arcs.
    pub fn new(order: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::TooManyVertices(order));
        }
        let mut out = vec![0u64; order];
        let mut inn = vec![0u64; order];
        for (u, v) in arcs {
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if out[u] >> v & 1 == 1 {
                return Err(Error::DuplicateArc(u, v));
            }
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
        }
        Ok(Digraph { order, out, inn, labels: None })
    }

    /// Builds from out-neighborhood masks; masks must already be valid.
    pub(crate) fn from_out_masks(out: Vec<u64>) -> Self {
        let order = out.len();
        debug_assert!(order <= MAX_ORDER);
        let mut inn = vec![0u64; order];
        for (u, &m) in out.iter().enumerate() {
            debug_assert_eq!(m >> u & 1, 0, "loop at {u}");
            debug_assert_eq!(m & !full_mask(order), 0);
            for v in Bits(m) {
                inn[v] |= 1 << u;
            }
        }
        Digraph { order, out, inn, labels: None }
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidParameters(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`, falling back to its id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for (u, &m) in self.out.iter().enumerate() {
            arcs.extend(Bits(m).map(|v| (u, v)));
        }
        arcs
    }

    pub fn arc_set(&self) -> ArcSet {
        self.arcs().into_iter().collect()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.out[u] >> v & 1 == 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn out_neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.out[v]))
    }

    pub fn in_neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.inn[v]))
    }

    pub(crate) fn out_masks(&self) -> &[u64] {
        &self.out
    }

    pub(crate) fn in_masks(&self) -> &[u64] {
        &self.inn
    }

    pub fn out_degree(&self, v: usize) -> Result<usize> {
        Ok(self.out_neighbors(v)?.len())
    }

    pub fn in_degree(&self, v: usize) -> Result<usize> {
        Ok(self.in_neighbors(v)?.len())
    }

    /// δ⁺: the minimum out-degree.
    pub fn min_out_degree(&self) -> Result<usize> {
        self.out
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .ok_or(Error::EmptyDigraph)
    }

    /// δ⁻: the minimum in-degree.
    pub fn min_in_degree(&self) -> Result<usize> {
        self.inn
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .ok_or(Error::EmptyDigraph)
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        match s.difference(self.vertices()).first() {
            Some(v) => Err(Error::InvalidVertex(v)),
            None => Ok(()),
        }
    }

    /// The subdigraph induced by `s`, re-indexed to `0..|s|`.
    ///
    /// The returned vector maps each new id to its id in `self`.
    pub fn induced_subdigraph(&self, s: VertexSet) -> Result<(Digraph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let out = map
            .iter()
            .map(|&old| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.out[old] >> w & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let mut sub = Digraph::from_out_masks(out);
        if let Some(labels) = &self.labels {
            sub.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((sub, map))
    }

    /// The subdigraph `D[E]` whose vertices are the end-vertices of `e` and
    /// whose arcs are exactly `e`, re-indexed like [`Self::induced_subdigraph`].
    pub fn arc_induced_subdigraph(&self, e: &ArcSet) -> Result<(Digraph, Vec<usize>)> {
        if e.is_empty() {
            return Err(Error::EmptyArcSet);
        }
        let mut ends = VertexSet::empty();
        for (u, v) in e.iter() {
            if !self.has_arc(u, v) {
                return Err(Error::NotAnArc(u, v));
            }
            ends.insert(u);
            ends.insert(v);
        }
        let map = ends.to_vec();
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut out = vec![0u64; map.len()];
        for (u, v) in e.iter() {
            out[index[u]] |= 1 << index[v];
        }
        let mut sub = Digraph::from_out_masks(out);
        if let Some(labels) = &self.labels {
            sub.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((sub, map))
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub(crate) fn reach_within(&self, start: usize, within: u64, forward: bool) -> u64 {
        let adj = if forward { &self.out } else { &self.inn };
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether `D⟨s⟩` is strong. A single vertex is strong; the empty set is not.
    pub(crate) fn is_strong_within(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let start = s.trailing_zeros() as usize;
        self.reach_within(start, s, true) == s && self.reach_within(start, s, false) == s
    }

    /// Strong connectivity by two reachability sweeps. A single vertex is strong.
    pub fn is_strong(&self) -> Result<bool> {
        if self.order == 0 {
            return Err(Error::EmptyDigraph);
        }
        Ok(self.is_strong_within(full_mask(self.order)))
    }

    /// Every pair of distinct vertices is joined by at least one arc.
    pub fn is_semicomplete(&self) -> bool {
        (0..self.order).all(|u| (self.out[u] | self.inn[u] | 1 << u) == full_mask(self.order))
    }

    /// Every pair of distinct vertices is joined by both arcs.
    pub fn is_complete(&self) -> bool {
        (0..self.order).all(|u| (self.out[u] | 1 << u) == full_mask(self.order))
    }

    /// Whether the arc `(u, v)` has its reverse `(v, u)` in the digraph.
    pub fn is_symmetric_arc(&self, u: usize, v: usize) -> Result<bool> {
        if !self.has_arc(u, v) {
            return Err(Error::NotAnArc(u, v));
        }
        Ok(self.has_arc(v, u))
    }

    /// The digraph with every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph {
            order: self.order,
            out: self.inn.clone(),
            inn: self.out.clone(),
            labels: self.labels.clone(),
        }
    }

    /// `D - a`.
    pub fn without_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        if !self.has_arc(u, v) {
            return Err(Error::NotAnArc(u, v));
        }
        let mut d = self.clone();
        d.out[u] &= !(1 << v);
        d.inn[v] &= !(1 << u);
        Ok(d)
    }

    /// The spanning subdigraph with arc set `arcs`.
    pub fn spanning_subdigraph(&self, arcs: &ArcSet) -> Result<Digraph> {
        let mut out = vec![0u64; self.order];
        for (u, v) in arcs.iter() {
            if !self.has_arc(u, v) {
                return Err(Error::NotAnArc(u, v));
            }
            out[u] |= 1 << v;
        }
        let mut d = Digraph::from_out_masks(out);
        d.labels = self.labels.clone();
        Ok(d)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.order, self.arcs())
    }
}
