//! Predicates for in-dominating sets, strong in-domatic partitions, strong
//! covers and their out-domination duals.
//!
//! Direction convention: a vertex `x` outside `S` is in-dominated by `S` when
//! it has an *out*-neighbor in `S`, i.e. some arc `(x, z)` with `z ∈ S`.

use std::fmt;

use crate::digraph::{full_mask, Arc, ArcSet, Bits, Digraph, VertexSet};
use crate::error::{Error, Result};

/// A partition of `0..order` into nonempty indexed blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPartition {
    block_of: Vec<usize>,
    block_count: usize,
}

impl VertexPartition {
    /// From a vertex → block-index map. Every index in `0..k` must be used.
    pub fn from_assignment(block_of: Vec<usize>) -> Result<Self> {
        if block_of.len() > crate::MAX_ORDER {
            return Err(Error::TooManyVertices(block_of.len()));
        }
        let block_count = block_of.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut used = vec![false; block_count];
        for &b in &block_of {
            used[b] = true;
        }
        if let Some(b) = used.iter().position(|u| !u) {
            return Err(Error::MalformedPartition(format!("block {b} is empty")));
        }
        Ok(VertexPartition { block_of, block_count })
    }

    /// From explicit blocks over `0..order`.
    pub fn from_blocks<B: AsRef<[usize]>>(order: usize, blocks: &[B]) -> Result<Self> {
        if order > crate::MAX_ORDER {
            return Err(Error::TooManyVertices(order));
        }
        let mut block_of = vec![usize::MAX; order];
        for (i, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(Error::MalformedPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= order {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} in block {i} is not below {order}"
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} appears in blocks {} and {i}",
                        block_of[v]
                    )));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::MalformedPartition(format!("vertex {v} is in no block")));
        }
        Ok(VertexPartition { block_of, block_count: blocks.len() })
    }

    pub fn from_sets(order: usize, blocks: &[VertexSet]) -> Result<Self> {
        let lists: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        Self::from_blocks(order, &lists)
    }

    /// `{V}`.
    pub fn whole(order: usize) -> Self {
        VertexPartition { block_of: vec![0; order], block_count: usize::from(order > 0) }
    }

    pub fn singletons(order: usize) -> Self {
        VertexPartition { block_of: (0..order).collect(), block_count: order }
    }

    pub fn order(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.block_of
    }

    pub fn block(&self, i: usize) -> VertexSet {
        self.block_of.iter().enumerate().filter(|&(_, &b)| b == i).map(|(v, _)| v).collect()
    }

    pub fn blocks(&self) -> Vec<VertexSet> {
        let mut blocks = vec![VertexSet::empty(); self.block_count];
        for (v, &b) in self.block_of.iter().enumerate() {
            blocks[b].insert(v);
        }
        blocks
    }

    /// Relabels blocks so they appear in order of their minimum member.
    pub fn canonical(&self) -> Self {
        let mut relabel = vec![usize::MAX; self.block_count];
        let mut next = 0;
        let block_of = self
            .block_of
            .iter()
            .map(|&b| {
                if relabel[b] == usize::MAX {
                    relabel[b] = next;
                    next += 1;
                }
                relabel[b]
            })
            .collect();
        VertexPartition { block_of, block_count: self.block_count }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Merges the blocks listed in `indices` into one, keeping the others.
    pub fn merge(&self, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidParameters("no blocks to merge".into()));
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= self.block_count) {
            return Err(Error::InvalidParameters(format!("block {i} does not exist")));
        }
        let target = *indices.iter().min().unwrap();
        let merged: Vec<usize> = self
            .block_of
            .iter()
            .map(|&b| if indices.contains(&b) { target } else { b })
            .collect();
        // Re-densify indices.
        let mut seen = vec![usize::MAX; self.block_count];
        let mut next = 0;
        let block_of = merged
            .iter()
            .map(|&b| {
                if seen[b] == usize::MAX {
                    seen[b] = next;
                    next += 1;
                }
                seen[b]
            })
            .collect();
        Ok(VertexPartition { block_of, block_count: next })
    }
}

/// A partition of a digraph's arc set into nonempty indexed blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcPartition {
    arcs: Vec<Arc>,
    block_of: Vec<usize>,
    block_count: usize,
}

impl ArcPartition {
    pub fn from_blocks(blocks: &[Vec<Arc>]) -> Result<Self> {
        let mut pairs: Vec<(Arc, usize)> = Vec::new();
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::MalformedPartition(format!("block {i} is empty")));
            }
            pairs.extend(block.iter().map(|&a| (a, i)));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::MalformedPartition(format!(
                "arc {:?} appears more than once",
                w[0].0
            )));
        }
        Ok(ArcPartition {
            arcs: pairs.iter().map(|p| p.0).collect(),
            block_of: pairs.iter().map(|p| p.1).collect(),
            block_count: blocks.len(),
        })
    }

    /// From a block index per arc, `arcs` in lexicographic order.
    pub(crate) fn from_assignment(arcs: Vec<Arc>, block_of: Vec<usize>, block_count: usize) -> Self {
        ArcPartition { arcs, block_of, block_count }
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn block_of(&self, arc: Arc) -> Option<usize> {
        self.arcs.binary_search(&arc).ok().map(|i| self.block_of[i])
    }

    pub fn blocks(&self) -> Vec<ArcSet> {
        let mut blocks = vec![ArcSet::new(); self.block_count];
        for (&a, &b) in self.arcs.iter().zip(&self.block_of) {
            blocks[b].insert(a);
        }
        blocks
    }

    /// Blocks ordered by their smallest arc.
    pub fn canonical(&self) -> Self {
        let mut relabel = vec![usize::MAX; self.block_count];
        let mut next = 0;
        let block_of = self
            .block_of
            .iter()
            .map(|&b| {
                if relabel[b] == usize::MAX {
                    relabel[b] = next;
                    next += 1;
                }
                relabel[b]
            })
            .collect();
        ArcPartition { arcs: self.arcs.clone(), block_of, block_count: self.block_count }
    }
}

/// Why a block fails its predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockFailure {
    /// `vertex` lies outside the block and has no out-neighbor in it.
    NotInDominating { vertex: usize },
    /// `vertex` lies outside the block and has no in-neighbor in it.
    NotOutDominating { vertex: usize },
    /// The induced (or arc-induced) subdigraph is not strong.
    NotStrong,
    /// The arc-induced subdigraph misses `vertex`.
    NotSpanning { vertex: usize },
}

/// Outcome of a partition predicate, naming the first failing block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionCheck {
    Valid,
    Invalid { block: usize, reason: BlockFailure },
}

impl PartitionCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, PartitionCheck::Valid)
    }
}

impl fmt::Display for PartitionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionCheck::Valid => write!(f, "valid"),
            PartitionCheck::Invalid { block, reason } => match reason {
                BlockFailure::NotStrong => write!(f, "block {block} not strong"),
                BlockFailure::NotInDominating { vertex } => write!(
                    f,
                    "block {block} not in-dominating (vertex {vertex} has no out-neighbor in it)"
                ),
                BlockFailure::NotOutDominating { vertex } => write!(
                    f,
                    "block {block} not out-dominating (vertex {vertex} has no in-neighbor in it)"
                ),
                BlockFailure::NotSpanning { vertex } => {
                    write!(f, "block {block} not spanning (vertex {vertex} missing)")
                }
            },
        }
    }
}

/// First vertex outside `s` with no neighbor in `s` under `adj`.
pub(crate) fn first_undominated(adj: &[u64], s: u64) -> Option<usize> {
    let outside = full_mask(adj.len()) & !s;
    Bits::new(outside).find(|&x| adj[x] & s == 0)
}

fn check_set(d: &Digraph, s: VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    match s.difference(d.vertices()).first() {
        Some(v) => Err(Error::InvalidVertex(v)),
        None => Ok(()),
    }
}

/// Every vertex outside `s` has an out-neighbor in `s`.
pub fn is_in_dominating(d: &Digraph, s: VertexSet) -> Result<bool> {
    check_set(d, s)?;
    Ok(first_undominated(d.out_masks(), s.bits()).is_none())
}

/// Every vertex outside `s` has an in-neighbor in `s`.
pub fn is_out_dominating(d: &Digraph, s: VertexSet) -> Result<bool> {
    check_set(d, s)?;
    Ok(first_undominated(d.in_masks(), s.bits()).is_none())
}

/// In-dominating with a strong induced subdigraph.
pub fn is_strong_in_dominating(d: &Digraph, s: VertexSet) -> Result<bool> {
    Ok(is_in_dominating(d, s)? && d.is_strong_within(s.bits()))
}

pub fn is_strong_out_dominating(d: &Digraph, s: VertexSet) -> Result<bool> {
    Ok(is_out_dominating(d, s)? && d.is_strong_within(s.bits()))
}

fn check_partition_shape(d: &Digraph, p: &VertexPartition) -> Result<()> {
    if p.order() != d.order() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} vertices but the digraph has {}",
            p.order(),
            d.order()
        )));
    }
    Ok(())
}

fn check_blocks(d: &Digraph, p: &VertexPartition, adj: &[u64], out_mode: bool) -> PartitionCheck {
    for (block, s) in p.blocks().into_iter().enumerate() {
        if let Some(vertex) = first_undominated(adj, s.bits()) {
            let reason = if out_mode {
                BlockFailure::NotOutDominating { vertex }
            } else {
                BlockFailure::NotInDominating { vertex }
            };
            return PartitionCheck::Invalid { block, reason };
        }
        if !d.is_strong_within(s.bits()) {
            return PartitionCheck::Invalid { block, reason: BlockFailure::NotStrong };
        }
    }
    PartitionCheck::Valid
}

/// Checks that every block is a strong in-dominating set, reporting the
/// first failing block.
pub fn is_strong_in_domatic_partition(d: &Digraph, p: &VertexPartition) -> Result<PartitionCheck> {
    check_partition_shape(d, p)?;
    Ok(check_blocks(d, p, d.out_masks(), false))
}

/// Checks that every block is strong and out-dominating (every outside
/// vertex has an in-neighbor in the block).
pub fn is_strong_out_domatic_partition(d: &Digraph, p: &VertexPartition) -> Result<PartitionCheck> {
    check_partition_shape(d, p)?;
    Ok(check_blocks(d, p, d.in_masks(), true))
}

/// Every block in-dominating; strongness not required.
pub fn is_in_domatic_partition(d: &Digraph, p: &VertexPartition) -> Result<bool> {
    check_partition_shape(d, p)?;
    Ok(p.blocks().into_iter().all(|s| first_undominated(d.out_masks(), s.bits()).is_none()))
}

/// Vertices `v` with `{v}` in-dominating.
pub fn in_dominating_vertices(d: &Digraph) -> VertexSet {
    (0..d.order())
        .filter(|&v| first_undominated(d.out_masks(), 1 << v).is_none())
        .collect()
}

fn cover_failure(d: &Digraph, e: &ArcSet) -> Result<Option<BlockFailure>> {
    if e.is_empty() {
        return Err(Error::EmptyArcSet);
    }
    if !d.is_strong()? {
        return Err(Error::NotStrong);
    }
    let (sub, map) = d.arc_induced_subdigraph(e)?;
    if map.len() != d.order() {
        let missing = d.vertices().difference(map.iter().copied().collect()).first().unwrap();
        return Ok(Some(BlockFailure::NotSpanning { vertex: missing }));
    }
    Ok((!sub.is_strong()?).then_some(BlockFailure::NotStrong))
}

/// `D[E]` spans `V(D)` and is strong. `d` must be strong.
pub fn is_strong_cover(d: &Digraph, e: &ArcSet) -> Result<bool> {
    Ok(cover_failure(d, e)?.is_none())
}

/// Every block of `q` is a strong cover of `d`.
pub fn is_strong_cover_partition(d: &Digraph, q: &ArcPartition) -> Result<PartitionCheck> {
    if q.arcs() != d.arcs().as_slice() {
        return Err(Error::MalformedPartition(
            "arc partition does not cover exactly the arcs of the digraph".into(),
        ));
    }
    if d.arc_count() == 0 {
        return Err(Error::NoArcs);
    }
    for (block, e) in q.blocks().iter().enumerate() {
        if let Some(reason) = cover_failure(d, e)? {
            return Ok(PartitionCheck::Invalid { block, reason });
        }
    }
    Ok(PartitionCheck::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Digraph {
        Digraph::new(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))))
            .unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn in_domination_direction_on_c3() {
        // 0 -> 1 -> 2 -> 0: vertex 1's only out-neighbor is 2, so {0} fails.
        let c3 = cycle(3);
        assert_eq!(is_in_dominating(&c3, set(&[0])), Ok(false));
        assert_eq!(is_out_dominating(&c3, set(&[0])), Ok(false));
        assert_eq!(is_in_dominating(&c3, set(&[0, 1])), Ok(true));
        assert_eq!(is_in_dominating(&c3, set(&[1, 2])), Ok(true));
        assert_eq!(is_in_dominating(&c3, set(&[2, 0])), Ok(true));
        // {0,1} is out-dominating only if 2 has an in-neighbor in it: 1 -> 2.
        assert_eq!(is_out_dominating(&c3, set(&[0, 1])), Ok(true));
        let p = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        // In the path 0->1->2, {2} is in-dominating for 1 but not for 0.
        assert_eq!(first_undominated(p.out_masks(), 1 << 2), Some(0));
        assert_eq!(first_undominated(p.out_masks(), 1 << 1), Some(2));
    }

    #[test]
    fn in_dominating_examples() {
        assert_eq!(is_in_dominating(&complete(3), set(&[0])), Ok(true));
        assert_eq!(is_in_dominating(&cycle(3), set(&[0])), Ok(false));
        assert_eq!(is_in_dominating(&cycle(5), VertexSet::full(5)), Ok(true));
        assert_eq!(is_in_dominating(&cycle(3), VertexSet::empty()), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn strong_in_dominating_examples() {
        assert_eq!(is_strong_in_dominating(&complete(3), set(&[0])), Ok(true));
        assert_eq!(is_strong_in_dominating(&cycle(4), set(&[0, 1])), Ok(false));
        assert_eq!(is_strong_in_dominating(&cycle(4), VertexSet::full(4)), Ok(true));
    }

    #[test]
    fn partition_examples() {
        let k4 = complete(4);
        assert!(is_strong_in_domatic_partition(&k4, &VertexPartition::singletons(4))
            .unwrap()
            .is_valid());
        let c4 = cycle(4);
        let p = VertexPartition::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let check = is_strong_in_domatic_partition(&c4, &p).unwrap();
        assert_eq!(check, PartitionCheck::Invalid { block: 0, reason: BlockFailure::NotStrong });
        assert_eq!(check.to_string(), "block 0 not strong");
        assert!(is_strong_in_domatic_partition(&c4, &VertexPartition::whole(4)).unwrap().is_valid());
        assert!(is_strong_in_domatic_partition(&c4, &VertexPartition::whole(3)).is_err());
    }

    #[test]
    fn malformed_partitions() {
        assert!(VertexPartition::from_blocks(3, &[vec![0, 1]]).is_err());
        assert!(VertexPartition::from_blocks(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(VertexPartition::from_blocks(3, &[vec![0, 1, 2], vec![]]).is_err());
        assert!(VertexPartition::from_blocks(2, &[vec![0, 5]]).is_err());
        assert!(VertexPartition::from_assignment(vec![0, 2]).is_err());
    }

    #[test]
    fn canonical_and_merge() {
        let p = VertexPartition::from_blocks(4, &[vec![3], vec![1, 2], vec![0]]).unwrap();
        let c = p.canonical();
        assert_eq!(c.blocks(), vec![set(&[0]), set(&[1, 2]), set(&[3])]);
        let m = c.merge(&[0, 2]).unwrap();
        assert_eq!(m.blocks(), vec![set(&[0, 3]), set(&[1, 2])]);
    }

    #[test]
    fn in_dominating_vertex_examples() {
        assert_eq!(in_dominating_vertices(&complete(3)), VertexSet::full(3));
        assert!(in_dominating_vertices(&cycle(4)).is_empty());
        let star = Digraph::new(4, [(1, 0), (2, 0), (3, 0)]).unwrap();
        assert_eq!(in_dominating_vertices(&star), set(&[0]));
    }

    #[test]
    fn strong_cover_examples() {
        let c3 = cycle(3);
        assert_eq!(is_strong_cover(&c3, &c3.arc_set()), Ok(true));
        let k3 = complete(3);
        assert_eq!(is_strong_cover(&k3, &[(0, 1), (1, 2), (2, 0)].into_iter().collect()), Ok(true));
        assert_eq!(is_strong_cover(&k3, &[(0, 1), (1, 0)].into_iter().collect()), Ok(false));
        let path = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(is_strong_cover(&path, &path.arc_set()), Err(Error::NotStrong));
    }

    #[test]
    fn strong_cover_partition_examples() {
        let k3 = complete(3);
        let q = ArcPartition::from_blocks(&[vec![(0, 1), (1, 2), (2, 0)], vec![(0, 2), (2, 1), (1, 0)]])
            .unwrap();
        assert!(is_strong_cover_partition(&k3, &q).unwrap().is_valid());
        let c4 = cycle(4);
        let whole = ArcPartition::from_blocks(&[c4.arcs()]).unwrap();
        assert!(is_strong_cover_partition(&c4, &whole).unwrap().is_valid());
        let halves = ArcPartition::from_blocks(&[vec![(0, 1), (1, 2)], vec![(2, 3), (3, 0)]]).unwrap();
        assert!(!is_strong_cover_partition(&c4, &halves).unwrap().is_valid());
    }

    #[test]
    fn out_domatic_matches_converse() {
        let tt = Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        for blocks in [vec![vec![0, 1, 2]], vec![vec![0], vec![1, 2]], vec![vec![0], vec![1], vec![2]]] {
            let p = VertexPartition::from_blocks(3, &blocks).unwrap();
            assert_eq!(
                is_strong_out_domatic_partition(&tt, &p).unwrap().is_valid(),
                is_strong_in_domatic_partition(&tt.converse(), &p).unwrap().is_valid()
            );
        }
        assert!(is_strong_out_domatic_partition(&complete(4), &VertexPartition::singletons(4))
            .unwrap()
            .is_valid());
        assert!(is_strong_out_domatic_partition(&cycle(3), &VertexPartition::whole(3))
            .unwrap()
            .is_valid());
    }
}
