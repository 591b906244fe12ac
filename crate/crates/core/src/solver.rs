//! Exact computation of the strong in-domatic number d_s⁻, its out-domatic
//! dual d_s⁺, the plain in-domatic number d⁻ and the strong-cover number Λ.
//!
//! Feasible block counts for strong in-domatic partitions form a prefix
//! `1..=d_s⁻(D)`: merging blocks of a valid partition keeps it valid. The
//! solvers therefore search `k = 2, 3, ...` in ascending order and stop at
//! the first infeasible `k` or at the admissible upper bound.

use std::time::{Duration, Instant};

use crate::digraph::Digraph;
use crate::domination::{ArcPartition, VertexPartition};
use crate::error::{Error, Result};
use crate::laws::upper_bound;
use crate::search::{ArcSearch, VertexSearch};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes expanded over all `k`.
    pub nodes: u64,
    pub elapsed: Duration,
}

/// An optimum value with a witness of exactly `value` blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub stats: SearchStats,
}

/// Knobs for [`strong_in_domatic_number_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Cap the ascending search with [`upper_bound`]. The law suite turns this
    /// off so the value does not depend on the bounds it is checking.
    pub use_bounds: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { use_bounds: true }
    }
}

fn require_strong(d: &Digraph) -> Result<()> {
    if d.is_strong()? {
        Ok(())
    } else {
        Err(Error::NotStrong)
    }
}

/// First partition into exactly `k` blocks found by the search, if any.
fn search_vertices(d: &Digraph, k: usize, strong: bool, nodes: &mut u64) -> Option<VertexPartition> {
    let mut search = VertexSearch::new(d.out_masks(), d.in_masks(), k, strong);
    let mut found = None;
    search.run(&mut |assignment| {
        found = Some(assignment.to_vec());
        true
    });
    *nodes += search.nodes;
    found.map(|a| VertexPartition::from_assignment(a).expect("search yields k nonempty blocks").canonical())
}

/// A strong in-domatic partition with exactly `k` blocks, if one exists.
pub fn exists_partition_into_k(d: &Digraph, k: usize) -> Result<Option<VertexPartition>> {
    require_strong(d)?;
    if k == 0 || k > d.order() {
        return Err(Error::BlockCountOutOfRange { k, order: d.order() });
    }
    if k == 1 {
        return Ok(Some(VertexPartition::whole(d.order())));
    }
    Ok(search_vertices(d, k, true, &mut 0))
}

/// d_s⁻(D) with a canonical witness. Errors on non-strong input, for which
/// no strong in-domatic partition exists.
pub fn strong_in_domatic_number(d: &Digraph) -> Result<SolveResult<VertexPartition>> {
    strong_in_domatic_number_with(d, SolveOptions::default())
}

pub fn strong_in_domatic_number_with(
    d: &Digraph,
    options: SolveOptions,
) -> Result<SolveResult<VertexPartition>> {
    require_strong(d)?;
    let started = Instant::now();
    let n = d.order();
    let cap = if options.use_bounds { upper_bound(d)? } else { n };
    let mut best = VertexPartition::whole(n);
    let mut nodes = 0;
    for k in 2..=cap {
        match search_vertices(d, k, true, &mut nodes) {
            Some(p) => best = p,
            None => break,
        }
    }
    Ok(SolveResult {
        value: best.block_count(),
        witness: best,
        stats: SearchStats { nodes, elapsed: started.elapsed() },
    })
}

/// d_s⁺(D) = d_s⁻ of the converse. The witness is a strong out-domatic
/// partition of `d`.
pub fn strong_out_domatic_number(d: &Digraph) -> Result<SolveResult<VertexPartition>> {
    strong_in_domatic_number(&d.converse())
}

/// d⁻(D): partitions into in-dominating sets, strongness not required.
pub fn in_domatic_number(d: &Digraph) -> Result<SolveResult<VertexPartition>> {
    let n = d.order();
    if n == 0 {
        return Err(Error::EmptyDigraph);
    }
    let started = Instant::now();
    let cap = (d.min_out_degree()? + 1).min(n);
    let mut best = VertexPartition::whole(n);
    let mut nodes = 0;
    for k in 2..=cap {
        match search_vertices(d, k, false, &mut nodes) {
            Some(p) => best = p,
            None => break,
        }
    }
    Ok(SolveResult {
        value: best.block_count(),
        witness: best,
        stats: SearchStats { nodes, elapsed: started.elapsed() },
    })
}

/// Λ(D): the maximum number of blocks in a partition of `A(D)` into strong
/// covers.
pub fn lambda_number(d: &Digraph) -> Result<SolveResult<ArcPartition>> {
    require_strong(d)?;
    if d.arc_count() == 0 {
        return Err(Error::NoArcs);
    }
    if d.arc_count() > 64 {
        return Err(Error::SizeCap(format!("{} arcs; at most 64 supported", d.arc_count())));
    }
    let started = Instant::now();
    let arcs = d.arcs();
    // A spanning strong arc set uses an out-arc and an in-arc at every vertex.
    let cap = (0..d.order())
        .map(|v| d.out_degree(v).unwrap().min(d.in_degree(v).unwrap()))
        .min()
        .unwrap();
    let mut best = ArcPartition::from_assignment(arcs.clone(), vec![0; arcs.len()], 1);
    let mut nodes = 0;
    for k in 2..=cap {
        let mut search = ArcSearch::new(d.order(), arcs.clone(), k);
        let mut found = None;
        search.run(&mut |assignment| {
            found = Some(assignment.to_vec());
            true
        });
        nodes += search.nodes;
        match found {
            Some(a) => best = ArcPartition::from_assignment(arcs.clone(), a, k).canonical(),
            None => break,
        }
    }
    Ok(SolveResult {
        value: best.block_count(),
        witness: best,
        stats: SearchStats { nodes, elapsed: started.elapsed() },
    })
}

/// All strong in-domatic partitions with exactly `k` blocks, canonical and
/// sorted.
pub fn enumerate_partitions_into_k(d: &Digraph, k: usize) -> Result<Vec<VertexPartition>> {
    require_strong(d)?;
    if k == 0 || k > d.order() {
        return Err(Error::BlockCountOutOfRange { k, order: d.order() });
    }
    let mut all = Vec::new();
    let mut search = VertexSearch::new(d.out_masks(), d.in_masks(), k, true);
    search.run(&mut |assignment| {
        all.push(VertexPartition::from_assignment(assignment.to_vec()).unwrap().canonical());
        false
    });
    all.sort();
    all.dedup();
    Ok(all)
}

/// Every d_s⁻-partition of `d`, deduplicated up to block relabelling.
pub fn enumerate_max_partitions(d: &Digraph) -> Result<Vec<VertexPartition>> {
    let value = strong_in_domatic_number(d)?.value;
    enumerate_partitions_into_k(d, value)
}

/// The invariant computed by [`brute_force_oracle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    StrongInDomatic,
    StrongOutDomatic,
    InDomatic,
    Lambda,
}

/// Largest order the oracle accepts for vertex invariants.
pub const ORACLE_MAX_ORDER: usize = 6;
/// Largest arc count the oracle accepts for Λ.
pub const ORACLE_MAX_ARCS: usize = 12;

/// Computes `which` by enumerating every set partition and filtering with
/// the domination predicates. Shares no code with the search. Returns
/// `None` when no partition qualifies (e.g. d_s⁻ of a non-strong digraph).
pub fn brute_force_oracle(d: &Digraph, which: Invariant) -> Result<Option<usize>> {
    oracle::evaluate(d, which)
}

mod oracle {
    use super::Invariant;
    use crate::digraph::Digraph;
    use crate::domination::{
        is_in_domatic_partition, is_strong_cover_partition, is_strong_in_domatic_partition,
        is_strong_out_domatic_partition, ArcPartition, VertexPartition,
    };
    use crate::error::{Error, Result};

    /// Calls `f` on every restricted growth string of length `n`.
    fn for_each_partition(n: usize, f: &mut dyn FnMut(&[usize])) {
        if n == 0 {
            return;
        }
        let mut a = vec![0usize; n];
        let mut max = vec![0usize; n];
        loop {
            f(&a);
            // Find the rightmost position that can be incremented.
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return;
                }
                if a[i] <= max[i - 1] {
                    a[i] += 1;
                    max[i] = max[i - 1].max(a[i]);
                    for j in i + 1..n {
                        a[j] = 0;
                        max[j] = max[i];
                    }
                    break;
                }
                i -= 1;
            }
        }
    }

    pub(super) fn evaluate(d: &Digraph, which: Invariant) -> Result<Option<usize>> {
        let mut best: Option<usize> = None;
        match which {
            Invariant::Lambda => {
                let arcs = d.arcs();
                if arcs.len() > super::ORACLE_MAX_ARCS {
                    return Err(Error::SizeCap(format!(
                        "oracle handles at most {} arcs, got {}",
                        super::ORACLE_MAX_ARCS,
                        arcs.len()
                    )));
                }
                if arcs.is_empty() || !d.is_strong()? {
                    return Ok(None);
                }
                for_each_partition(arcs.len(), &mut |a| {
                    let k = a.iter().max().unwrap() + 1;
                    let mut blocks = vec![Vec::new(); k];
                    for (i, &b) in a.iter().enumerate() {
                        blocks[b].push(arcs[i]);
                    }
                    let q = ArcPartition::from_blocks(&blocks).unwrap();
                    if is_strong_cover_partition(d, &q).unwrap().is_valid() {
                        best = best.max(Some(k));
                    }
                });
            }
            _ => {
                if d.order() > super::ORACLE_MAX_ORDER {
                    return Err(Error::SizeCap(format!(
                        "oracle handles order at most {}, got {}",
                        super::ORACLE_MAX_ORDER,
                        d.order()
                    )));
                }
                if d.order() == 0 {
                    return Err(Error::EmptyDigraph);
                }
                for_each_partition(d.order(), &mut |a| {
                    let p = VertexPartition::from_assignment(a.to_vec()).unwrap();
                    let ok = match which {
                        Invariant::StrongInDomatic => {
                            is_strong_in_domatic_partition(d, &p).unwrap().is_valid()
                        }
                        Invariant::StrongOutDomatic => {
                            is_strong_out_domatic_partition(d, &p).unwrap().is_valid()
                        }
                        Invariant::InDomatic => is_in_domatic_partition(d, &p).unwrap(),
                        Invariant::Lambda => unreachable!(),
                    };
                    if ok {
                        best = best.max(Some(p.block_count()));
                    }
                });
            }
        }
        Ok(best)
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{
        is_strong_cover_partition, is_strong_in_domatic_partition, is_strong_out_domatic_partition,
    };

    fn cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Digraph {
        Digraph::new(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))))
            .unwrap()
    }

    #[test]
    fn exists_partition_examples() {
        let p = exists_partition_into_k(&complete(3), 2).unwrap().unwrap();
        assert_eq!(p.block_count(), 2);
        assert!(is_strong_in_domatic_partition(&complete(3), &p).unwrap().is_valid());
        assert_eq!(exists_partition_into_k(&cycle(5), 2), Ok(None));
        assert_eq!(exists_partition_into_k(&cycle(5), 1), Ok(Some(VertexPartition::whole(5))));
        assert_eq!(
            exists_partition_into_k(&cycle(5), 6),
            Err(Error::BlockCountOutOfRange { k: 6, order: 5 })
        );
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(exists_partition_into_k(&path, 1), Err(Error::NotStrong));
    }

    #[test]
    fn strong_in_domatic_examples() {
        for n in 1..=5 {
            let r = strong_in_domatic_number(&complete(n)).unwrap();
            assert_eq!(r.value, n);
            assert_eq!(r.witness, VertexPartition::singletons(n));
        }
        assert_eq!(strong_in_domatic_number(&cycle(5)).unwrap().value, 1);
        let path = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(strong_in_domatic_number(&path).unwrap_err(), Error::NotStrong);
    }

    #[test]
    fn out_domatic_examples() {
        assert_eq!(strong_out_domatic_number(&complete(4)).unwrap().value, 4);
        let r = strong_out_domatic_number(&cycle(5)).unwrap();
        assert_eq!(r.value, 1);
        assert!(is_strong_out_domatic_partition(&cycle(5), &r.witness).unwrap().is_valid());
        assert_eq!(strong_out_domatic_number(&complete(3)).unwrap().value, 3);
    }

    #[test]
    fn lambda_examples() {
        let r = lambda_number(&complete(3)).unwrap();
        assert_eq!(r.value, 2);
        assert!(is_strong_cover_partition(&complete(3), &r.witness).unwrap().is_valid());
        assert_eq!(lambda_number(&cycle(4)).unwrap().value, 1);
        assert_eq!(lambda_number(&complete(2)).unwrap().value, 1);
        assert_eq!(lambda_number(&complete(1)).unwrap_err(), Error::NoArcs);
    }

    #[test]
    fn in_domatic_examples() {
        assert_eq!(in_domatic_number(&complete(4)).unwrap().value, 4);
        assert_eq!(in_domatic_number(&cycle(4)).unwrap().value, 2);
        assert_eq!(in_domatic_number(&complete(1)).unwrap().value, 1);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_max_partitions(&complete(3)).unwrap(), vec![VertexPartition::singletons(3)]);
        assert_eq!(enumerate_max_partitions(&cycle(4)).unwrap(), vec![VertexPartition::whole(4)]);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_oracle(&complete(4), Invariant::StrongInDomatic), Ok(Some(4)));
        assert_eq!(brute_force_oracle(&cycle(5), Invariant::StrongInDomatic), Ok(Some(1)));
        assert_eq!(brute_force_oracle(&complete(3), Invariant::Lambda), Ok(Some(2)));
        assert_eq!(brute_force_oracle(&complete(2), Invariant::Lambda), Ok(Some(1)));
        assert_eq!(brute_force_oracle(&cycle(4), Invariant::InDomatic), Ok(Some(2)));
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force_oracle(&path, Invariant::StrongInDomatic), Ok(None));
        assert!(matches!(
            brute_force_oracle(&cycle(7), Invariant::StrongInDomatic),
            Err(Error::SizeCap(_))
        ));
    }

    #[test]
    fn bounds_do_not_change_the_value() {
        for d in [complete(4), cycle(5), complete(2)] {
            let a = strong_in_domatic_number_with(&d, SolveOptions { use_bounds: true }).unwrap();
            let b = strong_in_domatic_number_with(&d, SolveOptions { use_bounds: false }).unwrap();
            assert_eq!(a.value, b.value);
        }
    }
}
