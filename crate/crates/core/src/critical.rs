//! Strong in-domatic criticality under single-arc deletion.
//!
//! `D` is critical when every `D - a` is strong and has `d_s⁻(D - a) =
//! d_s⁻(D) - 1`. Among digraphs where every deletion stays strong and
//! `d_s⁻ >= 2`, this is equivalent to a structural condition on the maximum
//! partitions, checked by [`characterization_holds`].

use serde::Serialize;

use crate::digraph::{Arc, Digraph, VertexSet};
use crate::domination::VertexPartition;
use crate::error::{Error, Result};
use crate::solver::{enumerate_max_partitions, strong_in_domatic_number};

/// The effect of deleting one arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionRecord {
    pub arc: Arc,
    pub still_strong: bool,
    /// `d_s⁻(D - a)`, present iff `D - a` is strong.
    pub value_after: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionProfile {
    pub value: usize,
    /// One record per arc, arcs in lexicographic order.
    pub records: Vec<DeletionRecord>,
}

impl DeletionProfile {
    /// Every deletion keeps the digraph strong.
    pub fn all_strong(&self) -> bool {
        self.records.iter().all(|r| r.still_strong)
    }

    /// The first record that breaks criticality, if any.
    pub fn first_witness(&self) -> Option<&DeletionRecord> {
        self.records
            .iter()
            .find(|r| r.value_after != Some(self.value.wrapping_sub(1)))
    }

    pub fn is_critical(&self) -> bool {
        self.first_witness().is_none()
    }
}

fn require_strong(d: &Digraph) -> Result<()> {
    if d.is_strong()? {
        Ok(())
    } else {
        Err(Error::NotStrong)
    }
}

/// Deletes each arc in turn and records strongness and the new value.
pub fn deletion_profile(d: &Digraph) -> Result<DeletionProfile> {
    require_strong(d)?;
    let value = strong_in_domatic_number(d)?.value;
    let records = d
        .arcs()
        .into_iter()
        .map(|(u, v)| {
            let h = d.without_arc(u, v)?;
            let still_strong = h.is_strong()?;
            let value_after = if still_strong { Some(strong_in_domatic_number(&h)?.value) } else { None };
            Ok(DeletionRecord { arc: (u, v), still_strong, value_after })
        })
        .collect::<Result<_>>()?;
    Ok(DeletionProfile { value, records })
}

/// Whether `d` is strong in-domatic critical. A digraph with a deletion that
/// breaks strongness is not critical.
pub fn is_strong_in_domatic_critical(d: &Digraph) -> Result<bool> {
    Ok(deletion_profile(d)?.is_critical())
}

/// Why a partition fails the structural condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConditionFailure {
    /// Deleting `arc` from the block's induced subdigraph leaves it strong.
    RedundantArc { block: usize, arc: Arc },
    /// `vertex` outside the block has `count` out-neighbors in it, not one.
    OutNeighborCount { block: usize, vertex: usize, count: usize },
}

impl std::fmt::Display for ConditionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            ConditionFailure::RedundantArc { block, arc: (u, v) } => {
                write!(f, "block {block} stays strong without arc ({u},{v})")
            }
            ConditionFailure::OutNeighborCount { block, vertex, count } => {
                write!(f, "vertex {vertex} has {count} out-neighbors in block {block}")
            }
        }
    }
}

/// Checks one partition: each block loses strongness under the deletion of
/// any of its internal arcs (vacuous for arcless blocks), and each vertex
/// outside a block has exactly one out-neighbor in it.
pub fn partition_condition(d: &Digraph, p: &VertexPartition) -> Result<Option<ConditionFailure>> {
    for (i, block) in p.blocks().into_iter().enumerate() {
        let (sub, map) = d.induced_subdigraph(block)?;
        for (a, b) in sub.arcs() {
            if sub.without_arc(a, b)?.is_strong()? {
                return Ok(Some(ConditionFailure::RedundantArc { block: i, arc: (map[a], map[b]) }));
            }
        }
        for x in VertexSet::full(d.order()).difference(block) {
            let count = d.out_neighbors(x)?.intersection(block).len();
            if count != 1 {
                return Ok(Some(ConditionFailure::OutNeighborCount { block: i, vertex: x, count }));
            }
        }
    }
    Ok(None)
}

/// Outcome of [`characterization_holds`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Characterization {
    /// Every maximum partition satisfies the condition.
    Holds { partitions: usize },
    /// Some maximum partition fails it.
    Fails { partition: VertexPartition, failure: ConditionFailure },
    /// The hypotheses (`d_s⁻ >= 2`, every deletion strong) do not hold.
    NotApplicable { reason: String },
}

/// Evaluates the structural condition over every maximum strong in-domatic
/// partition of `d`.
pub fn characterization_holds(d: &Digraph) -> Result<Characterization> {
    require_strong(d)?;
    let value = strong_in_domatic_number(d)?.value;
    if value < 2 {
        return Ok(Characterization::NotApplicable { reason: format!("d_s⁻ = {value} < 2") });
    }
    for (u, v) in d.arcs() {
        if !d.without_arc(u, v)?.is_strong()? {
            return Ok(Characterization::NotApplicable {
                reason: format!("deleting arc ({u},{v}) destroys strongness"),
            });
        }
    }
    let partitions = enumerate_max_partitions(d)?;
    for p in &partitions {
        if let Some(failure) = partition_condition(d, p)? {
            return Ok(Characterization::Fails { partition: p.clone(), failure });
        }
    }
    Ok(Characterization::Holds { partitions: partitions.len() })
}
