//! Checkable laws relating `d_s⁻` to other invariants and constructions.
//!
//! [`check_all`] evaluates every law on one digraph and returns a
//! [`LawReport`]. Each entry either holds, is violated (with the computed
//! quantities that show it), or is not applicable because the law's
//! hypotheses fail or a size cap is exceeded.
//!
//! The value of `d_s⁻(D)` used by the report is computed without the bound
//! pruning of [`upper_bound`], so the bound laws are tested rather than
//! assumed.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::critical::deletion_profile;
use crate::digraph::{Digraph, VertexSet};
use crate::domination::{
    in_dominating_vertices, is_strong_in_domatic_partition, is_strong_in_dominating,
    is_strong_out_domatic_partition, VertexPartition,
};
use crate::error::{Error, Result};
use crate::families::{complete_digraph, empty_digraph};
use crate::solver::{
    brute_force_oracle, enumerate_max_partitions, exists_partition_into_k, lambda_number,
    strong_in_domatic_number, strong_in_domatic_number_with, strong_out_domatic_number, Invariant,
    SolveOptions, ORACLE_MAX_ORDER,
};
use crate::transforms::{
    cartesian_product, composition, line_digraph, middle, root, subdivision, total, CompositionSpec,
};
use crate::undirected::{
    clique_domination_number, connected_domatic_number, is_planar, underlying_graph,
    vertex_connectivity, CliqueDomination,
};

/// The admissible upper bound on `d_s⁻(D)` used to cap the solver: the
/// minimum of `δ⁺ + 1`, `δ⁺` when no vertex is in-dominating, `κ(UG(D))`
/// when `D` is not semicomplete, and 4 when `UG(D)` is planar.
pub fn upper_bound(d: &Digraph) -> Result<usize> {
    if !d.is_strong()? {
        return Err(Error::NotStrong);
    }
    let delta = d.min_out_degree()?;
    let mut bound = delta + 1;
    if in_dominating_vertices(d).is_empty() {
        bound = bound.min(delta);
    }
    let ug = underlying_graph(d);
    if !d.is_semicomplete() {
        bound = bound.min(vertex_connectivity(&ug)?);
    }
    if is_planar(&ug) {
        bound = bound.min(4);
    }
    Ok(bound.max(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::NotApplicable => "not-applicable",
        })
    }
}

/// One evaluated law.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawEntry {
    pub id: &'static str,
    pub name: &'static str,
    /// The law in words.
    pub statement: &'static str,
    pub status: Status,
    /// Computed quantities, witnesses and the reason for non-applicability.
    pub details: BTreeMap<String, Value>,
}

/// The evaluated laws for one digraph, in fixed law order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub order: usize,
    pub arcs: Vec<(usize, usize)>,
    pub entries: Vec<LawEntry>,
}

impl LawReport {
    pub fn violations(&self) -> impl Iterator<Item = &LawEntry> {
        self.entries.iter().filter(|e| e.status == Status::Violated)
    }

    pub fn entry(&self, id: &str) -> Option<&LawEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "digraph: order {}, {} arcs", self.order, self.arcs.len())?;
        for e in &self.entries {
            write!(f, "{:<4} {:<24} {:<15} ", e.id, e.name, e.status)?;
            let details: Vec<String> = e
                .details
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}: {s}"),
                    other => format!("{k}={other}"),
                })
                .collect();
            writeln!(f, "{}", details.join("; "))?;
        }
        let violated = self.violations().count();
        write!(f, "violations: {violated}")
    }
}

/// Size caps and knobs for [`check_all_with`].
#[derive(Clone, Debug)]
pub struct LawConfig {
    /// Strong spanning subdigraphs sampled for the monotonicity law.
    pub spanning_samples: usize,
    pub seed: u64,
    /// Second factor for the product law; `K_2` when absent.
    pub second_factor: Option<Digraph>,
    /// Largest order on which `d_s⁻(D)` is computed.
    pub max_order: usize,
    /// Largest arc count for laws on the line digraph.
    pub max_arcs: usize,
    /// Largest order of a derived digraph (product, composition, S, R, Q, T).
    pub max_derived_order: usize,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig {
            spanning_samples: 20,
            seed: 0,
            second_factor: None,
            max_order: 8,
            max_arcs: 12,
            max_derived_order: 24,
        }
    }
}

struct Law {
    id: &'static str,
    name: &'static str,
    statement: &'static str,
}

const LAWS: [Law; 16] = [
    Law {
        id: "L1",
        name: "partition-existence",
        statement: "a digraph has a strong in-domatic partition if and only if it is strong",
    },
    Law {
        id: "L2",
        name: "union-closure",
        statement: "any union of blocks of a strong in-domatic partition is a strong in-dominating set",
    },
    Law {
        id: "L3",
        name: "connectivity-bound",
        statement: "a non-semicomplete strong digraph has d_s⁻(D) ≤ κ(UG(D))",
    },
    Law {
        id: "L4",
        name: "out-degree-bound",
        statement: "a strong digraph has d_s⁻(D) ≤ δ⁺(D) + 1",
    },
    Law {
        id: "L5",
        name: "no-in-dominating-bound",
        statement: "a strong digraph without in-dominating vertex has d_s⁻(D) ≤ δ⁺(D)",
    },
    Law {
        id: "L6",
        name: "out-degree-equality",
        statement: "if d_s⁻(D) = δ⁺(D) + 1 then every vertex of minimum out-degree is in-dominating, \
                    those vertices induce a complete digraph, and γ_cl(UG(D)) ≤ |N₀|",
    },
    Law {
        id: "L7",
        name: "spanning-monotonicity",
        statement: "every strong in-domatic partition of a strong spanning subdigraph H of D is one of D, \
                    so d_s⁻(H) ≤ d_s⁻(D)",
    },
    Law {
        id: "L8",
        name: "deletion-sandwich",
        statement: "if d_s⁻(D) ≥ 2 and D - a is strong then d_s⁻(D) - 1 ≤ d_s⁻(D - a) ≤ d_s⁻(D)",
    },
    Law {
        id: "L9",
        name: "connected-domatic-bound",
        statement: "d_s⁻(D) ≤ d_c(UG(D))",
    },
    Law {
        id: "L10",
        name: "planar-cap",
        statement: "a planar strong digraph has d_s⁻(D) ≤ 4, with equality exactly for the complete digraph of order 4",
    },
    Law {
        id: "L11",
        name: "planar-three-paths",
        statement: "if D is planar with d_s⁻(D) = 3, every block of every maximum partition induces a symmetric path",
    },
    Law {
        id: "L12",
        name: "product-composition",
        statement: "d_s⁻(D □ H) ≥ max(d_s⁻(D), d_s⁻(H)) for strong D, H, and d_s⁻(D[α]) ≥ min |V(D_v)| \
                    for nontrivial strong D",
    },
    Law {
        id: "L13",
        name: "line-identity",
        statement: "a strong digraph of order at least 3 has d_s⁻(L(D)) = Λ(D)",
    },
    Law {
        id: "L14",
        name: "subdivision-root",
        statement: "a strong digraph with an arc has d_s⁻(S(D)) = d_s⁻(R(D)) = 1",
    },
    Law {
        id: "L15",
        name: "middle-total",
        statement: "a strong digraph of order at least 3 has d_s⁻(L(D)) ≤ d_s⁻(Q(D)) and \
                    d_s⁻(L(D)) + 1 ≤ d_s⁻(T(D))",
    },
    Law {
        id: "L16",
        name: "converse-duality",
        statement: "d_s⁻(D) equals the strong out-domatic number of the converse of D",
    },
];

/// Builder for one entry.
struct Entry {
    law: &'static Law,
    status: Status,
    details: BTreeMap<String, Value>,
}

impl Entry {
    fn new(law: &'static Law) -> Self {
        Entry { law, status: Status::Holds, details: BTreeMap::new() }
    }

    fn set(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// Marks the entry violated unless `ok`.
    fn require(mut self, ok: bool) -> Self {
        if !ok {
            self.status = Status::Violated;
        }
        self
    }

    fn not_applicable(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::NotApplicable;
        self.set("reason", reason.into())
    }

    fn finish(self) -> LawEntry {
        LawEntry {
            id: self.law.id,
            name: self.law.name,
            statement: self.law.statement,
            status: self.status,
            details: self.details,
        }
    }
}

fn blocks_json(p: &VertexPartition) -> Value {
    json!(p.blocks().iter().map(|b| b.to_vec()).collect::<Vec<_>>())
}

fn valid(d: &Digraph, p: &VertexPartition) -> Result<bool> {
    Ok(is_strong_in_domatic_partition(d, p)?.is_valid())
}

/// Evaluates every law on `d` with the default configuration.
pub fn check_all(d: &Digraph) -> Result<LawReport> {
    check_all_with(d, &LawConfig::default())
}

pub fn check_all_with(d: &Digraph, config: &LawConfig) -> Result<LawReport> {
    if d.order() == 0 {
        return Err(Error::EmptyDigraph);
    }
    let report = |entries| LawReport { order: d.order(), arcs: d.arcs(), entries };
    if !d.is_strong()? {
        return Ok(report(vec![existence_non_strong(d)?]));
    }
    let laws = &LAWS;
    if d.order() > config.max_order {
        let reason = format!("order {} exceeds the cap of {}", d.order(), config.max_order);
        return Ok(report(laws.iter().map(|l| Entry::new(l).not_applicable(reason.clone()).finish()).collect()));
    }

    let solved = strong_in_domatic_number_with(d, SolveOptions { use_bounds: false })?;
    let ctx = Context { d, value: solved.value, witness: solved.witness, config };
    let entries = vec![
        ctx.existence()?,
        ctx.union_closure()?,
        ctx.connectivity_bound()?,
        ctx.out_degree_bound()?,
        ctx.no_in_dominating_bound()?,
        ctx.out_degree_equality()?,
        ctx.spanning_monotonicity()?,
        ctx.deletion_sandwich()?,
        ctx.connected_domatic_bound()?,
        ctx.planar_cap()?,
        ctx.planar_three_paths()?,
        ctx.product_composition()?,
        ctx.line_identity()?,
        ctx.subdivision_root()?,
        ctx.middle_total()?,
        ctx.converse_duality()?,
    ];
    Ok(report(entries.into_iter().map(Entry::finish).collect()))
}

/// L1 on a non-strong digraph: no partition qualifies.
fn existence_non_strong(d: &Digraph) -> Result<LawEntry> {
    let mut e = Entry::new(&LAWS[0]).set("strong", false);
    // Every valid partition merges into the valid partition {V}, so {V}
    // failing rules out all of them.
    let whole_valid = valid(d, &VertexPartition::whole(d.order()))?;
    e = e.set("whole_vertex_set_valid", whole_valid).require(!whole_valid);
    if d.order() <= ORACLE_MAX_ORDER {
        let oracle = brute_force_oracle(d, Invariant::StrongInDomatic)?;
        e = e.set("exhaustive_partitions_found", oracle.is_some()).require(oracle.is_none());
    }
    Ok(e.finish())
}

struct Context<'a> {
    d: &'a Digraph,
    value: usize,
    witness: VertexPartition,
    config: &'a LawConfig,
}

impl Context<'_> {
    fn delta(&self) -> usize {
        self.d.min_out_degree().expect("nonempty")
    }

    fn existence(&self) -> Result<Entry> {
        let ok = valid(self.d, &self.witness)?;
        Ok(Entry::new(&LAWS[0])
            .set("strong", true)
            .set("d_s", self.value)
            .set("witness", blocks_json(&self.witness))
            .require(ok && self.witness.block_count() == self.value))
    }

    fn union_closure(&self) -> Result<Entry> {
        let blocks = self.witness.blocks();
        let mut checked = 0u64;
        let mut failure = None;
        for mask in 1u64..1 << blocks.len() {
            let union = (0..blocks.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(VertexSet::empty(), |acc, i| acc.union(blocks[i]));
            checked += 1;
            if !is_strong_in_dominating(self.d, union)? {
                failure = Some(union.to_vec());
                break;
            }
        }
        let mut e = Entry::new(&LAWS[1]).set("unions_checked", checked);
        if let Some(f) = failure {
            e = e.set("failing_union", json!(f));
        }
        Ok(e.require(checked == (1u64 << blocks.len()) - 1))
    }

    fn connectivity_bound(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[2]);
        if self.d.is_semicomplete() {
            return Ok(e.not_applicable("the digraph is semicomplete"));
        }
        let kappa = vertex_connectivity(&underlying_graph(self.d))?;
        Ok(e.set("d_s", self.value).set("kappa", kappa).require(self.value <= kappa))
    }

    fn out_degree_bound(&self) -> Result<Entry> {
        let delta = self.delta();
        Ok(Entry::new(&LAWS[3])
            .set("d_s", self.value)
            .set("min_out_degree", delta)
            .require(self.value <= delta + 1))
    }

    fn no_in_dominating_bound(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[4]);
        let dominators = in_dominating_vertices(self.d);
        if !dominators.is_empty() {
            return Ok(e.not_applicable(format!("vertex {} is in-dominating", dominators.first().unwrap())));
        }
        let delta = self.delta();
        Ok(e.set("d_s", self.value).set("min_out_degree", delta).require(self.value <= delta))
    }

    fn out_degree_equality(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[5]);
        let delta = self.delta();
        if self.value != delta + 1 {
            return Ok(e.not_applicable(format!("d_s⁻ = {} differs from δ⁺ + 1 = {}", self.value, delta + 1)));
        }
        let n0: VertexSet = (0..self.d.order())
            .filter(|&v| self.d.out_degree(v).unwrap() == delta)
            .collect();
        let dominators = in_dominating_vertices(self.d);
        let all_dominating = n0.is_subset(dominators);
        let (sub, _) = self.d.induced_subdigraph(n0)?;
        let complete = sub.is_complete();
        let gamma = match clique_domination_number(&underlying_graph(self.d))? {
            CliqueDomination::Number(g) => Some(g),
            CliqueDomination::NoDominatingClique => None,
        };
        let gamma_ok = gamma.is_some_and(|g| g <= n0.len());
        Ok(e.set("min_out_degree_vertices", json!(n0.to_vec()))
            .set("all_in_dominating", all_dominating)
            .set("induce_complete", complete)
            .set("gamma_cl", json!(gamma))
            .require(all_dominating && complete && gamma_ok))
    }

    fn spanning_monotonicity(&self) -> Result<Entry> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        let mut arcs = self.d.arcs();
        let mut worst = None;
        let mut max_value = 0;
        for _ in 0..self.config.spanning_samples {
            // Delete a random prefix of a random arc order, skipping
            // deletions that would break strongness.
            arcs.shuffle(&mut rng);
            let target = rng.gen_range(0..=arcs.len());
            let mut h = self.d.clone();
            for &(u, v) in &arcs[..target] {
                let next = h.without_arc(u, v)?;
                if next.is_strong()? {
                    h = next;
                }
            }
            let sub = strong_in_domatic_number(&h)?;
            max_value = max_value.max(sub.value);
            if sub.value > self.value || !valid(self.d, &sub.witness)? {
                worst = Some((h.arcs(), sub.value));
                break;
            }
        }
        let mut e = Entry::new(&LAWS[6])
            .set("samples", self.config.spanning_samples)
            .set("d_s", self.value)
            .set("max_subdigraph_value", max_value);
        if let Some((arcs, value)) = worst {
            e = e.set("failing_subdigraph", json!(arcs)).set("failing_value", value).require(false);
        }
        Ok(e)
    }

    fn deletion_sandwich(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[7]);
        if self.value < 2 {
            return Ok(e.not_applicable("d_s⁻ < 2"));
        }
        let profile = deletion_profile(self.d)?;
        let mut strong_deletions = 0;
        let mut failure = None;
        for r in &profile.records {
            if let Some(after) = r.value_after {
                strong_deletions += 1;
                if after + 1 < self.value || after > self.value {
                    failure.get_or_insert((r.arc, after));
                }
            }
        }
        let mut e = e.set("d_s", self.value).set("strong_deletions", strong_deletions);
        if let Some((arc, after)) = failure {
            e = e.set("failing_arc", json!(arc)).set("value_after", after).require(false);
        }
        Ok(e)
    }

    fn connected_domatic_bound(&self) -> Result<Entry> {
        let dc = connected_domatic_number(&underlying_graph(self.d))?.value;
        Ok(Entry::new(&LAWS[8]).set("d_s", self.value).set("d_c", dc).require(self.value <= dc))
    }

    fn planar_cap(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[9]);
        if !is_planar(&underlying_graph(self.d)) {
            return Ok(e.not_applicable("the underlying graph is not planar"));
        }
        let k4 = self.d.order() == 4 && self.d.is_complete();
        Ok(e.set("d_s", self.value)
            .set("complete_order_4", k4)
            .set("equals_4_iff_complete_order_4", (self.value == 4) == k4)
            .require(self.value <= 4 && (self.value == 4) == k4))
    }

    fn planar_three_paths(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[10]).set(
            "interpretation",
            "symmetric path: the underlying graph of the block is a path and every arc inside the block is symmetric",
        );
        if !is_planar(&underlying_graph(self.d)) {
            return Ok(e.not_applicable("the underlying graph is not planar"));
        }
        if self.value != 3 {
            return Ok(e.not_applicable(format!("d_s⁻ = {} is not 3", self.value)));
        }
        let partitions = enumerate_max_partitions(self.d)?;
        for p in &partitions {
            for block in p.blocks() {
                if !is_symmetric_path(self.d, block)? {
                    return Ok(e
                        .set("failing_partition", blocks_json(p))
                        .set("failing_block", json!(block.to_vec()))
                        .require(false));
                }
            }
        }
        Ok(e.set("partitions_checked", partitions.len()))
    }

    fn product_composition(&self) -> Result<Entry> {
        let mut e = Entry::new(&LAWS[11]);
        let h = match &self.config.second_factor {
            Some(h) => h.clone(),
            None => complete_digraph(2)?,
        };
        let cap = self.config.max_derived_order;
        let mut evaluated = false;
        if !h.is_strong()? {
            e = e.set("product", "skipped: the second factor is not strong");
        } else if self.d.order() * h.order() > cap {
            e = e.set("product", format!("skipped: product order exceeds {cap}"));
        } else if h.order() > self.config.max_order {
            e = e.set("product", "skipped: the second factor exceeds the order cap");
        } else {
            let hv = strong_in_domatic_number(&h)?.value;
            let target = self.value.max(hv);
            let product = cartesian_product(self.d, &h)?.digraph;
            let reached = exists_partition_into_k(&product, target)?.is_some();
            e = e
                .set("d_s_second_factor", hv)
                .set("product_reaches", target)
                .require(reached);
            evaluated = true;
        }
        // Composition with empty parts of order 2.
        if self.d.order() < 2 {
            e = e.set("composition", "skipped: trivial host");
        } else if 2 * self.d.order() > cap {
            e = e.set("composition", format!("skipped: composition order exceeds {cap}"));
        } else {
            let spec = CompositionSpec::new(self.d.clone(), vec![empty_digraph(2)?; self.d.order()])?;
            let composed = composition(&spec)?.digraph;
            let reached = exists_partition_into_k(&composed, 2)?.is_some();
            e = e.set("composition_reaches", 2).require(reached);
            evaluated = true;
        }
        Ok(if evaluated { e } else { e.not_applicable("no construction within the caps") })
    }

    fn line_identity(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[12]);
        let arcs = self.d.arc_count();
        if arcs == 0 {
            return Ok(e.not_applicable("the digraph has no arcs"));
        }
        if arcs > self.config.max_arcs {
            return Ok(e.not_applicable(format!("{arcs} arcs exceed the cap of {}", self.config.max_arcs)));
        }
        let line = strong_in_domatic_number(&line_digraph(self.d)?.digraph)?.value;
        let lambda = lambda_number(self.d)?.value;
        let e = e.set("d_s_line", line).set("lambda", lambda);
        if self.d.order() < 3 {
            let note = format!(
                "order below 3: d_s⁻(L(D)) = {line}, Λ(D) = {lambda}; the identity needs order at least 3"
            );
            return Ok(e.not_applicable("order below 3").set("note", note));
        }
        Ok(e.require(line == lambda))
    }

    fn subdivision_root(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[13]);
        let arcs = self.d.arc_count();
        if arcs == 0 {
            return Ok(e.not_applicable("the digraph has no arcs"));
        }
        if self.d.order() + arcs > self.config.max_derived_order {
            return Ok(e.not_applicable(format!(
                "derived order {} exceeds the cap of {}",
                self.d.order() + arcs,
                self.config.max_derived_order
            )));
        }
        let s = subdivision(self.d)?.digraph;
        let r = root(self.d)?.digraph;
        let s_two = exists_partition_into_k(&s, 2)?.is_some();
        let r_two = exists_partition_into_k(&r, 2)?.is_some();
        Ok(e.set("subdivision_has_2_blocks", s_two).set("root_has_2_blocks", r_two).require(!s_two && !r_two))
    }

    fn middle_total(&self) -> Result<Entry> {
        let e = Entry::new(&LAWS[14]);
        let (n, arcs) = (self.d.order(), self.d.arc_count());
        if n < 2 {
            return Ok(e.not_applicable("the digraph is trivial"));
        }
        if arcs > self.config.max_arcs || n + arcs > self.config.max_derived_order {
            return Ok(e.not_applicable(format!("{arcs} arcs exceed the caps")));
        }
        let line = strong_in_domatic_number(&line_digraph(self.d)?.digraph)?.value;
        let q = middle(self.d)?.digraph;
        let q_ok = exists_partition_into_k(&q, line)?.is_some();
        let e = e.set("d_s_line", line).set("middle_reaches", line);
        if n < 3 {
            // The only strong digraph of order 2 is K_2, where L(K_2) = K_2
            // has value 2 but Q(K_2) has no in-dominating vertex and
            // minimum out-degree 1.
            let q_value = strong_in_domatic_number(&q)?.value;
            let note = format!(
                "order 2: d_s⁻(L(D)) = {line}, d_s⁻(Q(D)) = {q_value}; the middle inequality needs order at least 3"
            );
            return Ok(e.set("d_s_middle", q_value).not_applicable("order below 3").set("note", note));
        }
        let t = total(self.d)?.digraph;
        let t_ok = exists_partition_into_k(&t, line + 1)?.is_some();
        Ok(e.set("total_reaches", line + 1).require(q_ok && t_ok))
    }

    fn converse_duality(&self) -> Result<Entry> {
        let converse = self.d.converse();
        let dual = strong_out_domatic_number(&converse)?;
        // The in-domatic witness of D must be out-domatic in the converse,
        // and the out-domatic witness of the converse in-domatic in D.
        let forward = is_strong_out_domatic_partition(&converse, &self.witness)?.is_valid();
        let backward = valid(self.d, &dual.witness)?;
        let mut e = Entry::new(&LAWS[15])
            .set("d_s", self.value)
            .set("d_s_plus_converse", dual.value)
            .require(dual.value == self.value && forward && backward);
        if self.d.order() <= ORACLE_MAX_ORDER {
            let oracle = brute_force_oracle(&converse, Invariant::StrongOutDomatic)?;
            e = e.set("exhaustive_d_s_plus_converse", json!(oracle)).require(oracle == Some(self.value));
        }
        Ok(e)
    }
}

/// Whether `block` induces a symmetric path: every induced arc is
/// symmetric and the underlying graph is a path.
pub fn is_symmetric_path(d: &Digraph, block: VertexSet) -> Result<bool> {
    let (sub, _) = d.induced_subdigraph(block)?;
    for (u, v) in sub.arcs() {
        if !sub.is_symmetric_arc(u, v)? {
            return Ok(false);
        }
    }
    let ug = underlying_graph(&sub);
    let n = ug.order();
    let degrees_ok = (0..n).all(|v| ug.neighbors(v).len() <= 2);
    Ok(ug.is_connected() && ug.edge_count() + 1 == n && degrees_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{directed_cycle, pair_critical_family};

    fn statuses(r: &LawReport) -> Vec<(&'static str, Status)> {
        r.entries.iter().map(|e| (e.id, e.status)).collect()
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(upper_bound(&directed_cycle(5).unwrap()), Ok(1));
        assert_eq!(upper_bound(&complete_digraph(4).unwrap()), Ok(4));
        let pc = pair_critical_family(3).unwrap().digraph;
        assert!(upper_bound(&pc).unwrap() >= 3);
        assert_eq!(upper_bound(&Digraph::new(2, [(0, 1)]).unwrap()), Err(Error::NotStrong));
    }

    #[test]
    fn k4_report() {
        let r = check_all(&complete_digraph(4).unwrap()).unwrap();
        assert_eq!(r.violations().count(), 0, "{r}");
        let l10 = r.entry("L10").unwrap();
        assert_eq!(l10.status, Status::Holds);
        assert_eq!(l10.details["equals_4_iff_complete_order_4"], json!(true));
        assert_eq!(r.entries.len(), 16);
    }

    #[test]
    fn c5_report() {
        let r = check_all(&directed_cycle(5).unwrap()).unwrap();
        assert_eq!(r.violations().count(), 0, "{r}");
        for id in ["L1", "L2", "L3", "L4", "L5", "L9", "L13", "L14", "L16"] {
            assert_eq!(r.entry(id).unwrap().status, Status::Holds, "{id}");
        }
        assert_eq!(r.entry("L8").unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn k2_line_side_note() {
        let r = check_all(&complete_digraph(2).unwrap()).unwrap();
        let l13 = r.entry("L13").unwrap();
        assert_eq!(l13.status, Status::NotApplicable);
        assert_eq!(l13.details["d_s_line"], json!(2));
        assert_eq!(l13.details["lambda"], json!(1));
        let l15 = r.entry("L15").unwrap();
        assert_eq!(l15.status, Status::NotApplicable);
        assert_eq!(l15.details["d_s_middle"], json!(1));
        assert_eq!(r.violations().count(), 0, "{r}");
    }

    #[test]
    fn non_strong_gives_single_entry() {
        let r = check_all(&Digraph::new(3, [(0, 1), (1, 2)]).unwrap()).unwrap();
        assert_eq!(statuses(&r), vec![("L1", Status::Holds)]);
    }

    #[test]
    fn symmetric_paths() {
        let p3 = Digraph::new(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        assert!(is_symmetric_path(&p3, VertexSet::full(3)).unwrap());
        assert!(!is_symmetric_path(&complete_digraph(3).unwrap(), VertexSet::full(3)).unwrap());
        assert!(!is_symmetric_path(&directed_cycle(3).unwrap(), VertexSet::full(3)).unwrap());
        assert!(is_symmetric_path(&directed_cycle(3).unwrap(), VertexSet::singleton(1)).unwrap());
    }

    #[test]
    fn json_has_ids_and_statuses() {
        let r = check_all(&directed_cycle(3).unwrap()).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["entries"][0]["id"], "L1");
        assert_eq!(v["entries"][7]["status"], "not-applicable");
    }
}
