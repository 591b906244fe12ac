//! Standard generators and extremal families with known strong in-domatic
//! numbers.
//!
//! Each family instance carries its claims (value, criticality and, when
//! known, a partition attaining the value) as data, so callers can compare
//! them against the solver generically.

use rand::Rng;
use serde::Serialize;

use crate::digraph::Digraph;
use crate::domination::VertexPartition;
use crate::error::{Error, Result};
use crate::transforms::{composition, composition_partition, CompositionSpec};

/// A generated digraph with the values it is known to have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub digraph: Digraph,
    pub canonical_partition: Option<VertexPartition>,
    pub claimed_value: usize,
    pub claimed_critical: bool,
}

impl FamilyInstance {
    pub fn claims(&self) -> Claims {
        Claims {
            order: self.digraph.order(),
            arcs: self.digraph.arc_count(),
            value: self.claimed_value,
            critical: self.claimed_critical,
        }
    }
}

/// The machine-readable summary written next to generated files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Claims {
    pub order: usize,
    pub arcs: usize,
    pub value: usize,
    pub critical: bool,
}

/// `K_n`: every ordered pair of distinct vertices is an arc.
pub fn complete_digraph(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidParameters("complete digraph needs n >= 1".into()));
    }
    Digraph::new(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))))
}

/// `C_n`: `i → i+1 mod n`. The cycle of order 2 is the symmetric pair.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParameters("directed cycle needs n >= 2".into()));
    }
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `n` vertices, no arcs.
pub fn empty_digraph(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidParameters("empty digraph needs n >= 1".into()));
    }
    Digraph::new(n, [])
}

/// `complete_digraph(n)` as a family: value `n`, critical unless `n = 2`
/// (deleting an arc of `K_2` destroys strongness). `n = 1` has no arcs, so
/// criticality holds vacuously.
pub fn complete_family(n: usize) -> Result<FamilyInstance> {
    Ok(FamilyInstance {
        digraph: complete_digraph(n)?,
        canonical_partition: Some(VertexPartition::singletons(n)),
        claimed_value: n,
        claimed_critical: n != 2,
    })
}

/// `directed_cycle(n)` as a family: the only strong in-dominating sets of a
/// cycle of order at least 3 contain every vertex.
pub fn cycle_family(n: usize) -> Result<FamilyInstance> {
    let digraph = directed_cycle(n)?;
    let value = if n == 2 { 2 } else { 1 };
    let canonical_partition = Some(if n == 2 {
        VertexPartition::singletons(2)
    } else {
        VertexPartition::whole(n)
    });
    Ok(FamilyInstance { digraph, canonical_partition, claimed_value: value, claimed_critical: false })
}

/// A critical digraph of order `2n` with value `n`.
///
/// Vertices `u_1..u_n` get ids `0..n` and `v_1..v_n` get ids `n..2n`. The
/// arcs are `u_i → u_j` and `v_i → v_j` for `i < j`, and `v_i → u_j` and
/// `u_i → v_j` for `i ≥ j`. The pairs `{u_i, v_i}` form the unique maximum
/// partition.
pub fn pair_critical_family(n: usize) -> Result<FamilyInstance> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("pair-critical family needs n >= 3, got {n}")));
    }
    let u = |i: usize| i - 1;
    let v = |i: usize| n + i - 1;
    let mut arcs = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                arcs.push((u(i), u(j)));
                arcs.push((v(i), v(j)));
            } else {
                arcs.push((v(i), u(j)));
                arcs.push((u(i), v(j)));
            }
        }
    }
    let blocks: Vec<[usize; 2]> = (1..=n).map(|i| [u(i), v(i)]).collect();
    Ok(FamilyInstance {
        digraph: Digraph::new(2 * n, arcs)?,
        canonical_partition: Some(VertexPartition::from_blocks(2 * n, &blocks)?),
        claimed_value: n,
        claimed_critical: true,
    })
}

/// A digraph of order `p` with value `m`, for `p >= 3` and `1 <= m <= p/2`.
///
/// With `p = mq + r`, `0 <= r < m`, this is the cycle of order `q` composed
/// with empty digraphs: `q - 1` parts of order `m` and one of order `m + r`.
pub fn order_value_family(p: usize, m: usize) -> Result<FamilyInstance> {
    if p < 3 || m == 0 || m > p / 2 {
        return Err(Error::InvalidParameters(format!(
            "order-value family needs p >= 3 and 0 < m <= p/2, got p = {p}, m = {m}"
        )));
    }
    let (q, r) = (p / m, p % m);
    let mut parts = vec![empty_digraph(m)?; q - 1];
    parts.push(empty_digraph(m + r)?);
    composed_family(directed_cycle(q)?, parts, m, false)
}

/// A critical digraph of order `p` with value `n`, for `n >= 2` dividing
/// `p`: `K_p` when `p = n`, otherwise the cycle of order `p/n` composed with
/// empty digraphs of order `n`.
///
/// `(p, n) = (2, 2)` is rejected: its construction is `K_2`, which is not
/// critical.
pub fn critical_composition_family(p: usize, n: usize) -> Result<FamilyInstance> {
    if n < 2 || p < n || !p.is_multiple_of(n) {
        return Err(Error::InvalidParameters(format!(
            "critical-composition family needs n >= 2 dividing p, got p = {p}, n = {n}"
        )));
    }
    if p == 2 {
        return Err(Error::InvalidParameters(
            "p = n = 2 gives the complete digraph of order 2, which is not critical".into(),
        ));
    }
    if p == n {
        return complete_family(p);
    }
    let t = p / n;
    composed_family(directed_cycle(t)?, vec![empty_digraph(n)?; t], n, true)
}

fn composed_family(
    host: Digraph,
    parts: Vec<Digraph>,
    value: usize,
    critical: bool,
) -> Result<FamilyInstance> {
    let spec = CompositionSpec::new(host, parts)?;
    Ok(FamilyInstance {
        digraph: composition(&spec)?.digraph,
        canonical_partition: Some(composition_partition(&spec)?),
        claimed_value: value,
        claimed_critical: critical,
    })
}

/// A random strong digraph on `0..n`. Each arc is drawn independently with
/// probability `p`, and the draw is repeated until the result is strong.
pub fn random_strong_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<Digraph> {
    if n == 0 || !(0.0..=1.0).contains(&p) || (n > 1 && p == 0.0) {
        return Err(Error::InvalidParameters(format!("cannot sample a strong digraph with n = {n}, p = {p}")));
    }
    loop {
        let arcs: Vec<_> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && rng.gen_bool(p))
            .collect();
        let d = Digraph::new(n, arcs)?;
        if d.is_strong()? {
            return Ok(d);
        }
    }
}

/// Every labeled digraph on `0..n`, `2^(n(n-1))` of them, in order of the
/// arc bitmask over the sorted list of possible arcs.
pub fn labeled_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n == 0 || n > 5 {
        return Err(Error::SizeCap(format!("labeled enumeration supports 1 <= n <= 5, got {n}")));
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let arcs = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a);
        Digraph::new(n, arcs).expect("arcs are distinct and in range")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{in_dominating_vertices, is_strong_in_domatic_partition};
    use crate::solver::strong_in_domatic_number;

    #[test]
    fn generator_examples() {
        assert_eq!(complete_digraph(3).unwrap().arc_count(), 6);
        assert_eq!(directed_cycle(4).unwrap().arc_count(), 4);
        assert_eq!(directed_cycle(2).unwrap().arc_count(), 2);
        assert_eq!(empty_digraph(2).unwrap().arc_count(), 0);
        assert!(complete_digraph(0).is_err() && directed_cycle(1).is_err() && empty_digraph(0).is_err());
    }

    #[test]
    fn pair_critical_shape() {
        let f = pair_critical_family(3).unwrap();
        assert_eq!((f.digraph.order(), f.digraph.arc_count()), (6, 18));
        assert!(f.digraph.has_arc(0, 1) && !f.digraph.has_arc(1, 0));
        assert_eq!(f.claimed_value, 3);
        assert!(pair_critical_family(2).is_err());
    }

    #[test]
    fn order_value_shape() {
        let f = order_value_family(7, 3).unwrap();
        assert_eq!(f.digraph.order(), 7);
        assert_eq!(f.canonical_partition.as_ref().unwrap().block_count(), 3);
        let f = order_value_family(6, 2).unwrap();
        assert_eq!(f.digraph.order(), 6);
        assert!(order_value_family(6, 4).is_err());
        assert!(order_value_family(2, 1).is_err());
    }

    #[test]
    fn critical_composition_shape() {
        let f = critical_composition_family(6, 2).unwrap();
        assert_eq!((f.digraph.order(), f.digraph.arc_count()), (6, 12));
        assert_eq!(critical_composition_family(4, 4).unwrap().digraph, complete_digraph(4).unwrap());
        assert!(critical_composition_family(7, 2).is_err());
        assert!(critical_composition_family(2, 2).is_err());
    }

    #[test]
    fn claims_hold_at_small_scale() {
        let instances = [
            complete_family(3).unwrap(),
            cycle_family(2).unwrap(),
            cycle_family(5).unwrap(),
            pair_critical_family(3).unwrap(),
            order_value_family(6, 2).unwrap(),
            order_value_family(7, 3).unwrap(),
            critical_composition_family(6, 3).unwrap(),
        ];
        for f in instances {
            let p = f.canonical_partition.as_ref().unwrap();
            assert!(is_strong_in_domatic_partition(&f.digraph, p).unwrap().is_valid());
            assert_eq!(p.block_count(), f.claimed_value);
            assert_eq!(strong_in_domatic_number(&f.digraph).unwrap().value, f.claimed_value);
        }
    }

    #[test]
    fn order_value_has_no_in_dominating_vertex() {
        for (p, m) in [(6, 2), (7, 3), (9, 4), (6, 3), (5, 2)] {
            let f = order_value_family(p, m).unwrap();
            assert!(in_dominating_vertices(&f.digraph).is_empty(), "p={p} m={m}");
        }
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_digraphs(3).unwrap().count(), 64);
        let strong = labeled_digraphs(3).unwrap().filter(|d| d.is_strong().unwrap()).count();
        assert_eq!(strong, 18);
        assert_eq!(labeled_digraphs(1).unwrap().count(), 1);
        assert!(labeled_digraphs(6).is_err());
    }

    #[test]
    fn random_strong_is_strong() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            assert!(random_strong_digraph(&mut rng, n, 0.4).unwrap().is_strong().unwrap());
        }
    }
}
