//! Backtracking partition search shared by the vertex and arc solvers.
//!
//! Elements are assigned in a fixed order to block indices with symmetry
//! breaking: an element may open block `j` only when blocks `0..j` are
//! already open. After each assignment the partial state is tested against
//! necessary conditions:
//!
//! * domination counting: an assigned vertex needs a distinct unassigned
//!   out-neighbor for every block that it does not already reach;
//! * forced placement: an unassigned vertex that cannot be dominated by two
//!   different blocks is infeasible;
//! * strongness: the current members of a block must be mutually reachable
//!   inside the block's members plus the unassigned elements.

use crate::digraph::{full_mask, Arc, Bits};

fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in Bits::new(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Whether the members of `m` are mutually reachable within `within ⊇ m`.
fn mutually_reachable(out: &[u64], inn: &[u64], m: u64, within: u64) -> bool {
    if m.count_ones() < 2 {
        return true;
    }
    let start = m.trailing_zeros() as usize;
    reach(out, start, within) & m == m && reach(inn, start, within) & m == m
}

/// Visiting order: start at a vertex of minimum out-degree, then breadth
/// first over out- and in-neighbors.
fn vertex_order(out: &[u64], inn: &[u64]) -> Vec<usize> {
    let n = out.len();
    let mut order = Vec::with_capacity(n);
    let mut seen = 0u64;
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| seen >> v & 1 == 0)
            .min_by_key(|&v| (out[v].count_ones(), v))
            .unwrap();
        seen |= 1 << start;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in Bits::new(out[v] & !seen).chain(Bits::new(inn[v] & !seen)) {
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    order.push(w);
                }
            }
        }
    }
    order
}

/// Search for partitions of a digraph's vertices into exactly `k` blocks,
/// each in-dominating and (optionally) strong.
pub(crate) struct VertexSearch<'a> {
    out: &'a [u64],
    inn: &'a [u64],
    order: Vec<usize>,
    k: usize,
    require_strong: bool,
    block_of: Vec<usize>,
    members: Vec<u64>,
    unassigned: u64,
    opened: usize,
    pub nodes: u64,
}

impl<'a> VertexSearch<'a> {
    pub fn new(out: &'a [u64], inn: &'a [u64], k: usize, require_strong: bool) -> Self {
        let n = out.len();
        VertexSearch {
            out,
            inn,
            order: vertex_order(out, inn),
            k,
            require_strong,
            block_of: vec![usize::MAX; n],
            members: vec![0; k],
            unassigned: full_mask(n),
            opened: 0,
            nodes: 0,
        }
    }

    /// Runs the search, calling `visit` with each complete assignment.
    /// `visit` returns `true` to stop.
    pub fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.out.len();
        if self.k == 0 || self.k > n {
            return false;
        }
        self.descend(0, visit)
    }

    fn descend(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.out.len();
        if depth == n {
            debug_assert_eq!(self.opened, self.k);
            return visit(&self.block_of);
        }
        self.nodes += 1;
        let v = self.order[depth];
        let remaining = n - depth - 1;
        let top = self.opened.min(self.k - 1);
        for j in 0..=top {
            let opens = j == self.opened;
            let opened_after = self.opened + usize::from(opens);
            if opened_after + remaining < self.k {
                continue;
            }
            self.block_of[v] = j;
            self.members[j] |= 1 << v;
            self.unassigned &= !(1 << v);
            self.opened = opened_after;
            let stop = self.feasible() && self.descend(depth + 1, visit);
            self.opened -= usize::from(opens);
            self.unassigned |= 1 << v;
            self.members[j] &= !(1 << v);
            self.block_of[v] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }

    fn feasible(&self) -> bool {
        let n = self.out.len();
        let u = self.unassigned;
        let unopened = self.k - self.opened;
        let members = &self.members[..self.opened];

        for x in Bits::new(full_mask(n) & !u) {
            let own = self.block_of[x];
            let reach_out = self.out[x];
            let mut missing = unopened;
            for (j, &m) in members.iter().enumerate() {
                if j != own && reach_out & m == 0 {
                    missing += 1;
                }
            }
            if ((reach_out & u).count_ones() as usize) < missing {
                return false;
            }
            if self.require_strong && members[own] != 1 << x {
                let pool = members[own] | u;
                if reach_out & pool == 0 || self.inn[x] & pool == 0 {
                    return false;
                }
            }
        }

        for y in Bits::new(u) {
            let pool = u & !(1 << y);
            let forced = members.iter().filter(|&&m| self.out[y] & (m | pool) == 0).count();
            if forced >= 2 {
                return false;
            }
        }

        if self.require_strong {
            for &m in members {
                if !mutually_reachable(self.out, self.inn, m, m | u) {
                    return false;
                }
            }
        }
        true
    }
}

/// Search for partitions of a digraph's arcs into exactly `k` strong covers.
pub(crate) struct ArcSearch {
    order: usize,
    arcs: Vec<Arc>,
    out_arcs: Vec<u64>,
    in_arcs: Vec<u64>,
    k: usize,
    block_of: Vec<usize>,
    members: Vec<u64>,
    unassigned: u64,
    opened: usize,
    pub nodes: u64,
}

impl ArcSearch {
    /// `arcs` must be distinct, loopless and number at most 64.
    pub fn new(order: usize, arcs: Vec<Arc>, k: usize) -> Self {
        let m = arcs.len();
        let mut out_arcs = vec![0u64; order];
        let mut in_arcs = vec![0u64; order];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            out_arcs[u] |= 1 << i;
            in_arcs[v] |= 1 << i;
        }
        ArcSearch {
            order,
            arcs,
            out_arcs,
            in_arcs,
            k,
            block_of: vec![usize::MAX; m],
            members: vec![0; k],
            unassigned: full_mask(m),
            opened: 0,
            nodes: 0,
        }
    }

    pub fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.k == 0 || self.k > self.arcs.len() {
            return false;
        }
        self.descend(0, visit)
    }

    fn descend(&mut self, i: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let m = self.arcs.len();
        if i == m {
            return self.leaf_ok() && visit(&self.block_of);
        }
        self.nodes += 1;
        let remaining = m - i - 1;
        let top = self.opened.min(self.k - 1);
        for j in 0..=top {
            let opens = j == self.opened;
            let opened_after = self.opened + usize::from(opens);
            if opened_after + remaining < self.k {
                continue;
            }
            self.block_of[i] = j;
            self.members[j] |= 1 << i;
            self.unassigned &= !(1 << i);
            self.opened = opened_after;
            let stop = self.feasible() && self.descend(i + 1, visit);
            self.opened -= usize::from(opens);
            self.unassigned |= 1 << i;
            self.members[j] &= !(1 << i);
            self.block_of[i] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }

    fn adjacency(&self, arc_mask: u64) -> (Vec<u64>, Vec<u64>) {
        let mut out = vec![0u64; self.order];
        let mut inn = vec![0u64; self.order];
        for i in Bits::new(arc_mask) {
            let (u, v) = self.arcs[i];
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
        }
        (out, inn)
    }

    fn spans_strongly(&self, arc_mask: u64) -> bool {
        let (out, inn) = self.adjacency(arc_mask);
        let all = full_mask(self.order);
        reach(&out, 0, all) == all && reach(&inn, 0, all) == all
    }

    fn feasible(&self) -> bool {
        let u = self.unassigned;
        let unopened = self.k - self.opened;
        let members = &self.members[..self.opened];
        for v in 0..self.order {
            for incident in [self.out_arcs[v], self.in_arcs[v]] {
                let missing =
                    unopened + members.iter().filter(|&&m| incident & m == 0).count();
                if ((incident & u).count_ones() as usize) < missing {
                    return false;
                }
            }
        }
        members.iter().all(|&m| self.spans_strongly(m | u))
    }

    fn leaf_ok(&self) -> bool {
        self.opened == self.k && self.members.iter().all(|&m| self.spans_strongly(m))
    }
}
