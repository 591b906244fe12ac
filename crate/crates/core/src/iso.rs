//! Brute-force isomorphism for small digraphs.

use crate::digraph::Digraph;

/// Whether an arc-preserving bijection between `d` and `h` exists.
///
/// Backtracking over vertex images with (out-degree, in-degree) pruning.
/// Intended for order up to about 8.
pub fn are_isomorphic(d: &Digraph, h: &Digraph) -> bool {
    find_isomorphism(d, h).is_some()
}

/// An isomorphism `f` with `f[v]` the image of `v`, if one exists.
pub fn find_isomorphism(d: &Digraph, h: &Digraph) -> Option<Vec<usize>> {
    let n = d.order();
    if n != h.order() || d.arc_count() != h.arc_count() {
        return None;
    }
    let sig = |g: &Digraph, v: usize| (g.out_masks()[v].count_ones(), g.in_masks()[v].count_ones());
    let mut ds: Vec<_> = (0..n).map(|v| sig(d, v)).collect();
    let mut hs: Vec<_> = (0..n).map(|v| sig(h, v)).collect();
    let (d_sig, h_sig) = (ds.clone(), hs.clone());
    ds.sort_unstable();
    hs.sort_unstable();
    if ds != hs {
        return None;
    }

    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(d, h, &d_sig, &h_sig, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn extend(
    d: &Digraph,
    h: &Digraph,
    d_sig: &[(u32, u32)],
    h_sig: &[(u32, u32)],
    v: usize,
    image: &mut [usize],
    used: &mut u64,
) -> bool {
    if v == d.order() {
        return true;
    }
    for w in 0..h.order() {
        if *used >> w & 1 == 1 || d_sig[v] != h_sig[w] {
            continue;
        }
        let consistent = (0..v).all(|u| {
            d.has_arc(u, v) == h.has_arc(image[u], w) && d.has_arc(v, u) == h.has_arc(w, image[u])
        });
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        if extend(d, h, d_sig, h_sig, v + 1, image, used) {
            return true;
        }
        *used &= !(1 << w);
    }
    image[v] = usize::MAX;
    false
}
