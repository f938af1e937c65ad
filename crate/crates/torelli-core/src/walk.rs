//! Closed walks in the dual ribbon graph.
//!
//! A walk is the cyclic sequence of sides through which a closed path leaves
//! successive triangles. Consecutive entries `x, y` satisfy
//! `tri(y) == tri(glued(x))`. A backtrack is `x` followed by `glued(x)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::surface::{next_side, slot, tri, CombSurface, Side};

/// Removes backtracks, including across the cyclic seam.
pub fn reduce_cyclic(s: &CombSurface, walk: &[Side]) -> Vec<Side> {
    let mut st: Vec<Side> = Vec::with_capacity(walk.len());
    for &x in walk {
        if let Some(&top) = st.last() {
            if s.glued(top) == x {
                st.pop();
                continue;
            }
        }
        st.push(x);
    }
    let (mut lo, mut hi) = (0usize, st.len());
    while hi - lo >= 2 && s.glued(st[hi - 1]) == st[lo] {
        lo += 1;
        hi -= 1;
    }
    st[lo..hi].to_vec()
}

/// Removes backtracks of an open path (no cyclic seam).
pub fn reduce_open(s: &CombSurface, walk: &[Side]) -> Vec<Side> {
    let mut st: Vec<Side> = Vec::with_capacity(walk.len());
    for &x in walk {
        if let Some(&top) = st.last() {
            if s.glued(top) == x {
                st.pop();
                continue;
            }
        }
        st.push(x);
    }
    st
}

/// The same closed walk traversed backwards.
pub fn reverse(s: &CombSurface, walk: &[Side]) -> Vec<Side> {
    walk.iter().rev().map(|&x| s.glued(x)).collect()
}

/// Number of crossings of each edge.
pub fn edge_counts(s: &CombSurface, walk: &[Side]) -> Vec<u32> {
    let mut w = vec![0; s.edge_count()];
    for &x in walk {
        w[s.edge_of(x) as usize] += 1;
    }
    w
}

/// Checks that consecutive exits are compatible (cyclically).
pub fn is_closed_walk(s: &CombSurface, walk: &[Side]) -> bool {
    let n = walk.len();
    (0..n).all(|k| tri(walk[(k + 1) % n]) == tri(s.glued(walk[k])))
}

/// Turn taken after arriving through `arrival` and leaving through `exit`:
/// `true` for a left turn.
#[inline]
pub fn turns_left(arrival: Side, exit: Side) -> bool {
    (slot(arrival) + 2) % 3 == slot(exit)
}

/// Boundary walks of a regular neighbourhood of the sub-ribbon-graph spanned by
/// `edges`. Each walk follows one boundary component.
pub fn subgraph_boundaries(s: &CombSurface, edges: &[u32]) -> Vec<Vec<Side>> {
    let mut in_sub = vec![false; s.edge_count()];
    for &e in edges {
        in_sub[e as usize] = true;
    }
    let n = 3 * s.triangle_count();
    let mut used = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n as Side {
        if used[start as usize] || !in_sub[s.edge_of(start) as usize] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut cur = start;
        loop {
            used[cur as usize] = true;
            cyc.push(cur);
            let a = s.glued(cur);
            let mut nx = next_side(a);
            while !in_sub[s.edge_of(nx) as usize] {
                nx = next_side(nx);
            }
            cur = nx;
            if cur == start {
                break;
            }
        }
        out.push(cyc);
    }
    out
}
