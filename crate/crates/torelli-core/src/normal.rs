//! Normal arcs and tracing of normal multicurves.
//!
//! On side `i` of a triangle (running `v_i -> v_{i+1}`) the points are numbered
//! from `v_i`. The first `n_i` points belong to the arcs around corner `i`
//! (depth = position), the rest to arcs around corner `i + 1`
//! (depth = `x_i - 1 - position`). Gluing maps position `k` to `x - 1 - k`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::surface::{next_side, prev_side, side, slot, tri, CombSurface, Side};

/// Weight of a side.
#[inline]
pub fn sw(s: &CombSurface, w: &[u32], x: Side) -> u32 {
    w[s.edge_of(x) as usize]
}

/// Number of arcs around corner `(t, j)`, between sides `j - 1` and `j`.
#[inline]
pub fn corner_count(s: &CombSurface, w: &[u32], c: Side) -> u32 {
    let a = sw(s, w, prev_side(c));
    let b = sw(s, w, c);
    let o = sw(s, w, next_side(c));
    (a + b - o) / 2
}

/// Parity and triangle inequalities in every triangle.
pub fn check_matching(s: &CombSurface, w: &[u32]) -> Result<()> {
    if w.len() != s.edge_count() {
        return Err(Error::WrongLength { expected: s.edge_count(), got: w.len() });
    }
    for t in 0..s.triangle_count() as u32 {
        let x = [0, 1, 2].map(|i| sw(s, w, side(t, i)) as u64);
        let sum = x[0] + x[1] + x[2];
        if sum % 2 != 0 || x.iter().any(|&xi| 2 * xi > sum) {
            return Err(Error::MatchingViolation { triangle: t as usize });
        }
    }
    Ok(())
}

/// Other endpoint of the normal arc entering through `(entry, k)`.
#[inline]
pub fn arc_exit(s: &CombSurface, w: &[u32], entry: Side, k: u32) -> (Side, u32) {
    let n = corner_count(s, w, entry);
    if k < n {
        let out = prev_side(entry);
        (out, sw(s, w, out) - 1 - k)
    } else {
        let d = sw(s, w, entry) - 1 - k;
        (next_side(entry), d)
    }
}

/// One traced crossing: the side through which the curve leaves a triangle
/// and the position of the point on that side.
pub type Crossing = (Side, u32);

/// All components of the normal multicurve, each as its cyclic sequence of
/// crossings.
pub fn trace_all(s: &CombSurface, w: &[u32]) -> Vec<Vec<Crossing>> {
    let mut offset = vec![0usize; s.edge_count() + 1];
    for e in 0..s.edge_count() {
        offset[e + 1] = offset[e] + w[e] as usize;
    }
    let mut seen = vec![false; offset[s.edge_count()]];
    let idx = |x: Side, k: u32| -> usize {
        let e = s.edge_of(x) as usize;
        let canon = if s.is_canonical(x) { k } else { w[e] - 1 - k };
        offset[e] + canon as usize
    };
    let mut comps = Vec::new();
    for e in 0..s.edge_count() {
        for k in 0..w[e] {
            let x = s.edge_sides(e as u32)[0];
            if seen[idx(x, k)] {
                continue;
            }
            comps.push(trace_from(s, w, x, k, &mut |x2, k2| seen[idx(x2, k2)] = true));
        }
    }
    comps
}

/// Traces the component through the point `(x, k)`, entering `tri(x)`.
pub fn trace_from(
    s: &CombSurface,
    w: &[u32],
    x: Side,
    k: u32,
    mark: &mut dyn FnMut(Side, u32),
) -> Vec<Crossing> {
    let mut out = Vec::new();
    let (mut ein, mut kin) = (x, k);
    loop {
        let (xo, ko) = arc_exit(s, w, ein, kin);
        mark(xo, ko);
        out.push((xo, ko));
        let g = s.glued(xo);
        ein = g;
        kin = sw(s, w, xo) - 1 - ko;
        if ein == x && kin == k {
            break;
        }
    }
    out
}

/// Walk (exit sides only) of a connected normal curve.
pub fn walk_of(s: &CombSurface, w: &[u32]) -> Vec<Side> {
    match trace_all(s, w).into_iter().next() {
        Some(c) => c.into_iter().map(|(x, _)| x).collect(),
        None => Vec::new(),
    }
}

/// Corner index (slot) and depth of the arc entering through `(entry, k)`.
#[inline]
pub fn arc_corner(s: &CombSurface, w: &[u32], entry: Side, k: u32) -> (u32, u32) {
    let n = corner_count(s, w, entry);
    if k < n {
        (slot(entry), k)
    } else {
        ((slot(entry) + 1) % 3, sw(s, w, entry) - 1 - k)
    }
}

/// Triangle of a crossing's exit side.
#[inline]
pub fn crossing_tri(c: Crossing) -> u32 {
    tri(c.0)
}
