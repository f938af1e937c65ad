//! Geometric intersection numbers by counting linked lifts.
//!
//! Both curves are taken as cyclically reduced walks in the dual ribbon graph.
//! Lifts to the universal cover are bi-infinite paths in a trivalent tree; two
//! lifts cross exactly when they share a finite stretch and leave it on
//! opposite sides from those on which they entered. Each crossing of the
//! curves on the surface, in minimal position, is one such pair modulo deck
//! transformations, found once as a maximal common stretch of the two cyclic
//! walks (read in equal or opposite directions).

use crate::curve::CurveClass;
use crate::error::{Error, Result};
use crate::surface::{slot, CombSurface, Side};
use crate::walk;

/// Counts common stretches of `a` and `b` (same direction) that are crossings.
fn linked_stretches(s: &CombSurface, a: &[Side], b: &[Side]) -> u64 {
    let (n, m) = (a.len(), b.len());
    let mut count = 0;
    for i in 0..n {
        let prev_a = a[(i + n - 1) % n];
        for j in 0..m {
            if a[i] != b[j] || prev_a == b[(j + m - 1) % m] {
                continue;
            }
            let left_start = slot(s.glued(prev_a)) == (slot(a[i]) + 1) % 3;
            let mut len = 1;
            while len <= n + m && a[(i + len) % n] == b[(j + len) % m] {
                len += 1;
            }
            if len > n + m {
                continue;
            }
            let exit = a[(i + len) % n];
            let arrival = s.glued(a[(i + len - 1) % n]);
            let left_end = slot(exit) == (slot(arrival) + 2) % 3;
            if left_start != left_end {
                count += 1;
            }
        }
    }
    count
}

/// Intersection number of two cyclically reduced walks of distinct curves.
pub fn intersection_walks(s: &CombSurface, a: &[Side], b: &[Side]) -> u64 {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let rb = walk::reverse(s, b);
    linked_stretches(s, a, b) + linked_stretches(s, a, &rb)
}

/// Geometric intersection number `i(a, b)`.
pub fn intersection(s: &CombSurface, a: &CurveClass, b: &CurveClass) -> Result<u64> {
    if a.surface_id() != s.id() || b.surface_id() != s.id() {
        return Err(Error::SurfaceMismatch);
    }
    if a == b {
        return Ok(0);
    }
    Ok(intersection_walks(s, &a.walk(s), &b.walk(s)))
}
