//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use torelli_core::surface::{side, slot, tri, CombSurface};
use torelli_core::CurveClass;

/// Every curve whose weights are all at most `max`.
pub fn small_curves(s: &CombSurface, max: u32) -> Vec<CurveClass> {
    let ne = s.edge_count();
    let mut out = Vec::new();
    let mut w = vec![0u32; ne];
    loop {
        if let Ok(c) = CurveClass::new(s, w.clone()) {
            out.push(c);
        }
        let mut i = 0;
        loop {
            if i == ne {
                return out;
            }
            if w[i] < max {
                w[i] += 1;
                break;
            }
            w[i] = 0;
            i += 1;
        }
    }
}

fn corner(s: &CombSurface, w: &[u32], t: u32, i: u32) -> u32 {
    let x = |j: u32| w[s.edge_of(side(t, j % 3)) as usize];
    (x(i + 2) + x(i) - x(i + 1)) / 2
}

/// Normal arcs of a curve in triangle `t` as pairs of `(slot, position)`
/// endpoints, positions counted from the start of each side.
fn arcs(s: &CombSurface, w: &[u32], t: u32) -> Vec<[(u32, u32); 2]> {
    let x = |j: u32| w[s.edge_of(side(t, j % 3)) as usize];
    let mut out = Vec::new();
    for i in 0..3 {
        let prev = (i + 2) % 3;
        for d in 0..corner(s, w, t, i) {
            out.push([(i, d), (prev, x(prev) - 1 - d)]);
        }
    }
    out
}

/// Fewest crossings over all joint normal drawings. Normal representatives
/// of two curves can be put in minimal position, so this is `i(a, b)`.
/// Interleavings of the points on each edge are searched exhaustively with
/// branch and bound: a triangle is scored once its three edges are fixed.
/// Returns `None` if the raw search space exceeds `budget`.
pub fn min_crossings(s: &CombSurface, a: &CurveClass, b: &CurveClass, budget: u64) -> Option<u64> {
    let (wa, wb) = (a.weights(), b.weights());
    let ne = s.edge_count();
    let mut options: Vec<Vec<u32>> = Vec::new();
    let mut space: u64 = 1;
    for e in 0..ne {
        let n = wa[e] + wb[e];
        let masks: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() == wa[e]).collect();
        space = space.saturating_mul(masks.len() as u64);
        options.push(masks);
    }
    if space > budget {
        return None;
    }
    let nt = s.triangle_count() as u32;
    // triangles completed by fixing each edge, in edge order
    let mut done_at: Vec<Vec<u32>> = vec![Vec::new(); ne];
    for t in 0..nt {
        let last = (0..3).map(|i| s.edge_of(side(t, i)) as usize).max().unwrap();
        done_at[last].push(t);
    }
    let search = Search { s, wa, wb, options: &options, done_at: &done_at };
    let mut choice = vec![0usize; ne];
    let mut best = u64::MAX;
    search.dfs(0, 0, &mut choice, &mut best);
    Some(best)
}

struct Search<'a> {
    s: &'a CombSurface,
    wa: &'a [u32],
    wb: &'a [u32],
    options: &'a [Vec<u32>],
    done_at: &'a [Vec<u32>],
}

impl Search<'_> {
    fn dfs(&self, e: usize, partial: u64, choice: &mut [usize], best: &mut u64) {
        if e == choice.len() {
            *best = (*best).min(partial);
            return;
        }
        for k in 0..self.options[e].len() {
            choice[e] = k;
            let mut total = partial;
            for &t in &self.done_at[e] {
                total += self.triangle_crossings(t, choice);
            }
            if total < *best {
                self.dfs(e + 1, total, choice, best);
            }
        }
    }

    /// Position along side `x` of the `k`-th point of curve a (`first`) or b.
    fn pos(&self, choice: &[usize], x: u32, first: bool, k: u32) -> u32 {
        let s = self.s;
        let e = s.edge_of(x) as usize;
        let m = self.options[e][choice[e]];
        let n = self.wa[e] + self.wb[e];
        let canon_pos = |k_can: u32| -> u32 {
            let mut seen = 0;
            for p in 0..n {
                if (m >> p & 1 == 1) == first {
                    if seen == k_can {
                        return p;
                    }
                    seen += 1;
                }
            }
            unreachable!()
        };
        let own = if first { self.wa[e] } else { self.wb[e] };
        if s.is_canonical(x) {
            canon_pos(k)
        } else {
            n - 1 - canon_pos(own - 1 - k)
        }
    }

    fn triangle_crossings(&self, t: u32, choice: &[usize]) -> u64 {
        let big = 1u32 << 16;
        let coord = |first: bool, (i, k): (u32, u32)| {
            slot(side(t, i)) * big + self.pos(choice, side(t, i), first, k)
        };
        let aa: Vec<[u32; 2]> =
            arcs(self.s, self.wa, t).into_iter().map(|[p, q]| [coord(true, p), coord(true, q)]).collect();
        let bb: Vec<[u32; 2]> =
            arcs(self.s, self.wb, t).into_iter().map(|[p, q]| [coord(false, p), coord(false, q)]).collect();
        let mut total = 0u64;
        for [p, q] in &aa {
            let (lo, hi) = if p < q { (*p, *q) } else { (*q, *p) };
            for [u, v] in &bb {
                if (lo < *u && *u < hi) != (lo < *v && *v < hi) {
                    total += 1;
                }
            }
        }
        debug_assert!(tri(side(t, 0)) == t);
        total
    }
}

/// A word of `len` letters drawn from the standard generators.
pub fn random_word(s: &CombSurface, seed: u64, len: usize) -> torelli_core::MappingWord {
    use rand::{Rng, SeedableRng};
    let gens = torelli_core::catalog::standard_generators(s).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut w = torelli_core::MappingWord::identity();
    for _ in 0..len {
        w = gens[rng.random_range(0..gens.len())].compose(&w);
    }
    w
}
