//! Joint drawings of several normal curves.
//!
//! On every edge the points of all curves are merged into one order. Points
//! of the same curve keep their normal order; points of different curves are
//! ordered by following both curves until their paths through the
//! triangulation separate. Two lifts that share a stretch stay parallel
//! along it, and cross once in its middle exactly when they leave it on
//! opposite sides. Placing every crossing at the middle of its stretch is
//! the same rule for all lifts, so the orders on different edges agree and
//! every pair of distinct curves is drawn in minimal position.
//!
//! Inside a triangle each arc is a chord of the boundary circle; two chords
//! cross iff their endpoints interleave.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::normal::{self, Crossing};
use crate::surface::{next_side, prev_side, slot, tri, CombSurface, Side, UnionFind};

/// Circle coordinates per side; larger than any point count.
const BIG: u64 = 1 << 32;

/// One crossing between arcs of two different curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcCrossing {
    pub tri: u32,
    /// `(curve, arc)` of the first curve; arc `k` is the one leaving through
    /// exit `k` of the curve's trace.
    pub first: (usize, usize),
    pub second: (usize, usize),
    /// Position of the crossing along each arc (larger = later).
    pub key_first: u64,
    pub key_second: u64,
    /// The second curve leaves the crossing to the left of the first.
    pub second_goes_left: bool,
}

/// One chord inside a triangle.
#[derive(Clone, Copy, Debug)]
struct Chord {
    curve: usize,
    arc: usize,
    from: u64,
    to: u64,
}

/// Several curves drawn together.
#[derive(Clone, Debug)]
pub struct Drawing {
    traces: Vec<Vec<Crossing>>,
    weights: Vec<Vec<u32>>,
    /// Global position on the canonical side, per curve and edge, indexed by
    /// the curve's own position on the canonical side.
    canon: Vec<Vec<Vec<u32>>>,
    totals: Vec<u32>,
    chords: Vec<Vec<Chord>>,
    crossings: Vec<ArcCrossing>,
}

fn circle_dist(from: u64, to: u64) -> u64 {
    (to + 3 * BIG - from) % (3 * BIG)
}

/// `p` lies strictly inside the counterclockwise arc from `a` to `b`.
fn in_ccw(a: u64, b: u64, p: u64) -> bool {
    let d = circle_dist(a, p);
    d > 0 && d < circle_dist(a, b)
}

impl Drawing {
    /// Draws the given connected normal curves. Each weight vector must
    /// encode a single curve; distinct entries must be distinct curves.
    pub fn new(s: &CombSurface, curves: &[&[u32]]) -> Self {
        let ne = s.edge_count();
        let traces: Vec<Vec<Crossing>> = curves
            .iter()
            .map(|w| normal::trace_all(s, w).into_iter().next().unwrap_or_default())
            .collect();
        let walks: Vec<Vec<Side>> = traces.iter().map(|t| t.iter().map(|&(x, _)| x).collect()).collect();
        let rev: Vec<Vec<Side>> = walks.iter().map(|w| crate::walk::reverse(s, w)).collect();
        // Trace index of each point, keyed by canonical own position.
        let mut at: Vec<Vec<Vec<(usize, bool)>>> = Vec::with_capacity(curves.len());
        for (j, w) in curves.iter().enumerate() {
            let mut per = vec![Vec::new(); ne];
            for e in 0..ne {
                per[e] = vec![(0usize, false); w[e] as usize];
            }
            for (i, &(x, k)) in traces[j].iter().enumerate() {
                let e = s.edge_of(x) as usize;
                let canon_k = if s.is_canonical(x) { k } else { w[e] - 1 - k };
                per[e][canon_k as usize] = (i, s.is_canonical(x));
            }
            at.push(per);
        }
        // Walk and index at which curve `j` leaves through the canonical side
        // of edge `e` at canonical position `k`.
        let oriented = |j: usize, e: usize, k: u32| -> (&[Side], usize) {
            let (i, fwd) = at[j][e][k as usize];
            if fwd {
                (&walks[j], i)
            } else {
                (&rev[j], walks[j].len() - 1 - i)
            }
        };
        // Order along the canonical side. A linked pair of lifts crosses in
        // the middle of the stretch they share; an edge before the middle
        // takes the order from the backward end, an edge after it from the
        // forward end, and a middle edge from the backward end.
        let compare = |j1: usize, k1: u32, j2: usize, k2: u32, e: usize| -> Ordering {
            if j1 == j2 {
                return k1.cmp(&k2);
            }
            let (a, ia) = oriented(j1, e, k1);
            let (b, ib) = oriented(j2, e, k2);
            let (n, m) = (a.len(), b.len());
            let mut back = None;
            for t in 1..=n + m {
                let ea = s.glued(a[(ia + n * t - t) % n]);
                let eb = s.glued(b[(ib + m * t - t) % m]);
                if ea != eb {
                    let x = a[(ia + n * t - t + 1) % n];
                    let o = if ea == prev_side(x) { Ordering::Less } else { Ordering::Greater };
                    back = Some((t, o));
                    break;
                }
            }
            let Some((t, back_ord)) = back else {
                return j1.cmp(&j2);
            };
            for u in 1..=n + m {
                let xa = a[(ia + u) % n];
                let xb = b[(ib + u) % m];
                if xa != xb {
                    let y = s.glued(a[(ia + u - 1) % n]);
                    let fwd_ord = if xa == next_side(y) { Ordering::Less } else { Ordering::Greater };
                    return if u >= t { back_ord } else { fwd_ord };
                }
            }
            back_ord
        };
        let mut canon = vec![vec![Vec::new(); ne]; curves.len()];
        let mut totals = vec![0u32; ne];
        for e in 0..ne {
            let mut heads = vec![0u32; curves.len()];
            let total: u32 = curves.iter().map(|w| w[e]).sum();
            totals[e] = total;
            for (j, w) in curves.iter().enumerate() {
                canon[j][e] = vec![0; w[e] as usize];
            }
            for g in 0..total {
                let mut best: Option<usize> = None;
                for j in 0..curves.len() {
                    if heads[j] >= curves[j][e] {
                        continue;
                    }
                    best = match best {
                        None => Some(j),
                        Some(b) if compare(j, heads[j], b, heads[b], e) == Ordering::Less => Some(j),
                        keep => keep,
                    };
                }
                let j = best.expect("a curve has points left");
                canon[j][e][heads[j] as usize] = g;
                heads[j] += 1;
            }
        }
        let mut d = Drawing {
            traces,
            weights: curves.iter().map(|w| w.to_vec()).collect(),
            canon,
            totals,
            chords: vec![Vec::new(); s.triangle_count()],
            crossings: Vec::new(),
        };
        d.build_chords(s);
        d.build_crossings();
        d
    }

    /// Global position on side `x` of the point of curve `j` with own
    /// position `k` on `x`.
    fn global(&self, s: &CombSurface, j: usize, x: Side, k: u32) -> u32 {
        let e = s.edge_of(x) as usize;
        let w = self.weights[j][e];
        if s.is_canonical(x) {
            self.canon[j][e][k as usize]
        } else {
            self.totals[e] - 1 - self.canon[j][e][(w - 1 - k) as usize]
        }
    }

    fn coord(&self, s: &CombSurface, j: usize, x: Side, k: u32) -> u64 {
        slot(x) as u64 * BIG + self.global(s, j, x, k) as u64
    }

    fn build_chords(&mut self, s: &CombSurface) {
        for j in 0..self.traces.len() {
            let n = self.traces[j].len();
            for k in 0..n {
                let (px, pk) = self.traces[j][(k + n - 1) % n];
                let (x, xk) = self.traces[j][k];
                let entry = s.glued(px);
                let ek = self.weights[j][s.edge_of(px) as usize] - 1 - pk;
                let c = Chord { curve: j, arc: k, from: self.coord(s, j, entry, ek), to: self.coord(s, j, x, xk) };
                self.chords[tri(x) as usize].push(c);
            }
        }
    }

    fn build_crossings(&mut self) {
        for (t, chords) in self.chords.iter().enumerate() {
            for (u, a) in chords.iter().enumerate() {
                for b in &chords[u + 1..] {
                    if a.curve == b.curve {
                        continue;
                    }
                    let b_from_right = in_ccw(a.from, a.to, b.from);
                    let b_to_right = in_ccw(a.from, a.to, b.to);
                    if b_from_right == b_to_right {
                        continue;
                    }
                    let r = if b_from_right { b.from } else { b.to };
                    let key_first = circle_dist(a.from, r);
                    let a_right_of_b = if in_ccw(b.from, b.to, a.from) { a.from } else { a.to };
                    let key_second = circle_dist(b.from, a_right_of_b);
                    self.crossings.push(ArcCrossing {
                        tri: t as u32,
                        first: (a.curve, a.arc),
                        second: (b.curve, b.arc),
                        key_first,
                        key_second,
                        second_goes_left: b_from_right,
                    });
                }
            }
        }
    }

    /// Trace of curve `j` (exit sides with own positions).
    pub fn trace(&self, j: usize) -> &[Crossing] {
        &self.traces[j]
    }

    /// Walk of curve `j`.
    pub fn walk(&self, j: usize) -> Vec<Side> {
        self.traces[j].iter().map(|&(x, _)| x).collect()
    }

    pub fn crossings(&self) -> &[ArcCrossing] {
        &self.crossings
    }

    /// Crossings between curves `j1` and `j2`, each given from the point of
    /// view of `j1` as `(arc of j1, key along j1, arc of j2, key along j2,
    /// j2 goes left)`, sorted along `j1`.
    pub fn crossings_along(&self, j1: usize, j2: usize) -> Vec<(usize, u64, usize, u64, bool)> {
        let mut out = Vec::new();
        for c in &self.crossings {
            if c.first.0 == j1 && c.second.0 == j2 {
                out.push((c.first.1, c.key_first, c.second.1, c.key_second, c.second_goes_left));
            } else if c.first.0 == j2 && c.second.0 == j1 {
                out.push((c.second.1, c.key_second, c.first.1, c.key_first, !c.second_goes_left));
            }
        }
        out.sort_by_key(|a| (a.0, a.1));
        out
    }

    /// Number of components of the complement of all drawn curves.
    pub fn complement_components(&self, s: &CombSurface) -> usize {
        let nt = s.triangle_count();
        let mut cell_base = vec![0usize; nt + 1];
        let mut seg_cell: Vec<Vec<Vec<usize>>> = vec![Vec::new(); nt];
        let mut interior = 0usize;
        for t in 0..nt {
            let chords = &self.chords[t];
            let mut cells: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
            let mut per_side = Vec::with_capacity(3);
            for i in 0..3u32 {
                let x = t as u32 * 3 + i;
                let total = self.totals[s.edge_of(x) as usize];
                let mut segs = Vec::with_capacity(total as usize + 1);
                for k in 0..=total {
                    // segment between points k-1 and k, at doubled coordinate
                    let p2 = 2 * (i as u64 * BIG + k as u64);
                    let sig: Vec<bool> = chords
                        .iter()
                        .map(|c| {
                            let d = (p2 + 6 * BIG - 1 - 2 * c.from) % (6 * BIG);
                            d < 2 * circle_dist(c.from, c.to)
                        })
                        .collect();
                    let n = cells.len();
                    segs.push(*cells.entry(sig).or_insert(n));
                }
                per_side.push(segs);
            }
            let inner_crossings = self.crossings.iter().filter(|c| c.tri as usize == t).count();
            let total_cells = 1 + chords.len() + inner_crossings;
            interior += total_cells - cells.len();
            cell_base[t + 1] = cell_base[t] + cells.len();
            seg_cell[t] = per_side;
        }
        let mut uf = UnionFind::new(cell_base[nt]);
        for e in 0..s.edge_count() as u32 {
            let [a, b] = s.edge_sides(e);
            let total = self.totals[e as usize] as usize;
            for k in 0..=total {
                let ca = cell_base[tri(a) as usize] + seg_cell[tri(a) as usize][slot(a) as usize][k];
                let cb = cell_base[tri(b) as usize] + seg_cell[tri(b) as usize][slot(b) as usize][total - k];
                uf.union(ca, cb);
            }
        }
        let mut roots: Vec<usize> = (0..cell_base[nt]).map(|c| uf.find(c)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len() + interior
    }
}
