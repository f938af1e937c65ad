//! Cutting a surface along a multicurve.
//!
//! The union of the curves is a normal multicurve. Inside each triangle it
//! splits the triangle into one central piece and one strip per normal arc,
//! each strip lying on the corner side of its arc. The side segments between
//! consecutive points are glued across edges; the components of the cut
//! surface are the classes of pieces under these gluings. Every piece and
//! every segment is contractible, so `χ = #pieces - #glued segment pairs`
//! (ideal vertices count as boundary components).

use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::curve::CurveClass;
use crate::error::{Error, Result};
use crate::intersect;
use crate::normal::{self, corner_count, sw};
use crate::surface::{side, slot, tri, CombSurface, Side, UnionFind, VertexLabel};

/// One component of a cut surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutComponent {
    /// Euler characteristic of the compact component.
    pub euler: i64,
    pub genus: u32,
    /// Labels of boundary components of the original surface it contains.
    pub punctures: Vec<u32>,
    /// Holds the marked point of a closed-surface model.
    pub marked: bool,
    /// Sides of cut curves on its boundary: `(curve index, left side?)`.
    pub curve_sides: Vec<(usize, bool)>,
}

impl CutComponent {
    pub fn boundary_count(&self) -> usize {
        self.punctures.len() + self.curve_sides.len()
    }

    /// One-holed torus.
    pub fn is_handle(&self) -> bool {
        self.genus == 1 && self.boundary_count() == 1
    }

    /// Pair of pants.
    pub fn is_pants(&self) -> bool {
        self.genus == 0 && self.boundary_count() == 3
    }

    /// The canonical triangulated surface of this topological type.
    pub fn to_surface(&self) -> Result<CombSurface> {
        CombSurface::build(self.genus, self.boundary_count() as u32)
    }
}

/// Components of `S` cut along a multicurve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    pub components: Vec<CutComponent>,
    /// `[left component, right component]` for each input curve.
    pub sides: Vec<[usize; 2]>,
}

impl CutResult {
    /// Euler characteristics add up to that of the surface.
    pub fn euler_sum(&self) -> i64 {
        self.components.iter().map(|q| q.euler).sum()
    }
}

/// Piece of the triangle holding segment `k` of side `x`.
fn segment_piece(s: &CombSurface, w: &[u32], base: &[usize], x: Side, k: u32) -> usize {
    let t = tri(x);
    let i = slot(x);
    let n = |j: u32| corner_count(s, w, side(t, j));
    let strip = |j: u32, d: u32| -> usize {
        let mut off = base[t as usize] + 1;
        for jj in 0..j {
            off += n(jj) as usize;
        }
        off + d as usize
    };
    let ni = n(i);
    if k < ni {
        strip(i, k)
    } else if k == ni {
        base[t as usize]
    } else {
        strip((i + 1) % 3, sw(s, w, x) - k)
    }
}

/// Checks pairwise disjointness and distinctness.
pub fn check_multicurve(s: &CombSurface, m: &[CurveClass]) -> Result<()> {
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if m[i] == m[j] {
                return Err(Error::DuplicateCurve);
            }
            if intersect::intersection(s, &m[i], &m[j])? != 0 {
                return Err(Error::NotDisjoint(i, j));
            }
        }
    }
    Ok(())
}

/// Cuts `s` along the multicurve `m`.
pub fn census(s: &CombSurface, m: &[CurveClass]) -> Result<CutResult> {
    check_multicurve(s, m)?;
    census_unchecked(s, m)
}

/// As [`census`], trusting that `m` is a multicurve.
pub fn census_unchecked(s: &CombSurface, m: &[CurveClass]) -> Result<CutResult> {
    let ne = s.edge_count();
    let mut w = vec![0u32; ne];
    for c in m {
        if c.surface_id() != s.id() {
            return Err(Error::SurfaceMismatch);
        }
        for (e, &x) in c.weights().iter().enumerate() {
            w[e] += x;
        }
    }
    let nt = s.triangle_count();
    let mut base = vec![0usize; nt + 1];
    for t in 0..nt {
        let arcs: u32 = (0..3).map(|j| corner_count(s, &w, side(t as u32, j))).sum();
        base[t + 1] = base[t] + 1 + arcs as usize;
    }
    let npieces = base[nt];
    let mut uf = UnionFind::new(npieces);
    let mut glue_piece = Vec::new();
    for e in 0..ne as u32 {
        let [a, b] = s.edge_sides(e);
        let x = w[e as usize];
        for k in 0..=x {
            let pa = segment_piece(s, &w, &base, a, k);
            let pb = segment_piece(s, &w, &base, b, x - k);
            uf.union(pa, pb);
            glue_piece.push(pa);
        }
    }
    let mut comp_of_root = vec![usize::MAX; npieces];
    let mut comps: Vec<CutComponent> = Vec::new();
    let mut comp_of = vec![0usize; npieces];
    let mut chi: Vec<i64> = Vec::new();
    for p in 0..npieces {
        let r = uf.find(p);
        if comp_of_root[r] == usize::MAX {
            comp_of_root[r] = comps.len();
            comps.push(CutComponent {
                euler: 0,
                genus: 0,
                punctures: Vec::new(),
                marked: false,
                curve_sides: Vec::new(),
            });
            chi.push(0);
        }
        comp_of[p] = comp_of_root[r];
        chi[comp_of[p]] += 1;
    }
    for &p in &glue_piece {
        chi[comp_of[p]] -= 1;
    }
    for v in 0..s.vertex_count() as u32 {
        let c = (0..3 * nt as Side).find(|&c| s.corner_vertex(c) == v).expect("vertex has a corner");
        let t = tri(c) as usize;
        let piece = if corner_count(s, &w, c) > 0 {
            let mut off = base[t] + 1;
            for jj in 0..slot(c) {
                off += corner_count(s, &w, side(t as u32, jj)) as usize;
            }
            off
        } else {
            base[t]
        };
        let q = &mut comps[comp_of[piece]];
        match s.vertex_label(v) {
            VertexLabel::Boundary(k) => q.punctures.push(k),
            VertexLabel::Marked => q.marked = true,
        }
    }
    let mut sides = vec![[usize::MAX; 2]; m.len()];
    for trace in normal::trace_all(s, &w) {
        let mut counts = vec![0u32; ne];
        for &(x, _) in &trace {
            counts[s.edge_of(x) as usize] += 1;
        }
        let idx = m
            .iter()
            .position(|c| c.weights() == counts.as_slice())
            .ok_or_else(|| Error::InvariantViolation("traced component matches no input curve".into()))?;
        let (x, k) = trace[0];
        let left = comp_of[segment_piece(s, &w, &base, x, k + 1)];
        let right = comp_of[segment_piece(s, &w, &base, x, k)];
        sides[idx] = [left, right];
        comps[left].curve_sides.push((idx, true));
        comps[right].curve_sides.push((idx, false));
    }
    for (q, &x) in comps.iter_mut().zip(chi.iter()) {
        q.euler = x + if q.marked { 1 } else { 0 };
        q.punctures.sort_unstable();
        q.curve_sides.sort_unstable();
        let b = q.boundary_count() as i64;
        q.genus = ((2 - q.euler - b) / 2) as u32;
    }
    Ok(CutResult { components: comps, sides })
}

/// In a closed-surface model, two cut curves cobounding an annulus around
/// the marked point are the same curve of the closed surface.
pub fn closed_parallel(s: &CombSurface, c: &CutResult) -> bool {
    s.is_closed()
        && c
            .components
            .iter()
            .any(|q| q.marked && q.genus == 0 && q.punctures.is_empty() && q.curve_sides.len() == 2)
}

/// Index of the component of `S_m` containing a curve `x` disjoint from `m`.
pub fn locate(s: &CombSurface, m: &[CurveClass], cut: &CutResult, x: &CurveClass) -> Result<usize> {
    if m.is_empty() {
        return Ok(0);
    }
    if let Some(i) = m.iter().position(|c| c == x) {
        return Ok(cut.sides[i][0]);
    }
    let mut mm = m.to_vec();
    mm.push(x.clone());
    let fine = census(s, &mm)?;
    let xi = m.len();
    for &q in &fine.sides[xi] {
        if let Some(&(ci, left)) = fine.components[q].curve_sides.iter().find(|(ci, _)| *ci != xi) {
            return Ok(cut.sides[ci][if left { 0 } else { 1 }]);
        }
    }
    Err(Error::InvariantViolation("curve touches no cut curve".into()))
}
