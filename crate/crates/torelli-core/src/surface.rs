//! Ideal triangulations of S_{g,p}.
//!
//! Triangle `t` has corners `v0, v1, v2` in counter-clockwise order and side
//! `i` runs from `v_i` to `v_{i+1}`. A side is encoded as `3 t + i`; corner
//! `(t, i)` shares that encoding. Every side is glued to exactly one other
//! side, so the vertices of the triangulation are ideal: each one is a
//! boundary component (or, for a closed surface, one marked point).
//!
//! The canonical triangulation of S_{g,p} is dual to a trivalent ribbon graph
//! made of gadgets hanging off a path: `g` handles (theta graphs with one
//! subdivided edge) followed by `p - 1` loops. The loop monogons are the
//! boundary components 1..p-1 and the remaining face is boundary `p`. A closed
//! surface uses the S_{g,1} model with its single vertex marked.

use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A side of a triangle, `3 t + i`.
pub type Side = u32;

#[inline]
pub fn side(t: u32, i: u32) -> Side {
    t * 3 + i % 3
}

#[inline]
pub fn tri(s: Side) -> u32 {
    s / 3
}

#[inline]
pub fn slot(s: Side) -> u32 {
    s % 3
}

#[inline]
pub fn next_side(s: Side) -> Side {
    side(tri(s), slot(s) + 1)
}

#[inline]
pub fn prev_side(s: Side) -> Side {
    side(tri(s), slot(s) + 2)
}

/// What an ideal vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexLabel {
    /// Boundary component `∂_k`, `k >= 1`.
    Boundary(u32),
    /// The marked point of a closed surface model.
    Marked,
}

/// Ribbon-graph pieces of the canonical triangulation, by edge id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gadget {
    /// Theta graph with edges `e1, e2` and `e3` subdivided into `e3a, e3b`
    /// (`e3b` is `None` for the bare theta of S_{1,1}).
    Handle {
        e1: u32,
        e2: u32,
        e3a: u32,
        e3b: Option<u32>,
        attach: Option<u32>,
    },
    /// A loop edge enclosing boundary component `label`.
    Loop {
        loop_edge: u32,
        vertex: u32,
        label: u32,
        attach: Option<u32>,
    },
}

impl Gadget {
    pub fn attach(&self) -> Option<u32> {
        match self {
            Gadget::Handle { attach, .. } | Gadget::Loop { attach, .. } => *attach,
        }
    }

    /// Edges of the gadget itself, without its attaching edge.
    pub fn internal_edges(&self) -> Vec<u32> {
        match self {
            Gadget::Handle { e1, e2, e3a, e3b, .. } => {
                let mut v = vec![*e1, *e2, *e3a];
                v.extend(e3b);
                v
            }
            Gadget::Loop { loop_edge, .. } => vec![*loop_edge],
        }
    }
}

/// A triangulated compact orientable surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombSurface {
    genus: u32,
    boundary: u32,
    closed: bool,
    gluing: Vec<Side>,
    orientation: Vec<bool>,
    edge_of: Vec<u32>,
    edge_sides: Vec<[Side; 2]>,
    corner_vertex: Vec<u32>,
    vertex_labels: Vec<VertexLabel>,
    gadgets: Vec<Gadget>,
    backbone: Vec<u32>,
    id: u64,
}

struct RibbonBuilder {
    slots: Vec<Option<Side>>,
}

impl RibbonBuilder {
    fn vertex(&mut self) -> u32 {
        let t = (self.slots.len() / 3) as u32;
        self.slots.extend([None, None, None]);
        t
    }

    fn join(&mut self, a: Side, b: Side) {
        debug_assert!(self.slots[a as usize].is_none() && self.slots[b as usize].is_none());
        self.slots[a as usize] = Some(b);
        self.slots[b as usize] = Some(a);
    }
}

enum RawGadget {
    Handle { sides: [Side; 4], bare: bool, attach: Option<Side> },
    Loop { loop_side: Side, vertex: u32, label: u32, attach: Side },
}

impl CombSurface {
    /// The canonical triangulation of S_{g,p}.
    pub fn build(g: u32, p: u32) -> Result<Self> {
        if 2 * g + p <= 2 {
            return Err(Error::NonHyperbolicSurface { g, p });
        }
        let closed = p == 0;
        let loops = p.saturating_sub(1);
        let k = g + loops;
        let mut rb = RibbonBuilder { slots: Vec::new() };
        let mut raw = Vec::new();
        if k == 1 {
            let u = rb.vertex();
            let v = rb.vertex();
            for i in 0..3 {
                rb.join(side(u, i), side(v, i));
            }
            raw.push(RawGadget::Handle {
                sides: [side(u, 0), side(u, 1), side(u, 2), side(u, 2)],
                bare: true,
                attach: None,
            });
        } else {
            for _ in 0..g {
                let u = rb.vertex();
                let v = rb.vertex();
                let w = rb.vertex();
                rb.join(side(u, 0), side(v, 0));
                rb.join(side(u, 1), side(v, 1));
                rb.join(side(u, 2), side(w, 0));
                rb.join(side(w, 1), side(v, 2));
                raw.push(RawGadget::Handle {
                    sides: [side(u, 0), side(u, 1), side(u, 2), side(w, 1)],
                    bare: false,
                    attach: Some(side(w, 2)),
                });
            }
            for j in 0..loops {
                let y = rb.vertex();
                rb.join(side(y, 1), side(y, 2));
                raw.push(RawGadget::Loop {
                    loop_side: side(y, 1),
                    vertex: y,
                    label: j + 1,
                    attach: side(y, 0),
                });
            }
        }
        let attach_sides: Vec<Side> = raw
            .iter()
            .filter_map(|r| match r {
                RawGadget::Handle { attach, .. } => *attach,
                RawGadget::Loop { attach, .. } => Some(*attach),
            })
            .collect();
        let mut backbone_sides = Vec::new();
        if k == 2 {
            rb.join(attach_sides[0], attach_sides[1]);
            backbone_sides.push(attach_sides[0]);
        } else if k > 2 {
            let ws: Vec<u32> = (0..k - 2).map(|_| rb.vertex()).collect();
            rb.join(attach_sides[0], side(ws[0], 0));
            backbone_sides.push(attach_sides[0]);
            for (j, &w) in ws.iter().enumerate() {
                rb.join(side(w, 1), attach_sides[j + 1]);
                if j + 1 < ws.len() {
                    rb.join(side(w, 2), side(ws[j + 1], 0));
                    backbone_sides.push(side(w, 2));
                } else {
                    rb.join(side(w, 2), attach_sides[k as usize - 1]);
                    backbone_sides.push(side(w, 2));
                }
            }
        }
        let gluing: Vec<Side> = rb.slots.iter().map(|s| s.expect("every slot is joined")).collect();
        let mut surf = Self::assemble(gluing, g, p, closed)?;
        let e = |s: Side| surf.edge_of[s as usize];
        let mut gadgets = Vec::new();
        let mut loop_corners = Vec::new();
        for r in &raw {
            match r {
                RawGadget::Handle { sides, bare, attach } => gadgets.push(Gadget::Handle {
                    e1: e(sides[0]),
                    e2: e(sides[1]),
                    e3a: e(sides[2]),
                    e3b: if *bare { None } else { Some(e(sides[3])) },
                    attach: attach.map(e),
                }),
                RawGadget::Loop { loop_side, vertex, label, attach } => {
                    gadgets.push(Gadget::Loop {
                        loop_edge: e(*loop_side),
                        vertex: *vertex,
                        label: *label,
                        attach: Some(e(*attach)),
                    });
                    loop_corners.push((side(*vertex, 2), *label));
                }
            }
        }
        let backbone = backbone_sides.iter().map(|&s| e(s)).collect();
        let nv = surf.vertex_labels.len();
        let mut labels = vec![None; nv];
        for (corner, label) in loop_corners {
            let v = surf.corner_vertex[corner as usize] as usize;
            labels[v] = Some(VertexLabel::Boundary(label));
        }
        let outer = if closed { VertexLabel::Marked } else { VertexLabel::Boundary(p) };
        let mut outer_count = 0;
        for l in labels.iter_mut() {
            if l.is_none() {
                *l = Some(outer);
                outer_count += 1;
            }
        }
        if outer_count != 1 {
            return Err(Error::InvariantViolation("canonical triangulation has wrong face count".into()));
        }
        surf.vertex_labels = labels.into_iter().map(|l| l.unwrap()).collect();
        surf.gadgets = gadgets;
        surf.backbone = backbone;
        surf.id = surf.fingerprint();
        Ok(surf)
    }

    /// Builds a surface from an explicit gluing and vertex labels given by a
    /// representative corner. Gadget data is left empty.
    pub fn from_gluing(gluing: Vec<Side>, labels: &[(Side, VertexLabel)]) -> Result<Self> {
        let n = gluing.len();
        if !n.is_multiple_of(3) || n == 0 {
            return Err(Error::InvariantViolation("side count not a positive multiple of 3".into()));
        }
        for (s, &t) in gluing.iter().enumerate() {
            if t as usize >= n || gluing[t as usize] as usize != s || t as usize == s {
                return Err(Error::InvariantViolation("gluing is not a fixed-point-free involution".into()));
            }
        }
        let mut surf = Self::assemble(gluing, 0, 0, false)?;
        let nv = surf.vertex_labels.len();
        let mut vl = vec![None; nv];
        for &(c, l) in labels {
            let v = *surf
                .corner_vertex
                .get(c as usize)
                .ok_or_else(|| Error::InvariantViolation("label corner out of range".into()))?;
            vl[v as usize] = Some(l);
        }
        if vl.iter().any(|l| l.is_none()) {
            return Err(Error::InvariantViolation("unlabelled vertex".into()));
        }
        let vl: Vec<VertexLabel> = vl.into_iter().map(|l| l.unwrap()).collect();
        let marked = vl.iter().filter(|l| **l == VertexLabel::Marked).count();
        let p = (vl.len() - marked) as u32;
        let closed = marked == 1 && vl.len() == 1;
        if marked > 0 && !closed {
            return Err(Error::InvariantViolation("a marked vertex must be the only vertex".into()));
        }
        let mut bl: Vec<u32> = vl
            .iter()
            .filter_map(|l| match l {
                VertexLabel::Boundary(k) => Some(*k),
                VertexLabel::Marked => None,
            })
            .collect();
        bl.sort_unstable();
        if bl.iter().enumerate().any(|(i, &k)| k != i as u32 + 1) {
            return Err(Error::InvariantViolation("boundary labels must be 1..p".into()));
        }
        let chi_closed = nv as i64 - surf.edge_sides.len() as i64 + (n / 3) as i64;
        if (2 - chi_closed) % 2 != 0 {
            return Err(Error::InvariantViolation("odd Euler characteristic".into()));
        }
        surf.genus = ((2 - chi_closed) / 2) as u32;
        surf.boundary = p;
        surf.closed = closed;
        surf.vertex_labels = vl;
        if 2 * surf.genus + p <= 2 {
            return Err(Error::NonHyperbolicSurface { g: surf.genus, p });
        }
        surf.id = surf.fingerprint();
        Ok(surf)
    }

    fn assemble(gluing: Vec<Side>, g: u32, p: u32, closed: bool) -> Result<Self> {
        let n = gluing.len();
        let mut edge_of = vec![u32::MAX; n];
        let mut edge_sides = Vec::new();
        for s in 0..n {
            if edge_of[s] == u32::MAX {
                let e = edge_sides.len() as u32;
                edge_of[s] = e;
                edge_of[gluing[s] as usize] = e;
                edge_sides.push([s as Side, gluing[s]]);
            }
        }
        let mut uf = UnionFind::new(n);
        for s in 0..n as Side {
            let t = gluing[s as usize];
            uf.union(s as usize, next_side(t) as usize);
            uf.union(next_side(s) as usize, t as usize);
        }
        let mut class_id = vec![u32::MAX; n];
        let mut corner_vertex = vec![0; n];
        let mut nv = 0u32;
        for c in 0..n {
            let r = uf.find(c);
            if class_id[r] == u32::MAX {
                class_id[r] = nv;
                nv += 1;
            }
            corner_vertex[c] = class_id[r];
        }
        let f = (n / 3) as i64;
        let chi_closed = nv as i64 - edge_sides.len() as i64 + f;
        if g > 0 || p > 0 {
            let expect_v = if closed { 1 } else { p as i64 };
            if nv as i64 != expect_v || chi_closed != 2 - 2 * g as i64 {
                return Err(Error::InvariantViolation("canonical triangulation has the wrong type".into()));
            }
        }
        Ok(CombSurface {
            genus: g,
            boundary: p,
            closed,
            orientation: vec![true; n / 3],
            gluing,
            edge_of,
            edge_sides,
            corner_vertex,
            vertex_labels: vec![VertexLabel::Marked; nv as usize],
            gadgets: Vec::new(),
            backbone: Vec::new(),
            id: 0,
        })
    }

    fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut mix = |x: u64| {
            h ^= x;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        };
        mix(self.genus as u64);
        mix(self.boundary as u64);
        mix(self.closed as u64);
        for &s in &self.gluing {
            mix(s as u64);
        }
        for l in &self.vertex_labels {
            mix(match l {
                VertexLabel::Boundary(k) => *k as u64,
                VertexLabel::Marked => u64::MAX,
            });
        }
        h
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of boundary components.
    pub fn boundary_count(&self) -> u32 {
        self.boundary
    }

    /// True for a closed surface modelled with one marked point.
    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Euler characteristic of the compact surface, `2 - 2g - p`.
    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary as i64
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn triangle_count(&self) -> usize {
        self.gluing.len() / 3
    }

    pub fn edge_count(&self) -> usize {
        self.edge_sides.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    #[inline]
    pub fn glued(&self, s: Side) -> Side {
        self.gluing[s as usize]
    }

    pub fn gluing(&self) -> &[Side] {
        &self.gluing
    }

    pub fn orientation(&self) -> &[bool] {
        &self.orientation
    }

    #[inline]
    pub fn edge_of(&self, s: Side) -> u32 {
        self.edge_of[s as usize]
    }

    /// `[canonical side, other side]` of an edge.
    #[inline]
    pub fn edge_sides(&self, e: u32) -> [Side; 2] {
        self.edge_sides[e as usize]
    }

    #[inline]
    pub fn is_canonical(&self, s: Side) -> bool {
        self.edge_sides[self.edge_of[s as usize] as usize][0] == s
    }

    /// Vertex class of corner `(t, i)`, i.e. of the start of side `3t + i`.
    #[inline]
    pub fn corner_vertex(&self, c: Side) -> u32 {
        self.corner_vertex[c as usize]
    }

    pub fn vertex_label(&self, v: u32) -> VertexLabel {
        self.vertex_labels[v as usize]
    }

    pub fn vertex_labels(&self) -> &[VertexLabel] {
        &self.vertex_labels
    }

    /// Vertex class carrying boundary label `k`.
    pub fn vertex_of_boundary(&self, k: u32) -> Option<u32> {
        self.vertex_labels
            .iter()
            .position(|l| *l == VertexLabel::Boundary(k))
            .map(|v| v as u32)
    }

    pub fn gadgets(&self) -> &[Gadget] {
        &self.gadgets
    }

    /// Path edges joining consecutive gadgets.
    pub fn backbone(&self) -> &[u32] {
        &self.backbone
    }

    /// Normal coordinates of the link of vertex `v`.
    pub fn link_weights(&self, v: u32) -> Vec<u32> {
        let mut w = vec![0; self.edge_count()];
        for (e, sides) in self.edge_sides.iter().enumerate() {
            let s = sides[0];
            if self.corner_vertex(s) == v {
                w[e] += 1;
            }
            if self.corner_vertex(next_side(s)) == v {
                w[e] += 1;
            }
        }
        w
    }

    /// Genus and boundary count recomputed from the cell structure.
    pub fn classify(&self) -> (u32, u32) {
        let f = self.triangle_count() as i64;
        let chi_closed = self.vertex_count() as i64 - self.edge_count() as i64 + f;
        let g = ((2 - chi_closed) / 2) as u32;
        let p = self
            .vertex_labels
            .iter()
            .filter(|l| matches!(l, VertexLabel::Boundary(_)))
            .count() as u32;
        (g, p)
    }
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_and_round_trip() {
        for g in 0..4 {
            for p in 0..6 {
                match CombSurface::build(g, p) {
                    Ok(s) => {
                        assert_eq!(s.classify(), (g, p));
                        assert_eq!(s.euler(), 2 - 2 * g as i64 - p as i64);
                        assert_eq!(s.triangle_count() as i64, 2 * (2 * g as i64 - 2 + p.max(1) as i64));
                    }
                    Err(e) => assert_eq!(e, Error::NonHyperbolicSurface { g, p }),
                }
            }
        }
    }
}
