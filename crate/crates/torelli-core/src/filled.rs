//! The subsurface filled by a few curves.
//!
//! The curves are drawn in minimal position. The union is a 4-valent graph
//! whose vertices are the crossings; its faces are traced from the rotation
//! at each crossing, and each face walk is the concatenation of the segment
//! walks around it. Faces whose walk is trivial are disks and faces whose
//! walk is peripheral are punctured disks; both are filled in.

use alloc::vec;
use alloc::vec::Vec;

use crate::curve::CurveClass;
use crate::draw::Drawing;
use crate::error::{Error, Result};
use crate::surface::{CombSurface, Side, UnionFind, VertexLabel};
use crate::walk;

/// Type and boundary of a filled subsurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filled {
    pub genus: u32,
    /// Boundary components, punctures included.
    pub boundary_count: u32,
    /// Essential boundary curves, with multiplicity, sorted.
    pub boundaries: Vec<CurveClass>,
    /// Boundary components of the surface filled in as punctures.
    pub punctures: Vec<u32>,
    /// False when the curves are disjoint; the report then describes the two
    /// annuli around them.
    pub filling: bool,
}

impl Filled {
    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }

    pub fn is_type(&self, g: u32, p: u32) -> bool {
        self.filling && self.genus == g && self.boundary_count == p
    }
}

/// Part of a walk from a crossing on arc `k1` to a crossing on arc `k2`.
fn segment(w: &[Side], from: (usize, u64), to: (usize, u64)) -> Vec<Side> {
    if to > from {
        w[from.0..to.0].to_vec()
    } else {
        let mut out = w[from.0..].to_vec();
        out.extend_from_slice(&w[..to.0]);
        out
    }
}

/// Vertex around which a walk is peripheral.
fn peripheral_vertex(s: &CombSurface, red: &[Side]) -> Option<u32> {
    let counts = walk::edge_counts(s, red);
    (0..s.vertex_count() as u32).find(|&v| {
        let link = s.link_weights(v);
        let k = counts.iter().zip(&link).find(|(_, &l)| l > 0).map(|(&c, &l)| c / l).unwrap_or(0);
        k > 0 && counts.iter().zip(&link).all(|(&c, &l)| c == k * l)
    })
}

/// One face of the union of several curves in a joint drawing: its closed
/// boundary walk and the curve of each boundary segment, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<Side>,
    pub curves: Vec<usize>,
}

/// Faces of the union of the first `k` curves of a drawing. Curves without
/// crossings are ignored.
pub fn faces(s: &CombSurface, d: &Drawing, k: usize) -> Vec<Face> {
    let xs: Vec<_> = d.crossings().iter().filter(|c| c.first.0 < k && c.second.0 < k).copied().collect();
    let n = xs.len();
    if n == 0 {
        return Vec::new();
    }
    let walks: Vec<Vec<Side>> = (0..k).map(|j| d.walk(j)).collect();
    // Per curve, its crossings in order as `((arc, key), vertex, role)`.
    let mut along: Vec<Vec<((usize, u64), usize, usize)>> = vec![Vec::new(); k];
    for (v, c) in xs.iter().enumerate() {
        along[c.first.0].push(((c.first.1, c.key_first), v, 0));
        along[c.second.0].push(((c.second.1, c.key_second), v, 1));
    }
    let mut rank = vec![[0usize; 2]; n];
    for list in along.iter_mut() {
        list.sort_unstable();
        for (r, &(_, v, role)) in list.iter().enumerate() {
            rank[v][role] = r;
        }
    }
    let curve_of = |v: usize, role: usize| if role == 0 { xs[v].first.0 } else { xs[v].second.0 };
    // Half-edge `2 * role` leaves along that curve, `2 * role + 1` arrives.
    let rotation = |v: usize| -> [usize; 4] {
        if xs[v].second_goes_left {
            [0, 2, 1, 3]
        } else {
            [0, 3, 1, 2]
        }
    };
    let mut used = vec![false; 4 * n];
    let mut out = Vec::new();
    for start in 0..4 * n {
        if used[start] {
            continue;
        }
        let mut w = Vec::new();
        let mut cs = Vec::new();
        let mut cur = start;
        while !used[cur] {
            used[cur] = true;
            let (v, h) = (cur / 4, cur % 4);
            let role = h / 2;
            let j = curve_of(v, role);
            let list = &along[j];
            let m = list.len();
            let r = rank[v][role];
            let (entry, arrive_fwd) = if h % 2 == 0 {
                let next = list[(r + 1) % m];
                w.extend(segment(&walks[j], list[r].0, next.0));
                (next, true)
            } else {
                let prev = list[(r + m - 1) % m];
                w.extend(walk::reverse(s, &segment(&walks[j], prev.0, list[r].0)));
                (prev, false)
            };
            cs.push(j);
            let (_, u, role_u) = entry;
            let arrive = if arrive_fwd { 2 * role_u + 1 } else { 2 * role_u };
            let rot = rotation(u);
            let i = rot.iter().position(|&x| x == arrive).unwrap_or(0);
            cur = u * 4 + rot[(i + 3) % 4];
        }
        out.push(Face { walk: w, curves: cs });
    }
    out
}

/// Subsurface filled by `a` and `b`.
pub fn filled_subsurface(s: &CombSurface, a: &CurveClass, b: &CurveClass) -> Result<Filled> {
    filled_by(s, &[a.clone(), b.clone()])
}

/// Subsurface filled by distinct curves whose union is connected.
pub fn filled_by(s: &CombSurface, curves: &[CurveClass]) -> Result<Filled> {
    if curves.iter().any(|c| c.surface_id() != s.id()) {
        return Err(Error::SurfaceMismatch);
    }
    let k = curves.len();
    let ws: Vec<&[u32]> = curves.iter().map(|c| c.weights()).collect();
    let d = Drawing::new(s, &ws);
    let n = d.crossings().len();
    let mut uf = UnionFind::new(k);
    for c in d.crossings() {
        uf.union(c.first.0, c.second.0);
    }
    let distinct = curves.iter().enumerate().all(|(i, c)| !curves[i + 1..].contains(c));
    if k < 2 || !distinct || (0..k).any(|j| uf.find(j) != uf.find(0)) {
        let mut boundaries: Vec<CurveClass> = curves.iter().flat_map(|c| [c.clone(), c.clone()]).collect();
        boundaries.sort();
        return Ok(Filled {
            genus: 0,
            boundary_count: 2,
            boundaries,
            punctures: Vec::new(),
            filling: false,
        });
    }
    let faces: Vec<Vec<Side>> = faces(s, &d, k).into_iter().map(|f| f.walk).collect();
    let mut disks = 0i64;
    let mut boundaries = Vec::new();
    let mut punctures = Vec::new();
    for f in &faces {
        let red = walk::reduce_cyclic(s, f);
        if red.is_empty() {
            disks += 1;
            continue;
        }
        if let Some(v) = peripheral_vertex(s, &red) {
            match s.vertex_label(v) {
                VertexLabel::Marked => disks += 1,
                VertexLabel::Boundary(k) => punctures.push(k),
            }
            continue;
        }
        let c = CurveClass::from_walk(s, &red)
            .map_err(|_| Error::InvariantViolation("face boundary is not a simple curve".into()))?;
        boundaries.push(c);
    }
    let euler = -(n as i64) + disks;
    let bcount = faces.len() as i64 - disks;
    let twice_genus = 2 - euler - bcount;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::InvariantViolation("filled subsurface has no genus".into()));
    }
    boundaries.sort();
    punctures.sort_unstable();
    Ok(Filled {
        genus: (twice_genus / 2) as u32,
        boundary_count: bcount as u32,
        boundaries,
        punctures,
        filling: true,
    })
}
