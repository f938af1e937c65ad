//! Combinatorial motifs: pentagons in T(S_{1,3}), hexagons in C_s(S_{1,3})
//! with their shared curve, rooted BP sets, sharing pairs, spines and moves.
//!
//! Catalog searches work on ids and re-verify every invariant from the
//! intersection matrix. Sharing pairs and spines work on curves directly.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::cliques::Graph;
use crate::complexes::{vertex_intersection, ComplexKind, ComplexView, Vertex};
use crate::curve::{CurveClass, TopoType};
use crate::cut;
use crate::draw::Drawing;
use crate::error::{Error, Result};
use crate::filled::{self, filled_by, filled_subsurface};
use crate::intersect::intersection;
use crate::surface::CombSurface;
use crate::walk;

/// Vertex kinds used by the motif lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexType {
    Bp,
    /// Separating curve cutting off a pair of pants.
    P,
    /// Separating curve cutting off a one-holed torus.
    H,
    Other,
}

pub fn vertex_type(cat: &Catalog, v: Vertex) -> VertexType {
    match v {
        Vertex::Bp(..) => VertexType::Bp,
        Vertex::Curve(u) if !cat.separating[u] => VertexType::Other,
        Vertex::Curve(u) => {
            let tags = &cat.tags[u].tags;
            if tags.contains(&TopoType::HCurve) {
                VertexType::H
            } else if tags.contains(&TopoType::PCurve) {
                VertexType::P
            } else {
                VertexType::Other
            }
        }
    }
}

/// Pairwise intersection numbers of a vertex tuple, row by row.
pub fn certificate(cat: &Catalog, vs: &[Vertex]) -> Vec<Vec<u32>> {
    vs.iter().map(|&a| vs.iter().map(|&b| if a == b { 0 } else { vertex_intersection(cat, a, b) }).collect()).collect()
}

/// Whether `vs` is an induced cycle in the disjointness graph: consecutive
/// vertices are disjoint and all others intersect.
fn is_induced_cycle(cat: &Catalog, vs: &[Vertex]) -> bool {
    let n = vs.len();
    for j in 0..n {
        for k in j + 1..n {
            let adjacent = k == j + 1 || (j == 0 && k == n - 1);
            if vs[j] == vs[k] || (vertex_intersection(cat, vs[j], vs[k]) == 0) != adjacent {
                return false;
            }
        }
    }
    true
}

/// Induced cycles of length `len` in `g`, each listed once: the least
/// vertex first and the second vertex less than the last.
fn induced_cycles(g: &Graph, len: usize, budget: usize) -> (Vec<Vec<usize>>, bool) {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    for v0 in 0..g.len() {
        path.push(v0);
        let ok = extend_cycle(g, len, budget, &mut path, &mut out);
        path.pop();
        if !ok {
            return (out, true);
        }
    }
    (out, false)
}

fn extend_cycle(g: &Graph, len: usize, budget: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> bool {
    let v0 = path[0];
    let last = path[path.len() - 1];
    let cands: Vec<usize> = g.neighbours(last).filter(|&v| v > v0 && !path.contains(&v)).collect();
    for v in cands {
        let k = path.len();
        // v is adjacent to `last` only, except that the closing vertex is
        // also adjacent to v0.
        let closing = k == len - 1;
        let bad = path[..k - 1].iter().enumerate().any(|(i, &u)| {
            let want = closing && i == 0;
            g.has_edge(u, v) != want
        });
        if bad || (closing && v < path[1]) {
            continue;
        }
        path.push(v);
        if closing {
            if out.len() >= budget {
                path.pop();
                return false;
            }
            out.push(path.clone());
        } else if !extend_cycle(g, len, budget, path, out) {
            path.pop();
            return false;
        }
        path.pop();
    }
    true
}

/// Five T-vertices with `i(v_j, v_{j+1}) = 0` and `i(v_j, v_{j+2}) != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pentagon {
    pub vertices: [Vertex; 5],
}

impl Pentagon {
    pub fn new(cat: &Catalog, vertices: [Vertex; 5]) -> Result<Pentagon> {
        if !is_induced_cycle(cat, &vertices) {
            return Err(Error::InvariantViolation("not a pentagon".into()));
        }
        Ok(Pentagon { vertices })
    }
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Found<T> {
    pub items: Vec<T>,
    /// The budget stopped the search.
    pub truncated: bool,
}

fn require_s13(cat: &Catalog) -> Result<()> {
    let s = &cat.surface;
    if (s.genus(), s.boundary_count()) != (1, 3) {
        return Err(Error::Unsupported(format!(
            "motif search needs S_(1,3), got S_({},{})",
            s.genus(),
            s.boundary_count()
        )));
    }
    Ok(())
}

/// All pentagons of a T-view of `S_{1,3}`, at most `budget` of them.
pub fn find_pentagons(cat: &Catalog, view: &ComplexView, budget: usize) -> Result<Found<Pentagon>> {
    require_s13(cat)?;
    if view.kind != ComplexKind::T {
        return Err(Error::Unsupported("pentagons live in a T-view".into()));
    }
    let (cycles, truncated) = induced_cycles(&view.graph, 5, budget);
    let mut items = Vec::with_capacity(cycles.len());
    for c in cycles {
        let vs = [0, 1, 2, 3, 4].map(|k| view.vertices[c[k]]);
        items.push(Pentagon::new(cat, vs)?);
    }
    Ok(Found { items, truncated })
}

/// The configuration `(h, p, BP, BP, p)` read as `(c, b1, a1, a2, b2)`,
/// with the root of `{a1, a2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPattern {
    pub c: usize,
    pub b1: usize,
    pub b2: usize,
    pub a1: Vertex,
    pub a2: Vertex,
    pub root: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagonTaxonomy {
    pub labels: [VertexType; 5],
    /// Rotations at which two BP-vertices flanked by p-vertices occur.
    pub patterns: Vec<RootPattern>,
}

/// Labels the vertices and checks the pentagon lemmas: not all vertices are
/// BPs; two adjacent BPs flanked by p-vertices force an h-vertex opposite,
/// whose curve, the two p-curves and the root of the two BPs are disjoint,
/// and the h-curve bounds the subsurface filled by the two p-curves.
pub fn pentagon_taxonomy(cat: &Catalog, pent: &Pentagon) -> Result<PentagonTaxonomy> {
    require_s13(cat)?;
    let vs = &pent.vertices;
    if !is_induced_cycle(cat, vs) {
        return Err(Error::InvariantViolation("not a pentagon".into()));
    }
    let labels = vs.map(|v| vertex_type(cat, v));
    if labels.iter().all(|&l| l == VertexType::Bp) {
        return Err(Error::InvariantViolation("pentagon of BP-vertices only".into()));
    }
    let s = &cat.surface;
    let mut patterns = Vec::new();
    for r in 0..5 {
        let at = |k: usize| (r + k) % 5;
        let matches = labels[at(2)] == VertexType::Bp
            && labels[at(3)] == VertexType::Bp
            && labels[at(1)] == VertexType::P
            && labels[at(4)] == VertexType::P;
        if !matches {
            continue;
        }
        if labels[at(0)] != VertexType::H {
            return Err(Error::InvariantViolation(format!("vertex {} of the pentagon is not an h-vertex", at(0))));
        }
        let curve = |k: usize| vs[at(k)].curves()[0];
        let (c, b1, b2) = (curve(0), curve(1), curve(4));
        let (a1, a2) = (vs[at(2)], vs[at(3)]);
        let rooted = root_curve(cat, &[bp_pair(a1), bp_pair(a2)])
            .map_err(|_| Error::InvariantViolation("adjacent BP-vertices are not rooted".into()))?;
        let root = rooted.root.ok_or_else(|| Error::InvariantViolation("two BPs without a root".into()))?;
        if cat.i(root, b1) != 0 || cat.i(root, b2) != 0 || cat.i(root, c) != 0 {
            return Err(Error::InvariantViolation("root curve meets the h- or p-vertices".into()));
        }
        let f = filled_subsurface(s, &cat.curves[b1], &cat.curves[b2])?;
        if !f.is_type(0, 4) || !f.boundaries.contains(&cat.curves[c]) {
            return Err(Error::InvariantViolation("h-vertex does not bound the filled p-curves".into()));
        }
        patterns.push(RootPattern { c, b1, b2, a1, a2, root });
    }
    Ok(PentagonTaxonomy { labels, patterns })
}

fn bp_pair(v: Vertex) -> (usize, usize) {
    match v {
        Vertex::Bp(u, w) => (u, w),
        Vertex::Curve(u) => (u, u),
    }
}

/// A set of BPs forming one BP-equivalence class through a common curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedSimplex {
    pub bps: Vec<(usize, usize)>,
    /// Determined when there are at least two BPs.
    pub root: Option<usize>,
}

/// Detects rootedness of a set of catalog BPs.
pub fn root_curve(cat: &Catalog, sigma: &[(usize, usize)]) -> Result<RootedSimplex> {
    let mut bps: Vec<(usize, usize)> = sigma.iter().map(|&(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
    bps.sort_unstable();
    bps.dedup();
    if bps.is_empty() || bps.iter().any(|&(u, v)| !cat.is_bp(u, v)) {
        return Err(Error::NotRooted);
    }
    let mut curves: Vec<usize> = bps.iter().flat_map(|&(u, v)| [u, v]).collect();
    curves.sort_unstable();
    curves.dedup();
    for (k, &u) in curves.iter().enumerate() {
        for &v in &curves[k + 1..] {
            if !cat.is_bp(u, v) {
                return Err(Error::NotRooted);
            }
        }
    }
    if bps.len() == 1 {
        return Ok(RootedSimplex { bps, root: None });
    }
    let (u, v) = bps[0];
    let common: Vec<usize> = [u, v].into_iter().filter(|&x| bps.iter().all(|&(a, b)| a == x || b == x)).collect();
    match common.as_slice() {
        [r] => Ok(RootedSimplex { bps, root: Some(*r) }),
        _ => Err(Error::NotRooted),
    }
}

/// Six curves of C_s(S_{1,3}) forming a hexagon, p-vertices at the even
/// positions: `(α1, β3, α2, β1, α3, β2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hexagon {
    pub curves: [usize; 6],
}

impl Hexagon {
    pub fn new(cat: &Catalog, curves: [usize; 6]) -> Result<Hexagon> {
        let vs = curves.map(Vertex::Curve);
        if !curves.iter().all(|&u| cat.separating[u]) || !is_induced_cycle(cat, &vs) {
            return Err(Error::InvariantViolation("not a hexagon".into()));
        }
        for k in 0..6 {
            let want = if k % 2 == 0 { VertexType::P } else { VertexType::H };
            if vertex_type(cat, vs[k]) != want {
                return Err(Error::InvariantViolation("hexagon vertices do not alternate p and h".into()));
            }
        }
        Ok(Hexagon { curves })
    }

    /// The p-curves `α1, α2, α3`.
    pub fn alphas(&self) -> [usize; 3] {
        [self.curves[0], self.curves[2], self.curves[4]]
    }

    /// The curves mapped through a catalog id map.
    pub fn map(&self, cat: &Catalog, f: impl Fn(usize) -> usize) -> Result<Hexagon> {
        Hexagon::new(cat, self.curves.map(f))
    }
}

/// All hexagons of a C_s-view of `S_{1,3}`, at most `budget` of them.
pub fn find_hexagons(cat: &Catalog, view: &ComplexView, budget: usize) -> Result<Found<Hexagon>> {
    require_s13(cat)?;
    if view.kind != ComplexKind::Cs {
        return Err(Error::Unsupported("hexagons live in a C_s-view".into()));
    }
    let (cycles, truncated) = induced_cycles(&view.graph, 6, budget);
    let mut items = Vec::with_capacity(cycles.len());
    for c in cycles {
        let mut ids = [0, 1, 2, 3, 4, 5].map(|k| view.vertices[c[k]].curves()[0]);
        if vertex_type(cat, Vertex::Curve(ids[0])) != VertexType::P {
            ids.rotate_left(1);
        }
        items.push(Hexagon::new(cat, ids)?);
    }
    Ok(Found { items, truncated })
}

/// The shared curve of a hexagon with the data checked on the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedCurve {
    pub c: usize,
    /// Non-separating catalog curves examined.
    pub searched: usize,
    /// Boundary label inside the two-holed torus side of each `α_i`.
    pub sides: [u32; 3],
    /// `i(α_i, α_{i+1})`.
    pub alpha_intersections: [u32; 3],
}

/// The catalog curve disjoint from all six curves, checked unique.
pub fn hexagon_shared_curve(cat: &Catalog, hex: &Hexagon) -> Result<SharedCurve> {
    require_s13(cat)?;
    let hex = Hexagon::new(cat, hex.curves)?;
    let s = &cat.surface;
    let al = hex.alphas();
    let mut sides = [0u32; 3];
    for (k, &a) in al.iter().enumerate() {
        let c = cut::census(s, core::slice::from_ref(&cat.curves[a]))?;
        let q = c
            .components
            .iter()
            .find(|q| q.genus == 1)
            .ok_or_else(|| Error::InvariantViolation("p-curve without a genus-one side".into()))?;
        sides[k] = match q.punctures.as_slice() {
            [x] => *x,
            _ => return Err(Error::InvariantViolation("genus-one side of a p-curve is not S_(1,2)".into())),
        };
    }
    if sides[0] == sides[1] || sides[1] == sides[2] || sides[0] == sides[2] {
        return Err(Error::InvariantViolation("p-vertices of a hexagon share a boundary side".into()));
    }
    let alpha_intersections = [0, 1, 2].map(|k| cat.i(al[k], al[(k + 1) % 3]));
    if alpha_intersections != [2, 2, 2] {
        return Err(Error::InvariantViolation("adjacent p-vertices of a hexagon do not meet twice".into()));
    }
    let nonsep: Vec<usize> = (0..cat.len()).filter(|&u| !cat.separating[u]).collect();
    let found: Vec<usize> = nonsep.iter().copied().filter(|&u| hex.curves.iter().all(|&h| cat.i(u, h) == 0)).collect();
    match found.as_slice() {
        [] => Err(Error::NotFoundInCatalog),
        [c] => Ok(SharedCurve { c: *c, searched: nonsep.len(), sides, alpha_intersections }),
        more => Err(Error::NonUniqueInCatalog(more.len())),
    }
}

/// The two h-curves around the p-curve at even position `k`.
fn star(h: &Hexagon, k: usize) -> (usize, [usize; 2]) {
    let mut n = [h.curves[(k + 1) % 6], h.curves[(k + 5) % 6]];
    n.sort_unstable();
    (h.curves[k], n)
}

/// When the hexagons share two edges at a p-vertex, checks that they have
/// the same shared curve. Returns whether the hypothesis held.
pub fn hexagons_share_c(cat: &Catalog, h1: &Hexagon, h2: &Hexagon) -> Result<bool> {
    let stars1: Vec<_> = [0, 2, 4].iter().map(|&k| star(h1, k)).collect();
    let shared = [0, 2, 4].iter().any(|&k| stars1.contains(&star(h2, k)));
    if !shared {
        return Ok(false);
    }
    let c1 = hexagon_shared_curve(cat, h1)?.c;
    let c2 = hexagon_shared_curve(cat, h2)?.c;
    if c1 != c2 {
        return Err(Error::InvariantViolation(format!("hexagons sharing a p-star have shared curves {c1} and {c2}")));
    }
    Ok(true)
}

/// Two h-curves sharing the non-separating curve `shared`; `deltas` are the
/// other boundary curves of the subsurface they fill.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharingPair {
    pub a: CurveClass,
    pub b: CurveClass,
    pub shared: CurveClass,
    pub deltas: Vec<CurveClass>,
    /// Surface boundary labels among the other boundary components.
    pub delta_punctures: Vec<u32>,
}

fn is_h_curve(s: &CombSurface, c: &CurveClass) -> bool {
    c.topo_type(s).tags.contains(&TopoType::HCurve)
}

fn hyperbolic_enough(s: &CombSurface, min_abs_euler: i64) -> bool {
    s.genus() >= 2 && -s.euler() >= min_abs_euler
}

/// Tests whether two h-curves form a sharing pair.
pub fn is_sharing_pair(s: &CombSurface, a: &CurveClass, b: &CurveClass) -> Result<Option<SharingPair>> {
    if !hyperbolic_enough(s, 3) || !is_h_curve(s, a) || !is_h_curve(s, b) || intersection(s, a, b)? != 4 {
        return Ok(None);
    }
    let f = filled_subsurface(s, a, b)?;
    if !f.is_type(0, 4) {
        return Ok(None);
    }
    let bs = &f.boundaries;
    let twice: Vec<&CurveClass> = bs.windows(2).filter(|w| w[0] == w[1]).map(|w| &w[0]).collect();
    let beta = match twice.as_slice() {
        [x] if !x.is_separating(s) && bs.iter().filter(|y| y == x).count() == 2 => (*x).clone(),
        _ => return Ok(None),
    };
    let mut deltas: Vec<CurveClass> = bs.iter().filter(|&y| *y != beta).cloned().collect();
    deltas.dedup();
    if deltas.is_empty() {
        return Ok(None);
    }
    let census = cut::census_unchecked(s, &deltas)?;
    let inside = cut::locate(s, &deltas, &census, &beta)?;
    if (0..census.components.len()).filter(|&q| q != inside).count() > 1 {
        return Ok(None);
    }
    Ok(Some(SharingPair { a: a.clone(), b: b.clone(), shared: beta, deltas, delta_punctures: f.punctures }))
}

/// Separating curves `(w, x, y, z)` certifying a sharing pair by
/// disjointness data alone, as catalog ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub w: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// Searches the catalog for witnesses of `{a, b}` and cross-checks the
/// answer against [`is_sharing_pair`]. `Ok(None)` means both agree that
/// `{a, b}` is not a sharing pair; a sharing pair without witnesses in the
/// catalog is `Inconclusive`.
pub fn sharing_pair_witnesses(cat: &Catalog, a: &CurveClass, b: &CurveClass) -> Result<Option<Witnesses>> {
    let s = &cat.surface;
    if !hyperbolic_enough(s, 4) {
        return Err(Error::Unsupported("sharing pair witnesses need genus >= 2 and |chi| >= 4".into()));
    }
    if !is_h_curve(s, a) || !is_h_curve(s, b) {
        return Err(Error::Unsupported("sharing pair witnesses need two h-curves".into()));
    }
    let found = search_witnesses(cat, a, b)?;
    let sharing = is_sharing_pair(s, a, b)?.is_some();
    match (found, sharing) {
        (Some(w), true) => Ok(Some(w)),
        (None, false) => Ok(None),
        (Some(_), false) => Err(Error::InvariantViolation("witnesses found for a pair that shares no curve".into())),
        (None, true) => Err(Error::Inconclusive(format!("no witnesses among {} catalog curves", cat.len()))),
    }
}

fn search_witnesses(cat: &Catalog, a: &CurveClass, b: &CurveClass) -> Result<Option<Witnesses>> {
    let s = &cat.surface;
    if intersection(s, a, b)? == 0 {
        return Ok(None);
    }
    let sep: Vec<usize> = (0..cat.len()).filter(|&u| cat.separating[u]).collect();
    let ia: Vec<u64> = sep.iter().map(|&u| intersection(s, &cat.curves[u], a)).collect::<Result<_>>()?;
    let ib: Vec<u64> = sep.iter().map(|&u| intersection(s, &cat.curves[u], b)).collect::<Result<_>>()?;
    let ws: Vec<usize> = (0..sep.len()).filter(|&k| ia[k] == 0 && ib[k] == 0).collect();
    let xs: Vec<usize> = (0..sep.len()).filter(|&k| ia[k] != 0 && ib[k] == 0).collect();
    let ys: Vec<usize> = (0..sep.len()).filter(|&k| ia[k] == 0 && ib[k] != 0).collect();
    for &kz in &ws {
        let z = sep[kz];
        let zc = &cat.curves[z];
        let census = cut::census(s, core::slice::from_ref(zc))?;
        let side_a = cut::locate(s, core::slice::from_ref(zc), &census, a)?;
        let side_b = cut::locate(s, core::slice::from_ref(zc), &census, b)?;
        let q = &census.components[side_a];
        if side_a != side_b || q.genus != 2 || q.boundary_count() != 1 {
            continue;
        }
        let Some(&kw) = ws.iter().find(|&&k| cat.i(sep[k], z) != 0) else {
            continue;
        };
        for &kx in xs.iter().filter(|&&k| cat.i(sep[k], z) != 0) {
            if let Some(&ky) = ys.iter().find(|&&k| cat.i(sep[k], z) != 0 && cat.i(sep[k], sep[kx]) == 0) {
                return Ok(Some(Witnesses { w: sep[kw], x: sep[kx], y: sep[ky], z }));
            }
        }
    }
    Ok(None)
}

/// Three non-separating curves `α-β-γ` meeting in a chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spine {
    pub alpha: CurveClass,
    pub beta: CurveClass,
    pub gamma: CurveClass,
    /// Boundaries of the handles filled by `α, β` and by `β, γ`.
    pub a: CurveClass,
    pub b: CurveClass,
    /// `[i(α,β), i(β,γ), i(α,γ)]`.
    pub intersections: [u64; 3],
    /// A collapsible triangle was removed to make the complement connected.
    pub triple_point: bool,
}

fn handle_boundary(s: &CombSurface, x: &CurveClass, y: &CurveClass) -> Result<Option<CurveClass>> {
    let f = filled_subsurface(s, x, y)?;
    if !f.is_type(1, 1) {
        return Ok(None);
    }
    Ok(f.boundaries.first().cloned())
}

/// Complement components of three curves, after collapsing one triangle
/// face bounded by all three into a triple point.
fn spine_complement(s: &CombSurface, curves: [&CurveClass; 3]) -> (usize, bool) {
    let ws = curves.map(|c| c.weights());
    let d = Drawing::new(s, &ws);
    let n = d.complement_components(s);
    let triangle = filled::faces(s, &d, 3).iter().any(|f| {
        let mut cs = f.curves.clone();
        cs.sort_unstable();
        cs == [0, 1, 2] && walk::reduce_cyclic(s, &f.walk).is_empty()
    });
    if triangle {
        (n - 1, true)
    } else {
        (n, false)
    }
}

/// Tests the spine conditions for `α-β-γ`.
pub fn is_spine(s: &CombSurface, alpha: &CurveClass, beta: &CurveClass, gamma: &CurveClass) -> Result<Option<Spine>> {
    if !hyperbolic_enough(s, 3) || alpha == beta || beta == gamma || alpha == gamma {
        return Ok(None);
    }
    if alpha.is_separating(s) || beta.is_separating(s) || gamma.is_separating(s) {
        return Ok(None);
    }
    let ab = intersection(s, alpha, beta)?;
    let bg = intersection(s, beta, gamma)?;
    let ag = intersection(s, alpha, gamma)?;
    if ab != 1 || bg != 1 || ag > 1 {
        return Ok(None);
    }
    let (Some(a), Some(b)) = (handle_boundary(s, alpha, beta)?, handle_boundary(s, beta, gamma)?) else {
        return Ok(None);
    };
    match is_sharing_pair(s, &a, &b)? {
        Some(p) if p.shared == *beta => {}
        _ => return Ok(None),
    }
    let (components, triple_point) = spine_complement(s, [alpha, beta, gamma]);
    if components != 1 {
        return Ok(None);
    }
    Ok(Some(Spine {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        a,
        b,
        intersections: [ab, bg, ag],
        triple_point,
    }))
}

/// Spines `α-β-γ` over catalog curves, read off the intersection matrix and
/// tested in order of `β`, then `α < γ`. At most `budget` candidate triples
/// are tested.
pub fn find_spines(cat: &Catalog, budget: usize) -> Result<Found<([usize; 3], Spine)>> {
    let s = &cat.surface;
    let ns: Vec<usize> = (0..cat.len()).filter(|&u| !cat.separating[u]).collect();
    let mut items = Vec::new();
    let mut tested = 0;
    for &beta in &ns {
        let legs: Vec<usize> = ns.iter().copied().filter(|&u| cat.i(u, beta) == 1).collect();
        for (k, &alpha) in legs.iter().enumerate() {
            for &gamma in &legs[k + 1..] {
                if cat.i(alpha, gamma) > 1 {
                    continue;
                }
                if tested == budget {
                    return Ok(Found { items, truncated: true });
                }
                tested += 1;
                let c = &cat.curves;
                if let Some(sp) = is_spine(s, &c[alpha], &c[beta], &c[gamma])? {
                    items.push(([alpha, beta, gamma], sp));
                }
            }
        }
    }
    Ok(Found { items, truncated: false })
}

/// The move `α-β-γ ↦ α-β-γ'`, when both ends and `γ-β-γ'` are spines.
/// Checks that `γ'` meets a boundary curve of the subsurface filled by
/// `α, β, γ`.
pub fn spine_move(s: &CombSurface, spine: &Spine, gamma2: &CurveClass) -> Result<Option<Spine>> {
    let Some(next) = is_spine(s, &spine.alpha, &spine.beta, gamma2)? else {
        return Ok(None);
    };
    if is_spine(s, &spine.gamma, &spine.beta, gamma2)?.is_none() {
        return Ok(None);
    }
    let f = filled_by(s, &[spine.alpha.clone(), spine.beta.clone(), spine.gamma.clone()])?;
    let mut meets = false;
    for d in &f.boundaries {
        if intersection(s, gamma2, d)? != 0 {
            meets = true;
        }
    }
    if !meets {
        return Err(Error::InvariantViolation("moved leg misses the boundary of the spine".into()));
    }
    Ok(Some(next))
}

/// A vertex with its curve ids mapped.
pub fn map_vertex(v: Vertex, f: impl Fn(usize) -> usize) -> Vertex {
    match v {
        Vertex::Curve(u) => Vertex::Curve(f(u)),
        Vertex::Bp(u, w) => {
            let (x, y) = (f(u), f(w));
            Vertex::Bp(x.min(y), x.max(y))
        }
    }
}

/// Catalog ids of every unordered pair of catalog h-curves meeting four
/// times.
pub fn h_pairs_meeting_four_times(cat: &Catalog) -> Vec<(usize, usize)> {
    let hs: Vec<usize> = (0..cat.len()).filter(|&u| vertex_type(cat, Vertex::Curve(u)) == VertexType::H).collect();
    let mut out = vec![];
    for (k, &u) in hs.iter().enumerate() {
        for &v in &hs[k + 1..] {
            if cat.i(u, v) == 4 {
                out.push((u, v));
            }
        }
    }
    out
}
