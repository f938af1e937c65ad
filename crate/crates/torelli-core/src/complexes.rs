//! Finite induced subcomplexes of C(S), C_s(S) and T(S) over a catalog, and
//! the bookkeeping attached to their simplices.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::cliques::Graph;
use crate::curve::{is_bp, CurveClass, TopoType};
use crate::cut::{self, CutResult};
use crate::error::{Error, Result};
use crate::intersect::intersection;
use crate::marking;
use crate::surface::CombSurface;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComplexKind {
    C,
    Cs,
    T,
}

/// A vertex of a view: a catalog curve or an unordered catalog BP.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    Curve(usize),
    Bp(usize, usize),
}

impl Vertex {
    pub fn curves(&self) -> Vec<usize> {
        match *self {
            Vertex::Curve(u) => vec![u],
            Vertex::Bp(u, v) => vec![u, v],
        }
    }
}

/// Flag complex of pairwise disjoint vertices.
#[derive(Clone, Debug)]
pub struct ComplexView {
    pub kind: ComplexKind,
    /// Curves by id first, then BPs in catalog order.
    pub vertices: Vec<Vertex>,
    pub graph: Graph,
}

impl ComplexView {
    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Sum of the pairwise intersection numbers of the curves of two vertices.
pub fn vertex_intersection(cat: &Catalog, a: Vertex, b: Vertex) -> u32 {
    let mut t = 0;
    for u in a.curves() {
        for v in b.curves() {
            t += cat.i(u, v);
        }
    }
    t
}

pub fn build_complex(cat: &Catalog, kind: ComplexKind) -> ComplexView {
    let mut vertices: Vec<Vertex> = (0..cat.len())
        .filter(|&u| kind == ComplexKind::C || cat.separating[u])
        .map(Vertex::Curve)
        .collect();
    if kind == ComplexKind::T {
        vertices.extend(cat.bps.iter().map(|&(u, v)| Vertex::Bp(u, v)));
    }
    let graph = Graph::from_fn(vertices.len(), |a, b| vertex_intersection(cat, vertices[a], vertices[b]) == 0);
    ComplexView { kind, vertices, graph }
}

/// Maximal simplices as sorted vertex lists of the view, at most `cap`; the
/// flag reports truncation.
pub fn maximal_simplices(view: &ComplexView, cap: usize) -> (Vec<Vec<Vertex>>, bool) {
    let (cl, truncated) = view.graph.maximal_cliques(cap);
    let out = cl.into_iter().map(|c| c.into_iter().map(|k| view.vertices[k]).collect()).collect();
    (out, truncated)
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Size of a simplex of maximal dimension in T(S_{g,p}).
pub fn torelli_simplex_size(g: u32, p: u32) -> u64 {
    (g as u64).saturating_sub(1) + binom((g + p) as u64 - 1, 2)
}

/// Size of a simplex of maximal dimension in C_s(S_{g,p}).
pub fn separating_simplex_size(g: u32, p: u32) -> u64 {
    (2 * g + p) as u64 - 3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub g: u32,
    pub p: u32,
    pub catalog_size: usize,
    pub depth: u32,
    pub weight_cap: u64,
    /// Witness T-simplex: the h-curves `α_i` and all BPs of the necklace.
    pub witness: Vec<Vertex>,
    pub expected_size: u64,
    pub dim: i64,
    pub witness_is_simplex: bool,
    /// Largest simplex of the catalog T-view.
    pub max_t_size: usize,
    /// Witness C_s-simplex of separating marking curves.
    pub cs_witness: Vec<usize>,
    pub cs_expected_size: u64,
    pub cs_dim: i64,
    pub cs_witness_is_simplex: bool,
    /// Its cut surface is `g` handles and `g + p - 2` pants.
    pub cs_witness_cut_ok: bool,
    pub max_cs_size: usize,
    /// `α_i` are h-curves, the necklace is a BP-equivalence class in the
    /// catalog, and a largest catalog T-simplex has the same shape; only
    /// checked when `g + p >= 4`.
    pub structure_ok: Option<bool>,
    pub pass: bool,
}

/// The two witness simplices for the dimension formulas, as catalog ids.
fn witness_curves(s: &CombSurface, cat: &Catalog) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let find = |c: &CurveClass, what: &str| {
        cat.find_class(c)?.ok_or_else(|| Error::CatalogTooSmall(format!("{what} {:?}", c.weights())))
    };
    let alphas = marking::alpha_curves(s)?
        .iter()
        .map(|c| find(c, "alpha"))
        .collect::<Result<Vec<_>>>()?;
    let betas = marking::necklace(s)?
        .iter()
        .map(|c| find(c, "necklace curve"))
        .collect::<Result<Vec<_>>>()?;
    let mut seps: Vec<CurveClass> = marking::alpha_curves(s)?;
    for j in 0..s.gadgets().len() {
        if let Some(c) = marking::prefix_curve(s, j) {
            seps.push(c);
        }
    }
    let mut cs = seps.iter().map(|c| find(c, "separating marking curve")).collect::<Result<Vec<_>>>()?;
    cs.sort_unstable();
    cs.dedup();
    Ok((alphas, betas, cs))
}

/// Checks both dimension formulas on a catalog containing the marking.
pub fn dim_formula_check(cat: &Catalog) -> Result<DimReport> {
    let s = &cat.surface;
    let (g, p) = (s.genus(), s.boundary_count());
    if g < 1 || g + p < 3 {
        return Err(Error::Unsupported(format!("dimension formula needs g >= 1 and g + p >= 3, got ({g},{p})")));
    }
    let (alphas, betas, cs) = witness_curves(s, cat)?;
    let mut witness: Vec<Vertex> = alphas.iter().map(|&u| Vertex::Curve(u)).collect();
    let mut bps_present = true;
    for (k, &u) in betas.iter().enumerate() {
        for &v in &betas[k + 1..] {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            bps_present &= cat.is_bp(a, b);
            witness.push(Vertex::Bp(a, b));
        }
    }
    witness.sort();
    let t = crate::complexes::build_complex(cat, ComplexKind::T);
    let idx: Vec<Option<usize>> = witness.iter().map(|&v| t.index_of(v)).collect();
    let witness_is_simplex =
        bps_present && idx.iter().all(|x| x.is_some()) && t.graph.is_clique(&idx.iter().flatten().copied().collect::<Vec<_>>());
    let max_t = t.graph.maximum_clique();
    let expected_size = torelli_simplex_size(g, p);

    let csv = build_complex(cat, ComplexKind::Cs);
    let cs_idx: Vec<usize> = cs.iter().filter_map(|&u| csv.index_of(Vertex::Curve(u))).collect();
    let cs_witness_is_simplex = cs_idx.len() == cs.len() && csv.graph.is_clique(&cs_idx);
    let cs_expected_size = separating_simplex_size(g, p);
    let cs_curves: Vec<CurveClass> = cs.iter().map(|&u| cat.curves[u].clone()).collect();
    let cs_witness_cut_ok = cs_witness_is_simplex && {
        let cut = cut::census(s, &cs_curves)?;
        let handles = cut.components.iter().filter(|q| q.is_handle()).count();
        let pants = cut.components.iter().filter(|q| q.is_pants()).count();
        handles == g as usize && pants == (g + p - 2) as usize && cut.components.len() == handles + pants
    };
    let max_cs = csv.graph.maximum_clique();

    let structure_ok = if g + p >= 4 {
        let alphas_h = alphas.iter().all(|&u| cat.tags[u].tags.contains(&TopoType::HCurve));
        let class_ok = betas.iter().all(|&u| !cat.separating[u]) && is_bp_class(cat, &betas);
        let max_vertices: Vec<Vertex> = max_t.iter().map(|&k| t.vertices[k]).collect();
        Some(alphas_h && class_ok && maximal_shape_ok(cat, g, p, &max_vertices))
    } else {
        None
    };
    let pass = witness_is_simplex
        && witness.len() as u64 == expected_size
        && max_t.len() as u64 <= expected_size
        && cs_witness_is_simplex
        && cs.len() as u64 == cs_expected_size
        && cs_witness_cut_ok
        && max_cs.len() as u64 <= cs_expected_size
        && structure_ok != Some(false);
    Ok(DimReport {
        g,
        p,
        catalog_size: cat.len(),
        depth: cat.depth,
        weight_cap: cat.weight_cap,
        witness,
        expected_size,
        dim: expected_size as i64 - 1,
        witness_is_simplex,
        max_t_size: max_t.len(),
        cs_witness: cs,
        cs_expected_size,
        cs_dim: cs_expected_size as i64 - 1,
        cs_witness_is_simplex,
        cs_witness_cut_ok,
        max_cs_size: max_cs.len(),
        structure_ok,
        pass,
    })
}

/// Pairwise BPs, and no other catalog curve forms a BP with all of them.
fn is_bp_class(cat: &Catalog, ids: &[usize]) -> bool {
    let pairwise = ids
        .iter()
        .enumerate()
        .all(|(k, &u)| ids[k + 1..].iter().all(|&v| cat.is_bp(u.min(v), u.max(v))));
    let closed = (0..cat.len())
        .filter(|u| !ids.contains(u))
        .all(|w| !ids.iter().all(|&u| cat.is_bp(u.min(w), u.max(w))));
    pairwise && closed
}

/// A maximal T-simplex consists of `g - 1` h-curves and all BPs of
/// `g + p - 1` curves.
fn maximal_shape_ok(cat: &Catalog, g: u32, p: u32, sigma: &[Vertex]) -> bool {
    let mut hs = 0;
    let mut bp_curves = BTreeSet::new();
    let mut bp_count = 0;
    for v in sigma {
        match *v {
            Vertex::Curve(u) => {
                if !cat.tags[u].tags.contains(&TopoType::HCurve) {
                    return false;
                }
                hs += 1;
            }
            Vertex::Bp(u, w) => {
                bp_curves.insert(u);
                bp_curves.insert(w);
                bp_count += 1;
            }
        }
    }
    let m = (g + p - 1) as usize;
    hs == (g - 1) as usize && bp_curves.len() == m && bp_count == m * (m - 1) / 2
}

fn check_disjoint(s: &CombSurface, sigma: &[CurveClass]) -> Result<CutResult> {
    cut::census(s, sigma)
}

/// Graph on a maximal simplex of separating curves: an edge joins two curves
/// bounding a common component of the cut surface.
pub fn adjacency_graph(s: &CombSurface, sigma: &[CurveClass]) -> Result<Graph> {
    let expected = separating_simplex_size(s.genus(), s.boundary_count()) as usize;
    if sigma.iter().any(|c| !c.is_separating(s)) {
        return Err(Error::NotATorelliVertex("adjacency graph needs separating curves".into()));
    }
    if sigma.len() != expected {
        return Err(Error::NotMaximal { size: sigma.len(), expected });
    }
    let cut = check_disjoint(s, sigma)?;
    let mut g = Graph::new(sigma.len());
    for q in &cut.components {
        for &(a, _) in &q.curve_sides {
            for &(b, _) in &q.curve_sides {
                if a != b {
                    g.add_edge(a, b);
                }
            }
        }
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Abc {
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbcTypes {
    pub types: Vec<Abc>,
    /// BP-equivalence classes of size at least two, as indices into σ.
    pub classes: Vec<Vec<usize>>,
}

/// a-type: separating; b-type: in a BP-equivalence class of size at least
/// two inside σ; c-type: the remaining non-separating curves.
pub fn abc_types(s: &CombSurface, sigma: &[CurveClass]) -> Result<AbcTypes> {
    check_disjoint(s, sigma)?;
    let n = sigma.len();
    let sep: Vec<bool> = sigma.iter().map(|c| c.is_separating(s)).collect();
    let mut uf = crate::surface::UnionFind::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !sep[u] && !sep[v] && is_bp(s, &sigma[u], &sigma[v])?.is_some() {
                uf.union(u, v);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in (0..n).filter(|&u| !sep[u]) {
        let r = uf.find(u);
        match classes.iter_mut().find(|c| uf.find(c[0]) == r) {
            Some(c) => c.push(u),
            None => classes.push(vec![u]),
        }
    }
    classes.retain(|c| c.len() >= 2);
    let types = (0..n)
        .map(|u| {
            if sep[u] {
                Abc::A
            } else if classes.iter().any(|c| c.contains(&u)) {
                Abc::B
            } else {
                Abc::C
            }
        })
        .collect();
    Ok(AbcTypes { types, classes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    /// Number of separating curves plus `Σ (q_i - 1)` over BP classes, the
    /// generator count of the twist subgroup taken as its rank.
    pub rank: usize,
    pub nu: usize,
    pub omega: usize,
    pub rank_le_nu_minus_one: bool,
    pub rank_plus_omega_le: bool,
    /// When `rank + Ω = 2g + p - 3`, every component has `|χ| <= 2`.
    pub equality_case: bool,
    pub equality_components_ok: bool,
    pub pass: bool,
}

pub fn torelli_rank(s: &CombSurface, sigma: &[CurveClass]) -> Result<RankReport> {
    let abc = abc_types(s, sigma)?;
    let cut = cut::census(s, sigma)?;
    let a = abc.types.iter().filter(|t| **t == Abc::A).count();
    let rank = a + abc.classes.iter().map(|c| c.len() - 1).sum::<usize>();
    let nu = cut.components.len();
    let omega = cut.components.iter().filter(|q| !q.is_handle() && !q.is_pants()).count();
    let bound = separating_simplex_size(s.genus(), s.boundary_count()) as usize;
    let rank_le_nu_minus_one = rank < nu;
    let rank_plus_omega_le = rank + omega <= bound;
    let equality_case = rank + omega == bound;
    let equality_components_ok = !equality_case || cut.components.iter().all(|q| q.euler.abs() <= 2);
    Ok(RankReport {
        rank,
        nu,
        omega,
        rank_le_nu_minus_one,
        rank_plus_omega_le,
        equality_case,
        equality_components_ok,
        pass: rank_le_nu_minus_one && rank_plus_omega_le && equality_components_ok,
    })
}

/// Components of the cut surface joined by the curves of τ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionGraph {
    /// `(genus, boundary count)` per component.
    pub vertices: Vec<(u32, u32)>,
    /// Per curve of τ, the components on its two sides.
    pub edges: Vec<(usize, usize)>,
}

impl ReductionGraph {
    pub fn loops(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&k| self.edges[k].0 == self.edges[k].1).collect()
    }

    pub fn to_dot(&self, name: &str) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "graph {name} {{");
        for (k, (g, b)) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  {k} [label=\"S_{{{g},{b}}}\"];");
        }
        for (k, (u, v)) in self.edges.iter().enumerate() {
            let _ = writeln!(s, "  {u} -- {v} [label=\"{k}\"];");
        }
        s.push_str("}\n");
        s
    }
}

pub fn reduction_graph(s: &CombSurface, tau: &[CurveClass]) -> Result<ReductionGraph> {
    let cut = cut::census(s, tau)?;
    Ok(ReductionGraph {
        vertices: cut.components.iter().map(|q| (q.genus, q.boundary_count() as u32)).collect(),
        edges: cut.sides.iter().map(|&[l, r]| (l, r)).collect(),
    })
}

/// Whether all curves of σ are pairwise disjoint.
pub fn is_simplex(s: &CombSurface, sigma: &[CurveClass]) -> Result<bool> {
    for (k, a) in sigma.iter().enumerate() {
        for b in &sigma[k + 1..] {
            if a == b || intersection(s, a, b)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
