//! Extension of vertex maps of T(S) or C_s(S) to curve maps of C(S), with
//! the checks that make the extension trustworthy on a finite catalog.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::cliques::Graph;
use crate::complexes::{build_complex, vertex_intersection, ComplexKind, ComplexView, Vertex};
use crate::cut;
use crate::error::{Error, Result};
use crate::motifs::{self, find_hexagons, hexagon_shared_curve, is_sharing_pair, root_curve, vertex_type, Hexagon};
use crate::twist::MappingWord;

/// A partial map on the vertices of a view over one catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    pub kind: ComplexKind,
    /// Sorted by source vertex.
    pub pairs: Vec<(Vertex, Vertex)>,
    /// The map is claimed to come from a mapping class.
    pub automorphism: bool,
    /// Vertices whose image left the catalog.
    pub out_of_catalog: usize,
}

impl VertexMap {
    pub fn new(kind: ComplexKind, mut pairs: Vec<(Vertex, Vertex)>, automorphism: bool) -> VertexMap {
        pairs.sort_unstable();
        pairs.dedup_by(|a, b| a.0 == b.0);
        VertexMap { kind, pairs, automorphism, out_of_catalog: 0 }
    }

    pub fn identity(view: &ComplexView) -> VertexMap {
        VertexMap::new(view.kind, view.vertices.iter().map(|&v| (v, v)).collect(), true)
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.pairs.binary_search_by(|p| p.0.cmp(&v)).ok().map(|k| self.pairs[k].1)
    }

    pub fn set(&mut self, v: Vertex, w: Vertex) {
        match self.pairs.binary_search_by(|p| p.0.cmp(&v)) {
            Ok(k) => self.pairs[k].1 = w,
            Err(k) => self.pairs.insert(k, (v, w)),
        }
    }

    /// `self ∘ other`, where both are defined.
    pub fn compose(&self, other: &VertexMap) -> VertexMap {
        let pairs = other.pairs.iter().filter_map(|&(v, w)| self.get(w).map(|x| (v, x))).collect();
        VertexMap::new(self.kind, pairs, self.automorphism && other.automorphism)
    }
}

fn image_vertex(cat: &Catalog, f: &MappingWord, v: Vertex) -> Result<Option<Vertex>> {
    let s = &cat.surface;
    let mut ids = Vec::new();
    for u in v.curves() {
        match cat.find_class(&f.apply(s, &cat.curves[u])?)? {
            Some(x) => ids.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(match ids.as_slice() {
        [x] => Vertex::Curve(*x),
        [x, y] => Vertex::Bp(*x.min(y), *x.max(y)),
        _ => return Ok(None),
    }))
}

/// The action of `f` on the vertices of a view; images outside the catalog
/// are dropped and counted.
pub fn induced_map(cat: &Catalog, view: &ComplexView, f: &MappingWord) -> Result<VertexMap> {
    let mut pairs = Vec::with_capacity(view.len());
    let mut missing = 0;
    for &v in &view.vertices {
        match image_vertex(cat, f, v)? {
            Some(w) if view.index_of(w).is_some() => pairs.push((v, w)),
            _ => missing += 1,
        }
    }
    let mut m = VertexMap::new(view.kind, pairs, true);
    m.out_of_catalog = missing;
    Ok(m)
}

/// Image of every catalog curve under `f`, where it stays in the catalog.
pub fn curve_action(cat: &Catalog, f: &MappingWord) -> Result<Vec<Option<usize>>> {
    let s = &cat.surface;
    cat.curves.iter().map(|c| cat.find_class(&f.apply(s, c)?)).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreservationReport {
    pub vertices: usize,
    pub pairs_checked: usize,
    pub violations: Vec<String>,
    pub pass: bool,
}

fn sides_key(cat: &Catalog, u: usize) -> Vec<(u32, u32)> {
    cat.tags[u].sides.clone()
}

fn bp_class(cat: &Catalog, a: Vertex, b: Vertex) -> bool {
    let mut cs = a.curves();
    cs.extend(b.curves());
    cs.sort_unstable();
    cs.dedup();
    cs.iter().enumerate().all(|(k, &u)| cs[k + 1..].iter().all(|&v| cat.is_bp(u, v)))
}

fn rooted(cat: &Catalog, a: Vertex, b: Vertex) -> bool {
    match (a, b) {
        (Vertex::Bp(u, v), Vertex::Bp(x, y)) => root_curve(cat, &[(u, v), (x, y)]).is_ok_and(|r| r.root.is_some()),
        _ => false,
    }
}

/// Checks on the catalog that `phi` preserves vertex kinds, topological
/// types of separating curves (h- and p-vertices in particular), disjointness
/// and non-disjointness, BP-equivalence and rootedness, and is injective.
pub fn preservation_check(cat: &Catalog, phi: &VertexMap) -> PreservationReport {
    let mut r = PreservationReport { vertices: phi.pairs.len(), ..Default::default() };
    let v = |r: &mut PreservationReport, msg: String| {
        if r.violations.len() < 64 {
            r.violations.push(msg);
        }
    };
    for &(a, fa) in &phi.pairs {
        match (a, fa) {
            (Vertex::Curve(u), Vertex::Curve(w)) => {
                if cat.separating[u] != cat.separating[w] {
                    v(&mut r, format!("{a:?} -> {fa:?} changes separation"));
                } else if cat.separating[u] && sides_key(cat, u) != sides_key(cat, w) {
                    v(&mut r, format!("{a:?} -> {fa:?} changes topological type"));
                } else if vertex_type(cat, a) != vertex_type(cat, fa) {
                    v(&mut r, format!("{a:?} -> {fa:?} changes h/p type"));
                }
            }
            (Vertex::Bp(..), Vertex::Bp(..)) => {}
            _ => v(&mut r, format!("{a:?} -> {fa:?} changes vertex kind")),
        }
    }
    let n = phi.pairs.len();
    for j in 0..n {
        let (a, fa) = phi.pairs[j];
        for k in j + 1..n {
            let (b, fb) = phi.pairs[k];
            r.pairs_checked += 1;
            if fa == fb {
                v(&mut r, format!("{a:?} and {b:?} both map to {fa:?}"));
                continue;
            }
            let before = vertex_intersection(cat, a, b) == 0;
            let after = vertex_intersection(cat, fa, fb) == 0;
            if before != after {
                v(&mut r, format!("disjointness of {a:?}, {b:?} is not preserved"));
            }
            if matches!((a, b), (Vertex::Bp(..), Vertex::Bp(..))) {
                if bp_class(cat, a, b) && !bp_class(cat, fa, fb) {
                    v(&mut r, format!("BP-equivalence of {a:?}, {b:?} is not preserved"));
                }
                if rooted(cat, a, b) && !rooted(cat, fa, fb) {
                    v(&mut r, format!("rootedness of {a:?}, {b:?} is not preserved"));
                }
            }
        }
    }
    r.pass = r.violations.is_empty();
    r
}

/// How a curve map entry was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    /// Separating curve mapped by the vertex map itself.
    Direct,
    /// Root of the image of a rooted pair of BPs.
    RootCurve,
    /// Shared curve of the image of a hexagon.
    HexagonC,
    /// Shared curve of the image of a sharing pair.
    SharingPair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub curve: usize,
    pub image: usize,
    pub rule: Rule,
    /// Witnesses that agreed on the image.
    pub witnesses: usize,
    /// Vertices of the first witness.
    pub witness: Vec<Vertex>,
}

/// A partial map on catalog curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveMap {
    /// Sorted by curve.
    pub entries: Vec<CurveEntry>,
    /// Non-separating curves without a usable witness in the catalog.
    pub no_witness: Vec<usize>,
    /// Set when the input is not claimed to be an automorphism.
    pub evidence_only: bool,
}

impl CurveMap {
    pub fn get(&self, u: usize) -> Option<usize> {
        self.entries.binary_search_by(|e| e.curve.cmp(&u)).ok().map(|k| self.entries[k].image)
    }

    /// The image of `u`, or `NoWitness`.
    pub fn image(&self, u: usize) -> Result<usize> {
        self.get(u).ok_or(Error::NoWitness(u))
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> CurveMap {
        let mut entries: Vec<CurveEntry> =
            pairs.iter().map(|&(curve, image)| direct(curve, image)).collect();
        entries.sort_by_key(|e| e.curve);
        CurveMap { entries, no_witness: Vec::new(), evidence_only: false }
    }
}

/// The extension rule used for a view.
fn regime(cat: &Catalog, kind: ComplexKind) -> Result<Rule> {
    let s = &cat.surface;
    let (g, p) = (s.genus(), s.boundary_count());
    match kind {
        ComplexKind::T if g == 1 && p >= 3 => Ok(Rule::RootCurve),
        ComplexKind::Cs if g == 1 && p == 3 => Ok(Rule::HexagonC),
        ComplexKind::Cs if g >= 2 && -s.euler() >= 4 => Ok(Rule::SharingPair),
        _ => Err(Error::Unsupported(format!("no extension rule for a {kind:?}-view of S_({g},{p})"))),
    }
}

fn direct(curve: usize, image: usize) -> CurveEntry {
    CurveEntry { curve, image, rule: Rule::Direct, witnesses: 1, witness: vec![Vertex::Curve(curve)] }
}

/// Candidate images of one curve, each with its witness vertices and a
/// description of the witness.
type Votes = BTreeMap<usize, Vec<(usize, Vec<Vertex>, String)>>;

fn vote(votes: &mut Votes, curve: usize, image: usize, vertices: Vec<Vertex>, witness: String) {
    votes.entry(curve).or_default().push((image, vertices, witness));
}

fn root_votes(cat: &Catalog, phi: &VertexMap, votes: &mut Votes) -> Result<()> {
    let mut by_curve: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &(u, v) in &cat.bps {
        by_curve.entry(u).or_default().push((u, v));
        by_curve.entry(v).or_default().push((u, v));
    }
    for (&alpha, bps) in &by_curve {
        for (k, &b1) in bps.iter().enumerate() {
            for &b2 in &bps[k + 1..] {
                if root_curve(cat, &[b1, b2]).ok().and_then(|r| r.root) != Some(alpha) {
                    continue;
                }
                let (Some(f1), Some(f2)) = (phi.get(Vertex::Bp(b1.0, b1.1)), phi.get(Vertex::Bp(b2.0, b2.1))) else {
                    continue;
                };
                let witness = format!("rooted pair {b1:?}, {b2:?} -> {f1:?}, {f2:?}");
                let root = match (f1, f2) {
                    (Vertex::Bp(a, b), Vertex::Bp(c, d)) => root_curve(cat, &[(a, b), (c, d)]).ok().and_then(|r| r.root),
                    _ => None,
                };
                match root {
                    Some(r) => vote(votes, alpha, r, vec![Vertex::Bp(b1.0, b1.1), Vertex::Bp(b2.0, b2.1)], witness),
                    None => return Err(Error::Inconsistent(format!("curve {alpha}: image of {witness} is not rooted"))),
                }
            }
        }
    }
    Ok(())
}

/// Maps a hexagon through `phi`, reordered so its p-vertices sit at even
/// positions.
fn map_hexagon(cat: &Catalog, phi: &VertexMap, h: &Hexagon) -> Option<Result<Hexagon>> {
    let mut img = [0usize; 6];
    for (k, &u) in h.curves.iter().enumerate() {
        match phi.get(Vertex::Curve(u))? {
            Vertex::Curve(x) => img[k] = x,
            Vertex::Bp(..) => return Some(Err(Error::Inconsistent(format!("hexagon {:?} maps to a BP", h.curves)))),
        }
    }
    if vertex_type(cat, Vertex::Curve(img[0])) != motifs::VertexType::P {
        img.rotate_left(1);
    }
    Some(Hexagon::new(cat, img).map_err(|_| Error::Inconsistent(format!("image of hexagon {:?} is not a hexagon", h.curves))))
}

fn hexagon_votes(cat: &Catalog, phi: &VertexMap, votes: &mut Votes) -> Result<()> {
    let view = build_complex(cat, ComplexKind::Cs);
    let found = find_hexagons(cat, &view, usize::MAX)?;
    for h in &found.items {
        let c = match hexagon_shared_curve(cat, h) {
            Ok(x) => x.c,
            Err(Error::NotFoundInCatalog) => continue,
            Err(e) => return Err(e),
        };
        let Some(img) = map_hexagon(cat, phi, h) else {
            continue;
        };
        let img = img?;
        match hexagon_shared_curve(cat, &img) {
            Ok(x) => vote(
                votes,
                c,
                x.c,
                h.curves.iter().map(|&u| Vertex::Curve(u)).collect(),
                format!("hexagon {:?} -> {:?}", h.curves, img.curves),
            ),
            Err(Error::NotFoundInCatalog) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// Catalog sharing pairs as `(a, b, shared)` ids, with the shared curve in
/// the catalog.
pub fn catalog_sharing_pairs(cat: &Catalog) -> Result<Vec<(usize, usize, usize)>> {
    let s = &cat.surface;
    let mut out = Vec::new();
    for (a, b) in motifs::h_pairs_meeting_four_times(cat) {
        if let Some(p) = is_sharing_pair(s, &cat.curves[a], &cat.curves[b])? {
            if let Some(beta) = cat.find_class(&p.shared)? {
                out.push((a, b, beta));
            }
        }
    }
    Ok(out)
}

fn sharing_votes(cat: &Catalog, phi: &VertexMap, pairs: &[(usize, usize, usize)], votes: &mut Votes) -> Result<()> {
    let s = &cat.surface;
    for &(a, b, beta) in pairs {
        let (Some(Vertex::Curve(fa)), Some(Vertex::Curve(fb))) = (phi.get(Vertex::Curve(a)), phi.get(Vertex::Curve(b))) else {
            continue;
        };
        let witness = format!("sharing pair ({a}, {b}) -> ({fa}, {fb})");
        let Some(p) = is_sharing_pair(s, &cat.curves[fa], &cat.curves[fb])? else {
            return Err(Error::Inconsistent(format!("curve {beta}: image of {witness} is not a sharing pair")));
        };
        if let Some(x) = cat.find_class(&p.shared)? {
            vote(votes, beta, x, vec![Vertex::Curve(a), Vertex::Curve(b)], witness);
        }
    }
    Ok(())
}

/// Extends `phi` to the catalog curves: separating curves map as under
/// `phi`, non-separating ones by the rule of the regime, and every witness
/// of a curve must give the same image.
pub fn phi_extend(cat: &Catalog, phi: &VertexMap) -> Result<CurveMap> {
    let rule = regime(cat, phi.kind)?;
    let mut votes = Votes::new();
    match rule {
        Rule::RootCurve => root_votes(cat, phi, &mut votes)?,
        Rule::HexagonC => hexagon_votes(cat, phi, &mut votes)?,
        _ => sharing_votes(cat, phi, &catalog_sharing_pairs(cat)?, &mut votes)?,
    }
    extend_with_votes(cat, phi, rule, votes)
}

/// As [`phi_extend`] in the sharing-pair regime, with the catalog sharing
/// pairs computed once by the caller.
pub fn phi_extend_with_pairs(cat: &Catalog, phi: &VertexMap, pairs: &[(usize, usize, usize)]) -> Result<CurveMap> {
    let rule = regime(cat, phi.kind)?;
    if rule != Rule::SharingPair {
        return phi_extend(cat, phi);
    }
    let mut votes = Votes::new();
    sharing_votes(cat, phi, pairs, &mut votes)?;
    extend_with_votes(cat, phi, rule, votes)
}

fn extend_with_votes(cat: &Catalog, phi: &VertexMap, rule: Rule, votes: Votes) -> Result<CurveMap> {
    let mut entries = Vec::new();
    let mut no_witness = Vec::new();
    for u in 0..cat.len() {
        if cat.separating[u] {
            if let Some(Vertex::Curve(w)) = phi.get(Vertex::Curve(u)) {
                entries.push(direct(u, w));
            }
            continue;
        }
        let Some(vs) = votes.get(&u) else {
            no_witness.push(u);
            continue;
        };
        let (first, vertices, w1) = &vs[0];
        if let Some((other, _, w2)) = vs.iter().find(|(x, _, _)| x != first) {
            return Err(Error::Inconsistent(format!("curve {u}: {w1} gives {first}, {w2} gives {other}")));
        }
        entries.push(CurveEntry { curve: u, image: *first, rule, witnesses: vs.len(), witness: vertices.clone() });
    }
    Ok(CurveMap { entries, no_witness, evidence_only: !phi.automorphism })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialReport {
    pub defined: usize,
    pub pairs_checked: usize,
    pub bps_checked: usize,
    /// Disjoint pairs with intersecting images.
    pub not_simplicial: Vec<(usize, usize)>,
    /// Distinct curves with the same image.
    pub not_injective: Vec<(usize, usize)>,
    /// BPs whose image differs from the vertex map's image.
    pub bp_mismatch: Vec<(usize, usize)>,
    pub pass: bool,
}

/// Checks that `map` keeps disjoint curves disjoint, is injective, and maps
/// every BP to its image under `phi` when `phi` is given.
pub fn verify_simplicial_injective(cat: &Catalog, map: &CurveMap, phi: Option<&VertexMap>) -> SimplicialReport {
    let mut r = SimplicialReport { defined: map.entries.len(), ..Default::default() };
    let es = &map.entries;
    for (j, a) in es.iter().enumerate() {
        for b in &es[j + 1..] {
            r.pairs_checked += 1;
            if a.image == b.image {
                r.not_injective.push((a.curve, b.curve));
            } else if cat.i(a.curve, b.curve) == 0 && cat.i(a.image, b.image) != 0 {
                r.not_simplicial.push((a.curve, b.curve));
            }
        }
    }
    if let Some(phi) = phi {
        for &(u, v) in &cat.bps {
            let (Some(fu), Some(fv), Some(fb)) = (map.get(u), map.get(v), phi.get(Vertex::Bp(u, v))) else {
                continue;
            };
            r.bps_checked += 1;
            if Vertex::Bp(fu.min(fv), fu.max(fv)) != fb {
                r.bp_mismatch.push((u, v));
            }
        }
    }
    r.pass = r.not_simplicial.is_empty() && r.not_injective.is_empty() && r.bp_mismatch.is_empty();
    r
}

/// The genus-zero complexes and graph whose connectivity is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EvidenceKind {
    /// Curves separating the two chosen boundary components; disjointness.
    D,
    /// Curves cutting off a pair of pants with the two chosen boundary
    /// components; edges at intersection four.
    E,
    /// Curves with a side holding both chosen boundary components and at
    /// least three boundary components; disjointness.
    F,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub kind: EvidenceKind,
    pub g: u32,
    pub p: u32,
    pub boundary: (u32, u32),
    pub catalog_size: usize,
    pub depth: u32,
    pub weight_cap: u64,
    /// Catalog ids of the vertices.
    pub vertices: Vec<usize>,
    pub edges: usize,
    pub component_sizes: Vec<usize>,
    pub connected: bool,
}

/// Builds the graph of the given kind over the catalog and reports its
/// components.
pub fn connectivity_evidence(kind: EvidenceKind, cat: &Catalog, d1: u32, d2: u32) -> Result<(ConnectivityReport, Graph)> {
    let s = &cat.surface;
    let (g, p) = (s.genus(), s.boundary_count());
    let min_p = match kind {
        EvidenceKind::D => 5,
        EvidenceKind::E => 5,
        EvidenceKind::F => 6,
    };
    if g != 0 || p < min_p || (kind == EvidenceKind::E && p != 5) {
        return Err(Error::Unsupported(format!("{kind:?} is defined on S_(0,{min_p}) and up, got S_({g},{p})")));
    }
    if d1 == d2 || !(1..=p).contains(&d1) || !(1..=p).contains(&d2) {
        return Err(Error::Unsupported(format!("boundary labels {d1}, {d2}")));
    }
    let mut vertices = Vec::new();
    for (u, c) in cat.curves.iter().enumerate() {
        let census = cut::census(s, core::slice::from_ref(c))?;
        let side = |d: u32| census.components.iter().position(|q| q.punctures.contains(&d));
        let (s1, s2) = (side(d1), side(d2));
        let keep = match kind {
            EvidenceKind::D => s1 != s2,
            EvidenceKind::E => s1 == s2 && s1.is_some_and(|q| census.components[q].punctures.len() == 2),
            EvidenceKind::F => s1 == s2 && s1.is_some_and(|q| census.components[q].punctures.len() >= 3),
        };
        if keep {
            vertices.push(u);
        }
    }
    let graph = Graph::from_fn(vertices.len(), |a, b| {
        let x = cat.i(vertices[a], vertices[b]);
        match kind {
            EvidenceKind::E => x == 4,
            _ => x == 0,
        }
    });
    let comps = graph.components();
    let report = ConnectivityReport {
        kind,
        g,
        p,
        boundary: (d1, d2),
        catalog_size: cat.len(),
        depth: cat.depth,
        weight_cap: cat.weight_cap,
        edges: graph.edge_count(),
        component_sizes: comps.iter().map(|c| c.len()).collect(),
        connected: comps.len() <= 1,
        vertices,
    };
    Ok((report, graph))
}

/// Replaces the image of `v` by `w`, for corrupted-input tests.
pub fn corrupt(phi: &VertexMap, v: Vertex, w: Vertex) -> VertexMap {
    let mut m = phi.clone();
    m.set(v, w);
    m.automorphism = false;
    m
}
