//! Finite curve catalogs: orbits of a fixed curve list under twist words,
//! with exact pairwise intersection numbers and the bounding pairs among them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::curve::{is_bp, CurveClass, TopoTag};
use crate::cut;
use crate::error::{Error, Result};
use crate::intersect::intersection;
use crate::marking;
use crate::surface::CombSurface;
use crate::twist::{MappingWord, Token};

/// A deduplicated curve set with its intersection matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub surface: CombSurface,
    /// Curves sorted by total weight, then by weights; the index is the id.
    pub curves: Vec<CurveClass>,
    /// Symmetric, zero on the diagonal.
    pub i_matrix: Vec<Vec<u32>>,
    /// Unordered bounding pairs `(u, v)` with `u < v`.
    pub bps: Vec<(usize, usize)>,
    /// Per curve, a base index and a word carrying that base curve to it.
    pub provenance: Vec<(usize, MappingWord)>,
    pub tags: Vec<TopoTag>,
    pub separating: Vec<bool>,
    pub depth: u32,
    pub weight_cap: u64,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn id_of(&self, c: &CurveClass) -> Option<usize> {
        self.curves.binary_search_by(|x| order(x, c)).ok()
    }

    /// Id of `c`, or on a closed surface of a catalog curve parallel to it
    /// through the marked point.
    pub fn find_class(&self, c: &CurveClass) -> Result<Option<usize>> {
        if let Some(u) = self.id_of(c) {
            return Ok(Some(u));
        }
        let s = &self.surface;
        if s.is_closed() {
            for (u, x) in self.curves.iter().enumerate() {
                if intersection(s, x, c)? == 0 {
                    let cut = cut::census_unchecked(s, &[x.clone(), c.clone()])?;
                    if cut::closed_parallel(s, &cut) {
                        return Ok(Some(u));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn i(&self, u: usize, v: usize) -> u32 {
        self.i_matrix[u][v]
    }

    pub fn is_bp(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.bps.binary_search(&key).is_ok()
    }

    /// Builds a catalog from an explicit curve list.
    pub fn from_curves(s: &CombSurface, curves: Vec<CurveClass>) -> Result<Catalog> {
        let prov = curves.iter().enumerate().map(|(i, _)| (i, MappingWord::identity())).collect();
        finish(s, curves, prov, 0, u64::MAX)
    }

    /// Reassembles a stored catalog. Checks ordering, the shape and symmetry
    /// of the matrix and every stored BP; intersection numbers are trusted.
    pub fn from_parts(
        s: &CombSurface,
        curves: Vec<CurveClass>,
        i_matrix: Vec<Vec<u32>>,
        bps: Vec<(usize, usize)>,
        provenance: Vec<(usize, MappingWord)>,
        depth: u32,
        weight_cap: u64,
    ) -> Result<Catalog> {
        let n = curves.len();
        let bad = |what: &str| Err(Error::InvariantViolation(alloc::format!("stored catalog: {what}")));
        if curves.iter().any(|c| c.surface_id() != s.id()) {
            return Err(Error::SurfaceMismatch);
        }
        if curves.windows(2).any(|w| order(&w[0], &w[1]) != core::cmp::Ordering::Less) {
            return bad("curves not strictly sorted");
        }
        if provenance.len() != n || i_matrix.len() != n || i_matrix.iter().any(|r| r.len() != n) {
            return bad("length mismatch");
        }
        for u in 0..n {
            if i_matrix[u][u] != 0 || (0..u).any(|v| i_matrix[u][v] != i_matrix[v][u]) {
                return bad("matrix not symmetric with zero diagonal");
            }
        }
        if bps.windows(2).any(|w| w[0] >= w[1]) {
            return bad("BP list not strictly sorted");
        }
        let separating: Vec<bool> = curves.iter().map(|c| c.is_separating(s)).collect();
        for &(u, v) in &bps {
            if u >= v || v >= n || i_matrix[u][v] != 0 || is_bp(s, &curves[u], &curves[v])?.is_none() {
                return bad("stored pair is not a bounding pair");
            }
        }
        let tags = curves.iter().map(|c| c.topo_type(s)).collect();
        Ok(Catalog { surface: s.clone(), curves, i_matrix, bps, provenance, tags, separating, depth, weight_cap })
    }

    /// The subcatalog on the given ids, renumbered.
    pub fn restrict(&self, ids: &[usize]) -> Catalog {
        let mut ids = ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut new_id = vec![usize::MAX; self.len()];
        for (k, &u) in ids.iter().enumerate() {
            new_id[u] = k;
        }
        Catalog {
            surface: self.surface.clone(),
            curves: ids.iter().map(|&u| self.curves[u].clone()).collect(),
            i_matrix: ids.iter().map(|&u| ids.iter().map(|&v| self.i_matrix[u][v]).collect()).collect(),
            bps: self
                .bps
                .iter()
                .filter(|(u, v)| new_id[*u] != usize::MAX && new_id[*v] != usize::MAX)
                .map(|(u, v)| (new_id[*u], new_id[*v]))
                .collect(),
            provenance: ids.iter().map(|&u| self.provenance[u].clone()).collect(),
            tags: ids.iter().map(|&u| self.tags[u].clone()).collect(),
            separating: ids.iter().map(|&u| self.separating[u]).collect(),
            depth: self.depth,
            weight_cap: self.weight_cap,
        }
    }
}

fn order(a: &CurveClass, b: &CurveClass) -> core::cmp::Ordering {
    (a.total_weight(), a.weights()).cmp(&(b.total_weight(), b.weights()))
}

/// The fixed curve list every catalog starts from, in this order: the
/// necklace `β_1..β_m`, the h-curves `α_1..α_{g-1}`, the `a` and `b` cycles
/// of every handle, the chain curves between consecutive handles, the curves
/// around every pair of boundary components, and the curves cutting off
/// initial segments of the gadget path. Repeats are dropped.
pub fn standard_marking(s: &CombSurface) -> Result<Vec<CurveClass>> {
    let g = s.genus() as usize;
    let p = s.boundary_count();
    let mut out: Vec<CurveClass> = Vec::new();
    let mut push = |c: CurveClass| {
        if !out.contains(&c) {
            out.push(c);
        }
    };
    for c in marking::necklace(s)? {
        push(c);
    }
    for c in marking::alpha_curves(s)? {
        push(c);
    }
    for h in 0..g {
        let (a, b) = marking::handle_cycles(s, h)?;
        push(a);
        push(b);
    }
    for h in 0..g.saturating_sub(1) {
        push(marking::chain_curve(s, h)?);
    }
    for i in 1..=p {
        for j in i + 1..=p {
            if let Ok(c) = marking::pair_curve(s, i, j) {
                push(c);
            }
        }
    }
    for j in 0..s.gadgets().len() {
        if let Some(c) = marking::prefix_curve(s, j) {
            push(c);
        }
    }
    Ok(out)
}

/// Twists generating the default catalogs: both powers of the Dehn twists
/// about the handle cycles, chain curves, necklace and boundary-pair curves,
/// and of the half twists about boundary-pair curves in standard position.
pub fn standard_generators(s: &CombSurface) -> Result<Vec<MappingWord>> {
    let g = s.genus() as usize;
    let p = s.boundary_count();
    let mut twist: Vec<CurveClass> = Vec::new();
    for h in 0..g {
        let (a, b) = marking::handle_cycles(s, h)?;
        twist.push(a);
        twist.push(b);
    }
    for h in 0..g.saturating_sub(1) {
        twist.push(marking::chain_curve(s, h)?);
    }
    twist.extend(marking::necklace(s)?);
    let mut half = Vec::new();
    for i in 1..=p {
        for j in i + 1..=p {
            if let Ok(c) = marking::pair_curve(s, i, j) {
                if j < p {
                    half.push(c.clone());
                }
                twist.push(c);
            }
        }
    }
    let mut out: Vec<MappingWord> = Vec::new();
    for c in twist {
        for power in [1, -1] {
            let w = MappingWord::single(Token::Dehn { curve: c.clone(), power });
            if !out.contains(&w) {
                out.push(w);
            }
        }
    }
    for c in half {
        for power in [1, -1] {
            out.push(MappingWord::single(Token::Half { curve: c.clone(), power }));
        }
    }
    Ok(out)
}

/// Breadth-first closure of `base` under `gens` up to word length `depth`,
/// dropping curves of total weight above `weight_cap`.
pub fn enumerate_orbit(
    s: &CombSurface,
    base: &[CurveClass],
    gens: &[MappingWord],
    depth: u32,
    weight_cap: u64,
) -> Result<Catalog> {
    if base.is_empty() {
        return Err(Error::EmptyBase);
    }
    let mut seen: BTreeMap<CurveClass, (usize, MappingWord)> = BTreeMap::new();
    let mut frontier: Vec<CurveClass> = Vec::new();
    for (i, c) in base.iter().enumerate() {
        if c.surface_id() != s.id() {
            return Err(Error::SurfaceMismatch);
        }
        if !seen.contains_key(c) {
            seen.insert(c.clone(), (i, MappingWord::identity()));
            frontier.push(c.clone());
        }
    }
    for _ in 0..depth {
        let mut next = Vec::new();
        for c in &frontier {
            let (root, word) = seen[c].clone();
            for gen in gens {
                let img = gen.apply(s, c)?;
                if img.total_weight() > weight_cap || seen.contains_key(&img) {
                    continue;
                }
                seen.insert(img.clone(), (root, gen.compose(&word)));
                next.push(img);
            }
        }
        next.sort_by(order);
        frontier = next;
    }
    let mut entries: Vec<(CurveClass, (usize, MappingWord))> = seen.into_iter().collect();
    entries.sort_by(|a, b| order(&a.0, &b.0));
    let (curves, prov): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
    finish(s, curves, prov, depth, weight_cap)
}

fn finish(
    s: &CombSurface,
    curves: Vec<CurveClass>,
    prov: Vec<(usize, MappingWord)>,
    depth: u32,
    weight_cap: u64,
) -> Result<Catalog> {
    let mut pairs: Vec<(CurveClass, (usize, MappingWord))> = curves.into_iter().zip(prov).collect();
    pairs.sort_by(|a, b| order(&a.0, &b.0));
    pairs.dedup_by(|a, b| a.0 == b.0);
    let n = pairs.len();
    let mut i_matrix = vec![vec![0u32; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let x = intersection(s, &pairs[u].0, &pairs[v].0)? as u32;
            i_matrix[u][v] = x;
            i_matrix[v][u] = x;
        }
    }
    // On a closed surface two curves parallel through the marked point are
    // the same class; keep the first.
    let mut keep = vec![true; n];
    if s.is_closed() {
        for u in 0..n {
            for v in u + 1..n {
                if keep[u] && keep[v] && i_matrix[u][v] == 0 {
                    let cut = cut::census_unchecked(s, &[pairs[u].0.clone(), pairs[v].0.clone()])?;
                    if cut::closed_parallel(s, &cut) {
                        keep[v] = false;
                    }
                }
            }
        }
    }
    let ids: Vec<usize> = (0..n).filter(|&u| keep[u]).collect();
    let curves: Vec<CurveClass> = ids.iter().map(|&u| pairs[u].0.clone()).collect();
    let i_matrix: Vec<Vec<u32>> = ids.iter().map(|&u| ids.iter().map(|&v| i_matrix[u][v]).collect()).collect();
    let provenance: Vec<(usize, MappingWord)> = ids.iter().map(|&u| pairs[u].1.clone()).collect();
    let separating: Vec<bool> = curves.iter().map(|c| c.is_separating(s)).collect();
    let tags: Vec<TopoTag> = curves.iter().map(|c| c.topo_type(s)).collect();
    let mut bps = Vec::new();
    for u in 0..curves.len() {
        for v in u + 1..curves.len() {
            if i_matrix[u][v] == 0 && !separating[u] && !separating[v] && is_bp(s, &curves[u], &curves[v])?.is_some() {
                bps.push((u, v));
            }
        }
    }
    Ok(Catalog {
        surface: s.clone(),
        curves,
        i_matrix,
        bps,
        provenance,
        tags,
        separating,
        depth,
        weight_cap,
    })
}

/// Default depth and weight cap per surface, sized so that every default
/// catalog builds in seconds.
pub fn default_bounds(g: u32, p: u32) -> (u32, u64) {
    match (g, p) {
        (0, p) if p >= 6 => (2, 50),
        (0, _) => (3, 40),
        (1, 1) | (1, 2) => (3, 40),
        (1, _) => (2, 40),
        _ => (2, 60),
    }
}

/// The catalog built from the standard marking and generators with the
/// default bounds.
pub fn default_catalog(s: &CombSurface) -> Result<Catalog> {
    let (d, w) = default_bounds(s.genus(), s.boundary_count());
    enumerate_orbit(s, &standard_marking(s)?, &standard_generators(s)?, d, w)
}
