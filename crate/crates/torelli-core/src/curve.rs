//! Essential simple closed curves as normal coordinates.

use alloc::vec::Vec;
use core::cmp::Ordering;
use serde::{Deserialize, Serialize};

use crate::cut::{self, CutComponent};
use crate::error::{Error, Result};
use crate::intersect;
use crate::normal;
use crate::surface::{CombSurface, Side, VertexLabel};
use crate::walk;

/// Isotopy class of an essential simple closed curve. Equality is equality
/// of the weight vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    surface: u64,
    weights: Vec<u32>,
}

impl Ord for CurveClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.surface
            .cmp(&other.surface)
            .then(self.total_weight().cmp(&other.total_weight()))
            .then_with(|| self.weights.cmp(&other.weights))
    }
}

impl PartialOrd for CurveClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl CurveClass {
    /// Validates a weight vector as an essential simple closed curve.
    pub fn new(s: &CombSurface, w: Vec<u32>) -> Result<Self> {
        normal::check_matching(s, &w)?;
        if w.iter().all(|&x| x == 0) {
            return Err(Error::Inessential);
        }
        let comps = normal::trace_all(s, &w);
        if comps.len() != 1 {
            return Err(Error::Disconnected);
        }
        for v in 0..s.vertex_count() as u32 {
            if s.link_weights(v) == w {
                return Err(Error::Inessential);
            }
        }
        Ok(CurveClass { surface: s.id(), weights: w })
    }

    /// The curve freely homotopic to a closed walk, provided the walk reduces
    /// to a simple closed curve.
    pub fn from_walk(s: &CombSurface, w: &[Side]) -> Result<Self> {
        let red = walk::reduce_cyclic(s, w);
        if red.is_empty() {
            return Err(Error::Inessential);
        }
        let counts = walk::edge_counts(s, &red);
        let c = match CurveClass::new(s, counts) {
            Ok(c) => c,
            Err(Error::Inessential) => return Err(Error::Inessential),
            Err(_) => return Err(Error::NotSimple),
        };
        if !same_cycle(s, &c.walk(s), &red) {
            return Err(Error::NotSimple);
        }
        Ok(c)
    }

    pub fn surface_id(&self) -> u64 {
        self.surface
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().map(|&x| x as u64).sum()
    }

    /// Cyclic walk of the normal representative.
    pub fn walk(&self, s: &CombSurface) -> Vec<Side> {
        normal::walk_of(s, &self.weights)
    }

    /// True iff cutting along the curve disconnects the surface.
    pub fn is_separating(&self, s: &CombSurface) -> bool {
        let c = cut::census(s, core::slice::from_ref(self)).expect("a single curve is a multicurve");
        c.components.len() == 2
    }

    /// Topological type with every applicable tag.
    pub fn topo_type(&self, s: &CombSurface) -> TopoTag {
        let c = cut::census(s, core::slice::from_ref(self)).expect("a single curve is a multicurve");
        classify_sides(s, &c.components)
    }
}

/// True if `b` is a cyclic rotation of `a` or of its reverse.
pub fn same_cycle(s: &CombSurface, a: &[Side], b: &[Side]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let rb = walk::reverse(s, b);
    is_rotation(a, b) || is_rotation(a, &rb)
}

fn is_rotation(a: &[Side], b: &[Side]) -> bool {
    let n = a.len();
    (0..n).any(|r| (0..n).all(|k| a[k] == b[(k + r) % n]))
}

/// Topological type of a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TopoType {
    NonSeparating,
    /// Cuts off a one-holed torus.
    HCurve,
    /// Cuts off a pair of pants.
    PCurve,
    /// The genus-zero side holds exactly `q` boundary components.
    Hbc(u32),
    OtherSeparating,
}

/// Primary type plus all applicable tags, and the sorted `(genus, boundary
/// count)` of each side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopoTag {
    pub primary: TopoType,
    pub tags: Vec<TopoType>,
    pub sides: Vec<(u32, u32)>,
}

fn classify_sides(s: &CombSurface, comps: &[CutComponent]) -> TopoTag {
    let mut sides: Vec<(u32, u32)> = comps.iter().map(|q| (q.genus, q.boundary_count() as u32)).collect();
    sides.sort();
    if comps.len() == 1 {
        return TopoTag { primary: TopoType::NonSeparating, tags: alloc::vec![TopoType::NonSeparating], sides };
    }
    let mut tags = Vec::new();
    if comps.iter().any(|q| q.genus == 1 && q.boundary_count() == 1) {
        tags.push(TopoType::HCurve);
    }
    if comps.iter().any(|q| q.genus == 0 && q.boundary_count() == 3) {
        tags.push(TopoType::PCurve);
    }
    if s.genus() >= 1 {
        for q in comps {
            if q.genus == 0 {
                tags.push(TopoType::Hbc(q.punctures.len() as u32));
            }
        }
    }
    tags.sort();
    tags.dedup();
    let primary = tags.first().copied().unwrap_or(TopoType::OtherSeparating);
    if tags.is_empty() {
        tags.push(TopoType::OtherSeparating);
    }
    TopoTag { primary, tags, sides }
}

/// Two disjoint non-separating curves whose union separates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundedPair {
    pub first: CurveClass,
    pub second: CurveClass,
    pub ordered: bool,
    /// One side of the pair is a pair of pants.
    pub pants: bool,
}

/// `Some` iff `{a, b}` is a bounding pair.
pub fn is_bp(s: &CombSurface, a: &CurveClass, b: &CurveClass) -> Result<Option<BoundedPair>> {
    if a == b || intersect::intersection(s, a, b)? != 0 {
        return Ok(None);
    }
    if a.is_separating(s) || b.is_separating(s) {
        return Ok(None);
    }
    let c = cut::census(s, &[a.clone(), b.clone()])?;
    if c.components.len() != 2 || cut::closed_parallel(s, &c) {
        return Ok(None);
    }
    let pants = c.components.iter().any(|q| q.genus == 0 && q.boundary_count() == 3);
    Ok(Some(BoundedPair { first: a.clone(), second: b.clone(), ordered: false, pants }))
}

/// Labels of boundary components in a list, for reports.
pub fn boundary_labels(s: &CombSurface) -> Vec<u32> {
    s.vertex_labels()
        .iter()
        .filter_map(|l| match l {
            VertexLabel::Boundary(k) => Some(*k),
            VertexLabel::Marked => None,
        })
        .collect()
}
