//! Named curves of the canonical triangulation.
//!
//! Every curve here is a boundary component of a regular neighbourhood of a
//! connected sub-ribbon-graph, so it is simple by construction. Gadgets are
//! numbered `0..k` along the path; handles come first.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::curve::CurveClass;
use crate::cut;
use crate::error::{Error, Result};
use crate::surface::{tri, CombSurface, Gadget};
use crate::walk;

/// Essential boundary curves of a neighbourhood of the edge set, without
/// repetitions, in order of appearance.
pub fn subgraph_curves(s: &CombSurface, edges: &[u32]) -> Vec<CurveClass> {
    let mut out: Vec<CurveClass> = Vec::new();
    for w in walk::subgraph_boundaries(s, edges) {
        if let Ok(c) = CurveClass::from_walk(s, &w) {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

fn gadget(s: &CombSurface, j: usize) -> Result<&Gadget> {
    s.gadgets()
        .get(j)
        .ok_or_else(|| Error::Unsupported("surface has no gadget data".into()))
}

/// Number of handles.
fn handles(s: &CombSurface) -> usize {
    s.gadgets().iter().filter(|g| matches!(g, Gadget::Handle { .. })).count()
}

/// Gadget index of the loop around boundary `label` (labels `1..p-1`).
pub fn loop_gadget(s: &CombSurface, label: u32) -> Option<usize> {
    s.gadgets()
        .iter()
        .position(|g| matches!(g, Gadget::Loop { label: l, .. } if *l == label))
}

/// Edges of the path, the gadgets `0..=j` and their attaching edges.
fn prefix_edges(s: &CombSurface, j: usize) -> Vec<u32> {
    let mut e = Vec::new();
    for i in 0..=j {
        let g = &s.gadgets()[i];
        e.extend(g.internal_edges());
        if i > 0 {
            e.extend(g.attach());
        }
    }
    let k = s.gadgets().len();
    if k > 2 {
        e.extend(s.backbone().iter().take(j.min(k - 2)).copied());
    } else if k == 2 && j >= 1 {
        e.extend(s.backbone().iter().copied());
    }
    e.sort_unstable();
    e.dedup();
    e
}

/// `(a, b)` cycles of handle `h`, meeting once.
pub fn handle_cycles(s: &CombSurface, h: usize) -> Result<(CurveClass, CurveClass)> {
    match gadget(s, h)? {
        Gadget::Handle { e1, e2, e3a, e3b, .. } => {
            let a = subgraph_curves(s, &[*e1, *e2]);
            let mut be = vec![*e2, *e3a];
            be.extend(e3b);
            let b = subgraph_curves(s, &be);
            match (a.first(), b.first()) {
                (Some(a), Some(b)) => Ok((a.clone(), b.clone())),
                _ => Err(Error::InvariantViolation("handle cycle is not a curve".into())),
            }
        }
        Gadget::Loop { .. } => Err(Error::Unsupported("gadget is not a handle".into())),
    }
}

/// Curve cutting off handle `h` (an h-curve).
pub fn handle_boundary(s: &CombSurface, h: usize) -> Result<CurveClass> {
    let g = gadget(s, h)?;
    subgraph_curves(s, &g.internal_edges())
        .into_iter()
        .next()
        .ok_or_else(|| Error::Unsupported("handle boundary is peripheral".into()))
}

/// Separating curve cutting off gadgets `0..=j`, if essential.
pub fn prefix_curve(s: &CombSurface, j: usize) -> Option<CurveClass> {
    if j + 1 >= s.gadgets().len() {
        return None;
    }
    subgraph_curves(s, &prefix_edges(s, j)).into_iter().next()
}

/// The necklace `β_1..β_m` of pairwise disjoint non-separating curves, any
/// two of which bound: `β_1` is the `a` cycle of handle 0 and `β_{j+1}` also
/// encloses gadgets `1..=j`. On a closed surface the last one coincides with
/// `β_1` and is dropped.
pub fn necklace(s: &CombSurface) -> Result<Vec<CurveClass>> {
    if handles(s) == 0 {
        return Ok(Vec::new());
    }
    let (b1, _) = handle_cycles(s, 0)?;
    let drop = match gadget(s, 0)? {
        Gadget::Handle { e3b, .. } => *e3b,
        Gadget::Loop { .. } => None,
    };
    let mut out = vec![b1.clone()];
    let k = s.gadgets().len();
    for j in 1..k {
        let edges: Vec<u32> = prefix_edges(s, j).into_iter().filter(|e| Some(*e) != drop).collect();
        let next = subgraph_curves(s, &edges)
            .into_iter()
            .find(|c| *c != b1)
            .ok_or_else(|| Error::InvariantViolation("necklace curve missing".into()))?;
        out.push(next);
    }
    if s.is_closed() {
        out.pop();
    }
    Ok(out)
}

/// h-curves `α_1..α_{g-1}` around handles `1..g`.
pub fn alpha_curves(s: &CombSurface) -> Result<Vec<CurveClass>> {
    (1..handles(s)).map(|h| handle_boundary(s, h)).collect()
}

/// Edges of a shortest path between two triangles through path and
/// attaching edges only.
pub(crate) fn skeleton_path(s: &CombSurface, from: u32, to: u32) -> Vec<u32> {
    let mut allowed = vec![false; s.edge_count()];
    for &e in s.backbone() {
        allowed[e as usize] = true;
    }
    for g in s.gadgets() {
        if let Some(e) = g.attach() {
            allowed[e as usize] = true;
        }
    }
    let nt = s.triangle_count();
    let mut prev: Vec<Option<(u32, u32)>> = vec![None; nt];
    let mut seen = vec![false; nt];
    let mut q = VecDeque::new();
    seen[from as usize] = true;
    q.push_back(from);
    while let Some(t) = q.pop_front() {
        if t == to {
            break;
        }
        for i in 0..3 {
            let x = t * 3 + i;
            let e = s.edge_of(x);
            if !allowed[e as usize] {
                continue;
            }
            let u = tri(s.glued(x));
            if !seen[u as usize] {
                seen[u as usize] = true;
                prev[u as usize] = Some((t, e));
                q.push_back(u);
            }
        }
    }
    let mut path = Vec::new();
    let mut t = to;
    while let Some((p, e)) = prev[t as usize] {
        path.push(e);
        t = p;
    }
    path
}

/// A curve whose genus-zero side holds exactly the boundary components
/// `i < j`.
pub fn pair_curve(s: &CombSurface, i: u32, j: u32) -> Result<CurveClass> {
    let p = s.boundary_count();
    if !(1 <= i && i < j && j <= p) {
        return Err(Error::Unsupported("boundary pair out of range".into()));
    }
    let candidates = if j < p {
        let e = pair_subgraph(s, i, j).ok_or_else(|| Error::Unsupported("no loop gadget".into()))?;
        subgraph_curves(s, &e)
    } else {
        let gi = loop_gadget(s, i).ok_or_else(|| Error::Unsupported("no loop gadget".into()))?;
        let g = &s.gadgets()[gi];
        let mut skip = g.internal_edges();
        skip.extend(g.attach());
        let e: Vec<u32> = (0..s.edge_count() as u32).filter(|e| !skip.contains(e)).collect();
        subgraph_curves(s, &e)
    };
    for c in candidates {
        let cut = cut::census(s, core::slice::from_ref(&c))?;
        if cut
            .components
            .iter()
            .any(|q| q.genus == 0 && q.punctures == [i, j] && q.boundary_count() == 3)
        {
            return Ok(c);
        }
    }
    Err(Error::InvariantViolation("pair curve not found".into()))
}

/// Band sum of the `b` cycles of handles `h` and `h + 1`, meeting each of
/// their `a` cycles once.
pub fn chain_curve(s: &CombSurface, h: usize) -> Result<CurveClass> {
    let parts = |h: usize| -> Result<(Vec<u32>, u32)> {
        match gadget(s, h)? {
            Gadget::Handle { e2, e3a, e3b, attach, .. } => {
                let mut v = vec![*e2, *e3a];
                v.extend(e3b);
                let at = attach.ok_or_else(|| Error::Unsupported("handle is not attached".into()))?;
                v.push(at);
                Ok((v, at))
            }
            Gadget::Loop { .. } => Err(Error::Unsupported("gadget is not a handle".into())),
        }
    };
    let (mut edges, a0) = parts(h)?;
    let (e1, a1) = parts(h + 1)?;
    edges.extend(e1);
    edges.extend(skeleton_path(s, tri(s.edge_sides(a0)[0]), tri(s.edge_sides(a1)[0])));
    edges.sort_unstable();
    edges.dedup();
    let bh = handle_cycles(s, h)?.1;
    let bh1 = handle_cycles(s, h + 1)?.1;
    subgraph_curves(s, &edges)
        .into_iter()
        .find(|c| *c != bh && *c != bh1 && !c.is_separating(s))
        .ok_or_else(|| Error::InvariantViolation("chain curve missing".into()))
}

/// Sub-ribbon-graph whose neighbourhood is a disk around boundary components
/// `i < j < p`: both loops and the path joining them.
pub fn pair_subgraph(s: &CombSurface, i: u32, j: u32) -> Option<Vec<u32>> {
    let gi = loop_gadget(s, i)?;
    let gj = loop_gadget(s, j)?;
    let (Gadget::Loop { loop_edge: li, vertex: yi, .. }, Gadget::Loop { loop_edge: lj, vertex: yj, .. }) =
        (&s.gadgets()[gi], &s.gadgets()[gj])
    else {
        return None;
    };
    let mut e = skeleton_path(s, *yi, *yj);
    e.push(*li);
    e.push(*lj);
    e.sort_unstable();
    e.dedup();
    Some(e)
}
