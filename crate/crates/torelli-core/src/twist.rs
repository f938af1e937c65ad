//! Mapping classes as words of twists, acting on curves.
//!
//! A Dehn twist acts by surgery on a joint drawing: at every crossing the
//! twisted curve turns onto the twisting curve, runs once around it and
//! carries on. The resulting walk is reduced and read back as normal
//! coordinates.
//!
//! A half twist is supported on a disk `D` holding two boundary components
//! and bounded by a standard pair curve. `D` is a neighbourhood of a sub-ribbon-
//! graph made of the two loops and the path between them. Every stretch of a
//! curve inside `D` is closed up along `∂D` into a loop based on `∂D`, the
//! loop is rewritten by the braid automorphism of the free group of `D`, and
//! the stretch is replaced by the result.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::curve::CurveClass;
use crate::draw::Drawing;
use crate::error::{Error, Result};
use crate::marking;
use crate::surface::{next_side, slot, tri, CombSurface, Side};
use crate::walk;

/// One generator of a mapping word, raised to a power.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Token {
    /// Left Dehn twist `t_c`.
    Dehn { curve: CurveClass, power: i32 },
    /// Half twist about a p-curve whose pair of pants holds two boundary
    /// components; its square is `t_c`.
    Half { curve: CurveClass, power: i32 },
    /// Bounding pair twist `t_a t_b^{-1}`.
    Bp { first: CurveClass, second: CurveClass, power: i32 },
}

impl Token {
    pub fn inverse(&self) -> Token {
        match self {
            Token::Dehn { curve, power } => Token::Dehn { curve: curve.clone(), power: -power },
            Token::Half { curve, power } => Token::Half { curve: curve.clone(), power: -power },
            Token::Bp { first, second, power } => {
                Token::Bp { first: first.clone(), second: second.clone(), power: -power }
            }
        }
    }

    fn curves(&self) -> Vec<&CurveClass> {
        match self {
            Token::Dehn { curve, .. } | Token::Half { curve, .. } => vec![curve],
            Token::Bp { first, second, .. } => vec![first, second],
        }
    }
}

/// A product of tokens; the rightmost token acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MappingWord {
    pub tokens: Vec<Token>,
}

impl MappingWord {
    pub fn identity() -> Self {
        MappingWord { tokens: Vec::new() }
    }

    pub fn single(t: Token) -> Self {
        MappingWord { tokens: vec![t] }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MappingWord) -> MappingWord {
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        MappingWord { tokens }
    }

    pub fn inverse(&self) -> MappingWord {
        MappingWord { tokens: self.tokens.iter().rev().map(Token::inverse).collect() }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Image of a curve.
    pub fn apply(&self, s: &CombSurface, a: &CurveClass) -> Result<CurveClass> {
        if a.surface_id() != s.id() {
            return Err(Error::SurfaceMismatch);
        }
        let mut cur = a.clone();
        for t in self.tokens.iter().rev() {
            cur = apply_token(s, t, &cur)?;
        }
        Ok(cur)
    }
}

/// Image of a curve under one token.
pub fn apply_token(s: &CombSurface, t: &Token, a: &CurveClass) -> Result<CurveClass> {
    if t.curves().iter().any(|c| c.surface_id() != s.id()) {
        return Err(Error::SurfaceMismatch);
    }
    match t {
        Token::Dehn { curve, power } => dehn(s, curve, a, *power),
        Token::Half { curve, power } => half(s, curve, a, *power),
        Token::Bp { first, second, power } => {
            let b = dehn(s, second, a, -*power)?;
            dehn(s, first, &b, *power)
        }
    }
}

/// The word `t_x` of a Torelli vertex: a separating curve or a bounding pair.
pub fn twist_about_curve(s: &CombSurface, a: &CurveClass) -> Result<MappingWord> {
    if a.is_separating(s) {
        Ok(MappingWord::single(Token::Dehn { curve: a.clone(), power: 1 }))
    } else {
        Err(Error::NotATorelliVertex("non-separating curve".to_string()))
    }
}

/// The word `t_a t_b^{-1}` of a bounding pair.
pub fn twist_about_pair(s: &CombSurface, a: &CurveClass, b: &CurveClass) -> Result<MappingWord> {
    match crate::curve::is_bp(s, a, b)? {
        Some(_) => Ok(MappingWord {
            tokens: vec![
                Token::Dehn { curve: a.clone(), power: 1 },
                Token::Dehn { curve: b.clone(), power: -1 },
            ],
        }),
        None => Err(Error::NotATorelliVertex("not a bounding pair".to_string())),
    }
}

/// `t_c^power (a)`.
pub fn dehn(s: &CombSurface, c: &CurveClass, a: &CurveClass, power: i32) -> Result<CurveClass> {
    if power == 0 || a == c {
        return Ok(a.clone());
    }
    let d = Drawing::new(s, &[a.weights(), c.weights()]);
    let xs = d.crossings_along(0, 1);
    if xs.is_empty() {
        return Ok(a.clone());
    }
    let aw = d.walk(0);
    let cw = d.walk(1);
    let m = cw.len();
    let reps = power.unsigned_abs() as usize;
    let mut out = Vec::with_capacity(aw.len() + xs.len() * m * reps);
    let mut next = 0;
    for (k, &x) in aw.iter().enumerate() {
        while next < xs.len() && xs[next].0 == k {
            let (_, _, q, _, left) = xs[next];
            let forward = left == (power > 0);
            for _ in 0..reps {
                if forward {
                    out.extend((0..m).map(|r| cw[(q + r) % m]));
                } else {
                    out.extend((1..=m).map(|r| s.glued(cw[(q + m - r) % m])));
                }
            }
            next += 1;
        }
        out.push(x);
    }
    curve_of_walk(s, &out)
}

fn curve_of_walk(s: &CombSurface, w: &[Side]) -> Result<CurveClass> {
    match CurveClass::from_walk(s, w) {
        Ok(c) => Ok(c),
        Err(e) => Err(Error::InvariantViolation(alloc::format!("twisted curve is not simple: {e}"))),
    }
}

/// Boundary pair `(i, j)` of a standard pair curve, `i < j < p`.
fn standard_pair(s: &CombSurface, c: &CurveClass) -> Result<(u32, u32)> {
    let cut = crate::cut::census(s, core::slice::from_ref(c))?;
    let q = cut
        .components
        .iter()
        .find(|q| q.genus == 0 && q.punctures.len() == 2 && q.boundary_count() == 3 && !q.marked)
        .ok_or_else(|| Error::UnsupportedHalfTwist("curve does not cut off two boundary components".to_string()))?;
    let (i, j) = (q.punctures[0], q.punctures[1]);
    if j >= s.boundary_count() {
        return Err(Error::UnsupportedHalfTwist("pants contain the last boundary component".to_string()));
    }
    if marking::pair_curve(s, i, j)? != *c {
        return Err(Error::UnsupportedHalfTwist("p-curve is not in standard position".to_string()));
    }
    Ok((i, j))
}

/// A letter of the free group of the disk: generator 0 or 1 and a sign.
type Letter = (usize, bool);

/// Free group data of a disk neighbourhood of a sub-ribbon-graph.
struct DiskGroup {
    in_sub: Vec<bool>,
    verts: Vec<bool>,
    boundary: Vec<Side>,
    /// Index along the boundary walk at which each external side is passed.
    gap: Vec<Option<usize>>,
    /// Loop sides traversed positively, per generator.
    loops: [Side; 2],
    /// Tree paths from the base triangle to each loop vertex.
    paths: [Vec<Side>; 2],
    /// The boundary loop reads `g1 g2` for these letters.
    g: [Letter; 2],
}

impl DiskGroup {
    fn new(s: &CombSurface, edges: &[u32], c: &CurveClass) -> Result<Self> {
        let mut in_sub = vec![false; s.edge_count()];
        for &e in edges {
            in_sub[e as usize] = true;
        }
        let mut verts = vec![false; s.triangle_count()];
        for &e in edges {
            for x in s.edge_sides(e) {
                verts[tri(x) as usize] = true;
            }
        }
        let boundary = walk::subgraph_boundaries(s, edges)
            .into_iter()
            .find(|b| CurveClass::from_walk(s, b).map(|x| x == *c).unwrap_or(false))
            .ok_or_else(|| Error::InvariantViolation("disk boundary not found".to_string()))?;
        let mut gap = vec![None; 3 * s.triangle_count()];
        for (j, &b) in boundary.iter().enumerate() {
            let mut y = next_side(s.glued(b));
            while !in_sub[s.edge_of(y) as usize] {
                gap[y as usize] = Some(j);
                y = next_side(y);
            }
        }
        let mut loop_sides = Vec::new();
        for &e in edges {
            let [x, y] = s.edge_sides(e);
            if tri(x) == tri(y) {
                let pos = if slot(x) == 1 { x } else { y };
                loop_sides.push(pos);
            }
        }
        if loop_sides.len() != 2 {
            return Err(Error::InvariantViolation("disk graph needs two loops".to_string()));
        }
        let base = tri(boundary[0]);
        let tree: Vec<u32> = edges
            .iter()
            .copied()
            .filter(|&e| {
                let [x, y] = s.edge_sides(e);
                tri(x) != tri(y)
            })
            .collect();
        let paths = [
            tree_walk(s, &tree, base, tri(loop_sides[0])),
            tree_walk(s, &tree, base, tri(loop_sides[1])),
        ];
        let mut dg = DiskGroup {
            in_sub,
            verts,
            boundary: boundary.clone(),
            gap,
            loops: [loop_sides[0], loop_sides[1]],
            paths,
            g: [(0, true), (1, true)],
        };
        let word = dg.read(s, &boundary);
        if word.len() != 2 || word[0].0 == word[1].0 {
            return Err(Error::InvariantViolation("disk boundary is not a product of the two loops".to_string()));
        }
        dg.g = [word[0], word[1]];
        Ok(dg)
    }

    /// Letters of a closed walk at the base triangle inside the subgraph.
    fn read(&self, s: &CombSurface, w: &[Side]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::new();
        for &x in w {
            for (i, &l) in self.loops.iter().enumerate() {
                let letter = if x == l {
                    Some((i, true))
                } else if x == s.glued(l) {
                    Some((i, false))
                } else {
                    None
                };
                if let Some(le) = letter {
                    if out.last() == Some(&(le.0, !le.1)) {
                        out.pop();
                    } else {
                        out.push(le);
                    }
                }
            }
        }
        out
    }

    /// Closed walk at the base triangle spelling a word.
    fn spell(&self, s: &CombSurface, word: &[Letter]) -> Vec<Side> {
        let mut out = Vec::new();
        for &(i, pos) in word {
            out.extend(self.paths[i].iter().copied());
            out.push(if pos { self.loops[i] } else { s.glued(self.loops[i]) });
            out.extend(walk::reverse(s, &self.paths[i]));
        }
        walk::reduce_open(s, &out)
    }

    /// Image of a letter under one positive (or negative) braid generator.
    fn image(&self, le: Letter, positive: bool) -> Vec<Letter> {
        let [g1, g2] = self.g;
        let inv = |l: Letter| (l.0, !l.1);
        let (which, same) = if le.0 == g1.0 { (0, le.1 == g1.1) } else { (1, le.1 == g2.1) };
        let img: Vec<Letter> = match (positive, which) {
            (true, 0) => vec![g1, g2, inv(g1)],
            (true, _) => vec![g1],
            (false, 0) => vec![g2],
            (false, _) => vec![inv(g2), g1, g2],
        };
        if same {
            img
        } else {
            img.into_iter().rev().map(inv).collect()
        }
    }

    fn act(&self, word: &[Letter], positive: bool) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::new();
        for &le in word {
            for l in self.image(le, positive) {
                if out.last() == Some(&(l.0, !l.1)) {
                    out.pop();
                } else {
                    out.push(l);
                }
            }
        }
        out
    }

    /// Walk from the base triangle to the external side `x` along `∂D`.
    fn reference(&self, x: Side) -> &[Side] {
        let j = self.gap[x as usize].expect("external side lies on the disk boundary");
        &self.boundary[..=j]
    }
}

/// Walk along a tree from triangle `from` to triangle `to`.
fn tree_walk(s: &CombSurface, tree: &[u32], from: u32, to: u32) -> Vec<Side> {
    let nt = s.triangle_count();
    let mut prev: Vec<Option<Side>> = vec![None; nt];
    let mut seen = vec![false; nt];
    let mut stack = vec![from];
    seen[from as usize] = true;
    while let Some(t) = stack.pop() {
        for i in 0..3 {
            let x = t * 3 + i;
            if !tree.contains(&s.edge_of(x)) {
                continue;
            }
            let u = tri(s.glued(x));
            if !seen[u as usize] {
                seen[u as usize] = true;
                prev[u as usize] = Some(x);
                stack.push(u);
            }
        }
    }
    let mut path = Vec::new();
    let mut t = to;
    while let Some(x) = prev[t as usize] {
        path.push(x);
        t = tri(x);
    }
    path.reverse();
    path
}

/// Handedness of the braid generator whose square is the left Dehn twist.
const POSITIVE_IS_SQUARE_ROOT: bool = false;

/// `h_c^power (a)` for the half twist about a standard pair curve.
pub fn half(s: &CombSurface, c: &CurveClass, a: &CurveClass, power: i32) -> Result<CurveClass> {
    let (i, j) = standard_pair(s, c)?;
    if power == 0 || a == c {
        return Ok(a.clone());
    }
    let edges = marking::pair_subgraph(s, i, j)
        .ok_or_else(|| Error::UnsupportedHalfTwist("no disk graph".to_string()))?;
    let dg = DiskGroup::new(s, &edges, c)?;
    let positive = (power > 0) == POSITIVE_IS_SQUARE_ROOT;
    let reps = power.unsigned_abs();
    let aw = a.walk(s);
    let n = aw.len();
    let external = |x: Side| !dg.in_sub[s.edge_of(x) as usize];
    let Some(start) = (0..n).find(|&k| external(aw[(k + n - 1) % n])) else {
        return Ok(a.clone());
    };
    let rot: Vec<Side> = (0..n).map(|k| aw[(start + k) % n]).collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < n {
        if !dg.verts[tri(rot[k]) as usize] {
            out.push(rot[k]);
            k += 1;
            continue;
        }
        let entry = s.glued(rot[(k + n - 1) % n]);
        let mut end = k;
        while !external(rot[end]) {
            end += 1;
        }
        let exit = rot[end];
        let mut gamma: Vec<Side> = dg.reference(entry).to_vec();
        gamma.extend_from_slice(&rot[k..end]);
        gamma.extend(walk::reverse(s, dg.reference(exit)));
        let mut word = dg.read(s, &walk::reduce_open(s, &gamma));
        for _ in 0..reps {
            word = dg.act(&word, positive);
        }
        let mut seg = walk::reverse(s, dg.reference(entry));
        seg.extend(dg.spell(s, &word));
        seg.extend_from_slice(dg.reference(exit));
        out.extend(walk::reduce_open(s, &seg));
        out.push(exit);
        k = end + 1;
    }
    curve_of_walk(s, &out)
}
