//! The presentation of the braid group `B_n(T)` of the torus, the
//! homomorphism `p: B_n(T) -> Z^2` and the generators of its center.
//!
//! Words are free-group words with free reduction only.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    /// `σ_i`, `1 <= i <= n-1`.
    Sigma(u32),
    A,
    B,
}

/// A generator with a nonzero exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: Gen,
    pub exp: i32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn gen(g: Gen, exp: i32) -> Word {
        let mut w = Word::empty();
        w.push(g, exp);
        w
    }

    pub fn s(i: u32) -> Word {
        Word::gen(Gen::Sigma(i), 1)
    }

    pub fn a() -> Word {
        Word::gen(Gen::A, 1)
    }

    pub fn b() -> Word {
        Word::gen(Gen::B, 1)
    }

    /// Appends `g^exp`, reducing freely against the last letter.
    pub fn push(&mut self, g: Gen, exp: i32) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.gen == g {
                last.exp += exp;
                if last.exp == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push(Letter { gen: g, exp });
    }

    pub fn then(mut self, other: &Word) -> Word {
        for l in &other.0 {
            self.push(l.gen, l.exp);
        }
        self
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| Letter { gen: l.gen, exp: -l.exp }).collect())
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::empty(), |acc, _| acc.then(&base))
    }

    pub fn concat(parts: &[Word]) -> Word {
        parts.iter().fold(Word::empty(), |acc, w| acc.then(w))
    }

    /// Number of letters `g^{±1}` counted with multiplicity.
    pub fn count(&self, g: Gen) -> u32 {
        self.0.iter().filter(|l| l.gen == g).map(|l| l.exp.unsigned_abs()).sum()
    }

    /// Parses letters `s<i>`, `a`, `b`, each optionally followed by `^<k>`,
    /// separated by whitespace or `*`.
    pub fn parse(text: &str) -> Result<Word> {
        let mut w = Word::empty();
        for tok in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i32>().map_err(|_| Error::UnknownGenerator(tok.into()))?),
                None => (tok, 1),
            };
            let g = match name {
                "a" => Gen::A,
                "b" => Gen::B,
                _ => match name.strip_prefix('s').and_then(|i| i.parse::<u32>().ok()) {
                    Some(i) if i >= 1 => Gen::Sigma(i),
                    _ => return Err(Error::UnknownGenerator(name.into())),
                },
            };
            w.push(g, exp);
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match l.gen {
                Gen::Sigma(i) => write!(f, "s{i}")?,
                Gen::A => f.write_str("a")?,
                Gen::B => f.write_str("b")?,
            }
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}

/// One relation `lhs = rhs` with its family name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub family: String,
    pub lhs: Word,
    pub rhs: Word,
}

/// Generators `σ_1..σ_{n-1}, a, b` and the relations of `B_n(T)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidPresentation {
    pub n: u32,
    pub relations: Vec<Relation>,
}

fn rel(family: &str, lhs: Word, rhs: Word) -> Relation {
    Relation { family: family.into(), lhs, rhs }
}

impl BraidPresentation {
    pub fn new(n: u32) -> Result<BraidPresentation> {
        if n < 2 {
            return Err(Error::Unsupported(format!("B_n(T) needs n >= 2, got {n}")));
        }
        let s = Word::s;
        let si = |i: u32| Word::gen(Gen::Sigma(i), -1);
        let (a, b) = (Word::a(), Word::b());
        let mut relations = Vec::new();
        for i in 1..n {
            for j in i + 2..n {
                relations.push(rel("BR1", Word::concat(&[s(i), s(j)]), Word::concat(&[s(j), s(i)])));
            }
        }
        for i in 1..n.saturating_sub(1) {
            relations.push(rel(
                "BR2",
                Word::concat(&[s(i), s(i + 1), s(i)]),
                Word::concat(&[s(i + 1), s(i), s(i + 1)]),
            ));
        }
        for i in 2..n {
            for x in [&a, &b] {
                relations.push(rel("R1", Word::concat(&[x.clone(), s(i)]), Word::concat(&[s(i), x.clone()])));
            }
        }
        for x in [&a, &b] {
            relations.push(rel(
                "R2",
                Word::concat(&[si(1), x.clone(), si(1), x.clone()]),
                Word::concat(&[x.clone(), si(1), x.clone(), si(1)]),
            ));
        }
        relations.push(rel(
            "R3",
            Word::concat(&[si(1), a.clone(), si(1), b.clone()]),
            Word::concat(&[b.clone(), si(1), a.clone(), s(1)]),
        ));
        // [a, b^-1] = a b^-1 a^-1 b
        let comm = Word::concat(&[a.clone(), b.inverse(), a.inverse(), b.clone()]);
        let mut rhs = Word::empty();
        for i in 1..n - 1 {
            rhs = rhs.then(&s(i));
        }
        rhs = rhs.then(&s(n - 1).pow(2));
        for i in (1..n - 1).rev() {
            rhs = rhs.then(&s(i));
        }
        relations.push(rel("TR", comm, rhs));
        Ok(BraidPresentation { n, relations })
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        for l in &w.0 {
            if let Gen::Sigma(i) = l.gen {
                if i == 0 || i >= self.n {
                    return Err(Error::UnknownGenerator(format!("s{i} in B_{}(T)", self.n)));
                }
            }
        }
        Ok(())
    }

    /// `p` on a word over this presentation's generators.
    pub fn p(&self, w: &Word) -> Result<(i64, i64)> {
        self.check_word(w)?;
        Ok(p_hom(w))
    }
}

/// Exponent sums of `a` and `b`: `p(σ_i) = (0,0)`, `p(a) = (1,0)`,
/// `p(b) = (0,1)`.
pub fn p_hom(w: &Word) -> (i64, i64) {
    let mut out = (0i64, 0i64);
    for l in &w.0 {
        match l.gen {
            Gen::A => out.0 += l.exp as i64,
            Gen::B => out.1 += l.exp as i64,
            Gen::Sigma(_) => {}
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub family: String,
    pub lhs: String,
    pub rhs: String,
    pub p_lhs: (i64, i64),
    pub p_rhs: (i64, i64),
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellDefinedReport {
    pub n: u32,
    pub checks: Vec<RelationCheck>,
    pub pass: bool,
}

/// Evaluates `p` on both sides of every relation.
pub fn check_p_well_defined(pres: &BraidPresentation) -> Result<WellDefinedReport> {
    let mut checks = Vec::with_capacity(pres.relations.len());
    for r in &pres.relations {
        let (pl, pr) = (pres.p(&r.lhs)?, pres.p(&r.rhs)?);
        checks.push(RelationCheck {
            family: r.family.clone(),
            lhs: format!("{}", r.lhs),
            rhs: format!("{}", r.rhs),
            p_lhs: pl,
            p_rhs: pr,
            pass: pl == pr,
        });
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(WellDefinedReport { n: pres.n, checks, pass })
}

/// `x (σ_1^-1 x σ_1^-1) (σ_2^-1 σ_1^-1 x σ_1^-1 σ_2^-1) ...` for `x = a, b`.
pub fn center_words(pres: &BraidPresentation) -> (Word, Word) {
    let make = |x: Gen| {
        let mut w = Word::gen(x, 1);
        for k in 1..pres.n {
            for i in (1..=k).rev() {
                w.push(Gen::Sigma(i), -1);
            }
            w.push(x, 1);
            for i in 1..=k {
                w.push(Gen::Sigma(i), -1);
            }
        }
        w
    };
    (make(Gen::A), make(Gen::B))
}

/// `p` of the two center generators.
pub fn p_of_center(pres: &BraidPresentation) -> Result<[(i64, i64); 2]> {
    let (za, zb) = center_words(pres);
    Ok([pres.p(&za)?, pres.p(&zb)?])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommensuratorReport {
    pub n: u32,
    pub statement: String,
    pub p_center: [(i64, i64); 2],
    pub relations_pass: bool,
    pub notes: Vec<String>,
}

/// The structure of the abstract commensurator of `PB_n(T)`, stated
/// symbolically with the verified `p`-data attached.
pub fn commensurator_report(n: u32) -> Result<CommensuratorReport> {
    if n < 2 {
        return Err(Error::Unsupported(format!("the commensurator statement needs n >= 2, got {n}")));
    }
    let pres = BraidPresentation::new(n)?;
    let wd = check_p_well_defined(&pres)?;
    let pz = p_of_center(&pres)?;
    let mut notes = alloc::vec![
        format!("p(Z) = <({n},0), (0,{n})>"),
        String::from("H is the direct limit of H^1(Gamma_i, Z^2), a countably infinite dimensional Q-vector space"),
    ];
    if n == 2 {
        notes.push(String::from("I(S_(1,2)) is isomorphic to pi_1(S_(1,1)), a free group of rank two"));
    } else {
        notes.push(format!("Comm(I(S_(1,{n}))) is naturally isomorphic to Mod*(S_(1,{n}))"));
    }
    Ok(CommensuratorReport {
        n,
        statement: format!("Comm(PB_{n}(T)) = Comm(I(S_(1,{n}))) x| (GL(2,Q) x| H)"),
        p_center: pz,
        relations_pass: wd.pass,
        notes,
    })
}
