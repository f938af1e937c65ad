//! JSON formats for curves, mapping words, catalogs and vertex maps.
//!
//! Curves are stored as sparse weight vectors and revalidated on load.

use std::path::Path;

use serde::{Deserialize, Serialize};
use torelli_core::catalog::Catalog;
use torelli_core::complexes::{ComplexKind, Vertex};
use torelli_core::reconstruction::VertexMap;
use torelli_core::{CombSurface, CurveClass, MappingWord, Token};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Core(#[from] torelli_core::Error),
    #[error("bad surface spec {0:?}, expected g,p")]
    SurfaceSpec(String),
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("file is for S_({0},{1})")]
    WrongSurface(u32, u32),
    #[error("{0}")]
    Invalid(String),
}

pub type FormatResult<T> = Result<T, FormatError>;

/// Parses `g,p`.
pub fn parse_surface(spec: &str) -> FormatResult<(u32, u32)> {
    let bad = || FormatError::SurfaceSpec(spec.into());
    let (g, p) = spec.split_once(',').ok_or_else(bad)?;
    Ok((g.trim().parse().map_err(|_| bad())?, p.trim().parse().map_err(|_| bad())?))
}

/// Nonzero `(edge, weight)` entries.
pub type Sparse = Vec<(u32, u32)>;

pub fn to_sparse(c: &CurveClass) -> Sparse {
    c.weights().iter().enumerate().filter(|(_, &w)| w > 0).map(|(e, &w)| (e as u32, w)).collect()
}

pub fn from_sparse(s: &CombSurface, sp: &Sparse) -> FormatResult<CurveClass> {
    let mut w = vec![0u32; s.edge_count()];
    for &(e, x) in sp {
        let slot = w.get_mut(e as usize).ok_or_else(|| FormatError::Invalid(format!("edge {e} out of range")))?;
        *slot = x;
    }
    Ok(CurveClass::new(s, w)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    pub version: u32,
    pub surface: [u32; 2],
    pub surface_id: u64,
    pub weights: Sparse,
}

impl CurveFile {
    pub fn new(s: &CombSurface, c: &CurveClass) -> CurveFile {
        CurveFile {
            version: FORMAT_VERSION,
            surface: [s.genus(), s.boundary_count()],
            surface_id: s.id(),
            weights: to_sparse(c),
        }
    }

    pub fn load(&self, s: &CombSurface) -> FormatResult<CurveClass> {
        check_header(self.version, self.surface, s)?;
        from_sparse(s, &self.weights)
    }
}

fn check_header(version: u32, surface: [u32; 2], s: &CombSurface) -> FormatResult<()> {
    if version != FORMAT_VERSION {
        return Err(FormatError::Version(version));
    }
    if surface != [s.genus(), s.boundary_count()] {
        return Err(FormatError::WrongSurface(surface[0], surface[1]));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TokenRecord {
    Dehn { curve: Sparse, power: i32 },
    Half { curve: Sparse, power: i32 },
    Bp { first: Sparse, second: Sparse, power: i32 },
}

/// Tokens in order; the last one acts first.
pub fn word_to_records(w: &MappingWord) -> Vec<TokenRecord> {
    w.tokens
        .iter()
        .map(|t| match t {
            Token::Dehn { curve, power } => TokenRecord::Dehn { curve: to_sparse(curve), power: *power },
            Token::Half { curve, power } => TokenRecord::Half { curve: to_sparse(curve), power: *power },
            Token::Bp { first, second, power } => {
                TokenRecord::Bp { first: to_sparse(first), second: to_sparse(second), power: *power }
            }
        })
        .collect()
}

pub fn word_from_records(s: &CombSurface, rs: &[TokenRecord]) -> FormatResult<MappingWord> {
    let tokens = rs
        .iter()
        .map(|r| {
            Ok(match r {
                TokenRecord::Dehn { curve, power } => Token::Dehn { curve: from_sparse(s, curve)?, power: *power },
                TokenRecord::Half { curve, power } => Token::Half { curve: from_sparse(s, curve)?, power: *power },
                TokenRecord::Bp { first, second, power } => {
                    let (a, b) = (from_sparse(s, first)?, from_sparse(s, second)?);
                    if torelli_core::curve::is_bp(s, &a, &b)?.is_none() {
                        return Err(FormatError::Invalid("BP token operands do not form a bounding pair".into()));
                    }
                    Token::Bp { first: a, second: b, power: *power }
                }
            })
        })
        .collect::<FormatResult<Vec<_>>>()?;
    Ok(MappingWord { tokens })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceRecord {
    pub base: usize,
    pub word: Vec<TokenRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub version: u32,
    pub surface: [u32; 2],
    pub surface_id: u64,
    pub depth: u32,
    pub weight_cap: u64,
    pub curves: Vec<Sparse>,
    /// Nonzero entries `(u, v, i)` with `u < v`.
    pub i_matrix: Vec<(usize, usize, u32)>,
    pub bps: Vec<(usize, usize)>,
    pub provenance: Vec<ProvenanceRecord>,
}

impl CatalogFile {
    pub fn new(cat: &Catalog) -> CatalogFile {
        let s = &cat.surface;
        let n = cat.len();
        let i_matrix = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| cat.i(u, v) > 0).map(|(u, v)| (u, v, cat.i(u, v)))
            .collect();
        CatalogFile {
            version: FORMAT_VERSION,
            surface: [s.genus(), s.boundary_count()],
            surface_id: s.id(),
            depth: cat.depth,
            weight_cap: cat.weight_cap,
            curves: cat.curves.iter().map(to_sparse).collect(),
            i_matrix,
            bps: cat.bps.clone(),
            provenance: cat
                .provenance
                .iter()
                .map(|(b, w)| ProvenanceRecord { base: *b, word: word_to_records(w) })
                .collect(),
        }
    }

    pub fn into_catalog(self) -> FormatResult<Catalog> {
        let s = CombSurface::build(self.surface[0], self.surface[1])?;
        check_header(self.version, self.surface, &s)?;
        if self.surface_id != s.id() {
            return Err(FormatError::Invalid("surface id does not match the fixture triangulation".into()));
        }
        let curves = self.curves.iter().map(|c| from_sparse(&s, c)).collect::<FormatResult<Vec<_>>>()?;
        let n = curves.len();
        let mut m = vec![vec![0u32; n]; n];
        for &(u, v, x) in &self.i_matrix {
            if u >= v || v >= n {
                return Err(FormatError::Invalid(format!("matrix entry ({u},{v}) out of range")));
            }
            m[u][v] = x;
            m[v][u] = x;
        }
        let prov = self
            .provenance
            .iter()
            .map(|r| Ok((r.base, word_from_records(&s, &r.word)?)))
            .collect::<FormatResult<Vec<_>>>()?;
        Ok(Catalog::from_parts(&s, curves, m, self.bps, prov, self.depth, self.weight_cap)?)
    }
}

pub fn save_catalog(cat: &Catalog, path: &Path) -> FormatResult<()> {
    let text = serde_json::to_string(&CatalogFile::new(cat))?;
    std::fs::write(path, text)?;
    Ok(())
}

pub fn load_catalog(path: &Path) -> FormatResult<Catalog> {
    let f: CatalogFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    f.into_catalog()
}

/// A vertex map given either by a mapping word, whose induced map is used,
/// or by explicit vertex pairs over the catalog ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub version: u32,
    pub surface: [u32; 2],
    #[serde(default)]
    pub word: Option<Vec<TokenRecord>>,
    #[serde(default)]
    pub pairs: Option<Vec<(Vertex, Vertex)>>,
    /// Whether the pairs come from an automorphism of the whole complex.
    #[serde(default)]
    pub automorphism: bool,
}

pub enum MapSource {
    Word(MappingWord),
    Pairs(VertexMap),
}

impl MapFile {
    pub fn resolve(&self, cat: &Catalog, kind: ComplexKind) -> FormatResult<MapSource> {
        let s = &cat.surface;
        check_header(self.version, self.surface, s)?;
        match (&self.word, &self.pairs) {
            (Some(w), None) => Ok(MapSource::Word(word_from_records(s, w)?)),
            (None, Some(p)) => {
                for v in p.iter().flat_map(|(a, b)| [a, b]) {
                    if v.curves().iter().any(|&u| u >= cat.len()) {
                        return Err(FormatError::Invalid(format!("vertex {v:?} is not in the catalog")));
                    }
                }
                Ok(MapSource::Pairs(VertexMap::new(kind, p.clone(), self.automorphism)))
            }
            _ => Err(FormatError::Invalid("map file needs exactly one of word, pairs".into())),
        }
    }
}
