//! Surface fixtures and catalogs, read from a fixture directory when one is
//! configured and built otherwise.

use std::path::{Path, PathBuf};

use torelli_core::catalog::{self, Catalog};
use torelli_core::CombSurface;

use crate::format::{self, FormatResult};

/// Environment variable naming the fixture directory.
pub const FIXTURE_ENV: &str = "TORELLI_FIXTURES";

pub fn fixture_dir() -> Option<PathBuf> {
    std::env::var_os(FIXTURE_ENV).map(PathBuf::from)
}

pub fn catalog_file_name(g: u32, p: u32) -> String {
    format!("catalog_{g}_{p}.json")
}

/// Bounds used when none are given.
pub fn default_bounds(g: u32, p: u32) -> (u32, u64) {
    catalog::default_bounds(g, p)
}

/// The catalog for `S_{g,p}` at the given bounds. A fixture file with the
/// same bounds is used when present.
pub fn catalog(g: u32, p: u32, depth: u32, weight_cap: u64, dir: Option<&Path>) -> FormatResult<Catalog> {
    if let Some(dir) = dir {
        let path = dir.join(catalog_file_name(g, p));
        if path.exists() {
            let cat = format::load_catalog(&path)?;
            if cat.depth == depth && cat.weight_cap == weight_cap {
                return Ok(cat);
            }
        }
    }
    let s = CombSurface::build(g, p)?;
    Ok(catalog::enumerate_orbit(
        &s,
        &catalog::standard_marking(&s)?,
        &catalog::standard_generators(&s)?,
        depth,
        weight_cap,
    )?)
}

pub fn default_catalog(g: u32, p: u32) -> FormatResult<Catalog> {
    let (d, w) = default_bounds(g, p);
    catalog(g, p, d, w, fixture_dir().as_deref())
}
