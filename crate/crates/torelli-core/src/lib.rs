//! Exact combinatorics of simple closed curves on compact orientable surfaces.
//!
//! Surfaces are ideal triangulations in which every boundary component is an
//! ideal vertex. Curves are normal coordinates (edge weights). On top of that
//! sit intersection numbers, cutting, Dehn and half twists, curve catalogs,
//! the complexes C, C_s and T, motif searches, the reconstruction of curve
//! maps from vertex maps, and the torus braid group bookkeeping.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod braid;
pub mod catalog;
pub mod cliques;
pub mod complexes;
pub mod curve;
pub mod cut;
pub mod draw;
pub mod error;
pub mod filled;
pub mod intersect;
pub mod marking;
pub mod motifs;
pub mod normal;
pub mod reconstruction;
pub mod surface;
pub mod twist;
pub mod walk;

pub use curve::{BoundedPair, CurveClass, TopoTag, TopoType};
pub use cut::{CutComponent, CutResult};
pub use error::{Error, Result};
pub use surface::CombSurface;
pub use twist::{MappingWord, Token};
