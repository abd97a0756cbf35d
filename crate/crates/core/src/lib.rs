//! Numerical toolkit for planar harmonic mappings `f = h + conj(g)` of the
//! unit disk, with `h` and `g` truncated power series.
//!
//! The crate computes the harmonic area function and class constants,
//! coefficient bounds, Landau univalence and covering radii, Bloch and BMO
//! norms, Lipschitz-type constants, and convexity-related inequalities, and
//! checks each quantitative statement against sampled data.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod area;
pub mod bounds;
pub mod error;
pub mod grid;
pub mod landau;
pub mod lipschitz;
pub mod majorant;
pub mod mapfile;
pub mod mapping;
pub mod minimize;
pub mod norms;
pub mod quadrature;
pub mod sampling;
pub mod series;

pub use area::{area_quadrature, area_series, class_constants, ClassReport};
pub use error::{Error, Result};
pub use grid::{Boundary, DiskGrid};
pub use majorant::Majorant;
pub use mapfile::MappingSpec;
pub use mapping::{HarmonicMap, LocalData};
pub use num_complex::Complex64;
pub use series::ComplexSeries;
