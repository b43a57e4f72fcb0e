//! Exact-arithmetic engine for the combinatorics of rank-one multiplicity-free
//! actions: finite and affine root systems, the catalog of rank-one local
//! models, decorated-diagram checking and enumeration, and the reconstruction
//! of the momentum segment `[X1, X2]` with its weight.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every value is
//! immutable after construction and every operation is a pure function.

pub mod classify;
pub mod error;
pub mod feas;
pub mod grammar;
pub mod jsonio;
pub mod linalg;
pub mod localmodels;
pub mod realize;
pub mod render;
pub mod rootsys;
pub mod selftest;

pub use error::Error;
pub use linalg::Q;
pub use rootsys::{ComponentKind, DynkinDiagram, Series};
