//! Blattner's formula for `SU(p,q)`-type block patterns in type A, the
//! generating series `𝔟(0)`, and the Enright resolutions read off from it.
//!
//! Modules build on each other bottom-up: [`partitions`] and [`rootsys`]
//! hold the combinatorial data, [`lr`] and [`genlr`] compute tensor product
//! multiplicities, [`blattner`] evaluates `B(δ, η)` three ways, [`series`]
//! expands `𝔟(δ)` as a truncated Laurent series, and [`enright`] extracts
//! signed generalized Verma coefficients from it.

pub mod blattner;
pub mod enright;
pub mod error;
pub mod genlr;
pub mod lr;
pub mod partitions;
pub mod rootsys;
pub mod series;

pub use error::{Error, Result};
