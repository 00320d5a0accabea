//! Weighted generalized fractional calculus with Mittag-Leffler kernels.
//!
//! The crate provides the left and right weighted derivatives and integrals on
//! uniform grids, a numerical check of their integration-by-parts duality, and an
//! indirect (forward-backward sweep) solver for optimal control and variational
//! problems whose dynamics are written with the left derivative.

pub mod cli;
pub mod error;
pub mod expr;
pub mod grid;
pub mod ibp;
pub mod ml;
pub mod ocp;
pub mod ops;
pub mod params;
pub mod variational;

pub use error::{Error, Result};
pub use grid::{Grid, GridFunction, WeightFunction};
pub use params::{Normalization, OperatorParams};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
