//! Affine and modified affine Solomon-Stiffler codes over small finite
//! fields: construction, exact weight distributions and Griesmer-bound
//! optimality checks.

pub mod analysis;
pub mod construction;
pub mod enumerate;
pub mod error;
pub mod gf;
pub mod io;
pub mod linalg;

pub use error::{Error, Result};
