//! Support code for the `affine-ss` command-line tool: embedded expected
//! values and the `reproduce` regression checks.

pub mod data;
pub mod reproduce;
