//! Exact computations with pointed fusion categories `Vec_A`: metric groups,
//! Lagrangian correspondences, module categories and their tensor products,
//! the Brauer-Picard group, and group-cohomology obstruction spaces.

pub mod abelian;
pub mod cohomology;
pub mod error;
pub mod lag;
pub mod metric;
pub mod modcat;
pub mod obstructions;
pub mod selftest;

pub use error::{Error, Result};
