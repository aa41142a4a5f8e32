//! Exact-arithmetic toolkit for the real rank-one simple Lie algebras
//! `o(1,k)`, `su(1,k)`, `sp(1,k)`, their Heisenberg nilradicals, the parabolic
//! geometry of `o(2,n)`, and the root-system arithmetic of rank-two
//! subalgebras. Every computation is over ℚ; nothing is approximate.

pub mod checks;
pub mod conformal;
pub mod error;
pub mod exactmath;
pub mod liealg;
pub mod morphisms;
pub mod nilpotent;
pub mod report;
pub mod rootspace;
pub mod rootsys;

pub use error::{Error, Result};
