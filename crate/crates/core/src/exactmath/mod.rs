//! Exact scalars (ℚ, ℚ(i), rational quaternions and octonions) and dense exact
//! linear algebra over ℚ.

pub mod eigen;
pub mod form;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod scalar;

pub use eigen::{eigenspace_split, EigenSplit};
pub use form::{Signature, SymmetricForm};
pub use matrix::{Matrix, QMatrix};
pub use rational::Rational;
pub use scalar::{Gaussian, Octonion, Quaternion, Ring, Scalar, ScalarKind};
