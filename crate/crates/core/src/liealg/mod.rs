//! Lie algebras over ℚ, the constructed families and structural queries.

pub mod algebra;
pub mod embeddings;
pub mod families;
pub mod semidirect;
pub mod structure;

pub use algebra::{LieAlgebra, LinearMap, Realization, RealizationMatrices, Sparse, Subspace};
pub use families::{
    f4_nilradical, heis_c, heis_h, o1k, o2n_coords, orthogonal, parabolic_p, sp1k, su1k, u_max, O2nLayout, RankOne,
};
pub use structure::{structure_report, subalgebra_closure, verify_isomorphism, Certify, StructureReport};
