//! Restricted root spaces of the rank-one algebras: Cartan data, the `sl₂`
//! identity on `h_{−α}`, and irreducibility of `h_0` acting on root spaces.

pub mod cartan;
pub mod meataxe;
pub mod sl2;

pub use cartan::{ad_diagonal_profile, decompose, CartanData, DiagonalProfile, RootDecomposition, TraceForm};
pub use meataxe::{irreducible, Irreducibility, IrreducibilityReport, Module};
pub use sl2::{su_complex_structure, verify_sl2_identity, Sl2Certificate, Sl2Check, Sl2Variant};
