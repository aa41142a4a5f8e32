//! Lie morphism checks and the obstruction to surjecting a subalgebra of
//! `u_max` onto `heis^ℍ(7)`.

pub mod falsifier;
pub mod obstruction;

pub use falsifier::{classify_candidate, random_morphism_falsifier, Candidate, FalsifierReport};
pub use obstruction::{heis7_bracket_table, obstruction_identities, BracketTable, ObstructionReport};

use crate::liealg::structure::morphism_defects;
use crate::liealg::LinearMap;

/// `f[x, y] = [f x, f y]` on every basis pair of the source.
pub fn is_lie_morphism(f: &LinearMap<'_>) -> bool {
    morphism_defects(f).is_empty()
}
