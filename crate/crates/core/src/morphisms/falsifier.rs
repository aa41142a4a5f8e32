//! Random search for a surjective Lie morphism `u_max(n) → heis^ℍ(7)`.
//! Evidence only: the proof is in [`super::obstruction`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::{int, render};
use crate::liealg::structure::morphism_defects;
use crate::liealg::{heis_h, u_max, LinearMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Candidate {
    /// Rank below 7: not surjective, not counted.
    NotSurjective(usize),
    /// First basis pair on which the morphism property fails.
    Violates(usize, usize),
    Counterexample,
}

pub fn classify_candidate(f: &LinearMap<'_>) -> Candidate {
    let rank = f.rank();
    if rank < f.target.dim() {
        return Candidate::NotSurjective(rank);
    }
    match morphism_defects(f).first() {
        Some(&(i, j)) => Candidate::Violates(i, j),
        None => Candidate::Counterexample,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FalsifierReport {
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub source_dim: usize,
    pub rejected_not_surjective: usize,
    pub checked: usize,
    /// Full matrices of maps passing every check; must stay empty.
    pub counterexamples: Vec<Vec<Vec<String>>>,
    pub warnings: Vec<String>,
}

impl FalsifierReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Samples maps with integer entries in `[-3, 3]`.
pub fn random_morphism_falsifier(n: usize, trials: usize, seed: u64) -> Result<FalsifierReport> {
    let g = u_max(n)?;
    let h = heis_h(7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = FalsifierReport {
        n,
        seed,
        trials,
        source_dim: g.dim(),
        rejected_not_surjective: 0,
        checked: 0,
        counterexamples: Vec::new(),
        warnings: Vec::new(),
    };
    if trials == 0 {
        report.warnings.push("no trials requested; vacuous pass".into());
    }
    if g.dim() < h.dim() {
        report.warnings.push(format!(
            "dim u_max({n}) = {} < 7: no surjection exists, every sample is rejected",
            g.dim()
        ));
    }
    for _ in 0..trials {
        let rows: Vec<Vec<_>> = (0..h.dim())
            .map(|_| (0..g.dim()).map(|_| int(rng.gen_range(-3..=3))).collect())
            .collect();
        let f = LinearMap::new(&g, &h, QMatrix::from_rows(rows))?;
        match classify_candidate(&f) {
            Candidate::NotSurjective(_) => report.rejected_not_surjective += 1,
            Candidate::Violates(..) => report.checked += 1,
            Candidate::Counterexample => {
                report.checked += 1;
                report.counterexamples.push(
                    (0..h.dim())
                        .map(|r| f.matrix.row(r).iter().map(render).collect())
                        .collect(),
                );
            }
        }
    }
    Ok(report)
}
