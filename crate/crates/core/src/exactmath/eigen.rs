//! Eigenspace splitting for rational operators with known rational spectrum.

use super::linalg;
use super::matrix::QMatrix;
use super::rational::Rational;

#[derive(Clone, Debug)]
pub struct EigenSplit {
    /// `(λ, basis of ker(op − λ))` in the order the eigenvalues were given.
    pub spaces: Vec<(Rational, QMatrix)>,
    /// Dimension not covered by the direct sum of the returned spaces.
    pub residual: usize,
    /// Returned spaces are linearly independent (always true for distinct λ).
    pub independent: bool,
}

impl EigenSplit {
    /// The operator is diagonalizable with exactly the supplied eigenvalues.
    pub fn is_complete(&self) -> bool {
        self.residual == 0 && self.independent
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|(_, b)| b.cols()).collect()
    }
}

/// Computes `ker(op − λI)` for each candidate `λ` and reports whatever part of
/// the space they fail to cover.
pub fn eigenspace_split(op: &QMatrix, eigenvalues: &[Rational]) -> EigenSplit {
    assert!(op.is_square(), "eigenspace_split needs a square operator");
    let n = op.rows();
    let mut spaces = Vec::with_capacity(eigenvalues.len());
    let mut all_columns: Vec<Vec<Rational>> = Vec::new();
    for lam in eigenvalues {
        let shifted = op.sub(&QMatrix::identity(n).scale(lam));
        let basis = linalg::kernel(&shifted);
        all_columns.extend(basis.columns());
        spaces.push((lam.clone(), basis));
    }
    let total: usize = spaces.iter().map(|(_, b)| b.cols()).sum();
    let rank = if all_columns.is_empty() {
        0
    } else {
        linalg::rank(&QMatrix::from_columns(n, &all_columns))
    };
    EigenSplit {
        spaces,
        residual: n - rank,
        independent: rank == total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::matrix::qmatrix;
    use crate::exactmath::rational::int;

    #[test]
    fn diagonal_operator_splits_completely() {
        let op = qmatrix(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
        let s = eigenspace_split(&op, &[int(1), int(-1), int(0)]);
        assert_eq!(s.dims(), vec![1, 1, 1]);
        assert!(s.is_complete());
    }

    #[test]
    fn jordan_block_leaves_residual() {
        let op = qmatrix(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let s = eigenspace_split(&op, &[int(0)]);
        assert_eq!(s.dims(), vec![1]);
        assert_eq!(s.residual, 2);
        assert!(!s.is_complete());
    }
}
