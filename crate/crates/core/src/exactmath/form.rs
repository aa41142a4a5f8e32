//! Symmetric bilinear forms over ℚ and their Sylvester signatures.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::linalg;
use super::matrix::QMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sylvester signature: counts of positive, negative and null directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl Signature {
    pub fn new(pos: usize, neg: usize, null: usize) -> Self {
        Self { pos, neg, null }
    }

    pub fn dim(&self) -> usize {
        self.pos + self.neg + self.null
    }

    /// One negative direction, the rest positive, nondegenerate.
    pub fn is_lorentz(&self) -> bool {
        self.neg == 1 && self.null == 0 && self.pos >= 1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricForm {
    gram: QMatrix,
}

impl SymmetricForm {
    pub fn new(gram: QMatrix) -> Result<Self> {
        if !gram.is_square() || gram != gram.transpose() {
            return Err(Error::Contract("gram matrix is not symmetric".into()));
        }
        Ok(Self { gram })
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        linalg::dot(x, &self.gram.mul_vec(y))
    }

    pub fn quadratic(&self, x: &[Rational]) -> Rational {
        self.eval(x, x)
    }

    /// Radical `{x : B(x, ·) = 0}`.
    pub fn radical(&self) -> QMatrix {
        linalg::kernel(&self.gram)
    }

    /// Restriction to the column span of `basis` (Gram matrix `Bᵗ G B`).
    pub fn restrict(&self, basis: &QMatrix) -> SymmetricForm {
        let g = basis.transpose().mul(&self.gram).mul(basis);
        SymmetricForm { gram: g }
    }

    pub fn scaled(&self, s: &Rational) -> SymmetricForm {
        SymmetricForm {
            gram: self.gram.scale(s),
        }
    }

    /// Congruence `Pᵗ G P`.
    pub fn congruent(&self, p: &QMatrix) -> SymmetricForm {
        self.restrict(p)
    }

    /// Exact signature by symmetric Gaussian elimination (congruence).
    ///
    /// When every remaining diagonal entry vanishes but some `b_ij ≠ 0`, row and
    /// column `j` are added to `i`, which produces the pivot `2 b_ij`.
    pub fn signature(&self) -> Signature {
        let n = self.dim();
        let mut a: Vec<Vec<Rational>> = (0..n).map(|r| self.gram.row(r).to_vec()).collect();
        let (mut pos, mut neg) = (0, 0);
        let mut k = 0;
        while k < n {
            let pivot = (k..n).find(|&i| !a[i][i].is_zero());
            let p = match pivot {
                Some(p) => p,
                None => {
                    let off = (k..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !a[i][j].is_zero());
                    let Some((i, j)) = off else { break };
                    // row_i += row_j, then col_i += col_j
                    for c in 0..n {
                        let v = a[j][c].clone();
                        a[i][c] += v;
                    }
                    for r in 0..n {
                        let v = a[r][j].clone();
                        a[r][i] += v;
                    }
                    i
                }
            };
            a.swap(k, p);
            for row in a.iter_mut() {
                row.swap(k, p);
            }
            let d = a[k][k].clone();
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &d;
                for c in k..n {
                    let v = &f * &a[k][c];
                    a[r][c] -= v;
                }
                for rr in k..n {
                    let v = &f * &a[rr][k];
                    a[rr][r] -= v;
                }
            }
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            k += 1;
        }
        Signature::new(pos, neg, n - pos - neg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::matrix::qmatrix;

    /// J_{1,n−1} with n = 4 (antidiagonal corner ones, identity in the middle).
    fn j14() -> QMatrix {
        qmatrix(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 0]])
    }

    #[test]
    fn signature_examples() {
        // 2 x1 x4 + x2² + x3² = ½(x1+x4)² − ½(x1−x4)² + x2² + x3²
        assert_eq!(SymmetricForm::new(j14()).unwrap().signature(), Signature::new(3, 1, 0));
        let z = QMatrix::zeros(3, 3);
        assert_eq!(SymmetricForm::new(z).unwrap().signature(), Signature::new(0, 0, 3));
        let d = qmatrix(&[&[1, 0], &[0, -1]]);
        assert_eq!(SymmetricForm::new(d).unwrap().signature(), Signature::new(1, 1, 0));
    }

    #[test]
    fn hyperbolic_plane_needs_the_off_diagonal_trick() {
        let h = qmatrix(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        assert_eq!(SymmetricForm::new(h).unwrap().signature(), Signature::new(1, 1, 1));
    }

    #[test]
    fn rejects_non_symmetric() {
        assert!(matches!(
            SymmetricForm::new(qmatrix(&[&[1, 2], &[0, 1]])),
            Err(Error::Contract(_))
        ));
    }
}
