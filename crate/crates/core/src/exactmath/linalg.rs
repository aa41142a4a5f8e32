//! Exact linear algebra over ℚ: echelon forms, rank, kernels, inverses.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::QMatrix;
use super::rational::{integerize, Rational};
use crate::error::{Error, Result};

/// Reduced row echelon form. Returns the reduced matrix and its pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let pivots = rref_rows(&mut rows, m.cols());
    let out = if rows.is_empty() {
        QMatrix::zeros(0, m.cols())
    } else {
        QMatrix::from_rows(rows)
    };
    (out, pivots)
}

/// In-place RREF on a row list. Returns pivot columns; rows are reordered and
/// the nonzero rows come first.
pub fn rref_rows(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by fraction-free (Bareiss) elimination on the integerized rows.
pub fn rank(m: &QMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows()).map(|r| integerize(m.row(r))).collect();
    bareiss(&mut a, m.cols()).0
}

/// Fraction-free elimination. Returns `(rank, last pivot)`; for a square
/// full-rank input the last pivot is ± the determinant (sign tracked separately).
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> (usize, BigInt, bool) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut negated = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(r, p);
            negated = !negated;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, prev, negated)
}

/// Exact determinant via Bareiss elimination.
pub fn determinant(m: &QMatrix) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    // det(M) = det(D M) / prod(row scales)
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for r in 0..n {
        let row = m.row(r);
        let l = super::rational::denominator_lcm(row);
        a.push(row.iter().map(|x| (x.numer() * &l) / x.denom()).collect());
        scale *= l;
    }
    let (rk, last, negated) = bareiss(&mut a, n);
    if rk < n {
        return Rational::zero();
    }
    let d = Rational::new(last, scale);
    if negated {
        -d
    } else {
        d
    }
}

/// Basis of the right kernel `{x : M x = 0}` as columns of the returned matrix.
///
/// Basis vectors come from the free columns of the RREF, so each has a 1 at its
/// own free coordinate and 0 at every other free coordinate.
pub fn kernel(m: &QMatrix) -> QMatrix {
    let cols = m.cols();
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = QMatrix::zeros(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        out.set(f, k, Rational::one());
        for (pr, &pc) in pivots.iter().enumerate() {
            let v = r.get(pr, f);
            if !v.is_zero() {
                out.set(pc, k, -v.clone());
            }
        }
    }
    out
}

pub fn nullity(m: &QMatrix) -> usize {
    m.cols() - rank(m)
}

pub fn inverse(m: &QMatrix) -> Result<QMatrix> {
    if !m.is_square() {
        return Err(Error::Domain("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let pivots = rref_rows(&mut rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Domain("matrix is singular".into()));
    }
    Ok(QMatrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect()))
}

/// One solution of `M x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &QMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(m.rows(), b.len());
    let cols = m.cols();
    let mut rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref_rows(&mut rows, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][cols].clone();
    }
    Some(x)
}

/// Stacks column vectors into a matrix and returns a maximal independent subset
/// (by first occurrence).
pub fn independent_columns(vectors: &[Vec<Rational>], dim: usize) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = QMatrix::from_columns(dim, vectors);
    rref(&m).1
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |s, t| s + t)
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Largest absolute value of a vector's entries (0 for empty).
pub fn max_abs(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * s).collect()
}

/// Standard basis vector `e_i` of length `n`.
pub fn basis_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::matrix::qmatrix;
    use crate::exactmath::rational::{frac, int};

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&QMatrix::identity(4)), 4);
        // [[t1t3, -t1t2, t1^2], [t1t4, -t1^2, -t1t2], [t1^2, t1t4, -t1t3]] at t = (1,1,1,1)
        let m = qmatrix(&[&[1, -1, 1], &[1, -1, -1], &[1, 1, -1]]);
        assert_eq!(rank(&m), 3);
        let zero = qmatrix(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(rank(&zero), 0);
        let mixed = QMatrix::from_rows(vec![vec![frac(1, 2), frac(1, 3)], vec![frac(3, 2), int(1)]]);
        assert_eq!(rank(&mixed), 1);
    }

    #[test]
    fn kernel_and_rank_are_complementary() {
        let m = qmatrix(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        let k = kernel(&m);
        assert_eq!(k.cols() + rank(&m), 4);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = qmatrix(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 5]]);
        assert_eq!(determinant(&m), int(-9));
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(3));
        assert!(inverse(&qmatrix(&[&[1, 2], &[2, 4]])).is_err());
        assert_eq!(determinant(&QMatrix::from_rows(vec![vec![frac(1, 2)]])), frac(1, 2));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = qmatrix(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&m, &[int(3), int(1)]), Some(vec![int(2), int(1)]));
        let s = qmatrix(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&s, &[int(1), int(3)]), None);
    }
}
