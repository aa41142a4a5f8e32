//! Dense exact matrices over any [`Ring`].

use std::fmt;

use super::rational::{render, Rational};
use super::scalar::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>, // row-major
}

pub type QMatrix = Matrix<Rational>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Matrix with a single nonzero entry.
    pub fn unit(rows: usize, cols: usize, r: usize, c: usize, value: T) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(r, c, value);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    /// `self[r][c] += v`.
    pub fn add_at(&mut self, r: usize, c: usize, v: &T) {
        let i = r * self.cols + c;
        self.data[i] = self.data[i].add(v);
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(T::neg)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|x| x.scale(r))
    }

    /// Left scalar multiple `s · self`.
    pub fn left_scale(&self, s: &T) -> Self {
        self.map(|x| s.mul(x))
    }

    /// Matrix product. Zero entries of the left factor are skipped, which keeps
    /// products of the sparse basis matrices cheap.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_at(i, j, &a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// `M* = transpose(conj(M))`.
    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(T::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// True when some power `≤ rows` vanishes. Returns the nilpotency index.
    pub fn nilpotency_index(&self) -> Option<u32> {
        assert!(self.is_square());
        let mut p = self.clone();
        for e in 1..=self.rows.max(1) as u32 {
            if p.is_zero() {
                return Some(e);
            }
            p = p.mul(self);
        }
        None
    }

    /// Real part of the trace of `self · rhs`, without forming the product.
    pub fn re_trace_product(&self, rhs: &Self) -> Rational {
        assert_eq!(self.cols, rhs.rows);
        assert_eq!(self.rows, rhs.cols);
        let mut acc = Rational::from_integer(0.into());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = rhs.get(k, i);
                if !a.is_zero() && !b.is_zero() {
                    acc += a.mul(b).real_part();
                }
            }
        }
        acc
    }

    /// Flattened coefficient index of component `comp` of entry `(r, c)`.
    pub fn flat_index(&self, r: usize, c: usize, comp: usize) -> usize {
        (r * self.cols + c) * T::COMPONENTS + comp
    }

    pub fn flat_len(&self) -> usize {
        self.rows * self.cols * T::COMPONENTS
    }

    /// Nonzero rational coefficients as `(flat index, value)` pairs, sorted.
    pub fn flat_nonzeros(&self) -> Vec<(usize, Rational)> {
        let mut out = Vec::new();
        for (e, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for comp in 0..T::COMPONENTS {
                let v = x.component(comp);
                if !Ring::is_zero(v) {
                    out.push((e * T::COMPONENTS + comp, v.clone()));
                }
            }
        }
        out
    }

    /// Real matrix of the left-regular realification: each entry `x` becomes the
    /// `C × C` block of left multiplication by `x` on the coefficient basis.
    /// For Gaussian scalars `a + bi ↦ [[a, −b], [b, a]]`.
    pub fn realify(&self) -> QMatrix {
        let c = T::COMPONENTS;
        let mut out = QMatrix::zeros(self.rows * c, self.cols * c);
        let units: Vec<T> = (0..c).map(T::unit).collect();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for (b, u) in units.iter().enumerate() {
                    let img = x.mul(u);
                    for a in 0..c {
                        out.set(i * c + a, j * c + b, img.component(a).clone());
                    }
                }
            }
        }
        out
    }

    pub fn same_shape(&self, rhs: &Self) -> Result<()> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: rhs.rows * rhs.cols,
            });
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self
                .row(i)
                .iter()
                .map(|x| {
                    let c = x.components();
                    if c.len() == 1 {
                        render(&c[0])
                    } else {
                        format!("{x:?}")
                    }
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Integer matrix shorthand for tests and constructors.
pub fn qmatrix(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| super::rational::int(x)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::int;
    use crate::exactmath::scalar::{from_ints, Gaussian, Quaternion};

    #[test]
    fn product_and_commutator() {
        let a = qmatrix(&[&[0, 1], &[0, 0]]);
        let b = qmatrix(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.commutator(&b), qmatrix(&[&[1, 0], &[0, -1]]));
        assert_eq!(a.nilpotency_index(), Some(2));
        assert_eq!(qmatrix(&[&[1, 0], &[0, 0]]).nilpotency_index(), None);
    }

    #[test]
    fn gaussian_realification_block() {
        let z: Gaussian = from_ints(&[2, 3]);
        let m = Matrix::from_rows(vec![vec![z]]);
        assert_eq!(m.realify(), qmatrix(&[&[2, -3], &[3, 2]]));
    }

    #[test]
    fn realification_is_multiplicative_and_scales_trace() {
        let x = Matrix::from_rows(vec![
            vec![from_ints::<Quaternion>(&[1, 2, 0, -1]), from_ints(&[0, 1, 1, 0])],
            vec![from_ints(&[3, 0, 0, 2]), from_ints(&[-1, 0, 4, 0])],
        ]);
        let y = Matrix::from_rows(vec![
            vec![from_ints::<Quaternion>(&[0, 1, 0, 0]), from_ints(&[2, 0, 1, 0])],
            vec![from_ints(&[0, 0, -1, 1]), from_ints(&[1, 1, 1, 1])],
        ]);
        assert_eq!(x.mul(&y).realify(), x.realify().mul(&y.realify()));
        assert_eq!(x.realify().trace(), x.trace().real_part() * int(4));
        assert_eq!(x.conj_transpose().realify(), x.realify().transpose());
    }
}
