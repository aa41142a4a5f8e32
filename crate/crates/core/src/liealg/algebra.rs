//! Lie algebras given by exact structure constants, optional matrix
//! realizations, subspaces and linear maps.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::linalg::{self, basis_vector};
use crate::exactmath::matrix::{Matrix, QMatrix};
use crate::exactmath::rational::{render, Rational};
use crate::exactmath::scalar::{self, Gaussian, Quaternion, ScalarKind};

/// Sparse coordinate vector, sorted by index, no explicit zeros.
pub type Sparse = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(s: &Sparse, n: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for (i, x) in s {
        v[*i] = x.clone();
    }
    v
}

fn sparse_from_map(m: HashMap<usize, Rational>) -> Sparse {
    let mut s: Sparse = m.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    s.sort_by_key(|(i, _)| *i);
    s
}

/// Solves for coordinates of flattened matrices in a fixed basis.
///
/// Reads the coefficients at one pivot position per basis element and applies
/// the inverse of the resulting square system; membership is then confirmed by
/// reconstructing the input.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    basis: Vec<Sparse>,
    pivot_slot: HashMap<usize, usize>,
    inverse_columns: Vec<Sparse>,
}

impl CoordinateSolver {
    pub fn new(basis: Vec<Sparse>, flat_len: usize) -> Result<Self> {
        let dim = basis.len();
        let mut rows: Vec<Vec<Rational>> = basis.iter().map(|b| sparse_to_dense(b, flat_len)).collect();
        let pivots = linalg::rref_rows(&mut rows, flat_len);
        if pivots.len() != dim {
            return Err(Error::Construction(format!(
                "matrix basis is linearly dependent (rank {} < {dim})",
                pivots.len()
            )));
        }
        // S[i][j] = B_i[p_j]; coordinates c solve Sᵗ c = v|_P.
        let mut st = QMatrix::zeros(dim, dim);
        for (i, b) in basis.iter().enumerate() {
            for (idx, x) in b {
                if let Some(j) = pivots.iter().position(|p| p == idx) {
                    st.set(j, i, x.clone());
                }
            }
        }
        let w = linalg::inverse(&st)?;
        let inverse_columns = (0..dim).map(|j| sparse_from_dense(&w.column(j))).collect();
        let pivot_slot = pivots.iter().enumerate().map(|(j, &p)| (p, j)).collect();
        Ok(Self {
            basis,
            pivot_slot,
            inverse_columns,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a flattened vector, or `None` when it is outside the span.
    pub fn coordinates(&self, v: &Sparse) -> Option<Sparse> {
        let mut acc: HashMap<usize, Rational> = HashMap::new();
        for (idx, x) in v {
            if let Some(&j) = self.pivot_slot.get(idx) {
                for (i, w) in &self.inverse_columns[j] {
                    *acc.entry(*i).or_insert_with(Rational::zero) += x * w;
                }
            }
        }
        let coords = sparse_from_map(acc);
        let mut recon: HashMap<usize, Rational> = HashMap::new();
        for (i, c) in &coords {
            for (idx, b) in &self.basis[*i] {
                *recon.entry(*idx).or_insert_with(Rational::zero) += c * b;
            }
        }
        (sparse_from_map(recon) == *v).then_some(coords)
    }
}

/// Scalar kinds that may appear in a matrix realization.
pub trait RealizationScalar: scalar::Ring + 'static {
    const KIND: ScalarKind;
    fn wrap(mats: Vec<Matrix<Self>>) -> RealizationMatrices;
}

impl RealizationScalar for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;
    fn wrap(mats: Vec<Matrix<Self>>) -> RealizationMatrices {
        RealizationMatrices::Real(mats)
    }
}

impl RealizationScalar for Gaussian {
    const KIND: ScalarKind = ScalarKind::Gaussian;
    fn wrap(mats: Vec<Matrix<Self>>) -> RealizationMatrices {
        RealizationMatrices::Complex(mats)
    }
}

impl RealizationScalar for Quaternion {
    const KIND: ScalarKind = ScalarKind::Quaternion;
    fn wrap(mats: Vec<Matrix<Self>>) -> RealizationMatrices {
        RealizationMatrices::Quaternionic(mats)
    }
}

#[derive(Clone, Debug)]
pub enum RealizationMatrices {
    Real(Vec<QMatrix>),
    Complex(Vec<Matrix<Gaussian>>),
    Quaternionic(Vec<Matrix<Quaternion>>),
}

macro_rules! dispatch {
    ($m:expr, $mats:ident => $body:expr) => {
        match $m {
            RealizationMatrices::Real($mats) => $body,
            RealizationMatrices::Complex($mats) => $body,
            RealizationMatrices::Quaternionic($mats) => $body,
        }
    };
}

/// One matrix per basis element, over ℚ, ℚ(i) or the rational quaternions.
#[derive(Clone, Debug)]
pub struct Realization {
    matrices: RealizationMatrices,
    solver: CoordinateSolver,
}

fn flat_basis<T: scalar::Ring>(mats: &[Matrix<T>]) -> (Vec<Sparse>, usize) {
    let len = mats.first().map_or(0, Matrix::flat_len);
    (mats.iter().map(Matrix::flat_nonzeros).collect(), len)
}

fn combine<T: scalar::Ring>(mats: &[Matrix<T>], x: &[Rational]) -> Matrix<T> {
    let (r, c) = (mats[0].rows(), mats[0].cols());
    let mut acc = Matrix::zeros(r, c);
    for (m, s) in mats.iter().zip(x) {
        if !s.is_zero() {
            acc = acc.add(&m.scale(s));
        }
    }
    acc
}

fn commutator_table<T: scalar::Ring>(mats: &[Matrix<T>], solver: &CoordinateSolver) -> Result<Vec<Sparse>> {
    let dim = mats.len();
    let mut table = vec![Sparse::new(); dim * dim];
    for i in 0..dim {
        for j in i + 1..dim {
            let c = mats[i].commutator(&mats[j]);
            let coords = solver
                .coordinates(&c.flat_nonzeros())
                .ok_or_else(|| Error::NotInSpan(format!("commutator of basis elements {i} and {j}")))?;
            table[j * dim + i] = coords.iter().map(|(k, x)| (*k, -x)).collect();
            table[i * dim + j] = coords;
        }
    }
    Ok(table)
}

impl Realization {
    pub fn new<T: RealizationScalar>(mats: Vec<Matrix<T>>) -> Result<Self> {
        if mats.is_empty() {
            return Err(Error::Domain("empty realization".into()));
        }
        let n = mats[0].rows();
        if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Domain("realization matrices must share one square shape".into()));
        }
        let (flat, len) = flat_basis(&mats);
        let solver = CoordinateSolver::new(flat, len)?;
        Ok(Self {
            matrices: T::wrap(mats),
            solver,
        })
    }

    pub fn kind(&self) -> ScalarKind {
        match &self.matrices {
            RealizationMatrices::Real(_) => ScalarKind::Rational,
            RealizationMatrices::Complex(_) => ScalarKind::Gaussian,
            RealizationMatrices::Quaternionic(_) => ScalarKind::Quaternion,
        }
    }

    /// Matrix size `n` of the `n × n` realization.
    pub fn size(&self) -> usize {
        dispatch!(&self.matrices, m => m[0].rows())
    }

    pub fn dim(&self) -> usize {
        self.solver.dim()
    }

    pub fn matrices(&self) -> &RealizationMatrices {
        &self.matrices
    }

    pub fn real_matrices(&self) -> Option<&[QMatrix]> {
        match &self.matrices {
            RealizationMatrices::Real(m) => Some(m),
            _ => None,
        }
    }

    pub fn complex_matrices(&self) -> Option<&[Matrix<Gaussian>]> {
        match &self.matrices {
            RealizationMatrices::Complex(m) => Some(m),
            _ => None,
        }
    }

    pub fn quaternionic_matrices(&self) -> Option<&[Matrix<Quaternion>]> {
        match &self.matrices {
            RealizationMatrices::Quaternionic(m) => Some(m),
            _ => None,
        }
    }

    /// Structure constants recomputed from matrix commutators.
    pub fn commutator_table(&self) -> Result<Vec<Sparse>> {
        dispatch!(&self.matrices, m => commutator_table(m, &self.solver))
    }

    /// Matrix of `X ↦ −X*` on the basis coordinates.
    pub fn theta(&self) -> Result<QMatrix> {
        let dim = self.dim();
        let cols: Result<Vec<Vec<Rational>>> = dispatch!(&self.matrices, mats => {
            mats.iter()
                .enumerate()
                .map(|(i, m)| {
                    let t = m.conj_transpose().neg();
                    self.solver
                        .coordinates(&t.flat_nonzeros())
                        .map(|s| sparse_to_dense(&s, dim))
                        .ok_or_else(|| Error::NotInSpan(format!("theta of basis element {i}")))
                })
                .collect()
        });
        Ok(QMatrix::from_columns(dim, &cols?))
    }

    /// Gram matrix of `B_θ(X, Y) = Re Tr(X θ(Y)) = −Re Tr(X Y*)`.
    pub fn trace_form_gram(&self) -> QMatrix {
        let dim = self.dim();
        let mut g = QMatrix::zeros(dim, dim);
        dispatch!(&self.matrices, mats => {
            let stars: Vec<_> = mats.iter().map(|m| m.conj_transpose()).collect();
            for i in 0..dim {
                for j in i..dim {
                    let v = -mats[i].re_trace_product(&stars[j]);
                    g.set(i, j, v.clone());
                    g.set(j, i, v);
                }
            }
        });
        g
    }

    /// Restriction to the span of the given coordinate vectors.
    pub fn restrict(&self, basis: &[Vec<Rational>]) -> Result<Realization> {
        dispatch!(&self.matrices, mats => {
            Realization::new(basis.iter().map(|x| combine(mats, x)).collect())
        })
    }

    /// Coordinates of an arbitrary real matrix (real realizations only).
    pub fn coordinates_of_real(&self, m: &QMatrix) -> Option<Vec<Rational>> {
        self.solver
            .coordinates(&m.flat_nonzeros())
            .map(|s| sparse_to_dense(&s, self.dim()))
    }

    /// Coordinates of a matrix of the realization's scalar kind, given by its
    /// [`Matrix::flat_nonzeros`].
    pub fn coordinates_flat(&self, flat: &Sparse) -> Option<Vec<Rational>> {
        self.solver.coordinates(flat).map(|s| sparse_to_dense(&s, self.dim()))
    }

    pub fn real_element(&self, x: &[Rational]) -> Option<QMatrix> {
        self.real_matrices().map(|m| combine(m, x))
    }

    pub fn complex_element(&self, x: &[Rational]) -> Option<Matrix<Gaussian>> {
        self.complex_matrices().map(|m| combine(m, x))
    }

    pub fn quaternionic_element(&self, x: &[Rational]) -> Option<Matrix<Quaternion>> {
        self.quaternionic_matrices().map(|m| combine(m, x))
    }
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    table: Vec<Sparse>,
    realization: Option<Realization>,
}

impl LieAlgebra {
    /// Algebra spanned by a family of matrices, closed under commutators.
    pub fn from_matrices<T: RealizationScalar>(
        name: impl Into<String>,
        labels: Vec<String>,
        mats: Vec<Matrix<T>>,
    ) -> Result<Self> {
        if labels.len() != mats.len() {
            return Err(Error::DimensionMismatch {
                expected: mats.len(),
                got: labels.len(),
            });
        }
        let realization = Realization::new(mats)?;
        let table = realization.commutator_table()?;
        Ok(Self {
            name: name.into(),
            labels,
            table,
            realization: Some(realization),
        })
    }

    /// Abstract algebra from brackets of basis pairs `i < j`; the rest follows
    /// by antisymmetry.
    pub fn from_brackets(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Rational>)>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = vec![Sparse::new(); dim * dim];
        for ((i, j), v) in brackets {
            if i >= dim || j >= dim || v.len() != dim {
                return Err(Error::Domain(format!("bracket ({i}, {j}) out of range")));
            }
            if i == j {
                if linalg::is_zero_vec(&v) {
                    continue;
                }
                return Err(Error::Contract(format!("[e{i}, e{i}] must vanish")));
            }
            let s = sparse_from_dense(&v);
            table[j * dim + i] = s.iter().map(|(k, x)| (*k, -x)).collect();
            table[i * dim + j] = s;
        }
        Ok(Self {
            name: name.into(),
            labels,
            table,
            realization: None,
        })
    }

    /// Attaches a realization without rederiving the structure constants; use
    /// [`LieAlgebra::realization_mismatches`] to confirm the two agree.
    pub fn with_realization<T: RealizationScalar>(mut self, mats: Vec<Matrix<T>>) -> Result<Self> {
        if mats.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: mats.len(),
            });
        }
        self.realization = Some(Realization::new(mats)?);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Sparse `c*label + …` rendering of a coordinate vector.
    pub fn describe(&self, v: &[Rational]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*{}", render(c), self.labels[i]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_ref()
    }

    /// `[e_i, e_j]` as a sparse coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_bracket(i, j)
            .iter()
            .find(|(l, _)| *l == k)
            .map_or_else(Rational::zero, |(_, x)| x.clone())
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        basis_vector(self.dim(), i)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_bracket(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)` in the basis (column `j` is `[x, e_j]`).
    pub fn ad(&self, x: &[Rational]) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j) {
                    m.add_at(*k, j, &(a * c));
                }
            }
        }
        m
    }

    /// Largest `|c_ij^k + c_ji^k|`.
    pub fn antisymmetry_defect(&self) -> Rational {
        let n = self.dim();
        let mut worst = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                let a = sparse_to_dense(self.basis_bracket(i, j), n);
                let b = sparse_to_dense(self.basis_bracket(j, i), n);
                let m = linalg::max_abs(&linalg::vec_add(&a, &b));
                if m > worst {
                    worst = m;
                }
            }
        }
        worst
    }

    /// Largest absolute coefficient of `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] +
    /// [[e_k,e_i],e_j]` over all basis triples.
    pub fn jacobi_defect(&self) -> Rational {
        let n = self.dim();
        let mut worst = Rational::zero();
        let mut acc = vec![Rational::zero(); n];
        let mut touched: Vec<usize> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, x) in self.basis_bracket(a, b) {
                            for (m, y) in self.basis_bracket(*l, c) {
                                acc[*m] += x * y;
                                touched.push(*m);
                            }
                        }
                    }
                    for &m in &touched {
                        if !acc[m].is_zero() {
                            let v = acc[m].abs();
                            if v > worst {
                                worst = v;
                            }
                            acc[m] = Rational::zero();
                        }
                    }
                    touched.clear();
                }
            }
        }
        worst
    }

    /// Number of basis pairs whose stored bracket differs from the matrix
    /// commutator of the realization. `None` without a realization.
    pub fn realization_mismatches(&self) -> Option<Result<usize>> {
        let r = self.realization.as_ref()?;
        Some(
            r.commutator_table()
                .map(|t| t.iter().zip(&self.table).filter(|(a, b)| a != b).count()),
        )
    }

    /// The subalgebra spanned by `sub`, in the basis `sub.basis()`.
    pub fn restrict(&self, sub: &Subspace, name: impl Into<String>, labels: Vec<String>) -> Result<LieAlgebra> {
        if sub.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: sub.ambient(),
            });
        }
        if labels.len() != sub.dim() {
            return Err(Error::DimensionMismatch {
                expected: sub.dim(),
                got: labels.len(),
            });
        }
        let b = sub.basis();
        let mut brackets = Vec::new();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let v = self.bracket(&b[i], &b[j]);
                let c = sub
                    .coordinates(&v)
                    .ok_or_else(|| Error::Contract("subspace is not closed under the bracket".into()))?;
                brackets.push(((i, j), c));
            }
        }
        let mut out = LieAlgebra::from_brackets(name, labels, brackets)?;
        if let Some(r) = &self.realization {
            out.realization = Some(r.restrict(b)?);
        }
        Ok(out)
    }
}

/// A linear subspace of a `ambient`-dimensional coordinate space, with a
/// preferred basis and an echelon form for membership tests.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    echelon: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    // echelon_r = Σ_i transform[r][i] basis_i
    transform: QMatrix,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.echelon == other.echelon
    }
}

impl Subspace {
    /// Span of `vectors`; dependent vectors are dropped, keeping first occurrences.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length mismatch");
        let keep = linalg::independent_columns(vectors, ambient);
        let basis: Vec<Vec<Rational>> = keep.iter().map(|&i| vectors[i].clone()).collect();
        let d = basis.len();
        let mut rows: Vec<Vec<Rational>> = basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut r = v.clone();
                r.extend((0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let all = linalg::rref_rows(&mut rows, ambient + d);
        let pivots: Vec<usize> = all.into_iter().filter(|&p| p < ambient).collect();
        debug_assert_eq!(pivots.len(), d);
        let echelon = rows.iter().map(|r| r[..ambient].to_vec()).collect();
        let transform = if d == 0 {
            QMatrix::zeros(0, 0)
        } else {
            QMatrix::from_rows(rows.iter().map(|r| r[ambient..].to_vec()).collect())
        };
        Self {
            ambient,
            basis,
            echelon,
            pivots,
            transform,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, &[])
    }

    pub fn whole(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let v: Vec<Vec<Rational>> = indices.into_iter().map(|i| basis_vector(ambient, i)).collect();
        Self::span(ambient, &v)
    }

    /// Column span of a matrix.
    pub fn from_columns(m: &QMatrix) -> Self {
        Self::span(m.rows(), &m.columns())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> QMatrix {
        QMatrix::from_columns(self.ambient, &self.basis)
    }

    /// Coordinates in [`Subspace::basis`], or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let mut residual = v.to_vec();
        let mut e = Vec::with_capacity(self.echelon.len());
        for (row, &p) in self.echelon.iter().zip(&self.pivots) {
            let f = residual[p].clone();
            if !f.is_zero() {
                for (r, x) in residual.iter_mut().zip(row) {
                    if !x.is_zero() {
                        *r -= &f * x;
                    }
                }
            }
            e.push(f);
        }
        if !linalg::is_zero_vec(&residual) {
            return None;
        }
        let d = self.dim();
        Some(
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|r| &e[r] * self.transform.get(r, i))
                        .fold(Rational::zero(), |a, b| a + b)
                })
                .collect(),
        )
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &v)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // [A | −B] (x, y) = 0  ⇒  A x ∈ both
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()));
        let k = linalg::kernel(&QMatrix::from_columns(self.ambient, &cols));
        let a = self.basis_matrix();
        let d = self.dim();
        let vectors: Vec<Vec<Rational>> = k.columns().iter().map(|c| a.mul_vec(&c[..d])).collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// Vector expressed from coordinates in [`Subspace::basis`].
    pub fn element(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                for (o, x) in out.iter_mut().zip(b) {
                    *o += c * x;
                }
            }
        }
        out
    }
}

/// A linear map between two algebras, as a `target.dim × source.dim` matrix.
#[derive(Clone, Debug)]
pub struct LinearMap<'a> {
    pub source: &'a LieAlgebra,
    pub target: &'a LieAlgebra,
    pub matrix: QMatrix,
}

impl<'a> LinearMap<'a> {
    pub fn new(source: &'a LieAlgebra, target: &'a LieAlgebra, matrix: QMatrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                got: matrix.rows() * matrix.cols(),
            });
        }
        Ok(Self { source, target, matrix })
    }

    pub fn zero(source: &'a LieAlgebra, target: &'a LieAlgebra) -> Self {
        Self {
            source,
            target,
            matrix: QMatrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn identity(g: &'a LieAlgebra) -> Self {
        Self {
            source: g,
            target: g,
            matrix: QMatrix::identity(g.dim()),
        }
    }

    /// Map sending basis element `i` of the source to `images[i]`.
    pub fn from_images(source: &'a LieAlgebra, target: &'a LieAlgebra, images: &[Vec<Rational>]) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                got: images.len(),
            });
        }
        Self::new(source, target, QMatrix::from_columns(target.dim(), images))
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    pub fn compose(&self, after: &LinearMap<'a>) -> Result<LinearMap<'a>> {
        if after.source.dim() != self.target.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.target.dim(),
                got: after.source.dim(),
            });
        }
        Ok(LinearMap {
            source: self.source,
            target: after.target,
            matrix: after.matrix.mul(&self.matrix),
        })
    }
}
