//! Constructors for every algebra family used by the checks.
//!
//! Rank-one algebras `{M : M*J + JM = 0}` over F ∈ {ℝ, ℂ, ℍ} use
//! `J = J_{1,n−1}` (ones at the two anti-diagonal corners, identity in the
//! middle) and the block shape
//!
//! ```text
//! [  a    u    x ]
//! [ −v*   N  −u* ]
//! [  y    v   −ā ]
//! ```
//!
//! with `x, y ∈ Im F` and `N` anti-Hermitian. Basis order: `A`, imaginary
//! parts of `a`, diagonal then off-diagonal parts of `N` (row-major), then the
//! root spaces `h_α`, `h_2α`, `h_−α`, `h_−2α`. Within a block, entries run
//! over matrix positions first and over the units `1, i, j, k` second.

use crate::error::{Error, Result};
use crate::exactmath::linalg::basis_vector;
use crate::exactmath::matrix::{Matrix, QMatrix};
use crate::exactmath::rational::{int, zero, Rational};
use crate::exactmath::scalar::{Gaussian, Octonion, Quaternion, Ring};

use super::algebra::{LieAlgebra, RealizationScalar};

const UNIT_SUFFIX: [&str; 8] = ["", ".i", ".j", ".k", ".e4", ".e5", ".e6", ".e7"];

/// The three rank-one families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankOne {
    Orthogonal,
    Unitary,
    Symplectic,
}

impl RankOne {
    pub const ALL: [RankOne; 3] = [RankOne::Orthogonal, RankOne::Unitary, RankOne::Symplectic];

    /// Real dimension of the scalar field.
    pub fn field_dim(self) -> usize {
        match self {
            RankOne::Orthogonal => 1,
            RankOne::Unitary => 2,
            RankOne::Symplectic => 4,
        }
    }

    pub fn name(self, k: usize) -> String {
        match self {
            RankOne::Orthogonal => format!("o(1,{k})"),
            RankOne::Unitary => format!("su(1,{k})"),
            RankOne::Symplectic => format!("sp(1,{k})"),
        }
    }

    /// Dimension of the algebra `(1,k)` of this family.
    pub fn dim(self, k: usize) -> usize {
        let n = k + 1;
        match self {
            RankOne::Orthogonal => n * (n - 1) / 2,
            RankOne::Unitary => n * n - 1,
            RankOne::Symplectic => n * (2 * n + 1),
        }
    }

    /// `(dim h_α, dim h_2α)` of the restricted root decomposition.
    pub fn root_dims(self, k: usize) -> (usize, usize) {
        let d = self.field_dim();
        (d * (k - 1), d - 1)
    }

    pub fn build(self, k: usize) -> Result<LieAlgebra> {
        match self {
            RankOne::Orthogonal => o1k(k),
            RankOne::Unitary => su1k(k),
            RankOne::Symplectic => sp1k(k),
        }
    }
}

/// Root value of each basis element of a rank-one algebra, in basis order.
pub fn rank_one_root_labels(family: RankOne, k: usize) -> Vec<i64> {
    let d = family.field_dim();
    let m = k - 1;
    let mut h0 = 1 + (d - 1) + (d - 1) * m + d * m * (m - 1) / 2;
    if family == RankOne::Unitary {
        h0 -= 1;
    }
    let mut out = vec![0; h0];
    for (root, len) in [(1, d * m), (2, d - 1), (-1, d * m), (-2, d - 1)] {
        out.extend(std::iter::repeat_n(root, len));
    }
    out
}

fn unit<T: Ring>(n: usize, r: usize, c: usize, v: T) -> Matrix<T> {
    Matrix::unit(n, n, r, c, v)
}

/// `ε E_{r,c} − ε̄ E_{c',r'}`.
fn pair<T: Ring>(n: usize, (r, c): (usize, usize), (r2, c2): (usize, usize), eps: &T) -> Matrix<T> {
    unit(n, r, c, eps.clone()).sub(&unit(n, r2, c2, eps.conj()))
}

fn rank_one<T: RealizationScalar>(name: String, k: usize, traceless: bool) -> Result<LieAlgebra> {
    if k < 2 {
        return Err(Error::Domain(format!("{name}: need k >= 2")));
    }
    let n = k + 1;
    let e = n - 1;
    let units: Vec<T> = (0..T::COMPONENTS).map(T::unit).collect();
    let imag = &units[1..];
    let mut labels = Vec::new();
    let mut mats: Vec<Matrix<T>> = Vec::new();

    labels.push("A".to_string());
    mats.push(unit(n, 0, 0, T::one()).sub(&unit(n, e, e, T::one())));

    for (s, iota) in imag.iter().enumerate() {
        // ι at (0,0) and −ῑ = ι at (e,e)
        let mut m = unit(n, 0, 0, iota.clone()).add(&unit(n, e, e, iota.clone()));
        if traceless {
            m = m.sub(&unit(n, 1, 1, iota.scale(&int(2))));
        }
        labels.push(format!("A{}", UNIT_SUFFIX[s + 1]));
        mats.push(m);
    }
    for l in 1..e {
        if traceless && l == 1 {
            continue;
        }
        for (s, iota) in imag.iter().enumerate() {
            let mut m = unit(n, l, l, iota.clone());
            if traceless {
                m = m.sub(&unit(n, 1, 1, iota.clone()));
            }
            labels.push(format!("N{l}{l}{}", UNIT_SUFFIX[s + 1]));
            mats.push(m);
        }
    }
    for l in 1..e {
        for p in l + 1..e {
            for (s, eps) in units.iter().enumerate() {
                labels.push(format!("N{l}{p}{}", UNIT_SUFFIX[s]));
                mats.push(pair(n, (l, p), (p, l), eps));
            }
        }
    }
    for l in 1..e {
        for (s, eps) in units.iter().enumerate() {
            labels.push(format!("U{l}{}", UNIT_SUFFIX[s]));
            mats.push(pair(n, (0, l), (l, e), eps));
        }
    }
    for (s, iota) in imag.iter().enumerate() {
        labels.push(format!("X{}", UNIT_SUFFIX[s + 1]));
        mats.push(unit(n, 0, e, iota.clone()));
    }
    for l in 1..e {
        for (s, eps) in units.iter().enumerate() {
            labels.push(format!("V{l}{}", UNIT_SUFFIX[s]));
            mats.push(pair(n, (e, l), (l, 0), eps));
        }
    }
    for (s, iota) in imag.iter().enumerate() {
        labels.push(format!("Y{}", UNIT_SUFFIX[s + 1]));
        mats.push(unit(n, e, 0, iota.clone()));
    }
    LieAlgebra::from_matrices(name, labels, mats)
}

/// `o(1,k)` in `(k+1) × (k+1)` real matrices.
pub fn o1k(k: usize) -> Result<LieAlgebra> {
    rank_one::<Rational>(RankOne::Orthogonal.name(k), k, false)
}

/// `su(1,k)` as a real algebra of complex matrices.
pub fn su1k(k: usize) -> Result<LieAlgebra> {
    rank_one::<Gaussian>(RankOne::Unitary.name(k), k, true)
}

/// `sp(1,k)` as a real algebra of quaternionic matrices.
pub fn sp1k(k: usize) -> Result<LieAlgebra> {
    rank_one::<Quaternion>(RankOne::Symplectic.name(k), k, false)
}

/// `J_{1,n−1}`.
pub fn lorentz_gram(n: usize) -> QMatrix {
    let mut j = QMatrix::identity(n);
    j.set(0, 0, zero());
    j.set(n - 1, n - 1, zero());
    j.set(0, n - 1, int(1));
    j.set(n - 1, 0, int(1));
    j
}

/// Orthogonal algebra `{M : MᵗJ + JM = 0}` of a nondegenerate symmetric gram
/// matrix `J`. Basis `J⁻¹(E_ij − E_ji)` for `i < j`, row-major.
pub fn orthogonal(name: impl Into<String>, j: &QMatrix) -> Result<LieAlgebra> {
    let n = j.rows();
    if !j.is_square() || *j != j.transpose() {
        return Err(Error::Domain("gram matrix must be square and symmetric".into()));
    }
    let inv = crate::exactmath::linalg::inverse(j)?;
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let s = unit(n, a, b, int(1)).sub(&unit(n, b, a, int(1)));
            labels.push(format!("S{a}{b}"));
            mats.push(inv.mul(&s));
        }
    }
    LieAlgebra::from_matrices(name, labels, mats)
}

/// Classical symplectic form read off the `su` bracket of `h_α`:
/// `[u, v]` has `(0, n−1)` entry `i·ω_C(u, v)`, so `ω_C(u, v) = −2 Im Σ u_l v̄_l`.
pub fn omega_c(u: &[Gaussian], v: &[Gaussian]) -> Rational {
    let s = u
        .iter()
        .zip(v)
        .fold(Gaussian::zero(), |acc, (a, b)| acc.add(&a.mul(&b.conj())));
    -(s.im * int(2))
}

/// `ω_H(u, v) = Σ u_l v̄_l − v_l ū_l`, an imaginary quaternion.
pub fn omega_h(u: &[Quaternion], v: &[Quaternion]) -> Quaternion {
    u.iter().zip(v).fold(Quaternion::zero(), |acc, (a, b)| {
        acc.add(&a.mul(&b.conj())).sub(&b.mul(&a.conj()))
    })
}

/// `heis^ℂ(k)` for odd `k ≥ 3`, basis `x1, y1, …, x_d, y_d, Z` with
/// `[x_j, y_j] = ω_C(e_j, i e_j) Z = 2Z`. Realized inside `su(1, d+1)` by
/// `z ↦ z E_{0,l} − z̄ E_{l,e}` and `Z ↦ i E_{0,e}`.
pub fn heis_c(k: usize) -> Result<LieAlgebra> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::Domain(format!("heisC({k}): dimension must be odd and >= 3")));
    }
    let d = (k - 1) / 2;
    let n = d + 2;
    let e = n - 1;
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for l in 1..=d {
        for (s, name) in ["x", "y"].iter().enumerate() {
            labels.push(format!("{name}{l}"));
            mats.push(pair(n, (0, l), (l, e), &Gaussian::unit(s)));
        }
    }
    labels.push("Z".into());
    mats.push(unit(n, 0, e, Gaussian::unit(1)));
    LieAlgebra::from_matrices(format!("heisC({k})"), labels, mats)
}

/// Coordinates `(re_1, im_1, …)` of a complex vector in the `heis_c` basis.
pub fn heis_c_vector(z: &[Gaussian], center: Rational) -> Vec<Rational> {
    let mut v: Vec<Rational> = z.iter().flat_map(|c| [c.re.clone(), c.im.clone()]).collect();
    v.push(center);
    v
}

/// `heis^ℍ(k)` for `k = 4d + 3`, basis `q1, q1.i, q1.j, q1.k, …, Z.i, Z.j, Z.k`
/// with `[u, v] = ω_H(u, v)` read in the `Z` basis.
///
/// The realization inside `sp(1, d+1)` is `q ↦ q E_{0,l} − q̄ E_{l,e}` and
/// `Z_x ↦ −x E_{0,e}`: the matrix commutator of two such elements is
/// `−ω_H(q, p) E_{0,e}`.
pub fn heis_h(k: usize) -> Result<LieAlgebra> {
    if k < 7 || !(k - 3).is_multiple_of(4) {
        return Err(Error::Domain(format!("heisH({k}): dimension must be 4d+3 with d >= 1")));
    }
    let d = (k - 3) / 4;
    let mut labels = Vec::new();
    for l in 1..=d {
        for s in UNIT_SUFFIX.iter().take(4) {
            labels.push(format!("q{l}{s}"));
        }
    }
    for s in &UNIT_SUFFIX[1..4] {
        labels.push(format!("Z{s}"));
    }
    let quat = |idx: usize| -> Vec<Quaternion> {
        let mut v = vec![Quaternion::zero(); d];
        v[idx / 4] = Quaternion::unit(idx % 4);
        v
    };
    let mut brackets = Vec::new();
    for a in 0..4 * d {
        for b in a + 1..4 * d {
            let w = omega_h(&quat(a), &quat(b));
            let mut out = vec![zero(); k];
            for x in 1..4 {
                out[4 * d + x - 1] = w.component(x).clone();
            }
            brackets.push(((a, b), out));
        }
    }
    let g = LieAlgebra::from_brackets(format!("heisH({k})"), labels, brackets)?;
    let n = d + 2;
    let e = n - 1;
    let mut mats = Vec::new();
    for l in 1..=d {
        for s in 0..4 {
            mats.push(pair(n, (0, l), (l, e), &Quaternion::unit(s)));
        }
    }
    for x in 1..4 {
        mats.push(unit(n, 0, e, Quaternion::unit(x).neg()));
    }
    g.with_realization(mats)
}

/// The 15-dimensional algebra `𝕆 ⊕ Im 𝕆` (`e0..e7`, then `f1..f7`) with
/// `[x₁, x₂] = x₁σ(x₂) − x₂σ(x₁) = 2 Im(x₁ x̄₂)` into the central summand.
pub fn f4_nilradical() -> Result<LieAlgebra> {
    let mut labels: Vec<String> = (0..8).map(|i| format!("e{i}")).collect();
    labels.extend((1..8).map(|i| format!("f{i}")));
    let mut brackets = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            let (x, y) = (Octonion::unit(a), Octonion::unit(b));
            let w = x.mul(&y.conj()).sub(&y.mul(&x.conj()));
            let mut out = vec![zero(); 15];
            for c in 1..8 {
                out[7 + c] = w.component(c).clone();
            }
            brackets.push(((a, b), out));
        }
    }
    LieAlgebra::from_brackets("f4-nilradical", labels, brackets)
}

/// Coordinate layout of `o(2,n)` for the form `2x₁x_{n+2} + 2x₂x_{n+1} + Σ x_i²`.
///
/// Basis order: `a, b, c, d, u_i, v_i, z_i, w_i, α, β, A_ij` (`i < j`,
/// row-major over `o(n−2)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct O2nLayout {
    pub n: usize,
}

impl O2nLayout {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("o(2,{n}): need n >= 3")));
        }
        Ok(Self { n })
    }

    pub fn m(&self) -> usize {
        self.n - 2
    }
    pub fn size(&self) -> usize {
        self.n + 2
    }
    pub fn dim(&self) -> usize {
        let s = self.size();
        s * (s - 1) / 2
    }
    pub fn a(&self) -> usize {
        0
    }
    pub fn b(&self) -> usize {
        1
    }
    pub fn c(&self) -> usize {
        2
    }
    pub fn d(&self) -> usize {
        3
    }
    pub fn u(&self, i: usize) -> usize {
        4 + i
    }
    pub fn v(&self, i: usize) -> usize {
        4 + self.m() + i
    }
    pub fn z(&self, i: usize) -> usize {
        4 + 2 * self.m() + i
    }
    pub fn w(&self, i: usize) -> usize {
        4 + 3 * self.m() + i
    }
    pub fn alpha(&self) -> usize {
        4 + 4 * self.m()
    }
    pub fn beta(&self) -> usize {
        5 + 4 * self.m()
    }
    /// Index of the `o(n−2)` generator `E_ij − E_ji`, `i < j`.
    pub fn rot(&self, i: usize, j: usize) -> usize {
        assert!(i < j && j < self.m());
        let m = self.m();
        6 + 4 * m + i * (2 * m - i - 1) / 2 + (j - i - 1)
    }

    /// Gram matrix of the quadratic form (one half of its polar form).
    pub fn gram(&self) -> QMatrix {
        let s = self.size();
        let mut g = QMatrix::identity(s);
        for i in [0, 1, s - 2, s - 1] {
            g.set(i, i, zero());
        }
        for (r, c) in [(0, s - 1), (s - 1, 0), (1, s - 2), (s - 2, 1)] {
            g.set(r, c, int(1));
        }
        g
    }

    pub fn labels(&self) -> Vec<String> {
        let m = self.m();
        let mut l: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        for name in ["u", "v", "z", "w"] {
            l.extend((1..=m).map(|i| format!("{name}{i}")));
        }
        l.push("alpha".into());
        l.push("beta".into());
        for i in 0..m {
            for j in i + 1..m {
                l.push(format!("A{}{}", i + 1, j + 1));
            }
        }
        l
    }

    /// Matrix of a coordinate vector in the displayed shape.
    pub fn matrix(&self, x: &[Rational]) -> QMatrix {
        assert_eq!(x.len(), self.dim());
        let s = self.size();
        let m = self.m();
        let (last, pen) = (s - 1, s - 2);
        let mut g = QMatrix::zeros(s, s);
        let mut put = |r: usize, c: usize, v: &Rational, sign: i64| {
            if !v.is_zero() {
                g.add_at(r, c, &(v * int(sign)));
            }
        };
        put(0, 0, &x[self.a()], 1);
        put(last, last, &x[self.a()], -1);
        put(0, 1, &x[self.b()], 1);
        put(pen, last, &x[self.b()], -1);
        put(1, 0, &x[self.c()], 1);
        put(last, pen, &x[self.c()], -1);
        put(1, 1, &x[self.d()], 1);
        put(pen, pen, &x[self.d()], -1);
        for i in 0..m {
            let r = 2 + i;
            put(0, r, &x[self.u(i)], 1);
            put(r, last, &x[self.u(i)], -1);
            put(1, r, &x[self.v(i)], 1);
            put(r, pen, &x[self.v(i)], -1);
            put(r, 0, &x[self.z(i)], -1);
            put(last, r, &x[self.z(i)], 1);
            put(r, 1, &x[self.w(i)], -1);
            put(pen, r, &x[self.w(i)], 1);
            for j in i + 1..m {
                let a = &x[self.rot(i, j)];
                put(r, 2 + j, a, 1);
                put(2 + j, r, a, -1);
            }
        }
        put(0, pen, &x[self.alpha()], 1);
        put(1, last, &x[self.alpha()], -1);
        put(pen, 0, &x[self.beta()], 1);
        put(last, 1, &x[self.beta()], -1);
        g
    }

    /// Coordinates vanishing on the parabolic subalgebra.
    pub fn quotient_indices(&self) -> Vec<usize> {
        let mut q = vec![self.c()];
        q.extend((0..self.m()).map(|i| self.z(i)));
        q.push(self.beta());
        q
    }

    pub fn parabolic_indices(&self) -> Vec<usize> {
        let q = self.quotient_indices();
        (0..self.dim()).filter(|i| !q.contains(i)).collect()
    }

    /// `t, u_i, v_i, α` in this order.
    pub fn umax_indices(&self) -> Vec<usize> {
        let m = self.m();
        let mut idx = vec![self.b()];
        idx.extend((0..m).map(|i| self.u(i)));
        idx.extend((0..m).map(|i| self.v(i)));
        idx.push(self.alpha());
        idx
    }

    fn basis_matrices(&self, indices: &[usize]) -> Vec<QMatrix> {
        indices
            .iter()
            .map(|&i| self.matrix(&basis_vector(self.dim(), i)))
            .collect()
    }
}

/// `o(2,n)` in the coordinates of [`O2nLayout`].
pub fn o2n_coords(n: usize) -> Result<LieAlgebra> {
    let lay = O2nLayout::new(n)?;
    let idx: Vec<usize> = (0..lay.dim()).collect();
    LieAlgebra::from_matrices(format!("o(2,{n})"), lay.labels(), lay.basis_matrices(&idx))
}

/// The parabolic `p ⊂ o(2,n)` cut out by `c = z_i = β = 0`.
pub fn parabolic_p(n: usize) -> Result<LieAlgebra> {
    let lay = O2nLayout::new(n)?;
    let idx = lay.parabolic_indices();
    let all = lay.labels();
    let labels = idx.iter().map(|&i| all[i].clone()).collect();
    LieAlgebra::from_matrices(format!("p({n})"), labels, lay.basis_matrices(&idx))
}

/// Strictly upper-triangular `u_max ⊂ p`, basis `t, u_i, v_i, α`.
pub fn u_max(n: usize) -> Result<LieAlgebra> {
    let lay = O2nLayout::new(n)?;
    let idx = lay.umax_indices();
    let m = lay.m();
    let mut labels = vec!["t".to_string()];
    labels.extend((1..=m).map(|i| format!("u{i}")));
    labels.extend((1..=m).map(|i| format!("v{i}")));
    labels.push("alpha".into());
    LieAlgebra::from_matrices(format!("u_max({n})"), labels, lay.basis_matrices(&idx))
}
