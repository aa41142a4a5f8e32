//! The isotropy shadow of Lorentzian conformal geometry: `g/p` for
//! `g = o(2,n)`, the conformal class of the induced Lorentz form, and the
//! sub-Lorentzian trichotomy for subspaces.
//!
//! Signature convention: Lorentz means one negative and `n−1` positive
//! directions.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::form::{Signature, SymmetricForm};
use crate::exactmath::linalg;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::{int, integerize, render, Rational};
use crate::liealg::structure::{derived, is_subalgebra};
use crate::liealg::{o2n_coords, LieAlgebra, O2nLayout, Subspace};

#[derive(Clone, Debug)]
pub struct ConformalModel {
    pub n: usize,
    pub layout: O2nLayout,
    pub g: LieAlgebra,
    pub p: Subspace,
    /// Coordinates of `g` spanning a complement of `p`: `c, z_i, β`.
    pub quotient_indices: Vec<usize>,
    pub q: SymmetricForm,
    /// Dimension of the solution space of the invariance system.
    pub solution_dim: usize,
}

impl ConformalModel {
    pub fn quotient_dim(&self) -> usize {
        self.quotient_indices.len()
    }

    /// `ad(x)` induced on `g/p`, in the quotient basis.
    pub fn quotient_action(&self, x: &[Rational]) -> QMatrix {
        let ad = self.g.ad(x);
        let qi = &self.quotient_indices;
        let mut m = QMatrix::zeros(qi.len(), qi.len());
        for (c, &src) in qi.iter().enumerate() {
            for (r, &dst) in qi.iter().enumerate() {
                m.set(r, c, ad.get(dst, src).clone());
            }
        }
        m
    }

    /// The grading element `a` (eigenvalue −1 on `g/p`).
    pub fn grading_element(&self) -> Vec<Rational> {
        self.g.basis(self.layout.a())
    }
}

/// `Mᵗ S + S M` read as a vector over the unknowns `S_ab`, `a ≤ b`.
fn invariance_rows(m: &QMatrix) -> Vec<Vec<Rational>> {
    let d = m.rows();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| (a..d).map(move |b| (a, b))).collect();
    let slot = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in i..d {
            // (MᵗS + SM)_ij = Σ_k M_ki S_kj + S_ik M_kj
            let mut row = vec![int(0); pairs.len()];
            for k in 0..d {
                row[slot(k, j)] += m.get(k, i);
                row[slot(i, k)] += m.get(k, j);
            }
            if !linalg::is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    rows
}

fn symmetric_from(d: usize, v: &[Rational]) -> QMatrix {
    let mut s = QMatrix::zeros(d, d);
    let mut k = 0;
    for a in 0..d {
        for b in a..d {
            s.set(a, b, v[k].clone());
            s.set(b, a, v[k].clone());
            k += 1;
        }
    }
    s
}

/// Solves `X̄ᵗ S + S X̄ = 0` for `X` over a basis of `[p, p]`; `p` is
/// `[p, p]` plus the grading element, which acts on `g/p` as a scalar and so
/// only rescales `S`.
pub fn build_model(n: usize) -> Result<ConformalModel> {
    let layout = O2nLayout::new(n)?;
    let g = o2n_coords(n)?;
    let p = Subspace::coordinate(g.dim(), layout.parabolic_indices());
    if !is_subalgebra(&g, &p) || g.dim() - p.dim() != n {
        return Err(Error::Construction(format!("p is not a codimension-{n} subalgebra")));
    }
    let pa = g.restrict(
        &p,
        format!("p({n})"),
        layout
            .parabolic_indices()
            .iter()
            .map(|&i| g.labels()[i].clone())
            .collect(),
    )?;
    let dp = derived(&pa);
    let pidx = layout.parabolic_indices();
    let mut model = ConformalModel {
        n,
        layout,
        q: SymmetricForm::new(QMatrix::identity(n))?,
        quotient_indices: layout.quotient_indices(),
        p,
        g,
        solution_dim: 0,
    };
    let mut rows = Vec::new();
    for v in dp.basis() {
        let mut x = vec![int(0); model.g.dim()];
        for (k, &i) in pidx.iter().enumerate() {
            x[i] = v[k].clone();
        }
        rows.extend(invariance_rows(&model.quotient_action(&x)));
    }
    let ker = linalg::kernel(&QMatrix::from_rows(rows));
    model.solution_dim = ker.cols();
    if ker.cols() != 1 {
        return Err(Error::Construction(format!(
            "invariance system for n = {n} has a {}-dimensional solution space",
            ker.cols()
        )));
    }
    let mut q = SymmetricForm::new(symmetric_from(n, &ker.column(0)))?;
    let s = q.signature();
    if s.pos == 1 && s.neg == n - 1 {
        q = q.scaled(&int(-1));
    }
    if !q.signature().is_lorentz() {
        return Err(Error::Construction(format!(
            "invariant form has signature {:?}",
            q.signature()
        )));
    }
    model.q = q;
    Ok(model)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConformalFactor {
    /// `X̄ᵗ Q + Q X̄ = λ Q`.
    pub lambda: String,
    pub nilpotent: bool,
}

pub fn ad_conformal_factor(model: &ConformalModel, x: &[Rational]) -> Result<ConformalFactor> {
    if !model.p.contains(x) {
        return Err(Error::Contract("conformal factor of an element outside p".into()));
    }
    let m = model.quotient_action(x);
    let s = model.q.gram();
    let sym = m.transpose().mul(s).add(&s.mul(&m));
    let (r, c) = (0..s.rows())
        .flat_map(|r| (0..s.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| !num_traits::Zero::is_zero(s.get(r, c)))
        .expect("Q is nonzero");
    let lambda = sym.get(r, c) / s.get(r, c);
    if sym != s.scale(&lambda) {
        return Err(Error::Contract("quotient action is not conformal".into()));
    }
    Ok(ConformalFactor {
        lambda: render(&lambda),
        nilpotent: m.nilpotency_index().is_some(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubspaceClass {
    Riemannian,
    Lorentzian,
    DegeneratePositive,
}

/// `w` is a subspace of `g/p` in quotient coordinates.
pub fn classify_subspace(q: &SymmetricForm, w: &Subspace) -> Result<(SubspaceClass, Signature)> {
    if w.is_zero() {
        return Err(Error::Domain("classify the zero subspace".into()));
    }
    let s = q.restrict(&w.basis_matrix()).signature();
    let class = match (s.neg, s.null) {
        (0, 0) => SubspaceClass::Riemannian,
        (1, 0) => SubspaceClass::Lorentzian,
        (0, 1) => SubspaceClass::DegeneratePositive,
        _ => {
            return Err(Error::Contract(format!(
                "restricted signature {s:?} is not sub-Lorentzian"
            )));
        }
    };
    Ok((class, s))
}

#[derive(Clone, Debug, Serialize)]
pub struct IsotropicSearch {
    pub coordinate_subspaces: usize,
    pub max_isotropic_coordinate_dim: usize,
    /// `min(pos, neg) + null`, the largest totally isotropic dimension.
    pub signature_bound: usize,
    /// Null vectors with entries in `{-1, 0, 1}`.
    pub null_vectors: usize,
    /// Independent orthogonal pairs among them (would span an isotropic plane).
    pub isotropic_planes: usize,
}

impl IsotropicSearch {
    pub fn max_dim(&self) -> usize {
        let found = if self.isotropic_planes > 0 {
            2
        } else {
            self.null_vectors.min(1)
        };
        self.max_isotropic_coordinate_dim.max(found)
    }
}

pub fn isotropic_search(q: &SymmetricForm) -> IsotropicSearch {
    let d = q.dim();
    let sig = q.signature();
    let gram: Vec<i128> = integerize(q.gram().entries())
        .iter()
        .map(|x| x.to_i128().expect("small entries"))
        .collect();
    let b = |x: &[i128], y: &[i128]| -> i128 {
        let mut s = 0;
        for i in 0..d {
            if x[i] != 0 {
                for j in 0..d {
                    s += x[i] * gram[i * d + j] * y[j];
                }
            }
        }
        s
    };
    let mut max_coord = 0;
    for mask in 1u32..(1 << d) {
        let idx: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        if idx.iter().all(|&i| idx.iter().all(|&j| gram[i * d + j] == 0)) {
            max_coord = max_coord.max(idx.len());
        }
    }
    let mut nulls: Vec<Vec<i128>> = Vec::new();
    let total = 3usize.pow(d as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<i128> = (0..d)
            .map(|_| {
                let digit = (c % 3) as i128 - 1;
                c /= 3;
                digit
            })
            .collect();
        // one representative per ± pair
        match v.iter().find(|&&x| x != 0) {
            Some(&first) if first > 0 => {}
            _ => continue,
        }
        if b(&v, &v) == 0 {
            nulls.push(v);
        }
    }
    let mut planes = 0;
    for (i, v) in nulls.iter().enumerate() {
        for w in &nulls[i + 1..] {
            if b(v, w) == 0 {
                planes += 1;
            }
        }
    }
    IsotropicSearch {
        coordinate_subspaces: (1usize << d) - 1,
        max_isotropic_coordinate_dim: max_coord,
        signature_bound: sig.pos.min(sig.neg) + sig.null,
        null_vectors: nulls.len(),
        isotropic_planes: planes,
    }
}
