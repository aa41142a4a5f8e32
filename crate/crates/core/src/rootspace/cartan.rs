//! Cartan involution, restricted root decomposition and the diagonal
//! `ad(A)` profile.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::eigen::eigenspace_split;
use crate::exactmath::form::{Signature, SymmetricForm};
use crate::exactmath::linalg;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::{int, Rational};
use crate::liealg::{LieAlgebra, Subspace};

/// `θ : X ↦ −X*` together with the split generator `A`.
#[derive(Clone, Debug)]
pub struct CartanData {
    pub theta: QMatrix,
    /// Coordinates of `A`, normalized so that `α(A) = 1`.
    pub a: Vec<Rational>,
    pub cartan_subspace: Subspace,
}

impl CartanData {
    /// Uses the realization for `θ`. `A` is basis element 0 for the rank-one
    /// families.
    pub fn new(g: &LieAlgebra, a: Vec<Rational>) -> Result<Self> {
        let r = g
            .realization()
            .ok_or_else(|| Error::Domain(format!("{}: Cartan data needs a matrix realization", g.name())))?;
        if a.len() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                got: a.len(),
            });
        }
        Ok(Self {
            theta: r.theta()?,
            cartan_subspace: Subspace::span(g.dim(), std::slice::from_ref(&a)),
            a,
        })
    }

    pub fn rank_one(g: &LieAlgebra) -> Result<Self> {
        Self::new(g, g.basis(0))
    }

    pub fn theta_is_involution(&self) -> bool {
        self.theta.mul(&self.theta) == QMatrix::identity(self.theta.rows())
    }

    /// Basis pairs on which `θ[X, Y] ≠ [θX, θY]`.
    pub fn theta_automorphism_defects(&self, g: &LieAlgebra) -> usize {
        let n = g.dim();
        let images: Vec<Vec<Rational>> = (0..n).map(|i| self.theta.column(i)).collect();
        let mut bad = 0;
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.theta.mul_vec(&g.bracket(&g.basis(i), &g.basis(j)));
                if lhs != g.bracket(&images[i], &images[j]) {
                    bad += 1;
                }
            }
        }
        bad
    }

    pub fn apply_theta(&self, x: &[Rational]) -> Vec<Rational> {
        self.theta.mul_vec(x)
    }
}

/// `B_θ(X, Y) = Re Tr(X θ(Y))` on the basis.
#[derive(Clone, Debug)]
pub struct TraceForm {
    pub form: SymmetricForm,
}

impl TraceForm {
    pub fn new(g: &LieAlgebra) -> Result<Self> {
        let r = g
            .realization()
            .ok_or_else(|| Error::Domain(format!("{}: trace form needs a matrix realization", g.name())))?;
        Ok(Self {
            form: SymmetricForm::new(r.trace_form_gram())?,
        })
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.form.eval(x, y)
    }

    pub fn signature(&self) -> Signature {
        self.form.signature()
    }

    pub fn is_negative_definite(&self) -> bool {
        let s = self.signature();
        s.pos == 0 && s.null == 0
    }
}

#[derive(Clone, Debug)]
pub struct RootDecomposition {
    /// Root values `β(A)`, increasing, the zero root included.
    pub roots: Vec<i64>,
    pub spaces: BTreeMap<i64, Subspace>,
    /// Dimension not covered by the integer eigenspaces.
    pub residual: usize,
    /// Basis pairs violating `[h_β, h_γ] ⊆ h_{β+γ}`.
    pub grading_defects: usize,
}

impl RootDecomposition {
    pub fn zero_space(&self) -> &Subspace {
        &self.spaces[&0]
    }

    pub fn space(&self, root: i64) -> Option<&Subspace> {
        self.spaces.get(&root)
    }

    pub fn dim(&self, root: i64) -> usize {
        self.spaces.get(&root).map_or(0, Subspace::dim)
    }

    pub fn is_complete(&self) -> bool {
        self.residual == 0
    }
}

/// Eigenspace split of `ad(A)` over the integer candidates `−bound..=bound`.
/// A nonzero residual means `ad(A)` is not diagonalizable over those values.
pub fn decompose(g: &LieAlgebra, cd: &CartanData) -> RootDecomposition {
    decompose_with_bound(g, cd, 2)
}

pub fn decompose_with_bound(g: &LieAlgebra, cd: &CartanData, bound: i64) -> RootDecomposition {
    let ad = g.ad(&cd.a);
    let candidates: Vec<Rational> = (-bound..=bound).map(int).collect();
    let split = eigenspace_split(&ad, &candidates);
    let mut spaces = BTreeMap::new();
    for ((lam, basis), beta) in split.spaces.iter().zip(-bound..=bound) {
        debug_assert_eq!(*lam, int(beta));
        if basis.cols() > 0 || beta == 0 {
            spaces.insert(beta, Subspace::from_columns(basis));
        }
    }
    let roots: Vec<i64> = spaces.keys().copied().collect();
    let mut grading_defects = 0;
    for (&b, sb) in &spaces {
        for (&c, sc) in &spaces {
            if c < b {
                continue;
            }
            let target = int(b + c);
            for x in sb.basis() {
                for y in sc.basis() {
                    let w = g.bracket(x, y);
                    if linalg::is_zero_vec(&w) {
                        continue;
                    }
                    // w ∈ h_{β+γ} iff ad(A) w = (β+γ) w; forces w = 0 off the spectrum
                    if ad.mul_vec(&w) != linalg::vec_scale(&w, &target) {
                        grading_defects += 1;
                    }
                }
            }
        }
    }
    RootDecomposition {
        roots,
        spaces,
        residual: split.residual,
        grading_defects,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootEigen {
    pub root: i64,
    pub dim: usize,
    /// `ad(A)` acts on the space as the scalar `root`.
    pub scalar: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCheck {
    pub index: usize,
    /// Lies in `a ⊕ h_α ⊕ h_2α`.
    pub admissible: bool,
    /// Lies in `h_α ⊕ h_2α` and is nonzero.
    pub in_nilradical: bool,
    /// Smallest `e` with `(ad X)^e = 0`, for generators without an `a` part.
    pub nilpotency_index: Option<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagonalProfile {
    pub table: Vec<RootEigen>,
    pub generators: Vec<GeneratorCheck>,
}

impl DiagonalProfile {
    pub fn eigenvalues(&self) -> Vec<i64> {
        self.table.iter().filter(|r| r.dim > 0).map(|r| r.root).collect()
    }

    pub fn pass(&self) -> bool {
        self.table.iter().all(|r| r.scalar)
            && self
                .generators
                .iter()
                .all(|g| g.admissible && (!g.in_nilradical || g.nilpotency_index.is_some()))
    }
}

/// Checks that `ad(A)` is the scalar `β` on each `h_β` and that generators in
/// `a ⊕ h_α ⊕ h_2α` without an `a` component have nilpotent adjoint.
pub fn ad_diagonal_profile(
    g: &LieAlgebra,
    cd: &CartanData,
    rd: &RootDecomposition,
    generators: &[Vec<Rational>],
) -> DiagonalProfile {
    let ad = g.ad(&cd.a);
    let table = rd
        .spaces
        .iter()
        .map(|(&root, s)| RootEigen {
            root,
            dim: s.dim(),
            scalar: s
                .basis()
                .iter()
                .all(|v| ad.mul_vec(v) == linalg::vec_scale(v, &int(root))),
        })
        .collect();
    let positive = rd
        .spaces
        .iter()
        .filter(|(&r, _)| r > 0)
        .fold(Subspace::zero(g.dim()), |acc, (_, s)| acc.sum(s));
    let allowed = positive.sum(&cd.cartan_subspace);
    let gens = generators
        .iter()
        .enumerate()
        .map(|(index, x)| {
            let admissible = allowed.contains(x);
            let in_nilradical = positive.contains(x) && !linalg::is_zero_vec(x);
            let nilpotency_index = if in_nilradical {
                g.ad(x).nilpotency_index()
            } else {
                None
            };
            GeneratorCheck {
                index,
                admissible,
                in_nilradical,
                nilpotency_index,
            }
        })
        .collect();
    DiagonalProfile {
        table,
        generators: gens,
    }
}
