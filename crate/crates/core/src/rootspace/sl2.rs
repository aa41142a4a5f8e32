//! The identity `[[Y, θX], Y] = B_θ(X,Y) Y − ½ B_θ(Y,Y) X` on `h_{−α}`.
//!
//! Both sides are linear in `X` and quadratic in `Y`, so checking `X` over a
//! basis `b_i` and `Y` over `b_j` and `b_j + b_l` decides it on all of `h_{−α}`.

use serde::Serialize;

use super::cartan::{CartanData, RootDecomposition, TraceForm};
use crate::error::{Error, Result};
use crate::exactmath::linalg;
use crate::exactmath::matrix::{Matrix, QMatrix};
use crate::exactmath::rational::{frac, int, render, Rational};
use crate::exactmath::scalar::{Gaussian, Ring};
use crate::liealg::{LieAlgebra, Subspace};

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Outcome {
    pub holds: bool,
    /// `LHS − RHS`.
    pub defect: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sl2Variant {
    /// `B_θ(X,Y) Y − ½ B_θ(Y,Y) X` with the real trace form.
    Literal,
    /// Adds `B_θ(JX, Y) JY` for the complex structure `J` of `h_{−α}`.
    Hermitian,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sl2Certificate {
    pub algebra: String,
    pub variant: Sl2Variant,
    pub space_dim: usize,
    /// `(X, Y)` pairs evaluated: basis × (basis ∪ pairwise sums).
    pub points: usize,
    pub failures: usize,
    /// Labels of the first failing pair and the rendered defect.
    pub first_failure: Option<(String, String, Vec<String>)>,
}

impl Sl2Certificate {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

pub struct Sl2Check<'a> {
    g: &'a LieAlgebra,
    cd: &'a CartanData,
    form: TraceForm,
    space: Subspace,
    complex_structure: Option<QMatrix>,
}

impl<'a> Sl2Check<'a> {
    pub fn new(g: &'a LieAlgebra, cd: &'a CartanData, rd: &RootDecomposition) -> Result<Self> {
        let space = rd
            .space(-1)
            .cloned()
            .ok_or_else(|| Error::Domain(format!("{}: no (−1)-root space", g.name())))?;
        Ok(Self {
            g,
            cd,
            form: TraceForm::new(g)?,
            space,
            complex_structure: None,
        })
    }

    /// Attaches `J = ad(C)` for the unitary family (see [`su_complex_structure`]).
    pub fn with_complex_structure(mut self, c: &[Rational]) -> Self {
        self.complex_structure = Some(self.g.ad(c));
        self
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    fn defect(&self, x: &[Rational], y: &[Rational], variant: Sl2Variant) -> Vec<Rational> {
        let g = self.g;
        let lhs = g.bracket(&g.bracket(y, &self.cd.apply_theta(x)), y);
        let bxy = self.form.eval(x, y);
        let byy = self.form.eval(y, y);
        let mut rhs = linalg::vec_sub(&linalg::vec_scale(y, &bxy), &linalg::vec_scale(x, &(byy * frac(1, 2))));
        if variant == Sl2Variant::Hermitian {
            if let Some(j) = &self.complex_structure {
                let (jx, jy) = (j.mul_vec(x), j.mul_vec(y));
                rhs = linalg::vec_add(&rhs, &linalg::vec_scale(&jy, &self.form.eval(&jx, y)));
            }
        }
        linalg::vec_sub(&lhs, &rhs)
    }

    /// Evaluates the identity at one pair; both must lie in `h_{−α}`.
    pub fn evaluate(&self, x: &[Rational], y: &[Rational], variant: Sl2Variant) -> Result<Sl2Outcome> {
        if !self.space.contains(x) || !self.space.contains(y) {
            return Err(Error::Contract("sl2 identity arguments must lie in h_-alpha".into()));
        }
        let defect = self.defect(x, y, variant);
        Ok(Sl2Outcome {
            holds: linalg::is_zero_vec(&defect),
            defect,
        })
    }

    pub fn certify(&self, variant: Sl2Variant) -> Sl2Certificate {
        let basis = self.space.basis();
        let d = basis.len();
        let label = |v: &[Rational]| self.g.describe(v);
        let mut ys: Vec<Vec<Rational>> = basis.to_vec();
        for j in 0..d {
            for l in j + 1..d {
                ys.push(linalg::vec_add(&basis[j], &basis[l]));
            }
        }
        let mut failures = 0;
        let mut first_failure = None;
        for x in basis {
            for y in &ys {
                let defect = self.defect(x, y, variant);
                if !linalg::is_zero_vec(&defect) {
                    failures += 1;
                    if first_failure.is_none() {
                        first_failure = Some((label(x), label(y), defect.iter().map(render).collect()));
                    }
                }
            }
        }
        Sl2Certificate {
            algebra: self.g.name().to_string(),
            variant,
            space_dim: d,
            points: d * ys.len(),
            failures,
            first_failure,
        }
    }
}

pub fn verify_sl2_identity(
    g: &LieAlgebra,
    cd: &CartanData,
    rd: &RootDecomposition,
    x: &[Rational],
    y: &[Rational],
) -> Result<Sl2Outcome> {
    Sl2Check::new(g, cd, rd)?.evaluate(x, y, Sl2Variant::Literal)
}

/// `C = i·diag(μ+1, μ, …, μ, μ+1)` with `μ = −2/(k+1)` in `su(1,k)`: traceless,
/// in `h_0`, and `ad(C)` multiplies the `v`-entries of `h_{−α}` by `i`.
pub fn su_complex_structure(g: &LieAlgebra) -> Result<Vec<Rational>> {
    let r = g
        .realization()
        .filter(|r| r.complex_matrices().is_some())
        .ok_or_else(|| Error::Domain(format!("{}: needs a complex realization", g.name())))?;
    let n = r.size();
    let mu = frac(-2, n as i64);
    let mut c = Matrix::<Gaussian>::zeros(n, n);
    for i in 0..n {
        let v = if i == 0 || i == n - 1 { &mu + int(1) } else { mu.clone() };
        c.set(i, i, Gaussian::unit(1).scale(&v));
    }
    r.coordinates_flat(&c.flat_nonzeros())
        .ok_or_else(|| Error::NotInSpan("complex structure element".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::families::{o1k, su1k};
    use crate::rootspace::cartan::decompose;

    #[test]
    fn orthogonal_identity_holds() {
        let g = o1k(4).unwrap();
        let cd = CartanData::rank_one(&g).unwrap();
        let rd = decompose(&g, &cd);
        let chk = Sl2Check::new(&g, &cd, &rd).unwrap();
        assert!(chk.certify(Sl2Variant::Literal).holds());
        let z = vec![int(0); g.dim()];
        assert!(chk.evaluate(&z, &z, Sl2Variant::Literal).unwrap().holds);
        assert!(chk.evaluate(&g.basis(0), &z, Sl2Variant::Literal).is_err());
    }

    #[test]
    fn unitary_needs_the_hermitian_term() {
        let g = su1k(3).unwrap();
        let cd = CartanData::rank_one(&g).unwrap();
        let rd = decompose(&g, &cd);
        let c = su_complex_structure(&g).unwrap();
        let chk = Sl2Check::new(&g, &cd, &rd).unwrap().with_complex_structure(&c);
        assert!(!chk.certify(Sl2Variant::Literal).holds());
        assert!(chk.certify(Sl2Variant::Hermitian).holds());
    }
}
