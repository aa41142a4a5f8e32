//! Irreducibility of a matrix module over ℚ: enveloping algebra, commutant,
//! Burnside's dimension test and Norton's criterion with seeded retries.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cartan::RootDecomposition;
use crate::error::{Error, Result};
use crate::exactmath::linalg;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::poly;
use crate::exactmath::rational::{int, render, Rational};
use crate::liealg::{LieAlgebra, Subspace};

/// A module given by the matrices of a generating set.
#[derive(Clone, Debug)]
pub struct Module {
    pub dim: usize,
    pub generators: Vec<QMatrix>,
}

impl Module {
    pub fn new(dim: usize, generators: Vec<QMatrix>) -> Result<Self> {
        if generators.iter().any(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: generators.iter().map(QMatrix::rows).find(|&r| r != dim).unwrap_or(0),
            });
        }
        Ok(Self { dim, generators })
    }

    pub fn is_invariant(&self, w: &Subspace) -> bool {
        self.generators
            .iter()
            .all(|g| w.basis().iter().all(|v| w.contains(&g.mul_vec(v))))
    }
}

/// `ad(x)` restricted to `h_target` for `x` ranging over `acting`, in the basis
/// of `h_target`.
pub fn adjoint_module(g: &LieAlgebra, acting: &[Vec<Rational>], target: &Subspace) -> Result<Module> {
    let d = target.dim();
    let mut gens = Vec::with_capacity(acting.len());
    for x in acting {
        let cols: Vec<Vec<Rational>> = target
            .basis()
            .iter()
            .map(|v| {
                target
                    .coordinates(&g.bracket(x, v))
                    .ok_or_else(|| Error::Contract("target space is not invariant under the action".into()))
            })
            .collect::<Result<_>>()?;
        gens.push(QMatrix::from_columns(d, &cols));
    }
    Module::new(d, gens)
}

/// Action of `h_0` on `h_α`.
pub fn h0_on_h_alpha(g: &LieAlgebra, rd: &RootDecomposition) -> Result<Module> {
    let target = rd.space(1).ok_or_else(|| Error::Domain("no h_alpha".into()))?;
    adjoint_module(g, rd.zero_space().basis(), target)
}

fn flatten(m: &QMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

/// Basis of the unital algebra generated by the module matrices (spinning).
pub fn enveloping_algebra(m: &Module) -> Vec<QMatrix> {
    let d = m.dim;
    let mut basis = vec![QMatrix::identity(d)];
    let mut span = Subspace::span(d * d, &[flatten(&basis[0])]);
    let mut next = 0;
    while next < basis.len() {
        let cur = basis[next].clone();
        next += 1;
        for g in &m.generators {
            let p = cur.mul(g);
            let f = flatten(&p);
            if !span.contains(&f) {
                span = span.sum(&Subspace::span(d * d, &[f]));
                basis.push(p);
            }
        }
    }
    basis
}

/// Basis of `{C : [G, C] = 0 for every generator}`.
pub fn commutant(m: &Module) -> Vec<QMatrix> {
    let d = m.dim;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in &m.generators {
        // (GC − CG)_{ij} = Σ_k G_ik C_kj − C_ik G_kj, unknown C_ab at a*d + b
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![int(0); d * d];
                for k in 0..d {
                    row[k * d + j] += g.get(i, k);
                    row[i * d + k] -= g.get(k, j);
                }
                if !linalg::is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return (0..d * d).map(|i| QMatrix::unit(d, d, i / d, i % d, int(1))).collect();
    }
    let ker = linalg::kernel(&QMatrix::from_rows(rows));
    ker.columns()
        .into_iter()
        .map(|c| QMatrix::from_rows(c.chunks(d).map(<[Rational]>::to_vec).collect()))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct NortonWitness {
    /// Element of the algebra as integer weights on the spun basis.
    pub weights: Vec<i64>,
    /// Irreducible factor of its characteristic polynomial, lowest degree first.
    pub factor: Vec<String>,
    pub nullity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibilityReport {
    pub dim: usize,
    pub status: Irreducibility,
    pub algebra_dim: usize,
    pub commutant_dim: usize,
    /// Algebra dimension equals `dim²`.
    pub burnside: bool,
    pub norton: Option<NortonWitness>,
    /// Proper invariant subspace, rendered column by column.
    pub invariant_subspace: Option<Vec<Vec<String>>>,
    /// Over ℝ: commutant ℝ, or a 2-dim commutant `ℚ[C]` with `C` having no
    /// real eigenvalue. `None` when undecided.
    pub real_irreducible: Option<bool>,
    pub trials: usize,
}

fn spin(v: &[Rational], algebra: &[QMatrix]) -> Subspace {
    let d = v.len();
    let images: Vec<Vec<Rational>> = algebra.iter().map(|a| a.mul_vec(v)).collect();
    Subspace::span(d, &images)
}

/// `{x : w·x = 0 for all w ∈ W}`.
fn annihilator(w: &Subspace) -> Subspace {
    let m = QMatrix::from_rows(w.basis().to_vec());
    Subspace::from_columns(&linalg::kernel(&m))
}

/// Irreducible factors of degree 1..=3 of `p` that the rational-root test can
/// certify: linear factors from rational roots, and the cofactor left after
/// removing all of them when its degree is 2 or 3.
fn certified_factors(p: &[Rational]) -> Vec<Vec<Rational>> {
    let Some(roots) = poly::rational_roots(p) else {
        return Vec::new();
    };
    let mut out: Vec<Vec<Rational>> = roots.iter().map(|r| vec![-r.clone(), int(1)]).collect();
    let mut rest = p.to_vec();
    for r in &roots {
        while poly::degree(&rest).unwrap_or(0) > 0 && poly::eval(&rest, r) == int(0) {
            rest = poly::deflate(&rest, r);
        }
    }
    if matches!(poly::degree(&rest), Some(2) | Some(3)) {
        out.push(rest);
    }
    out
}

fn real_irreducibility(commutant: &[QMatrix]) -> Option<bool> {
    match commutant.len() {
        1 => Some(true),
        2 => {
            let d = commutant[0].rows();
            let id = QMatrix::identity(d);
            let c = if commutant[0] == id
                || linalg::rank(&QMatrix::from_columns(d * d, &[flatten(&commutant[0]), flatten(&id)])) == 1
            {
                commutant[1].clone()
            } else {
                commutant[0].clone()
            };
            // C² = a C + b I
            let sys = QMatrix::from_columns(d * d, &[flatten(&c), flatten(&id)]);
            let ab = linalg::solve(&sys, &flatten(&c.mul(&c)))?;
            let disc = &ab[0] * &ab[0] + &ab[1] * int(4);
            Some(disc < int(0))
        }
        _ => None,
    }
}

/// Meataxe-style test with at most `max_trials` random algebra elements.
pub fn irreducible(m: &Module, rng: &mut ChaCha8Rng, max_trials: usize) -> Result<IrreducibilityReport> {
    let d = m.dim;
    if d == 0 {
        return Err(Error::Domain("irreducibility of the zero module".into()));
    }
    let algebra = enveloping_algebra(m);
    let comm = commutant(m);
    let mut report = IrreducibilityReport {
        dim: d,
        status: Irreducibility::Inconclusive,
        algebra_dim: algebra.len(),
        commutant_dim: comm.len(),
        burnside: algebra.len() == d * d,
        norton: None,
        invariant_subspace: None,
        real_irreducible: None,
        trials: 0,
    };
    let render_space =
        |w: &Subspace| -> Vec<Vec<String>> { w.basis().iter().map(|v| v.iter().map(render).collect()).collect() };
    if report.burnside {
        report.status = Irreducibility::Irreducible;
        report.real_irreducible = Some(true);
        return Ok(report);
    }
    let transposed: Vec<QMatrix> = algebra.iter().map(QMatrix::transpose).collect();
    for trial in 0..max_trials {
        report.trials = trial + 1;
        let weights: Vec<i64> = (0..algebra.len()).map(|_| rng.gen_range(-3..=3)).collect();
        let mut xi = QMatrix::zeros(d, d);
        for (w, a) in weights.iter().zip(&algebra) {
            if *w != 0 {
                xi = xi.add(&a.scale(&int(*w)));
            }
        }
        for factor in certified_factors(&poly::char_poly(&xi)) {
            let f_xi = poly::eval_at_matrix(&factor, &xi);
            let ker = linalg::kernel(&f_xi);
            if ker.cols() == 0 {
                continue;
            }
            let w = spin(&ker.column(0), &algebra);
            if w.dim() < d {
                debug_assert!(m.is_invariant(&w));
                report.status = Irreducibility::Reducible;
                report.invariant_subspace = Some(render_space(&w));
                return Ok(report);
            }
            let ker_t = linalg::kernel(&f_xi.transpose());
            let wt = spin(&ker_t.column(0), &transposed);
            if wt.dim() < d {
                let w = annihilator(&wt);
                debug_assert!(m.is_invariant(&w));
                report.status = Irreducibility::Reducible;
                report.invariant_subspace = Some(render_space(&w));
                return Ok(report);
            }
            if ker.cols() == factor.len() - 1 {
                report.status = Irreducibility::Irreducible;
                report.norton = Some(NortonWitness {
                    weights,
                    factor: factor.iter().map(render).collect(),
                    nullity: ker.cols(),
                });
                report.real_irreducible = real_irreducibility(&comm);
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::matrix::qmatrix;
    use rand::SeedableRng;

    #[test]
    fn rotation_is_rationally_irreducible_with_complex_commutant() {
        let m = Module::new(2, vec![qmatrix(&[&[0, -1], &[1, 0]])]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = irreducible(&m, &mut rng, 16).unwrap();
        assert_eq!(r.status, Irreducibility::Irreducible);
        assert_eq!(r.commutant_dim, 2);
        assert_eq!(r.real_irreducible, Some(true));
    }

    #[test]
    fn scalars_are_reducible() {
        let m = Module::new(3, vec![QMatrix::identity(3)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = irreducible(&m, &mut rng, 16).unwrap();
        assert_eq!(r.status, Irreducibility::Reducible);
        assert_eq!(r.invariant_subspace.unwrap().len(), 1);
    }

    #[test]
    fn upper_triangular_has_an_invariant_line() {
        let m = Module::new(2, vec![qmatrix(&[&[1, 1], &[0, 2]])]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(irreducible(&m, &mut rng, 16).unwrap().status, Irreducibility::Reducible);
    }
}
