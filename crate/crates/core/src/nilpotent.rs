//! Constructive Engel theorem for nilpotent matrix algebras, isotropic fixed
//! vectors in `ℝ^{1,n−1}`, and conjugation of nilpotent subalgebras of the
//! parabolic `p ⊂ o(2,n)` into `u_max`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::form::SymmetricForm;
use crate::exactmath::linalg;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::{int, render, Rational};
use crate::liealg::families::lorentz_gram;
use crate::liealg::structure::subalgebra_closure;
use crate::liealg::{o1k, o2n_coords, u_max, LieAlgebra, O2nLayout, Subspace};
use crate::rootspace::{decompose, CartanData};

#[derive(Clone, Debug)]
pub struct NilpotentAlgebra {
    pub dim: usize,
    pub generators: Vec<QMatrix>,
    pub form: Option<SymmetricForm>,
}

impl NilpotentAlgebra {
    /// Every generator must be a nilpotent `dim × dim` matrix.
    pub fn new(dim: usize, generators: Vec<QMatrix>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.rows(),
                });
            }
            if g.nilpotency_index().is_none() {
                return Err(Error::Contract(format!(
                    "generator {i} is not nilpotent: its {dim}-th power is nonzero"
                )));
            }
        }
        Ok(Self {
            dim,
            generators,
            form: None,
        })
    }

    /// Generators must also be skew for `form`.
    pub fn with_form(mut self, form: SymmetricForm) -> Result<Self> {
        let j = form.gram();
        for (i, g) in self.generators.iter().enumerate() {
            if !g.transpose().mul(j).add(&j.mul(g)).is_zero() {
                return Err(Error::Contract(format!("generator {i} is not skew for the form")));
            }
        }
        self.form = Some(form);
        Ok(self)
    }
}

fn flatten(m: &QMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

/// Basis of the matrix Lie algebra generated by `gens`.
pub fn matrix_closure(gens: &[QMatrix]) -> Vec<QMatrix> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let d = first.rows();
    let mut basis: Vec<QMatrix> = Vec::new();
    let mut span = Subspace::zero(d * d);
    let push = |m: QMatrix, basis: &mut Vec<QMatrix>, span: &mut Subspace| {
        let f = flatten(&m);
        if !span.contains(&f) {
            *span = span.sum(&Subspace::span(d * d, &[f]));
            basis.push(m);
        }
    };
    for g in gens {
        push(g.clone(), &mut basis, &mut span);
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let c = basis[i].commutator(&basis[j]);
            push(c, &mut basis, &mut span);
        }
        i += 1;
    }
    basis
}

/// First nonzero central element of the algebra spanned by `basis`.
fn central_element(basis: &[QMatrix]) -> Option<QMatrix> {
    let d = basis[0].rows();
    let r = basis.len();
    // Σ c_k [M_k, M_i] = 0 for every i
    let mut rows = Vec::new();
    for mi in basis {
        let cols: Vec<Vec<Rational>> = basis.iter().map(|mk| flatten(&mk.commutator(mi))).collect();
        let block = QMatrix::from_columns(d * d, &cols);
        for row in 0..d * d {
            rows.push(block.row(row).to_vec());
        }
    }
    let ker = linalg::kernel(&QMatrix::from_rows(rows));
    if ker.cols() == 0 {
        return None;
    }
    let c = ker.column(0);
    let mut z = QMatrix::zeros(d, d);
    for k in 0..r {
        if !num_traits::Zero::is_zero(&c[k]) {
            z = z.add(&basis[k].scale(&c[k]));
        }
    }
    Some(z)
}

/// Restriction of `m` to the invariant subspace spanned by the columns of `k`.
fn restrict(m: &QMatrix, k: &QMatrix) -> Result<QMatrix> {
    let cols = (0..k.cols())
        .map(|j| {
            linalg::solve(k, &m.mul_vec(&k.column(j)))
                .ok_or_else(|| Error::Contract("subspace is not invariant".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QMatrix::from_columns(k.cols(), &cols))
}

#[derive(Clone, Debug, Serialize)]
pub struct EngelVector {
    pub vector: Vec<String>,
    /// Kernel-restriction steps taken.
    pub steps: usize,
    #[serde(skip)]
    pub exact: Vec<Rational>,
}

/// Nonzero `v` with `X v = 0` for every generator: restrict to the kernel of
/// a central element until the action vanishes.
pub fn common_annihilated_vector(alg: &NilpotentAlgebra) -> Result<EngelVector> {
    if alg.dim == 0 {
        return Err(Error::Domain("common kernel in the zero space".into()));
    }
    let mut embed = QMatrix::identity(alg.dim);
    let mut mats = alg.generators.clone();
    let mut steps = 0;
    loop {
        let basis: Vec<QMatrix> = matrix_closure(&mats).into_iter().filter(|m| !m.is_zero()).collect();
        if basis.is_empty() {
            let v = embed.column(0);
            return Ok(EngelVector {
                vector: v.iter().map(render).collect(),
                steps,
                exact: v,
            });
        }
        let z =
            central_element(&basis).ok_or_else(|| Error::Contract("algebra has no center: not nilpotent".into()))?;
        let k = linalg::kernel(&z);
        if k.cols() == 0 {
            return Err(Error::Contract("central element is invertible: not nilpotent".into()));
        }
        mats = basis.iter().map(|m| restrict(m, &k)).collect::<Result<_>>()?;
        embed = embed.mul(&k);
        steps += 1;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsotropicVector {
    pub vector: Vec<String>,
    /// `dim E` for `E = ∩ ker Z` over the center; 0 for the zero algebra.
    pub e_dim: usize,
    pub e_perp_dim: usize,
    pub engel_steps: usize,
    pub isotropic: bool,
    pub annihilated: bool,
    #[serde(skip)]
    pub exact: Vec<Rational>,
}

/// First basis vector, or `e_i ± e_j`, that is null for `form`.
fn standard_null(form: &SymmetricForm) -> Option<Vec<Rational>> {
    let d = form.dim();
    let basis = |i| linalg::basis_vector(d, i);
    (0..d).map(basis).find(|v| form.quadratic(v) == int(0)).or_else(|| {
        (0..d)
            .flat_map(|i| (i + 1..d).flat_map(move |j| [(i, j, 1), (i, j, -1)]))
            .map(|(i, j, s)| linalg::vec_add(&basis(i), &linalg::vec_scale(&basis(j), &int(s))))
            .find(|v| form.quadratic(v) == int(0))
    })
}

/// Nonzero null vector fixed by a nilpotent algebra of skew matrices: Engel on
/// `E^⊥`, where `E` is the common kernel of the center, lands in `E ∩ E^⊥`.
pub fn isotropic_fixed_vector(alg: &NilpotentAlgebra) -> Result<IsotropicVector> {
    let form = alg
        .form
        .as_ref()
        .ok_or_else(|| Error::Contract("isotropic fixed vector needs a form".into()))?;
    let d = alg.dim;
    let basis: Vec<QMatrix> = matrix_closure(&alg.generators)
        .into_iter()
        .filter(|m| !m.is_zero())
        .collect();
    let finish = |v: Vec<Rational>, e_dim, e_perp_dim, engel_steps| {
        let isotropic = form.quadratic(&v) == int(0) && !linalg::is_zero_vec(&v);
        let annihilated = basis.iter().all(|m| linalg::is_zero_vec(&m.mul_vec(&v)));
        IsotropicVector {
            vector: v.iter().map(render).collect(),
            e_dim,
            e_perp_dim,
            engel_steps,
            isotropic,
            annihilated,
            exact: v,
        }
    };
    if basis.is_empty() {
        let v = standard_null(form).ok_or_else(|| Error::Domain("form has no standard null vector".into()))?;
        return Ok(finish(v, 0, 0, 0));
    }
    // E = common kernel of a basis of the center
    let center = {
        let r = basis.len();
        let mut rows = Vec::new();
        for mi in &basis {
            let cols: Vec<Vec<Rational>> = basis.iter().map(|mk| flatten(&mk.commutator(mi))).collect();
            let block = QMatrix::from_columns(d * d, &cols);
            rows.extend((0..d * d).map(|row| block.row(row).to_vec()));
        }
        let ker = linalg::kernel(&QMatrix::from_rows(rows));
        (0..ker.cols())
            .map(|c| {
                let coef = ker.column(c);
                (0..r).fold(QMatrix::zeros(d, d), |acc, k| acc.add(&basis[k].scale(&coef[k])))
            })
            .collect::<Vec<_>>()
    };
    if center.is_empty() {
        return Err(Error::Contract("algebra has no center: not nilpotent".into()));
    }
    let stacked: Vec<Vec<Rational>> = center
        .iter()
        .flat_map(|z| (0..d).map(|r| z.row(r).to_vec()).collect::<Vec<_>>())
        .collect();
    let e = linalg::kernel(&QMatrix::from_rows(stacked));
    if e.cols() == 0 {
        return Err(Error::Contract("center has no common kernel: not nilpotent".into()));
    }
    let e_perp = linalg::kernel(&e.transpose().mul(form.gram()));
    let restricted = basis.iter().map(|m| restrict(m, &e_perp)).collect::<Result<Vec<_>>>()?;
    let engel = common_annihilated_vector(&NilpotentAlgebra {
        dim: e_perp.cols(),
        generators: restricted,
        form: None,
    })?;
    let v = e_perp.mul_vec(&engel.exact);
    let out = finish(v, e.cols(), e_perp.cols(), engel.steps);
    if !out.isotropic || !out.annihilated {
        return Err(Error::Construction(
            "Engel vector is not an isotropic fixed vector".into(),
        ));
    }
    Ok(out)
}

/// `x ↦ x − 2 B(x, r)/B(r, r) r`.
pub fn reflection(j: &QMatrix, r: &[Rational]) -> Option<QMatrix> {
    let jr = j.mul_vec(r);
    let q = linalg::dot(r, &jr);
    if num_traits::Zero::is_zero(&q) {
        return None;
    }
    let d = r.len();
    let mut m = QMatrix::identity(d);
    let c = int(-2) / q;
    for a in 0..d {
        for b in 0..d {
            m.add_at(a, b, &(&c * &r[a] * &jr[b]));
        }
    }
    Some(m)
}

fn parallel(a: &[Rational], b: &[Rational]) -> bool {
    linalg::rank(&QMatrix::from_columns(a.len(), &[a.to_vec(), b.to_vec()])) <= 1
}

/// An isometry of `j` (product of at most two reflections) sending the null
/// vector `v` onto a multiple of `e_0`.
pub fn null_to_e0(j: &QMatrix, v: &[Rational]) -> Result<QMatrix> {
    let d = v.len();
    let e0 = linalg::basis_vector(d, 0);
    let b = |x: &[Rational], y: &[Rational]| linalg::dot(x, &j.mul_vec(y));
    if parallel(v, &e0) {
        return Ok(QMatrix::identity(d));
    }
    let mut g = QMatrix::identity(d);
    let mut w = v.to_vec();
    if num_traits::Zero::is_zero(&b(&w, &e0)) {
        let total = 3usize.pow(d as u32);
        let r = (1..total)
            .map(|mut code| {
                (0..d)
                    .map(|_| {
                        let digit = (code % 3) as i64 - 1;
                        code /= 3;
                        int(digit)
                    })
                    .collect::<Vec<_>>()
            })
            .find(|r| {
                !num_traits::Zero::is_zero(&b(r, r))
                    && !num_traits::Zero::is_zero(&b(&w, r))
                    && !num_traits::Zero::is_zero(&b(r, &e0))
            })
            .ok_or_else(|| Error::Construction("no auxiliary reflection found".into()))?;
        let s = reflection(j, &r).expect("anisotropic");
        w = s.mul_vec(&w);
        g = s;
    }
    let r = linalg::vec_sub(&w, &e0);
    let s = reflection(j, &r).ok_or_else(|| Error::Construction("v − e0 is isotropic".into()))?;
    Ok(s.mul(&g))
}

#[derive(Clone, Debug, Serialize)]
pub struct Conjugation {
    /// `diag(1, g, 1)` with `g ∈ O(1, n−1)`.
    pub conjugator: Vec<Vec<String>>,
    pub identity: bool,
    pub fixed_vector: Vec<String>,
    pub in_umax: bool,
    /// `(generator, coordinate label, value)` of the first entry outside `u_max`.
    pub offending: Option<(usize, String, String)>,
}

/// Conjugates a nilpotent subalgebra of `p ⊂ o(2,n)` into `u_max` by an
/// element of the Lorentz block of `P`.
pub fn conjugate_into_umax(n: usize, generators: &[QMatrix]) -> Result<Conjugation> {
    let layout = O2nLayout::new(n)?;
    let g = o2n_coords(n)?;
    let real = g.realization().expect("o(2,n) is realized");
    let size = layout.size();
    let mut middles = Vec::new();
    for (i, m) in generators.iter().enumerate() {
        let x = real
            .coordinates_of_real(m)
            .ok_or_else(|| Error::Contract(format!("generator {i} is not in o(2,{n})")))?;
        if layout
            .quotient_indices()
            .iter()
            .any(|&q| !num_traits::Zero::is_zero(&x[q]))
        {
            return Err(Error::Contract(format!("generator {i} is not in p")));
        }
        if m.nilpotency_index().is_none() {
            return Err(Error::Contract(format!("generator {i} is not nilpotent")));
        }
        let mid: Vec<Vec<Rational>> = (1..=n).map(|r| m.row(r)[1..=n].to_vec()).collect();
        middles.push(QMatrix::from_rows(mid));
    }
    let j = lorentz_gram(n);
    let alg = NilpotentAlgebra::new(n, middles)?.with_form(SymmetricForm::new(j.clone())?)?;
    let v = isotropic_fixed_vector(&alg)?;
    let h = null_to_e0(&j, &v.exact)?;
    let mut p = QMatrix::identity(size);
    for r in 0..n {
        for c in 0..n {
            p.set(r + 1, c + 1, h.get(r, c).clone());
        }
    }
    let p_inv = linalg::inverse(&p)?;
    let umax = layout.umax_indices();
    let mut offending = None;
    for (i, m) in generators.iter().enumerate() {
        let img = p.mul(m).mul(&p_inv);
        let x = real
            .coordinates_of_real(&img)
            .ok_or_else(|| Error::Construction("conjugate left o(2,n)".into()))?;
        if let Some(k) = (0..x.len()).find(|k| !umax.contains(k) && !num_traits::Zero::is_zero(&x[*k])) {
            offending = Some((i, g.labels()[k].clone(), render(&x[k])));
            break;
        }
    }
    Ok(Conjugation {
        conjugator: (0..size).map(|r| p.row(r).iter().map(render).collect()).collect(),
        identity: p == QMatrix::identity(size),
        fixed_vector: v.vector,
        in_umax: offending.is_none(),
        offending,
    })
}

fn random_vec(rng: &mut ChaCha8Rng, d: usize, range: i64) -> Vec<Rational> {
    (0..d).map(|_| int(rng.gen_range(-range..=range))).collect()
}

/// Product of 1 to 3 random reflections of `j`, with its inverse.
pub fn random_isometry(rng: &mut ChaCha8Rng, j: &QMatrix) -> (QMatrix, QMatrix) {
    let d = j.rows();
    let count = rng.gen_range(1..=3);
    let mut g = QMatrix::identity(d);
    let mut inv = QMatrix::identity(d);
    let mut made = 0;
    while made < count {
        if let Some(s) = reflection(j, &random_vec(rng, d, 2)) {
            g = s.mul(&g);
            inv = inv.mul(&s);
            made += 1;
        }
    }
    (g, inv)
}

/// Samples random conjugates of random subspaces of `h_α ⊂ o(1,k)`; the root
/// decomposition is computed once.
pub struct LorentzUnipotentSampler {
    k: usize,
    g: LieAlgebra,
    h_alpha: Subspace,
    j: QMatrix,
}

impl LorentzUnipotentSampler {
    pub fn new(k: usize) -> Result<Self> {
        let g = o1k(k)?;
        let cd = CartanData::rank_one(&g)?;
        let rd = decompose(&g, &cd);
        let h_alpha = rd
            .space(1)
            .cloned()
            .ok_or_else(|| Error::Construction("o(1,k) without h_alpha".into()))?;
        Ok(Self {
            k,
            g,
            h_alpha,
            j: lorentz_gram(k + 1),
        })
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Result<NilpotentAlgebra> {
        let real = self.g.realization().expect("o(1,k) is realized");
        let (r, r_inv) = random_isometry(rng, &self.j);
        let h = &self.h_alpha;
        let count = rng.gen_range(1..=h.dim());
        let gens = (0..count)
            .map(|_| {
                let x = h.element(&random_vec(rng, h.dim(), 2));
                r.mul(&real.real_element(&x).expect("real")).mul(&r_inv)
            })
            .collect();
        NilpotentAlgebra::new(self.k + 1, gens)?.with_form(SymmetricForm::new(self.j.clone())?)
    }
}

/// A random conjugate of a random subspace of `h_α ⊂ o(1,k)`.
pub fn random_lorentz_unipotent(k: usize, rng: &mut ChaCha8Rng) -> Result<NilpotentAlgebra> {
    LorentzUnipotentSampler::new(k)?.sample(rng)
}

/// Matrices of a random subalgebra of `u_max(n)`, conjugated by a random
/// `diag(1, g, 1)` with `g ∈ O(1, n−1)`.
pub fn random_parabolic_unipotent(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<QMatrix>> {
    let layout = O2nLayout::new(n)?;
    let um = u_max(n)?;
    let seeds: Vec<Vec<Rational>> = (0..rng.gen_range(1..=3))
        .map(|_| random_vec(rng, um.dim(), 2))
        .collect();
    let sub = subalgebra_closure(&um, &Subspace::span(um.dim(), &seeds)).space;
    let (h, h_inv) = random_isometry(rng, &lorentz_gram(n));
    let size = layout.size();
    let block = |m: &QMatrix| {
        let mut p = QMatrix::identity(size);
        for r in 0..n {
            for c in 0..n {
                p.set(r + 1, c + 1, m.get(r, c).clone());
            }
        }
        p
    };
    let (p, p_inv) = (block(&h), block(&h_inv));
    let idx = layout.umax_indices();
    Ok(sub
        .basis()
        .iter()
        .map(|x| {
            let mut full = vec![int(0); layout.dim()];
            for (k, &i) in idx.iter().enumerate() {
                full[i] = x[k].clone();
            }
            p.mul(&layout.matrix(&full)).mul(&p_inv)
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct EngelHarnessReport {
    pub n: usize,
    pub trials: usize,
    pub isotropic_ok: usize,
    pub conjugation_ok: usize,
    pub max_engel_steps: usize,
    /// `(trial, message)` for every failing trial.
    pub failures: Vec<(usize, String)>,
}

impl EngelHarnessReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.isotropic_ok == self.trials && self.conjugation_ok == self.trials
    }
}

/// Per trial: an isotropic fixed vector for a random unipotent subalgebra of
/// `o(1, n−1)`, and conjugation of a random conjugate of a subalgebra of
/// `u_max(n)` back into `u_max(n)`.
pub fn engel_harness(n: usize, trials: usize, rng: &mut ChaCha8Rng) -> Result<EngelHarnessReport> {
    let mut report = EngelHarnessReport {
        n,
        trials,
        isotropic_ok: 0,
        conjugation_ok: 0,
        max_engel_steps: 0,
        failures: Vec::new(),
    };
    let sampler = LorentzUnipotentSampler::new(n - 1)?;
    for t in 0..trials {
        match sampler.sample(rng).and_then(|a| isotropic_fixed_vector(&a)) {
            Ok(v) if v.isotropic && v.annihilated => {
                report.isotropic_ok += 1;
                report.max_engel_steps = report.max_engel_steps.max(v.engel_steps);
            }
            Ok(_) => report.failures.push((t, "vector fails its equations".into())),
            Err(e) => report.failures.push((t, e.to_string())),
        }
        match random_parabolic_unipotent(n, rng).and_then(|gens| conjugate_into_umax(n, &gens)) {
            Ok(c) if c.in_umax => report.conjugation_ok += 1,
            Ok(c) => report
                .failures
                .push((t, format!("image leaves u_max at {:?}", c.offending))),
            Err(e) => report.failures.push((t, e.to_string())),
        }
    }
    Ok(report)
}

/// `u_max(n)` basis matrices in `o(2,n)`.
pub fn umax_matrices(n: usize) -> Result<Vec<QMatrix>> {
    let layout = O2nLayout::new(n)?;
    Ok(layout
        .umax_indices()
        .iter()
        .map(|&i| layout.matrix(&linalg::basis_vector(layout.dim(), i)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::matrix::qmatrix;
    use rand::SeedableRng;

    #[test]
    fn jordan_block() {
        let j3 = qmatrix(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let v = common_annihilated_vector(&NilpotentAlgebra::new(3, vec![j3]).unwrap()).unwrap();
        assert_eq!(v.exact, linalg::basis_vector(3, 0));
    }

    #[test]
    fn strictly_upper_triangular() {
        let mut gens = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                gens.push(QMatrix::unit(4, 4, i, j, int(1)));
            }
        }
        let v = common_annihilated_vector(&NilpotentAlgebra::new(4, gens).unwrap()).unwrap();
        assert!(parallel(&v.exact, &linalg::basis_vector(4, 0)));
        assert!(v.steps <= 4);
    }

    #[test]
    fn non_nilpotent_is_rejected() {
        assert!(NilpotentAlgebra::new(2, vec![QMatrix::identity(2)]).is_err());
    }

    #[test]
    fn root_vector_fixes_the_highest_null_line() {
        let g = o1k(3).unwrap();
        let m = g
            .realization()
            .unwrap()
            .real_element(&g.basis(g.index_of("U1").unwrap()))
            .unwrap();
        let alg = NilpotentAlgebra::new(4, vec![m])
            .unwrap()
            .with_form(SymmetricForm::new(lorentz_gram(4)).unwrap())
            .unwrap();
        let v = isotropic_fixed_vector(&alg).unwrap();
        assert!(parallel(&v.exact, &linalg::basis_vector(4, 0)));
        let zero = NilpotentAlgebra::new(4, vec![])
            .unwrap()
            .with_form(SymmetricForm::new(lorentz_gram(4)).unwrap())
            .unwrap();
        assert_eq!(isotropic_fixed_vector(&zero).unwrap().exact, linalg::basis_vector(4, 0));
    }

    #[test]
    fn umax_needs_no_conjugation() {
        let c = conjugate_into_umax(4, &umax_matrices(4).unwrap()).unwrap();
        assert!(c.in_umax);
        assert!(c.identity);
    }

    #[test]
    fn harness_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = engel_harness(4, 10, &mut rng).unwrap();
        assert!(r.pass(), "{r:?}");
    }

    #[test]
    fn rejects_non_nilpotent_parabolic_element() {
        let lay = O2nLayout::new(4).unwrap();
        let a = lay.matrix(&linalg::basis_vector(lay.dim(), lay.a()));
        assert!(conjugate_into_umax(4, &[a]).is_err());
    }
}
