//! Explicit Heisenberg subalgebras: `h_α ⊕ h_2α` of `su(1,k)` and `sp(1,k)`,
//! and the quaternionic half of the octonionic nilradical.

use serde::Serialize;

use super::algebra::{LieAlgebra, LinearMap, Subspace};
use super::families::{f4_nilradical, heis_c, heis_h, sp1k, su1k};
use super::structure::{is_subalgebra, verify_isomorphism, Certify};
use crate::error::Result;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::{int, render};

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingCertificate {
    pub ambient: String,
    pub target: String,
    /// Ambient basis labels of the embedded subspace, in source order.
    pub source_labels: Vec<String>,
    pub closed_under_bracket: bool,
    pub isomorphism: bool,
    /// Images of the source basis, rows indexed by source elements.
    pub matrix: Vec<Vec<String>>,
    pub notes: Vec<String>,
}

fn certificate(
    ambient: &LieAlgebra,
    indices: &[usize],
    target: &LieAlgebra,
    matrix: QMatrix,
    certify: Certify,
    notes: Vec<String>,
) -> Result<EmbeddingCertificate> {
    let sub = Subspace::coordinate(ambient.dim(), indices.iter().copied());
    let closed = is_subalgebra(ambient, &sub);
    let labels: Vec<String> = indices.iter().map(|&i| ambient.labels()[i].clone()).collect();
    let mut iso = false;
    if closed {
        let s = ambient.restrict(&sub, format!("{} sub", ambient.name()), labels.clone())?;
        let f = LinearMap::new(&s, target, matrix.clone())?;
        iso = verify_isomorphism(&f, certify)?;
    }
    let rows = (0..matrix.cols())
        .map(|j| matrix.column(j).iter().map(render).collect())
        .collect();
    Ok(EmbeddingCertificate {
        ambient: ambient.name().to_string(),
        target: target.name().to_string(),
        source_labels: labels,
        closed_under_bracket: closed,
        isomorphism: iso,
        matrix: rows,
        notes,
    })
}

fn positive_root_indices(g: &LieAlgebra) -> Vec<usize> {
    (0..g.dim())
        .filter(|&i| {
            let l = &g.labels()[i];
            l.starts_with('U') || l.starts_with('X')
        })
        .collect()
}

/// `h_α ⊕ h_2α ⊂ su(1,n−1)` onto `heis^ℂ(2n−3)`; the coordinate identity.
pub fn su_heisenberg(n: usize) -> Result<EmbeddingCertificate> {
    let g = su1k(n - 1)?;
    let idx = positive_root_indices(&g);
    let h = heis_c(2 * n - 3)?;
    certificate(&g, &idx, &h, QMatrix::identity(idx.len()), Certify::HeisC, Vec::new())
}

/// `h_α ⊕ h_2α ⊂ sp(1,n−1)` onto `heis^ℍ(4n−5)`. `h_α` maps by coordinates;
/// the matrix bracket of `h_α` is `−ω_H`, so `h_2α` maps with a sign flip.
pub fn sp_heisenberg(n: usize) -> Result<EmbeddingCertificate> {
    let g = sp1k(n - 1)?;
    let idx = positive_root_indices(&g);
    let h = heis_h(4 * n - 5)?;
    let d = idx.len();
    let mut m = QMatrix::identity(d);
    for i in d - 3..d {
        m.set(i, i, int(-1));
    }
    certificate(
        &g,
        &idx,
        &h,
        m,
        Certify::HeisH,
        vec!["center identified by X_x -> -Z_x (matrix bracket of h_alpha is -omega_H)".into()],
    )
}

/// `ℍ ⊕ Im ℍ` inside `𝕆 ⊕ Im 𝕆` onto `heis^ℍ(7)`: `e_a ↦ q_a`, `f_x ↦ Z_x`.
pub fn f4_quaternionic_heisenberg() -> Result<EmbeddingCertificate> {
    let g = f4_nilradical()?;
    let idx: Vec<usize> = vec![0, 1, 2, 3, 8, 9, 10];
    let h = heis_h(7)?;
    certificate(&g, &idx, &h, QMatrix::identity(7), Certify::HeisH, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificates_verify() {
        for n in 3..6 {
            let c = su_heisenberg(n).unwrap();
            assert!(c.closed_under_bracket && c.isomorphism, "su n={n}");
            let c = sp_heisenberg(n).unwrap();
            assert!(c.closed_under_bracket && c.isomorphism, "sp n={n}");
        }
        let c = f4_quaternionic_heisenberg().unwrap();
        assert!(c.closed_under_bracket && c.isomorphism);
    }
}
