//! `u_max(n) ≅ ℝ ⋉ heis^ℂ(2n−3)`.

use serde::Serialize;

use super::algebra::{LinearMap, Subspace};
use super::families::{heis_c, u_max};
use super::structure::{is_ideal, verify_isomorphism, Certify};
use crate::error::Result;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::{int, render, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct SemidirectReport {
    pub n: usize,
    pub dim: usize,
    pub ideal_dim: usize,
    pub is_ideal: bool,
    pub codimension: usize,
    /// `u_j ↦ x_j`, `v_j ↦ y_j`, `α ↦ scale·Z` is a Lie isomorphism onto `heis^ℂ(2n−3)`.
    pub heis_isomorphism: bool,
    pub center_scale: String,
    /// `ad(t)` on the ideal, transported to `heis^ℂ`, is `u + iv + αZ ↦ v`.
    pub derivation_matches: bool,
}

impl SemidirectReport {
    pub fn pass(&self) -> bool {
        self.is_ideal && self.codimension == 1 && self.heis_isomorphism && self.derivation_matches
    }
}

/// Scale of `Z` in the image of `α`: `[u_j, v_j] = −α` in the matrices while
/// `[x_j, y_j] = 2Z`, so `α ↦ −2Z`.
pub fn umax_center_scale() -> Rational {
    int(-2)
}

pub fn umax_semidirect(n: usize) -> Result<SemidirectReport> {
    let g = u_max(n)?;
    let d = g.dim();
    let m = n - 2;
    // t is basis element 0; the ideal is {t = 0}
    let ideal = Subspace::coordinate(d, 1..d);
    let h = heis_c(2 * n - 3)?;
    let scale = umax_center_scale();
    // heis basis x1, y1, …, Z; u_max ideal basis u1..um, v1..vm, α
    let mut phi = QMatrix::zeros(h.dim(), d - 1);
    for j in 0..m {
        phi.set(2 * j, j, int(1));
        phi.set(2 * j + 1, m + j, int(1));
    }
    phi.set(h.dim() - 1, d - 2, scale.clone());
    let sub = g.restrict(&ideal, "u_max ∩ {t=0}", g.labels()[1..].to_vec())?;
    let f = LinearMap::new(&sub, &h, phi.clone())?;
    let iso = verify_isomorphism(&f, Certify::HeisC)?;

    // ad(t) restricted to the ideal, in ideal coordinates
    let ad_t = g.ad(&g.basis(0));
    let mut restricted = QMatrix::zeros(d - 1, d - 1);
    for c in 1..d {
        for r in 0..d {
            let v = ad_t.get(r, c);
            if !num_traits::Zero::is_zero(v) {
                if r == 0 {
                    // leaves the ideal
                    restricted = QMatrix::zeros(0, 0);
                    break;
                }
                restricted.set(r - 1, c - 1, v.clone());
            }
        }
    }
    let mut expected = QMatrix::zeros(h.dim(), h.dim());
    for j in 0..m {
        // y_j ↦ x_j
        expected.set(2 * j, 2 * j + 1, int(1));
    }
    let derivation_matches = restricted.rows() == d - 1 && {
        let inv = crate::exactmath::linalg::inverse(&phi)?;
        phi.mul(&restricted).mul(&inv) == expected
    };
    Ok(SemidirectReport {
        n,
        dim: d,
        ideal_dim: ideal.dim(),
        is_ideal: is_ideal(&g, &ideal),
        codimension: d - ideal.dim(),
        heis_isomorphism: iso,
        center_scale: render(&scale),
        derivation_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semidirect_structure() {
        for n in 3..7 {
            let r = umax_semidirect(n).unwrap();
            assert!(r.pass(), "{r:?}");
            assert_eq!(r.dim, 2 * n - 2);
        }
    }
}
