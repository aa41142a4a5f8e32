//! Structural queries: derived algebra, center, central series, closures and
//! morphism certificates.

use num_traits::Zero;
use serde::Serialize;

use super::algebra::{LieAlgebra, LinearMap, Subspace};
use crate::error::{Error, Result};
use crate::exactmath::linalg;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::Rational;

/// Span of `[a, b]` for `a ∈ left`, `b ∈ right`.
pub fn bracket_span(g: &LieAlgebra, left: &Subspace, right: &Subspace) -> Subspace {
    let mut out = Vec::new();
    for a in left.basis() {
        for b in right.basis() {
            let v = g.bracket(a, b);
            if !linalg::is_zero_vec(&v) {
                out.push(v);
            }
        }
    }
    Subspace::span(g.dim(), &out)
}

pub fn derived(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let b = g.basis_bracket(i, j);
            if !b.is_empty() {
                out.push(super::algebra::sparse_to_dense(b, n));
            }
        }
    }
    Subspace::span(n, &out)
}

/// Elements of `sub` commuting with all of `g`.
pub fn centralizer_in(g: &LieAlgebra, sub: &Subspace) -> Subspace {
    let n = g.dim();
    let d = sub.dim();
    if d == 0 {
        return Subspace::zero(n);
    }
    // row (j, k): Σ_a x_a [s_a, e_j]_k = 0
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let images: Vec<QMatrix> = sub.basis().iter().map(|s| g.ad(s)).collect();
    for j in 0..n {
        for k in 0..n {
            let row: Vec<Rational> = images.iter().map(|m| m.get(k, j).clone()).collect();
            if !linalg::is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return sub.clone();
    }
    let ker = linalg::kernel(&QMatrix::from_rows(rows));
    let vecs: Vec<Vec<Rational>> = ker.columns().iter().map(|c| sub.element(c)).collect();
    Subspace::span(n, &vecs)
}

pub fn center(g: &LieAlgebra) -> Subspace {
    centralizer_in(g, &Subspace::whole(g.dim()))
}

/// `g = g¹ ⊇ g² = [g, g] ⊇ …`, stopping at zero or at the first repeat.
pub fn lower_central_series(g: &LieAlgebra) -> Vec<Subspace> {
    let whole = Subspace::whole(g.dim());
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().unwrap();
        let next = bracket_span(g, &whole, last);
        let stop = next.is_zero() || next.dim() == last.dim();
        series.push(next);
        if stop {
            return series;
        }
    }
}

/// Smallest `s` with `g^{s+1} = 0`, or `None` when the series stabilizes first.
pub fn nilpotency_degree(series: &[Subspace]) -> Option<usize> {
    series.iter().position(Subspace::is_zero)
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub derived: Subspace,
    pub center: Subspace,
    pub lower_central: Vec<Subspace>,
    pub nilpotency_degree: Option<usize>,
}

impl StructureReport {
    pub fn lower_central_dims(&self) -> Vec<usize> {
        self.lower_central.iter().map(Subspace::dim).collect()
    }
}

pub fn structure_report(g: &LieAlgebra) -> StructureReport {
    let lower_central = lower_central_series(g);
    StructureReport {
        derived: derived(g),
        center: center(g),
        nilpotency_degree: nilpotency_degree(&lower_central),
        lower_central,
    }
}

pub fn is_subalgebra(g: &LieAlgebra, s: &Subspace) -> bool {
    s.contains_space(&bracket_span(g, s, s))
}

pub fn is_ideal(g: &LieAlgebra, s: &Subspace) -> bool {
    s.contains_space(&bracket_span(g, &Subspace::whole(g.dim()), s))
}

#[derive(Clone, Debug)]
pub struct Closure {
    pub space: Subspace,
    /// Dimension after each round, starting with the seed.
    pub dims: Vec<usize>,
}

/// Smallest subalgebra containing `seed`. Each round adds all brackets of the
/// current basis; the dimension strictly grows until the fixpoint.
pub fn subalgebra_closure(g: &LieAlgebra, seed: &Subspace) -> Closure {
    let mut cur = seed.clone();
    let mut dims = vec![cur.dim()];
    loop {
        let next = cur.sum(&bracket_span(g, &cur, &cur));
        if next.dim() == cur.dim() {
            return Closure { space: cur, dims };
        }
        dims.push(next.dim());
        cur = next;
    }
}

/// Smallest subalgebra containing `seed` that is also stable under `ad(acting)`.
pub fn invariant_closure(g: &LieAlgebra, seed: &Subspace, acting: &Subspace) -> Closure {
    let mut cur = seed.clone();
    let mut dims = vec![cur.dim()];
    loop {
        let next = cur
            .sum(&bracket_span(g, &cur, &cur))
            .sum(&bracket_span(g, acting, &cur));
        if next.dim() == cur.dim() {
            return Closure { space: cur, dims };
        }
        dims.push(next.dim());
        cur = next;
    }
}

/// Basis pairs `(i, j)`, `i < j`, with `f[e_i, e_j] ≠ [f e_i, f e_j]`.
pub fn morphism_defects(f: &LinearMap<'_>) -> Vec<(usize, usize)> {
    let (src, tgt) = (f.source, f.target);
    let images: Vec<Vec<Rational>> = (0..src.dim()).map(|i| f.matrix.column(i)).collect();
    let mut bad = Vec::new();
    for i in 0..src.dim() {
        for j in i + 1..src.dim() {
            let lhs = f.apply(&src.bracket(&src.basis(i), &src.basis(j)));
            let rhs = tgt.bracket(&images[i], &images[j]);
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    bad
}

/// Certificate requested from [`verify_isomorphism`] on top of bijectivity
/// and the morphism property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certify {
    /// Target recognized as a classical Heisenberg algebra (1-dim center).
    HeisC,
    /// Target recognized as a quaternionic Heisenberg algebra (3-dim center).
    HeisH,
    Abstract,
}

pub fn verify_isomorphism(f: &LinearMap<'_>, certify: Certify) -> Result<bool> {
    let (s, t) = (f.source.dim(), f.target.dim());
    if s != t {
        return Err(Error::Domain(format!("isomorphism between dimensions {s} and {t}")));
    }
    if f.rank() != s || !morphism_defects(f).is_empty() {
        return Ok(false);
    }
    Ok(match certify {
        Certify::Abstract => true,
        Certify::HeisC => heisenberg_profile(f.target).is_heisenberg(1),
        Certify::HeisH => heisenberg_profile(f.target).is_heisenberg(3),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeisenbergProfile {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_equals_center: bool,
    pub nilpotency_degree: Option<usize>,
    /// The alternating form induced on `g / z` has trivial radical.
    pub form_nondegenerate: bool,
}

impl HeisenbergProfile {
    pub fn is_heisenberg(&self, center_dim: usize) -> bool {
        self.center_dim == center_dim
            && self.derived_equals_center
            && self.nilpotency_degree == Some(2)
            && self.form_nondegenerate
    }
}

pub fn heisenberg_profile(g: &LieAlgebra) -> HeisenbergProfile {
    let r = structure_report(g);
    let n = g.dim();
    // complement of the center spanned by standard vectors
    let mut comp: Vec<Vec<Rational>> = Vec::new();
    let mut acc = r.center.clone();
    for i in 0..n {
        let e = g.basis(i);
        if !acc.contains(&e) {
            acc = acc.sum(&Subspace::span(n, std::slice::from_ref(&e)));
            comp.push(e);
        }
    }
    // a complement vector x lies in the radical iff [x, e_b] = 0 for all b
    let mut cols = Vec::new();
    for x in &comp {
        let col: Vec<Rational> = (0..n).flat_map(|b| g.bracket(x, &g.basis(b))).collect();
        cols.push(col);
    }
    let form_nondegenerate = cols.is_empty() || linalg::rank(&QMatrix::from_columns(n * n, &cols)) == comp.len();
    HeisenbergProfile {
        dim: n,
        center_dim: r.center.dim(),
        derived_equals_center: r.derived == r.center,
        nilpotency_degree: r.nilpotency_degree,
        form_nondegenerate,
    }
}

/// Plain-text structure constants: `dim N`, a `labels` line, then one
/// `i j k p/q` line per nonzero `c_ij^k`.
pub fn dump_structure_constants(g: &LieAlgebra) -> String {
    let n = g.dim();
    let mut out = format!("dim {n}\nlabels {}\n", g.labels().join(" "));
    for i in 0..n {
        for j in 0..n {
            for (k, c) in g.basis_bracket(i, j) {
                out.push_str(&format!("{i} {j} {k} {}\n", crate::exactmath::rational::render(c)));
            }
        }
    }
    out
}

/// Inverse of [`dump_structure_constants`]; antisymmetry is required of the input.
pub fn parse_structure_constants(name: &str, text: &str) -> Result<LieAlgebra> {
    let bad = |m: &str| Error::Domain(format!("structure-constant dump: {m}"));
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .and_then(|l| l.strip_prefix("dim "))
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| bad("missing `dim N` header"))?;
    let labels: Vec<String> = lines
        .next()
        .and_then(|l| l.strip_prefix("labels"))
        .map(|s| s.split_whitespace().map(String::from).collect())
        .ok_or_else(|| bad("missing labels line"))?;
    if labels.len() != n {
        return Err(bad("label count differs from dim"));
    }
    let mut table = vec![vec![Rational::zero(); n]; n * n];
    for line in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 4 {
            return Err(bad(&format!("malformed line `{line}`")));
        }
        let idx: Vec<usize> = f[..3]
            .iter()
            .map(|s| s.parse().ok().filter(|&v| v < n))
            .collect::<Option<_>>()
            .ok_or_else(|| bad(&format!("bad index in `{line}`")))?;
        let c = crate::exactmath::rational::parse(f[3]).ok_or_else(|| bad(&format!("bad value in `{line}`")))?;
        table[idx[0] * n + idx[1]][idx[2]] = c;
    }
    let mut brackets = Vec::new();
    for i in 0..n {
        if !linalg::is_zero_vec(&table[i * n + i]) {
            return Err(Error::Contract(format!("[e{i}, e{i}] must vanish")));
        }
        for j in i + 1..n {
            let neg: Vec<Rational> = table[j * n + i].iter().map(|x| -x).collect();
            if table[i * n + j] != neg {
                return Err(Error::Contract(format!("c[{i}][{j}] is not antisymmetric")));
            }
            brackets.push(((i, j), table[i * n + j].clone()));
        }
    }
    LieAlgebra::from_brackets(name, labels, brackets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::families::*;

    #[test]
    fn heisenberg_structure() {
        for k in [3, 5, 7] {
            let r = structure_report(&heis_c(k).unwrap());
            assert_eq!(r.derived, r.center);
            assert_eq!(r.center.dim(), 1);
            assert_eq!(r.nilpotency_degree, Some(2));
        }
        for k in [7, 11] {
            let h = heis_h(k).unwrap();
            let r = structure_report(&h);
            assert_eq!(r.derived, r.center);
            assert_eq!(r.center.dim(), 3);
            assert_eq!(r.nilpotency_degree, Some(2));
            assert!(heisenberg_profile(&h).is_heisenberg(3));
        }
    }

    #[test]
    fn simple_algebra_is_perfect_and_centerless() {
        let g = o1k(3).unwrap();
        let r = structure_report(&g);
        assert_eq!(r.derived.dim(), 6);
        assert!(r.center.is_zero());
        assert_eq!(r.nilpotency_degree, None);
    }

    #[test]
    fn closure_examples() {
        let g = o1k(4).unwrap();
        let vs: Vec<usize> = (0..g.dim()).filter(|&i| g.labels()[i].starts_with('V')).collect();
        let seed = Subspace::coordinate(g.dim(), vs.clone());
        assert_eq!(seed.dim(), 3);
        // h_-α is abelian, so it is its own closure
        assert_eq!(subalgebra_closure(&g, &seed).space, seed);
        let us: Vec<usize> = (0..g.dim()).filter(|&i| g.labels()[i].starts_with('U')).collect();
        let h_alpha = Subspace::coordinate(g.dim(), us);
        let line = Subspace::coordinate(g.dim(), [vs[0]]);
        assert_eq!(invariant_closure(&g, &line, &h_alpha).space.dim(), 10);
        assert_eq!(subalgebra_closure(&g, &seed.sum(&h_alpha)).space.dim(), 10);

        let h = heis_c(5).unwrap();
        let z = center(&h);
        assert_eq!(subalgebra_closure(&h, &z).space, z);
    }

    #[test]
    fn zero_map_is_not_an_isomorphism() {
        let h = heis_h(7).unwrap();
        assert!(!verify_isomorphism(&LinearMap::zero(&h, &h), Certify::HeisH).unwrap());
        assert!(verify_isomorphism(&LinearMap::identity(&h), Certify::HeisH).unwrap());
        let c = heis_c(5).unwrap();
        assert!(matches!(
            verify_isomorphism(&LinearMap::zero(&h, &c), Certify::Abstract),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dump_round_trip() {
        let g = su1k(2).unwrap();
        let text = dump_structure_constants(&g);
        let back = parse_structure_constants("copy", &text).unwrap();
        assert_eq!(dump_structure_constants(&back), text);
    }
}
