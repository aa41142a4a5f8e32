//! Finite root systems, exhaustive embedding search, and the faithful
//! representation dimension arithmetic for pairs of orthogonal algebras.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::linalg;
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::{int, render, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RootType {
    A(usize),
    B(usize),
    D(usize),
    BC1,
    Sum(Vec<RootType>),
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootType::A(r) => write!(f, "A{r}"),
            RootType::B(r) => write!(f, "B{r}"),
            RootType::D(r) => write!(f, "D{r}"),
            RootType::BC1 => write!(f, "BC1"),
            RootType::Sum(parts) => {
                let s: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", s.join("+"))
            }
        }
    }
}

impl RootType {
    /// Parses `A3`, `B2`, `D4`, `BC1` and `+`-separated sums.
    pub fn parse(tag: &str) -> Result<Self> {
        let parts: Vec<&str> = tag.split('+').map(str::trim).collect();
        if parts.len() > 1 {
            return parts
                .into_iter()
                .map(Self::parse)
                .collect::<Result<_>>()
                .map(RootType::Sum);
        }
        let t = parts[0];
        let bad = || Error::Domain(format!("unsupported root system tag {tag:?}"));
        if t.eq_ignore_ascii_case("BC1") {
            return Ok(RootType::BC1);
        }
        let (head, rank) = t.split_at(1.min(t.len()));
        let r: usize = rank.parse().map_err(|_| bad())?;
        match (head, r) {
            ("A", r) if r >= 1 => Ok(RootType::A(r)),
            ("B", r) if r >= 2 => Ok(RootType::B(r)),
            ("D", r) if r >= 3 => Ok(RootType::D(r)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSystem {
    pub tag: RootType,
    pub ambient_dim: usize,
    pub rank: usize,
    #[serde(skip)]
    pub roots: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.roots.iter().any(|r| r == v)
    }

    pub fn closed_under_negation(&self) -> bool {
        self.roots
            .iter()
            .all(|r| self.contains(&linalg::vec_scale(r, &int(-1))))
    }
}

fn e(dim: usize, terms: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![int(0); dim];
    for &(i, c) in terms {
        v[i] += int(c);
    }
    v
}

fn pm_pairs(dim: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(e(dim, &[(i, a), (j, b)]));
            }
        }
    }
    out
}

fn raw_roots(tag: &RootType) -> (usize, Vec<Vec<Rational>>) {
    match tag {
        // e_i − e_j in the sum-zero hyperplane of ℚ^{r+1}
        RootType::A(r) => {
            let d = r + 1;
            let mut out = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        out.push(e(d, &[(i, 1), (j, -1)]));
                    }
                }
            }
            (d, out)
        }
        RootType::B(r) => {
            let mut out = pm_pairs(*r);
            for i in 0..*r {
                out.push(e(*r, &[(i, 1)]));
                out.push(e(*r, &[(i, -1)]));
            }
            (*r, out)
        }
        RootType::D(r) => (*r, pm_pairs(*r)),
        RootType::BC1 => (1, [1, -1, 2, -2].iter().map(|&c| vec![int(c)]).collect()),
        RootType::Sum(parts) => {
            let pieces: Vec<(usize, Vec<Vec<Rational>>)> = parts.iter().map(raw_roots).collect();
            let total: usize = pieces.iter().map(|p| p.0).sum();
            let mut out = Vec::new();
            let mut offset = 0;
            for (d, roots) in pieces {
                for r in roots {
                    let mut v = vec![int(0); total];
                    v[offset..offset + d].clone_from_slice(&r);
                    out.push(v);
                }
                offset += d;
            }
            (total, out)
        }
    }
}

pub fn make_root_system(tag: &str) -> Result<RootSystem> {
    let tag = RootType::parse(tag)?;
    let (ambient_dim, roots) = raw_roots(&tag);
    let rank = linalg::rank(&QMatrix::from_columns(ambient_dim, &roots));
    Ok(RootSystem {
        tag,
        ambient_dim,
        rank,
        roots,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Containment {
    /// An injective linear map sending every root to a root.
    Set,
    /// Additionally `φ(a) + φ(b) ∈ R₂` forces `a + b ∈ R₁`: the image is a
    /// closed subsystem, as for equal-rank complex semisimple subalgebras
    /// whose root spaces are those of the ambient algebra.
    Closed,
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingSearch {
    pub source: String,
    pub target: String,
    pub containment: Containment,
    pub embeds: bool,
    /// Images of the chosen base of the source, rendered.
    pub base: Vec<Vec<String>>,
    pub witness: Option<Vec<Vec<String>>>,
    /// `|R₂|^{rank R₁}`.
    pub predicted_tuples: u64,
    /// Complete base-image tuples reached and checked.
    pub examined_tuples: u64,
    /// Complete tuples skipped by pruning partial assignments.
    pub pruned_tuples: u64,
}

impl EmbeddingSearch {
    /// Examined plus pruned accounts for every tuple (for a finished,
    /// unsuccessful search).
    pub fn exhaustive(&self) -> bool {
        self.examined_tuples + self.pruned_tuples == self.predicted_tuples
    }
}

struct Search<'a> {
    r2: &'a RootSystem,
    mode: Containment,
    /// Every source root in base coordinates, with the largest base index it uses.
    coords: Vec<(Vec<Rational>, usize)>,
    /// Pairs `(a, b)` of source roots whose sum is not a source root, keyed
    /// by the largest base index involved.
    non_sums: Vec<(usize, usize, usize)>,
    rank: usize,
    examined: u64,
    pruned: u64,
    found: Option<Vec<Vec<Rational>>>,
}

impl Search<'_> {
    fn image(&self, c: &[Rational], imgs: &[Vec<Rational>]) -> Vec<Rational> {
        let mut v = vec![int(0); self.r2.ambient_dim];
        for (k, x) in c.iter().enumerate() {
            if !num_traits::Zero::is_zero(x) {
                v = linalg::vec_add(&v, &linalg::vec_scale(&imgs[k], x));
            }
        }
        v
    }

    /// Checks the constraints that become decidable once base index `level`
    /// has an image.
    fn consistent(&self, imgs: &[Vec<Rational>], level: usize) -> bool {
        if linalg::rank(&QMatrix::from_columns(self.r2.ambient_dim, imgs)) != imgs.len() {
            return false;
        }
        let images_ok = self
            .coords
            .iter()
            .filter(|(_, top)| *top == level)
            .all(|(c, _)| self.r2.contains(&self.image(c, imgs)));
        if !images_ok || self.mode == Containment::Set {
            return images_ok;
        }
        self.non_sums
            .iter()
            .filter(|(_, _, top)| *top == level)
            .all(|&(a, b, _)| {
                let s = linalg::vec_add(
                    &self.image(&self.coords[a].0, imgs),
                    &self.image(&self.coords[b].0, imgs),
                );
                !self.r2.contains(&s)
            })
    }

    fn run(&mut self, imgs: &mut Vec<Vec<Rational>>) {
        if self.found.is_some() {
            return;
        }
        let level = imgs.len();
        let remaining = (self.rank - level - 1) as u32;
        for r in self.r2.roots.clone() {
            imgs.push(r);
            let ok = self.consistent(imgs, level);
            if level + 1 == self.rank {
                self.examined += 1;
                if ok {
                    self.found = Some(imgs.clone());
                }
            } else if ok {
                self.run(imgs);
            } else {
                self.pruned += (self.r2.len() as u64).pow(remaining);
            }
            imgs.pop();
            if self.found.is_some() {
                return;
            }
        }
    }
}

/// Exhaustive search over images of a base of `r1` among the roots of `r2`.
pub fn embeds(r1: &RootSystem, r2: &RootSystem, mode: Containment) -> EmbeddingSearch {
    let base_idx = linalg::independent_columns(&r1.roots, r1.ambient_dim);
    let base: Vec<Vec<Rational>> = base_idx.iter().map(|&i| r1.roots[i].clone()).collect();
    let bm = QMatrix::from_columns(r1.ambient_dim, &base);
    let coords: Vec<(Vec<Rational>, usize)> = r1
        .roots
        .iter()
        .map(|r| {
            let c = linalg::solve(&bm, r).expect("roots lie in the span of the base");
            let top = c.iter().rposition(|x| !num_traits::Zero::is_zero(x)).unwrap_or(0);
            (c, top)
        })
        .collect();
    let mut non_sums = Vec::new();
    for a in 0..coords.len() {
        for b in a + 1..coords.len() {
            let s = linalg::vec_add(&r1.roots[a], &r1.roots[b]);
            if !linalg::is_zero_vec(&s) && !r1.contains(&s) {
                non_sums.push((a, b, coords[a].1.max(coords[b].1)));
            }
        }
    }
    let predicted = (r2.len() as u64).pow(r1.rank as u32);
    let render_all =
        |vs: &[Vec<Rational>]| -> Vec<Vec<String>> { vs.iter().map(|v| v.iter().map(render).collect()).collect() };
    if r1.rank > r2.rank {
        return EmbeddingSearch {
            source: r1.tag.to_string(),
            target: r2.tag.to_string(),
            containment: mode,
            embeds: false,
            base: render_all(&base),
            witness: None,
            predicted_tuples: predicted,
            examined_tuples: 0,
            pruned_tuples: predicted,
        };
    }
    let mut s = Search {
        r2,
        mode,
        coords,
        non_sums,
        rank: r1.rank,
        examined: 0,
        pruned: 0,
        found: None,
    };
    s.run(&mut Vec::new());
    EmbeddingSearch {
        source: r1.tag.to_string(),
        target: r2.tag.to_string(),
        containment: mode,
        embeds: s.found.is_some(),
        base: render_all(&base),
        witness: s.found.as_deref().map(render_all),
        predicted_tuples: predicted,
        examined_tuples: s.examined,
        pruned_tuples: s.pruned,
    }
}

/// Smallest dimension of a faithful irreducible representation of `o(n, ℂ)`.
pub fn min_faithful_dim(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::Domain(format!("d_n needs n >= 3, got {n}"))),
        3 => Ok(2),
        4..=6 => Ok(4),
        _ => Ok(n),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanException {
    pub n: usize,
    pub m: usize,
    pub product: usize,
    pub note: String,
}

/// Pairs `3 ≤ m ≤ n ≤ bound` with `d_n d_m < n + m`, as `(n, m)`.
pub fn dim_inequality_scan(bound: usize) -> Result<Vec<(usize, usize)>> {
    if bound < 3 {
        return Err(Error::Domain(format!("scan bound must be >= 3, got {bound}")));
    }
    let mut out = Vec::new();
    for n in 3..=bound {
        for m in 3..=n {
            if min_faithful_dim(n)? * min_faithful_dim(m)? < n + m {
                out.push((n, m));
            }
        }
    }
    Ok(out)
}

/// The scan with each exception tied to how the rank-two argument disposes of
/// it.
pub fn annotated_scan(bound: usize) -> Result<Vec<ScanException>> {
    dim_inequality_scan(bound)?
        .into_iter()
        .map(|(n, m)| {
            let note = match (n, m) {
                (3, 3) => {
                    "o(3,C)+o(3,C) is the complexification of o(1,2)+o(1,2) = o(2,2), excluded from the bound".into()
                }
                (6, 3) => {
                    let r = embeds(
                        &make_root_system("A3+A1")?,
                        &make_root_system("D4")?,
                        Containment::Closed,
                    );
                    format!(
                        "o(6,C)+o(3,C) into o(8,C) would put A3+A1 inside D4 as a closed subsystem: embeds = {}",
                        r.embeds
                    )
                }
                _ => "unexplained exception".into(),
            };
            Ok(ScanException {
                n,
                m,
                product: min_faithful_dim(n)? * min_faithful_dim(m)?,
                note,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        make_root_system(t).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(rs("B2").len(), 8);
        assert_eq!(rs("D4").len(), 24);
        assert_eq!(rs("BC1").len(), 4);
        assert_eq!(rs("A3").rank, 3);
        assert_eq!(rs("A3+A1").rank, 4);
        assert!(rs("A3+A1").closed_under_negation());
        assert!(make_root_system("E8").is_err());
        assert!(make_root_system("B1").is_err());
    }

    #[test]
    fn b2_containments() {
        let b2 = rs("B2");
        assert!(embeds(&rs("A1+A1"), &b2, Containment::Set).embeds);
        for t in ["A1+BC1", "BC1+BC1"] {
            let r = embeds(&rs(t), &b2, Containment::Set);
            assert!(!r.embeds);
            assert!(r.exhaustive());
        }
    }

    #[test]
    fn d4_needs_closedness() {
        let (s, d4) = (rs("A3+A1"), rs("D4"));
        let closed = embeds(&s, &d4, Containment::Closed);
        assert!(!closed.embeds);
        assert!(closed.exhaustive());
        assert!(embeds(&s, &d4, Containment::Set).embeds);
    }

    #[test]
    fn faithful_dims_and_scan() {
        assert_eq!(min_faithful_dim(3).unwrap(), 2);
        assert_eq!(min_faithful_dim(6).unwrap(), 4);
        assert_eq!(min_faithful_dim(9).unwrap(), 9);
        assert!(min_faithful_dim(2).is_err());
        assert_eq!(dim_inequality_scan(10).unwrap(), vec![(3, 3), (6, 3)]);
        assert_eq!(dim_inequality_scan(3).unwrap(), vec![(3, 3)]);
    }
}
