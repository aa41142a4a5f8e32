//! Univariate rational polynomials: characteristic polynomials, evaluation at a
//! matrix, and rational roots. Coefficients are stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::QMatrix;
use super::rational::{integerize, Rational};

/// Characteristic polynomial `det(tI − M)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(m: &QMatrix) -> Vec<Rational> {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let id = QMatrix::identity(n);
    let mut mk = QMatrix::zeros(n, n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&id.scale(&coeffs[n - k + 1]));
        let c = -(m.mul(&mk).trace()) / Rational::from_integer(BigInt::from(k));
        coeffs[n - k] = c;
    }
    coeffs
}

/// `p(M)` by Horner's rule.
pub fn eval_at_matrix(p: &[Rational], m: &QMatrix) -> QMatrix {
    let n = m.rows();
    let mut acc = QMatrix::zeros(n, n);
    for c in p.iter().rev() {
        acc = acc.mul(m).add(&QMatrix::identity(n).scale(c));
    }
    acc
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Divides `p` by `(t − r)`, assuming `r` is a root.
pub fn deflate(p: &[Rational], r: &Rational) -> Vec<Rational> {
    let d = degree(p).expect("deflating the zero polynomial");
    let mut q = vec![Rational::zero(); d];
    let mut carry = Rational::zero();
    for i in (1..=d).rev() {
        carry = &p[i] + &carry * r;
        q[i - 1] = carry.clone();
    }
    q
}

/// Divisors bound above which rational-root enumeration is skipped.
const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

fn positive_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// All distinct rational roots, by the rational-root theorem. `None` when the
/// coefficients are too large to enumerate candidates.
pub fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let Some(mut d) = degree(p) else {
        return Some(Vec::new());
    };
    let mut p: Vec<Rational> = p[..=d].to_vec();
    let mut roots = Vec::new();
    // strip factors of t
    if p[0].is_zero() {
        roots.push(Rational::zero());
        while d > 0 && p[0].is_zero() {
            p.remove(0);
            d -= 1;
        }
    }
    if d == 0 {
        return Some(roots);
    }
    let ints = integerize(&p);
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
    let num = positive_divisors(&ints[0])?;
    let den = positive_divisors(&ints[d])?;
    for a in &num {
        for b in &den {
            if a.gcd(b) != 1 {
                continue;
            }
            for s in [1i64, -1] {
                let r = Rational::new(BigInt::from(*a) * s, BigInt::from(*b));
                if eval(&p, &r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::matrix::qmatrix;
    use crate::exactmath::rational::{frac, int};

    #[test]
    fn char_poly_of_companion_like_matrix() {
        // eigenvalues 1, 2, 3 → t³ − 6t² + 11t − 6
        let m = qmatrix(&[&[1, 1, 0], &[0, 2, 1], &[0, 0, 3]]);
        assert_eq!(char_poly(&m), vec![int(-6), int(11), int(-6), int(1)]);
        assert!(eval_at_matrix(&char_poly(&m), &m).is_zero());
    }

    #[test]
    fn rational_roots_found_exactly() {
        // (2t − 1)(t + 3) t = 2t³ + 5t² − 3t
        let p = vec![int(0), int(-3), int(5), int(2)];
        assert_eq!(rational_roots(&p), Some(vec![int(-3), int(0), frac(1, 2)]));
        // t² + 1 has none
        assert_eq!(rational_roots(&[int(1), int(0), int(1)]), Some(vec![]));
        assert_eq!(
            deflate(&[int(-6), int(11), int(-6), int(1)], &int(1)),
            vec![int(6), int(-5), int(1)]
        );
    }
}
