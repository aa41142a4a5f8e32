//! Exact scalar algebras built by Cayley–Dickson doubling of the rationals.
//!
//! `Gaussian = CD(ℚ)`, `Quaternion = CD(Gaussian)`, `Octonion = CD(Quaternion)`.
//! The doubling product is `(a, b)(c, d) = (ac − d̄b, da + bc̄)` with conjugation
//! `(a, b)* = (a*, −b)`. Flattened coefficient order is the usual one:
//! `(1, i)`, `(1, i, j, k)`, `(e0, …, e7)` where the second half of a pair is the
//! span of the new unit.

use std::fmt;

use num_traits::{One, Zero};

use super::rational::{render, Rational};
use crate::error::{Error, Result};

/// A ring over ℚ with an involutive anti-automorphism and a rational norm.
///
/// Everything the matrix layer needs: additive group, product, conjugation,
/// and coefficient access in the fixed ℚ-basis.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    /// Number of rational coefficients.
    const COMPONENTS: usize;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;
    fn component(&self, i: usize) -> &Rational;
    fn from_components(c: &[Rational]) -> Self;

    /// `x · conj(x)`, which is always real.
    fn norm(&self) -> Rational {
        (0..Self::COMPONENTS)
            .map(|i| {
                let c = self.component(i);
                c * c
            })
            .fold(<Rational as Zero>::zero(), |a, b| a + b)
    }

    fn real_part(&self) -> Rational {
        self.component(0).clone()
    }

    /// The `i`-th basis unit of the algebra.
    fn unit(i: usize) -> Self {
        let mut c = vec![<Rational as Zero>::zero(); Self::COMPONENTS];
        c[i] = <Rational as One>::one();
        Self::from_components(&c)
    }

    fn components(&self) -> Vec<Rational> {
        (0..Self::COMPONENTS).map(|i| self.component(i).clone()).collect()
    }
}

impl Ring for Rational {
    const COMPONENTS: usize = 1;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn component(&self, i: usize) -> &Rational {
        assert_eq!(i, 0, "rational has a single component");
        self
    }
    fn from_components(c: &[Rational]) -> Self {
        c[0].clone()
    }
}

/// One Cayley–Dickson doubling step over `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyDickson<T> {
    pub re: T,
    pub im: T,
}

impl<T: Ring> CayleyDickson<T> {
    pub fn new(re: T, im: T) -> Self {
        Self { re, im }
    }
}

impl<T: Ring> Ring for CayleyDickson<T> {
    const COMPONENTS: usize = 2 * T::COMPONENTS;

    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
    fn one() -> Self {
        Self::new(T::one(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self::new(self.re.sub(&rhs.re), self.im.sub(&rhs.im))
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a, b)(c, d) = (ac − d̄b, da + bc̄)
        let (a, b) = (&self.re, &self.im);
        let (c, d) = (&rhs.re, &rhs.im);
        Self::new(a.mul(c).sub(&d.conj().mul(b)), d.mul(a).add(&b.mul(&c.conj())))
    }
    fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg())
    }
    fn conj(&self) -> Self {
        Self::new(self.re.conj(), self.im.neg())
    }
    fn scale(&self, r: &Rational) -> Self {
        Self::new(self.re.scale(r), self.im.scale(r))
    }
    fn from_rational(r: Rational) -> Self {
        Self::new(T::from_rational(r), T::zero())
    }
    fn component(&self, i: usize) -> &Rational {
        if i < T::COMPONENTS {
            self.re.component(i)
        } else {
            self.im.component(i - T::COMPONENTS)
        }
    }
    fn from_components(c: &[Rational]) -> Self {
        let h = T::COMPONENTS;
        Self::new(T::from_components(&c[..h]), T::from_components(&c[h..2 * h]))
    }
}

impl<T: Ring> fmt::Debug for CayleyDickson<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components().iter().map(render).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub type Gaussian = CayleyDickson<Rational>;
pub type Quaternion = CayleyDickson<Gaussian>;
pub type Octonion = CayleyDickson<Quaternion>;

/// Builds an element from integer coefficients in the flattened basis.
pub fn from_ints<T: Ring>(c: &[i64]) -> T {
    assert_eq!(c.len(), T::COMPONENTS);
    let c: Vec<Rational> = c.iter().map(|&x| super::rational::int(x)).collect();
    T::from_components(&c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Rational,
    Gaussian,
    Quaternion,
    Octonion,
}

impl ScalarKind {
    pub fn components(self) -> usize {
        match self {
            ScalarKind::Rational => 1,
            ScalarKind::Gaussian => 2,
            ScalarKind::Quaternion => 4,
            ScalarKind::Octonion => 8,
        }
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Gaussian => "gaussian",
            ScalarKind::Quaternion => "quaternion",
            ScalarKind::Octonion => "octonion",
        };
        f.write_str(s)
    }
}

/// A scalar of runtime-selected kind.
#[derive(Clone, PartialEq, Debug)]
pub enum Scalar {
    Rational(Rational),
    Gaussian(Gaussian),
    Quaternion(Quaternion),
    Octonion(Octonion),
}

macro_rules! each_kind {
    ($s:expr, $x:ident => $body:expr) => {
        match $s {
            Scalar::Rational($x) => $body,
            Scalar::Gaussian($x) => $body,
            Scalar::Quaternion($x) => $body,
            Scalar::Octonion($x) => $body,
        }
    };
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::Gaussian(_) => ScalarKind::Gaussian,
            Scalar::Quaternion(_) => ScalarKind::Quaternion,
            Scalar::Octonion(_) => ScalarKind::Octonion,
        }
    }

    pub fn from_coefficients(kind: ScalarKind, c: &[Rational]) -> Result<Self> {
        if c.len() != kind.components() {
            return Err(Error::Domain(format!(
                "{kind} scalar needs {} coefficients, got {}",
                kind.components(),
                c.len()
            )));
        }
        Ok(match kind {
            ScalarKind::Rational => Scalar::Rational(c[0].clone()),
            ScalarKind::Gaussian => Scalar::Gaussian(Gaussian::from_components(c)),
            ScalarKind::Quaternion => Scalar::Quaternion(Quaternion::from_components(c)),
            ScalarKind::Octonion => Scalar::Octonion(Octonion::from_components(c)),
        })
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        each_kind!(self, x => x.components())
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Rational(x) => Scalar::Rational(Ring::conj(x)),
            Scalar::Gaussian(x) => Scalar::Gaussian(x.conj()),
            Scalar::Quaternion(x) => Scalar::Quaternion(x.conj()),
            Scalar::Octonion(x) => Scalar::Octonion(x.conj()),
        }
    }

    pub fn norm(&self) -> Rational {
        each_kind!(self, x => x.norm())
    }

    pub fn is_zero(&self) -> bool {
        each_kind!(self, x => Ring::is_zero(x))
    }

    /// Product in the common algebra of `self` and `rhs`.
    pub fn algebra_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::Gaussian(a.mul(b)),
            (Scalar::Quaternion(a), Scalar::Quaternion(b)) => Scalar::Quaternion(a.mul(b)),
            (Scalar::Octonion(a), Scalar::Octonion(b)) => Scalar::Octonion(a.mul(b)),
            _ => {
                return Err(Error::KindMismatch {
                    left: self.kind(),
                    right: rhs.kind(),
                })
            }
        })
    }
}
