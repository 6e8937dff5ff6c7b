//! Exact scalar rings and linear algebra over them.

pub mod complex;
pub mod generic_rank;
pub mod matrix;
pub mod poly;
pub mod quadext;
pub mod ratfunc;
pub mod rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Result;

pub use complex::{Complex, Gauss};
pub use generic_rank::{rank_generic, rank_pencil, DEFAULT_SEED, DEFAULT_TRIALS};
pub use matrix::{Matrix, Subspace};
pub use poly::{Monomial, Poly};
pub use quadext::QuadExt;
pub use ratfunc::RatFunc;
pub use rational::Rational;

/// Square-free radicand pair `(p, q)` of a biquadratic field; `q = 1` means `Q(sqrt p)`.
pub type Radicands = Option<(i64, i64)>;

/// A commutative ring element with exact arithmetic.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rational::int(n))
    }

    /// Canonical text form, used verbatim in reports.
    fn render(&self) -> String;

    /// Extension tag; elements with different tags cannot be combined.
    fn ring_tag(&self) -> Radicands {
        None
    }

    /// True when the rendering needs parentheses inside a product.
    fn is_compound(&self) -> bool {
        let s = self.render();
        s[1..].contains(['+', '-', ' '])
    }
}

pub trait Field: Scalar {
    fn try_inv(&self) -> Option<Self>;

    fn checked_div(&self, other: &Self) -> Result<Self> {
        other
            .try_inv()
            .map(|i| self.clone() * i)
            .ok_or(crate::Error::DivisionByZero)
    }
}

/// An ordered subfield of the reals with exact sign.
pub trait RealField: Field + num_traits::Num {
    fn sign(&self) -> i8;
    fn to_f64(&self) -> f64;
    /// Square root inside the field spanned by `ctx`.
    fn sqrt_in(&self, ctx: Radicands) -> Result<Self>;
}

pub trait Conjugate: Scalar {
    fn conj(&self) -> Self;
    fn imag_unit() -> Self;
}

pub trait ComplexField: Field + Conjugate {
    type Real: Field;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;
    fn from_real(r: Self::Real) -> Self;

    fn from_parts(re: Self::Real, im: Self::Real) -> Self {
        Self::from_real(re) + Self::imag_unit() * Self::from_real(im)
    }

    /// The real part, failing when the imaginary part is nonzero.
    fn real_value(&self) -> Result<Self::Real> {
        if self.im().is_zero() {
            Ok(self.re())
        } else {
            Err(crate::Error::NonReal(self.render()))
        }
    }
}

/// Hooks used by the expression evaluator of the text front ends.
pub trait EvalScalar: Scalar {
    fn symbol(name: &str) -> Result<Self>;
    fn imag() -> Result<Self>;
    fn try_div(&self, other: &Self) -> Result<Self>;
    fn try_sqrt(&self, ctx: Radicands) -> Result<Self>;
    fn try_sign(&self) -> Result<Self>;
    fn try_abs(&self) -> Result<Self>;
    fn try_conj(&self) -> Result<Self>;
    fn as_rational(&self) -> Option<Rational>;
}

pub fn pow<S: Scalar>(x: &S, e: u32) -> S {
    let mut acc = S::one();
    for _ in 0..e {
        acc = acc * x.clone();
    }
    acc
}
