use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{EvalScalar, Field, Radicands, RealField, Scalar};
use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Splits a positive integer as `s^2 * m` with `m` square-free.
pub fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut m = n.clone();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(100_000);
    while &p * &p <= m && p <= bound {
        let p2 = &p * &p;
        while (&m % &p2).is_zero() {
            m /= &p2;
            s *= &p;
        }
        p += 1;
    }
    let r = m.sqrt();
    if &r * &r == m {
        s *= r;
        m = BigInt::one();
    }
    (s, m)
}

/// Writes a nonnegative rational as `c^2 * m` with `m` a square-free integer.
pub fn rational_sqrt_parts(r: &Rational) -> (Rational, i64) {
    let nd = r.numer() * r.denom();
    let (s, m) = squarefree_split(&nd);
    let c = Rational::new(s, r.denom().clone());
    (c, m.to_i64().unwrap_or(i64::MAX))
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn render(&self) -> String {
        render_rational(self)
    }

    fn is_compound(&self) -> bool {
        false
    }
}

impl Field for Rational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl RealField for Rational {
    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sqrt_in(&self, _ctx: Radicands) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::IrrationalRadicand(self.render()));
        }
        let (c, m) = rational_sqrt_parts(self);
        if m == 1 || self.is_zero() {
            Ok(c)
        } else {
            Err(Error::IrrationalRadicand(self.render()))
        }
    }
}

impl EvalScalar for Rational {
    fn symbol(name: &str) -> Result<Self> {
        Err(Error::MissingParameter(name.to_string()))
    }

    fn imag() -> Result<Self> {
        Err(Error::NonReal("i".into()))
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }

    fn try_sqrt(&self, ctx: Radicands) -> Result<Self> {
        self.sqrt_in(ctx)
    }

    fn try_sign(&self) -> Result<Self> {
        Ok(int(self.sign() as i64))
    }

    fn try_abs(&self) -> Result<Self> {
        Ok(self.abs())
    }

    fn try_conj(&self) -> Result<Self> {
        Ok(self.clone())
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(rat(4, -6).render(), "-2/3");
        assert_eq!(rat(0, 5).render(), "0");
        assert_eq!(rat(0, 5).denom(), &BigInt::one());
        assert_eq!(int(7).render(), "7");
    }

    #[test]
    fn squarefree() {
        assert_eq!(rational_sqrt_parts(&rat(32, 3)), (rat(4, 3), 6));
        assert_eq!(rational_sqrt_parts(&rat(9, 4)), (rat(3, 2), 1));
        assert_eq!(rat(16, 25).sqrt_in(None).unwrap(), rat(4, 5));
        assert!(int(2).sqrt_in(None).is_err());
    }
}
