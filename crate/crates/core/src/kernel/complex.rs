use super::rational::Rational;
use super::{ComplexField, Conjugate, EvalScalar, Field, Radicands, RealField, Scalar};
use crate::error::{Error, Result};

pub use num_complex::Complex;

/// Gaussian rationals.
pub type Gauss = Complex<Rational>;

fn wrap(s: String, compound: bool) -> String {
    if compound {
        format!("({s})")
    } else {
        s
    }
}

pub(crate) fn render_parts<T: Scalar>(re: &T, im: &T) -> String {
    let im_s = im.render();
    let im_c = im.is_compound();
    let imag = if im.is_one() {
        "i".to_string()
    } else if (-im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", wrap(im_s, im_c))
    };
    if im.is_zero() {
        return re.render();
    }
    if re.is_zero() {
        return imag;
    }
    let re_s = wrap(re.render(), re.is_compound());
    if imag.starts_with('-') {
        format!("{re_s}{imag}")
    } else {
        format!("{re_s}+{imag}")
    }
}

impl<T: RealField> Scalar for Complex<T> {
    fn from_rational(r: &Rational) -> Self {
        Complex::new(T::from_rational(r), T::zero())
    }

    fn render(&self) -> String {
        render_parts(&self.re, &self.im)
    }

    fn ring_tag(&self) -> Radicands {
        self.re.ring_tag().or(self.im.ring_tag())
    }

    fn is_compound(&self) -> bool {
        (!self.re.is_zero() && !self.im.is_zero())
            || self.re.is_compound()
            || (self.re.is_zero() && self.im.is_compound())
    }
}

impl<T: RealField> Field for Complex<T> {
    fn try_inv(&self) -> Option<Self> {
        let n = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let ni = n.try_inv()?;
        Some(Complex::new(
            self.re.clone() * ni.clone(),
            -(self.im.clone() * ni),
        ))
    }
}

impl<T: RealField> Conjugate for Complex<T> {
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn imag_unit() -> Self {
        Complex::new(T::zero(), T::one())
    }
}

impl<T: RealField> ComplexField for Complex<T> {
    type Real = T;

    fn re(&self) -> T {
        self.re.clone()
    }

    fn im(&self) -> T {
        self.im.clone()
    }

    fn from_real(r: T) -> Self {
        Complex::new(r, T::zero())
    }

    fn from_parts(re: T, im: T) -> Self {
        Complex::new(re, im)
    }
}

impl<T: RealField + EvalScalar> EvalScalar for Complex<T> {
    fn symbol(name: &str) -> Result<Self> {
        Err(Error::MissingParameter(name.to_string()))
    }

    fn imag() -> Result<Self> {
        Ok(Self::imag_unit())
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }

    fn try_sqrt(&self, ctx: Radicands) -> Result<Self> {
        if !self.im.is_zero() {
            return Err(Error::IrrationalRadicand(self.render()));
        }
        if self.re.sign() >= 0 {
            Ok(Complex::new(self.re.sqrt_in(ctx)?, T::zero()))
        } else {
            Ok(Complex::new(T::zero(), (-self.re.clone()).sqrt_in(ctx)?))
        }
    }

    fn try_sign(&self) -> Result<Self> {
        let r = self.real_value()?;
        Ok(Self::from_int(r.sign() as i64))
    }

    fn try_abs(&self) -> Result<Self> {
        let r = self.real_value()?;
        Ok(if r.sign() < 0 {
            Self::from_real(-r)
        } else {
            Self::from_real(r)
        })
    }

    fn try_conj(&self) -> Result<Self> {
        Ok(Conjugate::conj(self))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.im.is_zero() {
            self.re.as_rational()
        } else {
            None
        }
    }
}

pub fn gauss(re: Rational, im: Rational) -> Gauss {
    Complex::new(re, im)
}
