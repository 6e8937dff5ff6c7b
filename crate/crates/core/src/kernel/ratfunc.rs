use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::complex::Gauss;
use super::poly::Poly;
use super::rational::Rational;
use super::{ComplexField, Conjugate, EvalScalar, Field, Radicands, Scalar};
use crate::error::{Error, Result};

/// Quotient of polynomials; variables are real, coefficients Gaussian.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(Poly::var(name))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn as_poly(&self) -> Option<Poly> {
        self.den.is_one().then(|| self.num.clone())
    }

    fn normalized(mut num: Poly, mut den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = den.as_constant() {
            let ci = c.try_inv().expect("nonzero denominator");
            return RatFunc {
                num: num.scale(&ci),
                den: Poly::one(),
            };
        }
        if let Some(q) = num.exact_div(&den) {
            return RatFunc::from_poly(q);
        }
        let g = num.monomial_content().gcd(&den.monomial_content());
        if !g.is_one() {
            let gp = Poly::term(g, Gauss::one());
            num = num.exact_div(&gp).expect("monomial content divides");
            den = den.exact_div(&gp).expect("monomial content divides");
        }
        if let Some(g) = num.univariate_gcd(&den) {
            if g.degree() > 0 {
                num = num.exact_div(&g).expect("gcd divides");
                den = den.exact_div(&g).expect("gcd divides");
            }
        }
        if let Some(q) = den.exact_div(&num) {
            let lc = q.leading().map(|(_, c)| c.clone()).unwrap();
            let li = lc.try_inv().unwrap();
            return RatFunc {
                num: Poly::constant(li.clone()),
                den: q.scale(&li),
            };
        }
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap();
        let li = lc.try_inv().unwrap();
        RatFunc {
            num: num.scale(&li),
            den: den.scale(&li),
        }
    }

    pub fn substitute_with<S: Field>(
        &self,
        coef: impl Fn(&Gauss) -> Result<S> + Copy,
        var: impl Fn(&str) -> Result<S> + Copy,
    ) -> Result<S> {
        let n = self.num.eval_with(coef, var)?;
        let d = self.den.eval_with(coef, var)?;
        n.checked_div(&d)
    }

    pub fn variables(&self) -> std::collections::BTreeSet<std::sync::Arc<str>> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v
    }

    pub fn as_constant(&self) -> Option<Gauss> {
        self.as_poly().and_then(|p| p.as_constant())
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul_ref(&o.den) == o.num.mul_ref(&self.den)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        if o.num.is_zero() {
            return self;
        }
        if self.num.is_zero() {
            return o;
        }
        if self.den == o.den {
            return RatFunc::normalized(self.num + o.num, self.den);
        }
        let num = self.num.mul_ref(&o.den) + o.num.mul_ref(&self.den);
        RatFunc::normalized(num, self.den.mul_ref(&o.den))
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self + (-o)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        if self.num.is_zero() || o.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num.mul_ref(&o.num));
        }
        RatFunc::normalized(self.num.mul_ref(&o.num), self.den.mul_ref(&o.den))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
}

impl Scalar for RatFunc {
    fn from_rational(r: &Rational) -> Self {
        RatFunc::from_poly(Poly::from_rational(r))
    }

    fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.render();
        }
        let n = if self.num.is_compound() || self.num.len() > 1 {
            format!("({})", self.num.render())
        } else {
            self.num.render()
        };
        format!("{n}/({})", self.den.render())
    }

    fn is_compound(&self) -> bool {
        if self.den.is_one() {
            self.num.is_compound()
        } else {
            true
        }
    }
}

impl Field for RatFunc {
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::normalized(self.den.clone(), self.num.clone()))
        }
    }
}

impl Conjugate for RatFunc {
    fn conj(&self) -> Self {
        RatFunc {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }
    fn imag_unit() -> Self {
        RatFunc::from_poly(<Poly as Conjugate>::imag_unit())
    }
}

impl ComplexField for RatFunc {
    type Real = RatFunc;

    fn re(&self) -> RatFunc {
        let two = RatFunc::from_int(2).try_inv().unwrap();
        (self.clone() + Conjugate::conj(self)) * two
    }

    fn im(&self) -> RatFunc {
        let c = RatFunc::from_int(2) * RatFunc::imag_unit();
        (self.clone() - Conjugate::conj(self)) * c.try_inv().unwrap()
    }

    fn from_real(r: RatFunc) -> Self {
        r
    }

    fn from_parts(re: RatFunc, im: RatFunc) -> Self {
        re + RatFunc::imag_unit() * im
    }
}

impl EvalScalar for RatFunc {
    fn symbol(name: &str) -> Result<Self> {
        Ok(RatFunc::var(name))
    }

    fn imag() -> Result<Self> {
        Ok(RatFunc::imag_unit())
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }

    fn try_sqrt(&self, ctx: Radicands) -> Result<Self> {
        let c = self
            .as_constant()
            .ok_or_else(|| Error::IrrationalRadicand(self.render()))?;
        c.try_sqrt(ctx).map(|g| RatFunc::from_poly(Poly::constant(g)))
    }

    fn try_sign(&self) -> Result<Self> {
        let c = self
            .as_constant()
            .ok_or_else(|| Error::Unsupported(format!("sign of {}", self.render())))?;
        c.try_sign().map(|g| RatFunc::from_poly(Poly::constant(g)))
    }

    fn try_abs(&self) -> Result<Self> {
        let c = self
            .as_constant()
            .ok_or_else(|| Error::Unsupported(format!("abs of {}", self.render())))?;
        c.try_abs().map(|g| RatFunc::from_poly(Poly::constant(g)))
    }

    fn try_conj(&self) -> Result<Self> {
        Ok(Conjugate::conj(self))
    }

    fn as_rational(&self) -> Option<Rational> {
        self.as_constant().and_then(|c| c.as_rational())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::poly::pint;

    #[test]
    fn cancellation() {
        let b = Poly::var("b");
        let f = RatFunc::new(b.clone() * b.clone() - pint(1), b.clone() - pint(1)).unwrap();
        assert_eq!(f.as_poly().unwrap(), b.clone() + pint(1));
        let g = RatFunc::new(b.clone() - pint(1), b.clone() * b.clone() - pint(1)).unwrap();
        assert_eq!(g.denom(), &(b + pint(1)));
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::var("a");
        let b = RatFunc::var("b");
        let x = (a.clone() + b.clone()).try_inv().unwrap();
        assert_eq!(x * (a + b), RatFunc::one());
        assert!(RatFunc::new(pint(1), Poly::zero()).is_err());
    }

    #[test]
    fn real_and_imaginary_parts() {
        let a = RatFunc::var("a");
        let z = a.clone() + RatFunc::imag_unit() * RatFunc::from_int(3);
        assert_eq!(z.re(), a);
        assert_eq!(z.im(), RatFunc::from_int(3));
    }
}
