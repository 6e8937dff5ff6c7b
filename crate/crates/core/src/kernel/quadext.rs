use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{Num, One, Signed, Zero};

use super::rational::{int, rational_sqrt_parts, render_rational, Rational};
use super::{EvalScalar, Field, Radicands, RealField, Scalar};
use crate::error::{Error, Result};

/// `x0 + x1*sqrt(p) + x2*sqrt(q) + x3*sqrt(p*q)` in a biquadratic field.
#[derive(Clone, Debug)]
pub struct QuadExt {
    rad: Radicands,
    x: [Rational; 4],
}

fn is_squarefree(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2i64;
    while k * k <= n {
        if n % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Validates a radicand pair; `q = 1` selects the quadratic field `Q(sqrt p)`.
pub fn field(p: i64, q: i64) -> Result<Radicands> {
    let ok = is_squarefree(p) && (q == 1 || (is_squarefree(q) && p != q && gcd(p, q) == 1));
    if ok {
        Ok(Some((p, q)))
    } else {
        Err(Error::Unsupported(format!(
            "radicands ({p},{q}) do not define a supported biquadratic field"
        )))
    }
}

/// The default working field `Q(sqrt 2, sqrt 3)`.
pub const SQRT23: Radicands = Some((2, 3));

fn join(a: Radicands, b: Radicands) -> Radicands {
    match (a, b) {
        (None, r) | (r, None) => r,
        (Some(x), Some(y)) if x == y => Some(x),
        (Some(x), Some(y)) => panic!("ring mismatch: Q(sqrt{:?}) vs Q(sqrt{:?})", x, y),
    }
}

fn sign_q(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `a + b*sqrt(p)`.
fn sign_sqrt1(a: &Rational, b: &Rational, p: i64) -> i8 {
    let (sa, sb) = (sign_q(a), sign_q(b));
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return if sa == 0 { sb } else { sa };
    }
    let t = a * a - int(p) * b * b;
    sa * sign_q(&t)
}

impl QuadExt {
    pub fn rational(r: Rational) -> Self {
        QuadExt {
            rad: None,
            x: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn new(rad: Radicands, x: [Rational; 4]) -> Self {
        let mut v = QuadExt { rad, x };
        v.fold();
        v
    }

    /// `sqrt(m)` for `m` in `{p, q, p*q}` of the given field.
    pub fn sqrt_int(m: i64, rad: Radicands) -> Result<Self> {
        QuadExt::rational(int(m)).sqrt_in(rad)
    }

    pub fn radicands(&self) -> Radicands {
        self.rad
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.x
    }

    pub fn is_rational(&self) -> bool {
        self.x[1].is_zero() && self.x[2].is_zero() && self.x[3].is_zero()
    }

    fn pq(&self) -> (i64, i64) {
        self.rad.unwrap_or((1, 1))
    }

    fn fold(&mut self) {
        if let Some((_, 1)) = self.rad {
            let x2 = std::mem::take(&mut self.x[2]);
            let x3 = std::mem::take(&mut self.x[3]);
            self.x[0] += x2;
            self.x[1] += x3;
        }
    }

    fn with(rad: Radicands, x: [Rational; 4]) -> Self {
        QuadExt::new(rad, x)
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let rad = join(self.rad, o.rad);
        let (p, q) = rad.unwrap_or((1, 1));
        let (p, q) = (int(p), int(q));
        let [x0, x1, x2, x3] = &self.x;
        let [y0, y1, y2, y3] = &o.x;
        let c0 = x0 * y0 + &p * x1 * y1 + &q * x2 * y2 + &p * &q * x3 * y3;
        let c1 = x0 * y1 + x1 * y0 + &q * (x2 * y3 + x3 * y2);
        let c2 = x0 * y2 + x2 * y0 + &p * (x1 * y3 + x3 * y1);
        let c3 = x0 * y3 + x3 * y0 + x1 * y2 + x2 * y1;
        Self::with(rad, [c0, c1, c2, c3])
    }

    fn galois(&self, s1: bool, s2: bool) -> Self {
        let [x0, x1, x2, x3] = self.x.clone();
        let f = |v: Rational, flip: bool| if flip { -v } else { v };
        Self::with(self.rad, [x0, f(x1, s1), f(x2, s2), f(x3, s1 ^ s2)])
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let c = self.galois(true, false).mul_ref(&self.galois(false, true));
        let c = c.mul_ref(&self.galois(true, true));
        let n = self.mul_ref(&c);
        debug_assert!(n.is_rational());
        let ni = n.x[0].recip();
        Some(c.mul_ref(&QuadExt::rational(ni)))
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, o: &Self) -> bool {
        self.x == o.x
    }
}

impl Add for QuadExt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let rad = join(self.rad, o.rad);
        let [a0, a1, a2, a3] = self.x;
        let [b0, b1, b2, b3] = o.x;
        Self::with(rad, [a0 + b0, a1 + b1, a2 + b2, a3 + b3])
    }
}

impl Sub for QuadExt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for QuadExt {
    type Output = Self;
    fn neg(self) -> Self {
        let [a0, a1, a2, a3] = self.x;
        QuadExt {
            rad: self.rad,
            x: [-a0, -a1, -a2, -a3],
        }
    }
}

impl Mul for QuadExt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl Div for QuadExt {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self.mul_ref(&o.inv().expect("division by zero in QuadExt"))
    }
}

impl Rem for QuadExt {
    type Output = Self;
    fn rem(self, _o: Self) -> Self {
        QuadExt::zero()
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.x.iter().all(|c| c.is_zero())
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }
}

impl Num for QuadExt {
    type FromStrRadixErr = Error;
    fn from_str_radix(s: &str, _radix: u32) -> Result<Self> {
        Err(Error::Unsupported(format!("parse QuadExt from `{s}`")))
    }
}

impl Scalar for QuadExt {
    fn from_rational(r: &Rational) -> Self {
        QuadExt::rational(r.clone())
    }

    fn render(&self) -> String {
        let (p, q) = self.pq();
        let names = [
            String::new(),
            format!("sqrt({p})"),
            format!("sqrt({q})"),
            format!("sqrt({p}*{q})"),
        ];
        let mut out = String::new();
        for (k, c) in self.x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let body = if k == 0 {
                render_rational(&a)
            } else if a.is_one() {
                names[k].clone()
            } else {
                format!("{}*{}", render_rational(&a), names[k])
            };
            if out.is_empty() {
                out = if neg { format!("-{body}") } else { body };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    fn ring_tag(&self) -> Radicands {
        if self.is_rational() {
            None
        } else {
            self.rad
        }
    }

    fn is_compound(&self) -> bool {
        self.x.iter().filter(|c| !c.is_zero()).count() > 1
    }
}

impl Field for QuadExt {
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}

impl RealField for QuadExt {
    fn sign(&self) -> i8 {
        let (p, q) = self.pq();
        let [x0, x1, x2, x3] = &self.x;
        let su = sign_sqrt1(x0, x1, p);
        let sv = sign_sqrt1(x2, x3, p);
        if sv == 0 {
            return su;
        }
        if su == 0 || su == sv {
            return if su == 0 { sv } else { su };
        }
        let (pr, qr) = (int(p), int(q));
        let t0 = x0 * x0 + &pr * x1 * x1 - &qr * (x2 * x2 + &pr * x3 * x3);
        let t1 = int(2) * (x0 * x1 - &qr * x2 * x3);
        su * sign_sqrt1(&t0, &t1, p)
    }

    fn to_f64(&self) -> f64 {
        let (p, q) = self.pq();
        let f = |r: &Rational| num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN);
        let (sp, sq) = ((p as f64).sqrt(), (q as f64).sqrt());
        f(&self.x[0]) + f(&self.x[1]) * sp + f(&self.x[2]) * sq + f(&self.x[3]) * sp * sq
    }

    fn sqrt_in(&self, ctx: Radicands) -> Result<Self> {
        let rad = match (self.ring_tag(), ctx) {
            (Some(r), _) => Some(r),
            (None, c) => self.rad.or(c),
        };
        let err = || Error::IrrationalRadicand(self.render());
        if !self.is_rational() || self.x[0].is_negative() {
            return Err(err());
        }
        if self.x[0].is_zero() {
            return Ok(QuadExt::zero());
        }
        let (c, m) = rational_sqrt_parts(&self.x[0]);
        let z = Rational::zero;
        if m == 1 {
            return Ok(QuadExt::rational(c));
        }
        let (p, q) = rad.ok_or_else(err)?;
        let x = if m == p {
            [z(), c, z(), z()]
        } else if q != 1 && m == q {
            [z(), z(), c, z()]
        } else if q != 1 && m == p * q {
            [z(), z(), z(), c]
        } else {
            return Err(err());
        };
        Ok(QuadExt::new(rad, x))
    }
}

impl EvalScalar for QuadExt {
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
        Ok(QuadExt::rational(int(self.sign() as i64)))
    }

    fn try_abs(&self) -> Result<Self> {
        Ok(if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        })
    }

    fn try_conj(&self) -> Result<Self> {
        Ok(self.clone())
    }

    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.x[0].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;

    fn q(x: [i64; 4]) -> QuadExt {
        QuadExt::new(SQRT23, x.map(int))
    }

    #[test]
    fn products_of_radicals() {
        let s2 = QuadExt::sqrt_int(2, SQRT23).unwrap();
        let s3 = QuadExt::sqrt_int(3, SQRT23).unwrap();
        assert_eq!(s2.clone() * s2.clone(), QuadExt::rational(int(2)));
        assert_eq!(s2 * s3, q([0, 0, 0, 1]));
        let s6 = QuadExt::sqrt_int(6, SQRT23).unwrap();
        assert_eq!(s6.clone() * s6, QuadExt::rational(int(6)));
    }

    #[test]
    fn inverse() {
        let x = q([1, 2, -3, 5]);
        assert_eq!(x.clone() * x.inv().unwrap(), QuadExt::one());
        let two_minus_s3 = q([2, 0, -1, 0]);
        assert_eq!(two_minus_s3.inv().unwrap(), q([2, 0, 1, 0]));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(q([2, 0, -1, 0]).sign(), 1);
        assert_eq!(q([1, -1, 0, 0]).sign(), -1);
        assert_eq!(q([-5, 1, 1, 1]).sign(), 1);
        assert_eq!(q([-6, 1, 1, 1]).sign(), -1);
        assert_eq!(q([0, 0, 0, 0]).sign(), 0);
    }

    #[test]
    fn rendering() {
        assert_eq!(q([1, -2, 0, 1]).render(), "1 - 2*sqrt(2) + sqrt(2*3)");
        assert_eq!(QuadExt::rational(rat(-1, 2)).render(), "-1/2");
    }

    #[test]
    fn sqrt_in_context() {
        let r = QuadExt::rational(rat(3, 2)).sqrt_in(SQRT23).unwrap();
        assert_eq!(r.clone() * r, QuadExt::rational(rat(3, 2)));
        assert!(QuadExt::rational(int(5)).sqrt_in(SQRT23).is_err());
    }

    #[test]
    fn quadratic_field_folds() {
        let rad = field(5, 1).unwrap();
        let s5 = QuadExt::sqrt_int(5, rad).unwrap();
        assert_eq!(s5.clone() * s5, QuadExt::rational(int(5)));
    }
}
