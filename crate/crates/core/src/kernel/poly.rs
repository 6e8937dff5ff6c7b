use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::complex::Gauss;
use super::rational::{int, Rational};
use super::{Conjugate, EvalScalar, Field, Radicands, Scalar};
use crate::error::{Error, Result};

/// Power product of named real variables, sorted by name, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Arc<str>, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(Arc::from(name), 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Arc<str>, u32)] {
        &self.0
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| &**v == name)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < o.0.len() {
            match (self.0.get(i), o.0.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    out.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    out.push(a.clone());
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    out.push(b.clone());
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push(b.clone());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        for (v, e) in &self.0 {
            let f = o.exponent(v);
            match e.cmp(&f) {
                Ordering::Less => return None,
                Ordering::Equal => {}
                Ordering::Greater => out.push((v.clone(), e - f)),
            }
        }
        if o.0.iter().any(|(v, _)| self.exponent(v) == 0) {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum.
    pub fn gcd(&self, o: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|(v, e)| {
                    let m = (*e).min(o.exponent(v));
                    (m > 0).then(|| (v.clone(), m))
                })
                .collect(),
        )
    }

    pub fn render(&self) -> String {
        self.0
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        match self.degree().cmp(&o.degree()) {
            Ordering::Equal => {}
            c => return c,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), o.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(a), Some(b)) => {
                    if a.0 == b.0 {
                        match a.1.cmp(&b.1) {
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            c => return c,
                        }
                    } else if a.0 < b.0 {
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sparse polynomial in real variables with Gaussian rational coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Gauss>,
}

fn gauss_of(r: &Rational) -> Gauss {
    Gauss::new(r.clone(), Rational::zero())
}

impl Poly {
    pub fn var(name: &str) -> Self {
        Poly::term(Monomial::var(name), Gauss::one())
    }

    pub fn constant(c: Gauss) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Gauss) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Gauss)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Gauss)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> u32 {
        self.leading().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<Gauss> {
        match self.terms.len() {
            0 => Some(Gauss::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<Arc<str>> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Gauss) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Gauss) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Gauss) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.mul(m), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn add_ref(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Full substitution into any scalar ring.
    pub fn eval_with<S: Scalar>(
        &self,
        coef: impl Fn(&Gauss) -> Result<S>,
        var: impl Fn(&str) -> Result<S>,
    ) -> Result<S> {
        let mut cache: HashMap<Arc<str>, S> = HashMap::new();
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = coef(c)?;
            for (v, e) in &m.0 {
                let x = match cache.get(v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = var(v)?;
                        cache.insert(v.clone(), x.clone());
                        x
                    }
                };
                t = t * super::pow(&x, *e);
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Evaluates at a rational assignment; every variable must be bound.
    pub fn substitute(&self, assignment: &HashMap<String, Rational>) -> Result<Gauss> {
        self.eval_with(
            |c| Ok(c.clone()),
            |v| {
                assignment
                    .get(v)
                    .map(gauss_of)
                    .ok_or_else(|| Error::MissingParameter(v.to_string()))
            },
        )
    }

    /// Replaces the listed variables by polynomials, keeping the others.
    pub fn compose(&self, f: &dyn Fn(&str) -> Option<Poly>) -> Poly {
        self.eval_with(
            |c| Ok(Poly::constant(c.clone())),
            |v| Ok(f(v).unwrap_or_else(|| Poly::var(v))),
        )
        .expect("composition is total")
    }

    pub fn conj(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), Conjugate::conj(c)))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let (dm, dci) = (dm.clone(), dc.try_inv()?);
        let mut r = self.clone();
        let mut q = Poly::zero();
        let mut guard = 0usize;
        while let Some((rm, rc)) = r.leading() {
            let m = rm.div(&dm)?;
            let c = rc.clone() * dci.clone();
            r = r - d.mul_term(&m, &c);
            q.add_term(m, c);
            guard += 1;
            if guard > 100_000 {
                return None;
            }
        }
        Some(q)
    }

    /// Common monomial factor of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
        }
    }

    fn univariate(&self) -> Option<(Option<Arc<str>>, Vec<Gauss>)> {
        let vars = self.variables();
        if vars.len() > 1 {
            return None;
        }
        let v = vars.into_iter().next();
        let deg = self.degree() as usize;
        let mut dense = vec![Gauss::zero(); deg + 1];
        for (m, c) in &self.terms {
            dense[m.degree() as usize] = c.clone();
        }
        Some((v, dense))
    }

    fn from_dense(v: &Option<Arc<str>>, dense: &[Gauss]) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in dense.iter().enumerate() {
            let m = match (k, v) {
                (0, _) | (_, None) => Monomial::one(),
                (k, Some(v)) => Monomial(vec![(v.clone(), k as u32)]),
            };
            out.add_term(m, c.clone());
        }
        out
    }

    /// Monic gcd when both operands are univariate in the same variable.
    pub fn univariate_gcd(&self, o: &Poly) -> Option<Poly> {
        let (va, mut a) = self.univariate()?;
        let (vb, mut b) = o.univariate()?;
        let v = match (va, vb) {
            (Some(x), Some(y)) if x != y => return None,
            (x, y) => x.or(y),
        };
        let trim = |p: &mut Vec<Gauss>| {
            while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
                p.pop();
            }
        };
        trim(&mut a);
        trim(&mut b);
        let is_zero = |p: &Vec<Gauss>| p.iter().all(|c| c.is_zero());
        while !is_zero(&b) {
            // a mod b
            let lb = b.last().unwrap().try_inv().unwrap();
            while a.len() >= b.len() && !is_zero(&a) {
                let shift = a.len() - b.len();
                let f = a.last().unwrap().clone() * lb.clone();
                for (k, c) in b.iter().enumerate() {
                    a[k + shift] = a[k + shift].clone() - f.clone() * c.clone();
                }
                a.pop();
                trim(&mut a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        if is_zero(&a) {
            return Some(Poly::zero());
        }
        let li = a.last().unwrap().try_inv().unwrap();
        let a: Vec<Gauss> = a.into_iter().map(|c| c * li.clone()).collect();
        Some(Poly::from_dense(&v, &a))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        if self.terms.len() >= o.terms.len() {
            self.add_ref(&o)
        } else {
            o.add_ref(&self)
        }
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        self + (-o)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        self.mul_ref(&o)
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Gauss::one())
    }
}

fn render_term(m: &Monomial, c: &Gauss) -> String {
    if m.is_one() {
        return c.render();
    }
    let ms = m.render();
    if c.is_one() {
        ms
    } else if (-c.clone()).is_one() {
        format!("-{ms}")
    } else if c.is_compound() {
        format!("({})*{ms}", c.render())
    } else {
        format!("{}*{ms}", c.render())
    }
}

impl Scalar for Poly {
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(gauss_of(r))
    }

    /// Terms in descending graded-lex order.
    fn render(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let t = render_term(m, c);
            if out.is_empty() {
                out = t;
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    fn is_compound(&self) -> bool {
        match self.terms.len() {
            0 => false,
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                c.is_compound() && m.is_one()
            }
            _ => true,
        }
    }
}

impl Conjugate for Poly {
    fn conj(&self) -> Self {
        Poly::conj(self)
    }
    fn imag_unit() -> Self {
        Poly::constant(Gauss::new(Rational::zero(), Rational::one()))
    }
}

impl EvalScalar for Poly {
    fn symbol(name: &str) -> Result<Self> {
        Ok(Poly::var(name))
    }

    fn imag() -> Result<Self> {
        Ok(<Poly as Conjugate>::imag_unit())
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.exact_div(other).ok_or_else(|| {
            Error::Unsupported(format!(
                "non-polynomial quotient ({}) / ({})",
                self.render(),
                other.render()
            ))
        })
    }

    fn try_sqrt(&self, ctx: Radicands) -> Result<Self> {
        let c = self
            .as_constant()
            .ok_or_else(|| Error::IrrationalRadicand(self.render()))?;
        c.try_sqrt(ctx).map(Poly::constant)
    }

    fn try_sign(&self) -> Result<Self> {
        let c = self
            .as_constant()
            .ok_or_else(|| Error::Unsupported(format!("sign of ({})", self.render())))?;
        c.try_sign().map(Poly::constant)
    }

    fn try_abs(&self) -> Result<Self> {
        let c = self
            .as_constant()
            .ok_or_else(|| Error::Unsupported(format!("abs of ({})", self.render())))?;
        c.try_abs().map(Poly::constant)
    }

    fn try_conj(&self) -> Result<Self> {
        Ok(self.conj())
    }

    fn as_rational(&self) -> Option<Rational> {
        self.as_constant().and_then(|c| c.as_rational())
    }
}

/// Convenience: a polynomial from an integer.
pub fn pint(n: i64) -> Poly {
    Poly::from_rational(&int(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;

    fn v(n: &str) -> Poly {
        Poly::var(n)
    }

    #[test]
    fn substitution_examples() {
        let p = v("a") * v("b") - pint(2);
        let mut asg = HashMap::new();
        asg.insert("a".to_string(), int(2));
        asg.insert("b".to_string(), int(1));
        assert!(p.substitute(&asg).unwrap().is_zero());
        assert!(Poly::zero().substitute(&HashMap::new()).unwrap().is_zero());
        asg.remove("b");
        assert_eq!(
            p.substitute(&asg),
            Err(Error::MissingParameter("b".into()))
        );
    }

    #[test]
    fn rendering_is_grlex_descending() {
        let p = v("a") * v("b") - pint(2);
        assert_eq!(p.render(), "a*b - 2");
        let q = v("b") * v("b") + v("a") + pint(3) * v("a") * v("a");
        assert_eq!(q.render(), "3*a^2 + b^2 + a");
        let i = <Poly as Conjugate>::imag_unit();
        let r = (pint(1) + pint(2) * i) * v("a") * v("a");
        assert_eq!(r.render(), "(1+2*i)*a^2");
    }

    #[test]
    fn exact_division() {
        let a = v("a");
        let b = v("b");
        let p = (a.clone() + b.clone()) * (a.clone() - pint(2) * b.clone());
        assert_eq!(p.exact_div(&(a.clone() + b.clone())).unwrap(), a.clone() - pint(2) * b);
        assert!(p.exact_div(&(a + pint(1))).is_none());
    }

    #[test]
    fn gcd_univariate() {
        let x = v("x");
        let p = (x.clone() - pint(1)) * (x.clone() + pint(2));
        let q = (x.clone() - pint(1)) * (x.clone() - pint(3));
        assert_eq!(p.univariate_gcd(&q).unwrap(), x - pint(1));
    }

    #[test]
    fn conj_fixes_variables() {
        let i = <Poly as Conjugate>::imag_unit();
        let p = i.clone() * v("a") + Poly::from_rational(&rat(1, 2));
        assert_eq!(p.conj(), Poly::from_rational(&rat(1, 2)) - i * v("a"));
    }
}
