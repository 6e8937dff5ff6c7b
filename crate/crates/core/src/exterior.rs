//! Exterior forms on a finite set of generators, indexed by bitmask.

use std::collections::BTreeMap;

use crate::kernel::{Conjugate, Scalar};

/// Sign of `e^a ∧ e^b` relative to `e^(a|b)`, or `None` when they overlap.
pub fn wedge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut count = 0u32;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        count += (a >> (y + 1)).count_ones();
    }
    Some(count % 2 == 1)
}

pub fn indices(bits: u32) -> Vec<usize> {
    (0..32).filter(|i| bits >> i & 1 == 1).collect()
}

pub fn bits_of(idx: &[usize]) -> u32 {
    idx.iter().fold(0, |b, &i| b | (1 << i))
}

/// All bitmasks with `k` bits set among the lowest `n`, in increasing order.
pub fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0u32..(1u32 << n))
        .filter(|b| b.count_ones() as usize == k)
        .collect();
    out.sort_by_key(|b| indices(*b));
    out
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Form<S> {
    terms: BTreeMap<u32, S>,
}

impl<S: Scalar> Form<S> {
    pub fn zero() -> Self {
        Form {
            terms: BTreeMap::new(),
        }
    }

    pub fn gen(i: usize) -> Self {
        Self::mono(1 << i, S::one())
    }

    pub fn mono(bits: u32, c: S) -> Self {
        let mut f = Self::zero();
        f.add_term(bits, c);
        f
    }

    pub fn constant(c: S) -> Self {
        Self::mono(0, c)
    }

    /// `c * e^i ∧ e^j`, normalizing the order.
    pub fn pair(i: usize, j: usize, c: S) -> Self {
        match wedge_sign(1 << i, 1 << j) {
            None => Self::zero(),
            Some(neg) => Self::mono((1 << i) | (1 << j), if neg { -c } else { c }),
        }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (u32, S)>) -> Self {
        let mut f = Self::zero();
        for (b, c) in it {
            f.add_term(b, c);
        }
        f
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &S)> {
        self.terms.iter()
    }

    pub fn coef(&self, bits: u32) -> S {
        self.terms.get(&bits).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|b| b.count_ones())
    }

    pub fn add_term(&mut self, bits: u32, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&bits) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&bits);
                }
            }
            None => {
                self.terms.insert(bits, c);
            }
        }
    }

    pub fn add(&self, o: &Form<S>) -> Form<S> {
        let mut out = self.clone();
        for (b, c) in &o.terms {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Form<S>) -> Form<S> {
        let mut out = self.clone();
        for (b, c) in &o.terms {
            out.add_term(*b, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Form<S> {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> Form<S> {
        if c.is_zero() {
            return Self::zero();
        }
        Form {
            terms: self
                .terms
                .iter()
                .map(|(b, x)| (*b, x.clone() * c.clone()))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn wedge(&self, o: &Form<S>) -> Form<S> {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if let Some(neg) = wedge_sign(*a, *b) {
                    let c = x.clone() * y.clone();
                    out.add_term(a | b, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Exterior derivative from the differentials of the generators.
    pub fn differential(&self, gens: &[Form<S>]) -> Form<S> {
        let mut out = Self::zero();
        for (bits, c) in &self.terms {
            let mut rest = *bits;
            let mut r = 0;
            while rest != 0 {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                let before = bits & ((1u32 << i) - 1);
                let after = bits & !((2u64 << i) - 1) as u32;
                let lead_neg = r % 2 == 1;
                for (t, y) in &gens[i as usize].terms {
                    let Some(s1) = wedge_sign(before, *t) else {
                        continue;
                    };
                    let Some(s2) = wedge_sign(before | t, after) else {
                        continue;
                    };
                    let v = c.clone() * y.clone();
                    out.add_term(before | t | after, if lead_neg ^ s1 ^ s2 { -v } else { v });
                }
                r += 1;
            }
        }
        out
    }

    /// Pullback along generator images: each `e^i` becomes `images[i]`.
    pub fn substitute(&self, images: &[Form<S>]) -> Form<S> {
        let mut out = Self::zero();
        for (bits, c) in &self.terms {
            let mut acc = Form::constant(c.clone());
            for i in indices(*bits) {
                acc = acc.wedge(&images[i]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Form<T> {
        Form::from_terms(self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    pub fn try_map<T: Scalar, E>(&self, f: impl Fn(&S) -> Result<T, E>) -> Result<Form<T>, E> {
        let mut out = Form::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, f(c)?);
        }
        Ok(out)
    }

    pub fn render_with(&self, mono: impl Fn(u32) -> String) -> String {
        let mut out = String::new();
        for (b, c) in &self.terms {
            let m = mono(*b);
            let t = if *b == 0 {
                c.render()
            } else if c.is_one() {
                m
            } else if (-c.clone()).is_one() {
                format!("-{m}")
            } else if c.is_compound() {
                format!("({})*{m}", c.render())
            } else {
                format!("{}*{m}", c.render())
            };
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

    /// Renders with real generator names `e1, e2, ...`.
    pub fn render_real(&self) -> String {
        self.render_with(real_mono)
    }
}

impl<S: Conjugate> Form<S> {
    /// Complex conjugate on `2n` generators `w^1..w^n, conj(w^1)..conj(w^n)`.
    pub fn conj_complex(&self, n: usize) -> Form<S> {
        let images: Vec<Form<S>> = (0..2 * n)
            .map(|i| Form::gen(if i < n { i + n } else { i - n }))
            .collect();
        self.map(|c| c.conj()).substitute(&images)
    }
}

/// `e124` style name; pairs form `e(1,2,10)` once an index exceeds 9.
pub fn real_mono(bits: u32) -> String {
    let idx = indices(bits);
    if idx.iter().all(|&i| i < 9) {
        format!("e{}", idx.iter().map(|i| (i + 1).to_string()).collect::<String>())
    } else {
        format!(
            "e({})",
            idx.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// `w1~4` style name for complex generators, `~` marking conjugates.
pub fn complex_mono(bits: u32, n: usize) -> String {
    let mut s = String::from("w");
    for i in indices(bits) {
        if i < n {
            s.push_str(&(i + 1).to_string());
        } else {
            s.push('~');
            s.push_str(&(i - n + 1).to_string());
        }
    }
    s
}
