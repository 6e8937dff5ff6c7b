//! Complex structure equations in a (1,0)-basis, their real forms and J-series.

pub mod generic;
mod realify;

pub use realify::{
    ascending_j_series, classify_j_type, nijenhuis, realify, standard_map, JType, Realification,
};

use crate::error::{Error, Result};
use crate::exterior::{complex_mono, Form};
use crate::kernel::{Conjugate, Field, Matrix};

/// `dω^k` for `k = 1..n` as forms on the generators `ω^1..ω^n, ω^1bar..ω^nbar`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexStructEqs<S> {
    n: usize,
    d: Vec<Form<S>>,
}

/// Which side of the relation the basis-change matrix expresses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `τ^k = sum_j Λ_kj ω^j`.
    Forward,
    /// `ω^k = sum_j Λ_kj τ^j`.
    Inverse,
}

impl<S: Conjugate> ComplexStructEqs<S> {
    pub fn new(n: usize, d: Vec<Form<S>>) -> Result<Self> {
        if d.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: d.len(),
            });
        }
        let holo = (1u32 << n) - 1;
        for f in &d {
            for (bits, _) in f.terms() {
                if bits.count_ones() != 2 || bits >> (2 * n) != 0 {
                    return Err(Error::Unsupported(format!(
                        "term `{}` is not a 2-form on {} generators",
                        complex_mono(*bits, n),
                        2 * n
                    )));
                }
                if bits & holo == 0 {
                    return Err(Error::Integrability {
                        line: 0,
                        col: 0,
                        monomial: complex_mono(*bits, n),
                    });
                }
            }
        }
        Ok(ComplexStructEqs { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self, k: usize) -> &Form<S> {
        &self.d[k]
    }

    pub fn forms(&self) -> &[Form<S>] {
        &self.d
    }

    /// Differentials of all `2n` generators, conjugates last.
    pub fn generator_differentials(&self) -> Vec<Form<S>> {
        let mut g = self.d.clone();
        g.extend(self.d.iter().map(|f| f.conj_complex(self.n)));
        g
    }

    /// Nonzero `d^2 ω^k`, with `k` 0-based.
    pub fn validate(&self) -> Vec<(usize, Form<S>)> {
        let gens = self.generator_differentials();
        self.d
            .iter()
            .enumerate()
            .map(|(k, f)| (k, f.differential(&gens)))
            .filter(|(_, r)| !r.is_zero())
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Coefficient of the monomial named like `w1~4`.
    pub fn coefficient(&self, k: usize, bits: u32) -> S {
        self.d[k].coef(bits)
    }

    pub fn render(&self) -> String {
        self.d
            .iter()
            .enumerate()
            .map(|(k, f)| format!("dw{} = {}", k + 1, f.render_with(|b| complex_mono(b, self.n))))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn map<T: Conjugate>(&self, f: impl Fn(&S) -> T) -> ComplexStructEqs<T> {
        ComplexStructEqs {
            n: self.n,
            d: self.d.iter().map(|x| x.map(&f)).collect(),
        }
    }

    pub fn try_map<T: Conjugate>(&self, f: impl Fn(&S) -> Result<T>) -> Result<ComplexStructEqs<T>> {
        Ok(ComplexStructEqs {
            n: self.n,
            d: self
                .d
                .iter()
                .map(|x| x.try_map(&f))
                .collect::<Result<Vec<_>>>()?,
        })
    }

    /// Images of `ω^j, ω^jbar` under `ω^j -> sum_l rows[j][l] τ^l`.
    fn images(&self, rows: &Matrix<S>) -> Vec<Form<S>> {
        let n = self.n;
        let mut img = Vec::with_capacity(2 * n);
        for bar in [false, true] {
            for j in 0..n {
                let mut f = Form::zero();
                for l in 0..n {
                    let c = rows[(j, l)].clone();
                    let c = if bar { c.conj() } else { c };
                    f.add_term(1 << (if bar { n + l } else { l }), c);
                }
                img.push(f);
            }
        }
        img
    }
}

impl<S: Field + Conjugate> ComplexStructEqs<S> {
    /// Structure equations in the new basis `τ`.
    pub fn change_basis(&self, lambda: &Matrix<S>, dir: Direction) -> Result<Self> {
        if lambda.rows() != self.n || lambda.cols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: lambda.rows(),
            });
        }
        let inv = lambda.inverse().ok_or(Error::SingularChange)?;
        let (fwd, back) = match dir {
            Direction::Forward => (lambda.clone(), inv),
            Direction::Inverse => (inv, lambda.clone()),
        };
        let img = self.images(&back);
        let d = (0..self.n)
            .map(|k| {
                let mut f = Form::zero();
                for j in 0..self.n {
                    let c = &fwd[(k, j)];
                    if !c.is_zero() {
                        f = f.add(&self.d[j].scale(c));
                    }
                }
                f.substitute(&img)
            })
            .collect();
        ComplexStructEqs::new(self.n, d)
    }

    /// `d(F(ω'^i)) - F(dω'^i)` for `F(ω'^i) = sum_j Λ_ij ω^j`, with `self` the primed equations.
    pub fn equivalence_residuals(&self, target: &Self, lambda: &Matrix<S>) -> Result<Vec<Form<S>>> {
        if lambda.inverse().is_none() {
            return Err(Error::SingularChange);
        }
        let img = target.images(lambda);
        let gens = target.generator_differentials();
        Ok((0..self.n)
            .map(|i| img[i].differential(&gens).sub(&self.d[i].substitute(&img)))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Gauss, Scalar};
    use crate::parse::{parse_eqs, Env};

    fn eqs(src: &str) -> ComplexStructEqs<Gauss> {
        parse_eqs(src, &Env::new(None)).unwrap()
    }

    #[test]
    fn abelian_valid() {
        let e = ComplexStructEqs::<Gauss>::new(4, vec![Form::zero(); 4]).unwrap();
        assert!(e.is_valid());
    }

    #[test]
    fn identity_change_is_noop() {
        let e = eqs("dw1 = 0\ndw2 = w1~1\ndw3 = w12 + i*w1~2\ndw4 = w13 + w1~3");
        let id = Matrix::identity(4);
        assert_eq!(e.change_basis(&id, Direction::Forward).unwrap(), e);
        assert!(e.equivalence_residuals(&e, &id).unwrap().iter().all(|f| f.is_zero()));
    }

    #[test]
    fn scaling_change() {
        let e = eqs("dw1 = 0\ndw2 = w1~1");
        let mut l = Matrix::identity(2);
        l[(0, 0)] = Gauss::from_int(2);
        let t = e.change_basis(&l, Direction::Forward).unwrap();
        assert_eq!(t.render(), "dw1 = 0\ndw2 = 1/4*w1~1");
        let back = t.change_basis(&l, Direction::Inverse).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn singular_change_rejected() {
        let e = eqs("dw1 = 0\ndw2 = w1~1");
        let z = Matrix::<Gauss>::zeros(2, 2);
        assert_eq!(e.change_basis(&z, Direction::Forward), Err(Error::SingularChange));
    }
}
