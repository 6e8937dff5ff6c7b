//! Lie algebras given by structure constants.

mod series;

use std::collections::BTreeMap;

pub use series::{AscendingSeries, DescendingSeries};

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::exterior::Form;
use crate::kernel::{Matrix, Scalar};

/// Structure constants `[e_i, e_j] = sum_k c_ij^k e_k` stored for `i < j`, 0-based.
///
/// The dual differential is `de^k = sum_{i<j} c_ij^k e^ij`, so the abbreviated
/// notation `(0,0,12)` reads as `[e1,e2] = e3`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<S> {
    dim: usize,
    consts: BTreeMap<(usize, usize, usize), S>,
}

/// Serialized as `dim`, the abbreviated `notation` and 1-based `[i, j, k, c]` constants.
impl<S: Scalar> Serialize for LieAlgebra<S> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let consts: Vec<(usize, usize, usize, String)> = self
            .consts
            .iter()
            .map(|(&(i, j, k), c)| (i + 1, j + 1, k + 1, c.render()))
            .collect();
        let mut st = s.serialize_struct("LieAlgebra", 3)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("notation", &crate::parse::print_algebra(self))?;
        st.serialize_field("constants", &consts)?;
        st.end()
    }
}

/// Outcome of the two Jacobi computations.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiReport<S> {
    /// `(i, j, k)` with the nonzero value of the cyclic Jacobi sum.
    pub bracket_violations: Vec<((usize, usize, usize), Vec<S>)>,
    /// `(k, d^2 e^k)` for every nonzero residual.
    pub d2_residuals: Vec<(usize, Form<S>)>,
}

impl<S> JacobiReport<S> {
    pub fn passes(&self) -> bool {
        self.bracket_violations.is_empty() && self.d2_residuals.is_empty()
    }

    /// Both formulations reach the same verdict.
    pub fn consistent(&self) -> bool {
        self.bracket_violations.is_empty() == self.d2_residuals.is_empty()
    }
}

impl<S: Scalar> LieAlgebra<S> {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            consts: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: S) -> Result<()> {
        if i >= j {
            return Err(Error::IndexOrder { i: i + 1, j: j + 1 });
        }
        let bad = [i, j, k].into_iter().find(|&x| x >= self.dim);
        if let Some(x) = bad {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x + 1,
            });
        }
        if c.is_zero() {
            self.consts.remove(&(i, j, k));
        } else {
            self.consts.insert((i, j, k), c);
        }
        Ok(())
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> S {
        self.consts
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn constants(&self) -> impl Iterator<Item = (&(usize, usize, usize), &S)> {
        self.consts.iter()
    }

    /// Builds the algebra from `de^k`; only 2-forms are allowed.
    pub fn from_differentials(dim: usize, de: &[Form<S>]) -> Result<Self> {
        if de.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: de.len(),
            });
        }
        let mut g = Self::abelian(dim);
        for (k, f) in de.iter().enumerate() {
            for (bits, c) in f.terms() {
                if bits.count_ones() != 2 {
                    return Err(Error::Unsupported(format!(
                        "de^{} has a term of degree {}",
                        k + 1,
                        bits.count_ones()
                    )));
                }
                let i = bits.trailing_zeros() as usize;
                let j = 31 - bits.leading_zeros() as usize;
                g.set(i, j, k, c.clone())?;
            }
        }
        Ok(g)
    }

    pub fn differentials(&self) -> Vec<Form<S>> {
        let mut de = vec![Form::zero(); self.dim];
        for ((i, j, k), c) in &self.consts {
            de[*k].add_term((1 << i) | (1 << j), c.clone());
        }
        de
    }

    pub fn differential(&self, k: usize) -> Form<S> {
        let mut f = Form::zero();
        for ((i, j, kk), c) in &self.consts {
            if *kk == k {
                f.add_term((1 << i) | (1 << j), c.clone());
            }
        }
        f
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim];
        if i == j {
            return v;
        }
        let (a, b, neg) = if i < j { (i, j, false) } else { (j, i, true) };
        for ((x, y, k), c) in self.consts.range((a, b, 0)..(a, b + 1, 0)) {
            if *x == a && *y == b {
                v[*k] = if neg { -c.clone() } else { c.clone() };
            }
        }
        v
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        let mut out = vec![S::zero(); self.dim];
        for ((i, j, k), c) in &self.consts {
            let w = x[*i].clone() * y[*j].clone() - x[*j].clone() * y[*i].clone();
            if !w.is_zero() {
                out[*k] = out[*k].clone() + w * c.clone();
            }
        }
        Ok(out)
    }

    fn bracket_vec_basis(&self, x: &[S], j: usize) -> Vec<S> {
        let mut e = vec![S::zero(); self.dim];
        e[j] = S::one();
        self.bracket(x, &e).expect("dimensions agree")
    }

    /// Jacobi identity on basis triples and `d^2 = 0`, computed independently.
    pub fn jacobi_check(&self) -> JacobiReport<S> {
        let n = self.dim;
        let mut bracket_violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket_vec_basis(&self.bracket_basis(i, j), k);
                    let b = self.bracket_vec_basis(&self.bracket_basis(j, k), i);
                    let c = self.bracket_vec_basis(&self.bracket_basis(k, i), j);
                    let s: Vec<S> = (0..n)
                        .map(|t| a[t].clone() + b[t].clone() + c[t].clone())
                        .collect();
                    if s.iter().any(|x| !x.is_zero()) {
                        bracket_violations.push(((i, j, k), s));
                    }
                }
            }
        }
        let de = self.differentials();
        let d2_residuals = de
            .iter()
            .enumerate()
            .map(|(k, f)| (k, f.differential(&de)))
            .filter(|(_, f)| !f.is_zero())
            .collect();
        JacobiReport {
            bracket_violations,
            d2_residuals,
        }
    }

    /// Matrix of `X -> [X, e_j]`.
    pub fn ad_right(&self, j: usize) -> Matrix<S> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            let col = self.bracket_basis(i, j);
            for (k, c) in col.into_iter().enumerate() {
                m[(k, i)] = c;
            }
        }
        m
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LieAlgebra<T> {
        let mut g = LieAlgebra::abelian(self.dim);
        for ((i, j, k), c) in &self.consts {
            g.set(*i, *j, *k, f(c)).expect("indices already valid");
        }
        g
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<LieAlgebra<T>> {
        let mut g = LieAlgebra::abelian(self.dim);
        for ((i, j, k), c) in &self.consts {
            g.set(*i, *j, *k, f(c)?)?;
        }
        Ok(g)
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.is_empty()
    }
}
