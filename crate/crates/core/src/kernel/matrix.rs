use std::ops::{Index, IndexMut};

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over one scalar ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a matrix with an explicit column count, allowing zero rows.
    pub fn from_rows_with(cols: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Self::zeros(0, cols));
        }
        let m = Self::from_rows(rows)?;
        if m.cols != cols {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: m.cols,
            });
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: o.rows,
            });
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Matrix<T>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Stacks `o` below `self`.
    pub fn vstack(&self, o: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != o.cols && self.rows > 0 && o.rows > 0 {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: o.cols,
            });
        }
        let cols = if self.rows > 0 { self.cols } else { o.cols };
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + o.rows,
            cols,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Fails with `RingMismatch` when entries come from different extensions.
    pub fn check_ring(&self) -> Result<()> {
        let mut tag = None;
        for x in &self.data {
            if let Some(t) = x.ring_tag() {
                match tag {
                    None => tag = Some(t),
                    Some(u) if u != t => {
                        return Err(Error::RingMismatch(format!("{u:?} vs {t:?}")));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

impl<S: Field> Matrix<S> {
    /// Reduced row echelon form; pivots are taken on the lowest available row.
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].try_inv().expect("nonzero pivot");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = m[(r, j)].clone() * inv.clone();
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank after verifying all entries live in one field.
    pub fn rank_checked(&self) -> Result<usize> {
        self.check_ring()?;
        Ok(self.rank())
    }

    /// Kernel basis, one vector per free column in increasing order.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, f)].clone();
            }
            out.push(v);
        }
        out
    }

    /// A solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[S]) -> Result<Option<Vec<S>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix<S>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

/// Linear subspace stored as the nonzero rows of a reduced echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Field> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, Matrix::<S>::identity(ambient).to_rows())
    }

    pub fn from_vectors(ambient: usize, vecs: Vec<Vec<S>>) -> Self {
        let m = Matrix::from_rows_with(ambient, vecs).expect("vectors of ambient length");
        let (r, p) = m.rref();
        Subspace {
            ambient,
            basis: (0..p.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows_with(self.ambient, rows).unwrap().rank() == self.dim()
    }

    pub fn is_subspace_of(&self, o: &Subspace<S>) -> bool {
        self.basis.iter().all(|v| o.contains(v))
    }

    /// Rows spanning the covectors vanishing on this subspace.
    pub fn annihilator(&self) -> Matrix<S> {
        let m = Matrix::from_rows_with(self.ambient, self.basis.clone()).unwrap();
        let k = m.kernel();
        Matrix::from_rows_with(self.ambient, k).unwrap()
    }

    pub fn sum(&self, o: &Subspace<S>) -> Subspace<S> {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Subspace::from_vectors(self.ambient, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(Matrix::<Rational>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Rational>::zeros(3, 4).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(&[&[1, 2, 3], &[0, 1, 1]]);
        for v in a.kernel() {
            assert!(a.mul_vec(&v).unwrap().iter().all(|x| x == &int(0)));
        }
        let x = a.solve(&[int(6), int(2)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![int(6), int(2)]);
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(b.solve(&[int(1), int(2)]).unwrap().is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let i = a.inverse().unwrap();
        assert_eq!(a.mul(&i).unwrap(), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspace_annihilator() {
        let s = Subspace::from_vectors(3, vec![vec![int(1), int(1), int(0)]]);
        let q = s.annihilator();
        assert_eq!(q.rows(), 2);
        assert!(q.mul_vec(&[int(1), int(1), int(0)]).unwrap().iter().all(|x| x == &int(0)));
    }
}
