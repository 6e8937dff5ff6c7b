//! Cohomology, Casimir counts, decomposable exact forms and fingerprints.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::exterior::{k_subsets, Form};
use crate::kernel::generic_rank::{rank_pencil, DEFAULT_SEED, DEFAULT_TRIALS};
use crate::kernel::{Field, Matrix, Poly, Scalar, Subspace};
use crate::lie::LieAlgebra;

pub fn ce_differential<S: Scalar>(g: &LieAlgebra<S>, w: &Form<S>) -> Form<S> {
    w.differential(&g.differentials())
}

/// Matrix of `d: Λ^k -> Λ^(k+1)` in the increasing-subset bases.
pub fn d_matrix<S: Scalar>(g: &LieAlgebra<S>, k: usize) -> Matrix<S> {
    let n = g.dim();
    let src = k_subsets(n, k);
    let dst = k_subsets(n, k + 1);
    let pos: HashMap<u32, usize> = dst.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let de = g.differentials();
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (c, b) in src.iter().enumerate() {
        let f = Form::mono(*b, S::one()).differential(&de);
        for (t, v) in f.terms() {
            m[(pos[t], c)] = v.clone();
        }
    }
    m
}

fn d_rank<S: Field>(g: &LieAlgebra<S>, k: usize) -> usize {
    if k >= g.dim() {
        0
    } else {
        d_matrix(g, k).rank()
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn betti<S: Field>(g: &LieAlgebra<S>, k: usize) -> usize {
    let n = g.dim();
    if k > n {
        return 0;
    }
    let before = if k == 0 { 0 } else { d_rank(g, k - 1) };
    binom(n, k) - d_rank(g, k) - before
}

pub fn betti_all<S: Field>(g: &LieAlgebra<S>) -> Vec<usize> {
    let n = g.dim();
    let ranks: Vec<usize> = (0..=n).map(|k| d_rank(g, k)).collect();
    (0..=n)
        .map(|k| binom(n, k) - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect()
}

fn coords<S: Scalar>(w: &Form<S>, n: usize, k: usize) -> Vec<S> {
    k_subsets(n, k).iter().map(|b| w.coef(*b)).collect()
}

/// Checks that every form is closed and that together they are independent modulo exact forms.
pub fn independent_classes<S: Field>(g: &LieAlgebra<S>, k: usize, forms: &[Form<S>]) -> bool {
    let n = g.dim();
    let de = g.differentials();
    if forms.iter().any(|w| !w.differential(&de).is_zero()) {
        return false;
    }
    let exact: Vec<Vec<S>> = if k == 0 {
        Vec::new()
    } else {
        d_matrix(g, k - 1).transpose().to_rows()
    };
    let base = Subspace::from_vectors(binom(n, k), exact);
    let mut all = base.basis().to_vec();
    all.extend(forms.iter().map(|w| coords(w, n, k)));
    Subspace::from_vectors(binom(n, k), all).dim() == base.dim() + forms.len()
}

/// Slices of the coadjoint matrix: `C = sum_j x_j C_j` with `(C_j)_{ki} = c_{ki}^j`.
pub fn casimir_slices<S: Scalar>(g: &LieAlgebra<S>) -> Vec<Matrix<S>> {
    let n = g.dim();
    let mut out = vec![Matrix::zeros(n, n); n];
    for ((i, j, k), c) in g.constants() {
        out[*k][(*i, *j)] = c.clone();
        out[*k][(*j, *i)] = -c.clone();
    }
    out
}

pub fn casimir_count<S: Field>(g: &LieAlgebra<S>) -> Result<usize> {
    casimir_count_seeded(g, DEFAULT_TRIALS, DEFAULT_SEED)
}

pub fn casimir_count_seeded<S: Field>(g: &LieAlgebra<S>, trials: usize, seed: u64) -> Result<usize> {
    if g.is_abelian() {
        return Ok(g.dim());
    }
    Ok(g.dim() - rank_pencil(&casimir_slices(g), trials, seed)?)
}

/// The coadjoint matrix with entries linear in `x1..xm`.
pub fn casimir_matrix(g: &LieAlgebra<Poly>) -> Matrix<Poly> {
    let n = g.dim();
    let mut m = Matrix::<Poly>::zeros(n, n);
    for ((i, j, k), c) in g.constants() {
        let t = c.clone() * Poly::var(&format!("x{}", k + 1));
        m[(*i, *j)] = m[(*i, *j)].clone() + t.clone();
        m[(*j, *i)] = m[(*j, *i)].clone() - t;
    }
    m
}

/// Determinant of the square submatrix on the given row and column masks.
pub fn minor<S: Scalar>(m: &Matrix<S>, rows: u32, cols: u32, memo: &mut HashMap<(u32, u32), S>) -> S {
    if rows == 0 {
        return S::one();
    }
    if let Some(v) = memo.get(&(rows, cols)) {
        return v.clone();
    }
    let r = rows.trailing_zeros() as usize;
    let rest = rows & (rows - 1);
    let mut acc = S::zero();
    let mut sign = false;
    let mut cs = cols;
    while cs != 0 {
        let c = cs.trailing_zeros() as usize;
        cs &= cs - 1;
        let a = &m[(r, c)];
        if !a.is_zero() {
            let sub = minor(m, rest, cols & !(1 << c), memo);
            if !sub.is_zero() {
                let t = a.clone() * sub;
                acc = if sign { acc - t } else { acc + t };
            }
        }
        sign = !sign;
    }
    memo.insert((rows, cols), acc.clone());
    acc
}

/// All nonzero minors of order `k`, keyed by `(rows, cols)` masks.
pub fn minors_of_order<S: Scalar>(m: &Matrix<S>, k: usize) -> Vec<((u32, u32), S)> {
    let subsets = k_subsets(m.rows(), k);
    let csubsets = k_subsets(m.cols(), k);
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    for r in &subsets {
        for c in &csubsets {
            let v = minor(m, *r, *c, &mut memo);
            if !v.is_zero() {
                out.push(((*r, *c), v));
            }
        }
    }
    out
}

fn is_decomposable<S: Scalar>(w: &Form<S>) -> bool {
    w.wedge(w).is_zero()
}

/// Decomposable exact 2-form counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecomposableCount {
    /// Number of `k` with `de^k` nonzero and decomposable.
    pub presented: usize,
    /// Largest totally decomposable subspace found in the grid search.
    pub searched: usize,
}

pub fn decomposable_exact_2forms<S: Field>(g: &LieAlgebra<S>) -> DecomposableCount {
    let de: Vec<Form<S>> = g.differentials().into_iter().filter(|f| !f.is_zero()).collect();
    let presented = de.iter().filter(|f| is_decomposable(f)).count();
    DecomposableCount {
        presented,
        searched: decomposable_search(g.dim(), &de),
    }
}

/// Grid search over `{-2..2}` combinations of the given 2-forms.
pub fn decomposable_search<S: Field>(n: usize, span: &[Form<S>]) -> usize {
    let m = span.len();
    if m == 0 {
        return 0;
    }
    let dim2 = binom(n, 2);
    let mut cands: Vec<(Vec<S>, Form<S>)> = Vec::new();
    let total = 5usize.pow(m as u32);
    for code in 0..total {
        let mut c = code;
        let mut coeffs = Vec::with_capacity(m);
        for _ in 0..m {
            coeffs.push((c % 5) as i64 - 2);
            c /= 5;
        }
        let first = coeffs.iter().find(|x| **x != 0);
        if first.is_none_or(|x| *x < 0) {
            continue;
        }
        let mut w = Form::zero();
        for (f, x) in span.iter().zip(&coeffs) {
            if *x != 0 {
                w = w.add(&f.scale(&S::from_int(*x)));
            }
        }
        if w.is_zero() || !is_decomposable(&w) {
            continue;
        }
        let v = coords(&w, n, 2);
        if cands
            .iter()
            .any(|(u, _)| Subspace::from_vectors(dim2, vec![u.clone(), v.clone()]).dim() < 2)
        {
            continue;
        }
        cands.push((v, w));
    }
    let adj: Vec<Vec<bool>> = cands
        .iter()
        .map(|(_, a)| cands.iter().map(|(_, b)| a.wedge(b).is_zero()).collect())
        .collect();
    let mut best = 0;
    let mut clique = Vec::new();
    grow(&cands, &adj, 0, &mut clique, dim2, &mut best);
    best
}

fn grow<S: Field>(
    cands: &[(Vec<S>, Form<S>)],
    adj: &[Vec<bool>],
    start: usize,
    clique: &mut Vec<usize>,
    dim2: usize,
    best: &mut usize,
) {
    let rank = Subspace::from_vectors(dim2, clique.iter().map(|&i| cands[i].0.clone()).collect()).dim();
    *best = (*best).max(rank);
    if rank + (cands.len() - start) <= *best {
        return;
    }
    for i in start..cands.len() {
        if clique.iter().all(|&j| adj[i][j]) {
            let mut vs: Vec<Vec<S>> = clique.iter().map(|&j| cands[j].0.clone()).collect();
            vs.push(cands[i].0.clone());
            if Subspace::from_vectors(dim2, vs).dim() > rank {
                clique.push(i);
                grow(cands, adj, i + 1, clique, dim2, best);
                clique.pop();
            }
        }
    }
}

/// Invariants used to tell algebras apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub ascending_type: Vec<usize>,
    pub descending_type: Vec<usize>,
    pub betti: [usize; 3],
    pub casimir: usize,
    pub dim_derived: usize,
}

pub fn fingerprint<S: Field>(g: &LieAlgebra<S>) -> Result<Fingerprint> {
    let asc = g.ascending_series();
    if !asc.nilpotent {
        return Err(crate::Error::NonNilpotent);
    }
    Ok(Fingerprint {
        ascending_type: asc.type_tuple(),
        descending_type: g.descending_type(),
        betti: [betti(g, 1), betti(g, 2), betti(g, 3)],
        casimir: casimir_count(g)?,
        dim_derived: g.derived().dim(),
    })
}
