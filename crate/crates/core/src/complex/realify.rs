use serde::Serialize;

use super::ComplexStructEqs;
use crate::error::{Error, Result};
use crate::exterior::Form;
use crate::kernel::{ComplexField, Field, Matrix, Scalar, Subspace};
use crate::lie::LieAlgebra;

/// Real algebra and complex structure obtained from complex equations.
#[derive(Clone, Debug, PartialEq)]
pub struct Realification<R> {
    pub algebra: LieAlgebra<R>,
    pub j: Matrix<R>,
}

/// `ω^k = e^(2k-1) + i e^(2k)`.
pub fn standard_map<S: ComplexField>(n: usize) -> Vec<Vec<S>> {
    (0..n)
        .map(|k| {
            let mut row = vec![S::zero(); 2 * n];
            row[2 * k] = S::one();
            row[2 * k + 1] = S::imag_unit();
            row
        })
        .collect()
}

/// Real structure constants from `ω^k = sum_i rows[k][i] e^i`.
pub fn realify<S: ComplexField>(
    eqs: &ComplexStructEqs<S>,
    rows: &[Vec<S>],
) -> Result<Realification<S::Real>>
where
    S::Real: Scalar,
{
    let n = eqs.n();
    let m = 2 * n;
    if rows.len() != n || rows.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: rows.first().map(|r| r.len()).unwrap_or(0),
        });
    }
    let mut full: Vec<Vec<S>> = rows.to_vec();
    full.extend(rows.iter().map(|r| r.iter().map(|c| c.conj()).collect::<Vec<_>>()));
    let p = Matrix::from_rows(full)?;
    let pinv = p.inverse().ok_or(Error::DependentCovectors)?;
    let images: Vec<Form<S>> = (0..m)
        .map(|k| Form::from_terms((0..m).map(|l| (1u32 << l, p[(k, l)].clone()))))
        .collect();
    let dtheta: Vec<Form<S>> = eqs
        .generator_differentials()
        .iter()
        .map(|f| f.substitute(&images))
        .collect();
    let mut de = Vec::with_capacity(m);
    for i in 0..m {
        let mut f = Form::zero();
        for (k, dt) in dtheta.iter().enumerate() {
            let c = &pinv[(i, k)];
            if !c.is_zero() {
                f = f.add(&dt.scale(c));
            }
        }
        de.push(f.try_map(|c| c.real_value())?);
    }
    let algebra = LieAlgebra::from_differentials(m, &de)?;
    let mut diag = Matrix::<S>::zeros(m, m);
    for k in 0..m {
        diag[(k, k)] = if k < n { S::imag_unit() } else { -S::imag_unit() };
    }
    let j = pinv.mul(&diag)?.mul(&p)?.try_map(|c| c.real_value())?;
    Ok(Realification { algebra, j })
}

/// `N_J(e_i, e_j)` for all `i < j`.
pub fn nijenhuis<R: Field>(g: &LieAlgebra<R>, j: &Matrix<R>) -> Result<Vec<((usize, usize), Vec<R>)>> {
    let n = g.dim();
    if j.rows() != n || j.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: j.rows(),
        });
    }
    let mut minus = Matrix::<R>::identity(n);
    for k in 0..n {
        minus[(k, k)] = -R::one();
    }
    if j.mul(j)? != minus {
        return Err(Error::NotAlmostComplex);
    }
    let e = |i: usize| {
        let mut v = vec![R::zero(); n];
        v[i] = R::one();
        v
    };
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (e(a), e(b));
            let jx = j.mul_vec(&x)?;
            let jy = j.mul_vec(&y)?;
            let t1 = g.bracket(&x, &y)?;
            let t2 = j.mul_vec(&g.bracket(&jx, &y)?)?;
            let t3 = j.mul_vec(&g.bracket(&x, &jy)?)?;
            let t4 = g.bracket(&jx, &jy)?;
            let v = (0..n)
                .map(|k| t1[k].clone() + t2[k].clone() + t3[k].clone() - t4[k].clone())
                .collect();
            out.push(((a, b), v));
        }
    }
    Ok(out)
}

/// `a_0 = 0`, `a_k = {X : [X,g] ⊆ a_(k-1), [JX,g] ⊆ a_(k-1)}` until it stabilizes.
pub fn ascending_j_series<R: Field>(g: &LieAlgebra<R>, j: &Matrix<R>) -> Vec<Subspace<R>> {
    let n = g.dim();
    let mut terms = vec![Subspace::zero(n)];
    loop {
        let next = g.preimage_of(terms.last().unwrap(), Some(j));
        if next.dim() == terms.last().unwrap().dim() {
            return terms;
        }
        let full = next.dim() == n;
        terms.push(next);
        if full {
            return terms;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum JType {
    StronglyNonNilpotent,
    Nilpotent,
    WeaklyNonNilpotent,
}

impl JType {
    pub fn label(self) -> &'static str {
        match self {
            JType::StronglyNonNilpotent => "SnN",
            JType::Nilpotent => "nilpotent",
            JType::WeaklyNonNilpotent => "weakly non-nilpotent",
        }
    }
}

pub fn classify_j_type<R: Field>(g: &LieAlgebra<R>, j: &Matrix<R>) -> JType {
    let s = ascending_j_series(g, j);
    if s.len() == 1 {
        return if g.dim() == 0 {
            JType::Nilpotent
        } else {
            JType::StronglyNonNilpotent
        };
    }
    if s.last().unwrap().dim() == g.dim() {
        JType::Nilpotent
    } else {
        JType::WeaklyNonNilpotent
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, Rational};
    use crate::kernel::Gauss;
    use crate::parse::{parse_eqs, Env};

    fn std_j(n: usize) -> Matrix<Rational> {
        let mut j = Matrix::zeros(n, n);
        for k in 0..n / 2 {
            j[(2 * k + 1, 2 * k)] = int(1);
            j[(2 * k, 2 * k + 1)] = int(-1);
        }
        j
    }

    #[test]
    fn abelian_is_nilpotent() {
        let g = LieAlgebra::<Rational>::abelian(8);
        let j = std_j(8);
        assert!(nijenhuis(&g, &j).unwrap().iter().all(|(_, v)| v.iter().all(|c| c == &int(0))));
        assert_eq!(classify_j_type(&g, &j), JType::Nilpotent);
        assert_eq!(ascending_j_series(&g, &j)[1].dim(), 8);
    }

    #[test]
    fn not_almost_complex() {
        let g = LieAlgebra::<Rational>::abelian(2);
        assert_eq!(nijenhuis(&g, &Matrix::identity(2)), Err(Error::NotAlmostComplex));
    }

    #[test]
    fn realified_heisenberg_times_r() {
        let eqs: ComplexStructEqs<Gauss> = parse_eqs("dw1 = 0\ndw2 = i*w1~1", &Env::new(None)).unwrap();
        let r = realify(&eqs, &standard_map(2)).unwrap();
        assert!(r.algebra.jacobi_check().passes());
        assert_eq!(r.algebra.ascending_type(), vec![2, 4]);
        assert!(nijenhuis(&r.algebra, &r.j).unwrap().iter().all(|(_, v)| v.iter().all(|c| c == &int(0))));
        assert_eq!(classify_j_type(&r.algebra, &r.j), JType::Nilpotent);
    }

    #[test]
    fn dependent_covectors() {
        let eqs: ComplexStructEqs<Gauss> = parse_eqs("dw1 = 0\ndw2 = 0", &Env::new(None)).unwrap();
        let row = vec![Gauss::from_int(1), Gauss::from_int(0), Gauss::from_int(0), Gauss::from_int(0)];
        assert_eq!(realify(&eqs, &[row.clone(), row]), Err(Error::DependentCovectors));
    }
}
