use super::LieAlgebra;
use crate::kernel::{Field, Matrix, Subspace};

/// `terms[0] = 0`, `terms[1] = center`, ... until stabilization.
#[derive(Clone, Debug, PartialEq)]
pub struct AscendingSeries<S> {
    pub terms: Vec<Subspace<S>>,
    pub nilpotent: bool,
}

/// `terms[0] = g`, `terms[1] = [g,g]`, ... until stabilization.
#[derive(Clone, Debug, PartialEq)]
pub struct DescendingSeries<S> {
    pub terms: Vec<Subspace<S>>,
    pub nilpotent: bool,
}

impl<S> AscendingSeries<S> {
    /// Dimensions of `g_1, g_2, ...`.
    pub fn type_tuple(&self) -> Vec<usize>
    where
        S: Field,
    {
        self.terms[1..].iter().map(|s| s.dim()).collect()
    }
}

impl<S> DescendingSeries<S> {
    /// Dimensions of `g^1, g^2, ...` down to the last term.
    pub fn type_tuple(&self) -> Vec<usize>
    where
        S: Field,
    {
        self.terms[1..].iter().map(|s| s.dim()).collect()
    }
}

impl<S: Field> LieAlgebra<S> {
    /// `{X : [X, e_j] in prev for all j}`, or with `twist` also `[J X, e_j] in prev`.
    pub(crate) fn preimage_of(&self, prev: &Subspace<S>, twist: Option<&Matrix<S>>) -> Subspace<S> {
        let n = self.dim();
        let q = if prev.dim() == 0 {
            Matrix::identity(n)
        } else {
            prev.annihilator()
        };
        let mut stack = Matrix::zeros(0, n);
        for j in 0..n {
            let m = self.ad_right(j);
            let qm = q.mul(&m).expect("square");
            stack = stack.vstack(&qm).expect("same width");
            if let Some(jm) = twist {
                let qmj = qm.mul(jm).expect("square");
                stack = stack.vstack(&qmj).expect("same width");
            }
        }
        if stack.rows() == 0 {
            return Subspace::full(n);
        }
        Subspace::from_vectors(n, stack.kernel())
    }

    pub fn center(&self) -> Subspace<S> {
        self.preimage_of(&Subspace::zero(self.dim()), None)
    }

    pub fn ascending_series(&self) -> AscendingSeries<S> {
        let n = self.dim();
        let mut terms = vec![Subspace::zero(n)];
        loop {
            let next = self.preimage_of(terms.last().unwrap(), None);
            if next.dim() == terms.last().unwrap().dim() {
                return AscendingSeries {
                    nilpotent: next.dim() == n,
                    terms,
                };
            }
            let full = next.dim() == n;
            terms.push(next);
            if full {
                return AscendingSeries {
                    terms,
                    nilpotent: true,
                };
            }
        }
    }

    /// `[g, V]` for a subspace `V`.
    pub fn bracket_with(&self, v: &Subspace<S>) -> Subspace<S> {
        let n = self.dim();
        let mut out = Vec::new();
        for b in v.basis() {
            for j in 0..n {
                let mut e = vec![S::zero(); n];
                e[j] = S::one();
                let w = self.bracket(&e, b).expect("dimensions agree");
                if w.iter().any(|x| !x.is_zero()) {
                    out.push(w);
                }
            }
        }
        Subspace::from_vectors(n, out)
    }

    pub fn descending_series(&self) -> DescendingSeries<S> {
        let n = self.dim();
        let mut terms = vec![Subspace::full(n)];
        loop {
            let last = terms.last().unwrap();
            if last.dim() == 0 {
                return DescendingSeries {
                    terms,
                    nilpotent: true,
                };
            }
            let next = self.bracket_with(last);
            if next.dim() == last.dim() {
                return DescendingSeries {
                    terms,
                    nilpotent: false,
                };
            }
            terms.push(next);
        }
    }

    pub fn derived(&self) -> Subspace<S> {
        self.bracket_with(&Subspace::full(self.dim()))
    }

    pub fn ascending_type(&self) -> Vec<usize> {
        self.ascending_series().type_tuple()
    }

    pub fn descending_type(&self) -> Vec<usize> {
        self.descending_series().type_tuple()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.ascending_series().nilpotent
    }

    /// Smallest `s` with `g_s = g`, or `None` when not nilpotent.
    pub fn nilpotency_step(&self) -> Option<usize> {
        let a = self.ascending_series();
        a.nilpotent.then(|| a.terms.len() - 1)
    }
}

#[cfg(test)]
mod tests {
    use crate::kernel::rational::{int, Rational};
    use crate::lie::LieAlgebra;

    #[test]
    fn abelian_types() {
        let g = LieAlgebra::<Rational>::abelian(8);
        assert_eq!(g.ascending_type(), vec![8]);
        assert_eq!(g.descending_type(), vec![0]);
        assert_eq!(g.nilpotency_step(), Some(1));
    }

    #[test]
    fn heisenberg_series() {
        let mut g = LieAlgebra::<Rational>::abelian(3);
        g.set(0, 1, 2, int(1)).unwrap();
        assert_eq!(g.ascending_type(), vec![1, 3]);
        assert_eq!(g.descending_type(), vec![1, 0]);
        assert_eq!(g.center().dim(), 1);
    }

    #[test]
    fn non_nilpotent_flagged() {
        let mut g = LieAlgebra::<Rational>::abelian(2);
        g.set(0, 1, 1, int(1)).unwrap();
        let a = g.ascending_series();
        assert!(!a.nilpotent);
        assert!(!g.descending_series().nilpotent);
        assert_eq!(g.nilpotency_step(), None);
    }
}
