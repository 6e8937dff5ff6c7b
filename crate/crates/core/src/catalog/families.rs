//! The two normal forms of SnN complex structures and their constraint tables.

use serde::Serialize;

use crate::complex::ComplexStructEqs;
use crate::error::{Error, Result};
use crate::kernel::rational::int;
use crate::kernel::{Conjugate, EvalScalar, Poly, Rational, Scalar};
use crate::parse::{parse_eqs, Env};

pub const FAMILY_I_TEMPLATE: &str = "\
dw1 = 0
dw2 = e*w1~1
dw3 = w14 + w1~4 + a*w2~1 + i*d*e*b*w1~2
dw4 = i*n*w1~1 + b*w2~2 + i*d*(w1~3 - w3~1)";

pub const FAMILY_II_TEMPLATE: &str = "\
dw1 = 0
dw2 = w14 + w1~4
dw3 = a*w1~1 + e*(w12 + w1~2 - w2~1) + i*m*(w24 + w2~4)
dw4 = i*n*w1~1 - m*w2~2 + i*b*(w1~2 - w2~1) + i*(w1~3 - w3~1)";

/// Parameters of Family I; `None` keeps `a` or `b` symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyIParams {
    pub eps: u8,
    pub nu: u8,
    pub delta: i8,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
}

/// Parameters of Family II; `None` keeps `a` or `b` symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyIIParams {
    pub eps: u8,
    pub mu: u8,
    pub nu: u8,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
}

fn bit(name: &str, v: u8) -> Result<()> {
    if v > 1 {
        return Err(Error::InvalidParams(format!("{name} must be 0 or 1")));
    }
    Ok(())
}

fn bind<S: EvalScalar>(env: &mut Env<S>, name: &str, v: &Option<Rational>) {
    if let Some(v) = v {
        env.bind(name, S::from_rational(v));
    }
}

impl FamilyIParams {
    pub fn new(eps: u8, nu: u8, delta: i8, a: Option<Rational>, b: Option<Rational>) -> Result<Self> {
        let p = FamilyIParams { eps, nu, delta, a, b };
        p.check()?;
        Ok(p)
    }

    pub fn numeric(eps: u8, nu: u8, delta: i8, a: Rational, b: Rational) -> Result<Self> {
        Self::new(eps, nu, delta, Some(a), Some(b))
    }

    fn check(&self) -> Result<()> {
        bit("epsilon", self.eps)?;
        bit("nu", self.nu)?;
        if self.delta != 1 && self.delta != -1 {
            return Err(Error::InvalidParams("delta must be 1 or -1".into()));
        }
        if let Some(a) = &self.a {
            if a < &int(0) {
                return Err(Error::InvalidParams("a >= 0".into()));
            }
        }
        if let (Some(a), Some(b)) = (&self.a, &self.b) {
            if a == &int(0) && b == &int(0) {
                return Err(Error::InvalidParams("(a,b) ≠ (0,0)".into()));
            }
        }
        Ok(())
    }

    pub fn env<S: EvalScalar>(&self) -> Env<S> {
        let mut env = Env::new(None)
            .with("e", S::from_int(self.eps as i64))
            .with("n", S::from_int(self.nu as i64))
            .with("d", S::from_int(self.delta as i64));
        bind(&mut env, "a", &self.a);
        bind(&mut env, "b", &self.b);
        env
    }

    pub fn eqs<S: EvalScalar + Conjugate>(&self) -> Result<ComplexStructEqs<S>> {
        parse_eqs(FAMILY_I_TEMPLATE, &self.env())
    }

    /// The row of the normalized parameter table, if any.
    pub fn table_row(&self) -> Option<&'static TableRow> {
        let (a, b) = (self.a.as_ref()?, self.b.as_ref()?);
        TABLE_1
            .iter()
            .find(|r| (r.matches)(self.eps, self.nu, self.delta, a, b))
    }

    /// Ascending type determined by the parameters.
    pub fn predicted_type(&self) -> Option<Vec<usize>> {
        let a = self.a.as_ref()?;
        let t: &[usize] = if a != &int(0) {
            if self.eps == 0 && self.nu == 0 {
                &[1, 3, 8]
            } else {
                &[1, 3, 6, 8]
            }
        } else if self.eps == 1 {
            let b = self.b.as_ref()?;
            if self.nu == 1 && *b == int(2 * self.delta as i64) {
                &[1, 4, 8]
            } else {
                &[1, 4, 6, 8]
            }
        } else if self.nu == 0 {
            &[1, 5, 8]
        } else {
            &[1, 5, 6, 8]
        };
        Some(t.to_vec())
    }
}

impl FamilyIIParams {
    pub fn new(eps: u8, mu: u8, nu: u8, a: Option<Rational>, b: Option<Rational>) -> Result<Self> {
        let p = FamilyIIParams { eps, mu, nu, a, b };
        p.check()?;
        Ok(p)
    }

    pub fn numeric(eps: u8, mu: u8, nu: u8, a: Rational, b: Rational) -> Result<Self> {
        Self::new(eps, mu, nu, Some(a), Some(b))
    }

    fn check(&self) -> Result<()> {
        bit("epsilon", self.eps)?;
        bit("mu", self.mu)?;
        bit("nu", self.nu)?;
        if self.mu * self.nu != 0 {
            return Err(Error::InvalidParams("μν = 0".into()));
        }
        if self.eps == 0 && self.mu == 0 {
            return Err(Error::InvalidParams("(ε,μ) ≠ (0,0)".into()));
        }
        Ok(())
    }

    pub fn env<S: EvalScalar>(&self) -> Env<S> {
        let mut env = Env::new(None)
            .with("e", S::from_int(self.eps as i64))
            .with("m", S::from_int(self.mu as i64))
            .with("n", S::from_int(self.nu as i64));
        bind(&mut env, "a", &self.a);
        bind(&mut env, "b", &self.b);
        env
    }

    pub fn eqs<S: EvalScalar + Conjugate>(&self) -> Result<ComplexStructEqs<S>> {
        parse_eqs(FAMILY_II_TEMPLATE, &self.env())
    }

    pub fn table_row(&self) -> Option<&'static TableRow2> {
        let (a, b) = (self.a.as_ref()?, self.b.as_ref()?);
        TABLE_2
            .iter()
            .find(|r| (r.matches)(self.eps, self.mu, self.nu, a, b))
    }

    pub fn predicted_type(&self) -> Vec<usize> {
        if self.nu == 0 {
            vec![1, 3, 5, 8]
        } else {
            vec![1, 3, 5, 6, 8]
        }
    }
}

/// Family I text with every discrete flag fixed and `a`, `b` symbolic, skipping constraint checks.
pub fn family_i_symbolic(eps: u8, nu: u8, delta: i8) -> Result<ComplexStructEqs<Poly>> {
    let env = Env::new(None)
        .with("e", Poly::from_int(eps as i64))
        .with("n", Poly::from_int(nu as i64))
        .with("d", Poly::from_int(delta as i64));
    parse_eqs(FAMILY_I_TEMPLATE, &env)
}

/// Family II text with `a`, `b` symbolic, skipping constraint checks.
pub fn family_ii_symbolic(eps: u8, mu: u8, nu: u8) -> Result<ComplexStructEqs<Poly>> {
    let env = Env::new(None)
        .with("e", Poly::from_int(eps as i64))
        .with("m", Poly::from_int(mu as i64))
        .with("n", Poly::from_int(nu as i64));
    parse_eqs(FAMILY_II_TEMPLATE, &env)
}

type Pred1 = fn(u8, u8, i8, &Rational, &Rational) -> bool;
type Pred2 = fn(u8, u8, u8, &Rational, &Rational) -> bool;

#[derive(Serialize)]
pub struct TableRow {
    pub ascending_type: &'static [usize],
    /// `(ε, ν, a, b)` as printed.
    pub label: &'static str,
    #[serde(skip)]
    pub matches: Pred1,
}

#[derive(Serialize)]
pub struct TableRow2 {
    pub ascending_type: &'static [usize],
    /// `(ε, μ, ν, a, b)` as printed.
    pub label: &'static str,
    #[serde(skip)]
    pub matches: Pred2,
}

fn is(x: &Rational, v: i64) -> bool {
    *x == int(v)
}

pub static TABLE_1: [TableRow; 9] = [
    TableRow {
        ascending_type: &[1, 3, 8],
        label: "(0,0,1,0)",
        matches: |e, n, _, a, b| e == 0 && n == 0 && is(a, 1) && is(b, 0),
    },
    TableRow {
        ascending_type: &[1, 3, 8],
        label: "(0,0,1,1)",
        matches: |e, n, _, a, b| e == 0 && n == 0 && is(a, 1) && is(b, 1),
    },
    TableRow {
        ascending_type: &[1, 3, 6, 8],
        label: "(1,0,1,b>=0)",
        matches: |e, n, _, a, b| e == 1 && n == 0 && is(a, 1) && *b >= int(0),
    },
    TableRow {
        ascending_type: &[1, 3, 6, 8],
        label: "(0,1,1,b)",
        matches: |e, n, _, a, _| e == 0 && n == 1 && is(a, 1),
    },
    TableRow {
        ascending_type: &[1, 3, 6, 8],
        label: "(1,1,a>0,b)",
        matches: |e, n, _, a, _| e == 1 && n == 1 && *a > int(0),
    },
    TableRow {
        ascending_type: &[1, 4, 8],
        label: "(1,1,0,2δ)",
        matches: |e, n, d, a, b| e == 1 && n == 1 && is(a, 0) && is(b, 2 * d as i64),
    },
    TableRow {
        ascending_type: &[1, 4, 6, 8],
        label: "(1,0,0,1) or (1,1,0,b≠0,2δ)",
        matches: |e, n, d, a, b| {
            e == 1 && is(a, 0) && ((n == 0 && is(b, 1)) || (n == 1 && !is(b, 0) && !is(b, 2 * d as i64)))
        },
    },
    TableRow {
        ascending_type: &[1, 5, 8],
        label: "(0,0,0,1)",
        matches: |e, n, _, a, b| e == 0 && n == 0 && is(a, 0) && is(b, 1),
    },
    TableRow {
        ascending_type: &[1, 5, 6, 8],
        label: "(0,1,0,±1)",
        matches: |e, n, _, a, b| e == 0 && n == 1 && is(a, 0) && (is(b, 1) || is(b, -1)),
    },
];

pub static TABLE_2: [TableRow2; 4] = [
    TableRow2 {
        ascending_type: &[1, 3, 5, 8],
        label: "(0,1,0,a∈{0,1},0)",
        matches: |e, m, n, a, b| e == 0 && m == 1 && n == 0 && (is(a, 0) || is(a, 1)) && is(b, 0),
    },
    TableRow2 {
        ascending_type: &[1, 3, 5, 8],
        label: "(1,0,0,a∈{0,1},b)",
        matches: |e, m, n, a, _| e == 1 && m == 0 && n == 0 && (is(a, 0) || is(a, 1)),
    },
    TableRow2 {
        ascending_type: &[1, 3, 5, 8],
        label: "(1,1,0,a,b)",
        matches: |e, m, n, _, _| e == 1 && m == 1 && n == 0,
    },
    TableRow2 {
        ascending_type: &[1, 3, 5, 6, 8],
        label: "(1,0,1,a,b)",
        matches: |e, m, n, _, _| e == 1 && m == 0 && n == 1,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;
    use crate::kernel::Gauss;

    #[test]
    fn constraint_messages() {
        let e = FamilyIParams::numeric(0, 0, 1, int(0), int(0)).unwrap_err();
        assert_eq!(e, Error::InvalidParams("(a,b) ≠ (0,0)".into()));
        let e = FamilyIIParams::new(1, 1, 1, None, None).unwrap_err();
        assert_eq!(e, Error::InvalidParams("μν = 0".into()));
        let e = FamilyIIParams::new(0, 0, 1, None, None).unwrap_err();
        assert_eq!(e, Error::InvalidParams("(ε,μ) ≠ (0,0)".into()));
        assert!(FamilyIParams::numeric(1, 1, 1, int(-1), int(0)).is_err());
        assert!(FamilyIParams::numeric(1, 1, 0, int(1), int(0)).is_err());
    }

    #[test]
    fn predictions_follow_rows() {
        let p = FamilyIParams::numeric(0, 0, 1, int(1), int(0)).unwrap();
        assert_eq!(p.predicted_type().unwrap(), vec![1, 3, 8]);
        let p = FamilyIParams::numeric(1, 1, 1, int(0), int(2)).unwrap();
        assert_eq!(p.predicted_type().unwrap(), vec![1, 4, 8]);
        assert_eq!(p.table_row().unwrap().ascending_type, &[1, 4, 8]);
        let p = FamilyIParams::numeric(1, 1, -1, int(0), int(2)).unwrap();
        assert_eq!(p.predicted_type().unwrap(), vec![1, 4, 6, 8]);
        let q = FamilyIIParams::numeric(1, 0, 1, rat(2, 3), int(5)).unwrap();
        assert_eq!(q.predicted_type(), vec![1, 3, 5, 6, 8]);
        assert_eq!(q.table_row().unwrap().label, "(1,0,1,a,b)");
        let q = FamilyIIParams::numeric(0, 1, 0, int(2), int(0)).unwrap();
        assert!(q.table_row().is_none());
    }

    #[test]
    fn numeric_instances_are_integrable() {
        let p = FamilyIParams::numeric(1, 1, -1, rat(3, 2), int(-5)).unwrap();
        assert!(p.eqs::<Gauss>().unwrap().is_valid());
        let q = FamilyIIParams::numeric(1, 1, 0, rat(1, 2), int(3)).unwrap();
        assert!(q.eqs::<Gauss>().unwrap().is_valid());
    }
}
