//! The generic SnN structure equations in complex dimension 4, their Jacobi system
//! and the center conditions.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::ComplexStructEqs;
use crate::error::{Error, Result};
use crate::exterior::complex_mono;
use crate::kernel::{Conjugate, Field, Gauss, Matrix, Monomial, Poly, Scalar};
use crate::parse::complex::parse_mono;
use crate::parse::{eval_str, parse_eqs, Env};

/// Complex coefficients of the generic equations.
pub const COMPLEX_PARAMS: [&str; 13] = ["A", "B", "C", "D", "E", "F", "G", "H", "K", "L", "M", "N", "P"];
/// Real coefficients.
pub const REAL_PARAMS: [&str; 2] = ["s", "t"];

pub const GENERIC_TEMPLATE: &str = "\
dw1 = 0
dw2 = A*w1~1 - B*(w14 - w1~4)
dw3 = F*w1~1 + K*w2~2 + C*w12 + D*w1~2 + G*w2~1 - E*(w14 - w1~4) - H*(w24 - w2~4)
dw4 = L*w1~1 + i*s*w2~2 + i*t*w3~3 + M*w1~2 - conj(M)*w2~1 + N*w1~3 - conj(N)*w3~1 + P*w2~3 - conj(P)*w3~2";

/// Hand-entered Jacobi system, one entry per scalar equation: `(cell, name, expression)`.
pub const CONDITIONS: [(usize, &str, &str); 16] = [
    (1, "AH-BG+conj(B)D", "A*H - B*G + conj(B)*D"),
    (2, "AK", "A*K"),
    (2, "BK", "B*K"),
    (3, "tH", "t*H"),
    (3, "tK", "t*K"),
    (3, "tC", "t*C"),
    (4, "K conj(N)-P conj(C)-conj(P)G", "K*conj(N) - P*conj(C) - conj(P)*G"),
    (5, "H Re(L)", "H*(L + conj(L))/2"),
    (6, "tD", "t*D"),
    (6, "tG", "t*G"),
    (7, "isA-F conj(P)-N conj(C)+conj(N)D", "i*s*A - F*conj(P) - N*conj(C) + conj(N)*D"),
    (8, "Re(P conj(H))", "(P*conj(H) + conj(P)*H)/2"),
    (9, "itE+BP", "i*t*E + B*P"),
    (10, "isB-E conj(P)-N conj(H)", "i*s*B - E*conj(P) - N*conj(H)"),
    (11, "Re(M conj(B)+N conj(E))", "(M*conj(B) + N*conj(E) + conj(M)*B + conj(N)*E)/2"),
    (12, "itF+AP", "i*t*F + A*P"),
];

/// Center conditions: each tuple must not vanish identically.
pub const CENTER_CONDITIONS: [&[&str]; 3] = [
    &["B", "E", "H"],
    &["N", "P", "t"],
    &["C", "D", "G", "H", "K", "M", "P", "s"],
];

fn re_name(p: &str) -> String {
    format!("{p}r")
}

fn im_name(p: &str) -> String {
    format!("{p}i")
}

/// Every complex parameter `X` bound to `Xr + i*Xi`; `s`, `t` real.
pub fn symbolic_env() -> Env<Poly> {
    let mut env = Env::new(None);
    for p in COMPLEX_PARAMS {
        let v = Poly::var(&re_name(p)) + <Poly as Conjugate>::imag_unit() * Poly::var(&im_name(p));
        env.bind(p, v);
    }
    for p in REAL_PARAMS {
        env.bind(p, Poly::var(p));
    }
    env
}

pub fn generic_eqs() -> ComplexStructEqs<Poly> {
    parse_eqs(GENERIC_TEMPLATE, &symbolic_env()).expect("generic template parses")
}

/// A point of the coefficient space.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GenericPoint {
    pub values: BTreeMap<String, Gauss>,
}

impl GenericPoint {
    pub fn new(vals: &[(&str, Gauss)]) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (k, v) in vals {
            if !COMPLEX_PARAMS.contains(k) && !REAL_PARAMS.contains(k) {
                return Err(Error::InvalidParams(format!("unknown coefficient `{k}`")));
            }
            if REAL_PARAMS.contains(k) && !v.im.is_zero() {
                return Err(Error::InvalidParams(format!("`{k}` must be real")));
            }
            values.insert(k.to_string(), v.clone());
        }
        Ok(GenericPoint { values })
    }

    pub fn get(&self, k: &str) -> Gauss {
        self.values.get(k).cloned().unwrap_or_else(Gauss::zero)
    }

    fn env(&self) -> Env<Gauss> {
        let mut env = Env::new(None);
        for p in COMPLEX_PARAMS.iter().chain(REAL_PARAMS.iter()) {
            env.bind(p, self.get(p));
        }
        env
    }

    pub fn eqs(&self) -> ComplexStructEqs<Gauss> {
        parse_eqs(GENERIC_TEMPLATE, &self.env()).expect("generic template parses")
    }

    /// Values of the hand-entered conditions.
    pub fn condition_values(&self) -> Vec<(&'static str, Gauss)> {
        let env = self.env();
        CONDITIONS
            .iter()
            .map(|(_, name, src)| (*name, eval_str(src, &env).expect("condition parses")))
            .collect()
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.condition_values().iter().all(|(_, v)| v.is_zero())
    }

    /// One flag per center condition, true when the tuple is nonzero.
    pub fn center_predicates(&self) -> [bool; 3] {
        CENTER_CONDITIONS.map(|tuple| tuple.iter().any(|p| !self.get(p).is_zero()))
    }
}

/// Hand-entered conditions as polynomials in the real coordinates.
pub fn condition_polys() -> Vec<(&'static str, Poly)> {
    let env = symbolic_env();
    CONDITIONS
        .iter()
        .map(|(_, name, src)| (*name, eval_str(src, &env).expect("condition parses")))
        .collect()
}

/// Nonzero coefficients of `d^2 ω^k`, keyed by `(k, monomial)`, both 1-based/named.
pub fn residual_coefficients<S: Conjugate>(eqs: &ComplexStructEqs<S>) -> Vec<(usize, String, S)> {
    let n = eqs.n();
    let mut out = Vec::new();
    for (k, f) in eqs.validate() {
        for (bits, c) in f.terms() {
            out.push((k + 1, complex_mono(*bits, n), c.clone()));
        }
    }
    out
}

/// Bit pattern of a monomial name such as `w1~4` among `2n` generators.
pub fn mono_bits(name: &str, n: usize) -> Option<u32> {
    let m = parse_mono(name)?;
    if m.i > n || m.j > n {
        return None;
    }
    let b = |k: usize, bar: bool| 1u32 << (k - 1 + if bar { n } else { 0 });
    Some(b(m.i, m.i_bar) | b(m.j, m.j_bar))
}

/// Where each coefficient is read off: `(name, generator, monomial, multiplier)`.
const READ_OFF: [(&str, usize, &str, i64); 15] = [
    ("A", 2, "w1~1", 1),
    ("B", 2, "w1~4", 1),
    ("F", 3, "w1~1", 1),
    ("K", 3, "w2~2", 1),
    ("C", 3, "w12", 1),
    ("D", 3, "w1~2", 1),
    ("G", 3, "w2~1", 1),
    ("E", 3, "w1~4", 1),
    ("H", 3, "w2~4", 1),
    ("L", 4, "w1~1", 1),
    ("s", 4, "w2~2", -1),
    ("t", 4, "w3~3", -1),
    ("M", 4, "w1~2", 1),
    ("N", 4, "w1~3", 1),
    ("P", 4, "w2~3", 1),
];

/// Reads the coefficients of equations of the generic shape.
///
/// On failure returns the slots where the equations differ from the closest generic ones.
pub fn fit_generic(eqs: &ComplexStructEqs<Gauss>) -> std::result::Result<GenericPoint, Vec<(usize, String, Gauss)>> {
    if eqs.n() != 4 {
        return Err(Vec::new());
    }
    let mut values = BTreeMap::new();
    for (name, k, mono, mult) in READ_OFF {
        let c = eqs.coefficient(k - 1, mono_bits(mono, 4).expect("valid monomial"));
        let v = if mult < 0 {
            Gauss::new(c.im.clone(), Zero::zero())
        } else {
            c
        };
        if !v.is_zero() {
            values.insert(name.to_string(), v);
        }
    }
    let point = GenericPoint { values };
    let rebuilt = point.eqs();
    let mut diff = Vec::new();
    for k in 0..4 {
        let d = eqs.d(k).sub(rebuilt.d(k));
        for (bits, c) in d.terms() {
            diff.push((k + 1, complex_mono(*bits, 4), c.clone()));
        }
    }
    if diff.is_empty() {
        Ok(point)
    } else {
        Err(diff)
    }
}

/// Two-factor conditions `XY = 0`, equivalent to `conj(X) Y = 0`.
const PRODUCTS: [(&str, &str, &str); 2] = [("AK", "A", "K"), ("BK", "B", "K")];

/// How a residual slot relates to one hand-entered condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Plain,
    Conjugate,
    /// `conj(X) Y` or its conjugate for a product condition `XY`.
    FactorConjugate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub condition: String,
    pub form: Form,
    pub factor: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlotMatch {
    pub generator: usize,
    pub monomial: String,
    pub residual: String,
    /// One entry when the slot is a multiple of a single condition, several for a combination,
    /// none when the slot is outside the span of the conditions.
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobiSystemReport {
    pub slots: Vec<SlotMatch>,
    /// Conditions not witnessed by any residual slot.
    pub unmatched_conditions: Vec<String>,
    /// Dimension of the Gaussian span of the residuals and their conjugates.
    pub residual_span: usize,
    /// Same for the conditions, their conjugates and factor-conjugate forms.
    pub condition_span: usize,
    pub joint_span: usize,
}

impl JacobiSystemReport {
    /// Every slot lies in the span of the conditions and every condition is witnessed.
    /// The spans need not agree: `AK = 0` and `conj(A) K = 0` are equivalent but independent.
    pub fn equivalent(&self) -> bool {
        self.joint_span == self.condition_span
            && self.unmatched_conditions.is_empty()
            && self.slots.iter().all(|s| !s.witnesses.is_empty())
    }

    /// Slots that are a multiple of one condition (in some form).
    pub fn single_matches(&self) -> usize {
        self.slots.iter().filter(|s| s.witnesses.len() == 1).count()
    }
}

fn proportional(p: &Poly, q: &Poly) -> Option<Gauss> {
    let (mp, cp) = p.leading()?;
    let (mq, cq) = q.leading()?;
    if mp != mq {
        return None;
    }
    let f = cp.checked_div(cq).ok()?;
    (q.scale(&f) == *p).then_some(f)
}

/// Coefficient matrix with one column per polynomial.
fn columns(polys: &[&Poly], extra: &[&Poly]) -> (Matrix<Gauss>, Vec<Vec<Gauss>>) {
    let mut monos: Vec<Monomial> = polys
        .iter()
        .chain(extra.iter())
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let vec_of = |p: &Poly| {
        let mut r = vec![Gauss::zero(); monos.len()];
        for (m, c) in p.terms() {
            r[index[m]] = c.clone();
        }
        r
    };
    let cols: Vec<Vec<Gauss>> = polys.iter().map(|p| vec_of(p)).collect();
    let rows = (0..monos.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let m = Matrix::from_rows_with(polys.len(), rows).expect("rectangular");
    (m, extra.iter().map(|p| vec_of(p)).collect())
}

fn span_rank(polys: &[Poly]) -> usize {
    let refs: Vec<&Poly> = polys.iter().collect();
    columns(&refs, &[]).0.rank()
}

/// Matches `d^2` of the generic equations against the hand-entered system.
pub fn jacobi_conditions_general() -> JacobiSystemReport {
    let res = residual_coefficients(&generic_eqs());
    let conds = condition_polys();
    let env = symbolic_env();
    let mut basis: Vec<(usize, Form, Poly)> = Vec::new();
    for (idx, (name, q)) in conds.iter().enumerate() {
        basis.push((idx, Form::Plain, q.clone()));
        basis.push((idx, Form::Conjugate, q.conj()));
        if let Some((_, x, y)) = PRODUCTS.iter().find(|(n, _, _)| n == name) {
            let v = eval_str::<Poly>(&format!("conj({x})*{y}"), &env).expect("parses");
            basis.push((idx, Form::FactorConjugate, v.conj()));
            basis.push((idx, Form::FactorConjugate, v));
        }
    }
    let polys: Vec<&Poly> = basis.iter().map(|(_, _, p)| p).collect();
    let targets: Vec<&Poly> = res.iter().map(|(_, _, c)| c).collect();
    let (mat, rhs) = columns(&polys, &targets);
    let mut used = vec![false; conds.len()];
    let mut slots = Vec::with_capacity(res.len());
    for ((k, mono, c), b) in res.iter().zip(&rhs) {
        let single = basis
            .iter()
            .find_map(|(idx, form, q)| proportional(c, q).map(|f| vec![(*idx, *form, f)]));
        let combo = single.or_else(|| {
            let sol = mat.solve(b).ok().flatten()?;
            Some(
                sol.into_iter()
                    .enumerate()
                    .filter(|(_, f)| !f.is_zero())
                    .map(|(j, f)| (basis[j].0, basis[j].1, f))
                    .collect(),
            )
        });
        let witnesses = combo
            .unwrap_or_default()
            .into_iter()
            .map(|(idx, form, f)| {
                used[idx] = true;
                Witness {
                    condition: conds[idx].0.to_string(),
                    form,
                    factor: f.render(),
                }
            })
            .collect();
        slots.push(SlotMatch {
            generator: *k,
            monomial: mono.clone(),
            residual: c.render(),
            witnesses,
        });
    }
    let mut rs: Vec<Poly> = res.iter().map(|(_, _, c)| c.clone()).collect();
    rs.extend(res.iter().map(|(_, _, c)| c.conj()));
    let cs: Vec<Poly> = basis.iter().map(|(_, _, p)| p.clone()).collect();
    let joint: Vec<Poly> = rs.iter().chain(cs.iter()).cloned().collect();
    JacobiSystemReport {
        unmatched_conditions: conds
            .iter()
            .zip(&used)
            .filter(|(_, u)| !**u)
            .map(|((n, _), _)| n.to_string())
            .collect(),
        residual_span: span_rank(&rs),
        condition_span: span_rank(&cs),
        joint_span: span_rank(&joint),
        slots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::complex::gauss;
    use crate::kernel::rational::int;

    fn g(re: i64, im: i64) -> Gauss {
        gauss(int(re), int(im))
    }

    #[test]
    fn zero_point() {
        let p = GenericPoint::default();
        assert!(p.eqs().is_valid());
        assert!(p.satisfies_jacobi());
        assert_eq!(p.center_predicates(), [false, false, false]);
    }

    #[test]
    fn residual_carries_ak() {
        let p = GenericPoint::new(&[("A", g(2, 1)), ("K", g(1, 0))]).unwrap();
        let res = residual_coefficients(&p.eqs());
        assert!(!res.is_empty());
        assert!(res.iter().any(|(_, _, c)| *c == g(2, 1) || *c == -g(2, 1)));
    }

    #[test]
    fn generic_system_matches() {
        let r = jacobi_conditions_general();
        assert_eq!(r.slots.len(), 38);
        assert!(r.equivalent(), "{r:?}");
        assert_eq!(r.single_matches(), 37);
    }

    #[test]
    fn fit_roundtrip() {
        let p = GenericPoint::new(&[("A", g(1, 2)), ("s", g(3, 0)), ("N", g(0, 1)), ("P", g(2, -1))]).unwrap();
        assert_eq!(fit_generic(&p.eqs()).unwrap(), p);
        let off = parse_eqs::<Gauss>("dw1 = w12\ndw4 = i*w3~3", &Env::new(None)).unwrap();
        let slots = fit_generic(&off).unwrap_err();
        assert_eq!(slots.len(), 1);
        assert_eq!(slots[0].1, "w12");
    }

    #[test]
    fn real_parameter_rejected_if_complex() {
        assert!(GenericPoint::new(&[("t", g(0, 1))]).is_err());
        assert!(GenericPoint::new(&[("Q", g(0, 1))]).is_err());
    }
}
