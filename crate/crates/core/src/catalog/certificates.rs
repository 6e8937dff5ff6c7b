//! Isomorphism and equivalence certificates, checked by exact residuals.
//!
//! A certificate is plain text: the two sides, a linear map in the expression language and
//! `name = expr` bindings. Sides are either raw notation/equations or a call such as
//! `g4(eta=1/rho, theta=theta)` or `family1(e=1, n=0, d=1, a=2, b=3)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::algebras::{presented, spec};
use super::families::{FAMILY_II_TEMPLATE, FAMILY_I_TEMPLATE};
use crate::complex::generic::{fit_generic, COMPLEX_PARAMS, GENERIC_TEMPLATE, REAL_PARAMS};
use crate::complex::{realify, ComplexStructEqs, Direction};
use crate::error::{Error, Result};
use crate::exterior::{complex_mono, Form};
use crate::kernel::quadext::SQRT23;
use crate::kernel::{Complex, ComplexField, Conjugate, EvalScalar, Field, Gauss, Matrix, QuadExt, RatFunc};
use crate::lie::LieAlgebra;
use crate::parse::{eval_str, parse_algebra, parse_eqs, parse_map, Env};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    /// `F(v^i) = sum_j m_ij e^j` from the source algebra (basis `e`) to the target (basis `v`),
    /// checked as `d(F v^i) = F(d v^i)`.
    RealIso,
    /// `w^k = sum_j m_kj e^j` turns the source complex equations into the target real algebra.
    Realification,
    /// `F(u^i) = sum_j m_ij w^j` with `u` the target (primed) basis, `w` the source.
    ComplexEquivalence,
    /// New basis `t^k = sum_j m_kj w^j`; the result must have the generic shape with the
    /// listed coefficients zero, or equal the target when one is given.
    Reduction,
}

impl CertKind {
    fn prefixes(self) -> (&'static str, &'static str) {
        match self {
            CertKind::RealIso => ("v", "e"),
            CertKind::Realification => ("w", "e"),
            CertKind::ComplexEquivalence => ("u", "w"),
            CertKind::Reduction => ("t", "w"),
        }
    }
}

/// Scalars the certificate is evaluated over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ring {
    /// Rationals, Gaussian rationals on the complex side.
    #[default]
    Rational,
    /// `Q(sqrt 2, sqrt 3)` and its Gaussian extension.
    Radical,
    /// Rational functions in the unbound names; checks hold generically.
    Symbolic,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub id: String,
    pub kind: CertKind,
    #[serde(default)]
    pub ring: Ring,
    /// Evaluated in order; later entries may use earlier ones.
    #[serde(default)]
    pub params: Vec<(String, String)>,
    pub source: String,
    pub map: String,
    #[serde(default)]
    pub target: Option<String>,
    #[serde(default)]
    pub vanishing: Vec<String>,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub kind: CertKind,
    pub ring: Ring,
    pub invertible: bool,
    pub source_integrable: bool,
    /// Nonzero residual forms, rendered.
    pub residuals: Vec<String>,
    /// Shape mismatches and coefficients that should vanish but do not.
    pub shape_errors: Vec<String>,
    pub passed: bool,
}

struct Parts {
    invertible: bool,
    source_integrable: bool,
    residuals: Vec<String>,
    shape_errors: Vec<String>,
}

fn env_for<S: EvalScalar>(params: &[(String, String)]) -> Result<Env<S>> {
    let mut env = Env::new(SQRT23);
    for (k, src) in params {
        match eval_str::<S>(src, &env) {
            Ok(v) => env.bind(k, v),
            // complex constants are meaningless on the real side
            Err(Error::NonReal(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(env)
}

/// `name(k=expr, ...)` or a bare name.
fn split_call(text: &str) -> Option<(&str, Vec<(&str, &str)>)> {
    let t = text.trim();
    let (name, rest) = match t.find('(') {
        Some(i) if t.ends_with(')') => (&t[..i], &t[i + 1..t.len() - 1]),
        _ => (t, ""),
    };
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric()) {
        return None;
    }
    let mut args = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = rest.as_bytes();
    for i in 0..=bytes.len() {
        let c = bytes.get(i).copied();
        match c {
            Some(b'(') => depth += 1,
            Some(b')') => depth -= 1,
            Some(b',') | None if depth == 0 => {
                let piece = rest[start..i].trim();
                if !piece.is_empty() {
                    let (k, v) = piece.split_once('=')?;
                    args.push((k.trim(), v.trim()));
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    Some((name, args))
}

fn with_args<S: EvalScalar>(env: &Env<S>, args: &[(&str, &str)]) -> Result<Env<S>> {
    let mut out = env.clone();
    for (k, src) in args {
        out.bind(k, eval_str(src, env)?);
    }
    Ok(out)
}

fn real_side<R: EvalScalar>(text: &str, env: &Env<R>) -> Result<LieAlgebra<R>> {
    if let Some((name, args)) = split_call(text) {
        let s = spec(name)?;
        let env = with_args(env, &args)?;
        let vals = s
            .params
            .iter()
            .zip(s.alias_params)
            .map(|(p, q)| {
                let v = env.bindings.get(*p).or_else(|| env.bindings.get(*q));
                let v = match v {
                    Some(v) => v.clone(),
                    None => R::symbol(p)?,
                };
                Ok((*p, v))
            })
            .collect::<Result<Vec<_>>>()?;
        return presented(name, &vals);
    }
    parse_algebra(text, env)
}

fn complex_side<C: EvalScalar + Conjugate>(text: &str, env: &Env<C>) -> Result<ComplexStructEqs<C>> {
    if let Some((name, args)) = split_call(text) {
        let mut env = with_args(env, &args)?;
        let template = match name {
            "family1" => FAMILY_I_TEMPLATE,
            "family2" => FAMILY_II_TEMPLATE,
            "generic" => {
                for p in COMPLEX_PARAMS.iter().chain(REAL_PARAMS.iter()) {
                    if !env.bindings.contains_key(*p) {
                        env.bind(p, C::zero());
                    }
                }
                GENERIC_TEMPLATE
            }
            other => return Err(Error::UnknownAlgebra(other.to_string())),
        };
        return parse_eqs(template, &env);
    }
    parse_eqs(text, env)
}

fn one_forms<S: EvalScalar>(rows: &[Vec<S>], offset: impl Fn(usize) -> usize) -> Vec<Form<S>> {
    rows.iter()
        .map(|r| {
            Form::from_terms(
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (1u32 << offset(j), c.clone())),
            )
        })
        .collect()
}

fn real_iso<R: EvalScalar + Field>(c: &Certificate) -> Result<Parts> {
    let env = env_for::<R>(&c.params)?;
    let g = real_side(&c.source, &env)?;
    let h = real_side(target(c)?, &env)?;
    let rows = parse_map(&c.map, "v", "e", g.dim(), &env)?;
    if rows.len() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            got: rows.len(),
        });
    }
    let invertible = Matrix::from_rows(rows.clone())?.inverse().is_some();
    let images = one_forms(&rows, |j| j);
    let gens = g.differentials();
    let residuals = (0..h.dim())
        .filter_map(|i| {
            let r = images[i].differential(&gens).sub(&h.differential(i).substitute(&images));
            (!r.is_zero()).then(|| format!("v{}: {}", i + 1, r.render_real()))
        })
        .collect();
    Ok(Parts {
        invertible,
        source_integrable: g.jacobi_check().passes(),
        residuals,
        shape_errors: Vec::new(),
    })
}

fn realification<C>(c: &Certificate) -> Result<Parts>
where
    C: ComplexField + EvalScalar,
    C::Real: EvalScalar + Field,
{
    let env = env_for::<C>(&c.params)?;
    let renv = env_for::<C::Real>(&c.params)?;
    let eqs = complex_side::<C>(&c.source, &env)?;
    let rows = parse_map(&c.map, "w", "e", 2 * eqs.n(), &env)?;
    let target = real_side(target(c)?, &renv)?;
    let real = match realify(&eqs, &rows) {
        Ok(r) => r,
        Err(Error::DependentCovectors | Error::SingularChange) => {
            return Ok(Parts {
                invertible: false,
                source_integrable: eqs.is_valid(),
                residuals: Vec::new(),
                shape_errors: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let residuals = (0..target.dim())
        .filter_map(|k| {
            let r = real.algebra.differential(k).sub(&target.differential(k));
            (!r.is_zero()).then(|| format!("e{}: {}", k + 1, r.render_real()))
        })
        .collect();
    Ok(Parts {
        invertible: true,
        source_integrable: eqs.is_valid(),
        residuals,
        shape_errors: Vec::new(),
    })
}

fn render_complex<S: EvalScalar>(label: &str, k: usize, f: &Form<S>, n: usize) -> String {
    format!("{label}{}: {}", k + 1, f.render_with(|b| complex_mono(b, n)))
}

fn complex_equivalence<C: EvalScalar + Field + Conjugate>(c: &Certificate) -> Result<Parts> {
    let env = env_for::<C>(&c.params)?;
    let src = complex_side::<C>(&c.source, &env)?;
    let primed = complex_side::<C>(target(c)?, &env)?;
    let lambda = Matrix::from_rows(parse_map(&c.map, "u", "w", src.n(), &env)?)?;
    let (invertible, residuals) = match primed.equivalence_residuals(&src, &lambda) {
        Ok(r) => (true, r),
        Err(Error::SingularChange) => (false, Vec::new()),
        Err(e) => return Err(e),
    };
    let residuals = residuals
        .iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .map(|(k, f)| render_complex("u", k, f, src.n()))
        .collect();
    Ok(Parts {
        invertible,
        source_integrable: src.is_valid() && primed.is_valid(),
        residuals,
        shape_errors: Vec::new(),
    })
}

fn reduction(c: &Certificate) -> Result<Parts> {
    let env = env_for::<Gauss>(&c.params)?;
    let src = complex_side::<Gauss>(&c.source, &env)?;
    let lambda = Matrix::from_rows(parse_map(&c.map, "t", "w", src.n(), &env)?)?;
    let new = match src.change_basis(&lambda, Direction::Forward) {
        Ok(e) => e,
        Err(Error::SingularChange) => {
            return Ok(Parts {
                invertible: false,
                source_integrable: src.is_valid(),
                residuals: Vec::new(),
                shape_errors: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let residuals = new
        .equivalence_residuals(&src, &lambda)?
        .iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .map(|(k, f)| render_complex("t", k, f, src.n()))
        .collect();
    let mut shape_errors = Vec::new();
    if let Some(t) = &c.target {
        let want = complex_side::<Gauss>(t, &env)?;
        for k in 0..want.n().min(new.n()) {
            let d = new.d(k).sub(want.d(k));
            if !d.is_zero() {
                shape_errors.push(render_complex("dt", k, &d, src.n()));
            }
        }
    }
    if !c.vanishing.is_empty() {
        match fit_generic(&new) {
            Ok(point) => {
                for name in &c.vanishing {
                    let v = point.get(name);
                    if !v.is_zero() {
                        shape_errors.push(format!("{name} = {}", crate::kernel::Scalar::render(&v)));
                    }
                }
            }
            Err(diff) => {
                for (k, mono, v) in diff {
                    shape_errors.push(format!(
                        "outside the generic shape: dt{k} has {} {mono}",
                        crate::kernel::Scalar::render(&v)
                    ));
                }
            }
        }
    }
    Ok(Parts {
        invertible: true,
        source_integrable: src.is_valid(),
        residuals,
        shape_errors,
    })
}

fn target(c: &Certificate) -> Result<&str> {
    c.target
        .as_deref()
        .ok_or_else(|| Error::InvalidParams(format!("certificate {} needs a target", c.id)))
}

/// Checks a certificate; `passed` requires an invertible map, an integrable source and no residuals.
pub fn verify(c: &Certificate) -> Result<Verdict> {
    use CertKind::*;
    use Ring::*;
    let parts = match (c.kind, c.ring) {
        (RealIso, Rational) => real_iso::<crate::kernel::Rational>(c),
        (RealIso, Radical) => real_iso::<QuadExt>(c),
        (RealIso, Symbolic) => real_iso::<RatFunc>(c),
        (Realification, Rational) => realification::<Gauss>(c),
        (Realification, Radical) => realification::<Complex<QuadExt>>(c),
        (Realification, Symbolic) => realification::<RatFunc>(c),
        (ComplexEquivalence, Rational) => complex_equivalence::<Gauss>(c),
        (ComplexEquivalence, Radical) => complex_equivalence::<Complex<QuadExt>>(c),
        (ComplexEquivalence, Symbolic) => complex_equivalence::<RatFunc>(c),
        (Reduction, Rational) => reduction(c),
        (Reduction, _) => Err(Error::Unsupported("reductions are checked over the Gaussian rationals".into())),
    }?;
    let passed = parts.invertible && parts.source_integrable && parts.residuals.is_empty() && parts.shape_errors.is_empty();
    Ok(Verdict {
        id: c.id.clone(),
        kind: c.kind,
        ring: c.ring,
        invertible: parts.invertible,
        source_integrable: parts.source_integrable,
        residuals: parts.residuals,
        shape_errors: parts.shape_errors,
        passed,
    })
}

/// The certificate with its first map line perturbed by the top source generator.
///
/// The first generator is closed on both sides, so the perturbation breaks `d` compatibility.
pub fn mutant(c: &Certificate) -> Certificate {
    let (target, source) = c.kind.prefixes();
    let top = match c.kind {
        CertKind::RealIso | CertKind::Realification => 8,
        _ => 4,
    };
    let head = format!("{target}1");
    let mut done = false;
    let map = c
        .map
        .lines()
        .map(|l| {
            let t = l.trim_start();
            let is_first = t
                .strip_prefix(&head)
                .map(|r| r.trim_start().starts_with('='))
                .unwrap_or(false);
            if is_first && !done {
                done = true;
                format!("{l} + {source}{top}")
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    Certificate {
        id: format!("{}-mutant", c.id),
        map,
        ..c.clone()
    }
}

fn cert(
    id: &str,
    kind: CertKind,
    ring: Ring,
    params: &[(&str, &str)],
    source: &str,
    map: &str,
    target: Option<&str>,
    vanishing: &[&str],
    note: &str,
) -> Certificate {
    Certificate {
        id: id.to_string(),
        kind,
        ring,
        params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        source: source.to_string(),
        map: map.to_string(),
        target: target.map(str::to_string),
        vanishing: vanishing.iter().map(|s| s.to_string()).collect(),
        note: note.to_string(),
    }
}

/// Tilde basis for the `g4` reduction: `de5 = 2e12`, `de6`, `de7`, `de8` in `rho`, `theta`.
const TILDE: &str = "(0^4, 2*12, 13+14+25+theta*15-rho*23, 15-23+24+rho*13+theta*25, 16+27+rho*35)";
const TILDE_NEG: &str = "(0^4, 2*12, 13+14+25+mt*15-mr*23, 15-23+24+mr*13+mt*25, 16+27+mr*35)";

const TILDE_MAP: &str = "\
w1 = d*e1 - i*e2
w2 = -e3 + i*d*e5
w3 = a*(d*e6 - i*e7)
w4 = (a/2*e4 - n*d*e5) + 2*d*a*i*e8";

const TO_G4: &str = "\
let r = sqrt(1 + theta)
v1 = -r*(e1 + e2)
v2 = -e2 + e1
v3 = -2/r*e4
v4 = -rho*e3
v5 = r*e5 + 1/r*e4
v6 = -e6 - e7
v7 = r*(e6 - e7)
v8 = 2*r*e8";

const G3_FLIP: &str = "v1 = e1\nv2 = -e2\nv3 = e3\nv4 = e4\nv5 = -e5\nv6 = e6\nv7 = -e7\nv8 = e8";
const G4_SWAP: &str = "v1 = e2\nv2 = e1\nv3 = e3\nv4 = -e4\nv5 = -e3 - e5\nv6 = e7\nv7 = e6\nv8 = e8";

const G3_TO_ZERO: &str = "\
let r = sqrt(1 - gamma^2)
let k = 2 - sqrt(3)
v1 = (r/(2*sqrt(3)))*((1 - r)*e1 + gamma*e2)
v2 = (-k*r/(2*sqrt(3)))*((1 + r)*e1 + gamma*e2)
v3 = -(k^2*r/12)*(gamma^2*e3 + (2 - gamma^2 + 2*r)*e4)
v4 = -(r/12)*(gamma^2*e3 + (2 - gamma^2 - 2*r)*e4)
v5 = -(gamma*k*r/12)*(gamma*(e3 + e4) - 2*(1 - gamma^2)*e5)
v6 = (gamma*r^3*k^2/(12*sqrt(3)))*(gamma*e6 - (1 + r)*e7)
v7 = (gamma*r^3*k/(12*sqrt(3)))*(gamma*e6 - (1 - r)*e7)
v8 = -(gamma^2*r^5*k^2/36)*e8";

const G3_TO_G2: &str = "\
let q = sqrt(gamma^2 - 1)
v1 = sqrt(6)*q*(e1 + gamma*e2)
v2 = -sqrt(6)*q^2*e1
v3 = -3*q*(gamma^2*e3 - (gamma^2 - 2)*e4)
v4 = 6*q^2*e4
v5 = 3*gamma*q*(gamma*e3 + gamma*e4 + 2*q^2*e5)
v6 = 6*sqrt(6)*gamma*q^4*e7
v7 = -6*sqrt(6)*gamma*q^3*(gamma*e6 - e7)
v8 = 36*gamma^2*q^5*e8";

const G3_REALIFY: &str = "\
w1 = 1/sqrt(2)*(d*e1 - i*e2)
w2 = -1/2*(e3 - e4) + i*d*e5
w3 = a/sqrt(2)*(d*e6 - i*e7)
w4 = a/4*(e3 + e4) + d*(-n*e5 + i*a*e8)";

const M1_REALIFY: &str = "\
w1 = -1/8*(e1 + i*e2)
w2 = 1/16*(e4 + i*e5)
w3 = -1/32*(e6 + i*e7)
w4 = -1/128*(32*e3 - i*e8)";

const M2_REALIFY: &str = "\
w1 = 1/(2*eta)*(-e1/sqrt(3) + i*e2)
w2 = 1/(2*eta^3)*(e4/3 - i*(e5/sqrt(3) - 2*a*eta^2*e2))
w3 = 1/(12*eta^4)*(-sqrt(3)*e6 + i*e7)
w4 = 1/(6*eta^5)*(-sqrt(3)*eta^3*e3 + i*(e8/2 - (b*eta/sqrt(3))*e6))";

const DIAG_I: &str = "u1 = c*w1\nu2 = l22*w2\nu3 = lam*c*w3\nu4 = lam*w4";
const TRI_II: &str = "\
u1 = k*w1
u2 = l21*w1 + lam*k*w2
u3 = l31*w1 + i*m*lam*l21*w2 + lam/conj(k)*w3
u4 = lam*w4";

/// The built-in suite.
pub fn certificates() -> Vec<Certificate> {
    use CertKind::*;
    use Ring::*;
    vec![
        cert(
            "reduce-t",
            Reduction,
            Rational,
            &[("B", "1"), ("E", "1"), ("t", "1"), ("P", "-i"), ("s", "1"), ("A", "1"), ("F", "1"), ("N", "1"), ("M", "-1"), ("L", "2")],
            "generic",
            "t1 = w1\nt2 = E*w2 - B*w3\nt3 = w3\nt4 = w4",
            None,
            &["t"],
            "removes the w3w3bar term when E is nonzero",
        ),
        cert(
            "reduce-t-swap",
            Reduction,
            Rational,
            &[("B", "1"), ("N", "1"), ("t", "1"), ("A", "1"), ("M", "i")],
            "generic",
            "t1 = w1\nt2 = w3\nt3 = w2\nt4 = w4",
            None,
            &["t"],
            "E = 0: exchanging w2 and w3",
        ),
        cert(
            "reduce-p",
            Reduction,
            Rational,
            &[("P", "1"), ("H", "i"), ("N", "1"), ("E", "i"), ("L", "2*i"), ("C", "1"), ("K", "1"), ("D", "1"), ("s", "1"), ("M", "1")],
            "generic",
            "t1 = N*w1 + P*w2\nt2 = w1\nt3 = w3\nt4 = w4",
            None,
            &["t", "P"],
            "removes P once t = 0",
        ),
        cert(
            "reduce-family-i",
            Reduction,
            Rational,
            &[("N", "1"), ("E", "i"), ("A", "1"), ("s", "1"), ("C", "1"), ("D", "1 - i"), ("M", "1"), ("F", "1")],
            "generic",
            "t1 = w1\nt2 = w2\nt3 = w3 + conj(M)/conj(N)*w2\nt4 = w4 - C/E*w2 + (M*conj(A) + N*conj(F))/(N*conj(E))*w1",
            None,
            &["B", "C", "H", "F", "M"],
            "B = 0 normalisation",
        ),
        cert(
            "reduce-scale",
            Reduction,
            Rational,
            &[("N", "1"), ("E", "-4*i"), ("A", "2"), ("s", "1"), ("D", "-2*i"), ("G", "1"), ("L", "1 + i")],
            "generic",
            "t1 = 2*w1\nt2 = 2*w2\nt3 = 1/2*w3\nt4 = i*w4",
            Some("dw1 = 0\ndw2 = w1~1\ndw3 = w14 + w1~4 - i/4*w1~2 + 1/8*w2~1\ndw4 = (-1 + i)/4*w1~1 - 1/4*w2~2 + i*(w1~3 - w3~1)"),
            &[],
            "diagonal rescaling to epsilon, delta, b",
        ),
        cert(
            "reduce-to-family-i",
            Reduction,
            Rational,
            &[],
            "dw1 = 0\ndw2 = w1~1\ndw3 = w14 + w1~4 + 2*i*w1~2 - 3*w2~1\ndw4 = (2 + 4*i)*w1~1 + 2*w2~2 + i*(w1~3 - w3~1)",
            "t1 = -i*w1\nt2 = w2\nt3 = -i/4*(w3 + i*w1)\nt4 = 1/4*w4",
            Some("family1(e=1, n=1, d=1, a=3/4, b=1/2)"),
            &[],
            "normalises L and the phase of G",
        ),
        cert(
            "equiv-i-eps1",
            ComplexEquivalence,
            Rational,
            &[("c", "i"), ("lam", "-2"), ("l22", "1")],
            "family1(e=1, n=0, d=1, a=2, b=3)",
            DIAG_I,
            Some("family1(e=1, n=0, d=1, a=4, b=-6)"),
            &[],
            "a' = a lam / (l22 c^-2), b' = b lam / |l22|^2",
        ),
        cert(
            "equiv-i-eps0",
            ComplexEquivalence,
            Rational,
            &[("c", "(3 + 4*i)/5"), ("lam", "1"), ("l22", "2*c^2")],
            "family1(e=0, n=1, d=-1, a=1, b=2)",
            DIAG_I,
            Some("family1(e=0, n=1, d=-1, a=1/2, b=1/2)"),
            &[],
            "",
        ),
        cert(
            "equiv-ii-100",
            ComplexEquivalence,
            Rational,
            &[("m", "0"), ("k", "1"), ("lam", "1/3"), ("l21", "0"), ("l31", "0")],
            "family2(e=1, m=0, n=0, a=3, b=2)",
            TRI_II,
            Some("family2(e=1, m=0, n=0, a=1, b=2)"),
            &[],
            "a -> lam a",
        ),
        cert(
            "equiv-ii-010",
            ComplexEquivalence,
            Rational,
            &[("m", "1"), ("b", "3"), ("k", "2"), ("lam", "1/k^2"), ("l21", "-i*b/(2*k)"), ("l31", "i*b^2/(8*k^3)")],
            "family2(e=0, m=1, n=0, a=32, b=b)",
            TRI_II,
            Some("family2(e=0, m=1, n=0, a=1, b=0)"),
            &[],
            "a -> a/k^5 and b removed",
        ),
        cert(
            "equiv-ii-010-a0",
            ComplexEquivalence,
            Rational,
            &[("m", "1"), ("b", "5"), ("k", "1"), ("lam", "1"), ("l21", "-i*b/2"), ("l31", "i*b^2/8")],
            "family2(e=0, m=1, n=0, a=0, b=b)",
            TRI_II,
            Some("family2(e=0, m=1, n=0, a=0, b=0)"),
            &[],
            "",
        ),
        cert(
            "iso-g3-sign",
            RealIso,
            Symbolic,
            &[],
            "g3",
            G3_FLIP,
            Some("g3(gamma=-gamma)"),
            &[],
            "gamma and -gamma give isomorphic algebras",
        ),
        cert(
            "iso-g3-small",
            RealIso,
            Radical,
            &[("gamma", "3/5")],
            "g3",
            G3_TO_ZERO,
            Some("g3(gamma=0)"),
            &[],
            "0 < gamma < 1",
        ),
        cert(
            "iso-g3-large",
            RealIso,
            Radical,
            &[("gamma", "5/4")],
            "g3",
            G3_TO_G2,
            Some("g2(alpha=0)"),
            &[],
            "gamma > 1",
        ),
        cert(
            "iso-tilde-flip",
            RealIso,
            Symbolic,
            &[("mr", "-rho"), ("mt", "-theta")],
            TILDE,
            G3_FLIP,
            Some(TILDE_NEG),
            &[],
            "(theta, rho) -> (-theta, -rho)",
        ),
        cert(
            "iso-tilde-g4",
            RealIso,
            Radical,
            &[("rho", "2"), ("theta", "3")],
            TILDE,
            TO_G4,
            Some("g4(eta=1/rho, theta=theta)"),
            &[],
            "",
        ),
        cert(
            "iso-tilde-g4-radical",
            RealIso,
            Radical,
            &[("rho", "-1/3"), ("theta", "1/2")],
            TILDE,
            TO_G4,
            Some("g4(eta=1/rho, theta=theta)"),
            &[],
            "",
        ),
        cert(
            "iso-g4-sign",
            RealIso,
            Symbolic,
            &[],
            "g4(eta=eta, theta=0)",
            G4_SWAP,
            Some("g4(eta=-eta, theta=0)"),
            &[],
            "eta and -eta give isomorphic algebras when theta = 0",
        ),
        cert(
            "realify-tilde",
            Realification,
            Symbolic,
            &[("e", "1"), ("n", "1"), ("d", "1"), ("rho", "b/a"), ("theta", "(b - 2*n*d)/a")],
            "family1",
            TILDE_MAP,
            Some(TILDE),
            &[],
            "epsilon = 1 structures in the tilde basis, a and b free",
        ),
        cert(
            "realify-tilde-n0",
            Realification,
            Symbolic,
            &[("e", "1"), ("n", "0"), ("d", "-1"), ("rho", "b/a"), ("theta", "(b - 2*n*d)/a")],
            "family1",
            TILDE_MAP,
            Some(TILDE),
            &[],
            "",
        ),
        cert(
            "realify-g3",
            Realification,
            Radical,
            &[("e", "1"), ("n", "1"), ("d", "1"), ("a", "3"), ("b", "0")],
            "family1",
            G3_REALIFY,
            Some("g3(gamma=-2*d*n/a)"),
            &[],
            "epsilon = 1, b = 0",
        ),
        cert(
            "realify-g3-neg",
            Realification,
            Radical,
            &[("e", "1"), ("n", "1"), ("d", "-1"), ("a", "1/2"), ("b", "0")],
            "family1",
            G3_REALIFY,
            Some("g3(gamma=-2*d*n/a)"),
            &[],
            "",
        ),
        cert(
            "realify-m1",
            Realification,
            Symbolic,
            &[("e", "0"), ("m", "1"), ("n", "0"), ("b", "0")],
            "family2",
            M1_REALIFY,
            Some("g9(gamma=a)"),
            &[],
            "mu = 1 structures, any a",
        ),
        cert(
            "realify-m2-b0",
            Realification,
            Radical,
            &[("e", "1"), ("m", "0"), ("n", "0"), ("a", "1"), ("b", "0"), ("eta", "1")],
            "family2",
            M2_REALIFY,
            Some("g10(gamma=0)"),
            &[],
            "",
        ),
        cert(
            "realify-m2",
            Realification,
            Radical,
            &[("e", "1"), ("m", "0"), ("n", "0"), ("a", "0"), ("b", "3"), ("eta", "-sqrt(3)/(4*b)")],
            "family2",
            M2_REALIFY,
            Some("g10(gamma=1)"),
            &[],
            "b nonzero",
        ),
    ]
}

/// Plain helper for the CLI: verify a JSON certificate or a list of them.
pub fn verify_json(src: &str) -> Result<Vec<Verdict>> {
    let certs: Vec<Certificate> = match serde_json::from_str::<Vec<Certificate>>(src) {
        Ok(v) => v,
        Err(_) => vec![serde_json::from_str::<Certificate>(src)?],
    };
    certs.iter().map(verify).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn call_syntax() {
        let (n, a) = split_call("g4(eta=1/rho, theta=sqrt(2))").unwrap();
        assert_eq!(n, "g4");
        assert_eq!(a, vec![("eta", "1/rho"), ("theta", "sqrt(2)")]);
        assert_eq!(split_call("g3").unwrap().1, vec![]);
        assert!(split_call("(0,0,12)").is_none());
    }

    #[test]
    fn suite_verifies_and_mutants_fail() {
        let mut bad = Vec::new();
        for c in certificates() {
            let v = verify(&c).unwrap_or_else(|e| panic!("{}: {e}", c.id));
            if !v.passed {
                bad.push(format!("{v:?}"));
            }
            let m = verify(&mutant(&c));
            if matches!(m, Ok(ref v) if v.passed) {
                bad.push(format!("mutant of {} passes", c.id));
            }
        }
        assert!(bad.is_empty(), "{}", bad.join("\n"));
    }

    #[test]
    fn json_roundtrip() {
        let c = &certificates()[0];
        let s = serde_json::to_string(c).unwrap();
        assert_eq!(&serde_json::from_str::<Certificate>(&s).unwrap(), c);
        assert!(verify_json(&s).unwrap()[0].passed);
    }
}
