//! The twelve real families `g1..g12` and their aliases `n1..n8`, `m1..m4`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::EvalScalar;
use crate::lie::LieAlgebra;
use crate::parse::{parse_algebra, Env};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    None,
    /// A single parameter in `{0, 1}`.
    Binary,
    /// A single real parameter.
    Real,
    /// `R* x R>0` or `R>0 x {0}`.
    G4,
    /// `{(0,0), (1,0)}` or `R>=0 x {1}`.
    G11,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSpec {
    pub name: &'static str,
    pub alias: &'static str,
    pub params: &'static [&'static str],
    /// Parameter names used with the alias, same order.
    pub alias_params: &'static [&'static str],
    pub notation: &'static str,
    pub domain: Domain,
}

const GAMMA: &[&str] = &["gamma"];

pub const ALGEBRAS: [AlgebraSpec; 12] = [
    AlgebraSpec {
        name: "g1",
        alias: "n1",
        params: GAMMA,
        alias_params: GAMMA,
        notation: "(0^5, 13+15+24, 14-23+25, 16+27+gamma*34)",
        domain: Domain::Binary,
    },
    AlgebraSpec {
        name: "g2",
        alias: "n2",
        params: &["alpha"],
        alias_params: &["alpha"],
        notation: "(0^4, 12, 13+15+24, 14-23+25, 16+27+alpha*34)",
        domain: Domain::Real,
    },
    AlgebraSpec {
        name: "g3",
        alias: "n3",
        params: GAMMA,
        alias_params: GAMMA,
        notation: "(0^4, 12, 13+gamma*15+25, 15+24+gamma*25, 16+27)",
        domain: Domain::Binary,
    },
    AlgebraSpec {
        name: "g4",
        alias: "n4",
        params: &["alpha", "beta"],
        alias_params: &["eta", "theta"],
        notation: "(0^4, 12, 15+(alpha+1)*24, (alpha-1)*14-23+(beta-1)*25, 16+27+34-2*45)",
        domain: Domain::G4,
    },
    AlgebraSpec {
        name: "g5",
        alias: "n5",
        params: &[],
        alias_params: &[],
        notation: "(0^4, 2*12, 14-23, 13+24, 16+27+35)",
        domain: Domain::None,
    },
    AlgebraSpec {
        name: "g6",
        alias: "n6",
        params: &[],
        alias_params: &[],
        notation: "(0^4, 2*12, 14+15-23, 13+24+25, 16+27+35)",
        domain: Domain::None,
    },
    AlgebraSpec {
        name: "g7",
        alias: "n7",
        params: &[],
        alias_params: &[],
        notation: "(0^5, 15, 25, 16+27+34)",
        domain: Domain::None,
    },
    AlgebraSpec {
        name: "g8",
        alias: "n8",
        params: &[],
        alias_params: &[],
        notation: "(0^4, 12, 15, 25, 16+27+34)",
        domain: Domain::None,
    },
    AlgebraSpec {
        name: "g9",
        alias: "m1",
        params: GAMMA,
        alias_params: GAMMA,
        notation: "(0^3, 13, 23, 35, gamma*12-34, 16+27+45)",
        domain: Domain::Binary,
    },
    AlgebraSpec {
        name: "g10",
        alias: "m2",
        params: GAMMA,
        alias_params: GAMMA,
        notation: "(0^3, 13, 23, 14+25, 15+24, 16+gamma*25+27)",
        domain: Domain::Binary,
    },
    AlgebraSpec {
        name: "g11",
        alias: "m3",
        params: &["alpha", "beta"],
        alias_params: &["alpha", "beta"],
        notation: "(0^3, 13, 23, 14+25-35, alpha*12+15+24+34, 16+27-45-2*beta*25-beta*35)",
        domain: Domain::G11,
    },
    AlgebraSpec {
        name: "g12",
        alias: "m4",
        params: GAMMA,
        alias_params: GAMMA,
        notation: "(0^2, 12, 13, 23, 14+25, 15+24, 16+27+gamma*25)",
        domain: Domain::Binary,
    },
];

/// Looks up a family by its `g`, `n` or `m` name.
pub fn spec(name: &str) -> Result<&'static AlgebraSpec> {
    ALGEBRAS
        .iter()
        .find(|s| s.name == name || s.alias == name)
        .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
}

/// Sign when it can be decided: `None` for symbolic values.
fn known_sign<S: EvalScalar>(x: &S) -> Option<i8> {
    let s = x.try_sign().ok()?;
    if s.is_zero() {
        Some(0)
    } else if s == S::one() {
        Some(1)
    } else if s == -S::one() {
        Some(-1)
    } else {
        None
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParams(msg)
}

fn check_domain<S: EvalScalar>(spec: &AlgebraSpec, vals: &[S]) -> Result<()> {
    let signs: Vec<Option<i8>> = vals.iter().map(known_sign).collect();
    match spec.domain {
        Domain::None | Domain::Real => Ok(()),
        Domain::Binary => {
            let x = &vals[0];
            if signs[0].is_none() || x.is_zero() || *x == S::one() {
                Ok(())
            } else {
                Err(invalid(format!("{}: {} must be 0 or 1", spec.name, spec.params[0])))
            }
        }
        Domain::G4 => match (signs[0], signs[1]) {
            (Some(a), Some(b)) if !((a != 0 && b > 0) || (a > 0 && b == 0)) => Err(invalid(format!(
                "{}: (alpha, beta) must lie in R* x R>0 or R>0 x {{0}}",
                spec.name
            ))),
            _ => Ok(()),
        },
        Domain::G11 => {
            let (a, b) = (&vals[0], &vals[1]);
            match (signs[0], signs[1]) {
                (Some(sa), Some(_)) => {
                    let ok = (*b == S::one() && sa >= 0)
                        || (b.is_zero() && (a.is_zero() || *a == S::one()));
                    if ok {
                        Ok(())
                    } else {
                        Err(invalid(format!(
                            "{}: (alpha, beta) must be (0,0), (1,0) or lie in R>=0 x {{1}}",
                            spec.name
                        )))
                    }
                }
                _ => Ok(()),
            }
        }
    }
}

/// Ordered parameter values for `spec`, accepting either naming.
fn ordered<S: Clone>(spec: &AlgebraSpec, params: &[(&str, S)]) -> Result<Vec<S>> {
    for (k, _) in params {
        if !spec.params.contains(k) && !spec.alias_params.contains(k) {
            return Err(invalid(format!("{} has no parameter `{k}`", spec.name)));
        }
    }
    spec.params
        .iter()
        .zip(spec.alias_params)
        .map(|(p, q)| {
            params
                .iter()
                .find(|(k, _)| k == p || k == q)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::MissingParameter(format!("{}: {p}", spec.name)))
        })
        .collect()
}

/// The presented structure constants of a catalog algebra.
///
/// Parameters may be given under the `g` or the alias names; values without a decidable
/// sign (symbols) skip the domain check.
pub fn real_algebra<S: EvalScalar>(name: &str, params: &[(&str, S)]) -> Result<LieAlgebra<S>> {
    let spec = spec(name)?;
    check_domain(spec, &ordered(spec, params)?)?;
    presented(name, params)
}

/// Same as [`real_algebra`] without the domain check, for the whole parameter line.
pub fn presented<S: EvalScalar>(name: &str, params: &[(&str, S)]) -> Result<LieAlgebra<S>> {
    let spec = spec(name)?;
    let vals = ordered(spec, params)?;
    let mut env = Env::new(vals.first().and_then(|v| v.ring_tag()));
    for (p, v) in spec.params.iter().zip(vals) {
        env.bind(p, v);
    }
    parse_algebra(spec.notation, &env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, rat, Rational};
    use crate::parse::print_algebra;

    fn r(name: &str, ps: &[(&str, Rational)]) -> Result<LieAlgebra<Rational>> {
        real_algebra(name, ps)
    }

    #[test]
    fn all_presented_algebras_satisfy_jacobi() {
        let samples: [(&str, Vec<(&str, Rational)>); 12] = [
            ("g1", vec![("gamma", int(1))]),
            ("g2", vec![("alpha", rat(-3, 2))]),
            ("g3", vec![("gamma", int(1))]),
            ("g4", vec![("alpha", int(2)), ("beta", rat(1, 3))]),
            ("g5", vec![]),
            ("g6", vec![]),
            ("g7", vec![]),
            ("g8", vec![]),
            ("g9", vec![("gamma", int(1))]),
            ("g10", vec![("gamma", int(1))]),
            ("g11", vec![("alpha", int(5)), ("beta", int(1))]),
            ("g12", vec![("gamma", int(1))]),
        ];
        for (name, ps) in samples {
            let g = r(name, &ps).unwrap();
            assert_eq!(g.dim(), 8);
            assert!(g.jacobi_check().passes(), "{name}");
        }
    }

    #[test]
    fn aliases_and_printing() {
        assert_eq!(print_algebra(&r("n5", &[]).unwrap()), "(0^4, 2*12, 14-23, 13+24, 16+27+35)");
        let m4 = r("m4", &[("gamma", int(1))]).unwrap();
        assert_eq!(print_algebra(&m4), "(0^2, 12, 13, 23, 14+25, 15+24, 16+25+27)");
        let a = r("n4", &[("eta", int(2)), ("theta", int(1))]).unwrap();
        let b = r("g4", &[("alpha", int(2)), ("beta", int(1))]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn domains() {
        assert!(matches!(r("g4", &[("alpha", int(-1)), ("beta", int(0))]), Err(Error::InvalidParams(_))));
        assert!(r("g4", &[("alpha", int(1)), ("beta", int(0))]).is_ok());
        assert!(matches!(r("g1", &[("gamma", int(2))]), Err(Error::InvalidParams(_))));
        assert!(matches!(r("g11", &[("alpha", int(2)), ("beta", int(0))]), Err(Error::InvalidParams(_))));
        assert!(matches!(r("g11", &[("alpha", int(-1)), ("beta", int(1))]), Err(Error::InvalidParams(_))));
        assert!(r("g11", &[("alpha", int(0)), ("beta", int(1))]).is_ok());
        assert!(matches!(r("g1", &[]), Err(Error::MissingParameter(_))));
        assert!(matches!(r("g13", &[]), Err(Error::UnknownAlgebra(_))));
    }
}
