//! Complex structure equations: `dw2 = e*w1~1; dw3 = w14 + w1~4 + ...`.

use super::expr::{describe, eval_value, Env, Expr, Parser, Pos, Value};
use super::lexer::{tokenize, Tok};
use crate::complex::ComplexStructEqs;
use crate::error::{Error, Result};
use crate::exterior::{wedge_sign, Form};
use crate::kernel::{Conjugate, EvalScalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Statement {
    pub k: usize,
    pub rhs: Expr,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexEqAst {
    pub statements: Vec<Statement>,
}

/// A parsed monomial `w<i><j>` with conjugation flags, 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mono {
    pub i: usize,
    pub i_bar: bool,
    pub j: usize,
    pub j_bar: bool,
}

pub fn parse_mono(name: &str) -> Option<Mono> {
    let rest = name.strip_prefix('w')?;
    let mut items = Vec::new();
    let mut bar = false;
    for c in rest.chars() {
        match c {
            '~' if !bar => bar = true,
            '1'..='9' => {
                items.push(((c as u8 - b'0') as usize, bar));
                bar = false;
            }
            _ => return None,
        }
    }
    if bar || items.len() != 2 {
        return None;
    }
    Some(Mono {
        i: items[0].0,
        i_bar: items[0].1,
        j: items[1].0,
        j_bar: items[1].1,
    })
}

fn collect_monos(e: &Expr, out: &mut Vec<(Mono, String, Pos)>) {
    match e {
        Expr::Var(s, p) => {
            if let Some(m) = parse_mono(s) {
                out.push((m, s.clone(), *p));
            }
        }
        Expr::Neg(a) | Expr::Pow(a, _, _) | Expr::Call(_, a) => collect_monos(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            collect_monos(a, out);
            collect_monos(b, out);
        }
        Expr::Num(_) | Expr::Imag => {}
    }
}

impl ComplexEqAst {
    /// Complex dimension: the largest generator index mentioned.
    pub fn n(&self) -> usize {
        let mut n = self.statements.iter().map(|s| s.k).max().unwrap_or(0);
        for s in &self.statements {
            let mut ms = Vec::new();
            collect_monos(&s.rhs, &mut ms);
            for (m, _, _) in ms {
                n = n.max(m.i).max(m.j);
            }
        }
        n
    }

    pub fn print(&self) -> String {
        self.statements
            .iter()
            .map(|s| format!("dw{} = {}", s.k, s.rhs.print()))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_eqs<S: EvalScalar + Conjugate>(&self, env: &Env<S>) -> Result<ComplexStructEqs<S>> {
        let n = self.n();
        let mut d = vec![Form::zero(); n];
        let atom = |name: &str, p: Pos| -> Option<Result<Vec<(u32, S)>>> {
            let m = parse_mono(name)?;
            if m.i_bar && m.j_bar {
                return Some(Err(Error::Integrability {
                    line: p.line,
                    col: p.col,
                    monomial: name.to_string(),
                }));
            }
            let a = if m.i_bar { n + m.i - 1 } else { m.i - 1 };
            let b = if m.j_bar { n + m.j - 1 } else { m.j - 1 };
            Some(Ok(match wedge_sign(1 << a, 1 << b) {
                None => Vec::new(),
                Some(neg) => vec![((1u32 << a) | (1 << b), if neg { -S::one() } else { S::one() })],
            }))
        };
        for s in &self.statements {
            if d[s.k - 1].len() > 0 {
                return Err(Error::Parse {
                    line: s.pos.line,
                    col: s.pos.col,
                    msg: format!("dw{} defined twice", s.k),
                });
            }
            let f = match eval_value(&s.rhs, env, &atom)? {
                Value::Lin(m) => Form::from_terms(m),
                Value::Scalar(c) if c.is_zero() => Form::zero(),
                Value::Scalar(_) => {
                    return Err(Error::Parse {
                        line: s.pos.line,
                        col: s.pos.col,
                        msg: "right-hand side must be a 2-form".into(),
                    })
                }
            };
            d[s.k - 1] = f;
        }
        ComplexStructEqs::new(n, d)
    }
}

fn parse_head(p: &mut Parser) -> Result<usize> {
    match p.peek().clone() {
        Tok::Ident(s) => {
            let k = s
                .strip_prefix("dw")
                .and_then(|r| r.parse::<usize>().ok())
                .filter(|k| *k > 0);
            match k {
                Some(k) => {
                    p.bump();
                    Ok(k)
                }
                None => p.error(format!("expected `dw<k>`, found `{s}`")),
            }
        }
        t => p.error(format!("expected `dw<k>`, found {}", describe(&t))),
    }
}

pub fn parse_complex(src: &str) -> Result<ComplexEqAst> {
    let mut p = Parser::new(tokenize(src)?);
    let mut statements = Vec::new();
    loop {
        while matches!(p.peek(), Tok::Newline | Tok::Semi) {
            p.bump();
        }
        if *p.peek() == Tok::Eof {
            break;
        }
        let pos = p.here();
        let k = parse_head(&mut p)?;
        p.expect(Tok::Eq, "`=`")?;
        let rhs = p.parse_expr()?;
        let mut ms = Vec::new();
        collect_monos(&rhs, &mut ms);
        if let Some((_, name, at)) = ms.iter().find(|(m, _, _)| m.i_bar && m.j_bar) {
            return Err(Error::Integrability {
                line: at.line,
                col: at.col,
                monomial: name.clone(),
            });
        }
        statements.push(Statement { k, rhs, pos });
        match p.peek() {
            Tok::Newline | Tok::Semi | Tok::Eof => {}
            t => return p.error(format!("unexpected {}", describe(t))),
        }
    }
    Ok(ComplexEqAst { statements })
}

/// Parses and evaluates complex structure equations.
pub fn parse_eqs<S: EvalScalar + Conjugate>(src: &str, env: &Env<S>) -> Result<ComplexStructEqs<S>> {
    parse_complex(src)?.to_eqs(env)
}
