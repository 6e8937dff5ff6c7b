//! Abbreviated notation `(0^4, 12, 13+15+24, ...)` for `de^1, ..., de^n`.

use super::expr::{eval, Env, Expr, Parser, Pos};
use super::lexer::{tokenize, Tok};
use crate::error::{Error, Result};
use crate::exterior::Form;
use crate::kernel::{EvalScalar, Scalar};
use crate::lie::LieAlgebra;

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub negative: bool,
    pub coeff: Option<Expr>,
    pub i: usize,
    pub j: usize,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Entry {
    Zeros(usize),
    Sum(Vec<Term>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealNotation {
    pub entries: Vec<Entry>,
}

impl RealNotation {
    pub fn dim(&self) -> usize {
        self.entries
            .iter()
            .map(|e| match e {
                Entry::Zeros(k) => *k,
                Entry::Sum(_) => 1,
            })
            .sum()
    }

    pub fn print(&self) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| match e {
                Entry::Zeros(1) => "0".to_string(),
                Entry::Zeros(k) => format!("0^{k}"),
                Entry::Sum(ts) => {
                    let mut s = String::new();
                    for (n, t) in ts.iter().enumerate() {
                        if t.negative {
                            s.push('-');
                        } else if n > 0 {
                            s.push('+');
                        }
                        if let Some(c) = &t.coeff {
                            if c.is_sum() || c.is_negated() {
                                s.push_str(&format!("({})*", c.print()));
                            } else {
                                s.push_str(&format!("{}*", c.print()));
                            }
                        }
                        s.push_str(&index_text(t.i, t.j));
                    }
                    s
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }

    /// Evaluates coefficients and builds the algebra.
    pub fn to_algebra<S: EvalScalar>(&self, env: &Env<S>) -> Result<LieAlgebra<S>> {
        let n = self.dim();
        let mut de = Vec::with_capacity(n);
        for e in &self.entries {
            match e {
                Entry::Zeros(k) => de.extend((0..*k).map(|_| Form::zero())),
                Entry::Sum(ts) => {
                    let mut f = Form::zero();
                    for t in ts {
                        if t.i >= t.j {
                            return Err(Error::IndexOrder { i: t.i, j: t.j });
                        }
                        if t.j > n {
                            return Err(Error::Parse {
                                line: t.pos.line,
                                col: t.pos.col,
                                msg: format!("index {} exceeds dimension {n}", t.j),
                            });
                        }
                        let mut c = match &t.coeff {
                            Some(x) => eval(x, env)?,
                            None => S::one(),
                        };
                        if t.negative {
                            c = -c;
                        }
                        f.add_term((1 << (t.i - 1)) | (1 << (t.j - 1)), c);
                    }
                    de.push(f);
                }
            }
        }
        LieAlgebra::from_differentials(n, &de)
    }
}

fn index_text(i: usize, j: usize) -> String {
    if i <= 9 && j <= 9 {
        format!("{i}{j}")
    } else {
        format!("({i},{j})")
    }
}

fn index_ahead(p: &Parser) -> bool {
    match p.peek() {
        Tok::Num(s) => {
            s.len() == 2 && !matches!(p.peek_at(1), Tok::Star | Tok::Slash | Tok::Caret)
        }
        Tok::LParen => {
            matches!(p.peek_at(1), Tok::Num(_)) && matches!(p.peek_at(2), Tok::Comma)
        }
        _ => false,
    }
}

fn parse_index(p: &mut Parser) -> Result<(usize, usize)> {
    match p.peek().clone() {
        Tok::Num(s) => {
            let d: Vec<usize> = s.bytes().map(|b| (b - b'0') as usize).collect();
            if d.contains(&0) {
                return p.error(format!("index `{s}` contains 0"));
            }
            p.bump();
            Ok((d[0], d[1]))
        }
        _ => {
            p.bump();
            let read = |p: &mut Parser| -> Result<usize> {
                match p.bump().tok {
                    Tok::Num(s) => s
                        .parse()
                        .ok()
                        .filter(|x| *x > 0)
                        .map_or_else(|| p.error("index must be positive"), Ok),
                    _ => p.error("expected index"),
                }
            };
            let i = read(p)?;
            p.expect(Tok::Comma, "`,`")?;
            let j = read(p)?;
            p.expect(Tok::RParen, "`)`")?;
            Ok((i, j))
        }
    }
}

fn parse_term(p: &mut Parser, negative: bool) -> Result<Term> {
    let pos = p.here();
    let mut coeff: Option<Expr> = None;
    let mut div = false;
    loop {
        if index_ahead(p) {
            let (i, j) = parse_index(p)?;
            if i >= j {
                return Err(Error::IndexOrder { i, j });
            }
            return Ok(Term {
                negative,
                coeff,
                i,
                j,
                pos,
            });
        }
        let f = p.parse_power()?;
        coeff = Some(match coeff {
            None => f,
            Some(c) if div => Expr::Div(Box::new(c), Box::new(f)),
            Some(c) => Expr::Mul(Box::new(c), Box::new(f)),
        });
        match p.peek() {
            Tok::Star => div = false,
            Tok::Slash => div = true,
            _ => return p.error("a term must end with an index such as `12` or `(1,10)`"),
        }
        p.bump();
    }
}

fn parse_entry(p: &mut Parser) -> Result<Entry> {
    if let Tok::Num(s) = p.peek().clone() {
        if s == "0" {
            p.bump();
            if *p.peek() == Tok::Caret {
                p.bump();
                return match p.bump().tok {
                    Tok::Num(k) => Ok(Entry::Zeros(k.parse().unwrap_or(0).max(1))),
                    _ => p.error("expected a repeat count after `0^`"),
                };
            }
            return Ok(Entry::Zeros(1));
        }
    }
    let mut terms = Vec::new();
    let mut negative = match p.peek() {
        Tok::Minus => {
            p.bump();
            true
        }
        Tok::Plus => {
            p.bump();
            false
        }
        _ => false,
    };
    loop {
        terms.push(parse_term(p, negative)?);
        match p.peek() {
            Tok::Plus => negative = false,
            Tok::Minus => negative = true,
            _ => return Ok(Entry::Sum(terms)),
        }
        p.bump();
    }
}

pub fn parse_real(src: &str) -> Result<RealNotation> {
    let toks: Vec<_> = tokenize(src)?
        .into_iter()
        .filter(|t| t.tok != Tok::Newline)
        .collect();
    let mut p = Parser::new(toks);
    p.expect(Tok::LParen, "`(`")?;
    let mut entries = vec![parse_entry(&mut p)?];
    while *p.peek() == Tok::Comma {
        p.bump();
        entries.push(parse_entry(&mut p)?);
    }
    p.expect(Tok::RParen, "`)`")?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(RealNotation { entries })
}

/// Parses and evaluates in one step.
pub fn parse_algebra<S: EvalScalar>(src: &str, env: &Env<S>) -> Result<LieAlgebra<S>> {
    parse_real(src)?.to_algebra(env)
}

/// Canonical abbreviated notation of an algebra, with rendered coefficients.
pub fn print_algebra<S: Scalar>(g: &LieAlgebra<S>) -> String {
    let n = g.dim();
    let mut parts: Vec<String> = Vec::new();
    let mut zeros = 0usize;
    let flush = |zeros: &mut usize, parts: &mut Vec<String>| {
        if *zeros == 1 {
            parts.push("0".into());
        } else if *zeros > 1 {
            parts.push(format!("0^{zeros}"));
        }
        *zeros = 0;
    };
    for k in 0..n {
        let f = g.differential(k);
        if f.is_zero() {
            zeros += 1;
            continue;
        }
        flush(&mut zeros, &mut parts);
        let mut s = String::new();
        let mut terms: Vec<_> = f
            .terms()
            .map(|(bits, c)| (bits.trailing_zeros() as usize + 1, 32 - bits.leading_zeros() as usize, c))
            .collect();
        terms.sort_by_key(|t| (t.0, t.1));
        for (i, j, c) in terms {
            let idx = index_text(i, j);
            let neg_one = (-c.clone()).is_one();
            let r = c.render();
            let (neg, body) = if c.is_one() {
                (false, idx)
            } else if neg_one {
                (true, idx)
            } else if c.is_compound() {
                (false, format!("({r})*{idx}"))
            } else if let Some(rest) = r.strip_prefix('-') {
                (true, format!("{rest}*{idx}"))
            } else {
                (false, format!("{r}*{idx}"))
            };
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            s.push_str(&body);
        }
        parts.push(s);
    }
    flush(&mut zeros, &mut parts);
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, Rational};

    #[test]
    fn roundtrip_canonical() {
        for s in [
            "(0^5, 13+15+24, 14-23+25, 16+27+gamma*34)",
            "(0^4, 12, 15+(alpha+1)*24, (alpha-1)*14-23+(beta-1)*25, 16+27+34-2*45)",
            "(0^3, 13, 23, 14+25-35, alpha*12+15+24+34, 16+27-45-2*beta*25-beta*35)",
            "(0^8)",
            "(0, (1,10))",
        ] {
            assert_eq!(parse_real(s).unwrap().print(), s);
        }
    }

    #[test]
    fn heisenberg() {
        let g: LieAlgebra<Rational> = parse_algebra("(0,0,12)", &Env::new(None)).unwrap();
        assert_eq!(g.constant(0, 1, 2), int(1));
        assert_eq!(print_algebra(&g), "(0^2, 12)");
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_real("(0, 21)").unwrap_err(),
            Error::IndexOrder { i: 2, j: 1 }
        );
        let e = parse_algebra::<Rational>("(0,0,14)", &Env::new(None)).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, col: 6, .. }));
        assert!(matches!(parse_real("(0, 1+)"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_algebra::<Rational>("(0^5, 13+15+24, 14-23+25, 16+27+g*34)", &Env::new(None)),
            Err(Error::MissingParameter(_))
        ));
    }

    #[test]
    fn coefficients() {
        let env = Env::new(None).with("h", int(2));
        let g: LieAlgebra<Rational> = parse_algebra("(0^4, 2*12, 0, 0, -h/2*45)", &env).unwrap();
        assert_eq!(g.constant(0, 1, 4), int(2));
        assert_eq!(g.constant(3, 4, 7), int(-1));
        assert_eq!(print_algebra(&g), "(0^4, 2*12, 0^2, -45)");
    }
}
