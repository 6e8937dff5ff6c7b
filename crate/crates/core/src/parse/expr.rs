use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::lexer::{Tok, Token};
use crate::error::{Error, Result};
use crate::kernel::rational::Rational;
use crate::kernel::{pow, EvalScalar, Radicands};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Abs,
    Sign,
    Conj,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
            Func::Sign => "sign",
            Func::Conj => "conj",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        match s {
            "sqrt" => Some(Func::Sqrt),
            "abs" => Some(Func::Abs),
            "sign" => Some(Func::Sign),
            "conj" => Some(Func::Conj),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Var(String, Pos),
    Imag,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Exponent `num/den` with `den` in `{1, 2}`.
    Pow(Box<Expr>, u32, u32),
    Call(Func, Box<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    pub fn is_sum(&self) -> bool {
        self.prec() == 1
    }

    pub fn is_negated(&self) -> bool {
        matches!(self, Expr::Neg(_))
    }

    /// Canonical text with minimal parentheses and no spaces.
    pub fn print(&self) -> String {
        let wrap = |e: &Expr, min: u8| {
            if e.prec() < min {
                format!("({})", e.print())
            } else {
                e.print()
            }
        };
        match self {
            Expr::Num(n) => n.to_string(),
            Expr::Var(s, _) => s.clone(),
            Expr::Imag => "i".into(),
            Expr::Neg(e) => format!("-{}", wrap(e, 3)),
            Expr::Add(a, b) => format!("{}+{}", wrap(a, 1), wrap(b, 2)),
            Expr::Sub(a, b) => format!("{}-{}", wrap(a, 1), wrap(b, 2)),
            Expr::Mul(a, b) => format!("{}*{}", wrap(a, 2), wrap(b, 3)),
            Expr::Div(a, b) => format!("{}/{}", wrap(a, 2), wrap(b, 3)),
            Expr::Pow(a, n, 1) => format!("{}^{n}", wrap(a, 5)),
            Expr::Pow(a, n, d) => format!("{}^({n}/{d})", wrap(a, 5)),
            Expr::Call(f, a) => format!("{}({})", f.name(), a.print()),
        }
    }
}

pub struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub fn new(toks: Vec<Token>) -> Self {
        Parser { toks, pos: 0 }
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    pub fn here(&self) -> Pos {
        let t = &self.toks[self.pos];
        Pos {
            line: t.line,
            col: t.col,
        }
    }

    pub fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        let p = self.here();
        Err(Error::Parse {
            line: p.line,
            col: p.col,
            msg: msg.into(),
        })
    }

    pub fn expect(&mut self, t: Tok, what: &str) -> Result<Token> {
        if *self.peek() == t {
            Ok(self.bump())
        } else {
            self.error(format!("expected {what}, found {}", describe(self.peek())))
        }
    }

    pub fn skip_newlines(&mut self) {
        while matches!(self.peek(), Tok::Newline) {
            self.bump();
        }
    }

    pub fn parse_expr(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let r = self.parse_term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(r));
                }
                Tok::Minus => {
                    self.bump();
                    let r = self.parse_term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(r));
                }
                _ => return Ok(lhs),
            }
        }
    }

    pub fn parse_term(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let r = self.parse_unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(r));
                }
                Tok::Slash => {
                    self.bump();
                    let r = self.parse_unary()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(r));
                }
                _ => return Ok(lhs),
            }
        }
    }

    pub fn parse_unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.parse_unary()?)))
            }
            Tok::Plus => {
                self.bump();
                self.parse_unary()
            }
            _ => self.parse_power(),
        }
    }

    pub fn parse_power(&mut self) -> Result<Expr> {
        let base = self.parse_primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (n, d) = match self.peek().clone() {
            Tok::Num(s) => {
                self.bump();
                (self.small(&s)?, 1)
            }
            Tok::LParen => {
                self.bump();
                let n = match self.bump().tok {
                    Tok::Num(s) => self.small(&s)?,
                    _ => return self.error("expected exponent numerator"),
                };
                let d = if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump().tok {
                        Tok::Num(s) => self.small(&s)?,
                        _ => return self.error("expected exponent denominator"),
                    }
                } else {
                    1
                };
                self.expect(Tok::RParen, "`)`")?;
                (n, d)
            }
            _ => return self.error("expected exponent"),
        };
        if d != 1 && d != 2 {
            return self.error("only integer and half-integer exponents are supported");
        }
        if d == 2 && n % 2 == 0 {
            return Ok(Expr::Pow(Box::new(base), n / 2, 1));
        }
        Ok(Expr::Pow(Box::new(base), n, d))
    }

    fn small(&self, s: &str) -> Result<u32> {
        s.parse::<u32>()
            .ok()
            .filter(|x| *x <= 64)
            .map_or_else(|| self.error("exponent too large"), Ok)
    }

    pub fn parse_primary(&mut self) -> Result<Expr> {
        let p = self.here();
        match self.peek().clone() {
            Tok::Num(s) => {
                self.bump();
                Ok(Expr::Num(s.parse().expect("digits")))
            }
            Tok::Ident(name) => {
                self.bump();
                if let Some(f) = Func::from_name(&name) {
                    if *self.peek() == Tok::LParen {
                        self.bump();
                        let a = self.parse_expr()?;
                        self.expect(Tok::RParen, "`)`")?;
                        return Ok(Expr::Call(f, Box::new(a)));
                    }
                }
                if name == "i" {
                    Ok(Expr::Imag)
                } else {
                    Ok(Expr::Var(name, p))
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.parse_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            t => self.error(format!("expected a value, found {}", describe(&t))),
        }
    }
}

pub fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(s) => format!("number `{s}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Eq => "`=`".into(),
        Tok::Semi => "`;`".into(),
        Tok::Newline => "end of line".into(),
        Tok::Eof => "end of input".into(),
    }
}

/// Parameter bindings and the radical field used by `sqrt`.
#[derive(Clone, Debug)]
pub struct Env<S> {
    pub bindings: HashMap<String, S>,
    pub ctx: Radicands,
}

impl<S: EvalScalar> Env<S> {
    pub fn new(ctx: Radicands) -> Self {
        Env {
            bindings: HashMap::new(),
            ctx,
        }
    }

    pub fn with(mut self, name: &str, v: S) -> Self {
        self.bindings.insert(name.to_string(), v);
        self
    }

    pub fn bind(&mut self, name: &str, v: S) {
        self.bindings.insert(name.to_string(), v);
    }

    /// Binds rational values.
    pub fn from_rationals(ctx: Radicands, vals: &[(&str, Rational)]) -> Self {
        let mut e = Env::new(ctx);
        for (k, v) in vals {
            e.bind(k, S::from_rational(v));
        }
        e
    }
}

/// A scalar or a linear combination of basis atoms.
#[derive(Clone, Debug, PartialEq)]
pub enum Value<K: Ord, S> {
    Scalar(S),
    Lin(BTreeMap<K, S>),
}

fn lin_add<K: Ord + Clone, S: EvalScalar>(mut a: BTreeMap<K, S>, b: BTreeMap<K, S>) -> BTreeMap<K, S> {
    for (k, v) in b {
        let nv = match a.remove(&k) {
            Some(x) => x + v,
            None => v,
        };
        if !nv.is_zero() {
            a.insert(k, nv);
        }
    }
    a
}

fn lin_scale<K: Ord + Clone, S: EvalScalar>(a: BTreeMap<K, S>, c: &S) -> BTreeMap<K, S> {
    a.into_iter()
        .map(|(k, v)| (k, v * c.clone()))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

fn mixed(op: &str) -> Error {
    Error::Unsupported(format!("`{op}` cannot combine a basis element with this operand"))
}

type Atom<'a, K, S> = &'a dyn Fn(&str, Pos) -> Option<Result<Vec<(K, S)>>>;

pub fn eval_value<K: Ord + Clone, S: EvalScalar>(
    e: &Expr,
    env: &Env<S>,
    atom: Atom<'_, K, S>,
) -> Result<Value<K, S>> {
    use Value::{Lin, Scalar};
    Ok(match e {
        Expr::Num(n) => Scalar(S::from_rational(&Rational::from_integer(n.clone()))),
        Expr::Imag => Scalar(S::imag()?),
        Expr::Var(name, p) => {
            if let Some(r) = atom(name, *p) {
                let mut m = BTreeMap::new();
                for (k, v) in r? {
                    m = lin_add(m, BTreeMap::from([(k, v)]));
                }
                Lin(m)
            } else if let Some(v) = env.bindings.get(name) {
                Scalar(v.clone())
            } else {
                Scalar(S::symbol(name)?)
            }
        }
        Expr::Neg(a) => match eval_value(a, env, atom)? {
            Scalar(x) => Scalar(-x),
            Lin(m) => Lin(lin_scale(m, &-S::one())),
        },
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let x = eval_value(a, env, atom)?;
            let mut y = eval_value(b, env, atom)?;
            if matches!(e, Expr::Sub(..)) {
                y = match y {
                    Scalar(v) => Scalar(-v),
                    Lin(m) => Lin(lin_scale(m, &-S::one())),
                };
            }
            match (x, y) {
                (Scalar(p), Scalar(q)) => Scalar(p + q),
                (Lin(p), Lin(q)) => Lin(lin_add(p, q)),
                (Lin(p), Scalar(q)) | (Scalar(q), Lin(p)) => {
                    if q.is_zero() {
                        Lin(p)
                    } else {
                        return Err(mixed("+"));
                    }
                }
            }
        }
        Expr::Mul(a, b) => match (eval_value(a, env, atom)?, eval_value(b, env, atom)?) {
            (Scalar(p), Scalar(q)) => Scalar(p * q),
            (Scalar(c), Lin(m)) | (Lin(m), Scalar(c)) => Lin(lin_scale(m, &c)),
            (Lin(_), Lin(_)) => return Err(mixed("*")),
        },
        Expr::Div(a, b) => {
            let q = match eval_value(b, env, atom)? {
                Scalar(q) => q,
                Lin(_) => return Err(mixed("/")),
            };
            match eval_value(a, env, atom)? {
                Scalar(p) => Scalar(p.try_div(&q)?),
                Lin(m) => Lin(lin_scale(m, &S::one().try_div(&q)?)),
            }
        }
        Expr::Pow(a, n, d) => {
            let x = match eval_value(a, env, atom)? {
                Scalar(x) => x,
                Lin(_) => return Err(mixed("^")),
            };
            let base = if *d == 2 { x.try_sqrt(env.ctx)? } else { x };
            Scalar(pow(&base, *n))
        }
        Expr::Call(f, a) => {
            let x = match eval_value(a, env, atom)? {
                Scalar(x) => x,
                Lin(_) => return Err(mixed(f.name())),
            };
            Scalar(match f {
                Func::Sqrt => x.try_sqrt(env.ctx)?,
                Func::Abs => x.try_abs()?,
                Func::Sign => x.try_sign()?,
                Func::Conj => x.try_conj()?,
            })
        }
    })
}

pub fn eval<S: EvalScalar>(e: &Expr, env: &Env<S>) -> Result<S> {
    let none: Atom<'_, u8, S> = &|_, _| None;
    match eval_value(e, env, none)? {
        Value::Scalar(s) => Ok(s),
        Value::Lin(_) => unreachable!("no atoms"),
    }
}

/// Parses and evaluates one scalar expression.
pub fn eval_str<S: EvalScalar>(src: &str, env: &Env<S>) -> Result<S> {
    let toks = super::lexer::tokenize(src)?;
    let mut p = Parser::new(toks);
    let e = p.parse_expr()?;
    if *p.peek() != Tok::Eof {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    eval(&e, env)
}

pub fn is_zero_expr(e: &Expr) -> bool {
    matches!(e, Expr::Num(n) if n.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::quadext::{QuadExt, SQRT23};
    use crate::kernel::rational::{int, rat};
    use crate::kernel::{Complex, Gauss, Poly, Scalar};

    fn parse(s: &str) -> Expr {
        let mut p = Parser::new(super::super::lexer::tokenize(s).unwrap());
        p.parse_expr().unwrap()
    }

    #[test]
    fn printing_is_minimal() {
        for s in ["alpha+1", "(alpha-1)*x", "a-(b-c)", "2*beta", "-a*b", "x^(3/2)", "sqrt(2)/4", "a/(b*c)"] {
            assert_eq!(parse(s).print(), s);
        }
    }

    #[test]
    fn rational_and_gauss_evaluation() {
        let env = Env::<Rational>::new(None).with("a", int(3));
        assert_eq!(eval_str("a^2/2 - 1", &env).unwrap(), rat(7, 2));
        let genv = Env::<Gauss>::new(None);
        assert_eq!(eval_str("(1+i)*(1-i)", &genv).unwrap(), Gauss::from_int(2));
        assert!(matches!(eval_str("b", &env), Err(Error::MissingParameter(_))));
    }

    #[test]
    fn radicals() {
        let env = Env::<Complex<QuadExt>>::new(SQRT23);
        let v = eval_str("sqrt(3/2)^2", &env).unwrap();
        assert_eq!(v, Complex::<QuadExt>::from_rational(&rat(3, 2)));
        let w = eval_str("(4-1)^(3/2)", &env).unwrap();
        let s3 = eval_str("3*sqrt(3)", &env).unwrap();
        assert_eq!(w, s3);
        assert!(eval_str("sqrt(5)", &env).is_err());
    }

    #[test]
    fn symbols_in_polynomials() {
        let env = Env::<Poly>::new(None);
        let p = eval_str("(a+b)^2 - a^2 - 2*a*b - b^2", &env).unwrap();
        assert!(p.is_zero());
    }
}
