//! Linear maps written as `w1 = d*e1 - i*e2`, with optional `let` bindings.

use super::expr::{describe, eval_value, Env, Parser, Pos, Value};
use super::lexer::{tokenize, Tok};
use crate::error::{Error, Result};
use crate::kernel::EvalScalar;

fn indexed(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .parse::<usize>()
        .ok()
        .filter(|k| *k > 0)
}

/// Rows `k -> coefficients on the source basis`, one per target symbol `<target><k>`.
pub fn parse_map<S: EvalScalar>(
    src: &str,
    target: &str,
    source: &str,
    source_dim: usize,
    env: &Env<S>,
) -> Result<Vec<Vec<S>>> {
    let mut env = env.clone();
    let mut p = Parser::new(tokenize(src)?);
    let mut rows: Vec<Option<Vec<S>>> = Vec::new();
    let atom = |name: &str, pos: Pos| -> Option<Result<Vec<(usize, S)>>> {
        let k = indexed(name, source)?;
        if k > source_dim {
            return Some(Err(Error::Parse {
                line: pos.line,
                col: pos.col,
                msg: format!("`{name}` exceeds dimension {source_dim}"),
            }));
        }
        Some(Ok(vec![(k - 1, S::one())]))
    };
    loop {
        while matches!(p.peek(), Tok::Newline | Tok::Semi) {
            p.bump();
        }
        if *p.peek() == Tok::Eof {
            break;
        }
        let head = match p.peek().clone() {
            Tok::Ident(s) => s,
            t => return p.error(format!("expected a statement, found {}", describe(&t))),
        };
        let pos = p.here();
        p.bump();
        if head == "let" {
            let name = match p.bump().tok {
                Tok::Ident(s) => s,
                _ => return p.error("expected a name after `let`"),
            };
            p.expect(Tok::Eq, "`=`")?;
            let e = p.parse_expr()?;
            match eval_value(&e, &env, &atom)? {
                Value::Scalar(v) => env.bind(&name, v),
                Value::Lin(_) => return p.error("`let` binds scalars only"),
            }
        } else {
            let Some(k) = indexed(&head, target) else {
                return Err(Error::Parse {
                    line: pos.line,
                    col: pos.col,
                    msg: format!("expected `{target}<k>` or `let`, found `{head}`"),
                });
            };
            p.expect(Tok::Eq, "`=`")?;
            let e = p.parse_expr()?;
            let mut row = vec![S::zero(); source_dim];
            match eval_value(&e, &env, &atom)? {
                Value::Lin(m) => {
                    for (i, v) in m {
                        row[i] = v;
                    }
                }
                Value::Scalar(v) if v.is_zero() => {}
                Value::Scalar(_) => {
                    return Err(Error::Parse {
                        line: pos.line,
                        col: pos.col,
                        msg: "right-hand side must be linear in the basis".into(),
                    })
                }
            }
            if rows.len() < k {
                rows.resize(k, None);
            }
            if rows[k - 1].is_some() {
                return Err(Error::Parse {
                    line: pos.line,
                    col: pos.col,
                    msg: format!("`{head}` defined twice"),
                });
            }
            rows[k - 1] = Some(row);
        }
        match p.peek() {
            Tok::Newline | Tok::Semi | Tok::Eof => {}
            t => return p.error(format!("unexpected {}", describe(t))),
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(k, r)| r.ok_or_else(|| Error::Parse { line: 0, col: 0, msg: format!("`{target}{}` missing", k + 1) }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, rat};
    use crate::kernel::{Gauss, Scalar};

    #[test]
    fn map_with_let() {
        let env = Env::<Gauss>::new(None).with("d", Gauss::from_int(-1));
        let rows = parse_map("let r = 1/2\nw1 = d*e1 - i*e2; w2 = r*(e1 + e2)", "w", "e", 2, &env).unwrap();
        assert_eq!(rows[0], vec![Gauss::from_int(-1), Gauss::new(int(0), int(-1))]);
        assert_eq!(rows[1], vec![Gauss::from_rational(&rat(1, 2)); 2]);
    }

    #[test]
    fn out_of_range_basis() {
        let env = Env::<Gauss>::new(None);
        assert!(matches!(
            parse_map("w1 = e3", "w", "e", 2, &env),
            Err(Error::Parse { line: 1, col: 6, .. })
        ));
    }
}
