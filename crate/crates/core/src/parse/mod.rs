//! Text front ends: abbreviated real notation, complex equations, linear maps.

pub mod complex;
pub mod expr;
pub mod lexer;
pub mod linear;
pub mod real;

pub use complex::{parse_complex, parse_eqs, ComplexEqAst};
pub use expr::{eval_str, Env, Expr};
pub use linear::parse_map;
pub use real::{parse_algebra, parse_real, print_algebra, RealNotation};
