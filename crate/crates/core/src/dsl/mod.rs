//! A small expression language over truncated q-series.
//!
//! ```text
//! expr   := term (("+"|"-") term)* ;
//! term   := unary (("*"|"/") unary)* ;
//! unary  := "-" unary | factor ;
//! factor := atom ("^" int)? ;
//! atom   := int | "q" | "(" expr ")"
//!         | "poch" "(" mono ";" posint ";" (int|"inf") ")"
//!         | "qbin" "(" int "," int ")" ;
//! mono   := ["-"] (int "*")? "q" ("^" posint)? | int ;
//! ```
//!
//! ```
//! use qpartitions::dsl;
//! let s = dsl::evaluate("1/poch(q;1;inf)", 6).unwrap();
//! assert_eq!(s.to_string(), "1 + q + 2*q^2 + 3*q^3 + 5*q^4 + 7*q^5 + O(q^6)");
//! ```

mod eval;
mod format;
mod parser;

use num_bigint::BigInt;
use thiserror::Error;

use crate::qobjects::Monomial;
use crate::series::LaurentSeries;

pub use eval::{eval, EvalError};
pub use format::format;
pub use parser::{parse, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    /// Non-negative literal; negative numbers are `Neg` of a literal.
    Int(BigInt),
    Q,
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i64),
    /// `(a; q^step)_len`, infinite when `len` is `None`.
    Poch {
        a: Monomial,
        step: u64,
        len: Option<u64>,
    },
    Qbin(i64, i64),
}

impl Ast {
    pub fn int(v: i64) -> Ast {
        if v < 0 {
            Ast::Neg(Box::new(Ast::Int(BigInt::from(-v))))
        } else {
            Ast::Int(BigInt::from(v))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Parses and evaluates `text` to `order`.
pub fn evaluate(text: &str, order: i64) -> Result<LaurentSeries, DslError> {
    Ok(eval(&parse(text)?, order)?)
}
