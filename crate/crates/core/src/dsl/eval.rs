use thiserror::Error;

use super::{format, Ast};
use crate::qobjects::{poch_finite, poch_infinite, qbin, QError};
use crate::series::{LaurentSeries, SeriesError};

/// Extra working-order attempts before giving up on a short window.
const RETRIES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("order must be at least 1, got {0}")]
    BadOrder(i64),
    #[error("cannot divide by `{expr}`: {reason}")]
    NonUnitDivisor { expr: String, reason: String },
    #[error("result is only known below q^{reached}, short of the requested order {order}")]
    WindowUnderflow { order: i64, reached: i64 },
    #[error(transparent)]
    Q(#[from] QError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn invert(ast: &Ast, s: &LaurentSeries, work: i64) -> Result<LaurentSeries, EvalError> {
    s.inv(work).map_err(|e| EvalError::NonUnitDivisor {
        expr: format(ast),
        reason: e.to_string(),
    })
}

fn at(ast: &Ast, work: i64) -> Result<LaurentSeries, EvalError> {
    Ok(match ast {
        Ast::Int(v) => LaurentSeries::polynomial(0, [v.clone()]),
        Ast::Q => LaurentSeries::exact_monomial(1, 1),
        Ast::Neg(x) => at(x, work)?.neg(),
        Ast::Add(l, r) => at(l, work)?.add(&at(r, work)?),
        Ast::Sub(l, r) => at(l, work)?.sub(&at(r, work)?),
        Ast::Mul(l, r) => at(l, work)?.mul(&at(r, work)?),
        Ast::Div(l, r) => at(l, work)?.mul(&invert(r, &at(r, work)?, work)?),
        Ast::Pow(base, k) => {
            let b = at(base, work)?;
            if *k < 0 {
                invert(base, &b, work)?.pow(-k, work)?
            } else {
                b.pow(*k, work)?
            }
        }
        Ast::Poch { a, step, len } => match len {
            Some(n) => poch_finite(*a, *step as i64, *n),
            None => poch_infinite(*a, *step as i64, work)?,
        },
        Ast::Qbin(a, b) => qbin(*a, *b),
    })
}

/// Evaluates `ast` and truncates at `order`. Intermediate results are
/// computed to a larger working order when negative powers eat into the
/// window.
pub fn eval(ast: &Ast, order: i64) -> Result<LaurentSeries, EvalError> {
    if order < 1 {
        return Err(EvalError::BadOrder(order));
    }
    let mut work = order;
    let mut reached = order;
    for _ in 0..=RETRIES {
        let s = at(ast, work)?;
        if s.is_exact() || s.trunc_order() >= order {
            return Ok(s.truncate(order));
        }
        reached = s.trunc_order();
        work += 2 * (order - reached).max(1);
    }
    Err(EvalError::WindowUnderflow { order, reached })
}

#[cfg(test)]
mod tests {
    use super::super::{evaluate, parse};
    use super::*;

    fn coeffs(s: &LaurentSeries) -> Vec<i64> {
        s.terms().map(|(_, c)| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn partition_numbers() {
        let s = evaluate("1/poch(q;1;inf)", 8).unwrap();
        assert_eq!(coeffs(&s), [1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(s.trunc_order(), 8);
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            coeffs(&evaluate("qbin(4,2)", 10).unwrap()),
            [1, 1, 2, 1, 1, 0, 0, 0, 0, 0]
        );
        assert_eq!(evaluate("(1-q)/(1-q)", 10).unwrap(), LaurentSeries::one(10));
        assert_eq!(coeffs(&evaluate("poch(q;1;3)", 7).unwrap()), [1, -1, -1, 0, 1, 1, -1]);
    }

    #[test]
    fn negative_powers_get_more_room() {
        let s = evaluate("q^-3/poch(q;1;inf)", 4).unwrap();
        assert_eq!(s.min_exp(), -3);
        assert_eq!(coeffs(&s), [1, 1, 2, 3, 5, 7, 11]);
        let s = evaluate("(q^-2/(1-q))*q^2", 5).unwrap();
        assert_eq!(s, LaurentSeries::from_coeffs(0, [1, 1, 1, 1, 1], 5));
    }

    #[test]
    fn errors() {
        match evaluate("1/(2+q)", 5) {
            Err(crate::dsl::DslError::Eval(EvalError::NonUnitDivisor { expr, .. })) => {
                assert_eq!(expr, "2+q")
            }
            other => panic!("{other:?}"),
        }
        assert!(evaluate("1/(q-q)", 5).is_err());
        assert!(evaluate("poch(q^0;1;inf)", 5).is_err());
        assert!(evaluate("(2+q)^-1", 5).is_err());
        assert!(matches!(eval(&parse("q").unwrap(), 0), Err(EvalError::BadOrder(0))));
    }
}
