use super::Ast;
use crate::qobjects::Monomial;

const ADD: u8 = 1;
const MUL: u8 = 2;
const UNARY: u8 = 3;
const ATOM: u8 = 5;

fn mono(m: Monomial) -> String {
    match (m.coeff, m.exp) {
        (c, 0) => c.to_string(),
        (c, e) => {
            let q = if e == 1 { "q".to_string() } else { format!("q^{e}") };
            match c {
                1 => q,
                -1 => format!("-{q}"),
                c => format!("{c}*{q}"),
            }
        }
    }
}

fn go(ast: &Ast, min: u8, out: &mut String) {
    let prec = match ast {
        Ast::Add(..) | Ast::Sub(..) => ADD,
        Ast::Mul(..) | Ast::Div(..) => MUL,
        Ast::Neg(_) | Ast::Pow(..) => UNARY,
        _ => ATOM,
    };
    let paren = prec < min;
    if paren {
        out.push('(');
    }
    match ast {
        Ast::Int(v) => out.push_str(&v.to_string()),
        Ast::Q => out.push('q'),
        Ast::Neg(x) => {
            out.push('-');
            go(x, UNARY, out);
        }
        Ast::Add(l, r) | Ast::Sub(l, r) => {
            go(l, ADD, out);
            out.push(if matches!(ast, Ast::Add(..)) { '+' } else { '-' });
            go(r, MUL, out);
        }
        Ast::Mul(l, r) | Ast::Div(l, r) => {
            go(l, MUL, out);
            out.push(if matches!(ast, Ast::Mul(..)) { '*' } else { '/' });
            go(r, UNARY, out);
        }
        Ast::Pow(base, k) => {
            go(base, ATOM, out);
            out.push_str(&format!("^{k}"));
        }
        Ast::Poch { a, step, len } => {
            let len = len.map_or("inf".to_string(), |n| n.to_string());
            out.push_str(&format!("poch({};{step};{len})", mono(*a)));
        }
        Ast::Qbin(a, b) => out.push_str(&format!("qbin({a},{b})")),
    }
    if paren {
        out.push(')');
    }
}

/// Canonical text with the fewest parentheses that parse back to `ast`.
pub fn format(ast: &Ast) -> String {
    let mut out = String::new();
    go(ast, ADD, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn canonical_text() {
        for s in [
            "1/poch(q;1;inf)",
            "q^-2*(1+q)",
            "-q^2",
            "(-q)^2",
            "1-(q-q)",
            "1-q-q",
            "--q",
            "poch(-3*q^2;2;5)",
            "poch(-4;1;3)",
            "qbin(4,-2)",
            "(q^2)^3",
            "2*(q/3)",
            "2*q/3",
            "-(1+q)",
        ] {
            assert_eq!(format(&parse(s).unwrap()), s);
        }
        assert_eq!(format(&parse(" ( 1 + q ) * q ").unwrap()), "(1+q)*q");
    }
}
