//! Parsing, printing and evaluating q-series expressions.

use std::error::Error;

use qpartitions::dsl::{self, evaluate, parse};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in [
        "1/poch(q;1;inf)",
        "poch(-q;1;inf)/poch(q;1;inf)",
        "q^-2 * (1 + q)",
        "qbin(5, 2) - qbin(4, 1)*q^2",
        "(1 - q)^-2",
    ] {
        let ast = parse(text)?;
        println!("{:<32} {:<28} {}", text, dsl::format(&ast), evaluate(text, 8)?);
    }

    match evaluate("1/(2+q)", 5) {
        Err(e) => println!("1/(2+q): {e}"),
        Ok(s) => return Err(format!("expected an error, got {s}").into()),
    }
    match parse("poch(q;;3)") {
        Err(e) => println!("poch(q;;3): {e}"),
        Ok(a) => return Err(format!("expected a syntax error, got {a:?}").into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("dsl example failed");
}
