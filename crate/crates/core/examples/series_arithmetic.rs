//! Truncated Laurent series: windows, products, inverses and the split into
//! positive and non-positive parts.

use std::error::Error;

use qpartitions::series::LaurentSeries;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // 1 - q, known exactly, and its inverse to order 8
    let one_minus_q = LaurentSeries::polynomial(0, [1i64, -1]);
    let geometric = one_minus_q.inv(8)?;
    println!("1/(1-q)          = {geometric}");

    // a series with a pole: q^-2 + 3 + q + O(q^6)
    let f = LaurentSeries::from_coeffs(-2, [1i64, 0, 3, 1, 0, 0, 0, 0], 6);
    let g = f.mul(&geometric);
    println!("f                = {f}");
    println!("f/(1-q)          = {g}");
    println!("positive part    = {}", g.pos_part());
    println!("non-positive     = {}", g.nonpos_part());
    assert_eq!(g.pos_part().add(&g.nonpos_part()), g);

    // the window only shrinks as far as the inputs force it to
    let back = g.mul(&one_minus_q);
    assert!(back.eq_to(&f, 6)?);
    println!("(f/(1-q))(1-q)   = {back}");

    // reading past the window is an error, not a silent zero
    assert!(f.coeff(6).is_err());
    println!("f.coeff(6)       = {}", f.coeff(6).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("series arithmetic example failed");
}
