//! Pochhammer symbols, Euler's product and Gaussian binomials.

use std::error::Error;

use qpartitions::qobjects::{euler_qinf, poch_finite, poch_infinite, qbin, qbinomial_theorem_lhs_rhs, Monomial};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let order = 16;
    println!("(q;q)_3          = {}", poch_finite(Monomial::q(1), 1, 3));
    println!("(-q;q^2)_3       = {}", poch_finite(Monomial::neg_q(1), 2, 3));
    println!("(q^-2;q)_3       = {}", poch_finite(Monomial::q(-2), 1, 3));

    let product = poch_infinite(Monomial::q(1), 1, order)?;
    let pentagonal = euler_qinf(order);
    assert_eq!(product, pentagonal);
    println!("(q;q)_inf        = {pentagonal}");

    // (-q;q)_inf (q;q)_inf = (q^2;q^2)_inf
    let lhs = poch_infinite(Monomial::neg_q(1), 1, order)?.mul(&product);
    let rhs = poch_infinite(Monomial::q(2), 2, order)?;
    assert!(lhs.eq_to(&rhs, order)?);
    println!("(q^2;q^2)_inf    = {rhs}");

    for b in 0..=4 {
        println!("[4 choose {b}]_q    = {}", qbin(4, b));
    }

    let z = Monomial::new(-2, 1);
    let (l, r) = qbinomial_theorem_lhs_rhs(5, z, 30);
    assert_eq!(l, r);
    println!("(-2q;q)_5        = {l}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("pochhammer example failed");
}
