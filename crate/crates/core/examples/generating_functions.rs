//! Two constructions of the generating function of a_m(n).

use std::error::Error;

use qpartitions::closed_forms::{gf_a_m_sum, gf_a_m_thm, gf_a_m_thm_with, DmReading};
use qpartitions::enumeration::count_a;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let order = 20;
    for m in 2..=4 {
        let by_sum = gf_a_m_sum(m, order);
        let by_product = gf_a_m_thm(m, order);
        assert_eq!(by_sum, by_product);
        for n in 1..order {
            assert_eq!(by_sum.coeff(n)?, count_a(m, n));
        }
        println!("m={m}: {by_sum}");
    }

    // subtracting only the polynomial's own non-positive part is wrong
    let naive = gf_a_m_thm_with(2, order, DmReading::BracketOnly);
    let diff = naive.first_difference(&gf_a_m_thm(2, order), order);
    println!(
        "bracket-only reading first differs at q^{}",
        diff.expect("readings differ")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("generating functions example failed");
}
