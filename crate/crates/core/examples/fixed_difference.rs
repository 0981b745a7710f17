//! Generating function of a_m(n, l): smallest part repeated at least m
//! times and largest minus smallest equal to l.

use std::error::Error;

use qpartitions::closed_forms::{gf_a_m_diff, gf_a_m_diff_as_printed};
use qpartitions::enumeration::count_a_diff;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let order = 30;
    for (m, l) in [(1, 2), (1, 4), (2, 3), (3, 6)] {
        let gf = gf_a_m_diff(m, l, order)?;
        for n in 0..order {
            assert_eq!(gf.coeff(n)?, count_a_diff(m, n, l), "m={m} l={l} n={n}");
        }
        println!("a_{m}(n,{l}): {gf}");
    }

    // the variant with (q)_{l-m+1} disagrees with enumeration
    let wrong = gf_a_m_diff_as_printed(1, 2, order)?;
    let right = gf_a_m_diff(1, 2, order)?;
    let n = wrong.first_difference(&right, order).expect("variants differ");
    println!(
        "(q)_(l-m+1) variant at n={n}: {} but enumeration gives {}",
        wrong.coeff(n)?,
        count_a_diff(1, n, 2)
    );

    assert!(gf_a_m_diff(3, 3, order).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fixed difference example failed");
}
