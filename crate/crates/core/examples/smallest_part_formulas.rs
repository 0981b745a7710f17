//! a_m(n) from linear combinations of partition numbers, next to brute force.

use std::error::Error;

use qpartitions::closed_forms::{a2_via_p, a3_via_p, a4_via_p, ag1_via_p, am_via_p, PmPolynomial};
use qpartitions::enumeration::count_a;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(" n  a_2 a_3 a_4  (enumerated)");
    for n in 1..=12 {
        let (a2, a3, a4) = (count_a(2, n), count_a(3, n), count_a(4, n));
        assert_eq!(a2, a2_via_p(n));
        assert_eq!(a3, a3_via_p(n));
        assert_eq!(a4, a4_via_p(n));
        println!("{n:>2} {a2:>4} {a3:>3} {a4:>3}");
    }

    // a_3(6) = 22 - 15 - 5 + 3 - 1
    assert_eq!(ag1_via_p(3, 6), 4.into());
    println!("a_3(6) via nested sums = {}", ag1_via_p(3, 6));

    for m in 2..=5 {
        let pm = PmPolynomial::new(m);
        println!("P_{m}(q) = {}", pm.series);
        assert_eq!(am_via_p(m, 30), count_a(m, 30));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("smallest-part formulas example failed");
}
