//! l-regular partitions and their smallest-part refinement.

use std::error::Error;

use qpartitions::closed_forms::{gf_areg, gf_areg_l2, gf_breg, gf_breg_product};
use qpartitions::enumeration::{count_areg, count_breg, count_breg_diff};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let order = 25;
    for l in 2..=4 {
        let b = gf_breg(l, order);
        assert_eq!(b, gf_breg_product(l, order));
        for n in 0..order {
            assert_eq!(b.coeff(n)?, count_breg(l, n));
        }
        println!("b_{l}: {b}");
    }
    for (m, l) in [(2, 2), (2, 3), (3, 4)] {
        let a = gf_areg(m, l, order);
        for n in 1..order {
            assert_eq!(a.coeff(n)?, count_areg(m, l, n));
        }
        println!("a_{m}({l}): {a}");
    }
    assert_eq!(gf_areg_l2(2, order), gf_areg(2, 2, order));

    // b_2(2n, n) vanishes for odd n: odd parts of equal parity differ by an even amount
    for n in [1, 3, 5, 7] {
        assert_eq!(count_breg_diff(2, 2 * n, n as u32), 0.into());
    }
    println!("b_2(2n, n) = 0 for odd n, while a_2(2)(n) = {}", count_areg(2, 2, 5));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("regular partitions example failed");
}
