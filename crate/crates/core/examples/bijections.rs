//! The maps behind a_m(n) = a_{m-1}(2n, n) and 2ā_2(n) = p̄(2n, n).

use std::error::Error;

use qpartitions::enumeration::{gen_partitions, Overpartition, PartitionFilter};
use qpartitions::identities::bijections::{check_over1, check_prop3, over1_pair, prop3_forward, prop3_inverse};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("a_2(5) -> a_1(10, 5):");
    for lambda in gen_partitions(5, PartitionFilter::none().smallest_mult(2)) {
        let mu = prop3_forward(&lambda, 2)?;
        assert_eq!(prop3_inverse(&mu, 2)?, lambda);
        println!("  {lambda:<12} -> {mu}");
    }

    let lambda = Overpartition::new([(1, true), (1, false)]).expect("valid overpartition");
    let (plain, bar) = over1_pair(&lambda)?;
    println!("{lambda} -> {plain} and {bar}");

    for n in 1..=8 {
        let c = check_prop3(3, n);
        assert!(c.holds());
        let o = check_over1(n);
        assert!(o.holds());
        println!(
            "n={n}: a_3 {} = {} targets, ā_2 {} -> {} targets",
            c.domain_size, c.target_size, o.domain_size, o.target_size
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bijection example failed");
}
