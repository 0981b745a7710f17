//! Streaming restricted partitions and overpartitions.

use std::error::Error;

use qpartitions::enumeration::{count_a, count_p, gen_overpartitions, gen_partitions, PartitionFilter};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("partitions of 6 whose smallest part repeats:");
    for p in gen_partitions(6, PartitionFilter::none().smallest_mult(2)) {
        println!("  {p}");
    }
    assert_eq!(count_a(2, 6), 7u32.into());

    println!("partitions of 12 with largest - smallest = 6:");
    for p in gen_partitions(12, PartitionFilter::none().diff(6)) {
        println!("  {p}");
    }

    println!("3-regular partitions of 7:");
    for p in gen_partitions(7, PartitionFilter::none().regular(3)) {
        println!("  {p}");
    }

    let overs: Vec<String> = gen_overpartitions(3, PartitionFilter::none())
        .map(|o| o.to_string())
        .collect();
    println!("overpartitions of 3: {}", overs.join(", "));
    assert_eq!(overs.len(), 8);

    println!("p(100) = {}", count_p(100));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("enumeration example failed");
}
