//! Overpartition counts and generating functions.

use std::error::Error;

use qpartitions::closed_forms::{gf_abar_m, gf_abar_m_alt, gf_pbar, gf_ubar};
use qpartitions::enumeration::{count_abar, count_pbar, count_ubar, gen_overpartitions, is_ubar, PartitionFilter};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let pbar = gf_pbar(10);
    println!("Σ p̄(n) q^n = {pbar}");
    for n in 0..10 {
        assert_eq!(pbar.coeff(n)?, count_pbar(n));
    }

    let abar2 = gf_abar_m(2, 12);
    for n in 1..12 {
        assert_eq!(abar2.coeff(n)?, count_abar(2, n));
    }
    println!("Σ ā_2(n) q^n = {abar2}");

    let alt = gf_abar_m_alt(2, 20);
    let coeffs: Vec<String> = (0..20)
        .map(|n| alt.coeff(n).map(|c| c.to_string()))
        .collect::<Result<_, _>>()?;
    println!("alternative ā_2 series: {}", coeffs.join(" "));

    let ubar: Vec<String> = gen_overpartitions(7, PartitionFilter::none())
        .filter(is_ubar)
        .map(|o| o.to_string())
        .collect();
    println!("ū(7) = {}: {}", ubar.len(), ubar.join(", "));
    let u = gf_ubar(15);
    for n in 0..15 {
        assert_eq!(u.coeff(n)?, count_ubar(n));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("overpartitions example failed");
}
