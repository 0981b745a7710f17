//! Checking registered identities. Pass `all` to run the whole registry on
//! its default grids.

use std::error::Error;

use qpartitions::identities::{registry, verify, verify_identity, Status, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let small = VerifyOptions {
        n_max: Some(15),
        ..Default::default()
    };
    for id in ["prop1", "prop3", "thm_a4", "over1", "reg_div"] {
        let report = verify(id, &small)?;
        assert_eq!(report.status, Status::Verified);
        println!("{report}");
    }
    println!("{}", verify("cauchy_cor", &VerifyOptions::default())?);

    // dropping the divisibility hypothesis produces counterexamples
    let relaxed = VerifyOptions {
        ignore_constraint: true,
        ..small
    };
    let report = verify("reg_div", &relaxed)?;
    assert_eq!(report.status, Status::Refuted);
    println!("{report}");
    println!("first counterexample: {}", report.counterexamples[0]);
    Ok(())
}

fn run_all() {
    let opts = VerifyOptions {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..Default::default()
    };
    for identity in registry() {
        match verify_identity(&identity, &opts) {
            Ok(report) => println!("{report}  [{:.0} ms]", report.wall_time_ms),
            Err(e) => println!("{}: error: {e}", identity.id),
        }
    }
}

#[allow(dead_code)]
fn main() {
    if std::env::args().nth(1).as_deref() == Some("all") {
        run_all();
    } else {
        run_example().expect("verification example failed");
    }
}
