//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Run with
//! `cargo test -p qpartitions --test acceptance`.

mod common;

use std::fmt::Display;
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qpartitions::closed_forms::{
    a2_via_p, a3_via_p, a4_via_p, ag1_via_p, ag1_via_p_with, gf_a_m_diff, gf_a_m_sum, gf_a_m_thm, gf_abar_m_alt,
    gf_areg, gf_areg_l2, gf_breg, gf_breg_product, gf_pbar, PmPolynomial,
};
use qpartitions::dsl::{self, parse};
use qpartitions::enumeration::{
    count_a, count_areg, count_breg, count_p, count_p_fixed_diff, count_pbar, count_q, count_ubar, gen_overpartitions,
    PartitionFilter, QConvention,
};
use qpartitions::identities::bijections::check_prop3;
use qpartitions::identities::{verify, Status, VerificationReport, VerifyOptions};
use qpartitions::qobjects::qbin;
use qpartitions::series::LaurentSeries;

/// Findings for one criterion.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn require(&mut self, ok: bool, what: impl Display) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn equal<T: PartialEq + Display>(&mut self, got: T, want: T, what: impl Display) {
        if got != want {
            self.failures.push(format!("{what}: got {got}, want {want}"));
        }
    }

    fn note(&mut self, line: impl Display) {
        self.notes.push(line.to_string());
    }

    fn within(&mut self, started: Instant, budget: Duration) {
        let spent = started.elapsed();
        self.note(format!(
            "runtime {:.2}s (budget {}s)",
            spent.as_secs_f64(),
            budget.as_secs()
        ));
        self.require(spent < budget, format!("took {spent:?}, budget {budget:?}"));
    }

    /// Runs an identity on its default grid and expects it to verify.
    fn verified(&mut self, id: &str, opts: &VerifyOptions) -> Option<VerificationReport> {
        match verify(id, opts) {
            Ok(r) => {
                self.note(&r);
                if r.status != Status::Verified {
                    let first = r.counterexamples.first().map(|c| c.to_string()).unwrap_or_default();
                    self.failures.push(format!(
                        "{id} {:?}: {} mismatches, first {first}",
                        r.status, r.mismatches
                    ));
                }
                Some(r)
            }
            Err(e) => {
                self.failures.push(format!("{id}: {e}"));
                None
            }
        }
    }
}

fn parallel() -> VerifyOptions {
    VerifyOptions {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..VerifyOptions::default()
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Coefficients `[0, order)` of `s` against `count(n)`.
fn matches_counts(out: &mut Outcome, s: &LaurentSeries, order: i64, what: &str, count: impl Fn(i64) -> BigInt) {
    for n in 0..order {
        match s.coeff(n) {
            Ok(c) => {
                let want = count(n);
                if c != want {
                    out.failures
                        .push(format!("{what}: q^{n} is {c}, enumeration gives {want}"));
                    return;
                }
            }
            Err(e) => {
                out.failures.push(format!("{what}: {e}"));
                return;
            }
        }
    }
}

fn criterion_1(out: &mut Outcome) {
    let started = Instant::now();
    out.verified("prop1", &VerifyOptions::default());
    for n in 1..=60 {
        out.equal(count_a(2, n), a2_via_p(n), format!("a_2({n}) by enumeration"));
    }
    out.within(started, Duration::from_secs(5));
}

fn criterion_2(out: &mut Outcome) {
    let started = Instant::now();
    out.verified("prop2", &VerifyOptions::default());
    out.verified("prop3", &VerifyOptions::default());
    let mut checked = 0;
    for m in 2..=4 {
        for n in 1..=20 {
            let c = check_prop3(m, n);
            out.require(c.holds(), format!("bijection m={m}, n={n}: {c:?}"));
            checked += c.domain_size;
        }
    }
    out.note(format!(
        "bijection round trip and image coverage over {checked} partitions"
    ));
    out.within(started, Duration::from_secs(60));
}

fn criterion_3(out: &mut Outcome) {
    out.verified("thmG1", &parallel());
    for m in 2..=6 {
        for n in 1..=60 {
            out.equal(
                ag1_via_p_with(m, n, QConvention::AtLeast),
                count_a(m, n),
                format!("a_{m}({n}) under the at-least convention"),
            );
        }
    }
    // 2p(6) - p(7) - p(4) + p(3) - (Q_{2,3}(6) + Q_{2,4}(6))
    let terms = [
        2 * count_p(6),
        count_p(7),
        count_p(4),
        count_p(3),
        (3..=4).map(|k| count_q(2, k, 6, QConvention::AtLeast)).sum(),
    ];
    out.equal(
        terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "),
        "22 15 5 3 1".into(),
        "a_3(6) terms",
    );
    let by_hand = &terms[0] - &terms[1] - &terms[2] + &terms[3] - &terms[4];
    out.equal(by_hand, big(4), "22 - 15 - 5 + 3 - 1");
    out.equal(ag1_via_p(3, 6), big(4), "a_3(6) closed form");
    out.equal(count_a(3, 6), big(4), "a_3(6) enumerated");
}

fn criterion_4(out: &mut Outcome) {
    out.verified("thm_a3", &parallel());
    out.verified("thm_a4", &parallel());
    out.equal(count_a(3, 4), big(1), "a_3(4) enumerated");
    out.equal(a3_via_p(4), big(1), "a_3(4) closed form");
    out.equal(count_a(4, 5), big(1), "a_4(5) enumerated");
    out.equal(a4_via_p(5), big(1), "a_4(5) closed form");
}

fn criterion_5(out: &mut Outcome) {
    out.verified("eq_am", &parallel());
    out.verified("thm_am", &parallel());
    for m in 2..=6 {
        let a = gf_a_m_sum(m, 60);
        let b = gf_a_m_thm(m, 60);
        out.require(
            a.eq_to(&b, 60).unwrap_or(false),
            format!("summation and product forms differ for m={m}"),
        );
    }
    let p3 = PmPolynomial::new(3).series;
    let printed = LaurentSeries::polynomial(-3, [1, -2, -1, 3]);
    out.require(p3 == printed, format!("P_3 = {p3}, want 3 - 1/q - 2/q^2 + 1/q^3"));
}

/// Generating function of partitions whose largest and smallest parts differ
/// by exactly `t >= 2`.
fn fixed_difference_formula(t: u32) -> String {
    let (s, r) = (t - 1, t);
    format!(
        "q^{s}*(1-q)/((1-q^{s})*(1-q^{r})) - q^{s}*(1-q)/((1-q^{s})*(1-q^{r})*poch(q;1;{r})) + q^{r}/((1-q^{s})*poch(q;1;{r}))"
    )
}

fn criterion_6(out: &mut Outcome) {
    out.verified("thm_and", &parallel());
    for t in 2..=8 {
        let text = fixed_difference_formula(t);
        let formula = match dsl::evaluate(&text, 51) {
            Ok(s) => s,
            Err(e) => {
                out.failures.push(format!("t={t}: {e}"));
                continue;
            }
        };
        match gf_a_m_diff(1, t, 51) {
            Ok(general) => out.require(
                general.eq_to(&formula, 51).unwrap_or(false),
                format!("m=1, l={t} closed form differs from the fixed-difference formula"),
            ),
            Err(e) => out.failures.push(format!("m=1, l={t}: {e}")),
        }
        matches_counts(out, &formula, 51, &format!("fixed difference t={t}"), |n| {
            count_p_fixed_diff(n, t)
        });
    }
    out.note("m=1 specialization matches the fixed-difference formula for t in 2..=8, n <= 50");
}

fn criterion_7(out: &mut Outcome) {
    let opts = VerifyOptions {
        order: Some(50),
        ..parallel()
    };
    for id in ["cauchy", "cauchy_cor", "heine", "heine2", "qbinthm"] {
        out.verified(id, &opts);
    }
}

fn criterion_8(out: &mut Outcome) {
    let pbar = gf_pbar(5);
    for (n, want) in [1, 2, 4, 8, 14].into_iter().enumerate() {
        out.equal(
            pbar.coeff(n as i64).unwrap_or_default(),
            big(want),
            format!("p̄ series at q^{n}"),
        );
        out.equal(count_pbar(n as i64), big(want), format!("p̄({n}) enumerated"));
    }
    let mut listed: Vec<String> = gen_overpartitions(3, PartitionFilter::none())
        .map(|o| o.to_string())
        .collect();
    listed.sort();
    let mut want: Vec<String> = [
        "3",
        "3\u{304}",
        "2+1",
        "2\u{304}+1",
        "2+1\u{304}",
        "2\u{304}+1\u{304}",
        "1+1+1",
        "1\u{304}+1+1",
    ]
    .map(String::from)
    .to_vec();
    want.sort();
    out.require(listed == want, format!("overpartitions of 3: {listed:?}"));
    out.verified("over1", &parallel());
    out.verified("over_gen", &parallel());
    out.verified("over_a2", &parallel());
    out.equal(count_ubar(3), big(2), "ū(3)");
    out.equal(count_ubar(4), big(0), "ū(4)");
    match verify("ubar_gf", &VerifyOptions::default()) {
        Ok(r) => {
            out.note(&r);
            for c in r.counterexamples.iter().take(3) {
                out.note(format!("  counterexample {c}"));
            }
            out.require(r.status != Status::Skipped, "ubar_gf was skipped");
        }
        Err(e) => out.failures.push(format!("ubar_gf: {e}")),
    }
}

fn criterion_9(out: &mut Outcome) {
    out.verified("reg_a2", &parallel());
    out.verified("reg_div", &parallel());
    let dropped = VerifyOptions {
        ignore_constraint: true,
        ..parallel()
    };
    match verify("reg_div", &dropped) {
        Ok(r) => {
            let first = r.counterexamples.first().map(|c| c.to_string()).unwrap_or_default();
            out.note(format!("without l | n: {r}, first counterexample {first}"));
            out.require(
                r.status == Status::Refuted,
                "reg_div without the divisibility hypothesis was not refuted",
            );
        }
        Err(e) => out.failures.push(format!("reg_div: {e}")),
    }
    out.verified("reg_odd", &parallel());
    out.verified("reg_nondiv", &parallel());
    let order = 41;
    for l in 2..=5 {
        let what = format!("b_{l}");
        matches_counts(out, &gf_breg(l, order), order, &what, |n| count_breg(l, n));
        matches_counts(out, &gf_breg_product(l, order), order, &what, |n| count_breg(l, n));
        for m in 1..=4 {
            let s = gf_areg(m, l, order);
            matches_counts(out, &s, order, &format!("a_{m}({l})"), |n| count_areg(m, l, n));
        }
    }
    for m in 1..=4 {
        matches_counts(
            out,
            &gf_areg_l2(m, order),
            order,
            &format!("a_{m}(2) product form"),
            |n| count_areg(m, 2, n),
        );
    }
}

fn criterion_10(out: &mut Outcome) {
    out.verified("remark7", &parallel());
    let alt = gf_abar_m_alt(2, 20);
    let coeffs: Vec<String> = (0..20).map(|n| alt.coeff(n).unwrap_or_default().to_string()).collect();
    out.note(format!(
        "alternative ā_2 series, first 20 coefficients: {}",
        coeffs.join(", ")
    ));
    out.require(coeffs.len() == 20, "alternative series did not build");
}

fn properties(out: &mut Outcome) {
    let mut runner = TestRunner::new(Config::with_cases(500));
    let mut check = |name: &str, r: Result<(), String>| match r {
        Ok(()) => out.note(format!("{name}: 500 cases")),
        Err(e) => out.failures.push(format!("{name}: {e}")),
    };
    let ring = runner.run(&(common::series(), common::series(), common::series()), |(a, b, c)| {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(common::agree(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(common::agree(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        Ok(())
    });
    check("ring laws", ring.map_err(|e| e.to_string()));
    let inverse = runner.run(&common::unit_series(), |u| {
        let v = u.min_exp();
        let end = u.trunc_order();
        let inv = u.inv(end - 2 * v).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let prod = u.mul(&inv);
        prop_assert_eq!(prod.trunc_order(), end - v);
        prop_assert!(prod.eq_to(&LaurentSeries::one(end - v), end - v).unwrap());
        Ok(())
    });
    check("inverse law", inverse.map_err(|e| e.to_string()));
    let parts = runner.run(&common::series(), |s| {
        let (pos, nonpos) = (s.pos_part(), s.nonpos_part());
        prop_assert_eq!(pos.add(&nonpos), s);
        prop_assert!(pos.terms().all(|(e, c)| e >= 1 || c == &BigInt::from(0)));
        prop_assert!(nonpos.terms().all(|(e, c)| e <= 0 || c == &BigInt::from(0)));
        Ok(())
    });
    check("pos/nonpos decomposition", parts.map_err(|e| e.to_string()));
    let round_trip = runner.run(&common::ast(), |a| {
        let text = dsl::format(&a);
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(back, a);
        Ok(())
    });
    check("DSL round trip", round_trip.map_err(|e| e.to_string()));

    for a in 0..=12 {
        for b in 0..=a {
            out.require(qbin(a, b) == qbin(a, a - b), format!("qbin symmetry a={a}, b={b}"));
            if a >= 1 {
                let pascal = qbin(a - 1, b - 1).add(&qbin(a - 1, b).shift(b));
                out.require(qbin(a, b) == pascal, format!("q-Pascal a={a}, b={b}"));
            }
        }
    }
    for n in 1..=30 {
        out.require(count_pbar(n) % 2u32 == BigInt::from(0), format!("p̄({n}) is odd"));
    }
}

fn qpart(args: &[&str], cache: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qpart"));
    cmd.env_remove("QPART_CACHE").env_remove("QPART_ORDER");
    if let Some(path) = cache {
        cmd.arg("--cache").arg(path);
    }
    cmd.args(args).output().expect("qpart runs")
}

fn cli(out: &mut Outcome) {
    let cases: [(&[&str], i32); 6] = [
        (&["seq", "p", "--to", "10"], 0),
        (&["verify", "prop1", "--to", "60"], 0),
        (&["verify", "remark7", "--to", "5"], 1),
        (&["verify", "no_such_identity"], 2),
        (&["series", "1/(2+q)"], 2),
        (&["series", "poch(q;;3)"], 2),
    ];
    for (args, want) in cases {
        let got = qpart(args, None).status.code();
        out.require(
            got == Some(want),
            format!("qpart {}: exit {got:?}, want {want}", args.join(" ")),
        );
    }
    let dir = match tempfile::tempdir() {
        Ok(d) => d,
        Err(e) => return out.failures.push(format!("temp dir: {e}")),
    };
    let cache = dir.path().join("p.json");
    let args = ["seq", "p", "--to", "300"];
    let plain = qpart(&args, None).stdout;
    let cold = qpart(&args, Some(&cache)).stdout;
    let warm = qpart(&args, Some(&cache));
    out.require(
        cold == plain && warm.stdout == plain,
        "cached output differs from uncached output",
    );
    out.require(warm.stderr.is_empty(), "warm cache produced warnings");
    if let Ok(text) = std::fs::read_to_string(&cache) {
        let _ = std::fs::write(&cache, text.replacen("\"42\"", "\"41\"", 1));
    }
    let tampered = qpart(&args, Some(&cache));
    out.require(tampered.stdout == plain, "tampered cache changed the output");
    out.require(!tampered.stderr.is_empty(), "tampered cache was accepted silently");
    out.note("CLI exit codes 0/1/2 and cache transparency checked");
}

fn criterion_11(out: &mut Outcome) {
    properties(out);
    cli(out);
}

type Criterion = (u32, &'static str, fn(&mut Outcome));

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "a_2 through p, enumerated to 60", criterion_1),
        (2, "a_m through restricted counts, bijection", criterion_2),
        (3, "general a_m formula and the at-least convention", criterion_3),
        (4, "a_3 and a_4 formulas to 120", criterion_4),
        (5, "a_m generating functions at order 60", criterion_5),
        (6, "fixed difference generating function", criterion_6),
        (7, "basic hypergeometric identities at order 50", criterion_7),
        (8, "overpartitions", criterion_8),
        (9, "l-regular partitions", criterion_9),
        (10, "p(2n, n) identity and the alternative ā_2 series", criterion_10),
        (11, "property suites and CLI contract", criterion_11),
    ];
    let started = Instant::now();
    let mut failed = 0;
    for (number, title, run) in criteria {
        let t = Instant::now();
        let mut out = Outcome::default();
        run(&mut out);
        let verdict = if out.failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {number}: {verdict} {title} ({:.2}s)",
            t.elapsed().as_secs_f64()
        );
        for n in &out.notes {
            println!("    {n}");
        }
        for f in &out.failures {
            println!("    failure: {f}");
        }
        if !out.failures.is_empty() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed ({:.1}s)",
        criteria.len() - failed,
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
