//! Frozen tables from an independent brute-force enumerator (plain recursion
//! over all partitions, predicates applied afterwards), checked against the
//! library's counters and generating functions.

use num_bigint::BigInt;
use qpartitions::closed_forms::{gf_a_m_diff, gf_abar_m_alt, gf_breg, gf_pbar, remark7_rhs};
use qpartitions::dsl::evaluate;
use qpartitions::enumeration::{
    count_a, count_a_diff, count_abar, count_areg, count_breg, count_p, count_p_fixed_diff, count_pbar, count_ubar,
};
use qpartitions::enumeration::{Overpartition, Partition};
use qpartitions::identities::bijections::{over1_pair, prop3_forward};
use qpartitions::qobjects::qbin;
use qpartitions::series::LaurentSeries;

const P: [u64; 31] = [
    1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627, 792, 1002, 1255, 1575, 1958,
    2436, 3010, 3718, 4565, 5604,
];
const A2: [u64; 20] = [
    0, 1, 1, 3, 3, 7, 8, 14, 18, 28, 35, 53, 67, 94, 121, 165, 209, 280, 353, 462,
];
const A3: [u64; 20] = [
    0, 0, 1, 1, 2, 4, 5, 8, 13, 17, 24, 36, 47, 64, 88, 116, 153, 203, 261, 340,
];
const A4: [u64; 20] = [
    0, 0, 0, 1, 1, 2, 3, 6, 7, 12, 16, 25, 32, 46, 61, 86, 110, 149, 192, 257,
];
const P2NN: [u64; 15] = [0, 1, 1, 3, 3, 7, 8, 14, 18, 28, 35, 53, 67, 94, 121];
const PBAR: [u64; 13] = [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232, 344, 504];
const ABAR2: [u64; 10] = [0, 2, 2, 8, 10, 22, 34, 58, 88, 142];
const UBAR: [u64; 13] = [0, 0, 0, 2, 0, 4, 2, 6, 6, 12, 12, 22, 26];
const B2: [u64; 21] = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64];
const B3: [u64; 21] = [
    1, 1, 2, 2, 4, 5, 7, 9, 13, 16, 22, 27, 36, 44, 57, 70, 89, 108, 135, 163, 202,
];
const A22: [u64; 20] = [0, 1, 1, 1, 2, 3, 3, 4, 6, 7, 9, 11, 13, 17, 21, 24, 30, 36, 42, 51];
const A1_DIFF2: [u64; 26] = [
    0, 0, 0, 0, 1, 1, 3, 3, 6, 6, 10, 10, 15, 15, 21, 21, 28, 28, 36, 36, 45, 45, 55, 55, 66, 66,
];
const A2_DIFF3: [u64; 26] = [
    0, 0, 0, 0, 0, 0, 1, 1, 2, 4, 5, 7, 11, 13, 17, 23, 27, 33, 42, 48, 57, 69, 78, 90, 106, 118,
];
const REMARK7_RHS: [u64; 12] = [1, 2, 2, 3, 4, 7, 9, 14, 19, 28, 36, 53];
const ALT_ABAR2: [u64; 20] = [
    0, 0, 1, 2, 5, 8, 17, 26, 45, 72, 113, 170, 261, 384, 561, 810, 1157, 1632, 2289, 3170,
];

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn check(name: &str, table: &[u64], first: i64, f: impl Fn(i64) -> BigInt) {
    for (i, &v) in table.iter().enumerate() {
        let n = first + i as i64;
        assert_eq!(f(n), big(v), "{name}({n})");
    }
}

fn coeffs_of(s: &LaurentSeries, first: i64, table: &[u64], name: &str) {
    for (i, &v) in table.iter().enumerate() {
        let n = first + i as i64;
        assert_eq!(s.coeff(n).unwrap(), big(v), "{name} coefficient {n}");
    }
}

#[test]
fn partition_numbers() {
    check("p", &P, 0, count_p);
    assert_eq!(count_p(-1), big(0));
}

#[test]
fn smallest_part_multiplicity() {
    check("a_2", &A2, 1, |n| count_a(2, n));
    check("a_3", &A3, 1, |n| count_a(3, n));
    check("a_4", &A4, 1, |n| count_a(4, n));
    check("p(2n,n)", &P2NN, 1, |n| count_p_fixed_diff(2 * n, n as u32));
}

#[test]
fn overpartition_tables() {
    check("p̄", &PBAR, 0, count_pbar);
    coeffs_of(&gf_pbar(13), 0, &PBAR, "p̄ series");
    check("ā_2", &ABAR2, 1, |n| count_abar(2, n));
    check("ū", &UBAR, 0, count_ubar);
    coeffs_of(&gf_abar_m_alt(2, 20), 0, &ALT_ABAR2, "alternative ā_2 series");
}

#[test]
fn regular_tables() {
    check("b_2", &B2, 0, |n| count_breg(2, n));
    check("b_3", &B3, 0, |n| count_breg(3, n));
    coeffs_of(&gf_breg(2, 21), 0, &B2, "b_2 series");
    coeffs_of(&gf_breg(3, 21), 0, &B3, "b_3 series");
    check("a_2(2)", &A22, 1, |n| count_areg(2, 2, n));
}

#[test]
fn fixed_difference_tables() {
    check("a_1(n,2)", &A1_DIFF2, 0, |n| count_a_diff(1, n, 2));
    check("a_2(n,3)", &A2_DIFF3, 0, |n| count_a_diff(2, n, 3));
    coeffs_of(&gf_a_m_diff(1, 2, 26).unwrap(), 0, &A1_DIFF2, "a_1(n,2) series");
    coeffs_of(&gf_a_m_diff(2, 3, 26).unwrap(), 0, &A2_DIFF3, "a_2(n,3) series");
}

#[test]
fn remark7_right_side() {
    check("remark7 rhs", &REMARK7_RHS, 1, remark7_rhs);
}

#[test]
fn expansions() {
    let expect = LaurentSeries::polynomial(0, [1i64, 1, 2, 1, 1]);
    assert_eq!(qbin(4, 2), expect);
    let s = evaluate("1/poch(q;1;inf)", 8).unwrap();
    coeffs_of(&s, 0, &P[..8], "1/(q)_inf");
    let s = evaluate("poch(q;1;3)", 7).unwrap();
    let want: Vec<BigInt> = [1, -1, -1, 0, 1, 1, -1].into_iter().map(BigInt::from).collect();
    let got: Vec<BigInt> = (0..7).map(|n| s.coeff(n).unwrap()).collect();
    assert_eq!(got, want);
}

#[test]
fn bijection_examples() {
    let part = |p: &[u32]| Partition::new(p.to_vec()).unwrap();
    assert_eq!(prop3_forward(&part(&[2, 2]), 2).unwrap(), part(&[6, 2]));
    assert_eq!(prop3_forward(&part(&[1, 1, 1, 1]), 2).unwrap(), part(&[5, 1, 1, 1]));
    let over = |p: &[(u32, bool)]| Overpartition::new(p.iter().copied()).unwrap();
    let (a, b) = over1_pair(&over(&[(1, false), (1, false)])).unwrap();
    assert_eq!(a.to_string(), "3+1");
    assert_eq!(b.to_string(), "3\u{304}+1");
    let (a, b) = over1_pair(&over(&[(1, true), (1, false)])).unwrap();
    assert_eq!(a.to_string(), "3+1\u{304}");
    assert_eq!(b.to_string(), "3\u{304}+1\u{304}");
}
