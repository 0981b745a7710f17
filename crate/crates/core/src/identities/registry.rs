//! The identity table. In every countwise entry the left side comes from
//! enumeration and the right side from a closed form or a different
//! enumerated family.

use num_bigint::BigInt;

use super::memo;
use super::qhyper::{phi, product_ratio};
use super::{Axis, Constraint, EvalError, Grid, Identity, Kind, Point, Value};
use crate::closed_forms::{
    a2_via_p, a3_via_p, a4_via_p, ag1_via_p, gf_a_m_diff, gf_a_m_sum, gf_a_m_thm, gf_breg, gf_pbar, gf_ubar,
    remark7_rhs,
};
use crate::enumeration::{
    count_a_diff, count_abar, count_abar_diff, count_areg, count_areg_diff, count_breg_diff, count_p_fixed_diff,
    count_pbar_diff, count_ubar,
};
use crate::qobjects::{poch_finite, qbinomial_theorem_lhs_rhs, Monomial};
use crate::series::LaurentSeries;

type Eval = Result<Value, EvalError>;

/// Largest `n` for which `a_m(n)` is enumerated; beyond it the summation-form
/// generating function supplies the left side.
const ENUMERATION_LIMIT: i64 = 60;

/// Monomial grid `{0, ±q, ±q^2, q^3}`.
const MONO: [i64; 6] = [-2, -1, 0, 1, 2, 3];
/// The same without 0.
const MONO_NONZERO: [i64; 5] = [-2, -1, 1, 2, 3];

fn count(c: BigInt) -> Eval {
    Ok(Value::Count(c))
}

fn series(s: LaurentSeries) -> Eval {
    Ok(Value::Series(s))
}

fn n_axis(lo: i64, hi: i64) -> Axis {
    Axis::range("n", lo, hi)
}

fn countwise(
    id: &'static str,
    statement: &'static str,
    grid: Grid,
    lhs: fn(&Point, i64) -> Eval,
    rhs: fn(&Point, i64) -> Eval,
) -> Identity {
    Identity {
        id,
        statement,
        kind: Kind::Countwise,
        grid,
        order: None,
        lhs,
        rhs,
    }
}

fn serieswise(
    id: &'static str,
    statement: &'static str,
    grid: Grid,
    order: i64,
    lhs: fn(&Point, i64) -> Eval,
    rhs: fn(&Point, i64) -> Eval,
) -> Identity {
    Identity {
        id,
        statement,
        kind: Kind::Serieswise,
        grid,
        order: Some(order),
        lhs,
        rhs,
    }
}

/// `a_m(n)` by enumeration for small `n`, by the summation form above that.
fn a_count(m: u32, n: i64) -> BigInt {
    if n <= ENUMERATION_LIMIT {
        BigInt::from(memo::enumerated_a(m, n))
    } else {
        memo::sum_form(m, n + 1).coeff(n).expect("summation form covers n")
    }
}

fn enumerated_series(order: i64, mut coeff: impl FnMut(i64) -> BigInt) -> LaurentSeries {
    LaurentSeries::from_coeffs(0, (0..order.max(0)).map(&mut coeff), order)
}

fn series_coeff(s: &LaurentSeries, n: i64) -> BigInt {
    s.coeff(n).expect("series built past n")
}

// a_m(n) with the smallest part repeated

fn lhs_a2(p: &Point, _: i64) -> Eval {
    count(a_count(2, p.int("n")))
}

fn lhs_a3(p: &Point, _: i64) -> Eval {
    count(a_count(3, p.int("n")))
}

fn lhs_a4(p: &Point, _: i64) -> Eval {
    count(a_count(4, p.int("n")))
}

fn lhs_am(p: &Point, _: i64) -> Eval {
    count(a_count(p.small("m"), p.int("n")))
}

fn rhs_prop1(p: &Point, _: i64) -> Eval {
    count(a2_via_p(p.int("n")))
}

fn rhs_prop2(p: &Point, _: i64) -> Eval {
    let n = p.int("n");
    count(count_p_fixed_diff(2 * n, n as u32))
}

fn rhs_prop3(p: &Point, _: i64) -> Eval {
    let n = p.int("n");
    count(count_a_diff(p.small("m") - 1, 2 * n, n as u32))
}

fn rhs_g1(p: &Point, _: i64) -> Eval {
    count(ag1_via_p(p.small("m"), p.int("n")))
}

fn rhs_a3(p: &Point, _: i64) -> Eval {
    count(a3_via_p(p.int("n")))
}

fn rhs_a4(p: &Point, _: i64) -> Eval {
    count(a4_via_p(p.int("n")))
}

fn lhs_am_series(p: &Point, order: i64) -> Eval {
    let m = p.small("m");
    series(enumerated_series(order, |n| BigInt::from(memo::enumerated_a(m, n))))
}

fn rhs_am_sum(p: &Point, order: i64) -> Eval {
    series(gf_a_m_sum(p.small("m"), order))
}

fn rhs_am_thm(p: &Point, order: i64) -> Eval {
    series(gf_a_m_thm(p.small("m"), order))
}

fn lhs_amd_series(p: &Point, order: i64) -> Eval {
    let (m, l) = (p.small("m"), p.small("l"));
    series(enumerated_series(order, |n| count_a_diff(m, n, l)))
}

fn rhs_amd(p: &Point, order: i64) -> Eval {
    series(gf_a_m_diff(p.small("m"), p.small("l"), order)?)
}

// q-series transformations

fn lhs_cauchy(p: &Point, order: i64) -> Eval {
    series(phi(&[p.mono("a")], &[], p.mono("t"), order)?)
}

fn rhs_cauchy(p: &Point, order: i64) -> Eval {
    let (a, t) = (p.mono("a"), p.mono("t"));
    series(product_ratio(&[a * t], &[t], order)?)
}

fn lhs_cauchy_cor(p: &Point, order: i64) -> Eval {
    series(phi(&[], &[], p.mono("t"), order)?)
}

fn rhs_cauchy_cor(p: &Point, order: i64) -> Eval {
    series(product_ratio(&[], &[p.mono("t")], order)?)
}

fn lhs_heine(p: &Point, order: i64) -> Eval {
    let (a, b, c, t) = (p.mono("a"), p.mono("b"), p.mono("c"), p.mono("t"));
    series(phi(&[a, b], &[c], t, order)?)
}

fn ratio(x: Monomial, y: Monomial) -> Monomial {
    x.checked_div(y).expect("grid divisors are ±q^e")
}

fn rhs_heine(p: &Point, order: i64) -> Eval {
    let (a, b, c, t) = (p.mono("a"), p.mono("b"), p.mono("c"), p.mono("t"));
    let at = a * t;
    let pre = product_ratio(&[b, at], &[c, t], order)?;
    let sum = phi(&[ratio(c, b), t], &[at], b, order)?;
    series(pre.mul(&sum))
}

fn lhs_heine2(p: &Point, order: i64) -> Eval {
    let (a, b, c, z) = (p.mono("a"), p.mono("b"), p.mono("c"), p.mono("z"));
    series(phi(&[a, b], &[c], z, order)?)
}

fn rhs_heine2(p: &Point, order: i64) -> Eval {
    let (a, b, c, z) = (p.mono("a"), p.mono("b"), p.mono("c"), p.mono("z"));
    let bz = b * z;
    let c_over_b = ratio(c, b);
    let pre = product_ratio(&[c_over_b, bz], &[c, z], order)?;
    let sum = phi(&[ratio(a * bz, c), b], &[bz], c_over_b, order)?;
    series(pre.mul(&sum))
}

fn lhs_qbinthm(p: &Point, order: i64) -> Eval {
    let n = p.int("n") as u64;
    series(poch_finite(p.mono("z"), 1, n).truncate(order))
}

fn rhs_qbinthm(p: &Point, order: i64) -> Eval {
    series(qbinomial_theorem_lhs_rhs(p.int("n") as u64, p.mono("z"), order).1)
}

// overpartitions

fn lhs_abar2(p: &Point, _: i64) -> Eval {
    count(count_abar(2, p.int("n")))
}

fn rhs_over_a2(p: &Point, _: i64) -> Eval {
    let n = p.int("n");
    let pbar = gf_pbar(n + 2);
    count(2 * series_coeff(&pbar, n) - series_coeff(&pbar, n + 1) + count_ubar(n + 1))
}

fn lhs_over1(p: &Point, _: i64) -> Eval {
    count(2 * count_abar(2, p.int("n")))
}

fn rhs_over1(p: &Point, _: i64) -> Eval {
    let n = p.int("n");
    count(count_pbar_diff(2 * n, n as u32))
}

fn lhs_over_gen(p: &Point, _: i64) -> Eval {
    count(2 * count_abar(p.small("m"), p.int("n")))
}

fn rhs_over_gen(p: &Point, _: i64) -> Eval {
    let n = p.int("n");
    count(count_abar_diff(p.small("m") - 1, 2 * n, n as u32))
}

fn lhs_ubar_series(_: &Point, order: i64) -> Eval {
    series(enumerated_series(order, count_ubar))
}

fn rhs_ubar(_: &Point, order: i64) -> Eval {
    series(gf_ubar(order))
}

// l-regular partitions

fn lhs_areg22(p: &Point, _: i64) -> Eval {
    count(count_areg(2, 2, p.int("n")))
}

fn rhs_reg_a2(p: &Point, _: i64) -> Eval {
    let n = p.int("n");
    let b2 = gf_breg(2, n + 3);
    count(series_coeff(&b2, n) + series_coeff(&b2, n + 1) - series_coeff(&b2, n + 2))
}

fn lhs_areg(p: &Point, _: i64) -> Eval {
    count(count_areg(p.small("m"), p.small("l"), p.int("n")))
}

fn rhs_reg_div(p: &Point, _: i64) -> Eval {
    let (m, l, n) = (p.small("m"), p.small("l"), p.int("n"));
    if m == 2 {
        count(count_breg_diff(l, 2 * n, n as u32))
    } else {
        count(count_areg_diff(m - 1, l, 2 * n, n as u32))
    }
}

fn rhs_reg_odd(p: &Point, _: i64) -> Eval {
    let n = p.int("n");
    count(count_breg_diff(2, 2 * n + 1, n as u32 + 1))
}

fn rhs_reg_nondiv(p: &Point, _: i64) -> Eval {
    let (m, l, n) = (p.small("m"), p.small("l"), p.int("n"));
    let shift = l as i64 - n.rem_euclid(l as i64);
    count(count_areg_diff(m - 1, l, 2 * n + shift, (n + shift) as u32))
}

// p(2n, n)

fn lhs_remark7(p: &Point, _: i64) -> Eval {
    let n = p.int("n");
    count(count_p_fixed_diff(2 * n, n as u32))
}

fn rhs_remark7(p: &Point, _: i64) -> Eval {
    count(remark7_rhs(p.int("n")))
}

/// Every identity, in a fixed order.
pub fn registry() -> Vec<Identity> {
    use Constraint as C;
    let m_l = |m: (i64, i64), l: (i64, i64), n: (i64, i64), c| {
        Grid::new(
            vec![Axis::range("m", m.0, m.1), Axis::range("l", l.0, l.1), n_axis(n.0, n.1)],
            c,
        )
    };
    vec![
        countwise("prop1", "a_2(n) = 2p(n) - p(n+1)", Grid::new(vec![n_axis(1, 200)], C::None), lhs_a2, rhs_prop1),
        countwise("prop2", "a_2(n) = p(2n, n)", Grid::new(vec![n_axis(1, 25)], C::None), lhs_a2, rhs_prop2),
        countwise(
            "prop3",
            "a_m(n) = a_{m-1}(2n, n)",
            Grid::new(vec![Axis::range("m", 2, 5), n_axis(1, 25)], C::None),
            lhs_am,
            rhs_prop3,
        ),
        countwise(
            "thmG1",
            "a_m(n) = p(n) - Σ_{l=1}^{m-1} Σ_k Q_{l,k}(n) with Q_{l,k}(n) = p(n - l(k-1)) - p(n - lk)",
            Grid::new(vec![Axis::range("m", 2, 6), n_axis(1, 60)], C::None),
            lhs_am,
            rhs_g1,
        ),
        countwise(
            "thm_a3",
            "a_3(n) = 3p(n) - p(n+1) - 2p(n+2) + p(n+3)",
            Grid::new(vec![n_axis(1, 120)], C::None),
            lhs_a3,
            rhs_a3,
        ),
        countwise(
            "thm_a4",
            "a_4(n) = 4p(n) - p(n+1) - 2p(n+2) - 2p(n+3) + 2p(n+4) + 2p(n+5) - p(n+6)",
            Grid::new(vec![n_axis(1, 120)], C::None),
            lhs_a4,
            rhs_a4,
        ),
        serieswise(
            "eq_am",
            "Σ a_m(n) q^n = Σ_{k>=0} q^{k+m} (1-q^{k+1})···(1-q^{k+m-1}) / (q)_{k+m}",
            Grid::new(vec![Axis::range("m", 1, 6)], C::None),
            60,
            lhs_am_series,
            rhs_am_sum,
        ),
        serieswise(
            "thm_am",
            "Σ a_m(n) q^n = P_m(q)/(q)_∞ minus its terms of non-positive degree",
            Grid::new(vec![Axis::range("m", 2, 6)], C::None),
            60,
            lhs_am_series,
            rhs_am_thm,
        ),
        serieswise(
            "thm_and",
            "Σ a_m(n, l) q^n = (-1)^{m+1} q^{l+m+1-(m+1)(m+2)/2} (q)_m (q)_{l-m-1} ((q)_l - Σ_{j<=m} [l,j] (-1)^j q^{j(j+1)/2}) / (q)_l^2",
            Grid::new(vec![Axis::range("m", 1, 7), Axis::range("l", 2, 8)], C::MBelowL),
            60,
            lhs_amd_series,
            rhs_amd,
        ),
        serieswise(
            "cauchy",
            "Σ (a)_k t^k / (q)_k = (at)_∞ / (t)_∞",
            Grid::new(vec![Axis::powers("a", &MONO), Axis::powers("t", &MONO)], C::None),
            50,
            lhs_cauchy,
            rhs_cauchy,
        ),
        serieswise(
            "cauchy_cor",
            "Σ t^k / (q)_k = 1 / (t)_∞",
            Grid::new(vec![Axis::powers("t", &MONO)], C::None),
            50,
            lhs_cauchy_cor,
            rhs_cauchy_cor,
        ),
        serieswise(
            "heine",
            "Σ (a)_k (b)_k t^k / ((q)_k (c)_k) = (b)_∞ (at)_∞ / ((c)_∞ (t)_∞) Σ (c/b)_k (t)_k b^k / ((q)_k (at)_k)",
            Grid::new(
                vec![
                    Axis::powers("a", &MONO),
                    Axis::powers("b", &MONO_NONZERO),
                    Axis::powers("c", &[0, 2, 3]),
                    Axis::powers("t", &MONO),
                ],
                C::None,
            ),
            50,
            lhs_heine,
            rhs_heine,
        ),
        serieswise(
            "heine2",
            "Σ (a)_k (b)_k z^k / ((q)_k (c)_k) = (c/b)_∞ (bz)_∞ / ((c)_∞ (z)_∞) Σ (abz/c)_k (b)_k (c/b)^k / ((q)_k (bz)_k)",
            Grid::new(
                vec![
                    Axis::powers("a", &MONO),
                    Axis::powers("b", &MONO_NONZERO),
                    Axis::powers("c", &[2, 3, 4, 5]),
                    Axis::powers("z", &MONO),
                ],
                C::CAboveB,
            ),
            50,
            lhs_heine2,
            rhs_heine2,
        ),
        serieswise(
            "qbinthm",
            "(z)_n = Σ_j [n, j] (-1)^j z^j q^{j(j-1)/2}",
            Grid::new(vec![n_axis(0, 8), Axis::powers("z", &MONO)], C::None),
            60,
            lhs_qbinthm,
            rhs_qbinthm,
        ),
        countwise(
            "over_a2",
            "ā_2(n) = 2p̄(n) - p̄(n+1) + ū(n+1)",
            Grid::new(vec![n_axis(1, 20)], C::None),
            lhs_abar2,
            rhs_over_a2,
        ),
        countwise("over1", "2ā_2(n) = p̄(2n, n)", Grid::new(vec![n_axis(1, 16)], C::None), lhs_over1, rhs_over1),
        countwise(
            "over_gen",
            "2ā_m(n) = ā_{m-1}(2n, n)",
            Grid::new(vec![Axis::range("m", 2, 4), n_axis(1, 14)], C::None),
            lhs_over_gen,
            rhs_over_gen,
        ),
        countwise(
            "reg_a2",
            "a_{2(2)}(n) = b_2(n) + b_2(n+1) - b_2(n+2)",
            Grid::new(vec![n_axis(1, 60)], C::None),
            lhs_areg22,
            rhs_reg_a2,
        ),
        countwise(
            "reg_div",
            "a_{m(l)}(n) = a_{(m-1)(l)}(2n, n) for l | n, with a_{1(l)} = b_l",
            m_l((2, 4), (2, 5), (1, 48), C::LDividesN),
            lhs_areg,
            rhs_reg_div,
        ),
        countwise(
            "reg_odd",
            "a_{2(2)}(n) = b_2(2n+1, n+1) for odd n",
            Grid::new(vec![n_axis(1, 31)], C::OddN),
            lhs_areg22,
            rhs_reg_odd,
        ),
        countwise(
            "reg_nondiv",
            "a_{m(l)}(n) = a_{(m-1)(l)}(2n+l-r, n+l-r) for n ≡ r (mod l), 0 < r < l",
            m_l((2, 4), (2, 4), (1, 30), C::LNotDividesN),
            lhs_areg,
            rhs_reg_nondiv,
        ),
        countwise(
            "remark7",
            "p(2n, n) = 1 + p(n-2) + Σ_{m=2}^{⌊n/3⌋} p*_m(n-2m)",
            Grid::new(vec![n_axis(1, 60)], C::None),
            lhs_remark7,
            rhs_remark7,
        ),
        serieswise(
            "ubar_gf",
            "Σ ū(n) q^n = 2 Σ_{k>=1} (q^{2k+1}/(1-q^{k+1}) + Σ_{t>=2} q^{3k+2t-1} (1+q) (-q^{k+1})_{t-2} / (q^{k+1})_t)",
            Grid::new(vec![], C::None),
            25,
            lhs_ubar_series,
            rhs_ubar,
        ),
    ]
}
