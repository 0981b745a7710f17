//! Closed-form and summation-form generating functions for the restricted
//! partition families, plus the p(n)-linear formulas for `a_m(n)`.
//!
//! Every infinite sum here is cut off once the leading exponent of its
//! summand reaches the truncation order; the leading exponent grows strictly
//! with the summation index, so the discarded tail cannot touch the window.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::enumeration::{count_p, count_p_star, count_q, QConvention};
use crate::qobjects::{euler_qinf, poch_finite, poch_infinite, qbin, qfac, Monomial, QError};
use crate::series::{Coefficient, LaurentSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("parameters outside the formula's domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Q(#[from] QError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

type Result<T> = std::result::Result<T, ClosedFormError>;

/// `a_2(n) = 2p(n) - p(n+1)`
pub fn a2_via_p(n: i64) -> Coefficient {
    2 * count_p(n) - count_p(n + 1)
}

/// `a_3(n) = 3p(n) - p(n+1) - 2p(n+2) + p(n+3)`
pub fn a3_via_p(n: i64) -> Coefficient {
    3 * count_p(n) - count_p(n + 1) - 2 * count_p(n + 2) + count_p(n + 3)
}

/// `a_4(n) = 4p(n) - p(n+1) - 2p(n+2) - 2p(n+3) + p(n+4) + 2p(n+5) - p(n+6)`
pub fn a4_via_p(n: i64) -> Coefficient {
    4 * count_p(n) - count_p(n + 1) - 2 * count_p(n + 2) - 2 * count_p(n + 3) + count_p(n + 4) + 2 * count_p(n + 5)
        - count_p(n + 6)
}

/// The combinatorial formula for `a_m(n)` built from `p` and the double sum
/// of `Q_{l,k}(n)` over `2 <= l <= m-1`, `3 <= k <= floor(n/l) + 1`.
pub fn ag1_via_p_with(m: u32, n: i64, convention: QConvention) -> Coefficient {
    let mut v = 2 * count_p(n) - count_p(n + 1) - count_p(n - 2) + count_p(n - m as i64);
    for l in 2..m {
        let k_max = n.div_euclid(l as i64) + 1;
        for k in 3..=k_max {
            v -= count_q(l, k as u32, n, convention);
        }
    }
    v
}

/// [`ag1_via_p_with`] under the default `AtLeast` convention.
pub fn ag1_via_p(m: u32, n: i64) -> Coefficient {
    ag1_via_p_with(m, n, QConvention::AtLeast)
}

/// `P_m(q) = 1 + Σ_{k=1}^{m-1} (-1)^k Π_{i=0}^{k-1} (q^{-(m-1-i)} - 1)`, a
/// Laurent polynomial supported on exponents `[-m(m-1)/2, 0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmPolynomial {
    pub m: u32,
    pub series: LaurentSeries,
}

impl PmPolynomial {
    pub fn new(m: u32) -> Self {
        assert!(m >= 2, "P_m needs m >= 2");
        let one = LaurentSeries::exact_monomial(1, 0);
        let mut total = one.clone();
        let mut prod = one.clone();
        for k in 1..m as i64 {
            let i = k - 1;
            let factor = LaurentSeries::exact_monomial(1, -(m as i64 - 1 - i)).sub(&one);
            prod = prod.mul(&factor);
            total = if k % 2 == 1 { total.sub(&prod) } else { total.add(&prod) };
        }
        Self { m, series: total }
    }
}

/// `a_m(n) = Σ_i c_i p(n - i)` where `P_m = Σ_i c_i q^i`; valid for `n >= 1`.
pub fn am_via_p(m: u32, n: i64) -> Coefficient {
    let pm = PmPolynomial::new(m);
    pm.series
        .terms()
        .map(|(e, c)| c * count_p(n - e))
        .fold(BigInt::zero(), |acc, x| acc + x)
}

/// `Σ_{k>=0} q^{k+m}/(q)_{k+m} · (1-q^{k+1})···(1-q^{k+m-1})`
pub fn gf_a_m_sum(m: u32, order: i64) -> LaurentSeries {
    assert!(m >= 1, "m must be positive");
    let m = m as i64;
    let mut total = LaurentSeries::zero(order);
    // 1/(q)_{k+m}, extended one factor per step
    let mut denom = qfac(m as u64).inv(order).expect("(q)_n has constant term 1");
    let mut k = 0;
    while k + m < order {
        if k > 0 {
            denom = denom.div_one_minus(1, k + m).expect("positive exponent");
        }
        let numer = poch_finite(Monomial::q(k + 1), 1, (m - 1) as u64);
        total = total.add(&numer.mul(&denom).shift(k + m));
        k += 1;
    }
    total.truncate(order)
}

/// How the correction term `𝒟_m` is extracted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DmReading {
    /// Non-positive part of `P_m/(q)_∞`.
    #[default]
    FullProduct,
    /// Non-positive part of `P_m` alone.
    BracketOnly,
}

/// `P_m/(q)_∞ - 𝒟_m` under the chosen reading of `𝒟_m`.
pub fn gf_a_m_thm_with(m: u32, order: i64, reading: DmReading) -> LaurentSeries {
    let pm = PmPolynomial::new(m);
    let depth = -pm.series.min_exp();
    let inv = euler_qinf(order + depth)
        .inv(order + depth)
        .expect("(q)_inf has constant term 1");
    let full = pm.series.mul(&inv);
    match reading {
        DmReading::FullProduct => full.pos_part(),
        DmReading::BracketOnly => full.sub(&pm.series.nonpos_part()),
    }
    .truncate(order)
}

/// Generating function of `a_m(n)` as `P_m/(q)_∞` minus its non-positive part.
pub fn gf_a_m_thm(m: u32, order: i64) -> LaurentSeries {
    gf_a_m_thm_with(m, order, DmReading::FullProduct)
}

fn check_diff_domain(m: u32, l: u32) -> Result<()> {
    if m == 0 || l <= 1 || l <= m {
        return Err(ClosedFormError::Domain(format!(
            "closed form for a_m(n, l) needs m >= 1 and l >= m + 1 > 1 (got m = {m}, l = {l}); \
             for l <= m the bracketed sum is empty and the formula returns 0"
        )));
    }
    Ok(())
}

fn a_m_diff_closed(m: u32, l: u32, order: i64, low_index: i64) -> Result<LaurentSeries> {
    check_diff_domain(m, l)?;
    let (mi, li) = (m as i64, l as i64);
    let qz = Monomial::q(1);
    let mut bracket = qfac(l as u64);
    for j in 0..=mi {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let term = qbin(li, j).mul(&LaurentSeries::exact_monomial(sign, j + j * (j - 1) / 2));
        bracket = bracket.sub(&term);
    }
    let sign = if (m + 1).is_multiple_of(2) { 1 } else { -1 };
    let shift = li + mi + 1 - (mi + 1) * (mi + 2) / 2;
    let numer = LaurentSeries::exact_monomial(sign, shift)
        .mul(&poch_finite(qz, 1, m as u64))
        .mul(&poch_finite(qz, 1, low_index as u64))
        .mul(&bracket);
    let ql = qfac(l as u64);
    let denom = ql.mul(&ql).inv(order)?;
    Ok(numer.mul(&denom).truncate(order))
}

/// Generating function of `a_m(n, l)` (smallest part at least `m` times,
/// largest minus smallest equal to `l`):
///
/// `q^{l+m+1} (q)_m (q)_{l-m-1} / ((q)_l)^2 · (-1)^{m+1} q^{-(m+1)(m+2)/2}
///  · ((q)_l - Σ_{j=0}^{m} [l choose j]_q (-1)^j q^{j + j(j-1)/2})`.
///
/// Requires `l >= m + 1`.
pub fn gf_a_m_diff(m: u32, l: u32, order: i64) -> Result<LaurentSeries> {
    check_diff_domain(m, l)?;
    a_m_diff_closed(m, l, order, l as i64 - m as i64 - 1)
}

/// The same closed form with `(q)_{l-m+1}` in place of `(q)_{l-m-1}`. It does
/// not match enumeration; kept so the discrepancy stays reproducible.
pub fn gf_a_m_diff_as_printed(m: u32, l: u32, order: i64) -> Result<LaurentSeries> {
    check_diff_domain(m, l)?;
    a_m_diff_closed(m, l, order, l as i64 - m as i64 + 1)
}

fn inv_qinf(order: i64) -> LaurentSeries {
    euler_qinf(order).inv(order).expect("(q)_inf has constant term 1")
}

/// `Π (1+q^n)/(1-q^n)`
pub fn gf_pbar(order: i64) -> LaurentSeries {
    poch_infinite(Monomial::neg_q(1), 1, order)
        .expect("exponent 1 truncates")
        .mul(&inv_qinf(order))
}

/// `(-q^k)_∞ / (q^k)_∞`
fn over_tail(k: i64, order: i64) -> Result<LaurentSeries> {
    let num = poch_infinite(Monomial::neg_q(k), 1, order)?;
    let den = poch_infinite(Monomial::q(k), 1, order)?.inv(order)?;
    Ok(num.mul(&den))
}

/// `Σ_{k>=1} 2 q^{mk} (-q^k)_∞ / ((1+q^k)(q^k)_∞)`
pub fn gf_abar_m(m: u32, order: i64) -> LaurentSeries {
    assert!(m >= 1, "m must be positive");
    let m = m as i64;
    let mut total = LaurentSeries::zero(order);
    let mut k = 1;
    while m * k < order {
        let one_plus = LaurentSeries::polynomial(0, [1i64])
            .add(&LaurentSeries::exact_monomial(1, k))
            .inv(order)
            .expect("unit constant term");
        let term = over_tail(k, order)
            .expect("k >= 1")
            .mul(&one_plus)
            .scale(&BigInt::from(2))
            .shift(m * k);
        total = total.add(&term);
        k += 1;
    }
    total.truncate(order)
}

/// `Σ_{k>=1} q^{mk} (-q^k)_∞ / (q^k)_∞`, the generating function when an
/// overlined part and a plain part of equal value are told apart.
pub fn gf_abar_m_alt(m: u32, order: i64) -> LaurentSeries {
    assert!(m >= 1, "m must be positive");
    let m = m as i64;
    let mut total = LaurentSeries::zero(order);
    let mut k = 1;
    while m * k < order {
        total = total.add(&over_tail(k, order).expect("k >= 1").shift(m * k));
        k += 1;
    }
    total.truncate(order)
}

/// `2 Σ_{k>=1} ( q^{2k+1}/(q^{k+1};q)_1
///   + Σ_{t>=2} q^{3k+2t-1} (1+q) (-q^{k+1};q)_{t-2} / (q^{k+1};q)_t )`
pub fn gf_ubar(order: i64) -> LaurentSeries {
    let mut total = LaurentSeries::zero(order);
    let one_plus_q = LaurentSeries::polynomial(0, [1i64, 1]);
    let mut k = 1;
    while 2 * k + 1 < order {
        let head = poch_finite(Monomial::q(k + 1), 1, 1)
            .inv(order)
            .expect("unit constant term")
            .shift(2 * k + 1);
        total = total.add(&head);
        let mut t = 2;
        while 3 * k + 2 * t - 1 < order {
            let numer = one_plus_q.mul(&poch_finite(Monomial::neg_q(k + 1), 1, (t - 2) as u64));
            let denom = poch_finite(Monomial::q(k + 1), 1, t as u64)
                .inv(order)
                .expect("unit constant term");
            total = total.add(&numer.mul(&denom).shift(3 * k + 2 * t - 1));
            t += 1;
        }
        k += 1;
    }
    total.scale(&BigInt::from(2)).truncate(order)
}

/// `(q^l;q^l)_∞ / (q)_∞`
pub fn gf_breg(l: u32, order: i64) -> LaurentSeries {
    assert!(l >= 2, "l must be at least 2");
    poch_infinite(Monomial::q(l as i64), l as i64, order)
        .expect("exponent >= 2 truncates")
        .mul(&inv_qinf(order))
}

/// `1 / (q, q^2, ..., q^{l-1}; q^l)_∞`
pub fn gf_breg_product(l: u32, order: i64) -> LaurentSeries {
    assert!(l >= 2, "l must be at least 2");
    let params: Vec<Monomial> = (1..l as i64).map(Monomial::q).collect();
    crate::qobjects::multi_poch_infinite(&params, l as i64, order)
        .expect("positive exponents truncate")
        .inv(order)
        .expect("unit constant term")
}

/// `Σ_{k>=0} Σ_{t=1}^{l-1} q^{(lk+t)m} (q^{lk+1};q)_{t-1}
///   / (q^{lk+1}, ..., q^{lk+l-1}; q^l)_∞`
pub fn gf_areg(m: u32, l: u32, order: i64) -> LaurentSeries {
    assert!(m >= 1 && l >= 2, "need m >= 1 and l >= 2");
    let (m, l) = (m as i64, l as i64);
    let mut total = LaurentSeries::zero(order);
    let mut k = 0;
    while (l * k + 1) * m < order {
        let params: Vec<Monomial> = (1..l).map(|r| Monomial::q(l * k + r)).collect();
        let denom = crate::qobjects::multi_poch_infinite(&params, l, order)
            .expect("positive exponents truncate")
            .inv(order)
            .expect("unit constant term");
        for t in 1..l {
            let lead = (l * k + t) * m;
            if lead >= order {
                break;
            }
            let numer = poch_finite(Monomial::q(l * k + 1), 1, (t - 1) as u64);
            total = total.add(&numer.mul(&denom).shift(lead));
        }
        k += 1;
    }
    total.truncate(order)
}

/// The `l = 2` case: `q^m/(q;q^2)_∞ · Σ_{k>=0} (q;q^2)_k q^{2km}`.
pub fn gf_areg_l2(m: u32, order: i64) -> LaurentSeries {
    assert!(m >= 1, "m must be positive");
    let m = m as i64;
    let mut sum = LaurentSeries::zero(order);
    let mut k = 0;
    while 2 * k * m < order {
        sum = sum.add(&poch_finite(Monomial::q(1), 2, k as u64).shift(2 * k * m));
        k += 1;
    }
    let odd = poch_infinite(Monomial::q(1), 2, order)
        .expect("exponent 1 truncates")
        .inv(order)
        .expect("unit constant term");
    sum.mul(&odd).shift(m).truncate(order)
}

/// `1 + p(n-2) + Σ_{m=2}^{floor(n/3)} p*_m(n-2m)`
pub fn remark7_rhs(n: i64) -> Coefficient {
    let mut v = 1 + count_p(n - 2);
    for m in 2..=n.div_euclid(3) {
        v += count_p_star(m as u32, n - 2 * m);
    }
    v
}
