//! Truncated basic hypergeometric sums with monomial parameters.

use crate::qobjects::Monomial;
use crate::series::{LaurentSeries, SeriesError};

fn check_positive(x: Monomial) -> Result<(), SeriesError> {
    if x.is_zero() || x.exp >= 1 {
        Ok(())
    } else {
        Err(SeriesError::NonInvertible {
            reason: format!("parameter {x} must be 0 or have positive exponent"),
        })
    }
}

/// Lowest exponent `(x;q)_k` can reach, as a non-negative depth.
fn depth(x: Monomial) -> i64 {
    if x.is_zero() || x.exp >= 0 {
        0
    } else {
        let s = -x.exp;
        s * (s + 1) / 2
    }
}

/// `Σ_{k>=0} (n_1)_k ··· (n_r)_k / ((q)_k (d_1)_k ··· (d_s)_k) · z^k`
/// truncated at `order`. Denominator parameters and `z` must be 0 or carry a
/// positive exponent; numerator parameters may have any exponent.
pub fn phi(numer: &[Monomial], denom: &[Monomial], z: Monomial, order: i64) -> Result<LaurentSeries, SeriesError> {
    for &d in denom {
        check_positive(d)?;
    }
    check_positive(z)?;
    let slack: i64 = numer.iter().map(|&x| depth(x)).sum();
    let work = order + slack;
    let mut term = LaurentSeries::one(work);
    let mut total = LaurentSeries::one(work);
    if z.is_zero() {
        return Ok(total.truncate(order));
    }
    let step = LaurentSeries::exact_monomial(z.coeff, z.exp);
    let mut k: i64 = 1;
    while k * z.exp - slack < order {
        for &x in numer {
            term = term.mul_one_minus(x.coeff, x.exp + k - 1);
        }
        for &x in denom {
            term = term.div_one_minus(x.coeff, x.exp + k - 1)?;
        }
        term = term.div_one_minus(1, k)?.mul(&step);
        if term.is_zero() {
            break;
        }
        total = total.add(&term);
        k += 1;
    }
    Ok(total.truncate(order))
}

/// `Π_x (x;q)_∞` over `numer` divided by the same over `denom`.
pub fn product_ratio(numer: &[Monomial], denom: &[Monomial], order: i64) -> Result<LaurentSeries, SeriesError> {
    let mut acc = LaurentSeries::one(order);
    for (&x, divide) in numer.iter().map(|x| (x, false)).chain(denom.iter().map(|x| (x, true))) {
        check_positive(x)?;
        if x.is_zero() {
            continue;
        }
        let mut e = x.exp;
        while e < order {
            acc = if divide {
                acc.div_one_minus(x.coeff, e)?
            } else {
                acc.mul_one_minus(x.coeff, e)
            };
            e += 1;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qobjects::{euler_qinf, poch_finite, qfac};

    #[test]
    fn euler_sum() {
        // Σ q^k/(q)_k = 1/(q)_∞
        let lhs = phi(&[], &[], Monomial::q(1), 30).unwrap();
        let rhs = euler_qinf(30).inv(30).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(product_ratio(&[], &[Monomial::q(1)], 30).unwrap(), rhs);
    }

    #[test]
    fn terms_match_direct_products() {
        let (a, b, c, z) = (Monomial::q(-2), Monomial::neg_q(1), Monomial::q(3), Monomial::q(2));
        let order = 20;
        let mut direct = LaurentSeries::zero(order);
        for k in 0..12u64 {
            let num = poch_finite(a, 1, k).mul(&poch_finite(b, 1, k));
            let den = qfac(k).mul(&poch_finite(c, 1, k)).inv(order + 10).unwrap();
            let zk = z.pow(k as u32);
            let t = num.mul(&den).mul(&LaurentSeries::exact_monomial(zk.coeff, zk.exp));
            direct = direct.add(&t.truncate(order));
        }
        assert_eq!(phi(&[a, b], &[c], z, order).unwrap(), direct);
    }

    #[test]
    fn rejects_bad_denominators() {
        assert!(phi(&[], &[Monomial::q(0)], Monomial::q(1), 10).is_err());
        assert!(phi(&[], &[], Monomial::q(-1), 10).is_err());
    }
}
