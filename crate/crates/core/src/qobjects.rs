//! q-series building blocks: Pochhammer symbols, Euler's product and
//! Gaussian binomial coefficients.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::series::{LaurentSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("infinite product (a;q^{step})_inf with a = {a} does not truncate (need exponent >= 1)")]
    NonTruncating { a: Monomial, step: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A Pochhammer parameter `coeff * q^exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: i64,
    pub exp: i64,
}

impl Monomial {
    pub const ZERO: Monomial = Monomial { coeff: 0, exp: 0 };

    pub fn new(coeff: i64, exp: i64) -> Self {
        if coeff == 0 {
            Self::ZERO
        } else {
            Self { coeff, exp }
        }
    }

    /// `q^exp`
    pub fn q(exp: i64) -> Self {
        Self::new(1, exp)
    }

    /// `-q^exp`
    pub fn neg_q(exp: i64) -> Self {
        Self::new(-1, exp)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff == 0
    }

    /// `self / other`, when the coefficient division is exact.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        if other.is_zero() || self.coeff % other.coeff != 0 {
            return None;
        }
        Some(Monomial::new(self.coeff / other.coeff, self.exp - other.exp))
    }

    pub fn pow(self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::new(1, 0);
        }
        Monomial::new(self.coeff.pow(k), self.exp * k as i64)
    }

    pub fn to_series(self) -> LaurentSeries {
        LaurentSeries::exact_monomial(self.coeff, self.exp)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.coeff * other.coeff, self.exp + other.exp)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coeff, self.exp) {
            (0, _) => f.write_str("0"),
            (c, 0) => write!(f, "{c}"),
            (c, e) => {
                match c {
                    1 => {}
                    -1 => f.write_str("-")?,
                    c => write!(f, "{c}*")?,
                }
                if e == 1 {
                    f.write_str("q")
                } else {
                    write!(f, "q^{e}")
                }
            }
        }
    }
}

fn factor(a: Monomial, shift: i64) -> LaurentSeries {
    LaurentSeries::polynomial(0, [1i64]).sub(&LaurentSeries::exact_monomial(a.coeff, a.exp + shift))
}

/// `(a; q^step)_n = Π_{i<n} (1 - a q^{step*i})` as an exact Laurent polynomial.
///
/// Panics if `step < 1`.
pub fn poch_finite(a: Monomial, step: i64, n: u64) -> LaurentSeries {
    assert!(step >= 1, "Pochhammer step must be positive, got {step}");
    let mut acc = LaurentSeries::exact_monomial(1, 0);
    if a.is_zero() {
        return acc;
    }
    for i in 0..n as i64 {
        acc = acc.mul(&factor(a, step * i));
    }
    acc
}

/// `(a; q^step)_inf` truncated at `order`.
pub fn poch_infinite(a: Monomial, step: i64, order: i64) -> Result<LaurentSeries, QError> {
    assert!(step >= 1, "Pochhammer step must be positive, got {step}");
    let mut acc = LaurentSeries::one(order);
    if a.is_zero() {
        return Ok(acc);
    }
    if a.exp < 1 {
        return Err(QError::NonTruncating { a, step });
    }
    let mut e = a.exp;
    while e < order {
        acc = acc.mul_one_minus(a.coeff, e);
        e += step;
    }
    Ok(acc)
}

/// `(a_1, ..., a_k; q^step)_inf`; the empty product is 1.
pub fn multi_poch_infinite(params: &[Monomial], step: i64, order: i64) -> Result<LaurentSeries, QError> {
    params.iter().try_fold(LaurentSeries::one(order), |acc, &a| {
        Ok(acc.mul(&poch_infinite(a, step, order)?))
    })
}

/// `(q;q)_inf` from Euler's pentagonal number theorem.
pub fn euler_qinf(order: i64) -> LaurentSeries {
    let len = order.max(0) as usize;
    let mut c = vec![BigInt::zero(); len];
    let mut j: i64 = 0;
    loop {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let lo = j * (3 * j - 1) / 2;
        if lo >= order {
            break;
        }
        c[lo as usize] += sign;
        if j > 0 {
            let hi = j * (3 * j + 1) / 2;
            if hi < order {
                c[hi as usize] += sign;
            }
        }
        j += 1;
    }
    LaurentSeries::from_coeffs(0, c, order)
}

/// `(q;q)_n`
pub fn qfac(n: u64) -> LaurentSeries {
    poch_finite(Monomial::q(1), 1, n)
}

/// Divides exact polynomials, panicking if the remainder is nonzero.
fn exact_div(num: &LaurentSeries, den: &LaurentSeries) -> LaurentSeries {
    let q_deg = num.trunc_order() - den.min_exp();
    let quotient = num
        .mul(&den.inv(q_deg).expect("divisor has unit lowest coefficient"))
        .truncate(q_deg);
    let coeffs: Vec<BigInt> = quotient.terms().map(|(_, c)| c.clone()).collect();
    let quotient = LaurentSeries::polynomial(quotient.min_exp(), coeffs);
    assert_eq!(&quotient.mul(den), num, "polynomial division left a remainder");
    quotient
}

/// Gaussian binomial `[a choose b]_q`, zero when `b < 0` or `b > a`.
pub fn qbin(a: i64, b: i64) -> LaurentSeries {
    if a < 0 || b < 0 || b > a {
        return LaurentSeries::polynomial(0, Vec::<BigInt>::new());
    }
    let den = qfac(b as u64).mul(&qfac((a - b) as u64));
    exact_div(&qfac(a as u64), &den)
}

/// Both sides of `(z;q)_n = Σ_j [n choose j]_q (-1)^j z^j q^{j(j-1)/2}`,
/// truncated at `order`.
pub fn qbinomial_theorem_lhs_rhs(n: u64, z: Monomial, order: i64) -> (LaurentSeries, LaurentSeries) {
    let lhs = poch_finite(z, 1, n);
    let mut rhs = LaurentSeries::polynomial(0, Vec::<BigInt>::new());
    for j in 0..=n as i64 {
        let zj = z.pow(j as u32);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let term = qbin(n as i64, j).mul(&LaurentSeries::exact_monomial(
            sign * zj.coeff,
            zj.exp + j * (j - 1) / 2,
        ));
        rhs = rhs.add(&term);
    }
    (lhs.truncate(order), rhs.truncate(order))
}
