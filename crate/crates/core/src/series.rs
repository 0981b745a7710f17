//! Truncated formal Laurent series over arbitrary-precision integers.
//!
//! A [`LaurentSeries`] stores `c_e q^e` densely for `min_exp <= e < trunc_order`.
//! Coefficients inside that window are exact; nothing is claimed beyond it.
//! Binary operations shrink the window to the largest range on which the
//! result is provably correct given the windows of the inputs.
//!
//! Genuine polynomials (finite Pochhammer products, Gaussian binomials) are
//! marked *exact*: every coefficient outside the stored range is a known zero,
//! so they never limit the window of a product or sum.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact integer coefficient.
pub type Coefficient = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("exponent {exp} is not below the truncation order {order}")]
    InvalidWindow { exp: i64, order: i64 },
    #[error("series is not invertible over the integers: {reason}")]
    NonInvertible { reason: String },
    #[error("exponent {exp} lies outside the known window [{min}, {order})")]
    OutOfWindow { exp: i64, min: i64, order: i64 },
}

#[derive(Clone, Debug)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<Coefficient>,
    trunc_order: i64,
    exact: bool,
}

impl LaurentSeries {
    /// `0 + O(q^order)`.
    pub fn zero(order: i64) -> Self {
        Self {
            min_exp: order.min(0),
            coeffs: vec![Coefficient::zero(); (order - order.min(0)) as usize],
            trunc_order: order,
            exact: false,
        }
    }

    /// `1 + O(q^order)`; the zero series when `order <= 0`.
    pub fn one(order: i64) -> Self {
        Self::monomial(Coefficient::one(), 0, order).unwrap_or_else(|_| Self::zero(order))
    }

    /// `c q^e + O(q^order)`.
    pub fn monomial(c: impl Into<Coefficient>, e: i64, order: i64) -> Result<Self, SeriesError> {
        if e >= order {
            return Err(SeriesError::InvalidWindow { exp: e, order });
        }
        let mut coeffs = vec![Coefficient::zero(); (order - e) as usize];
        coeffs[0] = c.into();
        Ok(Self {
            min_exp: e,
            coeffs,
            trunc_order: order,
            exact: false,
        })
    }

    /// Builds `Σ coeffs[i] q^(min_exp + i) + O(q^order)`. Missing coefficients
    /// below `order` are zero; entries at or past `order` are dropped.
    pub fn from_coeffs<I, C>(min_exp: i64, coeffs: I, order: i64) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Coefficient>,
    {
        let min_exp = min_exp.min(order);
        let len = (order - min_exp) as usize;
        let mut v: Vec<Coefficient> = coeffs.into_iter().take(len).map(Into::into).collect();
        v.resize(len, Coefficient::zero());
        Self {
            min_exp,
            coeffs: v,
            trunc_order: order,
            exact: false,
        }
    }

    /// An exact Laurent polynomial `Σ coeffs[i] q^(min_exp + i)`.
    pub fn polynomial<I, C>(min_exp: i64, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Coefficient>,
    {
        let coeffs: Vec<Coefficient> = coeffs.into_iter().map(Into::into).collect();
        let mut s = Self {
            min_exp,
            trunc_order: min_exp + coeffs.len() as i64,
            coeffs,
            exact: true,
        };
        s.trim_exact();
        s
    }

    /// The exact polynomial `c q^e`.
    pub fn exact_monomial(c: impl Into<Coefficient>, e: i64) -> Self {
        Self::polynomial(e, [c.into()])
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// For exact polynomials this is `degree + 1`.
    pub fn trunc_order(&self) -> i64 {
        self.trunc_order
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// End of the known window; `None` for exact polynomials.
    fn window_end(&self) -> Option<i64> {
        (!self.exact).then_some(self.trunc_order)
    }

    fn stored(&self, e: i64) -> Option<&Coefficient> {
        if e < self.min_exp {
            return None;
        }
        self.coeffs.get((e - self.min_exp) as usize)
    }

    /// Coefficient at `e`, treating anything outside storage as zero. Only
    /// meaningful for `e` below the window end.
    fn get_or_zero(&self, e: i64) -> Coefficient {
        self.stored(e).cloned().unwrap_or_default()
    }

    /// The coefficient of `q^n`. Exponents below `min_exp` are known zeros;
    /// reads at or past the truncation order are errors. An exact polynomial
    /// answers zero above its degree.
    pub fn coeff(&self, n: i64) -> Result<Coefficient, SeriesError> {
        if !self.exact && n >= self.trunc_order {
            return Err(SeriesError::OutOfWindow {
                exp: n,
                min: self.min_exp,
                order: self.trunc_order,
            });
        }
        Ok(self.get_or_zero(n))
    }

    /// `(exponent, coefficient)` pairs over the stored window, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coefficient)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Coefficients for exponents `from..to`, which must lie in the window.
    pub fn coeff_range(&self, from: i64, to: i64) -> Result<Vec<Coefficient>, SeriesError> {
        (from..to).map(|e| self.coeff(e)).collect()
    }

    /// Exponent of the first nonzero coefficient inside the window.
    pub fn valuation(&self) -> Option<i64> {
        self.terms().find(|(_, c)| !c.is_zero()).map(|(e, _)| e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn trim_exact(&mut self) {
        debug_assert!(self.exact);
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        self.trunc_order = self.min_exp + self.coeffs.len() as i64;
    }

    /// Forgets everything at or above `order`. Exact polynomials become
    /// ordinary truncated series.
    pub fn truncate(&self, order: i64) -> Self {
        let end = self.window_end().map_or(order, |w| w.min(order));
        let min_exp = self.min_exp.min(end);
        Self {
            min_exp,
            coeffs: (min_exp..end).map(|e| self.get_or_zero(e)).collect(),
            trunc_order: end,
            exact: false,
        }
    }

    fn combine_window(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    fn sum_with(&self, other: &Self, negate_other: bool) -> Self {
        let min_exp = self.min_exp.min(other.min_exp);
        let (end, exact) = match Self::combine_window(self.window_end(), other.window_end()) {
            Some(end) => (end, false),
            None => (
                (self.min_exp + self.coeffs.len() as i64).max(other.min_exp + other.coeffs.len() as i64),
                true,
            ),
        };
        let coeffs = (min_exp..end)
            .map(|e| {
                let b = other.get_or_zero(e);
                let b = if negate_other { -b } else { b };
                self.get_or_zero(e) + b
            })
            .collect();
        let mut s = Self {
            min_exp,
            coeffs,
            trunc_order: end,
            exact,
        };
        if exact {
            s.trim_exact();
        }
        s
    }

    /// Coefficientwise sum on the common window.
    pub fn add(&self, other: &Self) -> Self {
        self.sum_with(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.sum_with(other, true)
    }

    pub fn neg(&self) -> Self {
        Self {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            trunc_order: self.trunc_order,
            exact: self.exact,
        }
    }

    pub fn scale(&self, k: &Coefficient) -> Self {
        let mut s = Self {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            trunc_order: self.trunc_order,
            exact: self.exact,
        };
        if s.exact {
            s.trim_exact();
        }
        s
    }

    /// Cauchy product. The result window ends at
    /// `min(a.trunc + b.min, b.trunc + a.min)`, ignoring exact factors.
    pub fn mul(&self, other: &Self) -> Self {
        let min_exp = self.min_exp + other.min_exp;
        let shifted_a = self.window_end().map(|w| w + other.min_exp);
        let shifted_b = other.window_end().map(|w| w + self.min_exp);
        let (end, exact) = match Self::combine_window(shifted_a, shifted_b) {
            Some(end) => (end.max(min_exp), false),
            None => (min_exp + (self.coeffs.len() + other.coeffs.len()) as i64, true),
        };
        let len = (end - min_exp) as usize;
        let mut coeffs = vec![Coefficient::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let mut s = Self {
            min_exp,
            coeffs,
            trunc_order: end,
            exact,
        };
        if exact {
            s.trim_exact();
        }
        s
    }

    /// Multiplicative inverse, truncated at `order` or earlier if the window
    /// of `self` cannot support it. The lowest nonzero coefficient must be a
    /// unit (`±1`).
    pub fn inv(&self, order: i64) -> Result<Self, SeriesError> {
        let v = self.valuation().ok_or_else(|| SeriesError::NonInvertible {
            reason: "series is zero on its known window".into(),
        })?;
        let lead = self.get_or_zero(v);
        if !(lead.is_one() || (-&lead).is_one()) {
            return Err(SeriesError::NonInvertible {
                reason: format!("lowest coefficient {lead} at q^{v} is not a unit"),
            });
        }
        // self = q^v * u(q) with u(0) = lead; 1/self = q^-v * (1/u).
        let mut end = order;
        if let Some(w) = self.window_end() {
            end = end.min(w - 2 * v);
        }
        let len = (end + v).max(0) as usize;
        let tail: Vec<(usize, &Coefficient)> = self
            .terms()
            .filter(|(e, c)| *e > v && !c.is_zero())
            .map(|(e, c)| ((e - v) as usize, c))
            .take_while(|(k, _)| *k < len)
            .collect();
        let mut out: Vec<Coefficient> = Vec::with_capacity(len);
        for n in 0..len {
            if n == 0 {
                out.push(lead.clone());
                continue;
            }
            let mut acc = Coefficient::zero();
            for &(k, a) in tail.iter().take_while(|(k, _)| *k <= n) {
                acc += a * &out[n - k];
            }
            out.push(-(acc * &lead));
        }
        Ok(Self {
            min_exp: -v,
            trunc_order: -v + len as i64,
            coeffs: out,
            exact: false,
        })
    }

    /// Multiplies by the binomial `1 - c q^e` in linear time.
    pub fn mul_one_minus(&self, c: i64, e: i64) -> Self {
        if c == 0 {
            return self.clone();
        }
        self.mul(&LaurentSeries::polynomial(0, [1i64]).sub(&LaurentSeries::exact_monomial(c, e)))
    }

    /// Divides by the binomial `1 - c q^e` (`e >= 1`) in linear time:
    /// `b_n = a_n + c b_{n-e}`.
    pub fn div_one_minus(&self, c: i64, e: i64) -> Result<Self, SeriesError> {
        if c == 0 {
            return Ok(self.clone());
        }
        if e < 1 {
            return Err(SeriesError::NonInvertible {
                reason: format!("division by 1 - ({c})q^{e} needs a positive exponent"),
            });
        }
        if self.exact {
            let order = self.trunc_order;
            return self.truncate(order).div_one_minus(c, e);
        }
        let c = Coefficient::from(c);
        let step = e as usize;
        let mut coeffs = self.coeffs.clone();
        for i in step..coeffs.len() {
            if !coeffs[i - step].is_zero() {
                let add = &coeffs[i - step] * &c;
                coeffs[i] += add;
            }
        }
        Ok(Self {
            min_exp: self.min_exp,
            coeffs,
            trunc_order: self.trunc_order,
            exact: false,
        })
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
            trunc_order: self.trunc_order + k,
            exact: self.exact,
        }
    }

    fn filter_exponents(&self, keep: impl Fn(i64) -> bool) -> Self {
        let mut s = Self {
            min_exp: self.min_exp,
            coeffs: self
                .terms()
                .map(|(e, c)| if keep(e) { c.clone() } else { Coefficient::zero() })
                .collect(),
            trunc_order: self.trunc_order,
            exact: self.exact,
        };
        if s.exact {
            s.trim_exact();
        }
        s
    }

    /// Terms with exponent `>= 1`.
    pub fn pos_part(&self) -> Self {
        self.filter_exponents(|e| e >= 1)
    }

    /// Terms with exponent `<= 0`.
    pub fn nonpos_part(&self) -> Self {
        self.filter_exponents(|e| e <= 0)
    }

    /// Integer power; negative exponents go through [`LaurentSeries::inv`].
    pub fn pow(&self, k: i64, order: i64) -> Result<Self, SeriesError> {
        let base = if k < 0 { self.inv(order)? } else { self.clone() };
        let mut acc = if self.exact && k >= 0 {
            Self::exact_monomial(1, 0)
        } else {
            Self::one(order)
        };
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// True iff both series agree on every exponent below `order`.
    pub fn eq_to(&self, other: &Self, order: i64) -> Result<bool, SeriesError> {
        for s in [self, other] {
            if let Some(w) = s.window_end() {
                if order > w {
                    return Err(SeriesError::OutOfWindow {
                        exp: order - 1,
                        min: s.min_exp,
                        order: w,
                    });
                }
            }
        }
        let lo = self.min_exp.min(other.min_exp);
        Ok((lo..order).all(|e| self.get_or_zero(e) == other.get_or_zero(e)))
    }

    /// First exponent below `order` where the two series differ.
    pub fn first_difference(&self, other: &Self, order: i64) -> Option<i64> {
        let lo = self.min_exp.min(other.min_exp);
        (lo..order).find(|&e| self.get_or_zero(e) != other.get_or_zero(e))
    }
}

impl PartialEq for LaurentSeries {
    /// Equal when the windows end at the same place (or both are exact) and
    /// every coefficient agrees; stored leading and trailing zeros are ignored.
    fn eq(&self, other: &Self) -> bool {
        if self.window_end() != other.window_end() {
            return false;
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64).max(other.min_exp + other.coeffs.len() as i64);
        (lo..hi).all(|e| self.get_or_zero(e) == other.get_or_zero(e))
    }
}

impl Eq for LaurentSeries {}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        if !self.exact {
            write!(f, " + O(q^{})", self.trunc_order)?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                LaurentSeries::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(self)
    }
}
