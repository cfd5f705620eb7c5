//! Univariate formal power series truncated at a fixed order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, binomial, factorial, int, Rational};
use crate::error::{Error, Result};
use crate::report::TestReport;

pub const DEFAULT_ORDER: usize = 8;

/// `Σ_{i ≤ order} c_i x^i + O(x^{order+1})`.
///
/// Binary operations truncate to the smaller of the two orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSeries", into = "RawSeries")]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawSeries {
    order: usize,
    #[serde(with = "rational::vec_as_strings")]
    coeffs: Vec<Rational>,
}

impl TryFrom<RawSeries> for TruncatedSeries {
    type Error = Error;

    fn try_from(raw: RawSeries) -> Result<Self> {
        if raw.coeffs.len() != raw.order + 1 {
            return Err(Error::DimensionMismatch(format!(
                "series of order {} needs {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        Ok(TruncatedSeries { coeffs: raw.coeffs })
    }
}

impl From<TruncatedSeries> for RawSeries {
    fn from(s: TruncatedSeries) -> Self {
        RawSeries { order: s.order(), coeffs: s.coeffs }
    }
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; `coeffs` must be nonempty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        Self::new(coeffs.iter().cloned().map(int).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the truncation order.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    /// The `q` with `q·den = self` up to the smaller order. Any nonzero
    /// constant term in `den` is accepted.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let d0 = &den.coeffs[0];
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order().min(den.order());
        let inv0 = d0.recip();
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let dj = &den.coeffs[j];
                if !dj.is_zero() {
                    acc -= dj * &q[k - j];
                }
            }
            q.push(acc * &inv0);
        }
        Ok(Self::new(q))
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new((1..=self.order()).map(|i| &self.coeffs[i] * int(i as u64)).collect())
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Self {
        let mut out = vec![Rational::zero()];
        out.extend(self.coeffs.iter().enumerate().map(|(i, c)| c / int(i as u64 + 1)));
        Self::new(out)
    }

    /// Formal exponential; requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm(format!("exp needs constant term 0, got {}", self.coeffs[0])));
        }
        // n·b_n = Σ_{k=1..n} k·a_k·b_{n-k}
        let n = self.order();
        let mut b = vec![Rational::one()];
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * int(k as u64) * &b[m - k];
                }
            }
            b.push(acc / int(m as u64));
        }
        Ok(Self::new(b))
    }

    /// Formal logarithm; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm(format!("log needs constant term 1, got {}", self.coeffs[0])));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let quotient = self.derivative().div(&self.truncate(n - 1))?;
        Ok(quotient.integral())
    }

    /// `Σ a_n x^n`.
    pub fn ogf_from_counts<T: Into<BigInt> + Clone>(counts: &[T]) -> Self {
        Self::from_integers(counts)
    }

    /// `Σ a_n x^n / n!`.
    pub fn egf_from_counts<T: Into<BigInt> + Clone>(counts: &[T]) -> Self {
        Self::new(counts.iter().enumerate().map(|(n, a)| Rational::new(a.clone().into(), factorial(n))).collect())
    }

    /// `n!·c_n`, the counts behind an exponential series.
    pub fn egf_counts(&self) -> Vec<Rational> {
        self.coeffs.iter().enumerate().map(|(n, c)| c * Rational::from_integer(factorial(n))).collect()
    }

    /// Passes when every stored coefficient is nonnegative; a failure names the
    /// least negative index and its value.
    pub fn nonneg_prefix(&self) -> TestReport {
        let mut report = TestReport::pass("nonneg-prefix");
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_negative() {
                report.violate(i, format!("coefficient of x^{i}"), c.clone());
            }
        }
        report.series = Some(self.clone());
        report
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `b_n = Σ_i C(n,i)(-1)^i a_{n-i}`.
pub fn binomial_transform<T: Into<BigInt> + Clone>(a: &[T]) -> Vec<BigInt> {
    let a: Vec<BigInt> = a.iter().cloned().map(Into::into).collect();
    (0..a.len())
        .map(|n| {
            (0..=n).fold(BigInt::zero(), |acc, i| {
                let term = binomial(n, i) * &a[n - i];
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// Inverse of [`binomial_transform`]: `a_n = Σ_i C(n,i) b_{n-i}`.
pub fn inverse_binomial_transform(b: &[BigInt]) -> Vec<BigInt> {
    (0..b.len()).map(|n| (0..=n).fold(BigInt::zero(), |acc, i| acc + binomial(n, i) * &b[n - i])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;
    use proptest::prelude::*;

    fn series(cs: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn binomial_square() {
        let s = series(&[(1, 1), (1, 1), (0, 1)]);
        assert_eq!(s.mul(&s), series(&[(1, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let a = TruncatedSeries::from_integers(&[1, 1, 1, 1]);
        let b = TruncatedSeries::from_integers(&[1, 1]);
        assert_eq!(a.mul(&b).order(), 1);
    }

    #[test]
    fn division_by_zero_constant_term() {
        let a = TruncatedSeries::from_integers(&[1, 1]);
        let b = TruncatedSeries::from_integers(&[0, 1]);
        assert_eq!(a.div(&b), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn division_with_non_unit_constant() {
        let a = TruncatedSeries::from_integers(&[2, 2, 2]);
        let b = TruncatedSeries::from_integers(&[2, 0, 0]);
        assert_eq!(a.div(&b).unwrap(), TruncatedSeries::from_integers(&[1, 1, 1]));
    }

    #[test]
    fn partition_quotient_by_distinct_parts() {
        let num = TruncatedSeries::from_integers(&[1, 1, 2, 3, 5, 7, 11]);
        let den = TruncatedSeries::from_integers(&[1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(num.div(&den).unwrap(), TruncatedSeries::from_integers(&[1, 0, 1, 0, 2, 0, 3]));
    }

    #[test]
    fn bell_exponential() {
        let x = TruncatedSeries::monomial(Rational::one(), 1, 4);
        let ex_minus_one = x.exp().unwrap().sub(&TruncatedSeries::one(4));
        let bell = ex_minus_one.exp().unwrap();
        assert_eq!(bell, series(&[(1, 1), (1, 1), (1, 1), (5, 6), (5, 8)]));
    }

    #[test]
    fn exp_and_log_constant_term_errors() {
        assert!(TruncatedSeries::one(3).exp().is_err());
        assert!(TruncatedSeries::zero(3).log().is_err());
        assert_eq!(TruncatedSeries::zero(3).exp().unwrap(), TruncatedSeries::one(3));
    }

    #[test]
    fn nonneg_prefix_reports_first_negative() {
        let s = series(&[(1, 1), (0, 1), (1, 2), (-1, 3), (1, 2), (-11, 30)]);
        let r = s.nonneg_prefix();
        assert!(!r.passed());
        assert_eq!(r.first_violation, Some(3));
        assert_eq!(r.witness[0].value, rat(-1, 3));
        assert!(TruncatedSeries::zero(4).nonneg_prefix().passed());
    }

    #[test]
    fn binomial_transform_examples() {
        let b = binomial_transform(&[1, 1, 1, 4, 5, 16, 82, 169, 541]);
        let expect: Vec<BigInt> = [1, 0, 0, 3, -8, 25, -9, -119, 736].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(b, expect);
        let ones = binomial_transform(&[1; 6]);
        assert_eq!(ones[0], BigInt::one());
        assert!(ones[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn binomial_transform_of_powers_of_two() {
        let a: Vec<i64> = (0..10).map(|n| 1i64 << n).collect();
        // direct summation oracle
        for (n, b) in binomial_transform(&a).iter().enumerate() {
            let mut acc = 0i64;
            for i in 0..=n {
                let c = binomial(n, i).to_string().parse::<i64>().unwrap();
                acc += c * if i % 2 == 0 { 1 } else { -1 } * a[n - i];
            }
            assert_eq!(b, &BigInt::from(acc));
            assert_eq!(b, &BigInt::one());
        }
    }

    #[test]
    fn json_shape() {
        let s = series(&[(1, 1), (0, 1), (-1, 3)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"order":2,"coeffs":["1","0","-1/3"]}"#);
        let back: TruncatedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"order":3,"coeffs":["1"]}"#).is_err());
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-20i64..20, 1i64..6), order + 1)
            .prop_map(|cs| TruncatedSeries::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn div_undoes_mul(a in arb_series(6), b in arb_series(6)) {
            prop_assume!(!b.coeff(0).is_zero());
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
        }

        #[test]
        fn log_undoes_exp(mut a in arb_series(6)) {
            a.coeffs[0] = Rational::zero();
            prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
        }

        #[test]
        fn binomial_transform_inverts(a in prop::collection::vec(0i64..1000, 0..12)) {
            let b = binomial_transform(&a);
            let back = inverse_binomial_transform(&b);
            let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
            prop_assert_eq!(back, a);
        }
    }
}
