//! Truncated integer power series, used as an enumeration-free oracle for the
//! counts `E(n)` and `p̄_o(n)`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficients of `q^0 ..= q^order`. Arithmetic is checked; overflowing
/// `i64` is an error rather than a wrap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerSeries {
    coefficients: Vec<i64>,
}

impl PowerSeries {
    pub fn one(order: usize) -> Self {
        let mut coefficients = vec![0; order + 1];
        coefficients[0] = 1;
        PowerSeries { coefficients }
    }

    pub fn from_coefficients(coefficients: Vec<i64>) -> Self {
        assert!(!coefficients.is_empty(), "a series keeps at least the constant term");
        PowerSeries { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Coefficient of `q^n`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> i64 {
        assert!(n <= self.order(), "q^{n} is beyond truncation order {}", self.order());
        self.coefficients[n]
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|i| checked(self.coefficients[i].checked_add(other.coefficients[i]), i))
            .collect::<Result<_>>()?;
        Ok(PowerSeries { coefficients })
    }

    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let order = self.order().min(other.order());
        let mut coefficients = vec![0i64; order + 1];
        for (i, &a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coefficients.iter().enumerate().take(order + 1 - i) {
                let term = checked(a.checked_mul(b), i + j)?;
                coefficients[i + j] = checked(coefficients[i + j].checked_add(term), i + j)?;
            }
        }
        Ok(PowerSeries { coefficients })
    }

    /// Multiplies in place by `1 + sign * q^m`.
    pub fn mul_binomial(&mut self, m: usize, sign: i64) -> Result<()> {
        assert!(m >= 1);
        for i in (m..=self.order()).rev() {
            let term = checked(self.coefficients[i - m].checked_mul(sign), i)?;
            self.coefficients[i] = checked(self.coefficients[i].checked_add(term), i)?;
        }
        Ok(())
    }

    /// Divides in place by `1 - q^m`, i.e. multiplies by `sum_i q^(m i)`.
    pub fn div_one_minus(&mut self, m: usize) -> Result<()> {
        assert!(m >= 1);
        for i in m..=self.order() {
            self.coefficients[i] = checked(self.coefficients[i].checked_add(self.coefficients[i - m]), i)?;
        }
        Ok(())
    }
}

fn checked(value: Option<i64>, index: usize) -> Result<i64> {
    value.ok_or_else(|| Error::Overflow(format!("coefficient of q^{index} exceeds 64 bits")))
}

/// `prod_k (1 + q^k) * prod_k (1 + q^(2k-1))`, whose `q^n` coefficient is `E(n)`.
pub fn series_e(order: usize) -> Result<PowerSeries> {
    let mut s = PowerSeries::one(order);
    for k in 1..=order {
        s.mul_binomial(k, 1)?;
    }
    for k in (1..=order).step_by(2) {
        s.mul_binomial(k, 1)?;
    }
    Ok(s)
}

/// `prod_k (1 + q^(2k-1)) / (1 - q^(2k-1))`, whose `q^n` coefficient is `p̄_o(n)`.
pub fn series_podd(order: usize) -> Result<PowerSeries> {
    let mut s = PowerSeries::one(order);
    for k in (1..=order).step_by(2) {
        s.mul_binomial(k, 1)?;
        s.div_one_minus(k)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_coefficients() {
        let e = series_e(10).unwrap();
        assert_eq!(e.coeff(0), 1);
        assert_eq!(e.coeff(1), 2);
        assert_eq!(e.coeff(4), 6);
        let p = series_podd(10).unwrap();
        assert_eq!(p.coeff(0), 1);
        assert_eq!(p.coeff(3), 4);
        assert_eq!(p.coeff(5), 8);
    }

    #[test]
    fn division_undoes_multiplication() {
        let mut s = series_e(30).unwrap();
        let before = s.clone();
        s.mul_binomial(3, -1).unwrap();
        s.div_one_minus(3).unwrap();
        assert_eq!(s, before);
    }

    #[test]
    fn general_product_matches_binomial_product() {
        let mut a = PowerSeries::one(12);
        a.mul_binomial(2, 1).unwrap();
        let mut b = PowerSeries::one(12);
        b.mul_binomial(3, -1).unwrap();
        let mut both = a.clone();
        both.mul_binomial(3, -1).unwrap();
        assert_eq!(a.mul(&b).unwrap(), both);
        assert_eq!(a.add(&b).unwrap().coeff(0), 2);
    }

    #[test]
    fn truncation_uses_smaller_order() {
        let a = PowerSeries::one(5);
        let b = PowerSeries::one(3);
        assert_eq!(a.mul(&b).unwrap().order(), 3);
        assert_eq!(a.add(&b).unwrap().order(), 3);
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn reading_past_order_panics() {
        PowerSeries::one(3).coeff(4);
    }

    #[test]
    fn overflow_is_reported() {
        let mut s = PowerSeries::from_coefficients(vec![i64::MAX, i64::MAX]);
        assert!(matches!(s.mul_binomial(1, 1), Err(Error::Overflow(_))));
        // p̄_o(n) outgrows i64 well before n = 2000
        assert!(matches!(series_podd(2000), Err(Error::Overflow(_))));
    }
}
