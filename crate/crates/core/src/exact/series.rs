use rug::ops::Pow;
use rug::{Integer, Rational};

use super::knot::TorusKnot;
use super::laurent::alexander_polynomial;
use crate::error::{Error, Result};

/// Truncated power series `Σ_{n≤order} c_n z^n` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coefficients: Vec<Rational>,
}

impl RationalSeries {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        RationalSeries { coefficients }
    }

    /// Index of the highest stored coefficient.
    pub fn order(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    fn len(&self) -> usize {
        self.coefficients.len()
    }

    /// Coefficient of `z^n`; zero past the truncation order.
    pub fn coefficient(&self, n: usize) -> Rational {
        self.coefficients.get(n).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Taylor series of `sinh(scale·z)` through `z^order`.
    pub fn sinh(scale: i64, order: usize) -> Self {
        let mut coefficients = vec![Rational::new(); order + 1];
        let mut factorial = Integer::from(1);
        for (n, c) in coefficients.iter_mut().enumerate() {
            if n > 0 {
                factorial *= n as u64;
            }
            if n % 2 == 1 {
                *c = Rational::from((Integer::from(scale).pow(n as u32), factorial.clone()));
            }
        }
        RationalSeries { coefficients }
    }

    /// Product truncated to the shorter of the two orders.
    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        let len = self.len().min(other.len());
        let mut out = vec![Rational::new(); len];
        for (i, a) in self.coefficients.iter().take(len).enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coefficients.iter().take(len - i).enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RationalSeries { coefficients: out }
    }

    /// Quotient truncated to the shorter of the two orders; the divisor
    /// must have a non-zero constant term.
    pub fn div(&self, other: &RationalSeries) -> Result<RationalSeries> {
        let b0 = other.coefficient(0);
        if b0 == 0 {
            return Err(Error::InvalidArgument(
                "series divisor has zero constant term".into(),
            ));
        }
        let len = self.len().min(other.len());
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = self.coefficient(n);
            for j in 1..=n {
                acc -= Rational::from(&other.coefficients[j] * &out[n - j]);
            }
            out.push(acc / &b0);
        }
        Ok(RationalSeries { coefficients: out })
    }
}

/// Taylor series of `z·τ(z)` through `z^order`, computed as
/// `2z·sinh z / Δ(e^{2z})`.
pub fn tau_series(knot: &TorusKnot, order: usize) -> RationalSeries {
    let delta = alexander_polynomial(knot).exp_substitution_series(2, order);
    let mut numerator = RationalSeries::sinh(1, order).coefficients;
    // multiply by 2z
    numerator.rotate_right(1);
    if let Some(first) = numerator.first_mut() {
        *first = Rational::new();
    }
    for c in &mut numerator {
        *c *= 2u32;
    }
    RationalSeries::new(numerator)
        .div(&delta)
        .expect("Δ(1) = 1 is non-zero")
}

/// `a_n = (2n)!·c_{2n}` for `n = 0..=n_max`, where `c_j` are the Taylor
/// coefficients of `z·τ(z)`.
pub fn a_coefficients(knot: &TorusKnot, n_max: usize) -> Vec<Rational> {
    let series = tau_series(knot, 2 * n_max);
    let mut factorial = Integer::from(1);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            factorial *= (2 * n - 1) as u64;
            factorial *= (2 * n) as u64;
        }
        out.push(series.coefficient(2 * n) * Rational::from(factorial.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = RationalSeries::new((1..8).map(|i| Rational::from((i, i + 3))).collect());
        let b = RationalSeries::new((0..8).map(|i| Rational::from((2 - i, 5))).collect());
        let back = a.mul(&b).div(&b).unwrap();
        assert_eq!(back.order(), 6);
        assert_eq!(back.coefficients(), a.coefficients());
    }

    #[test]
    fn division_by_zero_constant_fails() {
        let a = RationalSeries::new(vec![Rational::from(1); 3]);
        let b = RationalSeries::new(vec![Rational::new(), Rational::from(1)]);
        assert!(a.div(&b).is_err());
    }

    #[test]
    fn leading_coefficients() {
        for (p, q) in [(2i64, 3i64), (2, 5), (3, 4), (4, 7)] {
            let s = tau_series(&knot(p, q), 6);
            assert_eq!(s.coefficient(0), 0);
            assert_eq!(s.coefficient(1), 0);
            assert_eq!(s.coefficient(2), 2);
            assert_eq!(s.coefficient(3), 0);
            assert_eq!(
                s.coefficient(4),
                Rational::from((p * p + q * q - p * p * q * q, 3))
            );
            assert_eq!(s.coefficient(5), 0);
        }
    }

    #[test]
    fn a_coefficients_start() {
        let a = a_coefficients(&knot(2, 3), 3);
        assert_eq!(a[0], 0);
        assert_eq!(a[1], 4);
        // 4!·(4 + 9 − 36)/3
        assert_eq!(a[2], Rational::from(-184));
    }
}
