use std::collections::BTreeMap;
use std::fmt;

use rug::ops::Pow;
use rug::{Complex, Integer, Rational};

use super::knot::TorusKnot;
use super::series::RationalSeries;
use crate::error::{Error, Result};

/// A Laurent polynomial with exact rational coefficients, invariant under
/// `t ↦ 1/t`. Only non-zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricLaurentPolynomial {
    coefficients: BTreeMap<i64, Rational>,
}

impl SymmetricLaurentPolynomial {
    /// Builds a polynomial from `(exponent, coefficient)` pairs, rejecting
    /// input that is not symmetric.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut coefficients: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *coefficients.entry(e).or_default() += c;
        }
        coefficients.retain(|_, c| *c != 0);
        let poly = SymmetricLaurentPolynomial { coefficients };
        for (e, c) in &poly.coefficients {
            if poly.coefficient(-e) != *c {
                return Err(Error::InvalidArgument(format!(
                    "coefficient of t^{e} has no matching t^{}",
                    -e
                )));
            }
        }
        Ok(poly)
    }

    pub fn coefficient(&self, exponent: i64) -> Rational {
        self.coefficients.get(&exponent).cloned().unwrap_or_default()
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coefficients.iter().map(|(e, c)| (*e, c))
    }

    /// Largest exponent with a non-zero coefficient (0 for the zero polynomial).
    pub fn degree(&self) -> i64 {
        self.coefficients.keys().next_back().copied().unwrap_or(0)
    }

    /// Difference between the largest and smallest exponents.
    pub fn span(&self) -> i64 {
        2 * self.degree()
    }

    pub fn eval_rational(&self, t: &Rational) -> Rational {
        let mut acc = Rational::new();
        for (e, c) in &self.coefficients {
            acc += Rational::from(t.pow(*e as i32)) * c;
        }
        acc
    }

    /// Evaluation at a non-zero complex point, at the point's precision.
    pub fn eval(&self, t: &Complex) -> Complex {
        let prec = t.prec();
        let mut acc = Complex::new(prec);
        for (e, c) in &self.coefficients {
            let power = Complex::with_val(prec, t.pow(*e as i32));
            acc += power * Complex::with_val(prec, c);
        }
        acc
    }

    /// Value of `dΔ/dt` at a non-zero complex point.
    pub fn derivative_eval(&self, t: &Complex) -> Complex {
        let prec = t.prec();
        let mut acc = Complex::new(prec);
        for (e, c) in &self.coefficients {
            let power = Complex::with_val(prec, t.pow((*e - 1) as i32));
            acc += power * Complex::with_val(prec, Rational::from(c * *e));
        }
        acc
    }

    /// Taylor series of `Δ(e^{scale·z})` through `z^order`.
    pub fn exp_substitution_series(&self, scale: i64, order: usize) -> RationalSeries {
        let mut coefficients = Vec::with_capacity(order + 1);
        let mut factorial = Integer::from(1);
        for n in 0..=order {
            if n > 0 {
                factorial *= n as u64;
            }
            let mut sum = Rational::new();
            for (e, c) in &self.coefficients {
                sum += Rational::from(c * Integer::from(scale * e).pow(n as u32));
            }
            coefficients.push(sum / Rational::from(factorial.clone()));
        }
        RationalSeries::new(coefficients)
    }
}

impl fmt::Display for SymmetricLaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coefficients.iter().enumerate() {
            let negative = *c < 0;
            let magnitude = Rational::from(c.abs_ref());
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = magnitude == 1;
            match *e {
                0 => write!(f, "{magnitude}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{magnitude}*t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{magnitude}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Symmetrized Alexander polynomial of `T(p,q)`, obtained by exact division of
/// `(t^{pq} − 1)(t − 1)` by `(t^p − 1)(t^q − 1)` and recentring.
pub fn alexander_polynomial(knot: &TorusKnot) -> SymmetricLaurentPolynomial {
    let (p, q, pq) = (knot.p() as usize, knot.q() as usize, knot.pq() as usize);
    let numerator = poly_mul(&binomial(pq), &binomial(1));
    let denominator = poly_mul(&binomial(p), &binomial(q));
    let quotient = divide_exact(&numerator, &denominator);
    let shift = ((p - 1) * (q - 1) / 2) as i64;
    let terms = quotient
        .into_iter()
        .enumerate()
        .map(|(e, c)| (e as i64 - shift, Rational::from(c)));
    SymmetricLaurentPolynomial::from_terms(terms).expect("torus knot Alexander polynomials are symmetric")
}

/// Dense coefficients of `t^n − 1`, lowest degree first.
fn binomial(n: usize) -> Vec<Integer> {
    let mut c = vec![Integer::new(); n + 1];
    c[0] = Integer::from(-1);
    c[n] = Integer::from(1);
    c
}

fn poly_mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += Integer::from(x * y);
        }
    }
    out
}

/// Long division by a monic polynomial; panics on a non-zero remainder.
fn divide_exact(numerator: &[Integer], denominator: &[Integer]) -> Vec<Integer> {
    let dn = denominator.len() - 1;
    assert_eq!(denominator[dn], 1, "divisor must be monic");
    let mut rem = numerator.to_vec();
    let qlen = numerator.len() - dn;
    let mut quotient = vec![Integer::new(); qlen];
    for i in (0..qlen).rev() {
        let lead = rem[i + dn].clone();
        if lead == 0 {
            continue;
        }
        for (j, d) in denominator.iter().enumerate() {
            rem[i + j] -= Integer::from(&lead * d);
        }
        quotient[i] = lead;
    }
    assert!(rem.iter().all(|c| *c == 0), "division is not exact");
    quotient
}
