//! Oracles that share no code with the library beyond `rug`.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

/// Symmetrized Alexander polynomial of `T(p,q)` from the numerical semigroup
/// `⟨p, q⟩`: the coefficient of `t^n` is `[n ∈ S] − [n − 1 ∈ S]`.
pub fn semigroup_alexander(p: i64, q: i64) -> BTreeMap<i64, i64> {
    let degree = (p - 1) * (q - 1);
    let in_semigroup = |n: i64| n >= 0 && (0..=n / p).any(|a| (n - a * p) % q == 0);
    let mut out = BTreeMap::new();
    for n in 0..=degree {
        let c = i64::from(in_semigroup(n)) - i64::from(in_semigroup(n - 1));
        if c != 0 {
            out.insert(n - degree / 2, c);
        }
    }
    out
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Coefficients `0..=order` of `sinh(scale·z)`.
fn sinh_coefficients(scale: i64, order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|n| {
            if n % 2 == 1 {
                Rational::from((Integer::from(scale).pow(n as u32), factorial(n as u32)))
            } else {
                Rational::new()
            }
        })
        .collect()
}

fn multiply(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::new(); a.len()];
    for i in 0..a.len() {
        for j in 0..(a.len() - i) {
            out[i + j] += Rational::from(&a[i] * &b[j]);
        }
    }
    out
}

fn divide(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for n in 0..a.len() {
        let mut acc = a[n].clone();
        for j in 1..=n {
            acc -= Rational::from(&b[j] * &out[n - j]);
        }
        out.push(acc / &b[0]);
    }
    out
}

/// Coefficients `0..=order` of `z·τ(z)` as `2 sinh(pz) sinh(qz) / (sinh(pqz)/z)`.
pub fn sinh_product_series(p: i64, q: i64, order: usize) -> Vec<Rational> {
    let numerator: Vec<Rational> = multiply(&sinh_coefficients(p, order), &sinh_coefficients(q, order))
        .into_iter()
        .map(|c| c * 2u32)
        .collect();
    let mut shifted = sinh_coefficients(p * q, order + 1);
    shifted.remove(0);
    divide(&numerator, &shifted)
}

/// `a_n = (2n)!·c_{2n}` from [`sinh_product_series`].
pub fn a_oracle(p: i64, q: i64, n_max: usize) -> Vec<Rational> {
    let series = sinh_product_series(p, q, 2 * n_max);
    (0..=n_max)
        .map(|n| series[2 * n].clone() * Rational::from(factorial(2 * n as u32)))
        .collect()
}

/// `2 sinh z / Δ(e^{2z})` with Δ from the semigroup.
pub fn tau_via_alexander(p: i64, q: i64, z: &Complex) -> Complex {
    let bits = z.prec().0;
    let mut delta = Complex::new(bits);
    for (e, c) in semigroup_alexander(p, q) {
        delta += Complex::with_val(bits, z * (2 * e)).exp() * c;
    }
    Complex::with_val(bits, z).sinh() * 2u32 / delta
}

pub fn distance(a: &Complex, b: &Complex) -> Float {
    Float::with_val(a.prec().0, Complex::with_val(a.prec().0, a - b).abs_ref())
}

/// All valid `(p, q)` with `2 ≤ p < q ≤ max`.
pub fn knots_up_to(max: i64) -> Vec<(i64, i64)> {
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    (2..=max)
        .flat_map(|p| ((p + 1)..=max).map(move |q| (p, q)))
        .filter(|&(p, q)| gcd(p, q) == 1)
        .collect()
}
