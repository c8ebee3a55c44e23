//! Large-`N` expansion of `⟨T(p,q)⟩_N`: residue contributions at the poles
//! `iπk/pq`, the asymptotic tail in the finite-type coefficients `a_n`, the
//! geometric sum `Z_N`, and the identities tying them together.
//!
//! All sums run in a fixed serial order (ascending `k`, ascending component
//! index, ascending `n`) so results are reproducible bit for bit.

use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use crate::charvar::{enumerate_components, CharVarComponent};
use crate::error::{Error, Result};
use crate::exact::precision::{abs, exp_2pi_i, exp_i_pi, format_float, sin_pi};
use crate::exact::{a_coefficients, Precision, TorusKnot};
use crate::torsion::{nonabelian_torsion, tau_residue};
use crate::verify::Check;

fn require_n(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("N = {n} must be at least 2")));
    }
    Ok(())
}

/// `i^{e}` for an integer exponent.
fn i_pow(e: i64, prec: Precision) -> Complex {
    exp_i_pi(&Rational::from((e, 2)), prec)
}

/// Closed-form residue contribution
/// `2(N/2pq)^{3/2} e^{iπ/4} (−1)^{(N−1)k} e^{−iπk²N/2pq} k² sin(πk/p) sin(πk/q)`;
/// zero when `p | k` or `q | k`.
pub fn residue_term(knot: &TorusKnot, k: u64, n: u64, prec: Precision) -> Complex {
    if knot.is_removable(k as i64) {
        return prec.zero();
    }
    let bits = prec.bits();
    let pq = knot.pq();
    let (p, q) = (i64::from(knot.p()), i64::from(knot.q()));
    let ki = Integer::from(k);
    let scale = Float::with_val(bits, Rational::from((n, 2 * pq))).pow(1.5f64) * 2u32;
    let sines = sin_pi(&Rational::from((k as i64, p)), prec) * sin_pi(&Rational::from((k as i64, q)), prec);
    let magnitude = scale * Float::with_val(bits, ki.clone().square()) * sines;
    // phase in units of π: 1/4 + (N−1)k − k²N/2pq
    let phase = Rational::from((1, 4)) + Rational::from(Integer::from(n - 1) * &ki)
        - Rational::from((ki.square() * n, Integer::from(2 * pq)));
    exp_i_pi(&phase, prec) * magnitude
}

/// The same contribution from its definition as
/// `(pqN/2)^{3/2}(e^{−iπ/4}/2)·2πi·Res_{z=ik/pq}[e^{πpqN(z+iz²/2)} z² τ(πz)]`,
/// using the closed-form residue of τ.
pub fn residue_term_via_residue(knot: &TorusKnot, k: u64, n: u64, prec: Precision) -> Result<Complex> {
    if knot.is_removable(k as i64) {
        return Ok(prec.zero());
    }
    let bits = prec.bits();
    let pq = knot.pq();
    let pi = prec.pi();
    let z = Complex::with_val(bits, (0, Rational::from((k, pq))));
    let z_sq = Complex::with_val(bits, z.square_ref());
    let i_half_z_sq = Complex::with_val(bits, &z_sq * Complex::with_val(bits, (0, 0.5f64)));
    let exponent = Complex::with_val(bits, &z + &i_half_z_sq) * Float::with_val(bits, &pi * (pq * n));
    // Res_{z0} τ(πz) = Res_{πz0} τ / π
    let residue = tau_residue(knot, k as i64, prec)? / &pi;
    let integrand_residue = exponent.exp() * z_sq * residue;
    let two_pi_i = Complex::with_val(bits, (0, Float::with_val(bits, &pi * 2u32)));
    let prefactor = Float::with_val(bits, Rational::from((pq * n, 2))).pow(1.5f64);
    let rotation = exp_i_pi(&Rational::from((-1, 4)), prec) / 2u32;
    Ok(rotation * prefactor * two_pi_i * integrand_residue)
}

/// All residue contributions `k = 1..pq−1`, in ascending `k`.
pub fn residue_terms(knot: &TorusKnot, n: u64, prec: Precision) -> Vec<(u64, Complex)> {
    (1..knot.pq())
        .map(|k| (k, residue_term(knot, k, n, prec)))
        .collect()
}

fn sum(values: impl Iterator<Item = Complex>, prec: Precision) -> Complex {
    values.fold(prec.zero(), |acc, v| acc + v)
}

/// How far to sum the tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailOrder {
    /// Stop just before the first local minimum of the term magnitudes.
    Auto,
    /// Sum `n < order`; must not exceed the optimal index.
    Fixed(usize),
}

#[derive(Clone, Debug)]
pub struct TailSum {
    pub value: Complex,
    /// First omitted index `n`.
    pub truncation_index: usize,
    /// Magnitude of the first omitted term.
    pub error_estimate: Float,
    /// Index of the smallest term, the auto truncation point.
    pub optimal_index: usize,
    /// `|t_n|` for `n = 0..=optimal_index` at least.
    pub term_magnitudes: Vec<Float>,
}

/// Terms `t_n = (i^{pqN}/4)·(a_n/n!)·(iπ/2pqN)^{n−1}`, `n = 0..=n_max`.
pub fn tail_terms(knot: &TorusKnot, n: u64, n_max: usize, prec: Precision) -> Vec<Complex> {
    let bits = prec.bits();
    let pq = knot.pq();
    let a = a_coefficients(knot, n_max);
    let lead = i_pow((pq * n % 4) as i64, prec) / 4u32;
    let base = Float::with_val(bits, &prec.pi() / Float::with_val(bits, 2 * pq * n));
    let mut factorial = Integer::from(1);
    let mut out = Vec::with_capacity(n_max + 1);
    for (idx, a_n) in a.iter().enumerate() {
        if idx > 0 {
            factorial *= idx as u64;
        }
        let coefficient = Float::with_val(bits, Rational::from(a_n / &factorial));
        let power = Float::with_val(bits, base.clone().pow(idx as i32 - 1));
        let rotation = i_pow((idx as i64 - 1).rem_euclid(4), prec);
        out.push(Complex::with_val(bits, &lead * &rotation) * (coefficient * power));
    }
    out
}

/// The tail contribution, truncated optimally or at a fixed order.
pub fn tail_sum(knot: &TorusKnot, n: u64, prec: Precision, order: TailOrder) -> Result<TailSum> {
    require_n(n)?;
    let guess = (std::f64::consts::PI * n as f64 / (2.0 * knot.pq() as f64)).ceil() as usize;
    let mut n_max = 2 * guess + 10;
    if let TailOrder::Fixed(o) = order {
        n_max = n_max.max(o + 2);
    }
    loop {
        let terms = tail_terms(knot, n, n_max, prec);
        let magnitudes: Vec<Float> = terms.iter().map(abs).collect();
        let Some(optimal) = first_local_minimum(&magnitudes) else {
            n_max *= 2;
            continue;
        };
        let truncation_index = match order {
            TailOrder::Auto => optimal,
            TailOrder::Fixed(o) if o > optimal => {
                return Err(Error::DivergenceWarning {
                    requested: o,
                    optimal,
                })
            }
            TailOrder::Fixed(o) => o,
        };
        let value = sum(terms.into_iter().take(truncation_index), prec);
        return Ok(TailSum {
            value,
            truncation_index,
            error_estimate: magnitudes[truncation_index].clone(),
            optimal_index: optimal,
            term_magnitudes: magnitudes,
        });
    }
}

/// Smallest `n ≥ 1` with `|t_n| ≠ 0` and `|t_{n+1}| ≥ |t_n|`.
fn first_local_minimum(magnitudes: &[Float]) -> Option<usize> {
    (1..magnitudes.len().saturating_sub(1))
        .find(|&i| !magnitudes[i].is_zero() && magnitudes[i + 1] >= magnitudes[i])
}

fn component_terms(
    knot: &TorusKnot,
    n: u64,
    prec: Precision,
    weight: impl Fn(&CharVarComponent) -> i32,
) -> Complex {
    let bits = prec.bits();
    let terms = enumerate_components(knot).into_iter().map(|c| {
        let root = nonabelian_torsion(knot, &c, prec).sqrt();
        let coefficient = root * c.a_diamond * (c.epsilon * weight(&c));
        let phase = exp_2pi_i(&-Rational::from(&c.a_triangle * n), prec);
        Complex::with_val(bits, phase * coefficient)
    });
    sum(terms, prec)
}

/// `Z_N = Σ_ℓ ε_ℓ √𝕋_ℓ A⋄_ℓ e^{−2πiN·A▷_ℓ}` with the positive square root.
pub fn z_invariant(knot: &TorusKnot, n: u64, prec: Precision) -> Complex {
    component_terms(knot, n, prec, |_| 1)
}

/// `Z_N` with each term weighted by `(−1)^{k⁺}`; this is the combination the
/// residue sum actually produces.
pub fn residue_matched_z_invariant(knot: &TorusKnot, n: u64, prec: Precision) -> Complex {
    component_terms(knot, n, prec, |c| if c.k_plus % 2 == 0 { 1 } else { -1 })
}

/// `√(pq/2)·e^{iπ/4}·N^{3/2}`, the common factor of both residue-sum identities.
fn residue_sum_scale(knot: &TorusKnot, n: u64, prec: Precision) -> Complex {
    let bits = prec.bits();
    let magnitude = Float::with_val(bits, Rational::from((knot.pq(), 2u32))).sqrt()
        * Float::with_val(bits, n).pow(1.5f64);
    exp_i_pi(&Rational::from((1, 4)), prec) * magnitude
}

/// Right-hand side `√(pq/2)·e^{iπ/4}·i^{−pqN}·N^{3/2}·Z_N` of the residue-sum
/// identity as usually stated.
pub fn residue_sum_rhs(knot: &TorusKnot, n: u64, prec: Precision) -> Complex {
    let turn = -((knot.pq() * n % 4) as i64);
    residue_sum_scale(knot, n, prec) * i_pow(turn, prec) * z_invariant(knot, n, prec)
}

/// `√(pq/2)·e^{iπ/4}·i^{pqN}·N^{3/2}·Z̃_N` with the `(−1)^{k⁺}`-weighted sum;
/// equals the residue sum exactly.
pub fn residue_sum_matched_rhs(knot: &TorusKnot, n: u64, prec: Precision) -> Complex {
    let turn = (knot.pq() * n % 4) as i64;
    residue_sum_scale(knot, n, prec) * i_pow(turn, prec) * residue_matched_z_invariant(knot, n, prec)
}

/// `e^{−iπ(p/q + q/p)/2N}`
pub fn prefactor(knot: &TorusKnot, n: u64, prec: Precision) -> Complex {
    let (p, q) = (u64::from(knot.p()), u64::from(knot.q()));
    exp_i_pi(
        &Rational::from((-((p * p + q * q) as i64), 2 * n * knot.pq())),
        prec,
    )
}

#[derive(Clone, Debug)]
pub struct ExpansionReport {
    pub n: u64,
    /// `(k, contribution)` for `k = 1..pq−1`.
    pub residue_terms: Vec<(u64, Complex)>,
    pub residue_sum: Complex,
    pub tail: TailSum,
    /// `e^{−iπ(p/q+q/p)/2N}·(Σ_k residue terms + tail)`, the estimate of `⟨K⟩_N`.
    pub assembled_value: Complex,
    pub z_invariant: Complex,
    /// `|Σ_k − √(pq/2)e^{iπ/4}i^{−pqN}N^{3/2}Z_N|`
    pub main_theorem_residual: Float,
    /// `|Σ_k − √(pq/2)e^{iπ/4}i^{pqN}N^{3/2}Z̃_N|`
    pub matched_residual: Float,
}

pub fn kashaev_expansion(
    knot: &TorusKnot,
    n: u64,
    prec: Precision,
    order: TailOrder,
) -> Result<ExpansionReport> {
    require_n(n)?;
    let work = prec.with_extra_digits(10);
    let terms = residue_terms(knot, n, work);
    let residue_sum = sum(terms.iter().map(|(_, v)| v.clone()), work);
    let tail = tail_sum(knot, n, work, order)?;
    let assembled_value =
        prefactor(knot, n, work) * Complex::with_val(work.bits(), &residue_sum + &tail.value);
    let main_theorem_residual = abs(&(residue_sum.clone() - residue_sum_rhs(knot, n, work)));
    let matched_residual = abs(&(residue_sum.clone() - residue_sum_matched_rhs(knot, n, work)));
    Ok(ExpansionReport {
        n,
        residue_terms: terms,
        residue_sum,
        tail,
        assembled_value,
        z_invariant: z_invariant(knot, n, work),
        main_theorem_residual,
        matched_residual,
    })
}

/// `Σ_{1≤n<order} a_n/(2ⁿn!)·(iπ/pqN)^{n−1}`, the tail in the normalization of the
/// main equality (before the `(−1)^{pqN}` sign).
pub fn normalized_tail(knot: &TorusKnot, n: u64, order: usize, prec: Precision) -> Complex {
    let bits = prec.bits();
    let a = a_coefficients(knot, order.max(1));
    let base = Float::with_val(bits, &prec.pi() / Float::with_val(bits, knot.pq() * n));
    let mut factorial = Integer::from(1);
    let mut out = prec.zero();
    for (idx, a_n) in a.iter().enumerate().take(order) {
        if idx > 0 {
            factorial *= idx as u64;
        }
        if idx == 0 {
            continue;
        }
        let denominator = Integer::from(&factorial << idx as u32);
        let coefficient = Float::with_val(bits, Rational::from(a_n / &denominator));
        let power = Float::with_val(bits, base.clone().pow(idx as i32 - 1));
        out += i_pow((idx as i64 - 1).rem_euclid(4), prec) * (coefficient * power);
    }
    out
}

#[derive(Clone, Debug)]
pub struct MainTheoremReport {
    pub n: u64,
    pub checks: Vec<Check>,
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks the identities behind the main asymptotic equality at one `N`.
///
/// Always checked: the residue-sum identity as stated, its `(−1)^{k⁺}`-matched
/// form, and the sign flip of `sin(πk/p)sin(πk/q)` between `k⁻` and `k⁺`.
/// With an independent value of `⟨K⟩_N` (e.g. from quadrature) both forms of
/// the full equality are compared within twice the scaled tail error.
pub fn main_theorem_check(
    knot: &TorusKnot,
    n: u64,
    prec: Precision,
    kashaev: Option<&Complex>,
) -> Result<MainTheoremReport> {
    let report = kashaev_expansion(knot, n, prec, TailOrder::Auto)?;
    let work = prec.with_extra_digits(10);
    let bits = work.bits();
    let identity_tol = prec.tolerance(10);
    let mut checks = vec![
        Check::bound(
            "residue sum = sqrt(pq/2) e^{i pi/4} i^{-pqN} N^{3/2} Z_N",
            &report.main_theorem_residual,
            &identity_tol,
        ),
        Check::bound(
            "residue sum = sqrt(pq/2) e^{i pi/4} i^{pqN} N^{3/2} sum (-1)^{k+} eps sqrt(T) A_diamond e^{-2 pi i N A_triangle}",
            &report.matched_residual,
            &identity_tol,
        ),
    ];
    let mut worst = Float::new(bits);
    for c in enumerate_components(knot) {
        let s = |k: u64| {
            sin_pi(&Rational::from((k, u64::from(knot.p()))), work)
                * sin_pi(&Rational::from((k, u64::from(knot.q()))), work)
        };
        let residual = (s(c.k_plus) + s(c.k_minus)).abs();
        worst = worst.max(&residual);
    }
    checks.push(Check::bound(
        "sin(pi k+/p) sin(pi k+/q) = -sin(pi k-/p) sin(pi k-/q)",
        &worst,
        &prec.tolerance(5),
    ));

    if let Some(value) = kashaev {
        let turn = (knot.pq() * n % 4) as i64;
        let rotated = Complex::with_val(bits, value) / prefactor(knot, n, work) * 2u32;
        let root = Float::with_val(bits, 2 * knot.pq()).sqrt() * Float::with_val(bits, n).pow(1.5f64);
        let scale = exp_i_pi(&Rational::from((1, 4)), work) * root;
        let tail = normalized_tail(knot, n, report.tail.truncation_index, work);
        let threshold = Float::with_val(bits, &report.tail.error_estimate * 4u32);

        let lhs = Complex::with_val(bits, &rotated * i_pow(turn, work));
        let sign = if (knot.pq() * n).is_multiple_of(2) { 1 } else { -1 };
        let rhs =
            Complex::with_val(bits, &scale * &report.z_invariant) + Complex::with_val(bits, &tail * sign);
        checks.push(Check::bound(
            "2 i^{pqN} e^{i pi (p/q+q/p)/2N} <K>_N = sqrt(2pq) e^{i pi/4} N^{3/2} Z_N + (-1)^{pqN} tail",
            &abs(&(lhs - rhs)),
            &threshold,
        ));

        let lhs = rotated * i_pow(-turn, work);
        let rhs = scale * residue_matched_z_invariant(knot, n, work) + tail;
        checks.push(Check::bound(
            "2 i^{-pqN} e^{i pi (p/q+q/p)/2N} <K>_N = sqrt(2pq) e^{i pi/4} N^{3/2} Z~_N + tail",
            &abs(&(lhs - rhs)),
            &threshold,
        ));
    }
    Ok(MainTheoremReport { n, checks })
}

#[derive(Clone, Debug)]
pub struct GrowthPoint {
    pub j: u32,
    pub n: u64,
    /// `|⟨K⟩_N| / N^{3/2}` from the expansion.
    pub ratio: Float,
}

/// `|⟨K⟩_{N_j}|/N_j^{3/2}` along `N_j = 2pq(1 + 2j)`, `j = 0..=j_max`.
pub fn growth_diagnostic(knot: &TorusKnot, j_max: u32, prec: Precision) -> Result<Vec<GrowthPoint>> {
    (0..=j_max)
        .map(|j| {
            let n = 2 * knot.pq() * (1 + 2 * u64::from(j));
            let report = kashaev_expansion(knot, n, prec, TailOrder::Auto)?;
            let ratio = abs(&report.assembled_value) / Float::with_val(prec.bits(), n).pow(1.5f64);
            Ok(GrowthPoint { j, n, ratio })
        })
        .collect()
}

/// Human-readable summary of a tail truncation.
pub fn describe_tail(tail: &TailSum) -> String {
    format!(
        "truncated before n = {} (optimal {}), first omitted term {}",
        tail.truncation_index,
        tail.optimal_index,
        format_float(&tail.error_estimate, 6)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const PREC: Precision = Precision::digits(50);

    fn knot(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    fn dist(a: &Complex, b: &Complex) -> Float {
        abs(&Complex::with_val(a.prec().0, a - b))
    }

    #[test]
    fn removable_terms_vanish() {
        let k = knot(3, 4);
        for j in [3, 4, 6, 8, 9] {
            assert!(residue_term(&k, j, 7, PREC).is_zero());
        }
    }

    #[test]
    fn trefoil_term_value() {
        let v = residue_term(&knot(2, 3), 1, 5, PREC);
        let expected = Complex::with_val(PREC.bits(), (0.403_435_765_229_939_26, -0.232_923_747_656_228_1));
        assert!(dist(&v, &expected) < 1e-15);
    }

    #[test]
    fn closed_form_matches_residue_definition() {
        for (p, q) in [(2, 3), (3, 4), (2, 7)] {
            let k = knot(p, q);
            for n in [2, 5, 11] {
                for j in 1..k.pq() {
                    let a = residue_term(&k, j, n, PREC);
                    let b = residue_term_via_residue(&k, j, n, PREC).unwrap();
                    assert!(dist(&a, &b) < 1e-40, "({p},{q}) N={n} k={j}");
                }
            }
        }
    }

    #[test]
    fn tail_leading_terms() {
        let k = knot(2, 5);
        let terms = tail_terms(&k, 7, 3, PREC);
        assert!(terms[0].is_zero());
        let lead = i_pow((k.pq() * 7 % 4) as i64, PREC);
        assert!(dist(&terms[1], &lead) < 1e-45);
    }

    #[test]
    fn auto_truncation_stops_at_minimum() {
        let k = knot(2, 3);
        let tail = tail_sum(&k, 15, PREC, TailOrder::Auto).unwrap();
        let m = &tail.term_magnitudes;
        assert_eq!(tail.truncation_index, tail.optimal_index);
        assert!(tail.truncation_index >= 2);
        for i in 1..tail.truncation_index {
            assert!(m[i + 1] < m[i]);
        }
        assert!(m[tail.truncation_index + 1] >= m[tail.truncation_index]);
        assert_eq!(tail.error_estimate, m[tail.truncation_index]);
    }

    #[test]
    fn truncation_grows_with_n() {
        let k = knot(2, 3);
        let small = tail_sum(&k, 5, PREC, TailOrder::Auto).unwrap().truncation_index;
        let large = tail_sum(&k, 60, PREC, TailOrder::Auto).unwrap().truncation_index;
        assert!(large > small + 5);
    }

    #[test]
    fn fixed_order_beyond_optimum_is_rejected() {
        let k = knot(2, 3);
        let tail = tail_sum(&k, 15, PREC, TailOrder::Auto).unwrap();
        let err = tail_sum(&k, 15, PREC, TailOrder::Fixed(tail.optimal_index + 1)).unwrap_err();
        assert!(matches!(err, Error::DivergenceWarning { .. }));
        let fixed = tail_sum(&k, 15, PREC, TailOrder::Fixed(2)).unwrap();
        assert_eq!(fixed.truncation_index, 2);
        assert!(tail_sum(&k, 1, PREC, TailOrder::Auto).is_err());
    }

    #[test]
    fn trefoil_z_invariant() {
        let k = knot(2, 3);
        for n in [2u64, 5, 13] {
            let z = z_invariant(&k, n, PREC);
            let root = Float::with_val(PREC.bits(), 3u32).sqrt().recip();
            let expected = exp_i_pi(&Rational::from((-(n as i64), 12)), PREC) * (-root);
            assert!(dist(&z, &expected) < 1e-45);
        }
    }

    #[test]
    fn z_invariant_is_periodic() {
        let k = knot(3, 4);
        let period = 4 * k.pq();
        for n in [2u64, 7] {
            let a = z_invariant(&k, n, PREC);
            let b = z_invariant(&k, n + period, PREC);
            assert!(dist(&a, &b) < 1e-45);
        }
    }

    #[test]
    fn matched_identity_holds() {
        for (p, q) in [(2, 3), (3, 4), (3, 5)] {
            let k = knot(p, q);
            for n in [2, 6, 7, 19] {
                let r = kashaev_expansion(&k, n, PREC, TailOrder::Auto).unwrap();
                assert!(r.matched_residual < 1e-40, "({p},{q}) N={n}");
            }
        }
    }

    #[test]
    fn stated_identity_differs_by_sign_for_trefoil() {
        let k = knot(2, 3);
        let r = kashaev_expansion(&k, 7, PREC, TailOrder::Auto).unwrap();
        let twice = Float::with_val(PREC.bits(), abs(&r.residue_sum) * 2u32);
        assert!((r.main_theorem_residual - twice).abs() < 1e-40);
    }

    #[test]
    fn tail_normalizations_agree() {
        for (p, q, n) in [(2, 3, 9u64), (3, 5, 40), (2, 7, 13)] {
            let k = knot(p, q);
            let tail = tail_sum(&k, n, PREC, TailOrder::Auto).unwrap();
            let turn = (k.pq() * n % 4) as i64;
            let lhs = Complex::with_val(PREC.bits(), &tail.value * i_pow(turn, PREC)) * 2u32;
            let sign = if (k.pq() * n).is_multiple_of(2) { 1 } else { -1 };
            let rhs = normalized_tail(&k, n, tail.truncation_index, PREC) * sign;
            assert!(dist(&lhs, &rhs) < 1e-45);
        }
    }

    #[test]
    fn assembled_value_is_prefactor_times_sum() {
        let k = knot(2, 5);
        let r = kashaev_expansion(&k, 7, PREC, TailOrder::Auto).unwrap();
        let direct = prefactor(&k, 7, PREC) * Complex::with_val(PREC.bits(), &r.residue_sum + &r.tail.value);
        assert!(dist(&direct, &r.assembled_value) < 1e-45);
    }

    #[test]
    fn growth_is_positive_and_settles() {
        let g = growth_diagnostic(&knot(2, 3), 2, Precision::digits(30)).unwrap();
        assert_eq!(g.iter().map(|p| p.n).collect::<Vec<_>>(), vec![12, 36, 60]);
        assert!(g.iter().all(|p| p.ratio > 0));
        let change = Float::with_val(64, &g[2].ratio - &g[1].ratio).abs() / &g[1].ratio;
        assert!(change < 0.05);
    }
}
