//! Independent evaluation of `⟨T(p,q)⟩_N` from its contour-integral
//! representation
//!
//! ```text
//! 2⟨K⟩_N = (pqN/2)^{3/2} e^{−iπ(p/q + q/p + N/2)/2N} ∫_C e^{πpqN(z + iz²/2)} z² τ(πz) dz
//! ```
//!
//! along the line `z = x·e^{iφ}`, `x ∈ ℝ`. The integrand is analytic in a strip
//! of half-width `cos φ/pq` around the line and decays like a Gaussian, so the
//! trapezoid rule converges geometrically. The step is halved until two
//! successive sums agree.

use rug::ops::Pow;
use rug::{Complex, Float, Rational};

use crate::error::{Error, Result};
use crate::exact::precision::{abs, exp_i_pi, format_float};
use crate::exact::{Precision, TorusKnot};
use crate::torsion::tau_eval;

const LN_10: f64 = std::f64::consts::LN_10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    /// Angle of the integration line, in `(0, π/2)`.
    pub phi: f64,
    /// Upper limit on the working precision in decimal digits.
    pub max_digits: u32,
    pub guard_digits: u32,
    /// Maximum number of step halvings after the first sum.
    pub max_refinements: u32,
    /// Sum the nodes from the right end of the line instead of the left.
    pub reverse: bool,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            phi: std::f64::consts::FRAC_PI_4,
            max_digits: 2000,
            guard_digits: 10,
            max_refinements: 6,
            reverse: false,
        }
    }
}

/// Discretization chosen for one integral.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureParameters {
    pub phi: f64,
    /// Truncation point on the decaying side `x > 0`.
    pub radius_positive: f64,
    /// Truncation point on the side `x < 0`.
    pub radius_negative: f64,
    /// Initial trapezoid step.
    pub step: f64,
    /// Nodes in the initial sum.
    pub node_budget: usize,
    pub working_digits: u32,
    /// `πpqN·cos²φ/(2 sin 2φ)`, the log-magnitude of the integrand's peak.
    pub peak_exponent: f64,
}

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    /// Estimate of `⟨K⟩_N`.
    pub value: Complex,
    /// `truncation_bound + refinement_delta`.
    pub error_estimate: Float,
    /// Estimated size of the two discarded tails.
    pub truncation_bound: Float,
    /// Change of the value under the final step halving.
    pub refinement_delta: Float,
    pub nodes_used: usize,
    pub working_precision: u32,
    pub path_angle: f64,
    pub truncation_radius: f64,
    pub parameters: QuadratureParameters,
    pub converged: bool,
}

/// Picks the truncation radii, step and working precision for `target_digits`.
pub fn choose_parameters(
    knot: &TorusKnot,
    n: u64,
    target_digits: u32,
    config: &QuadratureConfig,
) -> QuadratureParameters {
    let phi = config.phi;
    let (cos, sin2) = (phi.cos(), (2.0 * phi).sin());
    let pq = knot.pq() as f64;
    let a = std::f64::consts::PI * pq * n as f64;
    let peak_exponent = a * cos * cos / (2.0 * sin2);
    // |⟨K⟩_N| is compared against an integral scaled down by (pqN)^{3/2}
    let size_digits = 1.5 * (pq * n as f64).log10() + 2.0;
    let guard = f64::from(config.guard_digits);
    let tail_log = (f64::from(target_digits) + guard + size_digits + 5.0) * LN_10;
    let disc = (cos * cos + 2.0 * sin2 * tail_log / a).sqrt();
    let radius_positive = (cos + disc) / sin2;
    let radius_negative = (disc - cos) / sin2;
    let working = f64::from(target_digits) + guard + size_digits + peak_exponent / LN_10;
    // half the distance from the line to the nearest poles ±i/pq
    let strip = 0.5 * cos / pq;
    let growth = a * strip * (1.0 + radius_positive) / LN_10;
    let step = 2.0 * std::f64::consts::PI * strip / ((working + growth) * LN_10);
    let node_budget = ((radius_positive / step).ceil() + (radius_negative / step).ceil()) as usize + 1;
    QuadratureParameters {
        phi,
        radius_positive,
        radius_negative,
        step,
        node_budget,
        working_digits: working.ceil() as u32,
        peak_exponent,
    }
}

struct Integrand<'a> {
    knot: &'a TorusKnot,
    direction: Complex,
    exponent_scale: Float,
    half_i: Complex,
    pi: Float,
    prec: Precision,
}

impl Integrand<'_> {
    fn eval(&self, x: &Float) -> Result<Complex> {
        let bits = self.prec.bits();
        let z = Complex::with_val(bits, &self.direction * x);
        let z_sq = Complex::with_val(bits, z.square_ref());
        let gauss = (Complex::with_val(bits, &z + Complex::with_val(bits, &z_sq * &self.half_i))
            * &self.exponent_scale)
            .exp();
        let tau = tau_eval(self.knot, &Complex::with_val(bits, &z * &self.pi), self.prec)?;
        Ok(gauss * z_sq * tau * &self.direction)
    }
}

/// `⟨K⟩_N` to `target_digits` significant digits.
pub fn kashaev_integral(
    knot: &TorusKnot,
    n: u64,
    target_digits: u32,
    config: &QuadratureConfig,
) -> Result<QuadratureResult> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("N = {n} must be at least 2")));
    }
    if target_digits < 10 {
        return Err(Error::InvalidArgument(format!(
            "target of {target_digits} digits is below the minimum of 10"
        )));
    }
    if !(config.phi > 0.0 && config.phi < std::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidArgument(format!(
            "path angle {} outside (0, π/2)",
            config.phi
        )));
    }
    let params = choose_parameters(knot, n, target_digits, config);
    if params.working_digits > config.max_digits {
        return Err(Error::PrecisionExhausted {
            cap: config.max_digits,
            demand: params.working_digits,
        });
    }
    let prec = Precision::digits(params.working_digits);
    let bits = prec.bits();
    let pi = prec.pi();
    let phi = Float::with_val(bits, config.phi);
    let (sin, cos) = phi.sin_cos(Float::new(bits));
    let integrand = Integrand {
        knot,
        direction: Complex::with_val(bits, (cos, sin)),
        exponent_scale: Float::with_val(bits, &pi * (knot.pq() * n)),
        half_i: Complex::with_val(bits, (0, 0.5f64)),
        pi: pi.clone(),
        prec,
    };

    let mut step = Float::with_val(bits, params.step);
    let j_pos = (params.radius_positive / params.step).ceil() as i64;
    let j_neg = (params.radius_negative / params.step).ceil() as i64;
    let mut indices: Vec<i64> = (-j_neg..=j_pos).collect();
    if config.reverse {
        indices.reverse();
    }
    let mut raw = prec.zero();
    for &j in &indices {
        raw += integrand.eval(&Float::with_val(bits, &step * j))?;
    }
    let mut total = Complex::with_val(bits, &raw * &step);
    let mut nodes_used = indices.len();

    let target = Precision::digits(target_digits).tolerance(0);
    let mut converged = false;
    let mut delta = Float::new(bits);
    let mut span = (j_neg, j_pos);
    for _ in 0..config.max_refinements {
        let half = Float::with_val(bits, &step / 2u32);
        let mut odd: Vec<i64> = (-span.0..span.1).map(|j| 2 * j + 1).collect();
        if config.reverse {
            odd.reverse();
        }
        let mut extra = prec.zero();
        for &j in &odd {
            extra += integrand.eval(&Float::with_val(bits, &half * j))?;
        }
        nodes_used += odd.len();
        let refined = Complex::with_val(bits, &total / 2u32) + extra * &half;
        delta = abs(&Complex::with_val(bits, &refined - &total));
        let scale = abs(&refined);
        total = refined;
        step = half;
        span = (2 * span.0, 2 * span.1);
        if delta <= Float::with_val(bits, &scale * &target) {
            converged = true;
            break;
        }
    }

    let truncation = {
        let a = Float::with_val(bits, &integrand.exponent_scale);
        let (s, c) = ((2.0 * config.phi).sin(), config.phi.cos());
        let right = Float::with_val(bits, &step * span.1);
        let left = Float::with_val(bits, &step * -span.0);
        let slope_right = Float::with_val(bits, &a * (right.to_f64() * s - c));
        let slope_left = Float::with_val(bits, &a * (-left.to_f64() * s + c));
        abs(&integrand.eval(&right)?) / slope_right + abs(&integrand.eval(&left)?) / slope_left
    };

    // ⟨K⟩_N = ½(pqN/2)^{3/2} e^{−iπ(p/q+q/p+N/2)/2N}·∫
    let (p, q) = (u64::from(knot.p()), u64::from(knot.q()));
    let phase = -Rational::from((p * p + q * q, 2 * n * knot.pq())) - Rational::from((1, 4));
    let magnitude = Float::with_val(bits, Rational::from((knot.pq() * n, 2u32))).pow(1.5f64) / 2u32;
    let factor = exp_i_pi(&phase, prec) * &magnitude;
    let value = Complex::with_val(bits, &total * &factor);
    let refinement_delta = delta * &magnitude;
    let truncation_bound = truncation * &magnitude;
    Ok(QuadratureResult {
        value,
        error_estimate: Float::with_val(bits, &refinement_delta + &truncation_bound),
        truncation_bound,
        refinement_delta,
        nodes_used,
        working_precision: params.working_digits,
        path_angle: params.phi,
        truncation_radius: params.radius_positive,
        parameters: params,
        converged,
    })
}

impl QuadratureResult {
    pub fn summary(&self) -> String {
        format!(
            "{} nodes at {} digits, phi = {:.6}, R = {:.4}, error {}",
            self.nodes_used,
            self.working_precision,
            self.path_angle,
            self.truncation_radius,
            format_float(&self.error_estimate, 3)
        )
    }
}
