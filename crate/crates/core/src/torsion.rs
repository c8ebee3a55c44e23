//! Abelian torsion `τ(z) = 2 sinh(pz) sinh(qz) / sinh(pqz)`, its residues at
//! the bifurcation points `iπk/pq`, and the non-abelian torsion of each
//! character-variety component.

use std::fmt;

use rug::{Complex, Float, Rational};

use crate::charvar::CharVarComponent;
use crate::error::{Error, Result};
use crate::exact::precision::{abs, exp_i_pi, sin_pi};
use crate::exact::{alexander_polynomial, Precision, TorusKnot};

/// Evaluates `τ(z)`.
///
/// Near a removable point `iπk/pq` (where `p | k` or `q | k`) the common
/// factor is cancelled analytically; near a genuine pole closer than
/// `10^{−D/2}` the call fails with [`Error::PoleProximity`].
pub fn tau_eval(knot: &TorusKnot, z: &Complex, prec: Precision) -> Result<Complex> {
    let bits = prec.bits();
    let (p, q, pq) = (knot.p(), knot.q(), knot.pq());
    let pi = prec.pi();
    let k_float = Float::with_val(bits, z.imag() * pq) / &pi;
    let k = k_float
        .round()
        .to_integer()
        .and_then(|v| v.to_i64())
        .ok_or_else(|| Error::InvalidArgument("argument is too large".into()))?;
    let z = Complex::with_val(bits, z);
    let two_sinh = |s: u32| -> Complex { Complex::with_val(bits, &z * s).sinh() * 2u32 };
    if k % i64::from(q) == 0 {
        let w = Complex::with_val(bits, &z * p);
        return Ok(two_sinh(q) / sinh_ratio(&w, q));
    }
    if k % i64::from(p) == 0 {
        let w = Complex::with_val(bits, &z * q);
        return Ok(two_sinh(p) / sinh_ratio(&w, p));
    }
    let pole = Complex::with_val(bits, (0, Float::with_val(bits, &pi * k) / pq));
    let distance = abs(&Complex::with_val(bits, &z - &pole));
    if distance < prec.tolerance(prec.decimal_digits() - prec.decimal_digits() / 2) {
        return Err(Error::PoleProximity { k });
    }
    let denominator = Complex::with_val(bits, &z * pq as u32).sinh();
    Ok(two_sinh(p) * two_sinh(q) / denominator / 2u32)
}

/// `sinh(nw)/sinh(w) = Σ_{j<n} e^{(n−1−2j)w}`, free of the removable zero at `w = 0`.
fn sinh_ratio(w: &Complex, n: u32) -> Complex {
    let bits = w.prec().0;
    let step = Complex::with_val(bits, w * -2i32).exp();
    let mut term = Complex::with_val(bits, w * (n - 1)).exp();
    let mut sum = Complex::new(bits);
    for _ in 0..n {
        sum += &term;
        term *= &step;
    }
    sum
}

/// Exact description of `Res_{z=iπk/pq} τ = c·sin(πk/p)·sin(πk/q)`, `c = ±2/pq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClosedForm {
    pub k: i64,
    pub coefficient: Rational,
    p: u32,
    q: u32,
}

impl ResidueClosedForm {
    pub fn value(&self, prec: Precision) -> Float {
        let s1 = sin_pi(&Rational::from((self.k, i64::from(self.p))), prec);
        let s2 = sin_pi(&Rational::from((self.k, i64::from(self.q))), prec);
        Float::with_val(prec.bits(), &self.coefficient) * s1 * s2
    }
}

impl fmt::Display for ResidueClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})*sin({}*pi/{})*sin({}*pi/{})",
            self.coefficient, self.k, self.p, self.k, self.q
        )
    }
}

/// Closed form of the residue of τ at `iπk/pq`.
pub fn tau_residue_exact(knot: &TorusKnot, k: i64) -> Result<ResidueClosedForm> {
    if knot.is_removable(k) {
        return Err(Error::NotSimplePole { k });
    }
    let sign = if k.rem_euclid(2) == 1 { 1 } else { -1 };
    Ok(ResidueClosedForm {
        k,
        coefficient: Rational::from((2 * sign, knot.pq() as i64)),
        p: knot.p(),
        q: knot.q(),
    })
}

/// Residue of τ at `iπk/pq`, `(−1)^{k+1}(2/pq) sin(πk/p) sin(πk/q)`.
pub fn tau_residue(knot: &TorusKnot, k: i64, prec: Precision) -> Result<Float> {
    Ok(tau_residue_exact(knot, k)?.value(prec))
}

/// Radius and node count for [`residue_by_contour`] at the given precision.
///
/// The trapezoid rule on a circle of radius `r` around a simple pole has
/// error of order `(r/R)^M`, where `R = π/pq` is the distance to the next pole.
pub fn contour_parameters(knot: &TorusKnot, prec: Precision) -> (Float, usize) {
    let pi = prec.pi();
    let pq = knot.pq() as u32;
    let radius =
        Float::with_val(prec.bits(), &pi / 100u32).min(&(Float::with_val(prec.bits(), &pi / (4 * pq))));
    let reach = Float::with_val(prec.bits(), &pi / pq) - &radius;
    let ratio = Float::with_val(prec.bits(), &radius / &reach).to_f64();
    let digits = f64::from(prec.decimal_digits()) + 5.0;
    let nodes = (digits * std::f64::consts::LN_10 / -ratio.ln()).ceil() as usize + 8;
    (radius, nodes)
}

/// Residue of τ at `iπk/pq` by the trapezoid rule on a circle around the pole.
pub fn residue_by_contour(
    knot: &TorusKnot,
    k: i64,
    radius: &Float,
    nodes: usize,
    prec: Precision,
) -> Result<Complex> {
    let work = prec.with_extra_digits(10);
    let bits = work.bits();
    let pi = work.pi();
    let centre = Complex::with_val(bits, (0, Float::with_val(bits, &pi * k) / knot.pq()));
    let mut sum = Complex::new(bits);
    for j in 0..nodes {
        let theta = Rational::from((2 * j as i64, nodes as i64));
        let offset = exp_i_pi(&theta, work) * radius;
        let z = Complex::with_val(bits, &centre + &offset);
        sum += tau_eval(knot, &z, work)? * offset;
    }
    Ok(Complex::with_val(prec.bits(), sum / nodes as u32))
}

/// Exact form `(16/p²q²)·sin²(πα/p)·sin²(πβ/q)` of the non-abelian torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionClosedForm {
    pub coefficient: Rational,
    pub alpha: u32,
    pub beta: u32,
    p: u32,
    q: u32,
}

impl TorsionClosedForm {
    pub fn value(&self, prec: Precision) -> Float {
        let s1 = sin_pi(&Rational::from((self.alpha, self.p)), prec);
        let s2 = sin_pi(&Rational::from((self.beta, self.q)), prec);
        Float::with_val(prec.bits(), &self.coefficient) * s1.square() * s2.square()
    }
}

impl fmt::Display for TorsionClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let angle = |a: u32, n: u32| {
            if a == 1 {
                format!("pi/{n}")
            } else {
                format!("{a}*pi/{n}")
            }
        };
        write!(
            f,
            "({})*sin({})^2*sin({})^2",
            self.coefficient,
            angle(self.alpha, self.p),
            angle(self.beta, self.q)
        )
    }
}

pub fn nonabelian_torsion_exact(knot: &TorusKnot, comp: &CharVarComponent) -> TorsionClosedForm {
    let pq = knot.pq();
    TorsionClosedForm {
        coefficient: Rational::from((16u64, pq * pq)),
        alpha: comp.alpha,
        beta: comp.beta,
        p: knot.p(),
        q: knot.q(),
    }
}

/// Non-abelian torsion of a component; a strictly positive real.
pub fn nonabelian_torsion(knot: &TorusKnot, comp: &CharVarComponent, prec: Precision) -> Float {
    nonabelian_torsion_exact(knot, comp).value(prec)
}

/// Outcome of checking `(2·Res τ)² = ±𝕋` at one bifurcation point.
#[derive(Clone, Debug)]
pub struct ResidueCheck {
    pub k: u64,
    pub doubled_residue_squared: Float,
    /// Sign `s` for which `(2·Res)² = s·𝕋` holds best.
    pub sign: i32,
    pub relative_residual: Float,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct ResidueTheoremReport {
    pub alpha: u32,
    pub beta: u32,
    pub torsion: Float,
    pub checks: Vec<ResidueCheck>,
}

impl ResidueTheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks `(2·Res τ)² = ±𝕋` at both bifurcation points of a component to a
/// relative tolerance of `10^{5−D}`.
pub fn verify_residue_theorem(
    knot: &TorusKnot,
    comp: &CharVarComponent,
    prec: Precision,
) -> Result<ResidueTheoremReport> {
    let torsion = nonabelian_torsion(knot, comp, prec);
    let tolerance = prec.tolerance(5);
    let mut checks = Vec::with_capacity(2);
    for k in comp.bifurcation_points() {
        let residue = tau_residue(knot, k as i64, prec)?;
        let doubled_squared = (residue * 2u32).square();
        let plus = Float::with_val(prec.bits(), &doubled_squared - &torsion).abs();
        let minus = Float::with_val(prec.bits(), &doubled_squared + &torsion).abs();
        let (sign, diff) = if plus <= minus { (1, plus) } else { (-1, minus) };
        let relative_residual = diff / &torsion;
        checks.push(ResidueCheck {
            k,
            doubled_residue_squared: doubled_squared,
            sign,
            passed: sign == 1 && relative_residual <= tolerance,
            relative_residual,
        });
    }
    Ok(ResidueTheoremReport {
        alpha: comp.alpha,
        beta: comp.beta,
        torsion,
        checks,
    })
}

/// `(t−1)(1/t−1) / (Δ′(t)Δ′(1/t))` at `t = e^{2iπk/pq}`, a simple root of Δ.
pub fn torsion_at_bifurcation_via_derivative(knot: &TorusKnot, k: i64, prec: Precision) -> Result<Complex> {
    if knot.is_removable(k) {
        return Err(Error::NotSimplePole { k });
    }
    let work = prec.with_extra_digits(5);
    let delta = alexander_polynomial(knot);
    let t = exp_i_pi(&Rational::from((2 * k, knot.pq() as i64)), work);
    let t_inv = t.clone().recip();
    let numerator = Complex::with_val(work.bits(), &t - 1u32) * Complex::with_val(work.bits(), &t_inv - 1u32);
    let denominator = delta.derivative_eval(&t) * delta.derivative_eval(&t_inv);
    Ok(Complex::with_val(prec.bits(), numerator / denominator))
}

/// `−τ(z)·τ(−z)`; equals `τ(z)²` since τ is odd.
pub fn abelian_torsion_product(knot: &TorusKnot, z: &Complex, prec: Precision) -> Result<Complex> {
    let plus = tau_eval(knot, z, prec)?;
    let minus = tau_eval(knot, &Complex::with_val(prec.bits(), -z), prec)?;
    Ok(-(plus * minus))
}

/// The degenerate unknot case `τ(z) = 2 sinh z`, for which the product is `4 sinh²z`.
pub fn unknot_abelian_torsion_product(z: &Complex, prec: Precision) -> Complex {
    let s = Complex::with_val(prec.bits(), z).sinh();
    s.square() * 4u32
}
