//! Points of the Kirk–Klassen bundle over the boundary-torus character
//! variety, the two lifts of a boundary character (from the knot exterior and
//! from the orbifold), their pairing, and the Chern–Simons invariant of the
//! characters with `χ(μ) = ±2`.
//!
//! A point `[γ_μ, γ_λ; z]` is identified with its images under
//!
//! ```text
//! x: (α, β; z) ↦ (α + 1, β; z·e^{2πiβ})
//! y: (α, β; z) ↦ (α, β + 1; z·e^{−2πiα})
//! b: (α, β; z) ↦ (−α, −β; z)
//! ```

use std::cmp::Ordering;

use rug::{Complex, Float, Integer, Rational};

use crate::charvar::CharVarComponent;
use crate::error::{Error, Result};
use crate::exact::precision::{abs, exp_2pi_i, rational_mod};
use crate::exact::{Precision, TorusKnot};

/// Generators of the group acting on the bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    X,
    XInverse,
    Y,
    YInverse,
    B,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::X,
        Generator::XInverse,
        Generator::Y,
        Generator::YInverse,
        Generator::B,
    ];
}

/// A representative `[γ_μ, γ_λ; z]` with `z ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BundlePoint {
    gamma_mu: Complex,
    gamma_lambda: Complex,
    fiber: Complex,
}

impl BundlePoint {
    pub fn new(gamma_mu: Complex, gamma_lambda: Complex, fiber: Complex) -> Result<Self> {
        if fiber.is_zero() {
            return Err(Error::InvalidArgument("bundle fiber must be non-zero".into()));
        }
        Ok(BundlePoint {
            gamma_mu,
            gamma_lambda,
            fiber,
        })
    }

    pub fn gamma_mu(&self) -> &Complex {
        &self.gamma_mu
    }

    pub fn gamma_lambda(&self) -> &Complex {
        &self.gamma_lambda
    }

    pub fn fiber(&self) -> &Complex {
        &self.fiber
    }

    fn bits(&self) -> u32 {
        self.fiber.prec().0
    }

    pub fn act(&self, g: Generator) -> Self {
        match g {
            Generator::X => self.translate(1, 0),
            Generator::XInverse => self.translate(-1, 0),
            Generator::Y => self.translate(0, 1),
            Generator::YInverse => self.translate(0, -1),
            Generator::B => self.reflect(),
        }
    }

    /// `[α + m, β + n; z·e^{2πi(mβ − nα)}]`
    pub fn translate(&self, m: i64, n: i64) -> Self {
        if m == 0 && n == 0 {
            return self.clone();
        }
        let bits = self.bits();
        let pi = Float::with_val(bits, rug::float::Constant::Pi);
        let exponent =
            Complex::with_val(bits, &self.gamma_lambda * m) - Complex::with_val(bits, &self.gamma_mu * n);
        let phase = (exponent * Complex::with_val(bits, (0, pi * 2u32))).exp();
        BundlePoint {
            gamma_mu: Complex::with_val(bits, &self.gamma_mu + m),
            gamma_lambda: Complex::with_val(bits, &self.gamma_lambda + n),
            fiber: Complex::with_val(bits, &self.fiber * &phase),
        }
    }

    /// `[−α, −β; z]`
    pub fn reflect(&self) -> Self {
        BundlePoint {
            gamma_mu: Complex::with_val(self.bits(), -&self.gamma_mu),
            gamma_lambda: Complex::with_val(self.bits(), -&self.gamma_lambda),
            fiber: self.fiber.clone(),
        }
    }

    /// Default comparison tolerance, about `2^{30−bits}`.
    pub fn default_tolerance(&self) -> Float {
        let bits = self.bits();
        Float::with_val(bits, 1u32) >> (bits.saturating_sub(30)) as i32
    }

    /// Canonical representative of the orbit.
    ///
    /// Both the point and its reflection are translated into the box
    /// `Re γ_μ ∈ [0, 1)`, `Re γ_λ ∈ [−1/2, 1/2)`; the one whose key
    /// `(Re γ_μ, Re γ_λ, Im γ_μ, Im γ_λ)` is lexicographically larger is kept.
    /// Keys closer than `tol` count as equal.
    pub fn normalize_with(&self, tol: &Float) -> Self {
        let a = self.box_representative(tol);
        let b = self.reflect().box_representative(tol);
        match compare_keys(&a.key(), &b.key(), tol) {
            Ordering::Less => b,
            _ => a,
        }
    }

    pub fn normalize(&self) -> Self {
        self.normalize_with(&self.default_tolerance())
    }

    fn key(&self) -> [Float; 4] {
        [
            self.gamma_mu.real().clone(),
            self.gamma_lambda.real().clone(),
            self.gamma_mu.imag().clone(),
            self.gamma_lambda.imag().clone(),
        ]
    }

    fn box_representative(&self, tol: &Float) -> Self {
        let bits = self.bits();
        let floor_i64 = |x: Float| x.floor().to_integer().and_then(|v| v.to_i64()).unwrap_or(0);
        let m = -floor_i64(self.gamma_mu.real().clone());
        let n = -floor_i64(Float::with_val(bits, self.gamma_lambda.real() + 0.5f64));
        let mut out = self.translate(m, n);
        // values just below the upper edge are folded onto the lower edge
        if Float::with_val(bits, 1u32 - out.gamma_mu.real()) <= *tol {
            out = out.translate(-1, 0);
        }
        if Float::with_val(bits, 0.5f64 - out.gamma_lambda.real()) <= *tol {
            out = out.translate(0, -1);
        }
        out
    }
}

fn compare_keys(a: &[Float; 4], b: &[Float; 4], tol: &Float) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let diff = Float::with_val(x.prec(), x - y);
        if diff > *tol {
            return Ordering::Greater;
        }
        if -diff > *tol {
            return Ordering::Less;
        }
    }
    Ordering::Equal
}

fn complex_close(a: &Complex, b: &Complex, tol: &Float) -> bool {
    abs(&Complex::with_val(a.prec(), a - b)) <= *tol
}

/// True when the canonical representatives agree within `tol` (the fiber
/// comparison is relative to `max(1, |z|)`).
pub fn equivalent(a: &BundlePoint, b: &BundlePoint, tol: &Float) -> bool {
    let (na, nb) = (a.normalize_with(tol), b.normalize_with(tol));
    let scale = abs(na.fiber()).max(&Float::with_val(tol.prec(), 1u32));
    complex_close(&na.gamma_mu, &nb.gamma_mu, tol)
        && complex_close(&na.gamma_lambda, &nb.gamma_lambda, tol)
        && complex_close(&na.fiber, &nb.fiber, &Float::with_val(tol.prec(), tol * &scale))
}

/// `z/w` on a common lift `[γ, γ′; z]`, `[γ, γ′; w]` of the two points.
pub fn inner_product(m: &BundlePoint, w: &BundlePoint, tol: &Float) -> Result<Complex> {
    for candidate in [w.clone(), w.reflect()] {
        let shift = |a: &Complex, b: &Complex| {
            Float::with_val(a.prec().0, a.real() - b.real())
                .round()
                .to_integer()
                .and_then(|v| v.to_i64())
        };
        let (Some(dm), Some(dn)) = (
            shift(&m.gamma_mu, &candidate.gamma_mu),
            shift(&m.gamma_lambda, &candidate.gamma_lambda),
        ) else {
            continue;
        };
        let lifted = candidate.translate(dm, dn);
        if complex_close(&m.gamma_mu, &lifted.gamma_mu, tol)
            && complex_close(&m.gamma_lambda, &lifted.gamma_lambda, tol)
        {
            return Ok(Complex::with_val(m.bits(), &m.fiber / &lifted.fiber));
        }
    }
    Err(Error::BaseMismatch)
}

/// A bundle point with rational coordinates and fiber `e^{2πi·phase}`, the
/// phase kept in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalBundlePoint {
    pub gamma_mu: Rational,
    pub gamma_lambda: Rational,
    pub phase: Rational,
}

impl RationalBundlePoint {
    pub fn new(gamma_mu: Rational, gamma_lambda: Rational, phase: Rational) -> Self {
        RationalBundlePoint {
            gamma_mu,
            gamma_lambda,
            phase: rational_mod(&phase, &Integer::from(1)),
        }
    }

    pub fn translate(&self, m: i64, n: i64) -> Self {
        let shift = Rational::from(&self.gamma_lambda * m) - Rational::from(&self.gamma_mu * n);
        RationalBundlePoint::new(
            Rational::from(&self.gamma_mu + m),
            Rational::from(&self.gamma_lambda + n),
            shift + &self.phase,
        )
    }

    pub fn reflect(&self) -> Self {
        RationalBundlePoint {
            gamma_mu: Rational::from(-&self.gamma_mu),
            gamma_lambda: Rational::from(-&self.gamma_lambda),
            phase: self.phase.clone(),
        }
    }

    /// Exact counterpart of [`BundlePoint::normalize`].
    pub fn normalize(&self) -> Self {
        let boxed = |v: &RationalBundlePoint| {
            let m = -floor_i64(&v.gamma_mu);
            let n = -floor_i64(&(&v.gamma_lambda + Rational::from((1, 2))));
            v.translate(m, n)
        };
        let a = boxed(self);
        let b = boxed(&self.reflect());
        if (&b.gamma_mu, &b.gamma_lambda) > (&a.gamma_mu, &a.gamma_lambda) {
            b
        } else {
            a
        }
    }

    pub fn equivalent(&self, other: &RationalBundlePoint) -> bool {
        self.normalize() == other.normalize()
    }

    pub fn to_bundle_point(&self, prec: Precision) -> BundlePoint {
        let bits = prec.bits();
        BundlePoint {
            gamma_mu: Complex::with_val(bits, &self.gamma_mu),
            gamma_lambda: Complex::with_val(bits, &self.gamma_lambda),
            fiber: exp_2pi_i(&self.phase, prec),
        }
    }
}

fn floor_i64(r: &Rational) -> i64 {
    r.clone()
        .floor()
        .numer()
        .to_i64()
        .expect("coordinate fits in i64")
}

/// Exact pairing: the phase of `z/w` on a common lift, in `[0, 1)`.
pub fn inner_product_exact(m: &RationalBundlePoint, w: &RationalBundlePoint) -> Result<Rational> {
    for candidate in [w.clone(), w.reflect()] {
        let dm = Rational::from(&m.gamma_mu - &candidate.gamma_mu);
        let dn = Rational::from(&m.gamma_lambda - &candidate.gamma_lambda);
        if dm.is_integer() && dn.is_integer() {
            let lifted = candidate.translate(floor_i64(&dm), floor_i64(&dn));
            return Ok(rational_mod(
                &Rational::from(&m.phase - &lifted.phase),
                &Integer::from(1),
            ));
        }
    }
    Err(Error::BaseMismatch)
}

/// The two characters of a component with `χ(μ) = ±2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `χ(μ) = 2`, reached at `γ_μ = 0`.
    Plus,
    /// `χ(μ) = −2`, reached at `γ_μ = 1/2`.
    Minus,
}

/// `x = βps + εαqr`, whose square is congruent to `(k±)²` modulo `4pq`.
fn lift_numerator(knot: &TorusKnot, comp: &CharVarComponent, epsilon: i32) -> Integer {
    let (r, s) = knot.bezout();
    let (p, q) = (i64::from(knot.p()), i64::from(knot.q()));
    Integer::from(i64::from(comp.beta) * p * s + i64::from(epsilon) * i64::from(comp.alpha) * q * r)
}

/// Exact knot-exterior lift
/// `[γ_μ, α/2 − pq·γ_μ; exp 2πi(x²/4pq − α·γ_μ/2)]` for rational `γ_μ`.
pub fn knot_exterior_lift_exact(
    knot: &TorusKnot,
    comp: &CharVarComponent,
    gamma_mu: &Rational,
    epsilon: i32,
) -> RationalBundlePoint {
    let pq = knot.pq();
    let alpha_half = Rational::from((comp.alpha, 2u32));
    let gamma_lambda = &alpha_half - Rational::from(gamma_mu * pq);
    let x = lift_numerator(knot, comp, epsilon);
    let phase = Rational::from((x.square(), Integer::from(4 * pq))) - Rational::from(&alpha_half * gamma_mu);
    RationalBundlePoint::new(gamma_mu.clone(), gamma_lambda, phase)
}

/// Knot-exterior lift of the character of `comp` with meridian angle `γ_μ`;
/// `epsilon = ±1` selects one of two equivalent formulas.
pub fn knot_exterior_lift(
    knot: &TorusKnot,
    comp: &CharVarComponent,
    gamma_mu: &Complex,
    epsilon: i32,
    prec: Precision,
) -> BundlePoint {
    let bits = prec.bits();
    let pq = knot.pq();
    let alpha_half = Float::with_val(bits, comp.alpha) / 2u32;
    let gamma_lambda = Complex::with_val(bits, &alpha_half - Complex::with_val(bits, gamma_mu * pq as u32));
    let x = lift_numerator(knot, comp, epsilon);
    let constant = exp_2pi_i(&Rational::from((x.square(), Integer::from(4 * pq))), prec);
    let pi = prec.pi();
    // exp(−iπ·α·γ_μ)
    let exponent =
        Complex::with_val(bits, gamma_mu * &alpha_half) * Complex::with_val(bits, (0, -(pi * 2u32)));
    BundlePoint {
        gamma_mu: Complex::with_val(bits, gamma_mu),
        gamma_lambda,
        fiber: constant * exponent.exp(),
    }
}

/// Orbifold lift `[n/2, γ_λ; e^{iπnγ_λ}]`.
pub fn orbifold_lift(n: i64, gamma_lambda: &Complex) -> BundlePoint {
    let bits = gamma_lambda.prec().0;
    let pi = Float::with_val(bits, rug::float::Constant::Pi);
    let exponent = Complex::with_val(bits, gamma_lambda * n) * Complex::with_val(bits, (0, pi));
    BundlePoint {
        gamma_mu: Complex::with_val(bits, (Float::with_val(bits, n) / 2u32, 0)),
        gamma_lambda: gamma_lambda.clone(),
        fiber: exponent.exp(),
    }
}

pub fn orbifold_lift_exact(n: i64, gamma_lambda: &Rational) -> RationalBundlePoint {
    RationalBundlePoint::new(
        Rational::from((n, 2)),
        gamma_lambda.clone(),
        Rational::from(gamma_lambda * n) / 2u32,
    )
}

/// Phase (in turns) of the closed-form Chern–Simons invariant:
/// `(k⁻)²/4pq` on the `+` branch and `−(pq − k⁺)²/4pq` on the `−` branch.
pub fn cs_phase(knot: &TorusKnot, comp: &CharVarComponent, branch: Branch) -> Rational {
    let phase = match branch {
        Branch::Plus => Rational::from((comp.k_minus * comp.k_minus, 4 * knot.pq())),
        Branch::Minus => -comp.a_triangle.clone(),
    };
    rational_mod(&phase, &Integer::from(1))
}

/// Closed-form Chern–Simons invariant, `e^{iπ(k⁻)²/2pq}` or `e^{−iπ(pq−k⁺)²/2pq}`.
pub fn cs_invariant(knot: &TorusKnot, comp: &CharVarComponent, branch: Branch, prec: Precision) -> Complex {
    exp_2pi_i(&cs_phase(knot, comp, branch), prec)
}

/// Meridian angle of the `±` character and the parity-matched orbifold integer.
fn branch_data(branch: Branch) -> (Rational, i64) {
    match branch {
        Branch::Plus => (Rational::new(), 0),
        Branch::Minus => (Rational::from((1, 2)), 1),
    }
}

/// Exact phase of the pairing between the knot-exterior lift and the
/// orbifold lift over the `±` character of `comp`.
pub fn cs_via_inner_product_exact(
    knot: &TorusKnot,
    comp: &CharVarComponent,
    branch: Branch,
) -> Result<Rational> {
    let (gamma_mu, n) = branch_data(branch);
    let exterior = knot_exterior_lift_exact(knot, comp, &gamma_mu, 1);
    let orbifold = orbifold_lift_exact(n, &exterior.gamma_lambda);
    inner_product_exact(&exterior, &orbifold)
}

/// Pairing between the knot-exterior lift and the orbifold lift, in
/// floating point.
pub fn cs_via_inner_product(
    knot: &TorusKnot,
    comp: &CharVarComponent,
    branch: Branch,
    prec: Precision,
) -> Result<Complex> {
    let (gamma_mu, n) = branch_data(branch);
    let exterior = knot_exterior_lift(knot, comp, &Complex::with_val(prec.bits(), &gamma_mu), 1, prec);
    let orbifold = orbifold_lift(n, exterior.gamma_lambda());
    inner_product(&exterior, &orbifold, &prec.tolerance(8))
}

/// `z(end)/z(start)` phase in turns along a polyline in the `(γ_μ, γ_λ)` plane:
/// each affine segment contributes `γ_μ(0)γ_λ(1) − γ_μ(1)γ_λ(0)`.
pub fn kirk_klassen_phase(vertices: &[(Rational, Rational)]) -> Rational {
    vertices
        .windows(2)
        .map(|w| cross(&w[0], &w[1]))
        .fold(Rational::new(), |acc, c| acc + c)
}

/// Exact transport of a fiber phase (in turns) along a polyline.
pub fn kirk_klassen_transport_exact(vertices: &[(Rational, Rational)], start_phase: &Rational) -> Rational {
    rational_mod(&(kirk_klassen_phase(vertices) + start_phase), &Integer::from(1))
}

/// Transport of a fiber value along a polyline with complex vertices.
pub fn kirk_klassen_transport(vertices: &[(Complex, Complex)], z_start: &Complex) -> Complex {
    let bits = z_start.prec().0;
    let mut integral = Complex::new(bits);
    for w in vertices.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        integral += Complex::with_val(bits, &a.0 * &b.1) - Complex::with_val(bits, &b.0 * &a.1);
    }
    let pi = Float::with_val(bits, rug::float::Constant::Pi);
    let exponent = integral * Complex::with_val(bits, (0, pi * 2u32));
    Complex::with_val(bits, z_start * exponent.exp())
}

fn cross(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    Rational::from(&a.0 * &b.1) - Rational::from(&b.0 * &a.1)
}

/// Signed double area `Σ (x_i y_{i+1} − x_{i+1} y_i)` of a closed polygon.
pub fn signed_double_area(vertices: &[(Rational, Rational)]) -> Rational {
    let n = vertices.len();
    (0..n)
        .map(|i| cross(&vertices[i], &vertices[(i + 1) % n]))
        .fold(Rational::new(), |acc, c| acc + c)
}

fn point(x: Rational, y: Rational) -> (Rational, Rational) {
    (x, y)
}

/// Trapezoid `P⁻ P⁺ Q⁺ Q⁻` with `P± = (k±/2pq, 0)` and `Q± = (0, k±/2)`.
pub fn trapezoid_vertices(knot: &TorusKnot, comp: &CharVarComponent) -> [(Rational, Rational); 4] {
    let pq = knot.pq();
    let p_at = |k: u64| point(Rational::from((k, 2 * pq)), Rational::new());
    let q_at = |k: u64| point(Rational::new(), Rational::from((k, 2u64)));
    [
        p_at(comp.k_minus),
        p_at(comp.k_plus),
        q_at(comp.k_plus),
        q_at(comp.k_minus),
    ]
}

/// Triangle bounded by the component path on one side of the trapezoid:
/// `P⁻ Q⁻ O` on the `+` branch and `P⁺ R⁺ O′` on the `−` branch, where
/// `R⁺ = (1/2, k⁺/2 − pq/2)` and `O′ = (1/2, 0)`.
pub fn triangle_vertices(
    knot: &TorusKnot,
    comp: &CharVarComponent,
    branch: Branch,
) -> [(Rational, Rational); 3] {
    let pq = knot.pq();
    match branch {
        Branch::Plus => [
            point(Rational::from((comp.k_minus, 2 * pq)), Rational::new()),
            point(Rational::new(), Rational::from((comp.k_minus, 2u64))),
            point(Rational::new(), Rational::new()),
        ],
        Branch::Minus => {
            let half = Rational::from((1, 2));
            [
                point(Rational::from((comp.k_plus, 2 * pq)), Rational::new()),
                point(
                    half.clone(),
                    Rational::from((comp.k_plus as i64 - pq as i64, 2i64)),
                ),
                point(half, Rational::new()),
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charvar::enumerate_components;

    const PREC: Precision = Precision::digits(40);

    fn knot(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex {
        Complex::with_val(PREC.bits(), (re, im))
    }

    fn bp(mu: (f64, f64), lambda: (f64, f64), z: (f64, f64)) -> BundlePoint {
        BundlePoint::new(c(mu.0, mu.1), c(lambda.0, lambda.1), c(z.0, z.1)).unwrap()
    }

    fn tol() -> Float {
        PREC.tolerance(8)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn zero_fiber_rejected() {
        assert!(BundlePoint::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn normalize_examples() {
        let v = bp((0.3, 0.1), (0.2, -0.4), (0.5, 2.0));
        assert!(equivalent(&v, &v.act(Generator::X), &tol()));
        let origin = bp((0.0, 0.0), (0.0, 0.0), (2.0, 1.0));
        let n = origin.normalize();
        assert!(complex_close(n.fiber(), origin.fiber(), &tol()));
        assert!(n.gamma_mu().real().is_zero() && n.gamma_lambda().real().is_zero());

        let shifted = bp((3.5, 0.0), (0.25, 0.0), (1.0, 0.0));
        let n = shifted.normalize();
        // three inverse x-moves multiply by e^{2πi·(−3)·(1/4)} = i
        assert!(complex_close(n.gamma_mu(), &c(0.5, 0.0), &tol()));
        assert!(complex_close(n.gamma_lambda(), &c(0.25, 0.0), &tol()));
        assert!(complex_close(n.fiber(), &c(0.0, 1.0), &tol()));
    }

    #[test]
    fn normalize_is_idempotent() {
        let v = bp((-2.7, 0.3), (5.9, -1.0), (0.1, 0.3));
        let once = v.normalize();
        assert!(equivalent(&once, &once.normalize(), &tol()));
        assert!(complex_close(once.fiber(), once.normalize().fiber(), &tol()));
    }

    #[test]
    fn equivalence_examples() {
        let v = bp((0.2, 0.0), (0.7, 0.0), (1.0, 1.0));
        assert!(equivalent(&v, &v.act(Generator::X), &tol()));
        assert!(equivalent(&v, &v.act(Generator::B), &tol()));
        assert!(equivalent(&v, &v.act(Generator::YInverse), &tol()));
        let a = bp((1.0 / 3.0, 0.0), (0.0, 0.0), (1.0, 0.0));
        let b = bp((1.0 / 3.0, 0.0), (0.0, 0.0), (-1.0, 0.0));
        assert!(!equivalent(&a, &b, &tol()));
    }

    #[test]
    fn inner_product_examples() {
        let m = bp((0.2, 0.1), (0.3, 0.0), (2.0, 1.0));
        let w = bp((0.2, 0.1), (0.3, 0.0), (0.0, 1.0));
        let ratio = inner_product(&m, &w, &tol()).unwrap();
        assert!(complex_close(&ratio, &c(1.0, -2.0), &tol()));
        let moved = inner_product(&m.act(Generator::Y), &w.act(Generator::Y), &tol()).unwrap();
        assert!(complex_close(&moved, &ratio, &tol()));
        let across = inner_product(&m, &w.act(Generator::B).act(Generator::X), &tol()).unwrap();
        assert!(complex_close(&across, &ratio, &tol()));
        let a = bp((0.0, 0.0), (0.0, 0.0), (2.0, 0.0));
        let b = bp((1.0 / 3.0, 0.0), (0.0, 0.0), (1.0, 0.0));
        assert_eq!(inner_product(&a, &b, &tol()), Err(Error::BaseMismatch));
    }

    #[test]
    fn exterior_lift_is_independent_of_epsilon() {
        for (p, q) in [(2, 3), (3, 4), (4, 7), (5, 6)] {
            let k = knot(p, q);
            for comp in enumerate_components(&k) {
                for g in [r(0, 1), r(1, 2), r(1, 7), r(-3, 5)] {
                    let plus = knot_exterior_lift_exact(&k, &comp, &g, 1);
                    let minus = knot_exterior_lift_exact(&k, &comp, &g, -1);
                    assert_eq!(plus, minus);
                }
                let g = c(0.13, 0.02);
                let plus = knot_exterior_lift(&k, &comp, &g, 1, PREC);
                let minus = knot_exterior_lift(&k, &comp, &g, -1, PREC);
                assert!(equivalent(&plus, &minus, &tol()));
            }
        }
    }

    #[test]
    fn exterior_lift_trefoil() {
        let k = knot(2, 3);
        let comp = &enumerate_components(&k)[0];
        let lift = knot_exterior_lift_exact(&k, comp, &Rational::new(), 1);
        assert_eq!(lift.gamma_lambda, r(1, 2));
    }

    #[test]
    fn exterior_lift_at_bifurcation() {
        for (p, q) in [(2, 5), (3, 4), (4, 7)] {
            let k = knot(p, q);
            let pq = k.pq() as i64;
            for comp in enumerate_components(&k) {
                for kk in comp.bifurcation_points() {
                    let g = r(kk as i64, 2 * pq);
                    let lift = knot_exterior_lift_exact(&k, &comp, &g, 1);
                    let base = RationalBundlePoint::new(g, Rational::new(), Rational::new());
                    assert!(lift.equivalent(&base), "{p},{q} k={kk}");
                }
            }
        }
    }

    #[test]
    fn orbifold_examples() {
        let a = orbifold_lift(1, &c(0.0, 0.0));
        assert!(complex_close(a.gamma_mu(), &c(0.5, 0.0), &tol()));
        assert!(complex_close(a.fiber(), &c(1.0, 0.0), &tol()));
        let b = orbifold_lift(0, &c(0.37, 0.2));
        assert!(complex_close(b.fiber(), &c(1.0, 0.0), &tol()));
        let d = orbifold_lift(2, &c(0.25, 0.0));
        assert!(complex_close(d.gamma_mu(), &c(1.0, 0.0), &tol()));
        assert!(complex_close(d.fiber(), &c(0.0, 1.0), &tol()));
        assert_eq!(orbifold_lift_exact(2, &r(1, 4)).phase, r(1, 4));
    }

    #[test]
    fn closed_form_examples() {
        let k = knot(2, 3);
        let comp = &enumerate_components(&k)[0];
        assert_eq!(cs_phase(&k, comp, Branch::Plus), r(1, 24));
        assert_eq!(cs_phase(&k, comp, Branch::Minus), r(23, 24));
        let v = cs_invariant(&k, comp, Branch::Plus, PREC);
        let pi = std::f64::consts::PI;
        assert!(complex_close(
            &v,
            &c((pi / 12.0).cos(), (pi / 12.0).sin()),
            &Float::with_val(64, 1e-15)
        ));
    }

    #[test]
    fn diamond_area_is_integral() {
        for (p, q) in [(3, 4), (4, 7), (5, 8)] {
            let k = knot(p, q);
            for comp in enumerate_components(&k) {
                let kp = Rational::from((comp.k_plus * comp.k_plus, 4 * k.pq()));
                let kp = rational_mod(&kp, &Integer::from(1));
                assert_eq!(cs_phase(&k, &comp, Branch::Plus), kp);
            }
        }
    }

    #[test]
    fn pairing_reproduces_plus_branch() {
        let k = knot(3, 4);
        for comp in enumerate_components(&k) {
            assert_eq!(
                cs_via_inner_product_exact(&k, &comp, Branch::Plus).unwrap(),
                cs_phase(&k, &comp, Branch::Plus)
            );
            let numeric = cs_via_inner_product(&k, &comp, Branch::Plus, PREC).unwrap();
            let closed = cs_invariant(&k, &comp, Branch::Plus, PREC);
            assert!(complex_close(&numeric, &closed, &PREC.tolerance(5)));
        }
    }

    #[test]
    fn pairing_on_minus_branch_is_triangle_area() {
        // the pairing yields e^{+2πi·A▷}
        let k = knot(4, 7);
        for comp in enumerate_components(&k) {
            let phase = cs_via_inner_product_exact(&k, &comp, Branch::Minus).unwrap();
            assert_eq!(phase, rational_mod(&comp.a_triangle, &Integer::from(1)));
        }
    }

    #[test]
    fn transport_examples() {
        let constant = [(r(1, 3), r(1, 5)), (r(1, 3), r(1, 5))];
        assert_eq!(kirk_klassen_transport_exact(&constant, &r(2, 7)), r(2, 7));

        let k = knot(3, 4);
        let pq = k.pq() as i64;
        let on_line = |g: Rational| {
            let lambda = r(1, 2) - Rational::from(&g * pq);
            (g, lambda)
        };
        let (start, end) = (r(1, 24), r(1, 3));
        let path = [on_line(end.clone()), on_line(start.clone())];
        // from g to k/2pq: g/2 − k/4pq with k = 1
        assert_eq!(kirk_klassen_phase(&path), Rational::from(&end / 2u32) - r(1, 48));

        let numeric = kirk_klassen_transport(
            &[(c(0.1, 0.0), c(0.0, 0.0)), (c(0.1, 0.0), c(0.5, 0.0))],
            &c(1.0, 0.0),
        );
        // phase 0.05 turns
        let expected = c(
            (0.1 * std::f64::consts::PI).cos(),
            (0.1 * std::f64::consts::PI).sin(),
        );
        assert!(complex_close(&numeric, &expected, &Float::with_val(64, 1e-15)));
    }

    #[test]
    fn transport_from_bifurcation_reproduces_lift() {
        let k = knot(4, 7);
        let pq = k.pq() as i64;
        for comp in enumerate_components(&k) {
            let alpha = i64::from(comp.alpha);
            for kk in comp.bifurcation_points() {
                let kk = kk as i64;
                let start = RationalBundlePoint::new(r(kk, 2 * pq), Rational::new(), Rational::new());
                // move onto the component's line by a y-translation
                let on_line = start.translate(0, (alpha - kk) / 2);
                for g in [r(0, 1), r(1, 2), r(2, 9)] {
                    let lambda = r(alpha, 2) - Rational::from(&g * pq);
                    let path = [
                        (on_line.gamma_mu.clone(), on_line.gamma_lambda.clone()),
                        (g.clone(), lambda.clone()),
                    ];
                    let phase = kirk_klassen_transport_exact(&path, &on_line.phase);
                    let transported = RationalBundlePoint::new(g.clone(), lambda, phase);
                    assert_eq!(transported, knot_exterior_lift_exact(&k, &comp, &g, 1));
                }
            }
        }
    }

    #[test]
    fn areas() {
        for (p, q) in [(2, 3), (3, 4), (4, 7)] {
            let k = knot(p, q);
            for comp in enumerate_components(&k) {
                assert_eq!(
                    signed_double_area(&trapezoid_vertices(&k, &comp)),
                    Rational::from(comp.a_diamond)
                );
                assert_eq!(
                    signed_double_area(&triangle_vertices(&k, &comp, Branch::Minus)),
                    comp.a_triangle
                );
                assert_eq!(
                    signed_double_area(&triangle_vertices(&k, &comp, Branch::Plus)),
                    Rational::from((comp.k_minus * comp.k_minus, 4 * k.pq()))
                );
                let mut loop_ = triangle_vertices(&k, &comp, Branch::Minus).to_vec();
                loop_.push(loop_[0].clone());
                assert_eq!(kirk_klassen_phase(&loop_), comp.a_triangle);
            }
        }
    }
}
