//! Working precision and exact-angle helpers on top of MPFR/MPC.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

const LOG2_10: f64 = std::f64::consts::LOG2_10;
const GUARD_BITS: u32 = 16;

/// Working precision in significant decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub const fn digits(digits: u32) -> Self {
        Precision {
            digits: if digits == 0 { 1 } else { digits },
        }
    }

    pub fn decimal_digits(&self) -> u32 {
        self.digits
    }

    /// Mantissa bits, including a few guard bits.
    pub fn bits(&self) -> u32 {
        (f64::from(self.digits) * LOG2_10).ceil() as u32 + GUARD_BITS
    }

    pub fn with_extra_digits(&self, extra: u32) -> Self {
        Precision::digits(self.digits + extra)
    }

    /// `10^(loss − digits)`: a relative tolerance allowing `loss` digits of cancellation.
    pub fn tolerance(&self, loss: u32) -> Float {
        let exponent = i32::try_from(self.digits.saturating_sub(loss)).unwrap_or(i32::MAX);
        Float::with_val(self.bits(), 10u32).pow(-exponent)
    }

    pub fn float<T>(&self, value: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits(), value)
    }

    pub fn zero(&self) -> Complex {
        Complex::new(self.bits())
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.bits(), Constant::Pi)
    }
}

pub fn rational_to_float(r: &Rational, prec: Precision) -> Float {
    Float::with_val(prec.bits(), r)
}

/// Reduces `r` into `[0, m)` exactly.
pub fn rational_mod(r: &Rational, m: &Integer) -> Rational {
    let scaled = Rational::from(r / m);
    let floor = scaled.floor();
    r - (floor * m)
}

/// `e^{iπr}` with the angle reduced exactly modulo 2 before rounding.
pub fn exp_i_pi(r: &Rational, prec: Precision) -> Complex {
    let reduced = rational_mod(r, &Integer::from(2));
    let angle = prec.pi() * rational_to_float(&reduced, prec);
    let (sin, cos) = angle.sin_cos(Float::new(prec.bits()));
    Complex::with_val(prec.bits(), (cos, sin))
}

/// `e^{2πir}` with the angle reduced exactly modulo 1 before rounding.
pub fn exp_2pi_i(r: &Rational, prec: Precision) -> Complex {
    exp_i_pi(&Rational::from(r * 2u32), prec)
}

/// `sin(πr)` with the angle reduced exactly modulo 2 before rounding.
pub fn sin_pi(r: &Rational, prec: Precision) -> Float {
    let reduced = rational_mod(r, &Integer::from(2));
    (prec.pi() * rational_to_float(&reduced, prec)).sin()
}

/// Absolute value of a complex number as a real float.
pub fn abs(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

/// Decimal rendering with `digits` significant digits.
pub fn format_float(x: &Float, digits: u32) -> String {
    x.to_string_radix(10, Some(digits.max(1) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_cover_digits() {
        let p = Precision::digits(50);
        assert!(f64::from(p.bits()) >= 50.0 * LOG2_10);
    }

    #[test]
    fn tolerance_scales() {
        let p = Precision::digits(30);
        let t = p.tolerance(5);
        let expected = Float::with_val(p.bits(), 1e-25);
        assert!((t / expected - 1u32).abs() < 1e-10);
    }

    #[test]
    fn exact_angle_reduction() {
        let p = Precision::digits(40);
        let huge = Rational::from((Integer::from(10).pow(30) * 2 + 1, 2));
        let z = exp_i_pi(&huge, p);
        // e^{iπ/2} = i
        assert!(z.real().clone().abs() < 1e-38);
        assert!((z.imag().clone() - 1u32).abs() < 1e-38);
        let s = sin_pi(&Rational::from((-1, 6)), p);
        assert!((s + 0.5f64).abs() < 1e-38);
    }

    #[test]
    fn rational_mod_is_nonnegative() {
        let r = rational_mod(&Rational::from((-7, 3)), &Integer::from(1));
        assert_eq!(r, Rational::from((2, 3)));
    }
}
