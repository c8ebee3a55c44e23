use std::fmt;

use crate::error::{Error, Result};

/// A torus knot `T(p,q)` with `1 < p < q` and `gcd(p,q) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnot {
    p: u32,
    q: u32,
}

impl TorusKnot {
    /// Validates the pair and orders it so that `p < q`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p <= 1 || q <= 1 {
            return Err(Error::ParameterTooSmall { p, q });
        }
        if p == q {
            return Err(Error::EqualParameters(p));
        }
        let g = gcd(p, q);
        if g != 1 {
            return Err(Error::NotCoprime { p, q, gcd: g });
        }
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        let to_u32 =
            |v: i64| u32::try_from(v).map_err(|_| Error::InvalidArgument(format!("{v} is too large")));
        Ok(TorusKnot {
            p: to_u32(p)?,
            q: to_u32(q)?,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn pq(&self) -> u64 {
        u64::from(self.p) * u64::from(self.q)
    }

    /// Number of non-abelian character-variety components, `(p-1)(q-1)/2`.
    pub fn component_count(&self) -> usize {
        ((self.p - 1) as usize * (self.q - 1) as usize) / 2
    }

    /// Integers `(r, s)` with `p·s − q·r = 1` and `0 ≤ s < q`.
    pub fn bezout(&self) -> (i64, i64) {
        let (p, q) = (i64::from(self.p), i64::from(self.q));
        let (_, x, _) = extended_gcd(p, q);
        // p·x ≡ 1 (mod q)
        let s = x.rem_euclid(q);
        let r = (p * s - 1) / q;
        debug_assert_eq!(p * s - q * r, 1);
        (r, s)
    }

    /// True when `p` or `q` divides `k`, i.e. `iπk/pq` is not a pole of τ.
    pub fn is_removable(&self, k: i64) -> bool {
        k % i64::from(self.p) == 0 || k % i64::from(self.q) == 0
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b)`.
pub(crate) fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let quotient = old_r / r;
        (old_r, r) = (r, old_r - quotient * r);
        (old_s, s) = (s, old_s - quotient * s);
        (old_t, t) = (t, old_t - quotient * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}
