//! Non-abelian components of the `SL2(C)` character variety of a torus knot
//! group and their per-component invariants.
//!
//! Each component is indexed by `(α, β)` with `1 ≤ α < p`, `1 ≤ β < q` and
//! `α ≡ β (mod 2)`. Its closure meets the abelian curve at two bifurcation
//! points `iπk/pq`, where `k` runs over the two integers in `(0, pq)` that
//! satisfy `k ≡ ±α (mod 2p)` and `k ≡ ±β (mod 2q)`.

use std::collections::BTreeSet;

use rug::Rational;

use crate::error::{Error, Result};
use crate::exact::knot::extended_gcd;
use crate::exact::TorusKnot;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVarComponent {
    /// 1-based position in the `(k⁻, k⁺)` ordering.
    pub index: usize,
    pub alpha: u32,
    pub beta: u32,
    pub k_minus: u64,
    pub k_plus: u64,
    /// `(k⁺ − k⁻)/2`
    pub m: u64,
    /// `((k⁺)² − (k⁻)²)/4pq`
    pub l: u64,
    /// Double area of the trapezoid; always equal to `l`.
    pub a_diamond: u64,
    /// Double area of the triangle, `(pq − k⁺)²/4pq`.
    pub a_triangle: Rational,
    pub epsilon: i32,
}

impl CharVarComponent {
    /// Both bifurcation parameters, `[k⁻, k⁺]`.
    pub fn bifurcation_points(&self) -> [u64; 2] {
        [self.k_minus, self.k_plus]
    }

    /// Lists every violated structural invariant. Empty means the component is consistent.
    pub fn invariant_violations(&self, knot: &TorusKnot) -> Vec<String> {
        let (p, q, pq) = (u64::from(knot.p()), u64::from(knot.q()), knot.pq());
        let (km, kp) = (self.k_minus, self.k_plus);
        let mut bad = Vec::new();
        require(
            &mut bad,
            (1..u64::from(knot.p())).contains(&u64::from(self.alpha))
                && (1..q).contains(&u64::from(self.beta))
                && (self.alpha + self.beta).is_multiple_of(2),
            "(α, β) out of range or of different parity",
        );
        require(&mut bad, 0 < km && km < kp && kp < pq, "0 < k⁻ < k⁺ < pq");
        require(
            &mut bad,
            km % p != 0 && km % q != 0 && kp % p != 0 && kp % q != 0,
            "k± divisible by neither p nor q",
        );
        require(&mut bad, (kp + km) % 2 == 0, "k⁺ ± k⁻ even");
        require(
            &mut bad,
            ((kp + km) % p == 0 && (kp - km) % q == 0) || ((kp + km) % q == 0 && (kp - km) % p == 0),
            "p, q divide k⁺ ± k⁻ crosswise",
        );
        if bad.is_empty() {
            let m = (kp - km) / 2;
            let num = kp * kp - km * km;
            require(&mut bad, self.m == m, "m = (k⁺ − k⁻)/2");
            require(&mut bad, num % (4 * pq) == 0, "((k⁺)² − (k⁻)²)/4pq is an integer");
            let l = num / (4 * pq);
            require(&mut bad, self.l == l && self.a_diamond == l, "A⋄ = l");
            require(&mut bad, m > 0 && l > 0, "m, l positive");
            require(&mut bad, 2 * m < pq, "m < pq/2");
            require(&mut bad, m % p == 0 || m % q == 0, "p | m or q | m");
            require(&mut bad, (pq * l) % m == 0, "m | pq·l");
            // m²/pq < l < m − m²/pq, cleared of denominators
            require(
                &mut bad,
                m * m < pq * l && pq * l < pq * m - m * m,
                "m²/pq < l < m − m²/pq",
            );
            require(
                &mut bad,
                self.a_triangle == Rational::from(((pq - kp) * (pq - kp), 4 * pq)),
                "A▷ = (pq − k⁺)²/4pq",
            );
            require(&mut bad, self.epsilon == epsilon(knot, kp), "ε from k⁺");
        }
        bad
    }
}

fn require(bad: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        bad.push(what.to_string());
    }
}

/// `(−1)^{⌊k/p⌋ + ⌊k/q⌋}`, which is also the sign of `sin(πk/p)·sin(πk/q)`.
pub fn epsilon(knot: &TorusKnot, k: u64) -> i32 {
    if (k / u64::from(knot.p()) + k / u64::from(knot.q())).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All `(p−1)(q−1)/2` components, sorted by `(k⁻, k⁺)`.
pub fn enumerate_components(knot: &TorusKnot) -> Vec<CharVarComponent> {
    let mut out = Vec::with_capacity(knot.component_count());
    for alpha in 1..knot.p() {
        for beta in (1..knot.q()).filter(|b| (alpha + b) % 2 == 0) {
            let (km, kp) = attach_points(knot, alpha, beta).expect("indices satisfy the conditions");
            out.push(build(knot, alpha, beta, km, kp));
        }
    }
    out.sort_by_key(|c| (c.k_minus, c.k_plus));
    for (i, c) in out.iter_mut().enumerate() {
        c.index = i + 1;
    }
    out
}

/// The component with the given `(α, β)` (with its index in the sorted list).
pub fn component(knot: &TorusKnot, alpha: u32, beta: u32) -> Result<CharVarComponent> {
    validate_indices(knot, alpha, beta)?;
    enumerate_components(knot)
        .into_iter()
        .find(|c| c.alpha == alpha && c.beta == beta)
        .ok_or(Error::InvalidComponent {
            p: knot.p(),
            q: knot.q(),
            alpha,
            beta,
        })
}

/// The bifurcation pair `(k⁻, k⁺)` of the component `(α, β)`, solved by CRT
/// from `k ≡ ±α (mod 2p)`, `k ≡ ±β (mod 2q)`.
pub fn attach_points(knot: &TorusKnot, alpha: u32, beta: u32) -> Result<(u64, u64)> {
    validate_indices(knot, alpha, beta)?;
    let (p, q) = (i64::from(knot.p()), i64::from(knot.q()));
    let pq = p * q;
    let (a, b) = (i64::from(alpha), i64::from(beta));
    let mut found = BTreeSet::new();
    for sa in [a, -a] {
        for sb in [b, -b] {
            if let Some((k, _)) = crt(sa, 2 * p, sb, 2 * q) {
                if 0 < k && k < pq {
                    found.insert(k as u64);
                }
            }
        }
    }
    let ks: Vec<u64> = found.into_iter().collect();
    match ks.as_slice() {
        [km, kp] => Ok((*km, *kp)),
        _ => Err(Error::Pairing(format!(
            "({alpha}, {beta}) produced {} attaching points",
            ks.len()
        ))),
    }
}

/// Pairs obtained by scanning every admissible `k` and matching it with the
/// unique `k' ≠ k` sharing both traces.
pub fn bifurcation_pairs_bruteforce(knot: &TorusKnot) -> Result<Vec<(u64, u64)>> {
    let (p, q, pq) = (u64::from(knot.p()), u64::from(knot.q()), knot.pq());
    let same = |x: u64, y: u64, m: u64| (x + y).is_multiple_of(m) || x.abs_diff(y).is_multiple_of(m);
    let admissible: Vec<u64> = (1..pq).filter(|k| k % p != 0 && k % q != 0).collect();
    let mut pairs = BTreeSet::new();
    for &k in &admissible {
        let partners: Vec<u64> = admissible
            .iter()
            .copied()
            .filter(|&j| j != k && same(j, k, 2 * p) && same(j, k, 2 * q))
            .collect();
        match partners.as_slice() {
            [j] => {
                pairs.insert((k.min(*j), k.max(*j)));
            }
            _ => return Err(Error::Pairing(format!("k = {k} has {} partners", partners.len()))),
        }
    }
    Ok(pairs.into_iter().collect())
}

/// Recovers `(α, β)` from a bifurcation parameter by inverting the congruences.
pub fn indices_from_k(knot: &TorusKnot, k: u64) -> (u32, u32) {
    let fold = |k: u64, n: u64| {
        let r = k % (2 * n);
        r.min(2 * n - r) as u32
    };
    (fold(k, u64::from(knot.p())), fold(k, u64::from(knot.q())))
}

/// Closed-form component `ℓ` of `T(2, q)`.
pub fn two_bridge_closed_form(q: u32, ell: u32) -> Result<CharVarComponent> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "q = {q} must be odd and at least 3"
        )));
    }
    if ell == 0 || ell > (q - 1) / 2 {
        return Err(Error::InvalidArgument(format!(
            "ℓ = {ell} outside 1..={}",
            (q - 1) / 2
        )));
    }
    let (q64, l64) = (u64::from(q), u64::from(ell));
    let k_minus = 2 * l64 - 1;
    let k_plus = 2 * q64 - 2 * l64 + 1;
    let m = q64 - 2 * l64 + 1;
    let area = m / 2;
    Ok(CharVarComponent {
        index: ell as usize,
        alpha: 1,
        beta: 2 * ell - 1,
        k_minus,
        k_plus,
        m,
        l: area,
        a_diamond: area,
        a_triangle: Rational::from((k_minus * k_minus, 8 * q64)),
        epsilon: if ell.is_multiple_of(2) { 1 } else { -1 },
    })
}

fn validate_indices(knot: &TorusKnot, alpha: u32, beta: u32) -> Result<()> {
    let ok =
        (1..knot.p()).contains(&alpha) && (1..knot.q()).contains(&beta) && (alpha + beta).is_multiple_of(2);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidComponent {
            p: knot.p(),
            q: knot.q(),
            alpha,
            beta,
        })
    }
}

fn build(knot: &TorusKnot, alpha: u32, beta: u32, km: u64, kp: u64) -> CharVarComponent {
    let pq = knot.pq();
    let l = (kp * kp - km * km) / (4 * pq);
    CharVarComponent {
        index: 0,
        alpha,
        beta,
        k_minus: km,
        k_plus: kp,
        m: (kp - km) / 2,
        l,
        a_diamond: l,
        a_triangle: Rational::from(((pq - kp) * (pq - kp), 4 * pq)),
        epsilon: epsilon(knot, kp),
    }
}

/// Solves `x ≡ a1 (mod m1)`, `x ≡ a2 (mod m2)`; returns `(x mod lcm, lcm)`.
fn crt(a1: i64, m1: i64, a2: i64, m2: i64) -> Option<(i64, i64)> {
    let (g, u, _) = extended_gcd(m1, m2);
    if (a2 - a1) % g != 0 {
        return None;
    }
    let lcm = m1 / g * m2;
    let t = ((a2 - a1) / g * u).rem_euclid(m2 / g);
    Some(((a1 + m1 * t).rem_euclid(lcm), lcm))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    #[test]
    fn crt_basic() {
        assert_eq!(crt(1, 6, 1, 8), Some((1, 24)));
        assert_eq!(crt(1, 6, 2, 8), None);
        let (x, _) = crt(-1, 6, 3, 8).unwrap();
        assert_eq!(x.rem_euclid(6), 5);
        assert_eq!(x.rem_euclid(8), 3);
    }

    #[test]
    fn trefoil_single_component() {
        let cs = enumerate_components(&knot(2, 3));
        assert_eq!(cs.len(), 1);
        let c = &cs[0];
        assert_eq!((c.alpha, c.beta, c.k_minus, c.k_plus), (1, 1, 1, 5));
        assert_eq!((c.m, c.a_diamond), (2, 1));
        assert_eq!(c.a_triangle, Rational::from((1, 24)));
        assert_eq!(c.epsilon, -1);
    }

    #[test]
    fn attach_points_examples() {
        let k = knot(3, 4);
        assert_eq!(attach_points(&k, 1, 1).unwrap(), (1, 7));
        assert_eq!(attach_points(&k, 1, 3).unwrap(), (5, 11));
        assert_eq!(attach_points(&k, 2, 2).unwrap(), (2, 10));
        assert!(matches!(
            attach_points(&k, 1, 2),
            Err(Error::InvalidComponent { .. })
        ));
        assert!(attach_points(&k, 3, 1).is_err());
    }

    #[test]
    fn t47_entry() {
        let cs = enumerate_components(&knot(4, 7));
        assert_eq!(cs.len(), 9);
        let c = cs.iter().find(|c| c.k_minus == 3).unwrap();
        assert_eq!((c.k_plus, c.m, c.a_diamond), (11, 4, 1));
        assert_eq!(c.a_triangle, Rational::from((289, 112)));
    }

    #[test]
    fn two_bridge_examples() {
        let c = two_bridge_closed_form(5, 2).unwrap();
        assert_eq!((c.k_minus, c.k_plus, c.a_diamond), (3, 7, 1));
        assert_eq!(c.a_triangle, Rational::from((9, 40)));
        assert!(two_bridge_closed_form(4, 1).is_err());
        assert!(two_bridge_closed_form(5, 3).is_err());
    }

    #[test]
    fn indices_round_trip() {
        let k = knot(4, 7);
        for c in enumerate_components(&k) {
            assert_eq!(indices_from_k(&k, c.k_minus), (c.alpha, c.beta));
            assert_eq!(indices_from_k(&k, c.k_plus), (c.alpha, c.beta));
        }
    }

    #[test]
    fn invariants_hold_and_detect_tampering() {
        let k = knot(3, 5);
        for c in enumerate_components(&k) {
            assert!(c.invariant_violations(&k).is_empty(), "{c:?}");
        }
        let mut c = enumerate_components(&k).remove(0);
        c.epsilon = -c.epsilon;
        assert_eq!(c.invariant_violations(&k), vec!["ε from k⁺".to_string()]);
    }
}
