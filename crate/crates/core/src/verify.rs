//! Named verification suites. Each returns a list of [`Check`]s that the CLI
//! and the acceptance tests render as pass/fail lines.

use rug::{Complex, Float, Integer, Rational};

use crate::asymptotics::main_theorem_check;
use crate::charvar::enumerate_components;
use crate::chern_simons::{
    cs_invariant, cs_via_inner_product, kirk_klassen_transport_exact, knot_exterior_lift_exact, Branch,
    RationalBundlePoint,
};
use crate::error::Result;
use crate::exact::precision::{abs, format_float, rational_mod};
use crate::exact::{Precision, TorusKnot};
use crate::torsion::{
    contour_parameters, residue_by_contour, tau_residue, torsion_at_bifurcation_via_derivative,
    verify_residue_theorem,
};

/// One pass/fail line of a verification suite.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// Passes when `residual ≤ threshold`.
    pub fn bound(name: impl Into<String>, residual: &Float, threshold: &Float) -> Self {
        let passed = residual <= threshold;
        let detail = format!(
            "residual {} {} {}",
            format_float(residual, 6),
            if passed { "<=" } else { ">" },
            format_float(threshold, 3)
        );
        Check::new(name, passed, detail)
    }
}

/// A named group of checks.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `(k⁻, k⁺, m, A⋄, A▷)` with `A▷` as `"num/den"`.
pub type GoldenRow = (u64, u64, u64, u64, &'static str);

/// Reference rows for four torus knots.
pub const TABLE1: &[((u32, u32), &[GoldenRow])] = &[
    (
        (3, 4),
        &[
            (1, 7, 3, 1, "25/48"),
            (2, 10, 4, 2, "1/12"),
            (5, 11, 3, 2, "1/48"),
        ],
    ),
    (
        (3, 5),
        &[
            (1, 11, 5, 2, "4/15"),
            (2, 8, 3, 1, "49/60"),
            (4, 14, 5, 3, "1/60"),
            (7, 13, 3, 2, "1/15"),
        ],
    ),
    (
        (4, 5),
        &[
            (1, 9, 4, 1, "121/80"),
            (2, 18, 8, 4, "1/20"),
            (3, 13, 5, 2, "49/80"),
            (6, 14, 4, 2, "9/20"),
            (7, 17, 5, 3, "9/80"),
            (11, 19, 4, 3, "1/80"),
        ],
    ),
    (
        (4, 7),
        &[
            (1, 15, 7, 2, "169/112"),
            (2, 26, 12, 6, "1/28"),
            (3, 11, 4, 1, "289/112"),
            (5, 19, 7, 3, "81/112"),
            (6, 22, 8, 4, "9/28"),
            (9, 23, 7, 4, "25/112"),
            (10, 18, 4, 2, "25/28"),
            (13, 27, 7, 5, "1/112"),
            (17, 25, 4, 3, "9/112"),
        ],
    ),
];

/// Exact comparison of the enumerated components with [`TABLE1`].
pub fn table1_suite() -> SuiteReport {
    let mut checks = Vec::new();
    for ((p, q), rows) in TABLE1 {
        let knot = TorusKnot::new(i64::from(*p), i64::from(*q)).expect("reference knots are valid");
        let computed = enumerate_components(&knot);
        let name = format!("({p},{q}) components");
        if computed.len() != rows.len() {
            checks.push(Check::new(
                name,
                false,
                format!("{} components, expected {}", computed.len(), rows.len()),
            ));
            continue;
        }
        let mut mismatches = Vec::new();
        for (c, (km, kp, m, diamond, triangle)) in computed.iter().zip(rows.iter()) {
            let triangle: Rational = triangle.parse().expect("reference rationals parse");
            let got = (c.k_minus, c.k_plus, c.m, c.a_diamond);
            if got != (*km, *kp, *m, *diamond) || c.a_triangle != triangle {
                mismatches.push(format!(
                    "row {}: got ({},{}) m={} A⋄={} A▷={}",
                    c.index, c.k_minus, c.k_plus, c.m, c.a_diamond, c.a_triangle
                ));
            }
        }
        let detail = if mismatches.is_empty() {
            format!("{} rows match exactly", rows.len())
        } else {
            mismatches.join("; ")
        };
        checks.push(Check::new(name, mismatches.is_empty(), detail));
    }
    SuiteReport {
        suite: "table1".into(),
        checks,
    }
}

/// Residue-sum identities at one `N`, optionally against an independent `⟨K⟩_N`.
pub fn main_theorem_suite(
    knot: &TorusKnot,
    n: u64,
    prec: Precision,
    kashaev: Option<&Complex>,
) -> Result<SuiteReport> {
    let report = main_theorem_check(knot, n, prec, kashaev)?;
    Ok(SuiteReport {
        suite: "main-theorem".into(),
        checks: report
            .checks
            .into_iter()
            .map(|c| Check::new(format!("{knot} N={n}: {}", c.name), c.passed, c.detail))
            .collect(),
    })
}

/// Residue formula, residue theorem and the derivative formula for every component.
pub fn residue_theorem_suite(knot: &TorusKnot, prec: Precision) -> Result<SuiteReport> {
    let bits = prec.bits();
    let tolerance = prec.tolerance(10);
    let (radius, nodes) = contour_parameters(knot, prec);
    let mut checks = Vec::new();
    for comp in enumerate_components(knot) {
        let label = format!("{knot} (α,β)=({},{})", comp.alpha, comp.beta);
        let report = verify_residue_theorem(knot, &comp, prec)?;
        for rc in &report.checks {
            let sign = if rc.sign == 1 { "+" } else { "-" };
            let rel = Float::with_val(bits, &rc.relative_residual);
            let mut check = Check::bound(format!("{label} k={}: (2 Res)^2 = T", rc.k), &rel, &tolerance);
            check.passed &= rc.passed;
            check.detail = format!("{}, sign {sign}", check.detail);
            checks.push(check);
        }
        for k in comp.bifurcation_points() {
            let meta = torsion_at_bifurcation_via_derivative(knot, k as i64, prec)?;
            let residual = Float::with_val(bits, abs(&meta) - &report.torsion).abs();
            checks.push(Check::bound(
                format!("{label} k={k}: |(t-1)(1/t-1)/(D'(t)D'(1/t))| = T"),
                &residual,
                &tolerance,
            ));
            let contour = residue_by_contour(knot, k as i64, &radius, nodes, prec)?;
            let exact = tau_residue(knot, k as i64, prec)?;
            checks.push(Check::bound(
                format!("{label} k={k}: contour residue = closed form"),
                &abs(&Complex::with_val(bits, &contour - &exact)),
                &tolerance,
            ));
        }
    }
    Ok(SuiteReport {
        suite: "residue-theorem".into(),
        checks,
    })
}

/// Closed-form Chern–Simons values against the bundle pairing, and transport
/// against the exterior lift, for every component.
pub fn chern_simons_suite(knot: &TorusKnot, prec: Precision) -> Result<SuiteReport> {
    let bits = prec.bits();
    let tolerance = prec.tolerance(10);
    let pq = knot.pq() as i64;
    let mut checks = Vec::new();
    for comp in enumerate_components(knot) {
        let label = format!("{knot} (α,β)=({},{})", comp.alpha, comp.beta);
        for branch in [Branch::Plus, Branch::Minus] {
            let sign = if branch == Branch::Plus { "+" } else { "-" };
            let closed = cs_invariant(knot, &comp, branch, prec);
            let paired = cs_via_inner_product(knot, &comp, branch, prec)?;
            checks.push(Check::bound(
                format!("{label}: CS(chi{sign}) closed form = pairing"),
                &abs(&Complex::with_val(bits, &closed - &paired)),
                &tolerance,
            ));
            if branch == Branch::Minus {
                let conjugate = Complex::with_val(bits, closed.conj_ref());
                checks.push(Check::bound(
                    format!("{label}: CS(chi-) pairing = conjugate of closed form"),
                    &abs(&Complex::with_val(bits, &conjugate - &paired)),
                    &tolerance,
                ));
            }
        }

        let mut transport_ok = true;
        let alpha = i64::from(comp.alpha);
        for k in comp.bifurcation_points() {
            let k = k as i64;
            let start =
                RationalBundlePoint::new(Rational::from((k, 2 * pq)), Rational::new(), Rational::new())
                    .translate(0, (alpha - k) / 2);
            for g in [Rational::new(), Rational::from((1, 2))] {
                let lambda = Rational::from((alpha, 2)) - Rational::from(&g * pq);
                let path = [
                    (start.gamma_mu.clone(), start.gamma_lambda.clone()),
                    (g.clone(), lambda.clone()),
                ];
                let phase = kirk_klassen_transport_exact(&path, &start.phase);
                let transported = RationalBundlePoint::new(g.clone(), lambda, phase);
                transport_ok &= transported == knot_exterior_lift_exact(knot, &comp, &g, 1);
            }
        }
        checks.push(Check::new(
            format!("{label}: transport from both bifurcation points = exterior lift"),
            transport_ok,
            "exact rational phases",
        ));

        let independent = [Rational::new(), Rational::from((1, 2)), Rational::from((1, 3))]
            .iter()
            .all(|g| {
                knot_exterior_lift_exact(knot, &comp, g, 1) == knot_exterior_lift_exact(knot, &comp, g, -1)
            });
        checks.push(Check::new(
            format!("{label}: exterior lift independent of epsilon"),
            independent,
            "exact rational phases",
        ));

        let square = |k: u64| rational_mod(&Rational::from((k * k, 4 * knot.pq())), &Integer::from(1));
        checks.push(Check::new(
            format!("{label}: e^(i pi k+^2/2pq) = e^(i pi k-^2/2pq)"),
            square(comp.k_plus) == square(comp.k_minus),
            format!("A⋄ = {}", comp.a_diamond),
        ));
    }
    Ok(SuiteReport {
        suite: "chern-simons".into(),
        checks,
    })
}
