use rug::{Complex, Float};
use torusasym::asymptotics::{kashaev_expansion, TailOrder};
use torusasym::exact::precision::abs;
use torusasym::quadrature::{kashaev_integral, QuadratureConfig};
use torusasym::{Precision, TorusKnot};

fn trefoil() -> TorusKnot {
    TorusKnot::new(2, 3).unwrap()
}

fn relative(a: &Complex, b: &Complex) -> Float {
    abs(&Complex::with_val(a.prec().0, a - b)) / abs(b)
}

#[test]
fn path_angle_independence() {
    let steep = QuadratureConfig {
        phi: std::f64::consts::PI / 5.0,
        ..QuadratureConfig::default()
    };
    for n in [3, 5, 8] {
        let a = kashaev_integral(&trefoil(), n, 25, &QuadratureConfig::default()).unwrap();
        let b = kashaev_integral(&trefoil(), n, 25, &steep).unwrap();
        assert!(a.converged && b.converged);
        assert!(relative(&a.value, &b.value) < 1e-25, "N={n}");
    }
}

#[test]
fn summation_order_does_not_matter() {
    let reverse = QuadratureConfig {
        reverse: true,
        ..QuadratureConfig::default()
    };
    let knot = TorusKnot::new(2, 5).unwrap();
    let a = kashaev_integral(&knot, 7, 20, &QuadratureConfig::default()).unwrap();
    let b = kashaev_integral(&knot, 7, 20, &reverse).unwrap();
    assert_eq!(a.nodes_used, b.nodes_used);
    // both sums are exact to far beyond the target; only rounding differs
    assert!(relative(&a.value, &b.value) < 1e-30);
}

#[test]
fn agrees_with_expansion() {
    for n in [2, 15] {
        let q = kashaev_integral(&trefoil(), n, 20, &QuadratureConfig::default()).unwrap();
        assert!(
            q.error_estimate
                <= Float::with_val(64, abs(&q.value) * 1e-20f64).max(&Float::with_val(64, 1e-20))
        );
        let e = kashaev_expansion(&trefoil(), n, Precision::digits(40), TailOrder::Auto).unwrap();
        let gap = abs(&Complex::with_val(
            q.value.prec().0,
            &q.value - &e.assembled_value,
        ));
        assert!(gap <= Float::with_val(64, &e.tail.error_estimate * 2u32), "N={n}");
    }
}

#[test]
fn reports_parameters() {
    let r = kashaev_integral(&trefoil(), 4, 15, &QuadratureConfig::default()).unwrap();
    assert_eq!(r.path_angle, std::f64::consts::FRAC_PI_4);
    assert!(r.truncation_radius > r.parameters.radius_negative);
    assert!(r.nodes_used > r.parameters.node_budget);
    assert!(r.working_precision >= 15);
    assert_eq!(
        r.error_estimate,
        Float::with_val(r.error_estimate.prec(), &r.truncation_bound + &r.refinement_delta)
    );
}
