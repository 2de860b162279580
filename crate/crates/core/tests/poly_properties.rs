mod common;

use common::*;
use dircyc::poly::{parse_expression, resultant_z2, ResultantStatus};
use dircyc::{Complex64, Poly2, Variable};
use proptest::prelude::*;

fn max_diff(a: &Poly2, b: &Poly2) -> f64 {
    (a - b).max_abs_coeff()
}

proptest! {
    #[test]
    fn multiplication_commutes(p in poly2(4), q in poly2(4)) {
        let pq = &p * &q;
        let qp = &q * &p;
        prop_assert!(max_diff(&pq, &qp) <= 1e-12 * pq.max_abs_coeff().max(1.0));
    }

    #[test]
    fn multiplication_associates(p in poly2(3), q in poly2(3), r in poly2(3)) {
        let a = &(&p * &q) * &r;
        let b = &p * &(&q * &r);
        prop_assert!(max_diff(&a, &b) <= 1e-12 * a.max_abs_coeff().max(1.0));
    }

    #[test]
    fn evaluation_is_multiplicative(p in poly2(4), q in poly2(4), z1 in disk_point(1.0), z2 in disk_point(1.0)) {
        let lhs = (&p * &q).evaluate(z1, z2);
        let rhs = p.evaluate(z1, z2) * q.evaluate(z1, z2);
        let scale = p.coeff_norm() * q.coeff_norm() * 25.0;
        prop_assert!((lhs - rhs).norm() <= 1e-10 * scale.max(1e-300));
    }

    #[test]
    fn proportional_pairs_have_vanishing_resultant(p in nonzero_poly2(3), lambda in coeff()) {
        prop_assume!(p.depends_on(Variable::Z2) && lambda.norm() > 0.1);
        let q = p.scale(lambda);
        prop_assert!(p.proportional(&q, 1e-12).is_some());
        let r = resultant_z2(&p, &q).unwrap();
        prop_assert_eq!(r.status(1e-8), ResultantStatus::Zero);
    }

    #[test]
    fn expression_round_trip_is_exact(p in poly2(5)) {
        let back = parse_expression(&p.to_expression()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn json_round_trip_is_exact(p in poly2(5)) {
        let s = serde_json::to_string(&p).unwrap();
        let back: Poly2 = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn resultant_vanishes_at_common_roots(a in coeff(), b in coeff(), c in coeff(), x in disk_point(1.0)) {
        // p = z2 - a z1 - b and q = z2^2 - c: Res(x) = 0 exactly when p(x, .) and q(x, .) share a root.
        let p = Poly2::from_terms([(0, 1, Complex64::new(1.0, 0.0)), (1, 0, -a), (0, 0, -b)]).unwrap();
        let q = Poly2::from_terms([(0, 2, Complex64::new(1.0, 0.0)), (0, 0, -c)]).unwrap();
        let r = resultant_z2(&p, &q).unwrap();
        let y = a * x + b;
        let direct = y * y - c;
        let value = r.poly.evaluate(x);
        prop_assert!((value.norm() - direct.norm()).abs() <= 1e-10 * (1.0 + direct.norm()));
    }
}

#[test]
fn model_resultant_has_a_double_root_at_one() {
    let p = parse_expression("2 - z1 - z2").unwrap();
    let pt = dircyc::operators::reflect(&p).unwrap();
    let r = resultant_z2(&p, &pt).unwrap().trimmed();
    let expected = [2.0, -4.0, 2.0];
    assert_eq!(r.degree(), 2);
    for (k, e) in expected.iter().enumerate() {
        assert!((r.coeff(k) - Complex64::new(*e, 0.0)).norm() < 1e-8);
    }
}
