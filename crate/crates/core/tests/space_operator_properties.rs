mod common;

use common::*;
use dircyc::operators::{diagonal, embed_diagonal_sub, reflect, rotate, slice, SlicePoint};
use dircyc::spaces::{compare_norms, inner_product, norm_squared, norm_squared_uni, SpaceKind, SpaceSpec};
use dircyc::{Complex64, Poly2};
use proptest::prelude::*;

fn all_kinds(alpha: f64) -> [SpaceSpec; 2] {
    [SpaceSpec::iso(alpha), SpaceSpec::aniso(alpha)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn inclusion_orderings(f in poly2(10)) {
        for alpha in [0.5, 1.0, 2.0, -0.5, -1.0] {
            let t = compare_norms(&f, alpha).unwrap();
            prop_assert!(t.is_ordered(alpha, 1e-12), "alpha {} {:?}", alpha, t);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn diagonal_contracts(f in poly2(10)) {
        for alpha in [0.0, 1.0, 2.0, 3.0] {
            let lhs = norm_squared_uni(&diagonal(&f), alpha - 1.0);
            let rhs = norm_squared(&f, &SpaceSpec::iso(alpha)).unwrap();
            prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-12, "alpha {}: {} > {}", alpha, lhs, rhs);
        }
    }
}

proptest! {
    #[test]
    fn cauchy_schwarz(f in poly2(6), g in poly2(6), alpha in -2.0..3.0f64) {
        for s in all_kinds(alpha) {
            let ip = inner_product(&f, &g, &s).unwrap().norm_sqr();
            let bound = norm_squared(&f, &s).unwrap() * norm_squared(&g, &s).unwrap();
            prop_assert!(ip <= bound * (1.0 + 1e-10) + 1e-300);
        }
    }

    #[test]
    fn monomials_are_orthogonal(a in 0usize..6, b in 0usize..6, c in 0usize..6, d in 0usize..6, alpha in -3.0..3.0f64) {
        prop_assume!((a, b) != (c, d));
        let one = Complex64::new(1.0, 0.0);
        for s in all_kinds(alpha) {
            let ip = inner_product(&Poly2::monomial(a, b, one), &Poly2::monomial(c, d, one), &s).unwrap();
            prop_assert_eq!(ip, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn slice_bound(f in poly2(8), w in disk_point(0.9), alpha in 0.0..3.0f64) {
        let lhs = norm_squared_uni(&slice(&f, SlicePoint::fix_z1(w)), alpha);
        let rhs = norm_squared(&f, &SpaceSpec::iso(alpha)).unwrap() / (1.0 - w.norm_sqr());
        prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-12);
    }

    #[test]
    fn rotation_is_an_isometry(f in poly2(8), zeta in unimodular(), eta in unimodular(), alpha in -2.0..3.0f64) {
        let r = rotate(&f, zeta, eta).unwrap();
        for s in all_kinds(alpha) {
            let a = norm_squared(&f, &s).unwrap();
            let b = norm_squared(&r, &s).unwrap();
            prop_assert!((a - b).abs() <= 1e-13 * a.max(1e-300));
        }
        let u = f.restrict_to_z1();
        if let Some(u) = u {
            let ru = rotate(&u, zeta, eta).unwrap();
            let s = SpaceSpec::new(SpaceKind::Uni, alpha).unwrap();
            let a = norm_squared(&u, &s).unwrap();
            prop_assert!((a - norm_squared(&ru, &s).unwrap()).abs() <= 1e-13 * a.max(1e-300));
        }
    }

    #[test]
    fn reflection_preserves_modulus_on_the_torus(f in nonzero_poly2(6), z1 in unimodular(), z2 in unimodular()) {
        let ft = reflect(&f).unwrap();
        let a = f.evaluate(z1, z2).norm();
        let b = ft.evaluate(z1, z2).norm();
        prop_assert!((a - b).abs() <= 1e-10 * f.coeff_norm() * 7.0);
    }

    #[test]
    fn double_reflection(f in nonzero_poly2(6)) {
        let ft = reflect(&f).unwrap();
        prop_assume!(ft.bidegree() == f.bidegree());
        prop_assert_eq!(reflect(&ft).unwrap(), f);
    }

    #[test]
    fn diagonal_matches_pointwise(f in poly2(8), z in disk_point(1.0)) {
        let a = diagonal(&f).evaluate(z);
        let b = f.evaluate(z, z);
        prop_assert!((a - b).norm() <= 1e-12 * f.coeff_norm() * 81.0);
    }

    #[test]
    fn embedding_sandwich(f in poly1(12), alpha in 0.01..3.0f64) {
        let small = norm_squared_uni(&f, alpha);
        let big = norm_squared(&embed_diagonal_sub(&f), &SpaceSpec::iso(alpha)).unwrap();
        prop_assert!(small <= big * (1.0 + 1e-12));
        prop_assert!(big <= 2f64.powf(alpha) * small * (1.0 + 1e-12));
    }
}

trait RestrictZ1 {
    fn restrict_to_z1(&self) -> Option<Poly2>;
}

impl RestrictZ1 for Poly2 {
    /// The `z2`-free part, when nonzero, as a test input for the univariate space.
    fn restrict_to_z1(&self) -> Option<Poly2> {
        let p = Poly2::from_terms(self.terms().filter(|t| t.1 == 0)).unwrap();
        (!p.is_zero()).then_some(p)
    }
}
