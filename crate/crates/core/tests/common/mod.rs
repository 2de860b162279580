#![allow(dead_code)]

use std::f64::consts::PI;

use dircyc::{Complex64, Poly1, Poly2};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn coeff() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b)| Complex64::new(a, b))
}

/// Dense random polynomial with bidegree at most `(max_deg, max_deg)`.
pub fn poly2(max_deg: usize) -> impl Strategy<Value = Poly2> {
    (0..=max_deg, 0..=max_deg).prop_flat_map(|(m, n)| {
        vec(coeff(), (m + 1) * (n + 1)).prop_map(move |c| Poly2::from_grid(m + 1, n + 1, c).unwrap())
    })
}

pub fn nonzero_poly2(max_deg: usize) -> impl Strategy<Value = Poly2> {
    poly2(max_deg).prop_filter("nonzero", |p| p.max_abs_coeff() > 1e-3)
}

pub fn poly1(max_deg: usize) -> impl Strategy<Value = Poly1> {
    (0..=max_deg).prop_flat_map(|m| vec(coeff(), m + 1).prop_map(|c| Poly1::new(c).unwrap()))
}

pub fn unimodular() -> impl Strategy<Value = Complex64> {
    (0.0..2.0 * PI).prop_map(|t| Complex64::from_polar(1.0, t))
}

/// Point of the closed disk of the given radius.
pub fn disk_point(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..=radius, 0.0..2.0 * PI).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
}
