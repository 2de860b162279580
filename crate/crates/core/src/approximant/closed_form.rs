//! Closed-form distances for the two model families whose optimal
//! approximants reduce to one-variable problems.
//!
//! For `f = 1 - z1` only pure `z1` multiples can reach `1`; for
//! `f = 1 - z1 z2` only diagonal multiples can. Orthogonality of the residual
//! `r` to every multiple forces `r_j * w_j` to be constant along the chain of
//! exponents, and `r` must equal `-1` at the zero of `f`, giving
//! `d_n^2 = 1 / sum_j w_j^{-1}` over the `n + 2` chain weights.

use serde::{Deserialize, Serialize};

use crate::spaces::int_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormFamily {
    /// `1 - z1` over `TotalDegree(n)`: weights `(j+1)^alpha`, `j = 0..=n+1`.
    OneMinusZ1,
    /// `1 - z1 z2` over `DiagonalOnly(n)` (equivalently `TotalDegree(2n)`):
    /// weights `(2m+1)^alpha`, `m = 0..=n+1`.
    OneMinusZ1Z2,
}

/// Squared distance `d_n^2` for the given family.
pub fn closed_form_distance(family: ClosedFormFamily, alpha: f64, n: usize) -> f64 {
    let inverse_weights: f64 = (0..=n + 1)
        .map(|j| match family {
            ClosedFormFamily::OneMinusZ1 => int_power((j + 1) as f64, -alpha),
            ClosedFormFamily::OneMinusZ1Z2 => int_power((2 * j + 1) as f64, -alpha),
        })
        .sum();
    1.0 / inverse_weights
}
