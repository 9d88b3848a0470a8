//! The principal square root and why sqrt(z^2) is not always z.

use std::f64::consts::PI;

use hecke_g7::numerics::{approx_eq, principal_sqrt, to_polar};
use hecke_g7::ComplexValue;

/// Arguments of `z` and `sqrt(z^2)` for `z = e^{iθ}` at a few angles.
pub fn run_example() -> Vec<(f64, f64)> {
    [0.2, 0.5, 0.75, 1.0]
        .iter()
        .map(|t| {
            let z = ComplexValue::from_polar(1.0, t * PI);
            let back = principal_sqrt(z * z);
            debug_assert!(approx_eq(back * back, z * z, 1e-12));
            (to_polar(z).argument, to_polar(back).argument)
        })
        .collect()
}

fn main() {
    println!(
        "sqrt(-1) = {}",
        principal_sqrt(ComplexValue::new(-1.0, -0.0))
    );
    for (a, b) in run_example() {
        println!("arg z = {a:+.4}, arg sqrt(z^2) = {b:+.4}");
    }
}
