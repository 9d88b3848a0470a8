//! Braid and Hecke relation residuals on both branches of r, with the cubic
//! relations enabled.

use hecke_g7::numerics::c;
use hecke_g7::representation::{braid_residual, build_general, hecke_residuals};
use hecke_g7::{Params, RootSign};

/// Largest residual over both signs.
pub fn run_example() -> f64 {
    let p = Params::new([
        c(0.8, 0.3),
        c(-1.2, 0.5),
        c(0.4, -2.0),
        c(1.5, 0.0),
        c(-0.7, -0.7),
        c(2.2, 1.1),
    ])
    .and_then(|p| p.with_cubic(c(1.0, 0.0), c(0.0, 1.0)))
    .expect("nonzero");
    let mut worst: f64 = 0.0;
    for sign in [RootSign::Plus, RootSign::Minus] {
        let g = build_general(&p, sign).expect("nonsingular");
        let h = hecke_residuals(&g, &p);
        println!(
            "r sign {:>2}: braid {:.2e}, hecke {:.2e}",
            i8::from(sign),
            braid_residual(&g),
            h.max()
        );
        worst = worst.max(braid_residual(&g)).max(h.max());
    }
    worst
}

fn main() {
    println!("largest residual {:.2e}", run_example());
}
