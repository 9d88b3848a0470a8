//! Eigenstructure of 2x2 matrices and common eigendirections of the
//! generators at a reducible point.

use hecke_g7::matrix2::{common_eigendirections, eigen_directions, EigenReport};
use hecke_g7::representation::{build, Regime};
use hecke_g7::{Mat2, Params, RootSign, Vec2};

/// Eigen reports of three sample matrices and the common directions of the
/// generators at `x = (1, 1), y = (1, 2), z = (2, 4)`.
pub fn run_example() -> (Vec<EigenReport>, Vec<Vec2>) {
    let reports = [
        Mat2::from_real(2.0, 0.0, 0.0, 2.0),
        Mat2::from_real(1.0, 1.0, 0.0, 1.0),
        Mat2::from_real(1.0, 1.0, 0.0, 2.0),
    ]
    .iter()
    .map(|m| eigen_directions(m, 1e-12))
    .collect();
    let p = Params::from_real([1.0, 1.0, 1.0, 2.0, 2.0, 4.0]).expect("nonzero");
    let g = build(&p, Regime::EqualX, RootSign::Plus).expect("nonsingular");
    (reports, common_eigendirections(&g.generators(), 1e-9))
}

fn main() {
    let (reports, common) = run_example();
    for r in reports {
        println!("{}", serde_json::to_string(&r).unwrap());
    }
    for v in common {
        println!("common direction ({}, {})", v.v1, v.v2);
    }
}
