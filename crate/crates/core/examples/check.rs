//! Decide irreducibility for a few parameter tuples and print both verdicts.

use hecke_g7::irreducibility::{decide, CheckOptions, Decision};
use hecke_g7::Params;

/// `(label, theorem decision, oracle decision)` for each tuple.
pub fn run_example() -> Vec<(&'static str, Decision, Decision)> {
    let cases = [
        ("all ones", [1.0; 6]),
        ("x=(1,1) y=(2,3) z=(5,7)", [1.0, 1.0, 2.0, 3.0, 5.0, 7.0]),
        ("equal x, z1 = y1*z2/y2", [1.0, 1.0, 1.0, 2.0, 2.0, 4.0]),
        ("x1*y2*z1 = x2*y1*z2", [1.0, 2.0, 1.0, 1.0, 2.0, 1.0]),
        ("generic distinct x", [1.5, 0.5, 2.0, 3.0, 5.0, 7.0]),
    ];
    let opts = CheckOptions::default();
    cases
        .iter()
        .map(|(label, values)| {
            let p = Params::from_real(*values).expect("nonzero");
            let v = decide(&p, &opts).expect("valid parameters");
            (*label, v.theorem_decision, v.oracle_decision)
        })
        .collect()
}

fn main() {
    for (label, theorem, oracle) in run_example() {
        println!("{label:<26} theorem {theorem:?}, oracle {oracle:?}");
    }
}
