//! A reducible tuple whose principal square root is the wrong branch: the
//! closed-form test says reducible, the oracle on the principal root finds no
//! invariant line, and flipping the sign of r restores agreement.

use std::f64::consts::PI;

use hecke_g7::irreducibility::{decide, CaseId, CheckOptions, Verdict};
use hecke_g7::{ComplexValue, Params};

pub fn run_example() -> Verdict {
    let e = ComplexValue::from_polar(1.0, 0.4 * PI);
    let one = ComplexValue::new(1.0, 0.0);
    // x1*y2*z2 = x2*y1*z1 needs r = x2*y1*z1 = 0.5*e^{0.8πi}, in the left
    // half-plane, so the principal root of its square is its negative.
    let p = Params::new([one, one, e, one, e, one]).expect("nonzero");
    let p = CaseId::DistinctI.solve(&Params {
        x2: ComplexValue::new(0.5, 0.0),
        ..p
    });
    decide(&p, &CheckOptions::default()).expect("valid parameters")
}

fn main() {
    let v = run_example();
    let d = &v.branch_diagnosis;
    println!(
        "theorem {:?}, oracle {:?}",
        v.theorem_decision, v.oracle_decision
    );
    for rc in &d.root_checks {
        println!("{:?}: implied root matches {}", rc.case, rc.r_used_matches);
    }
    println!("flipping r resolves: {}", d.resolved);
}
