//! Run the exact identity suite and print one line per identity.

use hecke_g7::identities::{run, IdentityReport};

pub fn run_example() -> Vec<IdentityReport> {
    run(&[]).expect("all names are known")
}

fn main() {
    for r in run_example() {
        println!("{:<26} {:?}", r.name, r.status);
        for c in r.checks.iter().filter(|c| !c.holds) {
            println!("    {}", c.label);
        }
    }
}
