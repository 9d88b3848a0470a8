//! A seeded sweep over general complex parameters.

use hecke_g7::sweep::{run, Domain, SweepConfig, SweepSummary};

pub fn run_example() -> SweepSummary {
    let cfg = SweepConfig {
        samples: 2_000,
        seed: 7,
        domain: Domain::GeneralComplex,
        ..SweepConfig::default()
    };
    run(&cfg).expect("valid config")
}

fn main() {
    let s = run_example();
    println!("{}", serde_json::to_string_pretty(&s.counts).unwrap());
    println!(
        "injected {} + {}, witness failures {}",
        s.equal_x.injected, s.distinct_x.injected, s.witness_checks.failures
    );
}
