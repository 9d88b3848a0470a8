//! Seeded randomized comparison of the closed-form decision against the
//! common-eigendirection oracle.
//!
//! Sample `i` draws from its own ChaCha stream (`seed`, stream `i`), so the
//! sample set does not depend on thread scheduling and any sample can be
//! regenerated alone. With the regime filter on `auto`, even indices are
//! equal-x samples (`x1 := x2`) and odd ones distinct-x.
//!
//! Random tuples are almost never reducible, so a fixed share of each
//! regime's samples is replaced by a constructed reducible tuple: one
//! condition of the regime is picked and a parameter solved from it. The
//! share is a quota rather than a coin flip: the `k`-th sample of a regime
//! is injected iff `⌊(k+1)·rate⌋ > ⌊k·rate⌋`.

use std::f64::consts::PI;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::io::ParamFile;
use crate::irreducibility::{
    decide, is_invariant_line, witnesses_contain, CaseId, CheckOptions, Decision, RegimeChoice,
    Verdict,
};
use crate::matrix2::Vec2;
use crate::numerics::{ComplexValue, DEFAULT_TOL};
use crate::params::Params;
use crate::representation::{build, Regime, RootSign};

/// Where random parameters are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    /// Positive reals, log10-modulus uniform in the band.
    PositiveReal,
    /// Modulus 1, argument uniform in `(−π, π]`.
    UnitModulus,
    /// Log10-modulus uniform in the band, argument uniform in `(−π, π]`.
    GeneralComplex,
}

impl FromStr for Domain {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "positive-real" => Ok(Domain::PositiveReal),
            "unit-modulus" => Ok(Domain::UnitModulus),
            "general-complex" => Ok(Domain::GeneralComplex),
            other => Err(format!(
                "unknown domain {other:?}; expected positive-real, unit-modulus or general-complex"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub samples: usize,
    pub seed: u64,
    pub domain: Domain,
    pub log10_min: f64,
    pub log10_max: f64,
    pub tol: f64,
    pub regime: RegimeChoice,
    pub inject_rate: f64,
    pub r_sign: RootSign,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            samples: 10_000,
            seed: 42,
            domain: Domain::PositiveReal,
            log10_min: -1.0,
            log10_max: 1.0,
            tol: DEFAULT_TOL,
            regime: RegimeChoice::Auto,
            inject_rate: 0.1,
            r_sign: RootSign::Plus,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.samples == 0 {
            return Err(Error::Input("sample count must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.inject_rate) {
            return Err(Error::Input(format!(
                "inject rate must lie in [0, 1], got {}",
                self.inject_rate
            )));
        }
        if !(self.log10_min.is_finite()
            && self.log10_max.is_finite()
            && self.log10_min <= self.log10_max)
        {
            return Err(Error::Input(format!(
                "invalid log10 modulus band [{}, {}]",
                self.log10_min, self.log10_max
            )));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::Input(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }

    fn options(&self) -> CheckOptions {
        CheckOptions {
            tol: self.tol,
            r_sign: self.r_sign,
            regime: self.regime,
        }
    }
}

/// How the two deciders compared on one sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    AgreeIrreducible,
    AgreeReducible,
    DisagreeResolvedByBranch,
    DisagreeUnresolved,
}

/// One generated tuple and what was intended for it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub index: usize,
    pub regime: Regime,
    pub injected: Option<CaseId>,
    pub params: Params,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleResult {
    pub sample: Sample,
    pub outcome: Outcome,
    pub theorem: Option<Decision>,
    pub oracle: Option<Decision>,
    /// For injected tuples: whether every witness at the agreeing sign is an
    /// invariant line of all three generators.
    pub witness_ok: Option<bool>,
    /// For equal-x tuples satisfying the first condition: whether
    /// `(−1/(x2y2), 1)` is among the witnesses.
    pub u_direction_ok: Option<bool>,
    pub error: Option<String>,
}

fn draw(rng: &mut ChaCha8Rng, cfg: &SweepConfig) -> ComplexValue {
    let modulus = match cfg.domain {
        Domain::UnitModulus => 1.0,
        _ if cfg.log10_min == cfg.log10_max => 10f64.powf(cfg.log10_min),
        _ => 10f64.powf(rng.gen_range(cfg.log10_min..cfg.log10_max)),
    };
    let argument = match cfg.domain {
        Domain::PositiveReal => 0.0,
        // gen::<f64>() is in [0, 1), so this is in (−π, π]
        _ => PI - rng.gen::<f64>() * 2.0 * PI,
    };
    ComplexValue::from_polar(modulus, argument)
}

fn injects(k: usize, rate: f64) -> bool {
    ((k + 1) as f64 * rate).floor() > (k as f64 * rate).floor()
}

/// Regenerate sample `index` of the sweep described by `cfg`.
pub fn generate(cfg: &SweepConfig, index: usize) -> Sample {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let (regime, k) = match cfg.regime {
        RegimeChoice::Equal => (Regime::EqualX, index),
        RegimeChoice::Distinct => (Regime::DistinctX, index),
        RegimeChoice::Auto if index.is_multiple_of(2) => (Regime::EqualX, index / 2),
        RegimeChoice::Auto => (Regime::DistinctX, index / 2),
    };
    let values: [ComplexValue; 6] = std::array::from_fn(|_| draw(&mut rng, cfg));
    let mut params = Params::new(values).expect("drawn values are nonzero and finite");
    if regime == Regime::EqualX {
        params.x1 = params.x2;
    }
    let injected = injects(k, cfg.inject_rate).then(|| {
        let cases = CaseId::for_regime(regime);
        cases[rng.gen_range(0..cases.len())]
    });
    if let Some(case) = injected {
        params = case.solve(&params);
    }
    Sample {
        index,
        regime,
        injected,
        params,
    }
}

fn classify(v: &Verdict) -> Outcome {
    match (v.agreement, v.theorem_decision) {
        (true, Decision::Irreducible) => Outcome::AgreeIrreducible,
        (true, Decision::Reducible) => Outcome::AgreeReducible,
        (false, _) if v.branch_diagnosis.resolved => Outcome::DisagreeResolvedByBranch,
        (false, _) => Outcome::DisagreeUnresolved,
    }
}

/// The sign on which the deciders agree and the witnesses found there.
fn agreeing_witnesses(v: &Verdict) -> Option<(RootSign, Vec<Vec2>)> {
    if v.agreement {
        return Some((v.r_sign, v.witnesses.clone()));
    }
    let d = &v.branch_diagnosis;
    match (d.resolved, d.flipped_sign, &d.flipped_oracle) {
        (true, Some(sign), Some(oracle)) => Some((sign, oracle.witnesses.clone())),
        _ => None,
    }
}

pub fn evaluate(cfg: &SweepConfig, sample: Sample) -> SampleResult {
    let opts = cfg.options();
    let verdict = match decide(&sample.params, &opts) {
        Ok(v) => v,
        Err(e) => {
            return SampleResult {
                sample,
                outcome: Outcome::DisagreeUnresolved,
                theorem: None,
                oracle: None,
                witness_ok: None,
                u_direction_ok: None,
                error: Some(e.to_string()),
            }
        }
    };
    let outcome = classify(&verdict);
    let agreeing =
        agreeing_witnesses(&verdict).filter(|_| verdict.theorem_decision == Decision::Reducible);
    let witness_ok = sample.injected.map(|_| match &agreeing {
        Some((sign, witnesses)) if !witnesses.is_empty() => {
            build(&sample.params, verdict.regime, *sign)
                .map(|g| {
                    witnesses
                        .iter()
                        .all(|w| is_invariant_line(&g.generators(), w, cfg.tol))
                })
                .unwrap_or(false)
        }
        _ => false,
    });
    let case1_holds = verdict.regime == Regime::EqualX
        && verdict
            .conditions
            .iter()
            .any(|c| c.case == CaseId::EqualCase1 && c.holds);
    let u_direction_ok = case1_holds.then(|| match &agreeing {
        Some((_, witnesses)) => {
            let p = &sample.params;
            let u = Vec2::new(-1.0 / (p.x2 * p.y2), ComplexValue::new(1.0, 0.0));
            witnesses_contain(witnesses, &u, cfg.tol)
        }
        None => false,
    });
    SampleResult {
        sample,
        outcome,
        theorem: Some(verdict.theorem_decision),
        oracle: Some(verdict.oracle_decision),
        witness_ok,
        u_direction_ok,
        error: None,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeCounts {
    pub agree_irreducible: usize,
    pub agree_reducible: usize,
    pub disagree_resolved_by_branch: usize,
    pub disagree_unresolved: usize,
}

impl OutcomeCounts {
    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::AgreeIrreducible => self.agree_irreducible += 1,
            Outcome::AgreeReducible => self.agree_reducible += 1,
            Outcome::DisagreeResolvedByBranch => self.disagree_resolved_by_branch += 1,
            Outcome::DisagreeUnresolved => self.disagree_unresolved += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.agree_irreducible
            + self.agree_reducible
            + self.disagree_resolved_by_branch
            + self.disagree_unresolved
    }

    pub fn agreements(&self) -> usize {
        self.agree_irreducible + self.agree_reducible
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimeSummary {
    pub samples: usize,
    pub injected: usize,
    pub counts: OutcomeCounts,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub checked: usize,
    pub failures: usize,
}

impl CheckTally {
    fn add(&mut self, ok: Option<bool>) {
        if let Some(ok) = ok {
            self.checked += 1;
            self.failures += usize::from(!ok);
        }
    }
}

/// A sample on which the two deciders disagreed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Disagreement {
    pub index: usize,
    pub regime: Regime,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injected: Option<CaseId>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<Decision>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Decision>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub params: ParamFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub schema_version: u32,
    pub config: SweepConfig,
    pub counts: OutcomeCounts,
    pub equal_x: RegimeSummary,
    pub distinct_x: RegimeSummary,
    /// Injected tuples whose witnesses are invariant lines.
    pub witness_checks: CheckTally,
    /// Equal-x tuples where `(−1/(x2y2), 1)` should be a witness.
    pub u_direction_checks: CheckTally,
    pub disagreements: Vec<Disagreement>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.counts.disagree_unresolved == 0
    }

    pub fn regime(&self, regime: Regime) -> &RegimeSummary {
        match regime {
            Regime::EqualX => &self.equal_x,
            Regime::DistinctX => &self.distinct_x,
        }
    }
}

/// Evaluate every sample (in parallel) and aggregate in index order.
pub fn run_samples(cfg: &SweepConfig) -> Result<Vec<SampleResult>, Error> {
    cfg.validate()?;
    Ok((0..cfg.samples)
        .into_par_iter()
        .map(|i| evaluate(cfg, generate(cfg, i)))
        .collect())
}

pub fn summarize(cfg: &SweepConfig, results: &[SampleResult]) -> SweepSummary {
    let mut summary = SweepSummary {
        schema_version: crate::SCHEMA_VERSION,
        config: cfg.clone(),
        counts: OutcomeCounts::default(),
        equal_x: RegimeSummary::default(),
        distinct_x: RegimeSummary::default(),
        witness_checks: CheckTally::default(),
        u_direction_checks: CheckTally::default(),
        disagreements: Vec::new(),
    };
    for r in results {
        summary.counts.add(r.outcome);
        let regime = match r.sample.regime {
            Regime::EqualX => &mut summary.equal_x,
            Regime::DistinctX => &mut summary.distinct_x,
        };
        regime.samples += 1;
        regime.injected += usize::from(r.sample.injected.is_some());
        regime.counts.add(r.outcome);
        summary.witness_checks.add(r.witness_ok);
        summary.u_direction_checks.add(r.u_direction_ok);
        if matches!(
            r.outcome,
            Outcome::DisagreeResolvedByBranch | Outcome::DisagreeUnresolved
        ) {
            summary.disagreements.push(Disagreement {
                index: r.sample.index,
                regime: r.sample.regime,
                injected: r.sample.injected,
                outcome: r.outcome,
                theorem: r.theorem,
                oracle: r.oracle,
                error: r.error.clone(),
                params: ParamFile::from_params(&r.sample.params),
            });
        }
    }
    summary
}

pub fn run(cfg: &SweepConfig) -> Result<SweepSummary, Error> {
    let results = run_samples(cfg)?;
    Ok(summarize(cfg, &results))
}

/// On-disk form of one disagreement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub schema_version: u32,
    pub seed: u64,
    pub domain: Domain,
    pub r_sign: RootSign,
    #[serde(flatten)]
    pub disagreement: Disagreement,
}

/// Write each disagreement as `disagreement-<index>.json` under `dir`.
pub fn write_fixtures(summary: &SweepSummary, dir: &Path) -> Result<usize, Error> {
    let io_err = |e: std::io::Error| Error::Input(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io_err)?;
    for d in &summary.disagreements {
        let fixture = Fixture {
            schema_version: crate::SCHEMA_VERSION,
            seed: summary.config.seed,
            domain: summary.config.domain,
            r_sign: summary.config.r_sign,
            disagreement: d.clone(),
        };
        let text = serde_json::to_string_pretty(&fixture).expect("serializable");
        let path = dir.join(format!("disagreement-{:05}.json", d.index));
        std::fs::write(&path, text + "\n").map_err(io_err)?;
    }
    Ok(summary.disagreements.len())
}
