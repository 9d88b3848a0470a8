//! Command-line front end. The binary only forwards `std::env::args` to
//! [`run`] and prints what it returns, so every command is testable
//! in-process.
//!
//! Exit codes: `0` success or agreement, `1` input error, `2` disagreement
//! between the deciders, a failed identity, or a relation residual above the
//! tolerance.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::identities::{self, IdentityReport, Status};
use crate::io::{self, ParamFile};
use crate::irreducibility::{decide, resolve_regime, CheckOptions, RegimeChoice, Verdict};
use crate::numerics::{ComplexValue, DEFAULT_TOL};
use crate::representation::{braid_residual, build, hecke_residuals, HeckeResiduals, RootSign};
use crate::sweep::{self, Domain, SweepConfig, SweepSummary};
use crate::SCHEMA_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "hecke-g7",
    version,
    about = "Irreducibility of the 2-dimensional representation of the Hecke algebra of G7"
)]
pub struct Cli {
    /// Relative tolerance for condition checks and eigendirection tests.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tolerance: f64,

    /// Sign of r relative to the principal square root: +1 or -1.
    #[arg(long, global = true, default_value = "+1", allow_hyphen_values = true)]
    pub r_sign: RootSign,

    /// Regime used by the closed-form decision: equal, distinct or auto.
    #[arg(long, global = true, default_value = "auto")]
    pub force_regime: RegimeChoice,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub output: OutputFormat,

    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 10_000)]
    pub samples: usize,

    /// positive-real, unit-modulus or general-complex.
    #[arg(long, global = true, default_value = "positive-real")]
    pub domain: Domain,

    /// Share of each regime's samples replaced by constructed reducible tuples.
    #[arg(long, global = true, default_value_t = 0.1)]
    pub inject_reducible_rate: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide irreducibility for one parameter file.
    Check { params: PathBuf },
    /// Compare both deciders on seeded random parameters.
    Sweep {
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        log10_min: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        log10_max: f64,
        /// Write each disagreement as a parameter fixture into this directory.
        #[arg(long)]
        fixtures_dir: Option<PathBuf>,
    },
    /// Run the exact identity suite.
    Identities {
        /// Run only the named identity (repeatable).
        #[arg(long)]
        only: Vec<String>,
    },
    /// Braid and Hecke relation residuals for one parameter file.
    Relations { params: PathBuf },
}

/// What a command produced: text for stdout and stderr, and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CliOutput {
    fn ok(stdout: String, code: i32) -> Self {
        CliOutput {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn input_error(msg: String) -> Self {
        CliOutput {
            stdout: String::new(),
            stderr: msg,
            code: EXIT_INPUT,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckDocument {
    pub schema_version: u32,
    pub params: ParamFile,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub braid_residual: f64,
    pub hecke_residuals: HeckeResiduals,
}

#[derive(Debug, Serialize)]
pub struct RelationsDocument {
    pub schema_version: u32,
    pub params: ParamFile,
    pub r_sign: RootSign,
    #[serde(with = "crate::io::complex")]
    pub r_used: ComplexValue,
    pub tolerance: f64,
    pub braid_residual: f64,
    pub hecke_residuals: HeckeResiduals,
    pub all_below_tolerance: bool,
}

#[derive(Debug, Serialize)]
pub struct IdentitiesDocument {
    pub schema_version: u32,
    pub reports: Vec<IdentityReport>,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents are serializable") + "\n"
}

fn check_options(cli: &Cli) -> CheckOptions {
    CheckOptions {
        tol: cli.tolerance,
        r_sign: cli.r_sign,
        regime: cli.force_regime,
    }
}

fn validate_tolerance(tol: f64) -> Result<(), Error> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Input(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

pub fn cmd_check(cli: &Cli, path: &std::path::Path) -> Result<(CheckDocument, i32), Error> {
    validate_tolerance(cli.tolerance)?;
    let p = io::read_params(path)?;
    let opts = check_options(cli);
    let verdict = decide(&p, &opts)?;
    let g = build(&p, verdict.regime, opts.r_sign)?;
    let code = if verdict.agreement {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    };
    let doc = CheckDocument {
        schema_version: SCHEMA_VERSION,
        params: ParamFile::from_params(&p),
        tolerance: opts.tol,
        braid_residual: braid_residual(&g),
        hecke_residuals: hecke_residuals(&g, &g.params),
        verdict,
    };
    Ok((doc, code))
}

pub fn cmd_relations(cli: &Cli, path: &std::path::Path) -> Result<(RelationsDocument, i32), Error> {
    validate_tolerance(cli.tolerance)?;
    let p = io::read_params(path)?;
    let regime = resolve_regime(&p, cli.force_regime, cli.tolerance);
    let g = build(&p, regime, cli.r_sign)?;
    let braid = braid_residual(&g);
    let hecke = hecke_residuals(&g, &g.params);
    let ok = braid < cli.tolerance && hecke.max() < cli.tolerance;
    let doc = RelationsDocument {
        schema_version: SCHEMA_VERSION,
        params: ParamFile::from_params(&p),
        r_sign: cli.r_sign,
        r_used: g.r_used,
        tolerance: cli.tolerance,
        braid_residual: braid,
        hecke_residuals: hecke,
        all_below_tolerance: ok,
    };
    Ok((doc, if ok { EXIT_OK } else { EXIT_DISAGREEMENT }))
}

pub fn sweep_config(cli: &Cli, log10_min: f64, log10_max: f64) -> SweepConfig {
    SweepConfig {
        samples: cli.samples,
        seed: cli.seed,
        domain: cli.domain,
        log10_min,
        log10_max,
        tol: cli.tolerance,
        regime: cli.force_regime,
        inject_rate: cli.inject_reducible_rate,
        r_sign: cli.r_sign,
    }
}

pub fn cmd_sweep(
    cfg: &SweepConfig,
    fixtures_dir: Option<&std::path::Path>,
) -> Result<(SweepSummary, i32), Error> {
    let summary = sweep::run(cfg)?;
    if let Some(dir) = fixtures_dir {
        sweep::write_fixtures(&summary, dir)?;
    }
    let code = if summary.passed() {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    };
    Ok((summary, code))
}

pub fn cmd_identities(only: &[String]) -> Result<(IdentitiesDocument, i32), Error> {
    let reports = identities::run(only)?;
    let failed = reports.iter().any(|r| r.status == Status::Failed);
    let doc = IdentitiesDocument {
        schema_version: SCHEMA_VERSION,
        reports,
    };
    Ok((doc, if failed { EXIT_DISAGREEMENT } else { EXIT_OK }))
}

fn fmt_c(z: ComplexValue) -> String {
    format!("{:.6e}{:+.6e}i", z.re, z.im)
}

fn check_text(doc: &CheckDocument) -> String {
    let v = &doc.verdict;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "regime: {:?}, r_sign: {}, r = {}",
        v.regime,
        i8::from(v.r_sign),
        fmt_c(v.r_used)
    );
    for c in &v.conditions {
        let _ = writeln!(
            s,
            "  {:<22} {} vs {}  {}",
            c.equation,
            fmt_c(c.lhs),
            fmt_c(c.rhs),
            if c.holds { "holds" } else { "-" }
        );
    }
    let _ = writeln!(s, "theorem: {:?}", v.theorem_decision);
    let _ = writeln!(s, "oracle:  {:?}", v.oracle_decision);
    for w in &v.witnesses {
        let _ = writeln!(s, "  witness ({}, {})", fmt_c(w.v1), fmt_c(w.v2));
    }
    if let Some(pv) = &v.predicted_vector {
        match &pv.vector {
            Some(u) => {
                let _ = writeln!(
                    s,
                    "predicted ({}, {}) invariant: {}",
                    fmt_c(u.v1),
                    fmt_c(u.v2),
                    pv.is_invariant
                );
            }
            None => {
                let _ = writeln!(s, "predicted: {}", pv.error.as_deref().unwrap_or("none"));
            }
        }
    }
    let _ = writeln!(
        s,
        "relations: braid {:.3e}, hecke {:.3e}",
        doc.braid_residual,
        doc.hecke_residuals.max()
    );
    let d = &v.branch_diagnosis;
    if d.applicable {
        let _ = writeln!(
            s,
            "branch: flipping r to sign {} {}",
            d.flipped_sign.map(i8::from).unwrap_or(0),
            if d.resolved {
                "resolves the disagreement"
            } else {
                "does not resolve it"
            }
        );
    }
    let _ = writeln!(
        s,
        "{}",
        if v.agreement {
            "agreement"
        } else {
            "DISAGREEMENT"
        }
    );
    s
}

fn relations_text(doc: &RelationsDocument) -> String {
    let h = &doc.hecke_residuals;
    let mut s = format!(
        "r_sign {}  r = {}\nbraid        {:.3e}\ns1 quadratic {:.3e}\ns2 quadratic {:.3e}\ns3 quadratic {:.3e}\n",
        i8::from(doc.r_sign),
        fmt_c(doc.r_used),
        doc.braid_residual,
        h.s1_quadratic,
        h.s2_quadratic,
        h.s3_quadratic
    );
    if let Some(c) = h.s2_cubic {
        let _ = writeln!(s, "s2 cubic     {c:.3e}");
    }
    if let Some(c) = h.s3_cubic {
        let _ = writeln!(s, "s3 cubic     {c:.3e}");
    }
    let _ = writeln!(
        s,
        "{}",
        if doc.all_below_tolerance {
            "ok"
        } else {
            "RESIDUAL ABOVE TOLERANCE"
        }
    );
    s
}

fn sweep_text(sum: &SweepSummary) -> String {
    let c = &sum.counts;
    let mut s = format!(
        "{} samples, seed {}, domain {:?}\nagree irreducible           {}\nagree reducible             {}\ndisagree, resolved by flip  {}\ndisagree, unresolved        {}\n",
        c.total(),
        sum.config.seed,
        sum.config.domain,
        c.agree_irreducible,
        c.agree_reducible,
        c.disagree_resolved_by_branch,
        c.disagree_unresolved
    );
    let _ = writeln!(
        s,
        "injected: equal-x {}, distinct-x {}\nwitness checks: {} checked, {} failed\nu-direction checks: {} checked, {} failed",
        sum.equal_x.injected,
        sum.distinct_x.injected,
        sum.witness_checks.checked,
        sum.witness_checks.failures,
        sum.u_direction_checks.checked,
        sum.u_direction_checks.failures
    );
    s
}

fn identities_text(doc: &IdentitiesDocument) -> String {
    let mut s = String::new();
    for r in &doc.reports {
        let status = match r.status {
            Status::Verified => "verified",
            Status::Failed => "FAILED",
            Status::SignDependent => "sign-dependent",
        };
        let _ = writeln!(s, "{:<26} {}", r.name, status);
        for c in r.checks.iter().filter(|c| !c.holds) {
            let _ = writeln!(s, "    does not hold: {}", c.label);
        }
    }
    s
}

fn render<T: Serialize>(format: OutputFormat, doc: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        OutputFormat::Json => to_json(doc),
        OutputFormat::Text => text(doc),
    }
}

fn dispatch(cli: &Cli) -> Result<CliOutput, Error> {
    let fmt = cli.output;
    match &cli.command {
        Command::Check { params } => {
            let (doc, code) = cmd_check(cli, params)?;
            Ok(CliOutput::ok(render(fmt, &doc, check_text), code))
        }
        Command::Relations { params } => {
            let (doc, code) = cmd_relations(cli, params)?;
            Ok(CliOutput::ok(render(fmt, &doc, relations_text), code))
        }
        Command::Sweep {
            log10_min,
            log10_max,
            fixtures_dir,
        } => {
            let cfg = sweep_config(cli, *log10_min, *log10_max);
            let (doc, code) = cmd_sweep(&cfg, fixtures_dir.as_deref())?;
            Ok(CliOutput::ok(render(fmt, &doc, sweep_text), code))
        }
        Command::Identities { only } => {
            let (doc, code) = cmd_identities(only)?;
            Ok(CliOutput::ok(render(fmt, &doc, identities_text), code))
        }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return CliOutput::ok(e.to_string(), EXIT_OK),
        Err(e) => return CliOutput::input_error(e.to_string()),
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => CliOutput::input_error(format!("{e}\n")),
    }
}
