//! `instanton`: command-line driver for the verification suites.

mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use instanton::acceptance::CheckLine;
use instanton::Error;

#[derive(Parser, Debug)]
#[command(name = "instanton", version, about = "Exact instanton partition functions and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Seed for the rational sample points.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of sample points.
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
    /// Emit the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Write the report to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Z^inst at sample points; closed form at rank 1 and the tau1 shift law.
    Zinst {
        #[arg(long, default_value_t = 1)]
        rank: usize,
        #[arg(long, default_value_t = 4)]
        q_order: u32,
        #[arg(long, default_value_t = 0)]
        tau_degree: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Low-degree vanishing of the blowup equation in one sector.
    BlowupCheck {
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        sector: i64,
        #[arg(long, default_value_t = 2)]
        q_order: u32,
        /// Largest power of tau1 kept.
        #[arg(long, default_value_t = 2)]
        tau1_cap: u8,
        /// Also rebuild F^inst from the recursion at the first sample.
        #[arg(long)]
        recursion: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Epsilon expansion of F^inst and the prepotential identities.
    Prepotential {
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, default_value_t = 3)]
        q_order: u32,
        #[arg(long, default_value_t = 2)]
        eps_order: u32,
        #[arg(long, default_value_t = 0)]
        tau_degree: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Rank-2 curve: theta identities, contact terms, genus one, Fintushel-Stern.
    Sw {
        #[arg(long, default_value_t = 8)]
        q_order: u32,
        /// Order in t for the Fintushel-Stern series.
        #[arg(long, default_value_t = 4)]
        t_order: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Poincare polynomial generating functions.
    Betti {
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        sector: i64,
        #[arg(long, default_value_t = 4)]
        q_order: u32,
        /// Run only the rank-2 theta-function identity.
        #[arg(long)]
        ochiai: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Symmetric product character and the conifold hbar expansion.
    Ktheory {
        #[arg(long, default_value_t = 6)]
        q_order: u32,
        #[arg(long, default_value_t = 4)]
        hbar_order: u32,
        #[arg(long, default_value_t = 8)]
        t_degree: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Identities of the perturbation term in formal rings.
    PerturbCheck {
        #[arg(long, default_value_t = 8)]
        eps_order: u32,
        #[arg(long, default_value_t = 3)]
        k_range: i64,
        #[command(flatten)]
        common: Common,
    },
    /// The full acceptance suite.
    All {
        #[command(flatten)]
        common: Common,
    },
}

/// Result of one subcommand before it is rendered.
pub struct Outcome {
    pub parameters: serde_json::Value,
    pub checks: Vec<CheckLine>,
    pub data: serde_json::Value,
    /// Extra human-readable lines.
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    parameters: &'a serde_json::Value,
    seed: u64,
    pass: bool,
    checks: &'a [CheckLine],
    counterexample: Option<String>,
    data: &'a serde_json::Value,
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("INSTANTON_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("INSTANTON_THREADS must be a positive integer, got {:?}", v))?;
    if n == 0 {
        return Err("INSTANTON_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Unsupported(_) | Error::Sampling(_) => 2,
        _ => 1,
    }
}

fn render(name: &str, common: &Common, o: &Outcome) -> String {
    let pass = o.checks.iter().all(|c| c.pass);
    let counterexample = o.checks.iter().find(|c| !c.pass).map(|c| match &c.detail {
        Some(d) => format!("{}: {}", c.name, d),
        None => c.name.clone(),
    });
    if common.json {
        let r = RunReport {
            command: name,
            parameters: &o.parameters,
            seed: common.seed,
            pass,
            checks: &o.checks,
            counterexample,
            data: &o.data,
        };
        let mut s = serde_json::to_string_pretty(&r).expect("report serializes");
        s.push('\n');
        return s;
    }
    let mut s = String::new();
    for n in &o.notes {
        s.push_str(n);
        s.push('\n');
    }
    for c in &o.checks {
        s.push_str(&format!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name));
        if let (false, Some(d)) = (c.pass, &c.detail) {
            s.push_str(&format!(" ({})", d));
        }
        s.push('\n');
    }
    s.push_str(if pass { "overall: PASS\n" } else { "overall: FAIL\n" });
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {}", e);
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let (name, common, result) = commands::dispatch(cli.command);
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(exit_for(&e));
        }
    };
    let text = render(name, &common, &outcome);
    let written = match &common.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {}", e);
        return ExitCode::from(2);
    }
    eprintln!("{} finished in {:.2?}", name, start.elapsed());
    ExitCode::from(status(&outcome))
}

/// 0 when every check passes, 1 otherwise.
fn status(o: &Outcome) -> u8 {
    if o.checks.iter().all(|c| c.pass) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(pass: bool) -> Outcome {
        Outcome {
            parameters: serde_json::json!({}),
            checks: vec![CheckLine::new("a", true, None), CheckLine::new("b", pass, Some("q^2 t1: 1 vs 2".into()))],
            data: serde_json::Value::Null,
            notes: vec![],
        }
    }

    fn common(json: bool) -> Common {
        Common { seed: 7, samples: 1, json, out: None }
    }

    #[test]
    fn failing_check_gives_exit_one() {
        assert_eq!(status(&outcome(true)), 0);
        assert_eq!(status(&outcome(false)), 1);
    }

    #[test]
    fn counterexample_reported() {
        let v: serde_json::Value = serde_json::from_str(&render("x", &common(true), &outcome(false))).unwrap();
        assert_eq!(v["pass"], false);
        assert_eq!(v["counterexample"], "b: q^2 t1: 1 vs 2");
        assert_eq!(v["seed"], 7);
        let text = render("x", &common(false), &outcome(false));
        assert!(text.contains("FAIL b (q^2 t1: 1 vs 2)"));
        assert!(text.ends_with("overall: FAIL\n"));
    }

    #[test]
    fn input_errors_map_to_two() {
        assert_eq!(exit_for(&Error::InvalidInput("x".into())), 2);
        assert_eq!(exit_for(&Error::Unsupported("x".into())), 2);
        assert_eq!(exit_for(&Error::Internal("x".into())), 1);
    }
}
