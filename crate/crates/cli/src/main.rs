//! Command-line front end: single-group queries, relator-file queries, and
//! verification sweeps with machine-readable reports.
//!
//! Exit codes: 0 = all requested checks pass, 1 = mathematical disagreement,
//! 2 = usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nilmult_core::oracle::{multiplier_of, two_nilpotent_multiplier, Presentation};
use nilmult_core::report::sweep;
use nilmult_core::theory::{
    classify, closed_form_multiplier, epicenter_membership, epicenter_witness, is_2_capable,
    is_capable,
};
use nilmult_core::word::parse_relator_lines;
use nilmult_core::GroupParams;

#[derive(Parser)]
#[command(
    name = "nilmult",
    about = "Classification and 2-nilpotent multipliers of 2-generator p-groups of class two",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form, family and catalogue label of a parameter tuple.
    Classify(TupleArgs),
    /// 2-nilpotent multiplier of a tuple group or a relator file.
    Multiplier(MultiplierArgs),
    /// Sweep all admissible tuples, cross-check closed forms, write a report.
    Sweep(SweepArgs),
    /// Epicenter witness and oracle-backed membership verdict for a tuple.
    Epicenter(TupleArgs),
}

#[derive(Args)]
struct TupleArgs {
    /// Prime p.
    #[arg(short, long)]
    p: u64,
    /// Tuple alpha,beta,gamma,rho,sigma.
    #[arg(short, long, value_parser = parse_tuple)]
    tuple: Tuple,
    /// Emit a single JSON object instead of key: value lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MultiplierArgs {
    /// Prime p.
    #[arg(short, long)]
    p: u64,
    /// Tuple alpha,beta,gamma,rho,sigma.
    #[arg(short, long, value_parser = parse_tuple, conflicts_with = "relators")]
    tuple: Option<Tuple>,
    /// Relator file (one word per line, '#' comments); oracle method only.
    #[arg(long)]
    relators: Option<PathBuf>,
    /// Which computation(s) to run.
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated primes.
    #[arg(short, long, value_delimiter = ',', required = true)]
    primes: Vec<u64>,
    /// Largest exponent for alpha, beta, gamma (>= 1).
    #[arg(long)]
    max_exp: u32,
    /// Output path for the report.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy)]
struct Tuple([u32; 5]);

fn parse_tuple(s: &str) -> Result<Tuple, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 5 {
        return Err(format!(
            "expected 5 comma-separated exponents alpha,beta,gamma,rho,sigma, got {}",
            parts.len()
        ));
    }
    let mut out = [0u32; 5];
    for (i, part) in parts.iter().enumerate() {
        out[i] = part
            .trim()
            .parse()
            .map_err(|e| format!("bad exponent {part:?}: {e}"))?;
    }
    Ok(Tuple(out))
}

fn params_of(p: u64, t: Tuple) -> GroupParams {
    GroupParams::new(p, t.0[0], t.0[1], t.0[2], t.0[3], t.0[4])
}

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Multiplier(args) => cmd_multiplier(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Epicenter(args) => cmd_epicenter(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn cmd_classify(args: TupleArgs) -> Result<ExitCode, String> {
    let params = params_of(args.p, args.tuple);
    let class = classify(&params).map_err(|e| e.to_string())?;
    let capable = is_capable(&params).map_err(|e| e.to_string())?;
    let two_capable = is_2_capable(&params).map_err(|e| e.to_string())?;
    let label = class.label.expect("classify fills the label");
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "p": args.p,
                "input": args.tuple.0,
                "canonical": class.canonical.tuple(),
                "family": class.family.to_string(),
                "label": label.to_string(),
                "capable": capable,
                "two_capable": two_capable,
            })
        );
    } else {
        println!("input: {}", params);
        println!("canonical: {}", class.canonical);
        println!("family: {}", class.family);
        println!("label: {label}");
        println!("capable: {capable}");
        println!("2-capable: {two_capable}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_multiplier(args: MultiplierArgs) -> Result<ExitCode, String> {
    if let Some(path) = args.relators {
        if args.method == Method::Closed {
            return Err("relator files support only the oracle method".into());
        }
        let text = fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let relators = parse_relator_lines(&text).map_err(|e| e.to_string())?;
        let pres = Presentation {
            p: args.p,
            relators,
        };
        let inv = two_nilpotent_multiplier(&pres).map_err(|e| e.to_string())?;
        println!("oracle: {inv}");
        return Ok(ExitCode::SUCCESS);
    }

    let tuple = args
        .tuple
        .ok_or_else(|| "either --tuple or --relators is required".to_string())?;
    let params = params_of(args.p, tuple);
    let closed = match args.method {
        Method::Oracle => None,
        _ => Some(closed_form_multiplier(&params).map_err(|e| e.to_string())?),
    };
    let oracle = match args.method {
        Method::Closed => None,
        _ => Some(multiplier_of(&params).map_err(|e| e.to_string())?),
    };

    if let Some(closed) = &closed {
        match closed {
            Some(inv) => println!("closed: {inv}"),
            None => println!("closed: n/a"),
        }
    }
    if let Some(oracle) = &oracle {
        println!("oracle: {oracle}");
    }
    if let (Some(closed), Some(oracle)) = (&closed, &oracle) {
        match closed {
            Some(inv) => {
                let agree = inv == oracle;
                println!("agree: {agree}");
                if !agree {
                    return Ok(ExitCode::from(EXIT_DISAGREE));
                }
            }
            None => println!("agree: n/a"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode, String> {
    if args.primes.is_empty() {
        return Err("at least one prime is required".into());
    }
    if args.max_exp < 1 {
        return Err("--max-exp must be >= 1".into());
    }
    let report = sweep(&args.primes, args.max_exp).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    match args.format {
        Format::Jsonl => report.write_jsonl(&mut buf),
        Format::Csv => report.write_csv(&mut buf),
    }
    .map_err(|e| e.to_string())?;
    match &args.out {
        Some(path) => {
            fs::write(path, &buf).map_err(|e| format!("cannot write {}: {e}", path.display()))?
        }
        None => print!("{}", String::from_utf8_lossy(&buf)),
    }
    let disagreements: Vec<String> = report
        .disagreements()
        .map(|e| format!("p={} {:?}", e.p, e.params))
        .collect();
    eprintln!(
        "sweep: {} tuples, {} disagreement(s)",
        report.entries.len(),
        disagreements.len()
    );
    for d in &disagreements {
        eprintln!("disagreement: {d}");
    }
    if disagreements.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_DISAGREE))
    }
}

fn cmd_epicenter(args: TupleArgs) -> Result<ExitCode, String> {
    let params = params_of(args.p, args.tuple);
    let witness = epicenter_witness(&params).map_err(|e| e.to_string())?;
    match witness {
        None => {
            println!("epicenter: trivial");
            Ok(ExitCode::SUCCESS)
        }
        Some(w) => {
            let member = epicenter_membership(&params, &w).map_err(|e| e.to_string())?;
            println!("witness: {w}");
            println!(
                "membership: {}",
                if member { "confirmed" } else { "REFUTED" }
            );
            if member {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_DISAGREE))
            }
        }
    }
}
