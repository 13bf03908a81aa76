//! Command-line front end: validate code files, run correctability and
//! distance checks, cross-check with the dense oracle, and generate the
//! stock code families. Emits one JSON report per run on stdout.
//!
//! Exit codes: 0 correctable/valid/success, 1 not correctable/invalid,
//! 2 usage or parse error, 3 oracle refusal.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use hybridstab::code::{
    build_bacon_shor, build_gkp18, build_motivating, classical_registry, hybridize_css,
    HybridCode, LinearCode,
};
use hybridstab::codefile;
use hybridstab::correct::check_errors;
use hybridstab::distance::{anticommute_degree, exact_distance_with_threads};
use hybridstab::oracle::Oracle;
use hybridstab::report::{self, CodeSummary, Inputs, Outcome, Report, Timings};
use hybridstab::Error;

#[derive(Parser)]
#[command(name = "hybridstab", version, about = "Hybrid classical-quantum stabilizer codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a code file and run all structural validity checks.
    Validate { code_file: PathBuf },
    /// Test a Pauli error set (one operator per line) for correctability.
    Check {
        code_file: PathBuf,
        errors_file: PathBuf,
        /// Cross-check the verdict against the dense-matrix oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Weight-limited exact distance search over the forbidden sets.
    Distance {
        code_file: PathBuf,
        /// Maximum enumerated weight (default min(n, 6)).
        #[arg(long)]
        max_weight: Option<usize>,
        #[arg(long, default_value_t = 4)]
        threads: usize,
    },
    /// Write a code-definition file for one of the stock families.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    /// S = ⟨Z_1..Z_s⟩ with gauge/logical pairs on the remaining qudits.
    Motivating(MotivatingArgs),
    /// The ℓ×ℓ Bacon-Shor subsystem code.
    BaconShor(BaconShorArgs),
    /// Bacon-Shor hybridized with classical codes on the X/Z syndromes.
    BaconShorHybrid(BaconShorHybridArgs),
    /// The d=18 single-qudit hybrid code.
    Gkp18(OutArg),
}

#[derive(Args)]
struct MotivatingArgs {
    #[arg(long)]
    sites: usize,
    #[arg(long)]
    stab: usize,
    #[arg(long, default_value_t = 0)]
    gauge: usize,
    #[arg(long, default_value_t = 2)]
    dim: u64,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct BaconShorArgs {
    #[arg(long)]
    ell: usize,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct BaconShorHybridArgs {
    #[arg(long)]
    ell: usize,
    /// Classical code for X-type syndromes: registry name (rep<k>,
    /// hamming743) or a generator-matrix file path. Default rep(ℓ-1).
    #[arg(long)]
    cx: Option<String>,
    /// Classical code for Z-type syndromes; same conventions as --cx.
    #[arg(long)]
    cz: Option<String>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct OutArg {
    #[arg(short, long)]
    output: PathBuf,
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    let (report, exit_code) = run(cli.command, start);
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    std::process::exit(exit_code);
}

fn run(command: Command, start: Instant) -> (Report, i32) {
    match command {
        Command::Validate { code_file } => {
            let inputs = Inputs {
                code_file: Some(code_file.display().to_string()),
                ..Default::default()
            };
            let code = match load_code(&code_file) {
                Ok(c) => c,
                Err(e) => return error_report("validate", inputs, e, start),
            };
            for dropped in code.stabilizer().dropped_generators() {
                eprintln!("warning: dropped redundant stabilizer generator {dropped}");
            }
            let validation = code.validate();
            let outcome = Outcome::Validate {
                valid: validation.passes(),
                failures: validation
                    .failures()
                    .iter()
                    .map(|f| f.detail.clone())
                    .collect(),
                dropped_stabilizer_generators: code
                    .stabilizer()
                    .dropped_generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect(),
            };
            let exit = if validation.passes() { 0 } else { 1 };
            (
                finish("validate", inputs, Some(CodeSummary::of(&code, None)), outcome, start),
                exit,
            )
        }
        Command::Check {
            code_file,
            errors_file,
            oracle,
        } => {
            let inputs = Inputs {
                code_file: Some(code_file.display().to_string()),
                errors_file: Some(errors_file.display().to_string()),
                oracle: Some(oracle),
                ..Default::default()
            };
            let code = match load_code(&code_file) {
                Ok(c) => c,
                Err(e) => return error_report("check", inputs, e, start),
            };
            let errors = match std::fs::read_to_string(&errors_file)
                .map_err(Error::from)
                .and_then(|t| codefile::parse_error_list(&t, code.qudit_dim(), code.num_sites()))
            {
                Ok(e) => e,
                Err(e) => return error_report("check", inputs, e, start),
            };
            let verdict = match check_errors(&code, &errors) {
                Ok(v) => v,
                Err(e) => return error_report("check", inputs, e, start),
            };
            let oracle_verdict = if oracle {
                match Oracle::new().check_oaqec_conditions(&code, &errors) {
                    Ok(v) => Some(v),
                    Err(e @ (Error::OracleRefusal | Error::DenseCapExceeded(_, _))) => {
                        let (rep, _) = error_report("check", inputs, e, start);
                        return (rep, 3);
                    }
                    Err(e) => return error_report("check", inputs, e, start),
                }
            } else {
                None
            };
            let exit = if verdict.is_correctable() { 0 } else { 1 };
            let outcome = report::check_outcome(&verdict, &errors, oracle_verdict);
            (
                finish("check", inputs, Some(CodeSummary::of(&code, None)), outcome, start),
                exit,
            )
        }
        Command::Distance {
            code_file,
            max_weight,
            threads,
        } => {
            let inputs = Inputs {
                code_file: Some(code_file.display().to_string()),
                max_weight,
                threads: Some(threads),
                ..Default::default()
            };
            let code = match load_code(&code_file) {
                Ok(c) => c,
                Err(e) => return error_report("distance", inputs, e, start),
            };
            let cutoff = max_weight.unwrap_or_else(|| code.num_sites().min(6));
            let res = match exact_distance_with_threads(&code, cutoff, threads) {
                Ok(r) => r,
                Err(e) => return error_report("distance", inputs, e, start),
            };
            let degrees = match anticommute_degree(&code) {
                Ok(d) => d,
                Err(e) => return error_report("distance", inputs, e, start),
            };
            let summary = CodeSummary::of(&code, res.exact_distance);
            let outcome = report::distance_outcome(&res, &degrees);
            (finish("distance", inputs, Some(summary), outcome, start), 0)
        }
        Command::Generate { family } => generate(family, start),
    }
}

fn generate(family: Family, start: Instant) -> (Report, i32) {
    let (name, params, output, built): (&str, String, PathBuf, hybridstab::Result<HybridCode>) =
        match family {
            Family::Motivating(a) => (
                "motivating",
                format!("dim={} sites={} stab={} gauge={}", a.dim, a.sites, a.stab, a.gauge),
                a.output,
                build_motivating(a.dim, a.sites, a.stab, a.gauge),
            ),
            Family::BaconShor(a) => (
                "bacon-shor",
                format!("ell={}", a.ell),
                a.output,
                build_bacon_shor(a.ell),
            ),
            Family::BaconShorHybrid(a) => {
                let cx_name = a.cx.unwrap_or_else(|| format!("rep{}", a.ell.saturating_sub(1)));
                let cz_name = a.cz.unwrap_or_else(|| format!("rep{}", a.ell.saturating_sub(1)));
                let params = format!("ell={} cx={cx_name} cz={cz_name}", a.ell);
                let built = build_bacon_shor(a.ell).and_then(|base| {
                    let cx = resolve_classical(&cx_name)?;
                    let cz = resolve_classical(&cz_name)?;
                    hybridize_css(&base, &cx, &cz)
                });
                ("bacon-shor-hybrid", params, a.output, built)
            }
            Family::Gkp18(a) => ("gkp18", String::new(), a.output, Ok(build_gkp18())),
        };
    let inputs = Inputs {
        family: Some(name.to_string()),
        params: Some(params),
        code_file: Some(output.display().to_string()),
        ..Default::default()
    };
    let code = match built {
        Ok(c) => c,
        Err(e) => return error_report("generate", inputs, e, start),
    };
    let text = codefile::write_code(&code);
    if let Err(e) = std::fs::write(&output, text) {
        return error_report("generate", inputs, Error::from(e), start);
    }
    let outcome = Outcome::Generate {
        family: name.to_string(),
        output_file: output.display().to_string(),
    };
    (
        finish("generate", inputs, Some(CodeSummary::of(&code, None)), outcome, start),
        0,
    )
}

/// Registry name first, then a generator-matrix file path over Z_2.
fn resolve_classical(spec: &str) -> hybridstab::Result<LinearCode> {
    match classical_registry(spec) {
        Ok(c) => Ok(c),
        Err(registry_err) => {
            let path = PathBuf::from(spec);
            if path.exists() {
                let text = std::fs::read_to_string(&path)?;
                let rows = codefile::parse_matrix_file(&text)?;
                let len = rows.first().map(|r| r.len()).unwrap_or(0);
                LinearCode::new(rows, 2, len)
            } else {
                Err(registry_err)
            }
        }
    }
}

fn load_code(path: &PathBuf) -> hybridstab::Result<HybridCode> {
    let text = std::fs::read_to_string(path)?;
    codefile::parse_code(&text)
}

fn finish(
    command: &str,
    inputs: Inputs,
    code: Option<CodeSummary>,
    result: Outcome,
    start: Instant,
) -> Report {
    Report {
        command: command.to_string(),
        inputs,
        code,
        result,
        timings_ms: Timings {
            total: start.elapsed().as_millis(),
        },
    }
}

fn error_report(command: &str, inputs: Inputs, err: Error, start: Instant) -> (Report, i32) {
    let report = Report {
        command: command.to_string(),
        inputs,
        code: None,
        result: Outcome::Error {
            message: err.to_string(),
        },
        timings_ms: Timings {
            total: start.elapsed().as_millis(),
        },
    };
    (report, 2)
}
