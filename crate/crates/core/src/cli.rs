//! The `tileproof` command line.
//!
//! Exit codes: 0 success or claim holds, 1 negative result (distinct terms,
//! failing claim, invalid proof), 2 usage or input error, 3 search budget
//! exhausted.

use std::io::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::decision::{equal_exhaustive, find_swap_proof, Verdict};
use crate::formats::{decode_model, decode_script, encode_model, encode_script};
use crate::models::{
    check_axioms, enumerate_models, has_bicancellable_element, inverse_structure, is_cancellative,
    is_commutative, unit_report, verify_claims, Constraint, OrderLimit,
};
use crate::render::{render_ascii, render_svg, RenderOptions};
use crate::rewrite::{central_swap_script, replay, ProofScript};
use crate::term::{format_term, parse_term, Label, Path, Term};

/// Environment variable capping the model enumeration order.
pub const MAX_ORDER_VAR: &str = "TILEPROOF_MAX_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Negative = 1,
    UsageError = 2,
    BudgetExhausted = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub status: ExitStatus,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

#[derive(Parser)]
#[command(name = "tileproof", about = "Tiling calculus for double semigroups", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a term and print its canonical form.
    Parse { term: String },
    /// Draw the tiling of a term.
    Render {
        term: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[arg(long)]
        width: Option<usize>,
        #[arg(long)]
        height: Option<usize>,
        /// Leave labels starting with `_` blank.
        #[arg(long)]
        named_only: bool,
    },
    /// Replay a proof script (`-` reads stdin).
    VerifyProof {
        script: String,
        /// Also require the final term to equal this one.
        #[arg(long)]
        expect_final: Option<String>,
    },
    /// Write the certificate swapping the two upper middle tiles of a 4x4 grid.
    EmitCentralSwap {
        /// Sixteen labels: the twelve border cells in reading order, then a b c d.
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<String>>,
        #[arg(short = 'o', long)]
        output: Option<String>,
    },
    /// Search for a proof exchanging two leaves.
    ProveSwap {
        term: String,
        path1: String,
        path2: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Decide equality of two terms.
    Equal {
        term1: String,
        term2: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Print the certificate as JSON when equal.
        #[arg(long)]
        script: bool,
    },
    /// Finite double semigroups.
    Models {
        #[command(subcommand)]
        command: ModelsCommand,
    },
    /// Theorem checks over enumerated models.
    Claims {
        #[command(subcommand)]
        command: ClaimsCommand,
    },
}

#[derive(Subcommand)]
enum ModelsCommand {
    /// Print every labeled model of the given order, one JSON document per line.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long = "constraint", value_parser = parse_constraint)]
        constraints: Vec<Constraint>,
    },
    /// Check the axioms and predicates of a model file (`-` reads stdin).
    Check { model: String },
}

#[derive(Subcommand)]
enum ClaimsCommand {
    Verify {
        #[arg(long)]
        max_order: usize,
    },
}

fn parse_constraint(s: &str) -> Result<Constraint, String> {
    Constraint::parse(s).ok_or_else(|| {
        format!("unknown constraint {s:?} (expected commutative, cancellative, inverse or unital)")
    })
}

struct Io<'a> {
    stdin: &'a [u8],
    out: Vec<u8>,
    err: Vec<u8>,
    max_order: Option<String>,
}

type Step = Result<ExitStatus, String>;

impl Io<'_> {
    fn read(&self, name: &str) -> Result<Vec<u8>, String> {
        if name == "-" {
            Ok(self.stdin.to_vec())
        } else {
            std::fs::read(name).map_err(|e| format!("cannot read {name}: {e}"))
        }
    }

    fn limit(&self) -> Result<OrderLimit, String> {
        match &self.max_order {
            None => Ok(OrderLimit::default()),
            Some(raw) => raw
                .trim()
                .parse::<usize>()
                .ok()
                .and_then(|n| OrderLimit::new(n).ok())
                .ok_or_else(|| format!("{MAX_ORDER_VAR}={raw:?} must be an integer in 1..=4")),
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run(argv: &[String], stdin: &[u8]) -> Outcome {
    run_with_env(argv, stdin, std::env::var(MAX_ORDER_VAR).ok())
}

/// [`run`] with the order cap passed explicitly instead of read from the environment.
pub fn run_with_env(argv: &[String], stdin: &[u8], max_order: Option<String>) -> Outcome {
    let mut io = Io {
        stdin,
        out: Vec::new(),
        err: Vec::new(),
        max_order,
    };
    let status = match Cli::try_parse_from(argv) {
        Ok(cli) => match dispatch(cli.command, &mut io) {
            Ok(status) => status,
            Err(message) => {
                let _ = writeln!(io.err, "error: {message}");
                ExitStatus::UsageError
            }
        },
        Err(e) => {
            let rendered = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    io.out.extend_from_slice(rendered.as_bytes());
                    ExitStatus::Success
                }
                _ => {
                    io.err.extend_from_slice(rendered.as_bytes());
                    ExitStatus::UsageError
                }
            }
        }
    };
    Outcome {
        status,
        stdout: io.out,
        stderr: io.err,
    }
}

fn term_arg(text: &str) -> Result<Term, String> {
    parse_term(text).map_err(|e| format!("{text:?}: {e}"))
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Step {
    match command {
        Command::Parse { term } => {
            let t = term_arg(&term)?;
            let _ = writeln!(io.out, "{}", format_term(&t));
            Ok(ExitStatus::Success)
        }
        Command::Render {
            term,
            format,
            width,
            height,
            named_only,
        } => {
            let t = term_arg(&term)?;
            let (dw, dh) = match format {
                Format::Ascii => (80, 40),
                Format::Svg => (400, 400),
            };
            let mut opts = RenderOptions::new(width.unwrap_or(dw), height.unwrap_or(dh))
                .map_err(|e| e.to_string())?;
            if named_only {
                opts = opts.named_only();
            }
            match format {
                Format::Ascii => {
                    let text = render_ascii(&t, &opts).map_err(|e| e.to_string())?;
                    io.out.extend_from_slice(text.as_bytes());
                }
                Format::Svg => io.out.extend_from_slice(&render_svg(&t, &opts)),
            }
            Ok(ExitStatus::Success)
        }
        Command::VerifyProof { script, expect_final } => verify_proof(io, &script, expect_final.as_deref()),
        Command::EmitCentralSwap { labels, output } => {
            let names = labels.unwrap_or_else(default_central_labels);
            if names.len() != 16 {
                return Err(format!("--labels needs 16 comma-separated names, got {}", names.len()));
            }
            let labels = names
                .iter()
                .map(|n| Label::new(n).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            let border: [Label; 12] = std::array::from_fn(|i| labels[i].clone());
            let script = central_swap_script(&border, &labels[12], &labels[13], &labels[14], &labels[15]);
            let bytes = encode_script(&script);
            match output {
                Some(path) if path != "-" => {
                    std::fs::write(&path, &bytes).map_err(|e| format!("cannot write {path}: {e}"))?;
                    let _ = writeln!(io.err, "wrote {} moves to {path}", script.moves.len());
                }
                _ => io.out.extend_from_slice(&bytes),
            }
            Ok(ExitStatus::Success)
        }
        Command::ProveSwap {
            term,
            path1,
            path2,
            budget,
        } => {
            let t = term_arg(&term)?;
            let p1 = Path::parse(&path1).map_err(|e| e.to_string())?;
            let p2 = Path::parse(&path2).map_err(|e| e.to_string())?;
            let (_, verdict) = find_swap_proof(&t, &p1, &p2, budget.max(1)).map_err(|e| e.to_string())?;
            Ok(report_verdict(io, verdict, true))
        }
        Command::Equal {
            term1,
            term2,
            budget,
            script,
        } => {
            let t1 = term_arg(&term1)?;
            let t2 = term_arg(&term2)?;
            let verdict = equal_exhaustive(&t1, &t2, budget.max(1));
            Ok(report_verdict(io, verdict, script))
        }
        Command::Models { command } => match command {
            ModelsCommand::Enumerate { order, constraints } => {
                let limit = io.limit()?;
                let stream = enumerate_models(order, &constraints, limit).map_err(|e| e.to_string())?;
                let mut count = 0usize;
                for m in stream {
                    io.out.extend_from_slice(&encode_model(&m));
                    count += 1;
                }
                let _ = writeln!(io.err, "{count} models of order {order}");
                Ok(ExitStatus::Success)
            }
            ModelsCommand::Check { model } => check_model(io, &model),
        },
        Command::Claims {
            command: ClaimsCommand::Verify { max_order },
        } => {
            let limit = io.limit()?;
            let report = verify_claims(max_order, limit).map_err(|e| e.to_string())?;
            let mut json = serde_json::to_vec_pretty(&report).expect("report serializes");
            json.push(b'\n');
            io.out.extend_from_slice(&json);
            for claim in &report.claims {
                let _ = writeln!(
                    io.err,
                    "{} {:<2} {} ({} instances)",
                    if claim.passed { "PASS" } else { "FAIL" },
                    claim.id,
                    claim.statement,
                    claim.instances
                );
            }
            Ok(if report.all_passed {
                ExitStatus::Success
            } else {
                ExitStatus::Negative
            })
        }
    }
}

fn default_central_labels() -> Vec<String> {
    (1..=12)
        .map(|i| format!("_{i}"))
        .chain(["a", "b", "c", "d"].map(String::from))
        .collect()
}

fn report_verdict(io: &mut Io<'_>, verdict: Verdict, print_script: bool) -> ExitStatus {
    match verdict {
        Verdict::Equal(script) => {
            let _ = writeln!(io.out, "Equal ({} moves)", script.moves.len());
            if print_script {
                io.out.extend_from_slice(&encode_script(&script));
            }
            ExitStatus::Success
        }
        Verdict::Distinct { closure_size } => {
            let _ = writeln!(io.out, "Distinct (closure size {closure_size})");
            ExitStatus::Negative
        }
        Verdict::Unknown { explored, budget } => {
            let _ = writeln!(io.out, "Unknown (explored {explored}, budget {budget})");
            ExitStatus::BudgetExhausted
        }
    }
}

fn verify_proof(io: &mut Io<'_>, file: &str, expect_final: Option<&str>) -> Step {
    let bytes = io.read(file)?;
    let script: ProofScript = decode_script(&bytes).map_err(|e| format!("{file}: {e}"))?;
    let expected = expect_final.map(term_arg).transpose()?;
    let trajectory = match replay(&script) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(io.out, "INVALID {e}");
            return Ok(ExitStatus::Negative);
        }
    };
    let last = trajectory.last().expect("trajectory holds the start");
    let _ = writeln!(io.out, "start: {}", format_term(&script.start));
    let _ = writeln!(io.out, "moves: {}", script.moves.len());
    let mut checkpoints: Vec<_> = script.checkpoints.iter().collect();
    checkpoints.sort_by_key(|(name, &at)| (at, (*name).clone()));
    for (name, &at) in checkpoints {
        let _ = writeln!(io.out, "checkpoint {name} after {at} moves: {}", format_term(&trajectory[at]));
    }
    let _ = writeln!(io.out, "final: {}", format_term(last));
    if let Some(expected) = expected {
        if &expected != last {
            let _ = writeln!(io.out, "MISMATCH final term differs from {}", format_term(&expected));
            return Ok(ExitStatus::Negative);
        }
    }
    let _ = writeln!(io.out, "VALID");
    Ok(ExitStatus::Success)
}

#[derive(serde::Serialize)]
struct ModelCheck {
    axioms: crate::models::AxiomReport,
    double_semigroup: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    commutativity: Option<crate::models::Commutativity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cancellative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bicancellable_element: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse: Option<Option<crate::models::InverseStructure>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    units: Option<crate::models::Units>,
}

fn check_model(io: &mut Io<'_>, file: &str) -> Step {
    let bytes = io.read(file)?;
    let m = decode_model(&bytes).map_err(|e| format!("{file}: {e}"))?;
    let axioms = check_axioms(&m);
    let ok = axioms.passes();
    let report = if ok {
        ModelCheck {
            axioms,
            double_semigroup: true,
            commutativity: is_commutative(&m).ok(),
            cancellative: is_cancellative(&m).ok(),
            bicancellable_element: has_bicancellable_element(&m).ok(),
            inverse: Some(inverse_structure(&m).map_err(|e| e.to_string())?),
            units: unit_report(&m).ok(),
        }
    } else {
        ModelCheck {
            axioms,
            double_semigroup: false,
            commutativity: None,
            cancellative: None,
            bicancellable_element: None,
            inverse: None,
            units: None,
        }
    };
    let mut json = serde_json::to_vec_pretty(&report).expect("report serializes");
    json.push(b'\n');
    io.out.extend_from_slice(&json);
    Ok(if ok { ExitStatus::Success } else { ExitStatus::Negative })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        let mut argv = vec!["tileproof".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        run_with_env(&argv, b"", None)
    }

    #[test]
    fn parse_prints_canonical_form() {
        let o = call(&["parse", "(a|b)|c / d"]);
        assert_eq!(o.status, ExitStatus::Success);
        assert_eq!(o.stdout, b"(a|b|c)/d\n");
    }

    #[test]
    fn bad_input_is_usage_error() {
        assert_eq!(call(&["parse", "a|"]).status, ExitStatus::UsageError);
        assert_eq!(call(&["frobnicate"]).status, ExitStatus::UsageError);
        assert_eq!(call(&["equal", "a"]).status, ExitStatus::UsageError);
        assert!(!call(&["frobnicate"]).stderr.is_empty());
    }

    #[test]
    fn equal_exit_codes() {
        let o = call(&["equal", "(a|b)/(c|d)", "(b|a)/(c|d)", "--budget", "1000"]);
        assert_eq!(o.status, ExitStatus::Negative);
        assert_eq!(o.stdout, b"Distinct (closure size 2)\n");
        let o = call(&["equal", "(a|b)/(c|d)", "(a/c)|(b/d)"]);
        assert_eq!(o.status, ExitStatus::Success);
        let o = call(&["equal", "[a b c; d e f; g h i]", "(a/d/g)|(b/e/h)|(c/f/i)", "--budget", "3"]);
        assert_eq!(o.status, ExitStatus::BudgetExhausted);
    }

    #[test]
    fn order_cap_from_environment() {
        let argv: Vec<String> = ["tileproof", "models", "enumerate", "--order", "2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(run_with_env(&argv, b"", Some("1".into())).status, ExitStatus::UsageError);
        assert_eq!(run_with_env(&argv, b"", Some("9".into())).status, ExitStatus::UsageError);
        let o = run_with_env(&argv, b"", Some("2".into()));
        assert_eq!(o.status, ExitStatus::Success);
        assert_eq!(o.stdout.iter().filter(|&&b| b == b'\n').count(), 46);
    }

    #[test]
    fn default_cap_is_three() {
        assert_eq!(crate::models::DEFAULT_MAX_ORDER, 3);
        assert_eq!(call(&["models", "enumerate", "--order", "4"]).status, ExitStatus::UsageError);
    }
}
