use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use h6_core::codes::h6_code;
use h6_core::hadamard_aut::{named_group_order, NamedGroup};
use h6_core::outer_s6::{build_outer, s6_generators};
use h6_core::perm::parse_cycles;
use h6_core::report::Report;
use h6_core::splitquat_rep::DEFAULT_SEED;
use h6_core::verify::{run_suite, SUITES};

#[derive(Parser)]
#[command(
    name = "h6",
    version,
    about = "Exact checks on the order-6 complex Hadamard matrix"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exit status 1 if any clause fails.
    Verify {
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Human-readable output (the default).
        #[arg(long)]
        text: bool,
        /// Run a single suite.
        #[arg(long, value_parser = SUITES)]
        only: Option<String>,
        /// Seed for the randomized word checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// The outer automorphism of S6.
    Outer {
        #[command(subcommand)]
        action: OuterAction,
    },
    /// Print the exact order of a named group.
    Order {
        #[arg(long, value_parser = ["X", "X0", "N", "Y", "autstar", "aut"])]
        group: String,
    },
    /// Parameters and weight distribution of the hexacode, as JSON.
    Hexacode,
}

#[derive(Subcommand)]
enum OuterAction {
    /// Image of a permutation of 1..6 given in cycle notation.
    Apply { cycles: String },
    /// The full 720-entry table as JSON.
    Table,
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: impl std::fmt::Display) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_verify(json_out: bool, only: Option<String>, seed: u64) -> ExitCode {
    let names: Vec<&str> = match &only {
        Some(name) => vec![name.as_str()],
        None => SUITES.to_vec(),
    };
    let mut combined = Report::new(only.as_deref().unwrap_or("all"));
    for name in names {
        match run_suite(name, seed) {
            Ok(report) => {
                if !json_out {
                    let _ = write!(std::io::stdout().lock(), "{report}");
                }
                combined.extend(report);
            }
            Err(e) => return usage_error(e),
        }
    }
    if json_out {
        emit(serde_json::to_string_pretty(&combined).expect("report serializes"));
    } else {
        emit(format_args!(
            "overall: {}",
            if combined.pass { "PASS" } else { "FAIL" }
        ));
    }
    if combined.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_outer(action: OuterAction) -> ExitCode {
    let sigma = match build_outer() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match action {
        OuterAction::Apply { cycles } => match parse_cycles(&cycles, 6) {
            Ok(g) => {
                emit(sigma.apply(&g).expect("table covers S6"));
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        OuterAction::Table => {
            let mut generator_images = serde_json::Map::new();
            for g in s6_generators().iter().chain(std::iter::once(
                &parse_cycles("(2,3,4,5,6)", 6).expect("static"),
            )) {
                let image = sigma.apply(g).expect("table covers S6");
                generator_images.insert(g.to_string(), json!(image.to_string()));
            }
            let table: Vec<[String; 2]> = sigma
                .entries()
                .into_iter()
                .map(|(g, s)| [g.to_string(), s.to_string()])
                .collect();
            let out = json!({ "generator_images": generator_images, "table": table });
            emit(serde_json::to_string_pretty(&out).expect("json"));
            ExitCode::SUCCESS
        }
    }
}

fn cmd_order(group: &str) -> ExitCode {
    match group.parse::<NamedGroup>() {
        Ok(g) => {
            emit(named_group_order(g));
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_hexacode() -> ExitCode {
    let code = h6_code();
    let d = match code.min_distance() {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let punctured: Vec<_> = (1..=code.length())
        .map(|c| {
            let p = code.puncture(c).expect("coordinate in range");
            json!({
                "coordinate": c,
                "length": p.length(),
                "dimension": p.dimension(),
                "min_distance": p.min_distance().ok(),
            })
        })
        .collect();
    let out = json!({
        "length": code.length(),
        "dimension": code.dimension(),
        "min_distance": d,
        "weight_distribution": code.weight_distribution(),
        "punctured": punctured,
    });
    emit(serde_json::to_string_pretty(&out).expect("json"));
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            json, only, seed, ..
        } => cmd_verify(json, only, seed),
        Command::Outer { action } => cmd_outer(action),
        Command::Order { group } => cmd_order(&group),
        Command::Hexacode => cmd_hexacode(),
    }
}
