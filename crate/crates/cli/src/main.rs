//! `pointext VERB [--input FILE|-] [--output FILE|-] [--cap N] [--modulus M] [--seed S]`
//!
//! Reads one JSON document, writes one JSON report. Exit status: 0 on success, 2 when
//! the input is well formed but the requested object does not exist (a nonvanishing
//! obstruction, a non-invertible correspondence, a failing selftest), 1 on input errors.

mod json;
mod verbs;

use std::io::{IsTerminal, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use pointext_core::metric::lagrangian::DEFAULT_CAP;
use pointext_core::selftest::DEFAULT_SEED;
use serde_json::{json, Value};

use verbs::{Opts, VerbError, VERBS};

#[derive(Parser)]
#[command(name = "pointext", version, about = "Exact computations for pointed fusion categories and their extensions")]
struct Args {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(VERBS))]
    verb: String,
    /// Input document; `-` is stdin. Defaults to stdin (optional for selftest).
    #[arg(long)]
    input: Option<String>,
    /// Output path; `-` is stdout.
    #[arg(long, default_value = "-")]
    output: String,
    /// Size limit for enumerations (Lagrangians, isometries, subgroups).
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Coefficient modulus `m` for `(1/m)Z/Z` when a module is not given.
    #[arg(long)]
    modulus: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

fn read_input(args: &Args) -> std::io::Result<String> {
    let mut s = String::new();
    match args.input.as_deref() {
        None if args.verb == "selftest" && std::io::stdin().is_terminal() => {}
        None | Some("-") => {
            std::io::stdin().read_to_string(&mut s)?;
        }
        Some(path) => s = std::fs::read_to_string(path)?,
    }
    Ok(s)
}

fn error(code: &str, message: impl ToString) -> Value {
    json!({ "error": { "code": code, "message": message.to_string() } })
}

fn execute(args: &Args) -> (Value, u8) {
    let text = match read_input(args) {
        Ok(t) => t,
        Err(e) => return (error("io", e), 1),
    };
    let input: Value = if text.trim().is_empty() {
        Value::Null
    } else {
        match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => return (error("malformed_json", e), 1),
        }
    };
    if let Some(m) = args.modulus {
        if m <= 0 {
            return (error("invalid_data", "--modulus must be positive"), 1);
        }
    }
    let opts = Opts { cap: args.cap, modulus: args.modulus, seed: args.seed };
    match verbs::run(&args.verb, input, &opts) {
        Ok(o) => (o.report, if o.infeasible { 2 } else { 0 }),
        Err(VerbError::Json(e)) => (error("invalid_input", e), 1),
        Err(VerbError::Core(e)) => (error(e.code(), &e), if e.is_infeasible() { 2 } else { 1 }),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (report, code) = execute(&args);
    let mut text = serde_json::to_string_pretty(&report).expect("JSON values serialize");
    text.push('\n');
    let written = match args.output.as_str() {
        "-" => std::io::stdout().write_all(text.as_bytes()),
        path => std::fs::write(path, text),
    };
    if let Err(e) = written {
        eprintln!("pointext: cannot write report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
