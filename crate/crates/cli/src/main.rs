use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use ncdiff::connection::{Connection, ConnectionParams};
use ncdiff::expr::{evaluate, Value};
use ncdiff::sphere::{sphere_dim, SphereParams};
use ncdiff::suite::{run_suite, Config, SphereCase, SuiteName};
use ncdiff::{Error, ScalarQ, TorusElement};

#[derive(Parser)]
#[command(name = "ncdiff", version, about = "Exact noncommutative differential geometry checks")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Substitute this rational value for q in `eval` and `dim` output.
    #[arg(long, global = true, value_name = "RATIONAL")]
    eval_q: Option<String>,
    /// Record wall-clock milliseconds per check (reports are no longer byte-stable).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = ["torus", "sphere", "flows", "all"])]
        suite: String,
        #[command(flatten)]
        params: Params,
        /// Force the parameters of a sphere compatibility case.
        #[arg(long, value_parser = ["a", "b", "c", "d"])]
        case: Option<String>,
        /// Truncation order of the series.
        #[arg(long, default_value_t = ncdiff::flows::DEFAULT_ORDER)]
        order: usize,
        /// Random parameter sets per claim.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Evaluate an expression and print its normal form.
    Eval { expr: String },
    /// Print the differential dimension.
    Dim {
        #[arg(value_parser = ["torus", "sphere"])]
        space: String,
        #[command(flatten)]
        params: Params,
    },
}

/// Connection and sphere parameters, each a scalar expression in q.
#[derive(Args)]
struct Params {
    #[arg(long)]
    ruu: Option<String>,
    #[arg(long)]
    rvu: Option<String>,
    #[arg(long)]
    ruv: Option<String>,
    #[arg(long)]
    rvv: Option<String>,
    #[arg(long)]
    svv: Option<String>,
    #[arg(long)]
    svu: Option<String>,
    #[arg(long)]
    suv: Option<String>,
    #[arg(long)]
    suu: Option<String>,
    #[arg(long)]
    h111: Option<String>,
    #[arg(long)]
    h121: Option<String>,
    #[arg(long)]
    h211: Option<String>,
    #[arg(long)]
    h221: Option<String>,
}

fn scalar(name: &str, src: &str) -> Result<ScalarQ, Error> {
    evaluate(src)?
        .as_scalar()
        .ok_or_else(|| Error::Config(format!("--{name} must be a scalar expression in q, got {src}")))
}

impl Params {
    fn connection(&self) -> Result<ConnectionParams, Error> {
        let mut p = ConnectionParams::zero();
        let given = [&self.ruu, &self.rvu, &self.ruv, &self.rvv, &self.svv, &self.svu, &self.suv, &self.suu];
        for (name, v) in ConnectionParams::NAMES.iter().zip(given) {
            if let Some(src) = v {
                p.set(name, scalar(name, src)?)?;
            }
        }
        Ok(p)
    }

    fn sphere(&self) -> Result<(SphereParams, bool), Error> {
        let mut h = SphereParams::zero();
        let mut any = false;
        for (name, v) in [("h111", &self.h111), ("h121", &self.h121), ("h211", &self.h211), ("h221", &self.h221)] {
            if let Some(src) = v {
                h.set(name, scalar(name, src)?)?;
                any = true;
            }
        }
        Ok((h, any))
    }
}

fn parse_q(src: &Option<String>) -> Result<Option<BigRational>, Error> {
    src.as_ref()
        .map(|s| s.trim().parse::<BigRational>().map_err(|_| Error::Config(format!("--eval-q expects a rational, got {s}"))))
        .transpose()
}

fn emit_value(cli: &Cli, label: &str, v: &Value) -> Result<(), Error> {
    let at = match parse_q(&cli.eval_q)? {
        Some(q0) => Some((q0.to_string(), v.at_q(&q0)?.to_string())),
        None => None,
    };
    match cli.format {
        Format::Text => {
            println!("{v}");
            if let Some((q0, x)) = at {
                println!("at q = {q0}: {x}");
            }
        }
        Format::Json => {
            let mut obj = json!({ label: v.to_string() });
            if let Some((q0, x)) = at {
                obj["q"] = json!(q0);
                obj["at_q"] = json!(x);
            }
            println!("{}", serde_json::to_string_pretty(&obj).expect("json"));
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Verify { suite, params, case, order, samples } => {
            let (sphere, h_given) = params.sphere()?;
            let case = case.as_deref().map(SphereCase::parse).transpose()?;
            let cfg = Config {
                params: params.connection()?,
                sphere,
                case,
                sweep: !h_given && case.is_none(),
                order: *order,
                seed: cli.seed,
                samples: *samples,
                timings: cli.timings,
                ..Config::default()
            };
            let report = run_suite(SuiteName::parse(suite)?, &cfg)?;
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(report.passed())
        }
        Command::Eval { expr } => {
            emit_value(cli, "value", &evaluate(expr)?)?;
            Ok(true)
        }
        Command::Dim { space, params } => {
            let v = if space == "torus" {
                Value::Element(Connection::new(params.connection()?)?.dim()?)
            } else {
                Value::Element(TorusElement::scalar(sphere_dim(&params.sphere()?.0)?))
            };
            emit_value(cli, "dim", &v)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
