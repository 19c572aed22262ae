use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monoidal::expr::{run, CheckKind, CliConfig, Command, OutputFormat, RingChoice};

/// Exact polynomial and power-series arithmetic.
#[derive(Debug, Parser)]
#[command(name = "monoidal", version)]
struct Args {
    /// Coefficient ring: int, rat, gauss or mod:n (n >= 2).
    #[arg(long, global = true, default_value = "rat")]
    ring: RingChoice,

    /// Series are printed through total degree < N.
    #[arg(long, global = true, env = "MONOIDAL_DEFAULT_ORDER", default_value_t = 10)]
    order: u64,

    /// Declared variables, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Vec<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Reject variables not listed in --vars.
    #[arg(long, global = true)]
    strict_vars: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Evaluate an expression.
    Eval { expr: String },
    /// Print a named series: geom_plus, geom_minus, exp, exp:<a>, sin, cos.
    Series { name: String },
    /// Print the truncation tower f_1, ..., f_p of an expression.
    Tower {
        expr: String,
        #[arg(long, default_value_t = 5)]
        levels: u64,
    },
    /// Run a law-checking suite.
    Check { suite: Suite },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Euler,
    Derivlaws,
    Completion,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = CliConfig {
        ring: args.ring,
        order: args.order,
        vars: args.vars,
        format: match args.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        strict_vars: args.strict_vars,
    };
    let command = match args.command {
        Cmd::Eval { expr } => Command::Eval(expr),
        Cmd::Series { name } => Command::Series(name),
        Cmd::Tower { expr, levels } => Command::Tower { expr, levels },
        Cmd::Check { suite } => Command::Check(match suite {
            Suite::Euler => CheckKind::Euler,
            Suite::Derivlaws => CheckKind::DerivLaws,
            Suite::Completion => CheckKind::Completion,
        }),
    };
    match run(&config, &command) {
        Ok(out) => {
            println!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
