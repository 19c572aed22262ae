//! A small expression language over polynomials and power series.

mod eval;
mod parse;
mod run;

pub use eval::{EvalError, Evaluator, ExprRing, Value};
pub use parse::{parse, Expr, SeriesFn, SyntaxError};
pub use run::{check_report, run, CheckKind, CliConfig, CliError, Command, OutputFormat, Output, RingChoice};
