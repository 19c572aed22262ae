//! The commands behind the `monoidal` binary. Everything here returns the
//! exact bytes to print, so the binary only parses flags and writes output.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;
use thiserror::Error;

use super::eval::{EvalError, Evaluator, ExprRing, Value};
use super::parse::{parse, SyntaxError};
use crate::completion::{check_remainder_ideal, quotient_iso_check, tower_of, CompletionError};
use crate::report::Report;
use crate::ring::{GaussianRational, GaussianRationals, Integers, ModularIntegers, Rationals};
use crate::sampling;
use crate::series::{derivative_laws_suite, euler_suite, sin_cos_derivative_pattern, PowerSeries, SeriesKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingChoice {
    Int,
    Rat,
    Gauss,
    Mod(u64),
}

impl FromStr for RingChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "int" => Ok(Self::Int),
            "rat" => Ok(Self::Rat),
            "gauss" => Ok(Self::Gauss),
            _ => {
                let n = s
                    .strip_prefix("mod:")
                    .ok_or_else(|| format!("unknown ring {s:?}; expected int, rat, gauss or mod:n"))?;
                match n.parse::<u64>() {
                    Ok(n) if n >= 2 => Ok(Self::Mod(n)),
                    _ => Err(format!("bad modulus in {s:?}; mod:n needs an integer n >= 2")),
                }
            }
        }
    }
}

impl fmt::Display for RingChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Int => f.write_str("int"),
            Self::Rat => f.write_str("rat"),
            Self::Gauss => f.write_str("gauss"),
            Self::Mod(n) => write!(f, "mod:{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Euler,
    DerivLaws,
    Completion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Eval(String),
    /// `geom_plus`, `geom_minus`, `exp`, `exp:<a>`, `sin` or `cos`.
    Series(String),
    Tower { expr: String, levels: u64 },
    Check(CheckKind),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub ring: RingChoice,
    /// Series are printed through total degree `< order`.
    pub order: u64,
    pub vars: Vec<String>,
    pub format: OutputFormat,
    pub strict_vars: bool,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            ring: RingChoice::Rat,
            order: 10,
            vars: Vec::new(),
            format: OutputFormat::Text,
            strict_vars: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{error}\n  {input}\n  {caret}^", caret = " ".repeat(error.pos.saturating_sub(1)))]
    Syntax { error: SyntaxError, input: String },
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Completion(#[from] CompletionError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit code: 2 for bad input, 1 for evaluation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Syntax { .. } | Self::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// What a successful command prints. `success` is false when a check
/// suite ran but some law failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, success: true }
    }
}

fn parse_input(src: &str) -> Result<super::Expr, CliError> {
    parse(src).map_err(|error| CliError::Syntax {
        error,
        input: src.to_string(),
    })
}

pub fn run(config: &CliConfig, command: &Command) -> Result<Output, CliError> {
    if config.order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    if let Command::Check(kind) = command {
        return Ok(run_check(*kind, config));
    }
    match config.ring {
        RingChoice::Int => run_in(Integers, config, command),
        RingChoice::Rat => run_in(Rationals, config, command),
        RingChoice::Gauss => run_in(GaussianRationals, config, command),
        RingChoice::Mod(n) => {
            let ring = ModularIntegers::new(n).ok_or_else(|| CliError::Usage(format!("bad modulus {n}")))?;
            run_in(ring, config, command)
        }
    }
}

fn render<R: ExprRing>(ev: &Evaluator<R>, v: &Value<R>, config: &CliConfig) -> String {
    match config.format {
        OutputFormat::Text => ev.render(v, config.order),
        OutputFormat::Json => ev.to_json(v, config.order).to_string(),
    }
}

fn run_in<R: ExprRing>(ring: R, config: &CliConfig, command: &Command) -> Result<Output, CliError> {
    let ev = Evaluator::new(ring.clone(), &config.vars, config.strict_vars);
    match command {
        Command::Eval(src) => {
            let v = ev.eval(&parse_input(src)?)?;
            Ok(Output::ok(render(&ev, &v, config)))
        }
        Command::Series(name) => {
            let var = config.vars.first().map_or("x", String::as_str);
            let kind = match name.as_str() {
                "geom_plus" => SeriesKind::GeomPlus,
                "geom_minus" => SeriesKind::GeomMinus,
                "exp" => SeriesKind::Exp(ring.one()),
                "sin" => SeriesKind::Sin,
                "cos" => SeriesKind::Cos,
                other => match other.strip_prefix("exp:") {
                    Some(a) => SeriesKind::Exp(constant_of(&ev, a)?),
                    None => {
                        return Err(CliError::Usage(format!(
                            "unknown series {other:?}; expected geom_plus, geom_minus, exp, exp:<a>, sin or cos"
                        )))
                    }
                },
            };
            let s = PowerSeries::named(ring, kind, var).map_err(EvalError::from)?;
            Ok(Output::ok(render(&ev, &Value::Series(s), config)))
        }
        Command::Tower { expr, levels } => {
            if *levels == 0 {
                return Err(CliError::Usage("--levels must be at least 1".into()));
            }
            let v = ev.eval(&parse_input(expr)?)?;
            let tower = tower_of(&ev.to_series(&v));
            Ok(Output::ok(match config.format {
                OutputFormat::Text => tower.render_levels(*levels)?.join("\n"),
                OutputFormat::Json => tower.levels_to_json(*levels)?.to_string(),
            }))
        }
        Command::Check(_) => unreachable!("handled before ring dispatch"),
    }
}

fn constant_of<R: ExprRing>(ev: &Evaluator<R>, src: &str) -> Result<R::Elem, CliError> {
    let not_constant = || CliError::Usage(format!("exp:<a> needs a constant, got {src:?}"));
    match ev.eval(&parse_input(src)?)? {
        Value::Poly(f) if f.support().all(|m| m.is_identity()) => {
            Ok(ev.polynomials().coefficient(&f, &crate::monoid::ExponentVector::identity()))
        }
        _ => Err(not_constant()),
    }
}

const SUITE_SEED: u64 = 0x6d6f6e6f;

/// The built-in law suites. Samples are drawn from a fixed seed so output
/// is reproducible.
pub fn check_report(kind: CheckKind, order: u64) -> Report {
    let mut rng = StdRng::seed_from_u64(SUITE_SEED);
    match kind {
        CheckKind::Euler => euler_suite(GaussianRationals, GaussianRational::i(), order),
        CheckKind::DerivLaws => {
            let pairs: Vec<_> = (0..10)
                .map(|_| {
                    let mut poly = || {
                        let f = sampling::polynomial(&mut rng, &Rationals, &["x", "y"], 6, 6, |g| sampling::rational(g, 5));
                        PowerSeries::from_polynomial(Rationals, &f)
                    };
                    (poly(), poly())
                })
                .collect();
            let mut r = derivative_laws_suite(Rationals, &pairs, 6, order);
            r.extend(sin_cos_derivative_pattern(8, order));
            r
        }
        CheckKind::Completion => completion_report(&mut rng, order),
    }
}

fn completion_report(rng: &mut StdRng, order: u64) -> Report {
    let mut r = Report::new(format!("completion through level {order}"));
    let named: Vec<(&str, PowerSeries<Rationals>)> = [
        ("geom_plus", SeriesKind::GeomPlus),
        ("geom_minus", SeriesKind::GeomMinus),
        ("exp", SeriesKind::Exp(BigInt::from(1).into())),
        ("sin", SeriesKind::Sin),
        ("cos", SeriesKind::Cos),
    ]
    .into_iter()
    .map(|(n, k)| (n, PowerSeries::named(Rationals, k, "x").expect("rationals")))
    .collect();
    let mut failure = None;
    for (name, s) in &named {
        let back = tower_of(s).reconstruct(order);
        match back {
            Ok(b) if b.eq_through(s, order) => {}
            Ok(_) => failure = failure.or(Some(format!("{name} differs after round trip"))),
            Err(e) => failure = failure.or(Some(format!("{name}: {e}"))),
        }
    }
    r.record("named series survive tower round trip", failure);
    let mut failure = None;
    for i in 0..20 {
        let f = sampling::polynomial(rng, &Rationals, &["x", "y", "z"], 8, 8, |g| sampling::rational(g, 7));
        let s = PowerSeries::from_polynomial(Rationals, &f).with_vars(&["x", "y", "z"]);
        match tower_of(&s).reconstruct(9) {
            Ok(b) if b.eq_through(&s, 12) => {}
            _ => failure = failure.or(Some(format!("polynomial sample {i}"))),
        }
    }
    r.record("polynomials survive tower round trip", failure);
    let exp = &named[2].1;
    for p in 1..=order.min(6) {
        let sub = check_remainder_ideal(exp, p, 5);
        r.record(
            format!("exp - exp_{p} lies in J^{p}"),
            (!sub.all_passed()).then(|| sub.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join("; ")),
        );
    }
    let series: Vec<_> = named.iter().map(|(_, s)| s.clone()).collect();
    for p in 1..=6 {
        let sub = quotient_iso_check(&Rationals, p, &series, &[]);
        r.record(
            format!("R[x]/I^{p} = S/J^{p} on named series"),
            (!sub.all_passed()).then(|| sub.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join("; ")),
        );
    }
    r
}

fn run_check(kind: CheckKind, config: &CliConfig) -> Output {
    let report = check_report(kind, config.order);
    let text = match config.format {
        OutputFormat::Text => report.to_string().trim_end().to_string(),
        OutputFormat::Json => report.to_json().to_string(),
    };
    Output {
        text,
        success: report.all_passed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(ring: &str, order: u64, src: &str) -> Result<Output, CliError> {
        let config = CliConfig {
            ring: ring.parse().unwrap(),
            order,
            ..CliConfig::default()
        };
        run(&config, &Command::Eval(src.into()))
    }

    #[test]
    fn ring_choices() {
        assert_eq!("mod:7".parse::<RingChoice>(), Ok(RingChoice::Mod(7)));
        assert!("mod:1".parse::<RingChoice>().is_err());
        assert!("mod:x".parse::<RingChoice>().is_err());
        assert!("real".parse::<RingChoice>().is_err());
        assert_eq!(RingChoice::Mod(6).to_string(), "mod:6");
    }

    #[test]
    fn syntax_diagnostic_has_caret() {
        let e = eval("rat", 5, "x^(-1)").unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert_eq!(
            e.to_string(),
            "syntax error at column 3: expected natural number, found \"(\"\n  x^(-1)\n    ^"
        );
    }

    #[test]
    fn checks_pass() {
        for kind in [CheckKind::Euler, CheckKind::DerivLaws, CheckKind::Completion] {
            let out = run(&CliConfig { order: 8, ..CliConfig::default() }, &Command::Check(kind)).unwrap();
            assert!(out.success, "{}", out.text);
        }
    }
}
