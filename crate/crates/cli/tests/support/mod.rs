//! Golden cases shared by the golden and acceptance test targets.

#![allow(dead_code)]

use std::process::{Command, Output};

pub struct Case {
    pub args: &'static [&'static str],
    pub stdout: &'static str,
    pub stderr: &'static str,
    pub code: i32,
}

pub const fn ok(args: &'static [&'static str], stdout: &'static str) -> Case {
    Case { args, stdout, stderr: "", code: 0 }
}

pub const fn err(args: &'static [&'static str], stderr: &'static str, code: i32) -> Case {
    Case { args, stdout: "", stderr, code }
}

pub const CASES: &[Case] = &[
    ok(&["--ring", "rat", "--order", "6", "eval", "invert(1+x)"], "1 - x + x^2 - x^3 + x^4 - x^5 + O(x^6)\n"),
    ok(&["--ring", "rat", "--order", "5", "eval", "sin(x)^2 + cos(x)^2"], "1 + O(x^5)\n"),
    err(
        &["--ring", "mod:5", "eval", "exp(x)"],
        "error: characteristic is not zero (5); series with factorial denominators need characteristic 0\n",
        1,
    ),
    ok(&["--ring", "int", "eval", "(1+x)*(1-x+x^2-x^3)"], "1 - x^4\n"),
    ok(&["--order", "4", "eval", "geom(x)"], "1 + x + x^2 + x^3 + O(x^4)\n"),
    ok(&["--order", "8", "eval", "sin(x)"], "x - 1/6*x^3 + 1/120*x^5 - 1/5040*x^7 + O(x^8)\n"),
    ok(&["--order", "7", "eval", "cos(x)"], "1 - 1/2*x^2 + 1/24*x^4 - 1/720*x^6 + O(x^7)\n"),
    ok(
        &["--ring", "gauss", "--order", "5", "eval", "exp(i*x)"],
        "1 + i*x - 1/2*x^2 - 1/6*i*x^3 + 1/24*x^4 + O(x^5)\n",
    ),
    ok(&["--order", "4", "eval", "deriv(exp(2*x), x, 3)"], "8 + 16*x + 16*x^2 + 32/3*x^3 + O(x^4)\n"),
    ok(&["--ring", "int", "eval", "deriv(x^3*y + y^2, x, 2)"], "6*x*y\n"),
    ok(&["--ring", "mod:6", "eval", "(2*x)*(3*x)"], "0\n"),
    ok(&["--ring", "mod:7", "eval", "(x+1)^7"], "1 + x^7\n"),
    ok(&["eval", "x/2 + 1/3"], "1/3 + 1/2*x\n"),
    ok(&["--ring", "int", "eval", "(x+y)^2"], "x^2 + 2*x*y + y^2\n"),
    ok(
        &["--order", "4", "eval", "invert(1 - x - y)"],
        "1 + x + y + x^2 + 2*x*y + y^2 + x^3 + 3*x^2*y + 3*x*y^2 + y^3 + O(deg 4)\n",
    ),
    ok(&["eval", "truncate(exp(x), 4)"], "1 + x + 1/2*x^2 + 1/6*x^3\n"),
    ok(&["--ring", "int", "tower", "1+x", "--levels", "3"], "1\n1 + x\n1 + x\n"),
    err(
        &["eval", "x^(-1)"],
        "error: syntax error at column 3: expected natural number, found \"(\"\n  x^(-1)\n    ^\n",
        2,
    ),
    ok(&["--order", "5", "series", "geom_plus"], "1 - x + x^2 - x^3 + x^4 + O(x^5)\n"),
    ok(&["--vars", "t", "--order", "4", "series", "exp"], "1 + t + 1/2*t^2 + 1/6*t^3 + O(t^4)\n"),
    err(&["eval", "invert(x)"], "error: constant term 0 is not a unit\n", 1),
    ok(
        &["--ring", "int", "--format", "json", "eval", "2*x - 1"],
        "{\"monoid\":\"exponents\",\"ring\":\"int\",\"terms\":[{\"coef\":\"-1\",\"elem\":[]},{\"coef\":\"2\",\"elem\":[{\"exp\":1,\"var\":\"x\"}]}]}\n",
    ),
    err(
        &["eval", "1 + "],
        "error: syntax error at column 5: expected one of number, identifier, \"(\", \"-\", found end of input\n  1 + \n      ^\n",
        2,
    ),
    err(&["--ring", "int", "eval", "1/2"], "error: 2 is not a unit\n", 1),
    err(
        &["--strict-vars", "--vars", "x", "eval", "x + y"],
        "error: undeclared variable y (declare it with --vars or drop --strict-vars)\n",
        1,
    ),
];

pub fn binary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoidal"))
        .args(args)
        .env_remove("MONOIDAL_DEFAULT_ORDER")
        .output()
        .expect("binary runs")
}

/// Runs every golden case and returns a description of each mismatch.
pub fn mismatches() -> Vec<String> {
    let mut out = Vec::new();
    for case in CASES {
        let run = binary(case.args);
        let got = (
            String::from_utf8_lossy(&run.stdout).into_owned(),
            String::from_utf8_lossy(&run.stderr).into_owned(),
            run.status.code().unwrap_or(-1),
        );
        let want = (case.stdout.to_string(), case.stderr.to_string(), case.code);
        if got != want {
            out.push(format!("{:?}\n  want {want:?}\n  got  {got:?}", case.args));
        }
    }
    out
}

/// Error columns for malformed inputs.
pub const ERROR_POSITIONS: &[(&str, usize)] = &[
    ("x^(-1)", 3),
    ("1 + ", 5),
    ("x y", 3),
    ("exp x", 5),
    ("(1 + x", 7),
    ("deriv(x, 2, 1)", 10),
];
