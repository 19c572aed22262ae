//! Tokenizer and recursive-descent parser.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := primary ("^" NAT)?
//! primary := NAT | IDENT | IDENT "(" args ")" | "(" expr ")"
//! ```
//!
//! Function calls: `exp`, `sin`, `cos`, `geom` and `invert` take one
//! expression; `deriv(e, var, n)` and `truncate(e, p)` take naturals in their
//! trailing positions.

use std::fmt;

use num_bigint::BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesFn {
    Exp,
    Sin,
    Cos,
    Geom,
}

impl SeriesFn {
    pub fn name(self) -> &'static str {
        match self {
            Self::Exp => "exp",
            Self::Sin => "sin",
            Self::Cos => "cos",
            Self::Geom => "geom",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(BigUint),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
    Apply(SeriesFn, Box<Expr>),
    Deriv { expr: Box<Expr>, var: String, order: u64 },
    Invert(Box<Expr>),
    Truncate(Box<Expr>, u64),
}

const FUNCTIONS: [&str; 7] = ["cos", "deriv", "exp", "geom", "invert", "sin", "truncate"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    /// 1-based character column.
    pub pos: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at column {}: expected ", self.pos)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(String),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s}"),
            Tok::Sym(c) => format!("\"{c}\""),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Nat(chars[start - 1..i].iter().collect())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start - 1..i].iter().collect())));
        } else if "+-*/^(),".contains(c) {
            out.push((start, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(SyntaxError {
                pos: start,
                expected: vec!["an operator, number, identifier or parenthesis".into()],
                found: format!("{c:?}"),
            });
        }
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    /// Whether the last unary parsed ended in `^n`.
    after_power: bool,
}

fn quoted(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| format!("\"{s}\"")).collect()
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn error(&self, expected: Vec<String>) -> SyntaxError {
        let (pos, tok) = &self.toks[self.at];
        SyntaxError {
            pos: *pos,
            expected,
            found: tok.describe(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    /// Error for a token that cannot continue an expression, where `closers`
    /// are the tokens the enclosing construct accepts.
    fn continuation_error(&self, closers: &[&str]) -> SyntaxError {
        let mut exp = if self.after_power {
            quoted(&["+", "-", "*", "/"])
        } else {
            quoted(&["+", "-", "*", "/", "^"])
        };
        exp.extend(closers.iter().map(|c| c.to_string()));
        self.error(exp)
    }

    fn expect(&mut self, c: char, closers: &[&str]) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.continuation_error(closers))
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.primary()?;
        self.after_power = false;
        if self.eat('^') {
            let n = self.natural()?;
            self.after_power = true;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<u64, SyntaxError> {
        if let Tok::Nat(n) = self.peek() {
            if let Ok(v) = n.parse::<u64>() {
                self.at += 1;
                return Ok(v);
            }
        }
        Err(self.error(vec!["natural number".into()]))
    }

    fn identifier(&mut self) -> Result<String, SyntaxError> {
        if let Tok::Ident(s) = self.peek() {
            let s = s.clone();
            self.at += 1;
            return Ok(s);
        }
        Err(self.error(vec!["identifier".into()]))
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.at += 1;
                Ok(Expr::Num(n.parse().expect("lexed digits")))
            }
            Tok::Ident(name) => {
                self.at += 1;
                if FUNCTIONS.contains(&name.as_str()) {
                    self.call(&name)
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')', &["\")\""])?;
                Ok(e)
            }
            _ => Err(self.error(vec![
                "number".into(),
                "identifier".into(),
                "\"(\"".into(),
                "\"-\"".into(),
            ])),
        }
    }

    fn call(&mut self, name: &str) -> Result<Expr, SyntaxError> {
        if !self.eat('(') {
            return Err(self.error(quoted(&["("])));
        }
        let arg = self.expr()?;
        let e = match name {
            "deriv" => {
                self.expect(',', &["\",\""])?;
                let var = self.identifier()?;
                if !self.eat(',') {
                    return Err(self.error(quoted(&[","])));
                }
                let order = self.natural()?;
                Expr::Deriv {
                    expr: Box::new(arg),
                    var,
                    order,
                }
            }
            "truncate" => {
                self.expect(',', &["\",\""])?;
                Expr::Truncate(Box::new(arg), self.natural()?)
            }
            "invert" => Expr::Invert(Box::new(arg)),
            "exp" => Expr::Apply(SeriesFn::Exp, Box::new(arg)),
            "sin" => Expr::Apply(SeriesFn::Sin, Box::new(arg)),
            "cos" => Expr::Apply(SeriesFn::Cos, Box::new(arg)),
            "geom" => Expr::Apply(SeriesFn::Geom, Box::new(arg)),
            _ => unreachable!("checked against FUNCTIONS"),
        };
        self.after_power = false;
        if matches!(e, Expr::Deriv { .. } | Expr::Truncate(..)) {
            if !self.eat(')') {
                return Err(self.error(quoted(&[")"])));
            }
        } else {
            self.expect(')', &["\")\""])?;
        }
        Ok(e)
    }
}

pub fn parse(input: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        toks: lex(input)?,
        at: 0,
        after_power: false,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.continuation_error(&["end of input"]));
    }
    Ok(e)
}
