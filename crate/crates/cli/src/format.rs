//! The arrangement file format: `line <name> <a> <b> <c> [mult]` records
//! with rationals in lowest terms, `#` comments, and optional
//! `orient <name> +|-` orientation overrides.

use std::fmt::Write as _;
use std::str::FromStr;

use linarr::kernel::{LineEq, Rational};

#[derive(Debug)]
pub struct ParseError {
    pub line_no: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at line {}: {}", self.line_no, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug)]
pub struct ArrangementFile {
    pub names: Vec<String>,
    pub lines: Vec<LineEq>,
    pub flips: Vec<bool>,
    /// Multiplicities, used by the fold command only.
    pub mults: Vec<u32>,
}

pub fn parse(text: &str) -> Result<ArrangementFile, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut lines = Vec::new();
    let mut flips: Vec<bool> = Vec::new();
    let mut mults = Vec::new();
    let mut orient_overrides: Vec<(usize, String, bool)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let err = |message: String| ParseError { line_no, message };
        match tokens[0] {
            "line" => {
                if tokens.len() < 5 || tokens.len() > 6 {
                    return Err(err(format!(
                        "expected `line <name> <a> <b> <c> [mult]`, got {} tokens",
                        tokens.len()
                    )));
                }
                let name = tokens[1].to_string();
                if names.contains(&name) {
                    return Err(err(format!("duplicate name `{}`", name)));
                }
                let mut coefs = Vec::with_capacity(3);
                for tok in &tokens[2..5] {
                    let r = Rational::from_str(tok)
                        .map_err(|_| err(format!("bad rational `{}`", tok)))?;
                    coefs.push(r);
                }
                let mult = if tokens.len() == 6 {
                    tokens[5]
                        .parse::<u32>()
                        .map_err(|_| err(format!("bad multiplicity `{}`", tokens[5])))?
                } else {
                    1
                };
                let c = coefs.pop().unwrap();
                let b = coefs.pop().unwrap();
                let a = coefs.pop().unwrap();
                let line =
                    LineEq::new(a, b, c).map_err(|_| err("both coefficients are zero".into()))?;
                names.push(name);
                lines.push(line);
                flips.push(false);
                mults.push(mult);
            }
            "orient" => {
                if tokens.len() != 3 || !matches!(tokens[2], "+" | "-") {
                    return Err(err("expected `orient <name> +|-`".into()));
                }
                orient_overrides.push((line_no, tokens[1].to_string(), tokens[2] == "-"));
            }
            other => {
                return Err(err(format!("unknown record `{}`", other)));
            }
        }
    }
    if lines.is_empty() {
        return Err(ParseError {
            line_no: text.lines().count().max(1),
            message: "no line records".into(),
        });
    }
    for (line_no, name, flip) in orient_overrides {
        match names.iter().position(|n| n == &name) {
            Some(i) => flips[i] = flip,
            None => {
                return Err(ParseError {
                    line_no,
                    message: format!("orient references unknown line `{}`", name),
                })
            }
        }
    }
    Ok(ArrangementFile {
        names,
        lines,
        flips,
        mults,
    })
}

pub fn emit(file: &ArrangementFile) -> String {
    let mut out = String::new();
    for (t, line) in file.lines.iter().enumerate() {
        let _ = write!(
            out,
            "line {} {} {} {}",
            file.names[t],
            line.a(),
            line.b(),
            line.c()
        );
        if file.mults[t] != 1 {
            let _ = write!(out, " {}", file.mults[t]);
        }
        out.push('\n');
    }
    for (t, flip) in file.flips.iter().enumerate() {
        if *flip {
            let _ = writeln!(out, "orient {} -", file.names[t]);
        }
    }
    out
}

pub fn from_arrangement(names: Vec<String>, arr: &linarr::Arrangement) -> ArrangementFile {
    ArrangementFile {
        names,
        lines: arr.lines().to_vec(),
        flips: arr.flips().to_vec(),
        mults: vec![1; arr.n()],
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|t| format!("L{}", t)).collect()
}
