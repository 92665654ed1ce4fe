//! Problem file format.
//!
//! ```text
//! # comment
//! vars: x y z
//! order: grevlex
//! field-equations: on
//! x*y + y*z
//! x*z + y*z + 1
//! ```
//!
//! `vars:` must be the first non-comment line. Polynomials use `+`, `*`,
//! `^`, declared variable names and the constants `0` and `1`.

use std::fmt::Write as _;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub ring: Ring,
    pub system: Vec<Polynomial>,
    /// Value of the `field-equations:` directive, if present.
    pub field_equations: Option<bool>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut names: Option<Vec<String>> = None;
    let mut order = MonomialOrder::default();
    let mut field_equations = None;
    let mut bodies: Vec<(usize, usize, &str)> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let directive = trimmed.split_once(':').map(|(key, rest)| (key.trim(), rest));
        match (directive, &names) {
            (Some(("vars", rest)), None) => {
                let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                let value_col = indent + trimmed.find(':').unwrap() + 2;
                if list.is_empty() {
                    return Err(err(line_no, value_col, "no variables declared"));
                }
                if let Some(bad) = list.iter().find(|v| !is_identifier(v)) {
                    let col = indent + trimmed.find(bad.as_str()).unwrap() + 1;
                    return Err(err(line_no, col, format!("invalid variable name `{bad}`")));
                }
                names = Some(list);
            }
            (_, None) => return Err(err(line_no, indent + 1, "expected `vars:` declaration")),
            (Some(("vars", _)), Some(_)) => return Err(err(line_no, indent + 1, "duplicate `vars:` declaration")),
            (Some(("order", rest)), Some(_)) => {
                order = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(line_no, indent + 1, format!("unknown order `{}`", rest.trim())))?;
            }
            (Some(("field-equations", rest)), Some(_)) => {
                field_equations = Some(match rest.trim() {
                    "on" => true,
                    "off" => false,
                    other => return Err(err(line_no, indent + 1, format!("expected on or off, got `{other}`"))),
                });
            }
            (Some((key, _)), Some(_)) if is_identifier(key) && !key.is_empty() => {
                return Err(err(line_no, indent + 1, format!("unknown directive `{key}`")));
            }
            _ => bodies.push((line_no, indent, trimmed)),
        }
    }

    let names = names.ok_or_else(|| err(1, 1, "missing `vars:` declaration"))?;
    let ring = Ring::new(names, order).map_err(|e| err(1, 1, e.to_string()))?;
    let mut system = Vec::with_capacity(bodies.len());
    for (line_no, indent, body) in bodies {
        let p = PolyParser::new(&ring, body, line_no, indent).parse()?;
        if p.is_zero() {
            return Err(err(line_no, indent + 1, "zero polynomial is not a valid generator"));
        }
        system.push(p);
    }
    if system.is_empty() {
        return Err(Error::EmptySystem);
    }
    Ok(Problem {
        ring,
        system,
        field_equations,
    })
}

/// Parses one polynomial in the syntax of problem files.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    PolyParser::new(ring, text, 1, 0).parse()
}

/// Problem file text that parses back to the same ring and system.
pub fn render_problem(ring: &Ring, system: &[Polynomial]) -> String {
    let mut out = format!("vars: {}\norder: {}\n", ring.names().join(" "), ring.order());
    for p in system {
        writeln!(out, "{}", ring.render(p)).unwrap();
    }
    out
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct PolyParser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
    line: usize,
    offset: usize,
}

impl<'a> PolyParser<'a> {
    fn new(ring: &'a Ring, text: &'a str, line: usize, offset: usize) -> Self {
        PolyParser {
            ring,
            src: text.as_bytes(),
            pos: 0,
            line,
            offset,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        err(self.line, self.offset + self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        loop {
            if let Some(t) = self.term()? {
                terms.push(t);
            }
            match self.peek() {
                None => break,
                Some(b'+') => self.pos += 1,
                Some(c) => return Err(self.error(format!("unexpected `{}`", c as char))),
            }
        }
        Ok(self.ring.poly(terms))
    }

    /// `None` when the term contains the factor 0.
    fn term(&mut self) -> Result<Option<Monomial>> {
        let n = self.ring.nvars();
        let mut m = Monomial::one(n);
        let mut zero = false;
        loop {
            match self.factor()? {
                None => zero = true,
                Some(f) => m = &m * &f,
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((!zero).then_some(m))
    }

    fn factor(&mut self) -> Result<Option<Monomial>> {
        let n = self.ring.nvars();
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.error("expected a variable or constant")),
        };
        let c = self.src[start];
        let base = if c.is_ascii_digit() {
            let digits = self.take_while(|c| c.is_ascii_digit());
            match digits {
                "0" => None,
                "1" => Some(Monomial::one(n)),
                other => {
                    self.pos = start;
                    return Err(self.error(format!("coefficient `{other}` is not 0 or 1")));
                }
            }
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == b'_');
            match self.ring.var_index(name) {
                Some(i) => Some(Monomial::var(n, i)),
                None => {
                    let name = name.to_string();
                    self.pos = start;
                    return Err(self.error(format!("undeclared variable `{name}`")));
                }
            }
        } else {
            return Err(self.error(format!("unexpected `{}`", c as char)));
        };
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        let e: u16 = digits.parse().map_err(|_| {
            self.pos = at;
            self.error("expected an exponent")
        })?;
        Ok(match (base, e) {
            (_, 0) => Some(Monomial::one(n)),
            (None, _) => None,
            (Some(b), e) => Some((1..e).fold(b.clone(), |acc, _| &acc * &b)),
        })
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && f(self.src[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }
}
