//! Text formats: Laurent polynomials and toric model files.
//!
//! Polynomials accept both the canonical rendering (`2 * x^1 + -1/2 * y^-1`)
//! and the usual infix form (`x + y^2/x - 1/2`). Division is allowed by
//! monomials only.
//!
//! A model file is a list of keyword lines:
//!
//! ```text
//! # comment
//! name P2
//! vars x y
//! div
//!   1  0
//!   0  1
//!  -1 -1
//! potential x + y + x^-1 + y^-1
//! offsets 0 0 1
//! ```
//!
//! `vars` is optional (defaults to the sorted variables of the potential) and
//! fixes the column order of `div`. `offsets` is optional.

use std::fmt;

use lg_orbit_core::toric::ToricLGModel;
use lg_orbit_core::{IntegerMatrix, LaurentPolynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            col,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let col = col0 + i;
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().expect("digits")), col));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(ch) {
            out.push((Tok::Op(ch), col));
            i += 1;
        } else {
            return Err(ParseError::new(
                line,
                col,
                format!("unexpected character `{}`", ch),
            ));
        }
    }
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), msg)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPolynomial, ParseError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPolynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.col();
                self.pos += 1;
                let d = self.unary()?;
                let inv = d
                    .pow(-1)
                    .map_err(|_| ParseError::new(self.line, col, "division by a non-monomial"))?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LaurentPolynomial, ParseError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        let paren = self.eat('(');
        let neg = self.eat('-');
        let k = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                i64::try_from(&n)
                    .map_err(|_| ParseError::new(self.line, col, "exponent too large"))?
            }
            _ => return Err(self.err("expected an integer exponent")),
        };
        if paren && !self.eat(')') {
            return Err(self.err("expected `)`"));
        }
        let k = if neg { -k } else { k };
        base.pow(k)
            .map_err(|_| ParseError::new(self.line, col, "negative power of a non-monomial"))
    }

    fn atom(&mut self) -> Result<LaurentPolynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(LaurentPolynomial::constant(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(LaurentPolynomial::var(&name))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => Err(self.err(format!("unexpected `{}`", c))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse_poly_at(src: &str, line: usize, col0: usize) -> Result<LaurentPolynomial, ParseError> {
    let toks = lex(src, line, col0)?;
    let mut lx = Lexer {
        toks,
        pos: 0,
        line,
        end_col: col0 + src.chars().count(),
    };
    if lx.toks.is_empty() {
        return Err(lx.err("empty polynomial"));
    }
    let p = lx.expr()?;
    if lx.pos != lx.toks.len() {
        return Err(lx.err("trailing input"));
    }
    Ok(p)
}

/// Parses a single-line polynomial; columns in errors are 1-based.
pub fn parse_polynomial(src: &str) -> Result<LaurentPolynomial, ParseError> {
    parse_poly_at(src, 1, 1)
}

/// Parses `p/q`, `p` or `-p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    (!d.is_zero()).then(|| Rational::new(n, d))
}

/// A parsed model file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelFile {
    pub model: ToricLGModel,
    pub offsets: Option<Vec<Rational>>,
}

const KEYWORDS: [&str; 5] = ["name", "vars", "div", "potential", "offsets"];

fn keyword(line: &str) -> Option<(&str, &str)> {
    let t = line.trim_start();
    let (head, rest) = t
        .split_once(char::is_whitespace)
        .unwrap_or((t, &t[t.len()..]));
    KEYWORDS.contains(&head).then_some((head, rest))
}

/// Parses a model file.
pub fn parse_model(text: &str) -> Result<ModelFile, ParseError> {
    let mut name: Option<String> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut rows: Option<Vec<(Vec<i64>, usize)>> = None;
    let mut potential: Option<(LaurentPolynomial, usize)> = None;
    let mut offsets: Option<Vec<Rational>> = None;
    let mut in_div = false;
    let mut last_line = 1;

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        last_line = ln;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        // every token below is a subslice of `raw`
        let col_of = |s: &str| {
            raw[..s.as_ptr() as usize - raw.as_ptr() as usize]
                .chars()
                .count()
                + 1
        };
        match keyword(content) {
            Some((kw, rest)) => {
                in_div = false;
                let rest_col = col_of(rest);
                let dup =
                    |what: &str| ParseError::new(ln, indent + 1, format!("duplicate `{}`", what));
                match kw {
                    "name" => {
                        if name.is_some() {
                            return Err(dup("name"));
                        }
                        if rest.trim().is_empty() {
                            return Err(ParseError::new(ln, rest_col, "missing model name"));
                        }
                        name = Some(rest.trim().to_string());
                    }
                    "vars" => {
                        if vars.is_some() {
                            return Err(dup("vars"));
                        }
                        let vs: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                        if vs.is_empty() {
                            return Err(ParseError::new(ln, rest_col, "missing variable names"));
                        }
                        let mut sorted = vs.clone();
                        sorted.sort();
                        sorted.dedup();
                        if sorted.len() != vs.len() {
                            return Err(ParseError::new(ln, rest_col, "repeated variable name"));
                        }
                        vars = Some(vs);
                    }
                    "div" => {
                        if rows.is_some() {
                            return Err(dup("div"));
                        }
                        if !rest.trim().is_empty() {
                            return Err(ParseError::new(
                                ln,
                                rest_col,
                                "`div` rows go on the following lines",
                            ));
                        }
                        rows = Some(Vec::new());
                        in_div = true;
                    }
                    "potential" => {
                        if potential.is_some() {
                            return Err(dup("potential"));
                        }
                        potential = Some((parse_poly_at(rest, ln, rest_col)?, ln));
                    }
                    "offsets" => {
                        if offsets.is_some() {
                            return Err(dup("offsets"));
                        }
                        let mut v = Vec::new();
                        for tok in rest.split_whitespace() {
                            let r = parse_rational(tok).ok_or_else(|| {
                                ParseError::new(ln, col_of(tok), format!("bad rational `{}`", tok))
                            })?;
                            v.push(r);
                        }
                        offsets = Some(v);
                    }
                    _ => unreachable!(),
                }
            }
            None if in_div => {
                let mut row = Vec::new();
                for tok in content.split_whitespace() {
                    let x: i64 = tok.parse().map_err(|_| {
                        ParseError::new(ln, col_of(tok), format!("bad integer `{}`", tok))
                    })?;
                    row.push(x);
                }
                rows.as_mut().expect("inside div").push((row, ln));
            }
            None => {
                let word = content.split_whitespace().next().unwrap_or("");
                return Err(ParseError::new(
                    ln,
                    indent + 1,
                    format!("unknown keyword `{}`", word),
                ));
            }
        }
    }

    let end = |msg: &str| ParseError::new(last_line, 1, msg.to_string());
    let name = name.ok_or_else(|| end("missing `name`"))?;
    let rows = rows.ok_or_else(|| end("missing `div`"))?;
    let (potential, pot_line) = potential.ok_or_else(|| end("missing `potential`"))?;
    if rows.is_empty() {
        return Err(end("`div` has no rows"));
    }
    let vars = match vars {
        Some(v) => v,
        None => potential.used_vars(),
    };
    for (row, ln) in &rows {
        if row.len() != vars.len() {
            return Err(ParseError::new(
                *ln,
                1,
                format!("div row has {} entries, expected {}", row.len(), vars.len()),
            ));
        }
    }
    if let Some(extra) = potential.used_vars().iter().find(|v| !vars.contains(v)) {
        return Err(ParseError::new(
            pot_line,
            1,
            format!("variable `{}` not declared", extra),
        ));
    }
    // columns follow the sorted variable order of the polynomial ring
    let mut order: Vec<usize> = (0..vars.len()).collect();
    order.sort_by(|&a, &b| vars[a].cmp(&vars[b]));
    let permuted: Vec<Vec<i64>> = rows
        .iter()
        .map(|(r, _)| order.iter().map(|&i| r[i]).collect())
        .collect();
    let div = IntegerMatrix::from_rows(&permuted).map_err(|e| end(&e.to_string()))?;
    let potential = potential.with_vars(&vars);
    if potential.is_zero() {
        return Err(ParseError::new(pot_line, 1, "potential is zero"));
    }
    if let Some(o) = &offsets {
        if o.len() != div.rows() {
            return Err(end(&format!(
                "{} offsets for {} div rows",
                o.len(),
                div.rows()
            )));
        }
    }
    let model = ToricLGModel::new(name, div, potential).map_err(|e| end(&e.to_string()))?;
    Ok(ModelFile { model, offsets })
}

/// Renders a model in the file format; `parse_model` reads it back unchanged.
pub fn write_model(m: &ToricLGModel, offsets: Option<&[Rational]>) -> String {
    let mut s = String::new();
    s.push_str(&format!("name {}\n", m.name));
    s.push_str(&format!("vars {}\n", m.potential.vars().join(" ")));
    s.push_str("div\n");
    for row in m.div.row_vecs() {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>3}", x)).collect();
        s.push_str(&format!("{}\n", cells.join(" ")));
    }
    s.push_str(&format!(
        "potential {}\n",
        lg_orbit_core::algebra::Pretty(&m.potential)
    ));
    if let Some(o) = offsets {
        let cells: Vec<String> = o.iter().map(ToString::to_string).collect();
        s.push_str(&format!("offsets {}\n", cells.join(" ")));
    }
    s
}

/// Exact rational text, `p/q` or `p`.
pub fn rational_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Wrapper printing a polynomial in the infix form.
pub struct Infix<'a>(pub &'a LaurentPolynomial);

impl fmt::Display for Infix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", lg_orbit_core::algebra::Pretty(self.0))
    }
}
