//! Ideal input formats.
//!
//! Monomial syntax: `x1^4, x2^5, x3^6, x1*x2*x3^2`. Indexed variables are
//! `x<k>` (possibly `x_<k>`), `*` is optional, exponent 1 is implicit and a
//! bare `1` is the unit monomial. Single letters such as `x^2, xy, y^2` are
//! also accepted and are numbered alphabetically. The two styles cannot be
//! mixed.
//!
//! JSON: `{"d": 3, "gens": [[4,0,0], …], "names": ["a","b","c"]}` with `d`
//! and `names` optional.

use std::collections::BTreeSet;
use std::fmt;

use monideal::{ExponentVector, MonomialIdeal};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column, when the error is tied to a location.
    pub position: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(position: usize, message: impl Into<String>) -> Self {
        Self {
            position: Some(position + 1),
            message: message.into(),
        }
    }

    fn general(message: impl Into<String>) -> Self {
        Self {
            position: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some(p) => write!(f, "{} at position {p}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// A parsed ideal with its display names and any notices about the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDocument {
    pub ideal: MonomialIdeal,
    pub names: Option<Vec<String>>,
    pub notices: Vec<String>,
}

impl IdealDocument {
    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .ideal
            .generators()
            .iter()
            .map(|g| Value::from(g.entries().to_vec()))
            .collect();
        let mut doc = serde_json::json!({ "d": self.ideal.dimension(), "gens": gens });
        if let Some(names) = &self.names {
            doc["names"] = Value::from(names.clone());
        }
        doc
    }
}

/// Parses either syntax. `dim` overrides the inferred number of variables
/// and must not be smaller than it.
pub fn parse_ideal(text: &str, dim: Option<usize>) -> Result<IdealDocument, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        return Err(ParseError::general("empty input"));
    }
    let (d, rows, names) = if trimmed.starts_with('{') {
        parse_json(text)?
    } else {
        parse_monomials(text)?
    };
    let d = match dim {
        Some(forced) if forced < d => {
            return Err(ParseError::general(format!(
                "--dim {forced} is smaller than the {d} variables used"
            )))
        }
        Some(forced) => forced,
        None => d,
    };
    if names.as_ref().is_some_and(|n| n.len() != d) {
        return Err(ParseError::general(format!(
            "{} variable names given for {d} variables",
            names.as_ref().map_or(0, Vec::len)
        )));
    }
    let raw: Vec<ExponentVector> = rows
        .into_iter()
        .map(|mut r| {
            r.resize(d, 0);
            ExponentVector::new(r)
        })
        .collect();
    let distinct: BTreeSet<&ExponentVector> = raw.iter().collect();
    let dropped: Vec<String> = {
        let ideal = MonomialIdeal::new(d, raw.clone()).map_err(|e| ParseError::general(e.to_string()))?;
        distinct
            .iter()
            .filter(|v| !ideal.generators().contains(v))
            .map(|v| monomial_text(v, names.as_deref()))
            .collect()
    };
    let ideal = MonomialIdeal::new(d, raw).map_err(|e| ParseError::general(e.to_string()))?;
    let mut notices = Vec::new();
    if !dropped.is_empty() {
        notices.push(format!(
            "input was not minimal; dropped {}",
            dropped.join(", ")
        ));
    }
    Ok(IdealDocument {
        ideal,
        names,
        notices,
    })
}

fn monomial_text(v: &[u64], names: Option<&[String]>) -> String {
    monideal::ideals::monomial_string(v, names)
}

type Parsed = (usize, Vec<Vec<u64>>, Option<Vec<String>>);
type Layout = (usize, Option<Vec<String>>, Box<dyn Fn(&Var) -> usize>);

fn parse_json(text: &str) -> Result<Parsed, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError {
        position: Some(e.column()),
        message: format!("invalid JSON ({e})"),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| ParseError::general("JSON input must be an object"))?;
    let gens = obj
        .get("gens")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::general("JSON input needs a \"gens\" array"))?;
    if gens.is_empty() {
        return Err(ParseError::general("empty generating set"));
    }
    let mut rows = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let entries = g
            .as_array()
            .ok_or_else(|| ParseError::general(format!("gens[{k}] is not an array")))?;
        let row = entries
            .iter()
            .enumerate()
            .map(|(j, x)| match x.as_u64() {
                Some(v) => Ok(v),
                None if x.as_i64().is_some_and(|v| v < 0) => Err(ParseError::general(format!(
                    "negative exponent in gens[{k}][{j}]"
                ))),
                None => Err(ParseError::general(format!(
                    "gens[{k}][{j}] is not a natural number"
                ))),
            })
            .collect::<Result<Vec<u64>, _>>()?;
        rows.push(row);
    }
    let width = rows[0].len();
    if let Some(k) = rows.iter().position(|r| r.len() != width) {
        return Err(ParseError::general(format!(
            "gens[{k}] has {} entries, expected {width}",
            rows[k].len()
        )));
    }
    let d = match obj.get("d") {
        None => width,
        Some(v) => {
            let d = v
                .as_u64()
                .ok_or_else(|| ParseError::general("\"d\" must be a natural number"))? as usize;
            if d != width {
                return Err(ParseError::general(format!(
                    "\"d\" is {d} but generators have {width} entries"
                )));
            }
            d
        }
    };
    if d == 0 {
        return Err(ParseError::general("ambient dimension must be at least 1"));
    }
    let names = match obj.get("names") {
        None | Some(Value::Null) => None,
        Some(Value::Array(items)) => Some(
            items
                .iter()
                .map(|n| {
                    n.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| ParseError::general("\"names\" must be strings"))
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Some(_) => return Err(ParseError::general("\"names\" must be an array")),
    };
    Ok((d, rows, names))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Indexed,
    Letters,
}

enum Var {
    Index(usize),
    Letter(char),
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().enumerate().collect(),
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.chars.len(), |&(i, _)| i)
    }

    fn skip_space(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits.parse().ok()
    }
}

fn parse_monomials(text: &str) -> Result<Parsed, ParseError> {
    let mut lx = Lexer::new(text);
    let mut style: Option<Style> = None;
    let mut monomials: Vec<Vec<(Var, u64)>> = Vec::new();
    loop {
        lx.skip_space();
        let start = lx.column();
        let mut factors = Vec::new();
        let mut unit = false;
        loop {
            lx.skip_space();
            let col = lx.column();
            match lx.peek() {
                Some('1') if factors.is_empty() && !unit => {
                    lx.pos += 1;
                    if lx.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err(ParseError::at(col, "unexpected number"));
                    }
                    unit = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    if unit {
                        return Err(ParseError::at(col, "unexpected variable after 1"));
                    }
                    lx.pos += 1;
                    let var = if c == 'x' && lx.peek().is_some_and(|n| n.is_ascii_digit() || n == '_') {
                        if lx.peek() == Some('_') {
                            lx.pos += 1;
                        }
                        let k = lx
                            .number()
                            .ok_or_else(|| ParseError::at(lx.column(), "expected variable index"))?;
                        if k == 0 {
                            return Err(ParseError::at(col, "variable indices start at 1"));
                        }
                        Var::Index(k as usize)
                    } else {
                        Var::Letter(c)
                    };
                    let this = match var {
                        Var::Index(_) => Style::Indexed,
                        Var::Letter(_) => Style::Letters,
                    };
                    if *style.get_or_insert(this) != this {
                        return Err(ParseError::at(
                            col,
                            "cannot mix indexed variables with single-letter variables",
                        ));
                    }
                    lx.skip_space();
                    let exponent = if lx.peek() == Some('^') {
                        lx.pos += 1;
                        lx.skip_space();
                        if lx.peek() == Some('-') {
                            return Err(ParseError::at(lx.column(), "negative exponent"));
                        }
                        lx.number()
                            .ok_or_else(|| ParseError::at(lx.column(), "expected exponent"))?
                    } else {
                        1
                    };
                    factors.push((var, exponent));
                }
                Some('*') if !factors.is_empty() || unit => {
                    lx.pos += 1;
                    lx.skip_space();
                    if !lx.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                        return Err(ParseError::at(lx.column(), "expected variable after '*'"));
                    }
                }
                Some(',') | None => break,
                Some(c) => {
                    return Err(ParseError::at(col, format!("unexpected character '{c}'")));
                }
            }
        }
        if factors.is_empty() && !unit {
            return Err(ParseError::at(start, "expected monomial"));
        }
        monomials.push(factors);
        if lx.peek() == Some(',') {
            lx.pos += 1;
        } else {
            break;
        }
    }
    debug_assert!(lx.pos <= lx.text.chars().count());

    let (d, names, index_of): Layout = match style {
        Some(Style::Letters) => {
            let letters: BTreeSet<char> = monomials
                .iter()
                .flatten()
                .filter_map(|(v, _)| match v {
                    Var::Letter(c) => Some(*c),
                    Var::Index(_) => None,
                })
                .collect();
            let order: Vec<char> = letters.into_iter().collect();
            let names = order.iter().map(char::to_string).collect();
            let lookup = order.clone();
            (
                order.len(),
                Some(names),
                Box::new(move |v| match v {
                    Var::Letter(c) => lookup.iter().position(|x| x == c).expect("collected"),
                    Var::Index(_) => unreachable!("styles are not mixed"),
                }),
            )
        }
        Some(Style::Indexed) => {
            let d = monomials
                .iter()
                .flatten()
                .map(|(v, _)| match v {
                    Var::Index(k) => *k,
                    Var::Letter(_) => 0,
                })
                .max()
                .unwrap_or(1);
            (
                d,
                None,
                Box::new(|v| match v {
                    Var::Index(k) => k - 1,
                    Var::Letter(_) => unreachable!("styles are not mixed"),
                }),
            )
        }
        None => (1, None, Box::new(|_| 0)),
    };
    let rows = monomials
        .iter()
        .map(|factors| {
            let mut row = vec![0u64; d];
            for (v, e) in factors {
                row[index_of(v)] += e;
            }
            row
        })
        .collect();
    Ok((d, rows, names))
}
