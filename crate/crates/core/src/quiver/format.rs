//! The line-oriented `.bqp` presentation format.
//!
//! ```text
//! # comment
//! vertex 1
//! vertex 2
//! vertex 3
//! arrow alpha 1 2
//! arrow beta 1 2
//! arrow gamma 2 3
//! bound 3
//! rel alpha.gamma - beta.gamma
//! ```
//!
//! A relation term is `[<int>[/<uint>]]<arrow>(.<arrow>)*`; paths read left
//! to right, so `alpha.gamma` is `alpha` followed by `gamma`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{LinComb, Presentation, Quiver};
use crate::error::{Error, Result};

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

pub(crate) fn is_vertex_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Splits `text` into `(line number, content)` pairs without comments or blank lines.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut bound: Option<(usize, usize)> = None;
    let mut rels: Vec<(usize, &str)> = Vec::new();
    let mut first_line = 0;

    for (line, content) in content_lines(text) {
        if first_line == 0 {
            first_line = line;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let args: Vec<&str> = rest.split_whitespace().collect();
        match keyword {
            "vertex" => {
                let [name] = args[..] else {
                    return Err(Error::parse(line, "expected `vertex <name>`"));
                };
                if !is_vertex_name(name) {
                    return Err(Error::parse(line, format!("invalid vertex name `{name}`")));
                }
                if vertices.iter().any(|v| v == name) {
                    return Err(Error::parse(line, format!("duplicate vertex `{name}`")));
                }
                vertices.push(name.to_string());
            }
            "arrow" => {
                let [name, src, tgt] = args[..] else {
                    return Err(Error::parse(line, "expected `arrow <name> <src> <tgt>`"));
                };
                if !is_identifier(name) {
                    return Err(Error::parse(line, format!("invalid arrow name `{name}`")));
                }
                if arrows.iter().any(|a| a.0 == name) {
                    return Err(Error::parse(line, format!("duplicate arrow `{name}`")));
                }
                for v in [src, tgt] {
                    if !vertices.iter().any(|x| x == v) {
                        return Err(Error::parse(line, format!("unknown vertex `{v}`")));
                    }
                }
                arrows.push((name.to_string(), src.to_string(), tgt.to_string()));
            }
            "bound" => {
                let [m] = args[..] else {
                    return Err(Error::parse(line, "expected `bound <m>`"));
                };
                if bound.is_some() {
                    return Err(Error::parse(line, "duplicate `bound` line"));
                }
                let m: usize = m
                    .parse()
                    .map_err(|_| Error::parse(line, format!("invalid bound `{m}`")))?;
                if m < 2 {
                    return Err(Error::parse(line, "bound must be at least 2"));
                }
                bound = Some((line, m));
            }
            "rel" => rels.push((line, rest)),
            other => return Err(Error::parse(line, format!("unknown keyword `{other}`"))),
        }
    }

    let Some((_, m)) = bound else {
        return Err(Error::parse(first_line.max(1), "missing `bound <m>` line"));
    };
    if vertices.is_empty() {
        return Err(Error::parse(first_line.max(1), "no vertices declared"));
    }
    let quiver = Quiver::new(vertices, arrows).map_err(|e| Error::parse(first_line, e.to_string()))?;

    let mut relations = Vec::new();
    for (line, body) in rels {
        let rel = parse_relation(&quiver, body).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(line, message),
            other => Error::parse(line, other.to_string()),
        })?;
        if rel.is_zero() {
            return Err(Error::parse(line, "relation is zero"));
        }
        for (_, p) in rel.terms() {
            if p.len() < 2 || p.len() >= m {
                return Err(Error::parse(
                    line,
                    format!(
                        "term {} has length {} outside [2, {}]",
                        quiver.path_name(p),
                        p.len(),
                        m - 1
                    ),
                ));
            }
        }
        relations.push(rel);
    }
    Presentation::new(quiver, relations, m).map_err(|e| Error::parse(first_line, e.to_string()))
}

/// Parses the body of a `rel` line into a canonical linear combination.
pub fn parse_relation(quiver: &Quiver, body: &str) -> Result<LinComb> {
    let chars: Vec<char> = body.chars().collect();
    let mut pos = 0;
    let mut terms = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos == chars.len() {
            break;
        }
        let mut sign = BigRational::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !terms.is_empty() {
            return Err(Error::parse(0, format!("expected `+` or `-` at column {}", pos + 1)));
        }
        let coeff_start = pos;
        while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
            pos += 1;
        }
        let coeff = if pos > coeff_start {
            let text: String = chars[coeff_start..pos].iter().collect();
            parse_coefficient(&text)?
        } else {
            BigRational::one()
        };
        skip_ws(&mut pos);
        let path_start = pos;
        while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || matches!(chars[pos], '_' | '\'' | '.')) {
            pos += 1;
        }
        if pos == path_start {
            return Err(Error::parse(0, format!("expected a path at column {}", path_start + 1)));
        }
        let dotted: String = chars[path_start..pos].iter().collect();
        let path = quiver.path_from_names(&dotted)?;
        terms.push((sign * coeff, path));
    }
    if terms.is_empty() {
        return Err(Error::parse(0, "empty relation"));
    }
    LinComb::new(terms)
}

fn parse_coefficient(text: &str) -> Result<BigRational> {
    let bad = || Error::parse(0, format!("invalid coefficient `{text}`"));
    let mut parts = text.split('/');
    let num: BigInt = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let mut value = BigRational::from_integer(num);
    for den in parts {
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den == BigInt::from(0) {
            return Err(bad());
        }
        value /= BigRational::from_integer(den);
    }
    Ok(value)
}

/// Canonical text of a presentation; parsing it yields an equal presentation.
pub fn write_presentation(p: &Presentation) -> String {
    let q = p.quiver();
    let mut out = String::new();
    for v in q.vertices() {
        writeln!(out, "vertex {}", q.vertex_name(v)).unwrap();
    }
    for a in q.arrows() {
        writeln!(out, "arrow {} {} {}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)).unwrap();
    }
    writeln!(out, "bound {}", p.bound()).unwrap();
    for rel in p.relations() {
        writeln!(out, "rel {}", format_lincomb(q, rel)).unwrap();
    }
    out
}

pub fn format_lincomb(q: &Quiver, rel: &LinComb) -> String {
    let mut out = String::new();
    for (i, (c, path)) in rel.terms().iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push_str(&q.path_name(path));
    }
    out
}
