//! Line-oriented text formats.
//!
//! Five formats share one grammar style: `#` starts a comment line, blank
//! lines are skipped, and every data line is a directive followed by
//! whitespace-separated integers. Writers emit a canonical form, byte for
//! byte deterministic, and parsers accept exactly that shape: sequential
//! indices, strictly increasing vertex and arc lists, everything in range.
//! Semantic checks (is the decomposition exact, is the factorization
//! disjoint) stay with the validators; parsers only guard the syntax and
//! the per-line invariants they can see locally.

use std::fmt;
use std::fmt::Write as _;

use crate::decomposition::{Decomposition, Part};
use crate::factorization::{Arc, LinearFactor, LinearFactorization};
use crate::quasigroup::Quasigroup;
use crate::theorem::{Assignment, PColoring};

/// Syntax error with its 1-based source line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn data_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, trimmed))
        }
    })
}

fn parse_int(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("expected {what}, got `{token}`")))
}

/// Reads the `n <N>` header, N positive.
fn parse_order<'a, I: Iterator<Item = (usize, &'a str)>>(
    lines: &mut I,
) -> Result<usize, ParseError> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "missing `n <N>` header"))?;
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "n" {
        return Err(ParseError::new(line, "expected `n <N>` header"));
    }
    let n = parse_int(tokens[1], line, "order")?;
    if n == 0 {
        return Err(ParseError::new(line, "order must be positive"));
    }
    Ok(n)
}

pub fn parse_decomposition(input: &str) -> Result<Decomposition, ParseError> {
    let mut lines = data_lines(input);
    let n = parse_order(&mut lines)?;
    let mut parts = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens[0] != "part" {
            return Err(ParseError::new(
                line,
                format!("expected `part ...`, got `{}`", tokens[0]),
            ));
        }
        if tokens.len() < 3 {
            return Err(ParseError::new(line, "a part needs at least 2 vertices"));
        }
        let mut vertices = Vec::with_capacity(tokens.len() - 1);
        for token in &tokens[1..] {
            let v = parse_int(token, line, "vertex")?;
            if v >= n {
                return Err(ParseError::new(
                    line,
                    format!("vertex {v} out of range for n {n}"),
                ));
            }
            if let Some(&last) = vertices.last() {
                if v <= last {
                    return Err(ParseError::new(
                        line,
                        "vertices must be strictly increasing",
                    ));
                }
            }
            vertices.push(v);
        }
        parts.push(Part::from_sorted(vertices));
    }
    Ok(Decomposition::from_parts(n, parts))
}

pub fn format_decomposition(d: &Decomposition) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", d.order()).unwrap();
    for part in d.parts() {
        out.push_str("part");
        for v in part.vertices() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Returns the raw table; Latin square checks stay with the validator.
pub fn parse_latin_square(input: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut lines = data_lines(input);
    let n = parse_order(&mut lines)?;
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines
            .next()
            .ok_or_else(|| ParseError::new(0, format!("expected {n} rows")))?;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != n {
            return Err(ParseError::new(
                line,
                format!("expected {n} entries per row"),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for token in tokens {
            let v = parse_int(token, line, "entry")?;
            if v >= n {
                return Err(ParseError::new(
                    line,
                    format!("entry {v} out of range for n {n}"),
                ));
            }
            row.push(v);
        }
        table.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::new(line, format!("expected exactly {n} rows")));
    }
    Ok(table)
}

pub fn format_latin_square(q: &Quasigroup) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", q.order()).unwrap();
    for row in q.table() {
        let words: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", words.join(" ")).unwrap();
    }
    out
}

pub fn parse_factorization(input: &str) -> Result<LinearFactorization, ParseError> {
    let mut lines = data_lines(input);
    let n = parse_order(&mut lines)?;
    let mut factors: Vec<LinearFactor> = Vec::new();
    while let Some((line, text)) = lines.next() {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 || tokens[0] != "factor" {
            return Err(ParseError::new(line, "expected `factor <i>` header"));
        }
        let index = parse_int(tokens[1], line, "factor index")?;
        if index != factors.len() {
            return Err(ParseError::new(
                line,
                format!(
                    "factor indices must be sequential, expected {}",
                    factors.len()
                ),
            ));
        }
        let mut arcs: Vec<Arc> = Vec::with_capacity(n);
        for _ in 0..n {
            let (arc_line, arc_text) = lines.next().ok_or_else(|| {
                ParseError::new(line, format!("factor {index} truncated, expected {n} arcs"))
            })?;
            let tokens: Vec<&str> = arc_text.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(ParseError::new(
                    arc_line,
                    "expected `<tail> <head>` arc line",
                ));
            }
            let tail = parse_int(tokens[0], arc_line, "tail")?;
            let head = parse_int(tokens[1], arc_line, "head")?;
            if tail >= n || head >= n {
                return Err(ParseError::new(
                    arc_line,
                    format!("arc ({tail},{head}) out of range for n {n}"),
                ));
            }
            let arc = Arc::new(tail, head);
            if let Some(&last) = arcs.last() {
                if arc <= last {
                    return Err(ParseError::new(
                        arc_line,
                        "arcs must be strictly increasing",
                    ));
                }
            }
            arcs.push(arc);
        }
        factors.push(LinearFactor::from_sorted_arcs(n, arcs));
    }
    Ok(LinearFactorization::from_factors(n, factors))
}

pub fn format_factorization(fz: &LinearFactorization) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", fz.order()).unwrap();
    for (i, factor) in fz.factors().iter().enumerate() {
        writeln!(out, "factor {i}").unwrap();
        for arc in factor.arcs() {
            writeln!(out, "{} {}", arc.tail, arc.head).unwrap();
        }
    }
    out
}

pub fn parse_assignment(input: &str) -> Result<Assignment, ParseError> {
    let mut lines = data_lines(input);
    let n = parse_order(&mut lines)?;
    let mut factor_of = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 4 || tokens[0] != "part" || tokens[2] != "factor" {
            return Err(ParseError::new(line, "expected `part <i> factor <j>`"));
        }
        let part = parse_int(tokens[1], line, "part index")?;
        if part != factor_of.len() {
            return Err(ParseError::new(
                line,
                format!(
                    "part indices must be sequential, expected {}",
                    factor_of.len()
                ),
            ));
        }
        let factor = parse_int(tokens[3], line, "factor index")?;
        if factor >= n {
            return Err(ParseError::new(
                line,
                format!("factor {factor} out of range for n {n}"),
            ));
        }
        factor_of.push(factor);
    }
    Ok(Assignment::new(n, factor_of))
}

pub fn format_assignment(h: &Assignment) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", h.order()).unwrap();
    for (part, &factor) in h.as_slice().iter().enumerate() {
        writeln!(out, "part {part} factor {factor}").unwrap();
    }
    out
}

pub fn parse_p_coloring(input: &str) -> Result<PColoring, ParseError> {
    let mut lines = data_lines(input);
    let n = parse_order(&mut lines)?;
    let (k_line, k_text) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "missing `k <K>` header"))?;
    let tokens: Vec<&str> = k_text.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "k" {
        return Err(ParseError::new(k_line, "expected `k <K>` header"));
    }
    let num_colors = parse_int(tokens[1], k_line, "color count")?;
    let mut colors = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 4 || tokens[0] != "part" || tokens[2] != "color" {
            return Err(ParseError::new(line, "expected `part <i> color <c>`"));
        }
        let part = parse_int(tokens[1], line, "part index")?;
        if part != colors.len() {
            return Err(ParseError::new(
                line,
                format!("part indices must be sequential, expected {}", colors.len()),
            ));
        }
        // out-of-range colors parse; the verifier reports them
        colors.push(parse_int(tokens[3], line, "color")?);
    }
    Ok(PColoring::new(n, num_colors, colors))
}

pub fn format_p_coloring(col: &PColoring) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", col.order()).unwrap();
    writeln!(out, "k {}", col.num_colors()).unwrap();
    for (part, &color) in col.colors().iter().enumerate() {
        writeln!(out, "part {part} color {color}").unwrap();
    }
    out
}

/// Graphviz picture: one cluster per part with its complete edge set,
/// nodes namespaced per part so shared vertices appear once per cluster.
/// With a coloring, each cluster is labeled and tinted by its color, the
/// hue spread evenly over the k colors used.
pub fn format_dot(d: &Decomposition, coloring: Option<&PColoring>) -> String {
    let mut out = String::new();
    out.push_str("graph decomposition {\n");
    for (i, part) in d.parts().iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        match coloring {
            Some(col) => {
                let color = col.color_of(i);
                let k = col.num_colors().max(1);
                writeln!(out, "    label=\"part {i} color {color}\";").unwrap();
                writeln!(
                    out,
                    "    color=\"{:.3} 0.600 0.850\";",
                    color as f64 / k as f64
                )
                .unwrap();
            }
            None => writeln!(out, "    label=\"part {i}\";").unwrap(),
        }
        for &v in part.vertices() {
            writeln!(out, "    p{i}_{v} [label=\"{v}\"];").unwrap();
        }
        let vs = part.vertices();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                writeln!(out, "    p{i}_{} -- p{i}_{};", vs[a], vs[b]).unwrap();
            }
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
