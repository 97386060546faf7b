//! Text formats for colorings and codes.
//!
//! Coloring files start with a header line, either `bipartite m n r` or
//! `complete n r`. A bipartite body has `m` lines of `n` space-separated
//! color ids; a complete body has `n - 1` lines forming the upper triangle
//! (line for vertex `u` lists the colors to `u+1 .. n-1`). Code files carry
//! one word per line, letters space-separated. Malformed input is rejected
//! with 1-based line/column diagnostics (the column counts tokens).

use crate::code::Code;
use crate::coloring::{Color, ColoringMatrix, CompleteColoring};
use crate::paths::PathRecord;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header `bipartite m n r` or `complete n r`")]
    BadHeader { line: usize },
    #[error("line {line}, column {col}: expected an integer, found `{token}`")]
    BadToken {
        line: usize,
        col: usize,
        token: String,
    },
    #[error("line {line}, column {col}: color {value} outside 1..={r}")]
    ColorOutOfRange {
        line: usize,
        col: usize,
        value: u64,
        r: Color,
    },
    #[error("line {line}: expected {expected} entries, found {found}")]
    WrongEntryCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: unexpected extra content")]
    TrailingContent { line: usize },
    #[error("file ends early: expected {expected} data lines, found {found}")]
    MissingLines { expected: usize, found: usize },
    #[error("line {line}: dimension {what} = {value} is out of range")]
    BadDimension {
        line: usize,
        what: &'static str,
        value: u64,
    },
    #[error("code file is empty")]
    EmptyCode,
}

/// Parse result of a coloring file.
#[derive(Clone, Debug)]
pub enum HostColoring {
    Bipartite(ColoringMatrix),
    Complete(CompleteColoring),
}

fn parse_fields(line: &str, lineno: usize) -> Result<Vec<u64>, ParseError> {
    line.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse::<u64>().map_err(|_| ParseError::BadToken {
                line: lineno,
                col: i + 1,
                token: tok.to_string(),
            })
        })
        .collect()
}

fn parse_color_row(
    line: &str,
    lineno: usize,
    expected: usize,
    r: Color,
) -> Result<Vec<Color>, ParseError> {
    let raw = parse_fields(line, lineno)?;
    if raw.len() != expected {
        return Err(ParseError::WrongEntryCount {
            line: lineno,
            expected,
            found: raw.len(),
        });
    }
    raw.into_iter()
        .enumerate()
        .map(|(i, value)| {
            if value == 0 || value > r as u64 {
                Err(ParseError::ColorOutOfRange {
                    line: lineno,
                    col: i + 1,
                    value,
                    r,
                })
            } else {
                Ok(value as Color)
            }
        })
        .collect()
}

/// Lines with content, keeping original 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() {
            None
        } else {
            Some((i + 1, t))
        }
    })
}

fn dim(value: u64, what: &'static str, min: u64, line: usize) -> Result<usize, ParseError> {
    if value < min || value > 1_000_000 {
        return Err(ParseError::BadDimension { line, what, value });
    }
    Ok(value as usize)
}

/// Reads either coloring format, deciding by the header word.
pub fn parse_coloring(text: &str) -> Result<HostColoring, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::BadHeader { line: 1 })?;
    let mut fields = header.split_whitespace();
    let tag = fields.next().ok_or(ParseError::BadHeader { line: hline })?;
    let nums: Vec<&str> = fields.collect();
    let parse_num = |i: usize| -> Result<u64, ParseError> {
        nums[i].parse::<u64>().map_err(|_| ParseError::BadToken {
            line: hline,
            col: i + 2,
            token: nums[i].to_string(),
        })
    };
    match tag {
        "bipartite" => {
            if nums.len() != 3 {
                return Err(ParseError::BadHeader { line: hline });
            }
            let m = dim(parse_num(0)?, "m", 1, hline)?;
            let n = dim(parse_num(1)?, "n", 1, hline)?;
            let r_raw = parse_num(2)?;
            if !(2..=255).contains(&r_raw) {
                return Err(ParseError::BadDimension {
                    line: hline,
                    what: "r",
                    value: r_raw,
                });
            }
            let r = r_raw as Color;
            let mut colors = Vec::with_capacity(m * n);
            let mut rows = 0usize;
            for (lineno, line) in lines.by_ref() {
                if rows == m {
                    return Err(ParseError::TrailingContent { line: lineno });
                }
                colors.extend(parse_color_row(line, lineno, n, r)?);
                rows += 1;
            }
            if rows < m {
                return Err(ParseError::MissingLines {
                    expected: m,
                    found: rows,
                });
            }
            Ok(HostColoring::Bipartite(ColoringMatrix::from_raw(
                m, n, r, colors,
            )))
        }
        "complete" => {
            if nums.len() != 2 {
                return Err(ParseError::BadHeader { line: hline });
            }
            let n = dim(parse_num(0)?, "n", 1, hline)?;
            let r_raw = parse_num(1)?;
            if !(2..=255).contains(&r_raw) {
                return Err(ParseError::BadDimension {
                    line: hline,
                    what: "r",
                    value: r_raw,
                });
            }
            let r = r_raw as Color;
            let mut cc = CompleteColoring::filled(n, r, 1);
            let mut u = 0usize;
            for (lineno, line) in lines.by_ref() {
                if u + 1 >= n {
                    return Err(ParseError::TrailingContent { line: lineno });
                }
                let row = parse_color_row(line, lineno, n - 1 - u, r)?;
                for (off, c) in row.into_iter().enumerate() {
                    cc.set_color(u, u + 1 + off, c);
                }
                u += 1;
            }
            if n >= 2 && u < n - 1 {
                return Err(ParseError::MissingLines {
                    expected: n - 1,
                    found: u,
                });
            }
            Ok(HostColoring::Complete(cc))
        }
        _ => Err(ParseError::BadHeader { line: hline }),
    }
}

/// Writes the bipartite format; inverse of [`parse_coloring`].
pub fn write_coloring(c: &ColoringMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "bipartite {} {} {}", c.m(), c.n(), c.r());
    for u in 0..c.m() {
        let row: Vec<String> = (0..c.n()).map(|v| c.color(u, v).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Writes the complete (upper-triangular) format.
pub fn write_complete_coloring(cc: &CompleteColoring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "complete {} {}", cc.n(), cc.r());
    for u in 0..cc.n().saturating_sub(1) {
        let row: Vec<String> = ((u + 1)..cc.n())
            .map(|v| cc.color(u, v).to_string())
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Reads a code file. When `r` is `None`, the alphabet size is inferred as
/// the largest letter present (at least 2).
pub fn parse_code(text: &str, r: Option<Color>) -> Result<Code, ParseError> {
    let mut words: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut expected_len: Option<usize> = None;
    for (lineno, line) in content_lines(text) {
        let raw = parse_fields(line, lineno)?;
        if let Some(len) = expected_len {
            if raw.len() != len {
                return Err(ParseError::WrongEntryCount {
                    line: lineno,
                    expected: len,
                    found: raw.len(),
                });
            }
        } else {
            expected_len = Some(raw.len());
        }
        words.push((lineno, raw));
    }
    if words.is_empty() {
        return Err(ParseError::EmptyCode);
    }
    let max_letter = words
        .iter()
        .flat_map(|(_, w)| w)
        .copied()
        .max()
        .unwrap_or(0);
    let r = match r {
        Some(r) => r,
        None => max_letter.clamp(2, 255) as Color,
    };
    let mut checked: Vec<Vec<Color>> = Vec::with_capacity(words.len());
    for (lineno, w) in &words {
        let mut word = Vec::with_capacity(w.len());
        for (i, &value) in w.iter().enumerate() {
            if value == 0 || value > r as u64 {
                return Err(ParseError::ColorOutOfRange {
                    line: *lineno,
                    col: i + 1,
                    value,
                    r,
                });
            }
            word.push(value as Color);
        }
        checked.push(word);
    }
    Ok(Code::from_raw(r, checked))
}

/// Writes a code, one word per line.
pub fn write_code(code: &Code) -> String {
    let mut out = String::new();
    for w in code.words() {
        let row: Vec<String> = w.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Serializes path records as JSON lines, one record per line.
pub fn path_records_to_json_lines(records: &[PathRecord]) -> String {
    let mut out = String::new();
    for rec in records {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(rec).expect("record serializes")
        );
    }
    out
}
