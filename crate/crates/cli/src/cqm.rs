//! The `.cqm` text format.
//!
//! ```text
//! # comments run to the end of the line
//! rows: 2
//! cols: 2
//! label: optional free text
//! 0 1 0 0      # entry (0, 0) as t x y z
//! 0 0 1 1      # entry (0, 1)
//! 1 0 0 0
//! 0 0 0 1
//! ```
//!
//! Header lines come first. Entries follow in row-major order, one
//! quaternion per line.

use cquat::{CQMatrix, CQuat};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("missing header key `{0}`")]
    MissingKey(&'static str),
    #[error("empty matrix ({rows}x{cols})")]
    Empty { rows: usize, cols: usize },
    #[error("shape mismatch: header declares {rows}x{cols} = {expected} entries, found {found}")]
    Shape {
        rows: usize,
        cols: usize,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CqmFile {
    pub label: Option<String>,
    pub matrix: CQMatrix,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits `s` into whitespace-separated tokens with 1-based byte columns.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - s.as_ptr() as usize + 1, tok))
}

fn parse_dim(value: &str, line: usize, column: usize) -> Result<usize, ParseError> {
    value
        .trim()
        .parse()
        .map_err(|_| syntax(line, column, format!("expected a non-negative integer, found `{}`", value.trim())))
}

pub fn parse(src: &str) -> Result<CqmFile, ParseError> {
    let mut rows = None;
    let mut cols = None;
    let mut label = None;
    let mut entries = Vec::new();

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }

        if let Some((key, value)) = content.split_once(':') {
            let key_col = content.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
            let value_col = key.len() + 2 + (value.len() - value.trim_start().len());
            if !entries.is_empty() {
                return Err(syntax(line, key_col, "header line after matrix entries"));
            }
            let slot = match key.trim() {
                "rows" => &mut rows,
                "cols" => &mut cols,
                "label" => {
                    if label.is_some() {
                        return Err(syntax(line, key_col, "duplicate key `label`"));
                    }
                    label = Some(value.trim().to_string());
                    continue;
                }
                other => return Err(syntax(line, key_col, format!("unknown header key `{other}`"))),
            };
            if slot.is_some() {
                return Err(syntax(line, key_col, format!("duplicate key `{}`", key.trim())));
            }
            *slot = Some(parse_dim(value, line, value_col)?);
            continue;
        }

        let mut comps = [0.0; 4];
        let mut count = 0;
        for (column, tok) in tokens(content) {
            if count == 4 {
                return Err(syntax(line, column, "more than 4 components in entry"));
            }
            let v: f64 = tok
                .parse()
                .map_err(|_| syntax(line, column, format!("invalid number `{tok}`")))?;
            if !v.is_finite() {
                return Err(syntax(line, column, format!("non-finite value `{tok}`")));
            }
            comps[count] = v;
            count += 1;
        }
        if count < 4 {
            let column = content.trim_end().len() + 1;
            return Err(syntax(line, column, format!("expected 4 components (t x y z), found {count}")));
        }
        entries.push(CQuat::from_array(comps));
    }

    let rows = rows.ok_or(ParseError::MissingKey("rows"))?;
    let cols = cols.ok_or(ParseError::MissingKey("cols"))?;
    if rows == 0 || cols == 0 {
        return Err(ParseError::Empty { rows, cols });
    }
    let expected = rows.checked_mul(cols).ok_or(ParseError::Shape {
        rows,
        cols,
        expected: usize::MAX,
        found: entries.len(),
    })?;
    if entries.len() != expected {
        return Err(ParseError::Shape {
            rows,
            cols,
            expected,
            found: entries.len(),
        });
    }
    let matrix = CQMatrix::new(rows, cols, entries).expect("shape checked above");
    Ok(CqmFile { label, matrix })
}

/// Writes `m` in `.cqm` form. Floats use the shortest round-trip
/// representation, so `parse(&write(m, l))` reproduces `m` exactly.
pub fn write(m: &CQMatrix, label: Option<&str>) -> String {
    let mut out = format!("rows: {}\ncols: {}\n", m.rows(), m.cols());
    if let Some(l) = label {
        out.push_str(&format!("label: {}\n", l.replace(['#', '\n'], " ")));
    }
    for i in 0..m.rows() {
        for (j, q) in m.row(i).iter().enumerate() {
            out.push_str(&format!("{:?} {:?} {:?} {:?}", q.t, q.x, q.y, q.z));
            out.push_str(&format!("  # ({i}, {j})\n"));
        }
    }
    out
}
