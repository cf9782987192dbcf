//! Line-oriented text format for linear maps.
//!
//! ```text
//! # Example 1 with a = b = 1
//! field rational          # or `cyclotomic 3`, `gf 7`
//! d 2
//! dim 2
//! matrix 1
//! 1 1
//! 0 0
//! matrix 2
//! 0 1
//! 0 1
//! ```
//!
//! Rows are split on commas when the line contains one, otherwise on
//! whitespace; cyclotomic entries must then be written without spaces
//! (`1/2*z^2-z+3`). `#` starts a comment.

use std::fmt::Write as _;
use thiserror::Error;

use crate::algebra::LinearMap;
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: conflicting field declaration `{found}` (already `{expected}`)")]
    FieldMismatch {
        line: usize,
        expected: FieldDescriptor,
        found: FieldDescriptor,
    },
    #[error("line {line}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> DocumentError {
    DocumentError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a row into `(column, token)` pairs.
fn cells(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let comma = text.contains(',');
    let mut start = None;
    for (i, ch) in text.char_indices() {
        let sep = if comma { ch == ',' } else { ch.is_whitespace() };
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    if comma {
        // Commas may leave surrounding whitespace (and empty cells) behind.
        out = out
            .into_iter()
            .map(|(c, t)| (c + t.len() - t.trim_start().len(), t.trim()))
            .collect();
    }
    out
}

/// Parses and validates a linear-map document.
pub fn parse_linear_map(document: &str) -> Result<LinearMap, DocumentError> {
    let mut field: Option<FieldDescriptor> = None;
    let mut d: Option<usize> = None;
    let mut dim: Option<usize> = None;
    let mut matrices: Vec<Option<Matrix>> = Vec::new();
    // (matrix index, rows collected so far, line of the header)
    let mut current: Option<(usize, Vec<Vec<Scalar>>, usize)> = None;

    let lines: Vec<(usize, &str)> = document
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();

    let finish = |current: &mut Option<(usize, Vec<Vec<Scalar>>, usize)>,
                  matrices: &mut Vec<Option<Matrix>>,
                  field: FieldDescriptor,
                  dim: usize|
     -> Result<(), DocumentError> {
        if let Some((idx, rows, header)) = current.take() {
            if rows.len() != dim {
                return Err(DocumentError::DimensionMismatch {
                    line: header,
                    expected: dim,
                    found: rows.len(),
                });
            }
            matrices[idx] = Some(Matrix::from_rows(field, rows).expect("rows validated"));
        }
        Ok(())
    };

    for (lineno, text) in lines {
        let toks = cells(text);
        let (col0, head) = toks[0];
        let keyword = head.to_ascii_lowercase();
        let header_ready = field.is_some() && d.is_some() && dim.is_some();

        if let Some((_, rows, _)) = current.as_mut() {
            let n = dim.expect("matrix started after header");
            if keyword != "matrix" && rows.len() < n {
                if toks.len() != n {
                    return Err(DocumentError::DimensionMismatch {
                        line: lineno,
                        expected: n,
                        found: toks.len(),
                    });
                }
                let f = field.expect("header");
                let row = toks
                    .iter()
                    .map(|(c, t)| {
                        f.parse_scalar(t)
                            .map_err(|e| parse_err(lineno, c + 1, e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(row);
                continue;
            }
        }

        match keyword.as_str() {
            "field" => {
                let rest = text.trim_start()[head.len()..].trim();
                let parsed: FieldDescriptor =
                    rest.parse().map_err(|e: crate::field::FieldError| {
                        parse_err(lineno, col0 + head.len() + 2, e.to_string())
                    })?;
                match field {
                    Some(existing) if existing != parsed => {
                        return Err(DocumentError::FieldMismatch {
                            line: lineno,
                            expected: existing,
                            found: parsed,
                        })
                    }
                    _ => field = Some(parsed),
                }
            }
            "d" | "dim" => {
                if toks.len() != 2 {
                    return Err(parse_err(
                        lineno,
                        col0 + 1,
                        format!("`{head}` takes one positive integer"),
                    ));
                }
                let (c, t) = toks[1];
                let v: usize = t.parse().ok().filter(|v| *v > 0).ok_or_else(|| {
                    parse_err(lineno, c + 1, format!("`{t}` is not a positive integer"))
                })?;
                if current.is_some() || matrices.iter().any(Option::is_some) {
                    return Err(parse_err(lineno, col0 + 1, "header after matrix data"));
                }
                if keyword == "d" {
                    d = Some(v);
                    matrices = vec![None; v];
                } else {
                    dim = Some(v);
                }
            }
            "matrix" => {
                if !header_ready {
                    return Err(parse_err(
                        lineno,
                        col0 + 1,
                        "`matrix` before `field`, `d` and `dim`",
                    ));
                }
                let (f, dd, n) = (field.unwrap(), d.unwrap(), dim.unwrap());
                finish(&mut current, &mut matrices, f, n)?;
                if toks.len() != 2 {
                    return Err(parse_err(lineno, col0 + 1, "`matrix` takes one index"));
                }
                let (c, t) = toks[1];
                let idx: usize =
                    t.parse()
                        .ok()
                        .filter(|i| (1..=dd).contains(i))
                        .ok_or_else(|| {
                            parse_err(lineno, c + 1, format!("matrix index must be in 1..={dd}"))
                        })?;
                if matrices[idx - 1].is_some() {
                    return Err(parse_err(
                        lineno,
                        c + 1,
                        format!("matrix {idx} given twice"),
                    ));
                }
                current = Some((idx - 1, Vec::new(), lineno));
            }
            _ => {
                let message = if header_ready {
                    format!("unexpected `{head}`: matrix rows must follow a `matrix i` line")
                } else {
                    format!("unknown keyword `{head}`")
                };
                return Err(parse_err(lineno, col0 + 1, message));
            }
        }
    }

    let (Some(f), Some(dd), Some(n)) = (field, d, dim) else {
        return Err(parse_err(0, 0, "missing `field`, `d` or `dim` header"));
    };
    let last_line = document.lines().count();
    finish(&mut current, &mut matrices, f, n)?;
    let alphas = matrices
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| parse_err(last_line, 0, format!("matrix {} missing (d = {dd})", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearMap::new(f, alphas).expect("validated shapes"))
}

/// Renders a map in the document format accepted by [`parse_linear_map`].
pub fn render_linear_map(phi: &LinearMap) -> String {
    let mut out = String::new();
    writeln!(out, "field {}", phi.field()).unwrap();
    writeln!(out, "d {}", phi.d()).unwrap();
    writeln!(out, "dim {}", phi.dim()).unwrap();
    for (i, a) in phi.alphas().iter().enumerate() {
        writeln!(out, "matrix {}", i + 1).unwrap();
        writeln!(out, "{a}").unwrap();
    }
    out
}
