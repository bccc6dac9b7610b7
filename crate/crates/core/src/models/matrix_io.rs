//! Incidence-matrix text format.
//!
//! Header line `points=<n> lines=<m>`, followed by `n` rows of `m` characters
//! in {0,1}. Round trips are bit-exact.

use crate::error::{Error, Result};
use crate::incidence::IncidenceStructure;

pub fn export_incidence_matrix(s: &IncidenceStructure) -> String {
    let mut out = format!("points={} lines={}\n", s.n_points(), s.n_lines());
    for row in s.to_rows() {
        for bit in row {
            out.push(if bit { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn load_incidence_matrix(text: &str) -> Result<IncidenceStructure> {
    let err = |line: usize, column: usize, message: String| Error::Parse {
        line,
        column,
        message,
    };
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| err(1, 1, "empty input".into()))?;
    let mut parts = header.split_whitespace();
    let n_points = parse_header_field(parts.next(), "points", 1)?;
    let n_lines = parse_header_field(parts.next(), "lines", 1)?;
    if parts.next().is_some() {
        return Err(err(1, header.len(), "trailing tokens in header".into()));
    }

    let mut rows = Vec::with_capacity(n_points as usize);
    for (i, raw) in lines.enumerate() {
        let line_no = i + 2;
        if rows.len() == n_points as usize {
            if raw.trim().is_empty() {
                continue;
            }
            return Err(err(line_no, 1, "unexpected extra row".into()));
        }
        if raw.len() != n_lines as usize {
            return Err(err(
                line_no,
                raw.len() + 1,
                format!("row has {} entries, expected {}", raw.len(), n_lines),
            ));
        }
        let mut row = Vec::with_capacity(n_lines as usize);
        for (col, ch) in raw.chars().enumerate() {
            match ch {
                '0' => row.push(false),
                '1' => row.push(true),
                other => {
                    return Err(err(line_no, col + 1, format!("invalid character `{}`", other)))
                }
            }
        }
        rows.push(row);
    }
    if rows.len() != n_points as usize {
        return Err(err(
            rows.len() + 2,
            1,
            format!("expected {} rows, found {}", n_points, rows.len()),
        ));
    }
    IncidenceStructure::from_rows(n_points, n_lines, &rows)
}

fn parse_header_field(token: Option<&str>, name: &str, line: usize) -> Result<u32> {
    let token = token.ok_or_else(|| Error::Parse {
        line,
        column: 1,
        message: format!("missing `{name}=<n>`"),
    })?;
    let value = token
        .strip_prefix(&format!("{name}="))
        .and_then(|v| v.parse::<u32>().ok())
        .ok_or_else(|| Error::Parse {
            line,
            column: 1,
            message: format!("expected `{name}=<n>`, got `{token}`"),
        })?;
    Ok(value)
}

/// Canonical Fano plane fixture in the text format.
pub fn fano_matrix_text() -> String {
    // Lines {1,2,3},{1,4,5},{1,6,7},{2,4,6},{2,5,7},{3,4,7},{3,5,6} on
    // points 1..7, zero-indexed below.
    let lines: [[usize; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let mut rows = vec![vec![false; 7]; 7];
    for (l, pts) in lines.iter().enumerate() {
        for &p in pts {
            rows[p][l] = true;
        }
    }
    let mut out = String::from("points=7 lines=7\n");
    for row in rows {
        for bit in row {
            out.push(if bit { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}
