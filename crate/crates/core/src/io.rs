//! Generator matrix text format: a header line `q k n`, then `k` lines of `n`
//! whitespace-separated element indices.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::construction::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;

pub fn write_matrix(code: &LinearCode) -> String {
    let g = code.generator();
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", code.q(), g.rows(), g.cols());
    for i in 0..g.rows() {
        let row: Vec<String> = g.row(i).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} {tok:?} is not a nonnegative integer")))
}

/// Parses the text format. Blank lines are skipped.
pub fn read_matrix(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(parse_err(hline, "header must be \"q k n\""));
    }
    let q: u64 = parse_num(parts[0], hline, "q")?;
    let k: usize = parse_num(parts[1], hline, "k")?;
    let n: usize = parse_num(parts[2], hline, "n")?;
    let field = Arc::new(Field::from_order(q).map_err(|e| parse_err(hline, e.to_string()))?);

    let mut rows = Vec::with_capacity(k);
    for (lineno, line) in lines {
        if rows.len() == k {
            return Err(parse_err(lineno, format!("more than k = {k} rows")));
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                let v: u64 = parse_num(tok, lineno, "entry")?;
                field.check(v).map_err(|e| parse_err(lineno, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(
                lineno,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    let g = if k == 0 {
        Matrix::zeros(0, n)
    } else {
        Matrix::from_rows(&rows)?
    };
    LinearCode::new(field, g)
}
