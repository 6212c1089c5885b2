//! Hadamard files: a line holding `n`, then `n` rows written with `+` and `-`.
//! Rows of space-separated `1` / `-1` are accepted on read.

use super::HadamardMatrix;
use crate::error::{Error, Result};

pub fn write_hadamard(h: &HadamardMatrix) -> String {
    let n = h.order();
    let mut out = format!("{n}\n");
    for x in 0..n {
        out.extend((0..n).map(|y| if h.is_negative(x, y) { '-' } else { '+' }));
        out.push('\n');
    }
    out
}

pub fn parse_hadamard(text: &str) -> Result<HadamardMatrix> {
    let mut lines = crate::content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::BadInput("empty Hadamard file".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::BadInput(format!("bad order line {header:?}")))?;
    let mut entries = Vec::with_capacity(n * n);
    for x in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::BadInput(format!("missing row {x}")))?;
        let row = parse_row(line)?;
        if row.len() != n {
            return Err(Error::BadInput(format!(
                "row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        entries.extend(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::BadInput(format!("trailing content {extra:?}")));
    }
    HadamardMatrix::verify(n, &entries)
}

fn parse_row(line: &str) -> Result<Vec<i8>> {
    let compact: String = line.split_whitespace().collect();
    if !compact.is_empty() && compact.chars().all(|c| c == '+' || c == '-') {
        return Ok(compact.chars().map(|c| if c == '-' { -1 } else { 1 }).collect());
    }
    line.split_whitespace()
        .map(|tok| match tok {
            "1" | "+1" => Ok(1),
            "-1" => Ok(-1),
            _ => Err(Error::BadInput(format!("not a sign: {tok:?}"))),
        })
        .collect()
}
