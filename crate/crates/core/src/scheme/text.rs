//! Plain-text scheme files: a header line `n r`, then `n` rows of `n`
//! relation indices. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use super::AssociationScheme;
use crate::error::{Error, Result};

pub fn write_scheme(scheme: &AssociationScheme) -> String {
    let n = scheme.order();
    let mut out = format!("{} {}\n", n, scheme.rank());
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| scheme.rel(x, y).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn parse_scheme(text: &str) -> Result<AssociationScheme> {
    let mut lines = crate::content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::BadInput("empty scheme file".into()))?;
    let nums = parse_numbers(header)?;
    let [n, r] = nums[..] else {
        return Err(Error::BadInput(format!("bad header line {header:?}")));
    };
    let mut rel = Vec::with_capacity(n * n);
    for x in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::BadInput(format!("missing row {x}")))?;
        let row = parse_numbers(line)?;
        if row.len() != n {
            return Err(Error::BadInput(format!(
                "row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        rel.extend(row);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::BadInput(format!("trailing content {extra:?}")));
    }
    let scheme = AssociationScheme::verify(n, &rel)?;
    if scheme.rank() != r {
        return Err(Error::BadInput(format!(
            "header declares {r} relations, matrix uses {}",
            scheme.rank()
        )));
    }
    Ok(scheme)
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::BadInput(format!("not a relation index: {tok:?}")))
        })
        .collect()
}
