//! Resolving command-line names to schemes and matrices.
//!
//! A name is either a builtin (`AS41`, `C8`, `trivial6`, `H0`, `syl8`, ...)
//! or a path to a file in the text formats of the library.

use std::fs;

use hadamard_schemes::hadamard::{order_four, parse_hadamard, sylvester, write_hadamard, HadamardMatrix};
use hadamard_schemes::scheme::{parse_scheme, trivial, write_scheme, AssociationScheme};
use hadamard_schemes::{tables, Error};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::CliError;

fn rejected(name: &str, e: Error) -> CliError {
    match e {
        Error::BadInput(_) => CliError::Input(format!("{name}: {e}")),
        _ => CliError::Invalid(format!("{name}: {e}")),
    }
}

/// A resolved input and the SHA-256 of its text form.
#[derive(Clone, Debug, Serialize)]
pub struct InputHash {
    pub name: String,
    pub sha256: String,
}

fn hash(name: &str, text: &[u8]) -> InputHash {
    InputHash {
        name: name.to_string(),
        sha256: format!("{:x}", Sha256::digest(text)),
    }
}

pub fn builtin_scheme(name: &str) -> Option<AssociationScheme> {
    if let Some(n) = name.strip_prefix("trivial").and_then(|s| s.parse::<usize>().ok()) {
        return (n > 0).then(|| trivial(n));
    }
    tables::row_scheme(name)
}

pub fn builtin_hadamard(name: &str) -> Option<HadamardMatrix> {
    if let Some(i) = name.strip_prefix('H').and_then(|s| s.parse::<usize>().ok()) {
        return (i < 4).then(|| order_four(i));
    }
    let n: usize = name.strip_prefix("syl")?.parse().ok()?;
    (n.is_power_of_two() && n <= 1 << 12).then(|| sylvester(n.trailing_zeros()))
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

pub fn load_scheme(name: &str) -> Result<(AssociationScheme, InputHash), CliError> {
    if let Some(s) = builtin_scheme(name) {
        let h = hash(name, write_scheme(&s).as_bytes());
        return Ok((s, h));
    }
    let text = read(name)?;
    let s = parse_scheme(&text).map_err(|e| rejected(name, e))?;
    Ok((s, hash(name, text.as_bytes())))
}

pub fn load_hadamard(name: &str) -> Result<(HadamardMatrix, InputHash), CliError> {
    if let Some(h) = builtin_hadamard(name) {
        let digest = hash(name, write_hadamard(&h).as_bytes());
        return Ok((h, digest));
    }
    let text = read(name)?;
    let h = parse_hadamard(&text).map_err(|e| rejected(name, e))?;
    Ok((h, hash(name, text.as_bytes())))
}
