//! Association schemes induced by Hadamard matrices.

pub mod actions;
pub mod builder;
pub mod error;
pub mod hadamard;
pub mod iso;
pub mod perm;
pub mod scheme;
pub mod tables;

pub use error::{Error, Result};

/// Lines of a text file with blank and `#` comment lines removed.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().filter(|l| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    })
}
