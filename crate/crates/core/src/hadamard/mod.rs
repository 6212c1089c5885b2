//! Hadamard matrices packed one bit per entry.
//!
//! Bit set means `-1`. Rows are stored row-major, each row padded to a whole
//! number of 64-bit words, so row orthogonality is a popcount of XORed words.
//! Orders up to 8 additionally pack into a single `u64` (entry `(x, y)` at bit
//! `x * n + y`), which is the state key used by orbit enumeration.

mod monomial;
mod search;
mod text;

pub use monomial::{MonomialPair, Signs};
pub use search::{aut_x0, equivalence_check, AutX0, EQUIVALENCE_ORDER_CAP};
pub use text::{parse_hadamard, write_hadamard};

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HadamardMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

/// A matrix with all-`+1` first row and first column, plus the signs that
/// produced it: `normalized = D_row * original * D_col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub matrix: HadamardMatrix,
    pub row_signs: Signs,
    pub col_signs: Signs,
}

impl HadamardMatrix {
    /// Checks a dense `±1` matrix (row-major) for the Hadamard property.
    pub fn verify(n: usize, entries: &[i8]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::BadInput(format!(
                "expected {} entries for order {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&e| e != 1 && e != -1) {
            return Err(Error::BadInput(format!("entry {bad} is not ±1")));
        }
        if n == 0 || (n > 2 && n % 4 != 0) {
            return Err(Error::BadOrder(n));
        }
        let mut h = Self::zeros(n);
        for (i, &e) in entries.iter().enumerate() {
            if e < 0 {
                h.flip(i / n, i % n);
            }
        }
        h.check_orthogonal()?;
        Ok(h)
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadInput("matrix is not square".into()));
        }
        let flat: Vec<i8> = rows.iter().flatten().copied().collect();
        Self::verify(n, &flat)
    }

    fn zeros(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        Self {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    fn check_orthogonal(&self) -> Result<()> {
        for x in 0..self.n {
            for y in x + 1..self.n {
                let diff: u32 = self
                    .row_words(x)
                    .iter()
                    .zip(self.row_words(y))
                    .map(|(a, b)| (a ^ b).count_ones())
                    .sum();
                if 2 * diff as usize != self.n {
                    return Err(Error::NotOrthogonal(x, y));
                }
            }
        }
        Ok(())
    }

    /// Builds a matrix known to be Hadamard from an entry function.
    pub(crate) fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> i8) -> Self {
        let mut h = Self::zeros(n);
        for x in 0..n {
            for y in 0..n {
                if entry(x, y) < 0 {
                    h.flip(x, y);
                }
            }
        }
        debug_assert!(h.check_orthogonal().is_ok());
        h
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn row_words(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words_per_row..(x + 1) * self.words_per_row]
    }

    #[inline]
    fn flip(&mut self, x: usize, y: usize) {
        self.bits[x * self.words_per_row + y / 64] ^= 1 << (y % 64);
    }

    #[inline]
    pub fn is_negative(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.words_per_row + y / 64] >> (y % 64) & 1 == 1
    }

    #[inline]
    pub fn entry(&self, x: usize, y: usize) -> i8 {
        if self.is_negative(x, y) {
            -1
        } else {
            1
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.entry(x, y)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |x, y| self.entry(y, x))
    }

    pub fn negate(&self) -> Self {
        Self::from_fn(self.n, |x, y| -self.entry(x, y))
    }

    /// `D_x H`.
    pub fn negate_row(&self, row: usize) -> Self {
        let mut h = self.clone();
        for y in 0..self.n {
            h.flip(row, y);
        }
        h
    }

    /// `H D_y`.
    pub fn negate_col(&self, col: usize) -> Self {
        let mut h = self.clone();
        for x in 0..self.n {
            h.flip(x, col);
        }
        h
    }

    pub fn is_normalized(&self) -> bool {
        (0..self.n).all(|i| !self.is_negative(0, i) && !self.is_negative(i, 0))
    }

    /// Negates every column with a `-1` in row 0, then every row with a `-1`
    /// in column 0.
    pub fn normalize(&self) -> Normalized {
        let n = self.n;
        let col_signs: Vec<i8> = (0..n).map(|y| self.entry(0, y)).collect();
        let c0 = col_signs[0];
        let row_signs: Vec<i8> = (0..n).map(|x| self.entry(x, 0) * c0).collect();
        let matrix = Self::from_fn(n, |x, y| row_signs[x] * self.entry(x, y) * col_signs[y]);
        Normalized {
            matrix,
            row_signs: Signs(row_signs),
            col_signs: Signs(col_signs),
        }
    }

    /// The whole matrix as one word, for orders up to 8.
    pub fn packed(&self) -> Option<u64> {
        if self.n > 8 {
            return None;
        }
        let mut word = 0u64;
        for x in 0..self.n {
            for y in 0..self.n {
                if self.is_negative(x, y) {
                    word |= 1 << (x * self.n + y);
                }
            }
        }
        Some(word)
    }

    /// Inverse of [`packed`](Self::packed). The word is trusted to encode a
    /// Hadamard matrix.
    pub fn from_packed(n: usize, word: u64) -> Self {
        assert!(n <= 8, "packed words hold orders up to 8");
        Self::from_fn(n, |x, y| if word >> (x * n + y) & 1 == 1 { -1 } else { 1 })
    }
}

/// Sylvester matrix of order `2^k`: `[[H, H], [H, -H]]` iterated from `(+1)`.
pub fn sylvester(k: u32) -> HadamardMatrix {
    assert!(k <= 16, "Sylvester orders are capped at 2^16");
    let n = 1usize << k;
    // entry (x, y) of the k-fold doubling is (-1)^popcount(x & y)
    HadamardMatrix::from_fn(n, |x, y| if (x & y).count_ones() % 2 == 1 { -1 } else { 1 })
}

/// The four normalized order-4 matrices `H0 .. H3` used as orbit
/// representatives in the order-4 examples.
pub fn order_four(i: usize) -> HadamardMatrix {
    let rows: [&str; 3] = match i {
        0 => ["++--", "+--+", "+-+-"],
        1 => ["++--", "+-+-", "+--+"],
        2 => ["+--+", "+-+-", "++--"],
        3 => ["+--+", "++--", "+-+-"],
        _ => panic!("H{i} is not defined"),
    };
    let rows: Vec<Vec<i8>> = std::iter::once("++++")
        .chain(rows)
        .map(|r| r.chars().map(|c| if c == '-' { -1 } else { 1 }).collect())
        .collect();
    HadamardMatrix::from_rows(&rows).expect("order-4 Hadamard")
}

impl fmt::Debug for HadamardMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HadamardMatrix({})", self.n)?;
        for x in 0..self.n {
            let row: String = (0..self.n)
                .map(|y| if self.is_negative(x, y) { '-' } else { '+' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}
