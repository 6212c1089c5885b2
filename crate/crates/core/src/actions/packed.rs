//! Monomial actions on matrices of order at most 8 packed into one word.
//!
//! Entry `(x, y)` sits at bit `x * n + y`, so row `x` is the `n`-bit field
//! starting at `x * n`.

use crate::hadamard::MonomialPair;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Layout {
    pub n: usize,
    row_mask: u64,
}

impl Layout {
    pub fn new(n: usize) -> Self {
        assert!((1..=8).contains(&n));
        Self {
            n,
            row_mask: (1u64 << n) - 1,
        }
    }

    #[inline]
    pub fn row(&self, word: u64, x: usize) -> u64 {
        word >> (x * self.n) & self.row_mask
    }

    /// Negates columns to clear row 0, then negates rows to clear column 0.
    #[inline]
    pub fn normalize(&self, word: u64) -> u64 {
        let first = self.row(word, 0);
        let mut out = 0;
        for x in 0..self.n {
            let mut r = self.row(word, x) ^ first;
            if r & 1 == 1 {
                r ^= self.row_mask;
            }
            out |= r << (x * self.n);
        }
        out
    }

    pub fn transpose(&self, word: u64) -> u64 {
        let n = self.n;
        let mut out = 0;
        for x in 0..n {
            for y in 0..n {
                out |= (word >> (x * n + y) & 1) << (y * n + x);
            }
        }
        out
    }
}

/// A [`MonomialPair`] compiled to a row shuffle plus a per-row lookup table.
#[derive(Clone, Debug)]
pub(crate) struct PackedMove {
    layout: Layout,
    row_source: Vec<usize>,
    row_flip: Vec<u64>,
    column_table: Vec<u64>,
}

impl PackedMove {
    pub fn new(layout: Layout, pair: &MonomialPair) -> Self {
        let n = layout.n;
        assert_eq!(pair.degree(), n);
        let col_mask: u64 = (0..n)
            .filter(|&y| pair.col_signs.get(y) < 0)
            .map(|y| 1 << y)
            .sum();
        let column_table = (0..1u64 << n)
            .map(|v| {
                let permuted: u64 = (0..n)
                    .map(|y| (v >> pair.col_perm.apply(y) & 1) << y)
                    .sum();
                permuted ^ col_mask
            })
            .collect();
        Self {
            layout,
            row_source: (0..n).map(|x| pair.row_perm.apply(x)).collect(),
            row_flip: (0..n)
                .map(|x| if pair.row_signs.get(x) < 0 { layout.row_mask } else { 0 })
                .collect(),
            column_table,
        }
    }

    /// `row_signs[x] * H[σx][τy] * col_signs[y]`, as in [`MonomialPair::apply`].
    #[inline]
    pub fn apply(&self, word: u64) -> u64 {
        let n = self.layout.n;
        let mut out = 0;
        for x in 0..n {
            let src = self.layout.row(word, self.row_source[x]);
            out |= (self.column_table[src as usize] ^ self.row_flip[x]) << (x * n);
        }
        out
    }
}
