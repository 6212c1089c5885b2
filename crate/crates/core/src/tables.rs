//! Published counts for orders 4 and 8, used as reference data.

use crate::hadamard::{order_four, sylvester, HadamardMatrix};
use crate::scheme::{catalog, AssociationScheme};

/// One row: a base scheme, its group orders, the number of similarity
/// classes of Hadamard matrices and the lower bound for that number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub name: &'static str,
    pub aut: u64,
    pub iso: u64,
    pub classes: u64,
    pub bound: u64,
}

const fn row(name: &'static str, aut: u64, iso: u64, classes: u64, bound: u64) -> TableRow {
    TableRow {
        name,
        aut,
        iso,
        classes,
        bound,
    }
}

/// `|Aut_x0|` of the order-4 matrix.
pub const AUT_X0_ORDER_4: u64 = 6;
/// `|Aut_x0|` of the order-8 matrix.
pub const AUT_X0_ORDER_8: u64 = 168;

pub const ORDER_4: [TableRow; 4] = [
    row("AS41", 24, 24, 1, 1),
    row("AS42", 8, 8, 2, 1),
    row("AS43", 4, 24, 3, 1),
    row("AS44", 4, 8, 2, 1),
];

pub const ORDER_8: [TableRow; 21] = [
    row("AS81", 40320, 40320, 1, 1),
    row("AS82", 384, 384, 17, 1),
    row("AS83", 1152, 1152, 6, 1),
    row("AS84", 128, 128, 56, 5),
    row("AS85", 48, 48, 218, 33),
    row("AS86", 24, 48, 104, 66),
    row("AS87", 32, 192, 130, 13),
    row("AS88", 32, 64, 143, 37),
    row("AS89", 64, 384, 37, 4),
    row("AS810", 16, 32, 337, 148),
    row("AS811", 64, 128, 60, 10),
    row("AS812", 16, 32, 247, 148),
    row("AS813", 16, 64, 377, 74),
    row("AS814", 16, 64, 319, 74),
    row("AS815", 16, 64, 286, 74),
    row("AS816", 16, 64, 179, 74),
    row("C2xC2xC2", 8, 1344, 65, 8),
    row("D4", 8, 64, 441, 148),
    row("C4xC2", 8, 64, 442, 148),
    row("Q8", 8, 192, 138, 50),
    row("C8", 8, 32, 462, 296),
];

/// Order-4 orbit sizes per base scheme, each paired with the representatives
/// `H_i` lying in that orbit.
pub const ORDER_4_ORBITS: [&[(u64, &[usize])]; 4] = [
    &[(768, &[0, 1, 2, 3])],
    &[(256, &[0, 1]), (512, &[2, 3])],
    &[(384, &[0, 2]), (128, &[1]), (256, &[3])],
    &[(256, &[0, 1]), (512, &[2, 3])],
];

/// The scheme of a row, when it can be built without a data file.
pub fn row_scheme(name: &str) -> Option<AssociationScheme> {
    if let Some(i) = name.strip_prefix("AS4").and_then(|s| s.parse().ok()) {
        return (1..=4).contains(&i).then(|| catalog::as4(i));
    }
    if let Some(i) = name.strip_prefix("AS8").and_then(|s| s.parse().ok()) {
        return catalog::as8(i);
    }
    catalog::thin8(name)
}

/// The reference Hadamard matrix of order 4 or 8.
pub fn reference_matrix(n: usize) -> Option<HadamardMatrix> {
    match n {
        4 => Some(order_four(0)),
        8 => Some(sylvester(3)),
        _ => None,
    }
}

pub fn find_row(name: &str) -> Option<&'static TableRow> {
    ORDER_4.iter().chain(ORDER_8.iter()).find(|r| r.name == name)
}
