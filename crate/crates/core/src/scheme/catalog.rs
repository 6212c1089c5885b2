//! Small schemes built programmatically.
//!
//! The four schemes of order 4 are numbered as in the standard small-scheme
//! catalogue. Of the sixteen non-thin schemes of order 8, those obtainable as
//! wreath or direct products of smaller ones are provided and identified by
//! their `(|Aut|, |Iso|)` pair; the rest have to be read from files.

use crate::perm::Perm;

use super::{thin_group, trivial, wreath_product, AssociationScheme, GroupTable};

/// `AS(4, i)` for `i` in `1..=4`.
///
/// 1. trivial; 2. a perfect matching `{0,1} {2,3}`; 3. thin on `C2 x C2`;
/// 4. thin on `C4` with cyclic order `0, 2, 1, 3`, so that `{0,1}` and
/// `{2,3}` are the antipodal pairs as in case 2.
pub fn as4(i: usize) -> AssociationScheme {
    match i {
        1 => trivial(4),
        2 => wreath_product(&trivial(2), &trivial(2)),
        3 => thin_group(&GroupTable::elementary_abelian_2(2)).expect("group"),
        4 => thin_group(&GroupTable::cyclic(4))
            .expect("group")
            .relabel_points(&Perm::new(vec![0, 2, 1, 3]).expect("permutation")),
        _ => panic!("AS(4, {i}) does not exist"),
    }
}

/// Order-8 catalogue numbers with a product construction.
pub const AS8_BUILT: [usize; 9] = [1, 2, 3, 4, 5, 7, 8, 9, 11];

/// `AS(8, i)` for the numbers in [`AS8_BUILT`], `None` otherwise.
pub fn as8(i: usize) -> Option<AssociationScheme> {
    let t2 = trivial(2);
    let t4 = trivial(4);
    Some(match i {
        1 => trivial(8),
        2 => wreath_product(&t2, &t4),
        3 => wreath_product(&t4, &t2),
        4 => wreath_product(&wreath_product(&t2, &t2), &t2),
        5 => direct_product(&t2, &t4),
        7 => wreath_product(&as4(3), &t2),
        8 => wreath_product(&as4(4), &t2),
        9 => wreath_product(&t2, &as4(3)),
        11 => wreath_product(&t2, &as4(4)),
        _ => return None,
    })
}

/// The five groups of order 8, in the order `C2^3, D4, C4 x C2, Q8, C8`.
pub const THIN_8: [&str; 5] = ["C2xC2xC2", "D4", "C4xC2", "Q8", "C8"];

pub fn thin8(name: &str) -> Option<AssociationScheme> {
    let group = match name {
        "C2xC2xC2" => GroupTable::elementary_abelian_2(3),
        "D4" => GroupTable::dihedral(4),
        "C4xC2" => GroupTable::direct_product(&GroupTable::cyclic(4), &GroupTable::cyclic(2)),
        "Q8" => GroupTable::quaternion(),
        "C8" => GroupTable::cyclic(8),
        _ => return None,
    };
    Some(thin_group(&group).expect("group"))
}

/// Relation `(s, t)` of `a x b` on point `(p, q)` at index `q * |a| + p`.
fn direct_product(a: &AssociationScheme, b: &AssociationScheme) -> AssociationScheme {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut rel = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            rel[i * n + j] = a.rel(i % na, j % na) + a.rank() * b.rel(i / na, j / na);
        }
    }
    AssociationScheme::verify(n, &rel).expect("a direct product of schemes is a scheme")
}
