use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{symmetric_group, Perm, PermGroup};
use crate::scheme::AssociationScheme;

/// Largest degree for which `Sym(X)` is enumerated.
pub const GROUP_DEGREE_CAP: usize = 8;

/// Point permutations fixing every relation.
pub fn aut_group(scheme: &AssociationScheme) -> Result<PermGroup> {
    filter_sym(scheme, |s, p| {
        let n = s.order();
        (0..n).all(|x| (0..n).all(|y| s.rel(p.apply(x), p.apply(y)) == s.rel(x, y)))
    })
}

/// Point permutations permuting the relations.
pub fn iso_group(scheme: &AssociationScheme) -> Result<PermGroup> {
    filter_sym(scheme, |s, p| induced_relation_perm(s, p).is_some())
}

/// The relation permutation induced by `p`, if `p` respects the partition.
pub fn induced_relation_perm(scheme: &AssociationScheme, p: &Perm) -> Option<Vec<usize>> {
    let n = scheme.order();
    let mut map = vec![usize::MAX; scheme.rank()];
    let mut hit = vec![false; scheme.rank()];
    for x in 0..n {
        for y in 0..n {
            let (r, image) = (scheme.rel(x, y), scheme.rel(p.apply(x), p.apply(y)));
            if map[r] == usize::MAX {
                if std::mem::replace(&mut hit[image], true) {
                    return None;
                }
                map[r] = image;
            } else if map[r] != image {
                return None;
            }
        }
    }
    Some(map)
}

fn filter_sym(
    scheme: &AssociationScheme,
    keep: impl Fn(&AssociationScheme, &Perm) -> bool + Sync,
) -> Result<PermGroup> {
    let n = scheme.order();
    if n > GROUP_DEGREE_CAP {
        return Err(Error::DegreeTooLarge {
            degree: n,
            cap: GROUP_DEGREE_CAP,
        });
    }
    let all: Vec<Perm> = symmetric_group(n).collect();
    let kept: Vec<Perm> = all.into_par_iter().filter(|p| keep(scheme, p)).collect();
    Ok(PermGroup::from_elements(n, kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{catalog, thin_group, trivial, GroupTable};

    #[test]
    fn order_four_catalogue() {
        let expected = [(24, 24), (8, 8), (4, 24), (4, 8)];
        for (i, &(a, s)) in expected.iter().enumerate() {
            let scheme = catalog::as4(i + 1);
            let aut = aut_group(&scheme).unwrap();
            let iso = iso_group(&scheme).unwrap();
            assert_eq!((aut.order(), iso.order()), (a, s), "AS(4,{})", i + 1);
            assert!(aut.is_normal_in(&iso));
        }
    }

    #[test]
    fn thin_schemes_have_regular_automorphisms() {
        for n in 1..=6 {
            let s = thin_group(&GroupTable::cyclic(n)).unwrap();
            assert_eq!(aut_group(&s).unwrap().order(), n);
        }
        assert_eq!(iso_group(&thin_group(&GroupTable::dihedral(4)).unwrap()).unwrap().order(), 64);
    }

    #[test]
    fn trivial_scheme_groups_are_symmetric() {
        for n in 1..=5 {
            let factorial: usize = (1..=n).product();
            assert_eq!(iso_group(&trivial(n)).unwrap().order(), factorial);
        }
    }

    #[test]
    fn degree_cap() {
        assert_eq!(
            aut_group(&trivial(9)),
            Err(Error::DegreeTooLarge { degree: 9, cap: 8 })
        );
    }

    #[test]
    fn induced_map_of_c4_inversion() {
        let s = thin_group(&GroupTable::cyclic(4)).unwrap();
        let inversion = Perm::new(vec![0, 3, 2, 1]).unwrap();
        assert_eq!(induced_relation_perm(&s, &inversion), Some(vec![0, 3, 2, 1]));
        assert_eq!(induced_relation_perm(&s, &Perm::new(vec![0, 2, 1, 3]).unwrap()), None);
    }
}
