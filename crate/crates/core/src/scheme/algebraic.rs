use super::AssociationScheme;

/// A relation bijection `iota` with `c_{ab}^c = c_{iota(a) iota(b)}^{iota(c)}`
/// for every triple, or `None` when the schemes are not algebraically isomorphic.
pub fn algebraic_iso_check(s1: &AssociationScheme, s2: &AssociationScheme) -> Option<Vec<usize>> {
    let mut found = None;
    search(s1, s2, &mut |iota| {
        found = Some(iota.to_vec());
        false
    });
    found
}

/// Every algebraic isomorphism from `s1` to `s2`.
pub fn algebraic_isomorphisms(s1: &AssociationScheme, s2: &AssociationScheme) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    search(s1, s2, &mut |iota| {
        all.push(iota.to_vec());
        true
    });
    all
}

/// Backtracks over valency- and transpose-compatible assignments, checking
/// every tensor entry whose three indices are already assigned.
/// `visit` returns whether to keep searching.
fn search(
    s1: &AssociationScheme,
    s2: &AssociationScheme,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    if s1.order() != s2.order() || s1.rank() != s2.rank() {
        return;
    }
    let mut v1 = s1.valencies();
    let mut v2 = s2.valencies();
    v1.sort_unstable();
    v2.sort_unstable();
    if v1 != v2 {
        return;
    }
    let r = s1.rank();
    let mut iota = vec![usize::MAX; r];
    let mut used = vec![false; r];
    extend(s1, s2, 0, &mut iota, &mut used, visit);
}

fn extend(
    s1: &AssociationScheme,
    s2: &AssociationScheme,
    next: usize,
    iota: &mut Vec<usize>,
    used: &mut Vec<bool>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let r = s1.rank();
    if next == r {
        return visit(iota);
    }
    if iota[next] != usize::MAX {
        // already fixed as the transpose of an earlier relation
        return consistent(s1, s2, next, iota) && extend(s1, s2, next + 1, iota, used, visit);
    }
    let a = next;
    let a_star = s1.star(a);
    for b in 0..r {
        if used[b] || s1.valency(a) != s2.valency(b) {
            continue;
        }
        let b_star = s2.star(b);
        if (a == a_star) != (b == b_star) {
            continue;
        }
        if a_star != a && (a_star < a || used[b_star]) {
            continue;
        }
        iota[a] = b;
        used[b] = true;
        if a_star != a {
            iota[a_star] = b_star;
            used[b_star] = true;
        }
        let keep = !consistent(s1, s2, a, iota) || extend(s1, s2, next + 1, iota, used, visit);
        iota[a] = usize::MAX;
        used[b] = false;
        if a_star != a {
            iota[a_star] = usize::MAX;
            used[b_star] = false;
        }
        if !keep {
            return false;
        }
    }
    true
}

/// Checks all tensor entries involving `a` among assigned relations.
fn consistent(s1: &AssociationScheme, s2: &AssociationScheme, a: usize, iota: &[usize]) -> bool {
    let assigned: Vec<usize> = (0..s1.rank()).filter(|&x| iota[x] != usize::MAX).collect();
    for &p in &assigned {
        for &q in &assigned {
            for &(x, y, z) in &[(a, p, q), (p, a, q), (p, q, a)] {
                if s1.c(x, y, z) != s2.c(iota[x], iota[y], iota[z]) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::symmetric_group;
    use crate::scheme::{thin_group, trivial, GroupTable};

    /// Tries every relation bijection directly.
    fn brute_force(s1: &AssociationScheme, s2: &AssociationScheme) -> Vec<Vec<usize>> {
        if s1.rank() != s2.rank() || s1.order() != s2.order() {
            return Vec::new();
        }
        let r = s1.rank();
        symmetric_group(r)
            .filter(|p| {
                (0..r).all(|a| {
                    (0..r).all(|b| {
                        (0..r).all(|c| s1.c(a, b, c) == s2.c(p.apply(a), p.apply(b), p.apply(c)))
                    })
                })
            })
            .map(|p| p.images().to_vec())
            .collect()
    }

    #[test]
    fn self_iso_includes_identity() {
        let s = thin_group(&GroupTable::cyclic(4)).unwrap();
        let iota = algebraic_iso_check(&s, &s).unwrap();
        assert_eq!(iota.len(), 4);
        assert!(algebraic_isomorphisms(&s, &s).contains(&vec![0, 1, 2, 3]));
    }

    #[test]
    fn cyclic_vs_klein_matches_brute_force() {
        let c4 = thin_group(&GroupTable::cyclic(4)).unwrap();
        let v4 = thin_group(&GroupTable::elementary_abelian_2(2)).unwrap();
        let expected = brute_force(&c4, &v4);
        // C4 has non-symmetric relations, V4 has none
        assert!(expected.is_empty());
        assert_eq!(algebraic_iso_check(&c4, &v4), None);

        let mut all = algebraic_isomorphisms(&v4, &v4);
        all.sort();
        assert_eq!(all, brute_force(&v4, &v4));
        assert_eq!(all.len(), 6);
        let mut all = algebraic_isomorphisms(&c4, &c4);
        all.sort();
        assert_eq!(all, brute_force(&c4, &c4));
    }

    #[test]
    fn different_orders_are_never_isomorphic() {
        assert_eq!(algebraic_iso_check(&trivial(4), &trivial(8)), None);
    }

    #[test]
    fn order_eight_groups_agree_with_brute_force() {
        let groups = [
            GroupTable::elementary_abelian_2(3),
            GroupTable::dihedral(4),
            GroupTable::quaternion(),
            GroupTable::cyclic(8),
        ];
        let schemes: Vec<_> = groups.iter().map(|g| thin_group(g).unwrap()).collect();
        for a in &schemes {
            for b in &schemes {
                let mut fast = algebraic_isomorphisms(a, b);
                fast.sort();
                assert_eq!(fast, brute_force(a, b));
            }
        }
    }
}
