use super::AssociationScheme;
use crate::error::{Error, Result};

/// The rank-two scheme on `n` points: the diagonal and everything else.
pub fn trivial(n: usize) -> AssociationScheme {
    assert!(n >= 1, "a scheme needs at least one point");
    let rel: Vec<usize> = (0..n * n).map(|i| usize::from(i / n != i % n)).collect();
    AssociationScheme::verify(n, &rel).expect("the trivial scheme satisfies the axioms")
}

/// The thin scheme of a finite group: `(x, y)` lies in relation `g` when `y = x g`.
pub fn thin_group(group: &GroupTable) -> Result<AssociationScheme> {
    group.validate()?;
    let n = group.order();
    let mut rel = vec![0; n * n];
    for x in 0..n {
        let xi = group.inverse(x);
        for y in 0..n {
            rel[x * n + y] = group.mul(xi, y);
        }
    }
    AssociationScheme::verify(n, &rel)
}

/// A multiplication table `table[a * n + b] = a b` with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    table: Vec<usize>,
}

impl GroupTable {
    pub fn new(n: usize, table: Vec<usize>) -> Self {
        Self { n, table }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.n)
            .find(|&b| self.mul(a, b) == 0)
            .expect("validated tables have inverses")
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 || self.table.len() != n * n {
            return Err(Error::NotAGroup(format!(
                "expected {} entries for order {n}, got {}",
                n * n,
                self.table.len()
            )));
        }
        if let Some(&bad) = self.table.iter().find(|&&v| v >= n) {
            return Err(Error::NotAGroup(format!("entry {bad} out of range")));
        }
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::NotAGroup(format!("0 is not an identity for {a}")));
            }
        }
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.mul(a, b)] = true;
                col[self.mul(b, a)] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return Err(Error::NotAGroup(format!("not a Latin square at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "({a} {b}) {c} != {a} ({b} {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self { n, table }
    }

    /// Pairs `(a, b)` encoded as `a + |A| b`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Self {
        let (na, nb) = (a.n, b.n);
        let n = na * nb;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x % na, x / na);
                let (ya, yb) = (y % na, y / na);
                table[x * n + y] = a.mul(xa, ya) + na * b.mul(xb, yb);
            }
        }
        Self { n, table }
    }

    /// Dihedral group of order `2m`; element `k + m f` is `r^k s^f`.
    pub fn dihedral(m: usize) -> Self {
        let n = 2 * m;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (k1, f1) = (x % m, x / m);
                let (k2, f2) = (y % m, y / m);
                // r^k1 s^f1 r^k2 s^f2 = r^(k1 ± k2) s^(f1 + f2)
                let k = if f1 == 0 { k1 + k2 } else { k1 + m - k2 } % m;
                table[x * n + y] = k + m * ((f1 + f2) % 2);
            }
        }
        Self { n, table }
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`; element `2q + sign` with
    /// `q` indexing `1, i, j, k` and `sign = 1` for the negative.
    pub fn quaternion() -> Self {
        // unit products: UNIT[p][q] = (sign, unit) with p q = (-1)^sign unit
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut table = vec![0; 64];
        for x in 0..8 {
            for y in 0..8 {
                let (sign, unit) = UNIT[x / 2][y / 2];
                table[x * 8 + y] = 2 * unit + (sign + x % 2 + y % 2) % 2;
            }
        }
        Self { n: 8, table }
    }

    pub fn elementary_abelian_2(rank: u32) -> Self {
        let n = 1usize << rank;
        let table = (0..n * n).map(|i| (i / n) ^ (i % n)).collect();
        Self { n, table }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn element_orders(g: &GroupTable) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..g.order())
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = g.mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        orders.sort_unstable();
        orders
    }

    #[test]
    fn order_eight_groups_are_valid_and_distinct() {
        let groups = [
            GroupTable::elementary_abelian_2(3),
            GroupTable::dihedral(4),
            GroupTable::direct_product(&GroupTable::cyclic(4), &GroupTable::cyclic(2)),
            GroupTable::quaternion(),
            GroupTable::cyclic(8),
        ];
        let mut profiles = HashSet::new();
        for g in &groups {
            g.validate().unwrap();
            let abelian = (0..8).all(|a| (0..8).all(|b| g.mul(a, b) == g.mul(b, a)));
            profiles.insert((element_orders(g), abelian));
        }
        assert_eq!(profiles.len(), 5);
        assert_eq!(element_orders(&GroupTable::quaternion()), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert_eq!(element_orders(&GroupTable::dihedral(4)), vec![1, 2, 2, 2, 2, 2, 4, 4]);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let mut t = GroupTable::cyclic(4);
        t.table[5] = 0;
        assert!(matches!(thin_group(&t), Err(Error::NotAGroup(_))));
        // a Latin square with identity 0 that is not associative
        #[rustfmt::skip]
        let loop5 = GroupTable::new(5, vec![
            0, 1, 2, 3, 4,
            1, 0, 3, 4, 2,
            2, 4, 0, 1, 3,
            3, 2, 4, 0, 1,
            4, 3, 1, 2, 0,
        ]);
        assert!(matches!(loop5.validate(), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn thin_cyclic_scheme() {
        let s = thin_group(&GroupTable::cyclic(8)).unwrap();
        assert_eq!(s.rank(), 8);
        assert!(s.valencies().iter().all(|&k| k == 1));
    }

    #[test]
    fn trivial_valencies() {
        let s = trivial(8);
        assert_eq!(s.valencies(), vec![1, 7]);
        assert_eq!(trivial(1).rank(), 1);
    }
}
