//! Backtracking searches for unsigned row/column permutations between
//! Hadamard matrices.

use rayon::prelude::*;

use super::HadamardMatrix;
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// Largest order accepted by [`equivalence_check`].
pub const EQUIVALENCE_ORDER_CAP: usize = 12;

/// `Aut_{x0}(H)`: unsigned pairs `(σ, τ)` fixing `x0` with `H[σx][τy] = H[x][y]`.
///
/// Stored as a group of degree `2n`: `σ` acts on `0..n` and `τ` on `n..2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutX0 {
    n: usize,
    group: PermGroup,
}

impl AutX0 {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn pairs(&self) -> Vec<(Perm, Perm)> {
        let n = self.n;
        self.group
            .elements()
            .iter()
            .map(|p| {
                let sigma = Perm::from_images_unchecked(p.images()[..n].to_vec());
                let tau = Perm::from_images_unchecked(p.images()[n..].iter().map(|&v| v - n).collect());
                (sigma, tau)
            })
            .collect()
    }
}

/// Every pair `(σ, τ)` fixing `x0` on both sides with `P_σ⁻¹ H P_τ = H`.
///
/// Rows are assigned one at a time; a branch survives only while the multiset
/// of partial column patterns of `H` under `σ` matches that of `H`. The column
/// permutation is then forced because Hadamard columns are pairwise distinct.
pub fn aut_x0(h: &HadamardMatrix, x0: usize) -> AutX0 {
    let n = h.order();
    assert!(x0 < n, "x0 out of range");
    // move x0 to index 0 so the search can pin index 0
    let swap = Perm::transposition(n, 0, x0);
    let moved = HadamardMatrix::from_fn(n, |x, y| h.entry(swap.apply(x), swap.apply(y)));
    let found = unsigned_matches(&moved, &moved, true, usize::MAX);
    let elements = found.into_iter().map(|(sigma, tau)| {
        let sigma = swap.compose(&sigma).compose(&swap);
        let tau = swap.compose(&tau).compose(&swap);
        let images = sigma
            .images()
            .iter()
            .copied()
            .chain(tau.images().iter().map(|&v| v + n))
            .collect();
        Perm::from_images_unchecked(images)
    });
    AutX0 {
        n,
        group: PermGroup::from_elements(2 * n, elements),
    }
}

/// Whether `h2` lies in the orbit of `h1` under signed row and column
/// permutations.
///
/// `h1` is normalized at `(0, 0)`. For every choice of the entry of `h2` that
/// could play the role of `h1`'s corner, that row and column are moved to the
/// front and the result normalized; the two normalized matrices must then
/// differ only by unsigned permutations fixing index 0.
pub fn equivalence_check(h1: &HadamardMatrix, h2: &HadamardMatrix) -> Result<bool> {
    let n = h1.order();
    if h2.order() != n {
        return Err(Error::BadInput(format!(
            "orders differ: {} and {}",
            n,
            h2.order()
        )));
    }
    if n > EQUIVALENCE_ORDER_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: EQUIVALENCE_ORDER_CAP,
        });
    }
    let target = h1.normalize().matrix;
    let corners: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
    Ok(corners.par_iter().any(|&(r, c)| {
        let rs = Perm::transposition(n, 0, r);
        let cs = Perm::transposition(n, 0, c);
        let moved = HadamardMatrix::from_fn(n, |x, y| h2.entry(rs.apply(x), cs.apply(y)));
        let candidate = moved.normalize().matrix;
        !unsigned_matches(&target, &candidate, true, 1).is_empty()
    }))
}

/// Pairs `(σ, τ)` with `a[σx][τy] = b[x][y]`, at most `limit` of them,
/// sorted. With `fix_zero`, both permutations fix index 0.
pub(crate) fn unsigned_matches(
    a: &HadamardMatrix,
    b: &HadamardMatrix,
    fix_zero: bool,
    limit: usize,
) -> Vec<(Perm, Perm)> {
    let n = a.order();
    assert_eq!(n, b.order());
    assert!(n <= 128, "column patterns are packed into 128 bits");
    if n == 0 {
        return Vec::new();
    }
    let root = Search {
        a,
        b,
        n,
        fix_zero,
        sigma: vec![usize::MAX; n],
        used: vec![false; n],
        sig_a: vec![0; n],
        sig_b: vec![0; n],
    };
    let first_choices: Vec<usize> = if fix_zero { vec![0] } else { (0..n).collect() };
    let mut found: Vec<(Perm, Perm)> = first_choices
        .into_par_iter()
        .flat_map_iter(|choice| {
            let mut s = root.clone();
            let mut out = Vec::new();
            s.assign(0, choice);
            if s.consistent() {
                s.extend(1, limit, &mut out);
            }
            out
        })
        .collect();
    found.sort();
    found.truncate(limit);
    found
}

#[derive(Clone)]
struct Search<'a> {
    a: &'a HadamardMatrix,
    b: &'a HadamardMatrix,
    n: usize,
    fix_zero: bool,
    sigma: Vec<usize>,
    used: Vec<bool>,
    sig_a: Vec<u128>,
    sig_b: Vec<u128>,
}

impl Search<'_> {
    fn assign(&mut self, x: usize, target: usize) {
        self.sigma[x] = target;
        self.used[target] = true;
        for y in 0..self.n {
            self.sig_a[y] |= u128::from(self.a.is_negative(target, y)) << x;
            self.sig_b[y] |= u128::from(self.b.is_negative(x, y)) << x;
        }
    }

    fn unassign(&mut self, x: usize, target: usize) {
        self.sigma[x] = usize::MAX;
        self.used[target] = false;
        let mask = !(1u128 << x);
        for y in 0..self.n {
            self.sig_a[y] &= mask;
            self.sig_b[y] &= mask;
        }
    }

    fn consistent(&self) -> bool {
        if self.fix_zero && self.sig_a[0] != self.sig_b[0] {
            return false;
        }
        let mut sa = self.sig_a.clone();
        let mut sb = self.sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        sa == sb
    }

    fn extend(&mut self, x: usize, limit: usize, out: &mut Vec<(Perm, Perm)>) {
        if out.len() >= limit {
            return;
        }
        if x == self.n {
            out.push(self.leaf());
            return;
        }
        for target in 0..self.n {
            if self.used[target] || (self.fix_zero && target == 0) {
                continue;
            }
            self.assign(x, target);
            if self.consistent() {
                self.extend(x + 1, limit, out);
            }
            self.unassign(x, target);
        }
    }

    fn leaf(&self) -> (Perm, Perm) {
        // columns are now full column vectors, distinct in a Hadamard matrix
        let tau: Vec<usize> = (0..self.n)
            .map(|y| {
                self.sig_a
                    .iter()
                    .position(|&s| s == self.sig_b[y])
                    .expect("matching column multisets")
            })
            .collect();
        (
            Perm::from_images_unchecked(self.sigma.clone()),
            Perm::from_images_unchecked(tau),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::{sylvester, MonomialPair, Signs};
    use crate::perm::symmetric_group;

    fn h0() -> HadamardMatrix {
        HadamardMatrix::from_rows(&[
            vec![1, 1, 1, 1],
            vec![1, 1, -1, -1],
            vec![1, -1, -1, 1],
            vec![1, -1, 1, -1],
        ])
        .unwrap()
    }

    /// Every (σ, τ) fixing x0, checked directly.
    fn brute_force_aut(h: &HadamardMatrix, x0: usize) -> usize {
        let n = h.order();
        let fixing: Vec<Perm> = symmetric_group(n).filter(|p| p.apply(x0) == x0).collect();
        let mut count = 0;
        for s in &fixing {
            for t in &fixing {
                if (0..n).all(|x| (0..n).all(|y| h.entry(s.apply(x), t.apply(y)) == h.entry(x, y))) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn aut_x0_of_order_four() {
        let a = aut_x0(&h0(), 0);
        assert_eq!(a.order(), 6);
        assert_eq!(brute_force_aut(&h0(), 0), 6);
        assert!(a.group().is_closed());
        for x0 in 1..4 {
            assert_eq!(aut_x0(&h0(), x0).order(), brute_force_aut(&h0(), x0));
        }
    }

    #[test]
    fn aut_x0_of_sylvester_eight() {
        let a = aut_x0(&sylvester(3), 0);
        assert_eq!(a.order(), 168);
        assert!(a.group().is_closed());
        let h = sylvester(3);
        for (s, t) in a.pairs() {
            assert_eq!(MonomialPair::perms(s, t).apply(&h), h);
        }
    }

    #[test]
    fn aut_x0_small_orders() {
        assert_eq!(aut_x0(&sylvester(1), 0).order(), 1);
        assert_eq!(brute_force_aut(&sylvester(1), 0), 1);
        assert_eq!(aut_x0(&sylvester(0), 0).order(), 1);
        // |GL(4, 2)|
        assert_eq!(aut_x0(&sylvester(4), 0).order(), 20160);
    }

    #[test]
    fn equivalence_basics() {
        let h = sylvester(2);
        assert!(equivalence_check(&h, &h.negate()).unwrap());
        assert!(equivalence_check(&h0(), &h).unwrap());
        let twisted = MonomialPair {
            row_perm: Perm::new(vec![2, 0, 3, 1]).unwrap(),
            row_signs: Signs(vec![1, -1, -1, 1]),
            col_perm: Perm::new(vec![3, 1, 0, 2]).unwrap(),
            col_signs: Signs(vec![-1, 1, 1, 1]),
        }
        .apply(&sylvester(2));
        assert!(equivalence_check(&twisted, &h0()).unwrap());
        assert!(matches!(
            equivalence_check(&sylvester(2), &sylvester(3)),
            Err(Error::BadInput(_))
        ));
        assert!(matches!(
            equivalence_check(&sylvester(4), &sylvester(4)),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn order_twelve_paley_is_self_equivalent_under_scrambling() {
        let p = paley12();
        let scrambled = MonomialPair {
            row_perm: Perm::new(vec![5, 3, 11, 0, 7, 1, 9, 2, 10, 4, 8, 6]).unwrap(),
            row_signs: Signs(vec![1, -1, 1, 1, -1, -1, 1, 1, -1, 1, 1, -1]),
            col_perm: Perm::new(vec![2, 9, 4, 0, 11, 6, 1, 8, 3, 10, 5, 7]).unwrap(),
            col_signs: Signs(vec![-1, 1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1]),
        }
        .apply(&p);
        assert!(equivalence_check(&p, &scrambled).unwrap());
        assert!(equivalence_check(&p, &p.transpose()).unwrap());
    }

    /// Paley construction over GF(11).
    fn paley12() -> HadamardMatrix {
        let q = 11usize;
        let chi = |a: usize| -> i8 {
            if a % q == 0 {
                0
            } else if (1..q).any(|x| x * x % q == a % q) {
                1
            } else {
                -1
            }
        };
        // Q + I bordered: first row/col all ones
        HadamardMatrix::from_rows(
            &(0..12)
                .map(|x| {
                    (0..12)
                        .map(|y| match (x, y) {
                            (0, _) => 1,
                            (_, 0) => -1,
                            _ if x == y => 1,
                            _ => chi(y + q - x),
                        })
                        .collect()
                })
                .collect::<Vec<Vec<i8>>>(),
        )
        .unwrap()
    }
}
