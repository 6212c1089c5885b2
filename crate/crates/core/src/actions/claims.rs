use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use super::groups::{aut_group, iso_group};
use crate::error::{Error, Result};
use crate::hadamard::{aut_x0, HadamardMatrix};
use crate::perm::{symmetric_group, Perm};
use crate::scheme::AssociationScheme;

/// Largest order for the exhaustive checks.
pub const CLAIM_ORDER_CAP: usize = 4;

/// Direct counts against the two group-order identities behind the lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub aut_x0_order: usize,
    /// Stabilizer of the normalized matrix in the point-fixing monomial group.
    pub stabilizer_order: usize,
    /// Orbit of the normalized matrix under that group, enumerated.
    pub orbit_size: usize,
    /// `(n-1)!^2 / |Aut_x0| * |D|^2 / 2`.
    pub orbit_size_formula: usize,
    /// `|{(σ, τ) in Iso x Iso : σ τ⁻¹ in Aut}| * |D|^2`.
    pub k_order: usize,
    /// `|Iso| * |Aut| * |D|^2`.
    pub k_order_formula: usize,
}

impl ClaimReport {
    pub fn stabilizer_holds(&self) -> bool {
        self.stabilizer_order == 2 * self.aut_x0_order && self.orbit_size == self.orbit_size_formula
    }

    pub fn k_order_holds(&self) -> bool {
        self.k_order == self.k_order_formula
    }
}

pub fn claim_checks(scheme: &AssociationScheme, h0: &HadamardMatrix, x0: usize) -> Result<ClaimReport> {
    let n = h0.order();
    if scheme.order() != n {
        return Err(Error::DimensionMismatch {
            scheme: scheme.order(),
            matrix: n,
        });
    }
    if n > CLAIM_ORDER_CAP {
        return Err(Error::DegreeTooLarge {
            degree: n,
            cap: CLAIM_ORDER_CAP,
        });
    }
    // normalized at x0: row x0 and column x0 all +1
    let h = HadamardMatrix::from_fn(n, |x, y| {
        h0.entry(x, y) * h0.entry(x0, y) * h0.entry(x, x0) * h0.entry(x0, x0)
    });
    let fixing: Vec<Perm> = symmetric_group(n).filter(|p| p.apply(x0) == x0).collect();
    let sign_vectors: Vec<Vec<i8>> = (0..n).map(|_| [1i8, -1]).multi_cartesian_product().collect();
    let signed: Vec<(&Perm, &Vec<i8>)> = fixing.iter().cartesian_product(&sign_vectors).collect();

    let mut stabilizer_order = 0;
    let mut orbit: HashSet<Vec<i8>> = HashSet::new();
    for &(sigma, r) in &signed {
        for &(tau, c) in &signed {
            let image: Vec<i8> = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .map(|(x, y)| r[x] * h.entry(sigma.apply(x), tau.apply(y)) * c[y])
                .collect();
            if (0..n * n).all(|i| image[i] == h.entry(i / n, i % n)) {
                stabilizer_order += 1;
            }
            orbit.insert(image);
        }
    }
    let aut_x0_order = aut_x0(&h, x0).order();
    let fact: usize = (1..n).product();
    let signs = 1usize << n;

    let aut = aut_group(scheme)?;
    let iso = iso_group(scheme)?;
    let mut pairs = 0;
    for sigma in iso.elements() {
        for tau in iso.elements() {
            if aut.contains(&sigma.compose(&tau.inverse())) {
                pairs += 1;
            }
        }
    }

    Ok(ClaimReport {
        aut_x0_order,
        stabilizer_order,
        orbit_size: orbit.len(),
        orbit_size_formula: fact * fact / aut_x0_order * signs * signs / 2,
        k_order: pairs * signs * signs,
        k_order_formula: iso.order() * aut.order() * signs * signs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::order_four;
    use crate::scheme::catalog;

    #[test]
    fn trivial_scheme_order_four() {
        let r = claim_checks(&catalog::as4(1), &order_four(0), 0).unwrap();
        assert_eq!(r.aut_x0_order, 6);
        assert_eq!(r.stabilizer_order, 12);
        assert_eq!(r.orbit_size, 768);
        assert!(r.stabilizer_holds() && r.k_order_holds());
    }

    #[test]
    fn matching_scheme_k_order() {
        let r = claim_checks(&catalog::as4(2), &order_four(0), 0).unwrap();
        assert_eq!(r.k_order, 16384);
        assert!(r.k_order_holds());
    }

    #[test]
    fn other_base_points() {
        for x0 in 1..4 {
            let r = claim_checks(&catalog::as4(3), &order_four(2), x0).unwrap();
            assert!(r.stabilizer_holds(), "{r:?}");
        }
    }
}
