use super::groups::{aut_group, iso_group};
use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::perm::{Perm, PermGroup};
use crate::scheme::AssociationScheme;

/// Whether `h2` or `h2^T` equals `D_r P_σ⁻¹ h1 P_σ P_α D_c` for some
/// `σ` in `Iso`, `α` in `Aut` and sign matrices `D_r`, `D_c`.
pub fn similar_check(h1: &HadamardMatrix, h2: &HadamardMatrix, scheme: &AssociationScheme) -> Result<bool> {
    let aut = aut_group(scheme)?;
    let iso = iso_group(scheme)?;
    similar_with_groups(h1, h2, &aut, &iso)
}

/// [`similar_check`] with the groups supplied.
///
/// For fixed `σ` write `M[x][y] = h1[σx][σy]`; the target must be
/// `r_x M[x][αy] c_y`. Choosing `α(0)` fixes the row signs up to a global
/// sign, after which each target column matches at most one column of `M`
/// up to sign, so `α` is forced and only membership in `Aut` is left.
pub fn similar_with_groups(
    h1: &HadamardMatrix,
    h2: &HadamardMatrix,
    aut: &PermGroup,
    iso: &PermGroup,
) -> Result<bool> {
    let n = h1.order();
    if h2.order() != n || aut.degree() != n || iso.degree() != n {
        return Err(Error::DimensionMismatch {
            scheme: aut.degree(),
            matrix: if h1.order() != aut.degree() { h1.order() } else { h2.order() },
        });
    }
    let targets = [h2.clone(), h2.transpose()];
    Ok(iso.elements().iter().any(|sigma| {
        let m: Vec<Vec<i8>> = (0..n)
            .map(|x| (0..n).map(|y| h1.entry(sigma.apply(x), sigma.apply(y))).collect())
            .collect();
        targets.iter().any(|t| forced_column_map(&m, t).any(|alpha| aut.contains(&alpha)))
    }))
}

/// Every `α` with `t = D_r M P_α D_c` for some signs, one per choice of `α(0)`.
fn forced_column_map<'a>(m: &'a [Vec<i8>], t: &'a HadamardMatrix) -> impl Iterator<Item = Perm> + 'a {
    let n = m.len();
    (0..n).filter_map(move |j| {
        let row_signs: Vec<i8> = (0..n).map(|x| t.entry(x, 0) * m[x][j]).collect();
        let mut images = Vec::with_capacity(n);
        for y in 0..n {
            let image = (0..n).find(|&k| {
                let s = row_signs[0] * t.entry(0, y) * m[0][k];
                (0..n).all(|x| row_signs[x] * t.entry(x, y) == s * m[x][k])
            })?;
            images.push(image);
        }
        Perm::new(images)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::{order_four, sylvester};
    use crate::scheme::{catalog, thin_group, trivial, GroupTable};

    /// The plain search over `Iso x Aut` with a sign-rank-one test.
    fn oracle(h1: &HadamardMatrix, h2: &HadamardMatrix, scheme: &AssociationScheme) -> bool {
        let n = h1.order();
        let aut = aut_group(scheme).unwrap();
        let iso = iso_group(scheme).unwrap();
        let targets = [h2.clone(), h2.transpose()];
        for sigma in iso.elements() {
            for alpha in aut.elements() {
                let q = sigma.compose(alpha);
                for t in &targets {
                    let e = |x: usize, y: usize| h1.entry(sigma.apply(x), q.apply(y)) * t.entry(x, y);
                    if (0..n).all(|x| (0..n).all(|y| e(x, y) * e(x, 0) * e(0, y) * e(0, 0) == 1)) {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn reflexive_and_negation() {
        let h = sylvester(3);
        let s = thin_group(&GroupTable::cyclic(8)).unwrap();
        assert!(similar_check(&h, &h, &s).unwrap());
        assert!(similar_check(&h, &h.negate(), &s).unwrap());
    }

    #[test]
    fn agrees_with_oracle_on_order_four() {
        let hs: Vec<HadamardMatrix> = (0..4).map(order_four).collect();
        for i in 1..=4 {
            let s = catalog::as4(i);
            for a in &hs {
                for b in &hs {
                    let moved = b.negate_row(2).negate_col(1);
                    assert_eq!(similar_check(a, &moved, &s).unwrap(), oracle(a, &moved, &s));
                }
            }
        }
    }

    #[test]
    fn order_four_matching_scheme() {
        let s = catalog::as4(2);
        assert!(similar_check(&order_four(0), &order_four(1), &s).unwrap());
        assert!(!similar_check(&order_four(0), &order_four(2), &s).unwrap());
    }

    #[test]
    fn trivial_scheme_makes_everything_similar() {
        let s = trivial(4);
        for i in 0..4 {
            assert!(similar_check(&order_four(0), &order_four(i), &s).unwrap());
        }
    }

    #[test]
    fn dimension_mismatch() {
        assert!(similar_check(&sylvester(2), &sylvester(3), &trivial(4)).is_err());
    }
}
