use super::HadamardMatrix;
use crate::perm::Perm;

/// A `±1` vector indexed by points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signs(pub Vec<i8>);

impl Signs {
    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// All ones except `-1` at `x`: the diagonal of `D_x`.
    pub fn flip_at(n: usize, x: usize) -> Self {
        let mut s = Self::ones(n);
        s.0[x] = -1;
        s
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, x: usize) -> i8 {
        self.0[x]
    }
}

/// A pair `(P, Q)` of monomial matrices, `P = P_σ D_row` and `Q = P_τ D_col`,
/// acting on Hadamard matrices by `H ↦ P⁻¹ H Q`.
///
/// Entrywise the result is `row_signs[x] * H[σ(x)][τ(y)] * col_signs[y]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialPair {
    pub row_perm: Perm,
    pub row_signs: Signs,
    pub col_perm: Perm,
    pub col_signs: Signs,
}

impl MonomialPair {
    pub fn identity(n: usize) -> Self {
        Self {
            row_perm: Perm::identity(n),
            row_signs: Signs::ones(n),
            col_perm: Perm::identity(n),
            col_signs: Signs::ones(n),
        }
    }

    /// `(D_row, D_col)`.
    pub fn signs(row_signs: Signs, col_signs: Signs) -> Self {
        let n = row_signs.len();
        Self {
            row_perm: Perm::identity(n),
            row_signs,
            col_perm: Perm::identity(n),
            col_signs,
        }
    }

    /// `(P_σ, P_τ)` with no sign changes.
    pub fn perms(row_perm: Perm, col_perm: Perm) -> Self {
        let n = row_perm.degree();
        Self {
            row_perm,
            row_signs: Signs::ones(n),
            col_perm,
            col_signs: Signs::ones(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.row_perm.degree()
    }

    pub fn apply(&self, h: &HadamardMatrix) -> HadamardMatrix {
        assert_eq!(self.degree(), h.order(), "pair and matrix dimensions differ");
        HadamardMatrix::from_fn(h.order(), |x, y| {
            self.row_signs.get(x)
                * h.entry(self.row_perm.apply(x), self.col_perm.apply(y))
                * self.col_signs.get(y)
        })
    }

    /// The pair whose action is "apply `self`, then `next`", i.e. `(P1 P2, Q1 Q2)`.
    pub fn then(&self, next: &MonomialPair) -> MonomialPair {
        fn side(p1: &Perm, s1: &Signs, p2: &Perm, s2: &Signs) -> (Perm, Signs) {
            let signs = (0..p1.degree())
                .map(|x| s1.get(p2.apply(x)) * s2.get(x))
                .collect();
            (p1.compose(p2), Signs(signs))
        }
        let (row_perm, row_signs) =
            side(&self.row_perm, &self.row_signs, &next.row_perm, &next.row_signs);
        let (col_perm, col_signs) =
            side(&self.col_perm, &self.col_signs, &next.col_perm, &next.col_signs);
        MonomialPair {
            row_perm,
            row_signs,
            col_perm,
            col_signs,
        }
    }

    pub fn inverse(&self) -> MonomialPair {
        fn side(p: &Perm, s: &Signs) -> (Perm, Signs) {
            let inv = p.inverse();
            let signs = (0..p.degree()).map(|x| s.get(inv.apply(x))).collect();
            (inv, Signs(signs))
        }
        let (row_perm, row_signs) = side(&self.row_perm, &self.row_signs);
        let (col_perm, col_signs) = side(&self.col_perm, &self.col_signs);
        MonomialPair {
            row_perm,
            row_signs,
            col_perm,
            col_signs,
        }
    }
}
