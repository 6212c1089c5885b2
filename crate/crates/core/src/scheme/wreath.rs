use super::AssociationScheme;

/// Wreath product of `w` (inside each fibre) by `y` (across fibres).
///
/// Point `(p, q)` with `p` in `w` and `q` in `y` gets index `q * |w| + p`.
/// Relations `0 .. rank(w)` are the lifted relations of `w` within a fibre;
/// relation `rank(w) + h - 1` is the lift of the non-identity relation `h` of `y`.
pub fn wreath_product(w: &AssociationScheme, y: &AssociationScheme) -> AssociationScheme {
    let (nw, ny) = (w.order(), y.order());
    let n = nw * ny;
    let mut rel = vec![0; n * n];
    for q1 in 0..ny {
        for p1 in 0..nw {
            for q2 in 0..ny {
                for p2 in 0..nw {
                    let h = y.rel(q1, q2);
                    let label = if h == 0 {
                        w.rel(p1, p2)
                    } else {
                        w.rank() + h - 1
                    };
                    rel[(q1 * nw + p1) * n + q2 * nw + p2] = label;
                }
            }
        }
    }
    AssociationScheme::verify(n, &rel).expect("a wreath product of schemes is a scheme")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::trivial;

    #[test]
    fn two_by_two_wreath_has_valencies_1_1_2() {
        let k2 = trivial(2);
        let s = wreath_product(&k2, &k2);
        assert_eq!(s.order(), 4);
        assert_eq!(s.valencies(), vec![1, 1, 2]);
        // fibres are {0, 1} and {2, 3}
        assert_eq!(s.rel(0, 1), 1);
        assert_eq!(s.rel(2, 3), 1);
        assert_eq!(s.rel(0, 2), 2);
    }

    #[test]
    fn one_point_right_factor_is_a_copy() {
        let w = trivial(4);
        assert_eq!(wreath_product(&w, &trivial(1)), w);
        assert_eq!(wreath_product(&trivial(1), &w), w);
    }

    #[test]
    fn orders_multiply() {
        let s = wreath_product(&trivial(4), &trivial(2));
        assert_eq!(s.order(), 8);
        assert_eq!(s.valencies(), vec![1, 3, 4]);
    }
}
