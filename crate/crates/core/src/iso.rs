//! Isomorphism and automorphism search for association schemes.
//!
//! Each algebraic isomorphism `ι` (a relation bijection preserving the
//! intersection numbers) is tried in turn. For a fixed `ι` the point map is
//! found by individualization and refinement: both schemes are coloured
//! jointly, a point of the first scheme is pinned to each candidate of the
//! same colour in the second, and colours are refined until every cell is a
//! single point.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::scheme::{algebraic_isomorphisms, AssociationScheme};

/// Largest order accepted by [`scheme_isomorphic`].
pub const ISOMORPHISM_ORDER_CAP: usize = 32;
/// Largest order accepted by [`scheme_aut_order`].
pub const AUTOMORPHISM_ORDER_CAP: usize = 16;

/// A point bijection together with the relation bijection it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub points: Perm,
    pub relations: Vec<usize>,
}

impl Isomorphism {
    pub fn holds(&self, s1: &AssociationScheme, s2: &AssociationScheme) -> bool {
        let n = s1.order();
        (0..n).all(|x| {
            (0..n).all(|y| s2.rel(self.points.apply(x), self.points.apply(y)) == self.relations[s1.rel(x, y)])
        })
    }
}

/// Stable point colouring of a pair of schemes under a fixed relation map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorRefinement {
    pub first: Vec<u32>,
    pub second: Vec<u32>,
    pub rounds: usize,
}

impl ColorRefinement {
    fn uniform(n: usize) -> Self {
        Self {
            first: vec![0; n],
            second: vec![0; n],
            rounds: 0,
        }
    }

    fn cell_count(&self) -> usize {
        let mut colours = self.first.clone();
        colours.sort_unstable();
        colours.dedup();
        colours.len()
    }

    /// Splits cells by the multiset of (relation, colour) pairs seen from
    /// each point. Returns `false` once the two sides have different colour
    /// histograms, which rules out any isomorphism extending the current one.
    fn refine(&mut self, s1: &AssociationScheme, s2: &AssociationScheme, iota: &[usize]) -> bool {
        let n = s1.order();
        loop {
            let before = self.cell_count();
            let signature = |colours: &[u32], x: usize, rel: &dyn Fn(usize, usize) -> usize| {
                let mut seen: Vec<(usize, u32)> = (0..n).map(|y| (rel(x, y), colours[y])).collect();
                seen.sort_unstable();
                (colours[x], seen)
            };
            let sig1: Vec<_> = (0..n)
                .map(|x| signature(&self.first, x, &|a, b| iota[s1.rel(a, b)]))
                .collect();
            let sig2: Vec<_> = (0..n)
                .map(|x| signature(&self.second, x, &|a, b| s2.rel(a, b)))
                .collect();
            let mut ids: BTreeMap<&(u32, Vec<(usize, u32)>), (u32, isize)> = BTreeMap::new();
            for s in &sig1 {
                ids.entry(s).or_default().1 += 1;
            }
            for s in &sig2 {
                ids.entry(s).or_default().1 -= 1;
            }
            if ids.values().any(|&(_, balance)| balance != 0) {
                return false;
            }
            for (next, value) in ids.values_mut().enumerate() {
                value.0 = next as u32;
            }
            self.first = sig1.iter().map(|s| ids[s].0).collect();
            self.second = sig2.iter().map(|s| ids[s].0).collect();
            self.rounds += 1;
            if self.cell_count() == before {
                return true;
            }
        }
    }

    /// Gives `x` in the first scheme and `y` in the second a fresh colour.
    fn individualize(&mut self, x: usize, y: usize) {
        let fresh = self.first.iter().copied().max().unwrap_or(0) + 1;
        self.first[x] = fresh;
        self.second[y] = fresh;
    }
}

/// An isomorphism from `s1` to `s2`, or `None` if there is none.
pub fn scheme_isomorphic(s1: &AssociationScheme, s2: &AssociationScheme) -> Result<Option<Isomorphism>> {
    let n = s1.order();
    if n > ISOMORPHISM_ORDER_CAP || s2.order() > ISOMORPHISM_ORDER_CAP {
        return Err(Error::OrderTooLarge {
            order: n.max(s2.order()),
            cap: ISOMORPHISM_ORDER_CAP,
        });
    }
    if s2.order() != n || s2.rank() != s1.rank() {
        return Ok(None);
    }
    for iota in algebraic_isomorphisms(s1, s2) {
        let mut found = None;
        search(s1, s2, &iota, ColorRefinement::uniform(n), &mut |points| {
            found = Some(points);
            true
        });
        if let Some(points) = found {
            return Ok(Some(Isomorphism {
                points,
                relations: iota,
            }));
        }
    }
    Ok(None)
}

/// `|Aut(s)|`: point maps fixing every relation.
pub fn scheme_aut_order(s: &AssociationScheme) -> Result<usize> {
    let n = s.order();
    if n > AUTOMORPHISM_ORDER_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: AUTOMORPHISM_ORDER_CAP,
        });
    }
    let identity: Vec<usize> = (0..s.rank()).collect();
    let mut count = 0;
    search(s, s, &identity, ColorRefinement::uniform(n), &mut |_| {
        count += 1;
        false
    });
    Ok(count)
}

/// Depth-first individualization; `on_leaf` returns `true` to stop.
fn search(
    s1: &AssociationScheme,
    s2: &AssociationScheme,
    iota: &[usize],
    mut colours: ColorRefinement,
    on_leaf: &mut dyn FnMut(Perm) -> bool,
) -> bool {
    if !colours.refine(s1, s2, iota) {
        return false;
    }
    let n = s1.order();
    let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (x, &c) in colours.first.iter().enumerate() {
        cells.entry(c).or_default().push(x);
    }
    let branch = cells.values().filter(|cell| cell.len() > 1).min_by_key(|cell| cell.len());
    let Some(cell) = branch else {
        let mut images = vec![0; n];
        for x in 0..n {
            images[x] = colours
                .second
                .iter()
                .position(|&c| c == colours.first[x])
                .expect("balanced colours");
        }
        let points = Perm::new(images).expect("discrete colouring is a bijection");
        let ok = (0..n).all(|x| (0..n).all(|y| s2.rel(points.apply(x), points.apply(y)) == iota[s1.rel(x, y)]));
        return ok && on_leaf(points);
    };
    let x = cell[0];
    let colour = colours.first[x];
    for y in (0..n).filter(|&y| colours.second[y] == colour) {
        let mut next = colours.clone();
        next.individualize(x, y);
        if search(s1, s2, iota, next, on_leaf) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::aut_group;
    use crate::builder::build_sh;
    use crate::hadamard::{order_four, sylvester};
    use crate::perm::symmetric_group;
    use crate::scheme::{catalog, thin_group, trivial, GroupTable};

    fn brute_force_isomorphic(s1: &AssociationScheme, s2: &AssociationScheme) -> bool {
        let n = s1.order();
        if s2.order() != n || s2.rank() != s1.rank() {
            return false;
        }
        symmetric_group(n).any(|p| {
            let mut map = vec![usize::MAX; s1.rank()];
            let mut hit = vec![false; s1.rank()];
            (0..n).all(|x| {
                (0..n).all(|y| {
                    let (r, image) = (s1.rel(x, y), s2.rel(p.apply(x), p.apply(y)));
                    if map[r] == usize::MAX {
                        map[r] = image;
                        !std::mem::replace(&mut hit[image], true)
                    } else {
                        map[r] == image
                    }
                })
            })
        })
    }

    fn corpus() -> Vec<AssociationScheme> {
        let mut out: Vec<AssociationScheme> = (1..=4).map(catalog::as4).collect();
        out.push(thin_group(&GroupTable::cyclic(4)).unwrap());
        out.push(catalog::as4(2).relabel_points(&Perm::new(vec![0, 2, 1, 3]).unwrap()));
        for i in catalog::AS8_BUILT {
            out.push(catalog::as8(i).unwrap());
        }
        for name in catalog::THIN_8 {
            out.push(catalog::thin8(name).unwrap());
        }
        out.push(catalog::thin8("C8").unwrap().relabel_points(&Perm::new(vec![3, 1, 4, 0, 7, 2, 6, 5]).unwrap()));
        out
    }

    #[test]
    fn agrees_with_brute_force_on_small_corpus() {
        let schemes = corpus();
        for a in &schemes {
            for b in &schemes {
                let found = scheme_isomorphic(a, b).unwrap();
                if let Some(iso) = &found {
                    assert!(iso.holds(a, b));
                }
                assert_eq!(found.is_some(), brute_force_isomorphic(a, b));
            }
        }
    }

    #[test]
    fn automorphism_counts_agree_with_point_groups() {
        for s in corpus() {
            assert_eq!(scheme_aut_order(&s).unwrap(), aut_group(&s).unwrap().order());
        }
        assert_eq!(scheme_aut_order(&trivial(4)).unwrap(), 24);
        assert_eq!(scheme_aut_order(&thin_group(&GroupTable::cyclic(4)).unwrap()).unwrap(), 4);
    }

    #[test]
    fn built_scheme_of_order_eight() {
        let built = build_sh(&trivial(2), &sylvester(1)).unwrap().scheme;
        assert_eq!(scheme_aut_order(&built).unwrap(), aut_group(&built).unwrap().order());
    }

    #[test]
    fn transpose_gives_isomorphic_built_scheme() {
        let b = catalog::as4(3);
        for i in 0..4 {
            let h = order_four(i);
            let s1 = build_sh(&b, &h).unwrap().scheme;
            let s2 = build_sh(&b, &h.transpose()).unwrap().scheme;
            let iso = scheme_isomorphic(&s1, &s2).unwrap().unwrap();
            assert!(iso.holds(&s1, &s2));
        }
    }

    #[test]
    fn separated_orbits_give_non_isomorphic_schemes() {
        let b = catalog::as4(2);
        let s0 = build_sh(&b, &order_four(0)).unwrap().scheme;
        let s2 = build_sh(&b, &order_four(2)).unwrap().scheme;
        assert!(scheme_isomorphic(&s0, &s2).unwrap().is_none());
        assert_eq!(scheme_isomorphic(&s0, &s0).unwrap().unwrap().relations, (0..s0.rank()).collect::<Vec<_>>());
    }

    #[test]
    fn caps() {
        assert!(matches!(scheme_isomorphic(&trivial(33), &trivial(33)), Err(Error::OrderTooLarge { .. })));
        assert!(matches!(scheme_aut_order(&trivial(17)), Err(Error::OrderTooLarge { .. })));
    }
}
