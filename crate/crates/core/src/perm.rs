//! Permutations of `{0, .., n-1}` and small permutation groups stored as
//! explicit, sorted element lists.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;

/// A permutation in image notation: `self.apply(i) == images[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from its image list, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_some());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Self { images }
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Self {
        assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// Every permutation of degree `n`, in lexicographic order.
pub fn symmetric_group(n: usize) -> impl Iterator<Item = Perm> {
    (0..n)
        .permutations(n)
        .map(|images| Perm { images })
}

/// An explicitly enumerated permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Wraps a set of permutations that is already known to be a group.
    /// The list is sorted and deduplicated; closure is only checked in debug builds.
    pub fn from_elements(degree: usize, elements: impl IntoIterator<Item = Perm>) -> Self {
        let mut elements: Vec<Perm> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        let group = Self { degree, elements };
        debug_assert!(group.is_closed());
        group
    }

    /// The group generated by `gens`, by breadth-first closure.
    pub fn generate(degree: usize, gens: &[Perm]) -> Self {
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(g) = frontier.pop() {
            for s in gens {
                let h = g.compose(s);
                if seen.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        Self { degree, elements }
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            elements: vec![Perm::identity(degree)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Identity present, closed under composition and inverses.
    pub fn is_closed(&self) -> bool {
        if !self.contains(&Perm::identity(self.degree)) {
            return false;
        }
        let gens = self.generators();
        self.elements.iter().all(|g| {
            self.contains(&g.inverse()) && gens.iter().all(|s| self.contains(&g.compose(s)))
        })
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<Perm> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut span: BTreeSet<Perm> = BTreeSet::from([Perm::identity(self.degree)]);
        for g in &self.elements {
            if span.contains(g) {
                continue;
            }
            gens.push(g.clone());
            span = Self::generate(self.degree, &gens).elements.into_iter().collect();
            if span.len() == self.elements.len() {
                break;
            }
        }
        gens
    }

    /// Whether `self` is a normal subgroup of `other`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|h| other.contains(h))
            && other.generators().iter().all(|g| {
                let gi = g.inverse();
                self.elements
                    .iter()
                    .all(|h| self.contains(&g.compose(h).compose(&gi)))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::new(vec![1, 2, 0]).unwrap();
        let b = Perm::transposition(3, 0, 1);
        let ab = a.compose(&b);
        for i in 0..3 {
            assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        }
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0, 1]).is_none());
        assert!(Perm::new(vec![0, 3, 1]).is_none());
    }

    #[test]
    fn symmetric_group_is_closed_and_has_factorial_order() {
        let s4 = PermGroup::from_elements(4, symmetric_group(4));
        assert_eq!(s4.order(), 24);
        assert!(s4.is_closed());
        assert!(s4.generators().len() <= 3);
        assert_eq!(PermGroup::generate(4, &s4.generators()), s4);
    }

    #[test]
    fn klein_four_is_normal_in_s4_but_a_transposition_is_not() {
        let s4 = PermGroup::from_elements(4, symmetric_group(4));
        let v4 = PermGroup::generate(
            4,
            &[
                Perm::new(vec![1, 0, 3, 2]).unwrap(),
                Perm::new(vec![2, 3, 0, 1]).unwrap(),
            ],
        );
        assert_eq!(v4.order(), 4);
        assert!(v4.is_normal_in(&s4));
        let c2 = PermGroup::generate(4, &[Perm::transposition(4, 0, 1)]);
        assert!(!c2.is_normal_in(&s4));
    }
}
