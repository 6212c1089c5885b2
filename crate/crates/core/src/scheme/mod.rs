//! Association schemes stored as relation-index matrices.
//!
//! A scheme on `n` points with `r` relations is an `n x n` matrix whose entry
//! `(x, y)` is the index of the relation containing the pair. Relation `0` is
//! always the diagonal. Construction goes through [`AssociationScheme::verify`],
//! which checks the axioms and fills in the transpose map and the dense
//! intersection tensor.

mod algebraic;
pub mod catalog;
mod generate;
mod text;
mod wreath;

pub use algebraic::{algebraic_isomorphisms, algebraic_iso_check};
pub use generate::{thin_group, trivial, GroupTable};
pub use text::{parse_scheme, write_scheme};
pub use wreath::wreath_product;

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociationScheme {
    n: usize,
    rank: usize,
    rel: Vec<u16>,
    star: Vec<usize>,
    /// `tensor[(s * rank + t) * rank + u]` = c_{st}^u.
    tensor: Vec<u32>,
}

impl AssociationScheme {
    /// Checks the scheme axioms on a row-major `n x n` relation matrix.
    pub fn verify(n: usize, rel: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadInput("a scheme needs at least one point".into()));
        }
        if rel.len() != n * n {
            return Err(Error::BadInput(format!(
                "relation matrix has {} entries, expected {}",
                rel.len(),
                n * n
            )));
        }
        let rank = 1 + rel.iter().copied().max().unwrap_or(0);
        if rank > u16::MAX as usize {
            return Err(Error::BadInput(format!("too many relations: {rank}")));
        }

        let mut present = vec![false; rank];
        for &s in rel {
            present[s] = true;
        }
        if let Some(missing) = present.iter().position(|&p| !p) {
            return Err(Error::NotAPartition { missing });
        }

        for x in 0..n {
            for y in 0..n {
                let s = rel[x * n + y];
                if (x == y) != (s == 0) {
                    return Err(Error::BadIdentity { x, y, relation: s });
                }
            }
        }

        let mut star = vec![usize::MAX; rank];
        for x in 0..n {
            for y in 0..n {
                let s = rel[x * n + y];
                let t = rel[y * n + x];
                if star[s] == usize::MAX {
                    star[s] = t;
                } else if star[s] != t {
                    return Err(Error::NotClosedUnderTranspose {
                        x,
                        y,
                        relation: s,
                        transpose: t,
                    });
                }
            }
        }

        let rel16: Vec<u16> = rel.iter().map(|&s| s as u16).collect();
        let tensor = intersection_tensor(n, rank, &rel16)?;
        Ok(Self {
            n,
            rank,
            rel: rel16,
            star,
            tensor,
        })
    }

    /// Same as [`verify`](Self::verify) for a matrix given as rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::BadInput(format!(
                "row {bad} has {} entries, expected {n}",
                rows[bad].len()
            )));
        }
        let flat: Vec<usize> = rows.iter().flatten().copied().collect();
        Self::verify(n, &flat)
    }

    /// Number of points.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of relations, including the diagonal.
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn rel(&self, x: usize, y: usize) -> usize {
        self.rel[x * self.n + y] as usize
    }

    pub fn relation_matrix(&self) -> Vec<usize> {
        self.rel.iter().map(|&s| s as usize).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.rel
            .chunks(self.n)
            .map(|row| row.iter().map(|&s| s as usize).collect())
            .collect()
    }

    #[inline]
    pub fn star(&self, s: usize) -> usize {
        self.star[s]
    }

    /// Intersection number c_{st}^u = |x s ∩ y t*| for any (x, y) in u.
    #[inline]
    pub fn c(&self, s: usize, t: usize, u: usize) -> usize {
        self.tensor[(s * self.rank + t) * self.rank + u] as usize
    }

    pub fn valency(&self, s: usize) -> usize {
        self.c(s, self.star[s], 0)
    }

    pub fn valencies(&self) -> Vec<usize> {
        (0..self.rank).map(|s| self.valency(s)).collect()
    }

    pub fn is_symmetric_relation(&self, s: usize) -> bool {
        self.star[s] == s
    }

    /// Every relation has valency one.
    pub fn is_thin(&self) -> bool {
        self.rank == self.n
    }

    /// The closed subset generated by the supports of all products `s s*`.
    ///
    /// Starts from every `u` with `c_{s s*}^u > 0` and adds the support of
    /// `a b` for members `a, b` until nothing changes.
    pub fn thin_residue(&self) -> BTreeSet<usize> {
        let r = self.rank;
        let mut set: BTreeSet<usize> = (0..r)
            .filter(|&u| (0..r).any(|s| self.c(s, self.star[s], u) > 0))
            .collect();
        loop {
            let members: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &members {
                for &b in &members {
                    set.extend((0..r).filter(|&u| self.c(a, b, u) > 0));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    /// Whether `subset` is closed under relational products.
    pub fn is_closed_subset(&self, subset: &BTreeSet<usize>) -> bool {
        subset.iter().all(|&a| {
            subset
                .iter()
                .all(|&b| (0..self.rank).all(|u| self.c(a, b, u) == 0 || subset.contains(&u)))
        })
    }

    /// The same scheme with points renamed: point `x` becomes `perm[x]`.
    pub fn relabel_points(&self, perm: &crate::perm::Perm) -> Self {
        let n = self.n;
        let mut rel = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                rel[perm.apply(x) * n + perm.apply(y)] = self.rel(x, y);
            }
        }
        Self::verify(n, &rel).expect("relabelling preserves the scheme axioms")
    }
}

fn intersection_tensor(n: usize, rank: usize, rel: &[u16]) -> Result<Vec<u32>> {
    let r2 = rank * rank;
    let mut tensor = vec![0u32; r2 * rank];
    let mut witness: Vec<Option<(usize, usize)>> = vec![None; rank];
    let mut hist = vec![0u32; r2];
    for x in 0..n {
        for y in 0..n {
            let u = rel[x * n + y] as usize;
            hist.iter_mut().for_each(|h| *h = 0);
            for z in 0..n {
                let s = rel[x * n + z] as usize;
                let t = rel[z * n + y] as usize;
                hist[s * rank + t] += 1;
            }
            match witness[u] {
                None => {
                    witness[u] = Some((x, y));
                    for (st, &h) in hist.iter().enumerate() {
                        tensor[st * rank + u] = h;
                    }
                }
                Some(first) => {
                    for (st, &h) in hist.iter().enumerate() {
                        let expected = tensor[st * rank + u];
                        if h != expected {
                            return Err(Error::NonConstantIntersection {
                                s: st / rank,
                                t: st % rank,
                                u,
                                first,
                                first_count: expected as usize,
                                second: (x, y),
                                second_count: h as usize,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(tensor)
}
