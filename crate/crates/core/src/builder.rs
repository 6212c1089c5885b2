//! The scheme `S(H)` on `X × F2 × F2` built from a base scheme and a
//! Hadamard matrix indexed by the same points.
//!
//! Point `x_{ab}` is stored at index `4x + 2a + b`. Relation labels are fixed:
//!
//! | index            | relation                                  |
//! |------------------|-------------------------------------------|
//! | `0`              | identity                                  |
//! | `1`              | `t~`: same `x` and `a`, different `b`     |
//! | `2 ..= k`        | `s~` for base relation `s = 1 .. k-1`     |
//! | `k + 1`          | `r+`: sides differ, sign agrees with `H`  |
//! | `k + 2`          | `r-`: sides differ, sign disagrees        |
//!
//! where `k` is the rank of the base scheme. On the `a = 0` side the sign
//! comes from `H`, on the `a = 1` side from `H^T`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::scheme::{trivial, AssociationScheme};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedPoint {
    pub x: usize,
    pub a: u8,
    pub b: u8,
}

impl ExtendedPoint {
    #[inline]
    pub fn index(self) -> usize {
        4 * self.x + 2 * self.a as usize + self.b as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        Self {
            x: i / 4,
            a: (i >> 1 & 1) as u8,
            b: (i & 1) as u8,
        }
    }
}

/// What a relation index of a built scheme stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Identity,
    Antipodal,
    Lifted(usize),
    SignAgrees,
    SignDisagrees,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltScheme {
    pub scheme: AssociationScheme,
    base_rank: usize,
}

impl BuiltScheme {
    pub fn base_rank(&self) -> usize {
        self.base_rank
    }

    pub fn t_tilde(&self) -> usize {
        1
    }

    /// Label of the lift of base relation `s` (`s >= 1`).
    pub fn s_tilde(&self, s: usize) -> usize {
        assert!(s >= 1 && s < self.base_rank);
        s + 1
    }

    pub fn r_plus(&self) -> usize {
        self.base_rank + 1
    }

    pub fn r_minus(&self) -> usize {
        self.base_rank + 2
    }

    pub fn label(&self, relation: usize) -> Label {
        match relation {
            0 => Label::Identity,
            1 => Label::Antipodal,
            r if r == self.r_plus() => Label::SignAgrees,
            r if r == self.r_minus() => Label::SignDisagrees,
            r => Label::Lifted(r - 1),
        }
    }

    /// `# labels: 1=t~ 2..k=s~ k+1=r+ k+2=r-` with `k` filled in.
    pub fn label_line(&self) -> String {
        let k = self.base_rank;
        format!("# labels: 1=t~ 2..{k}=s~ {}=r+ {}=r-", k + 1, k + 2)
    }

    /// Scheme text followed by the label line.
    pub fn to_text(&self) -> String {
        let mut out = crate::scheme::write_scheme(&self.scheme);
        out.push_str(&self.label_line());
        out.push('\n');
        out
    }
}

/// Builds `S(H)` and checks the scheme axioms on the result.
pub fn build_sh(base: &AssociationScheme, h: &HadamardMatrix) -> Result<BuiltScheme> {
    let n = base.order();
    if h.order() != n {
        return Err(Error::DimensionMismatch {
            scheme: n,
            matrix: h.order(),
        });
    }
    let k = base.rank();
    let m = 4 * n;
    let mut rel = vec![0usize; m * m];
    for i in 0..m {
        let p = ExtendedPoint::from_index(i);
        for j in 0..m {
            let q = ExtendedPoint::from_index(j);
            rel[i * m + j] = if p.a == q.a {
                if p.x != q.x {
                    base.rel(p.x, q.x) + 1
                } else if p.b != q.b {
                    1
                } else {
                    0
                }
            } else {
                let sign = if p.a == 0 {
                    h.entry(p.x, q.x)
                } else {
                    h.entry(q.x, p.x)
                };
                let parity = if (p.b + q.b) % 2 == 0 { 1 } else { -1 };
                if sign == parity {
                    k + 1
                } else {
                    k + 2
                }
            };
        }
    }
    let scheme = AssociationScheme::verify(m, &rel)?;
    Ok(BuiltScheme {
        scheme,
        base_rank: k,
    })
}

/// Distances in the graph whose edges are the `r+` relation.
#[derive(Clone, Debug)]
pub struct DistanceProfile {
    /// `distance[i * m + j]`, `u8::MAX` when unreachable.
    pub distance: Vec<u8>,
    pub diameter: usize,
    pub connected: bool,
    /// Odd distances join points with different `a`, even ones equal `a`.
    pub bipartite: bool,
    /// "Equal or at maximum distance" is an equivalence relation.
    pub antipodal: bool,
}

pub fn distance_profile(built: &BuiltScheme) -> DistanceProfile {
    let s = &built.scheme;
    let m = s.order();
    let edge = built.r_plus();
    let adjacency: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).filter(|&j| s.rel(i, j) == edge).collect())
        .collect();
    let mut distance = vec![u8::MAX; m * m];
    for src in 0..m {
        let row = &mut distance[src * m..(src + 1) * m];
        row[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if row[w] == u8::MAX {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let connected = !distance.contains(&u8::MAX);
    let diameter = distance.iter().filter(|&&d| d != u8::MAX).max().copied().unwrap_or(0) as usize;
    let bipartite = (0..m).all(|i| {
        (0..m).all(|j| {
            let d = distance[i * m + j];
            let sides_differ = ExtendedPoint::from_index(i).a != ExtendedPoint::from_index(j).a;
            d == u8::MAX || (d % 2 == 1) == sides_differ
        })
    });
    let far = |i: usize, j: usize| {
        let d = distance[i * m + j] as usize;
        d == 0 || d == diameter
    };
    let antipodal = (0..m).all(|i| {
        (0..m).all(|j| !far(i, j) || (0..m).all(|l| !far(j, l) || far(i, l)))
    });
    DistanceProfile {
        distance,
        diameter,
        connected,
        bipartite,
        antipodal,
    }
}

/// `S(H)` over the trivial base scheme, checked against the distance
/// classes of the Hadamard graph: distances `0..=4` must be exactly the
/// identity, `r+`, the lifted relation, `r-` and `t~`.
pub fn hadamard_graph_scheme(h: &HadamardMatrix) -> Result<BuiltScheme> {
    let n = h.order();
    if n < 2 {
        return Err(Error::BadInput("the Hadamard graph needs order > 1".into()));
    }
    let built = build_sh(&trivial(n), h)?;
    let profile = distance_profile(&built);
    let m = 4 * n;
    let expected = [0, built.r_plus(), built.s_tilde(1), built.r_minus(), built.t_tilde()];
    for i in 0..m {
        for j in 0..m {
            let d = profile.distance[i * m + j] as usize;
            let relation = built.scheme.rel(i, j);
            if d >= expected.len() || expected[d] != relation {
                return Err(Error::DistanceMismatch {
                    x: i,
                    y: j,
                    distance: d,
                    relation,
                });
            }
        }
    }
    debug_assert!(profile.bipartite && profile.antipodal && profile.diameter == 4);
    Ok(built)
}

/// For every lifted relation `s~` and every `(y, x)` in it, the antipode of
/// `x` is the only point `z` with `(x, z)` in `t~` and `(y, z)` in `s~`.
pub fn fission_check(built: &BuiltScheme) -> bool {
    let s = &built.scheme;
    let m = s.order();
    let t = built.t_tilde();
    (1..built.base_rank).all(|base_rel| {
        let j = built.s_tilde(base_rel);
        (0..m).all(|y| {
            (0..m).filter(|&x| s.rel(y, x) == j).all(|x| {
                (0..m).filter(|&z| s.rel(x, z) == t && s.rel(y, z) == j).count() == 1
            })
        })
    })
}

/// If `point_map` is a bijection carrying every relation of `src` onto a
/// relation of `dst`, the induced relation map.
pub fn induced_relation_map(
    src: &AssociationScheme,
    dst: &AssociationScheme,
    point_map: impl Fn(usize) -> usize,
) -> Option<Vec<usize>> {
    let m = src.order();
    if dst.order() != m || dst.rank() != src.rank() {
        return None;
    }
    let images: Vec<usize> = (0..m).map(&point_map).collect();
    let mut hit = vec![false; m];
    for &i in &images {
        if i >= m || std::mem::replace(&mut hit[i], true) {
            return None;
        }
    }
    let mut map = vec![usize::MAX; src.rank()];
    for p in 0..m {
        for q in 0..m {
            let r = src.rel(p, q);
            let image = dst.rel(images[p], images[q]);
            if map[r] == usize::MAX {
                map[r] = image;
            } else if map[r] != image {
                return None;
            }
        }
    }
    let mut seen = vec![false; map.len()];
    for &r in &map {
        if std::mem::replace(&mut seen[r], true) {
            return None;
        }
    }
    Some(map)
}

/// Outcome of checking the five explicit isomorphisms between built schemes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// `x_{ab} -> x_{(a+1)b}` onto `S(H^T)`.
    pub swap_sides: bool,
    /// For every `y`, swapping `y_{00}, y_{01}` onto `S(D_y H)`.
    pub row_negation: bool,
    /// For every `y`, swapping `y_{10}, y_{11}` onto `S(H D_y)`.
    pub col_negation: bool,
    /// `x_{ab} -> x_{a(b+a+1)}` onto `S(-H)`.
    pub negate_via_side0: bool,
    /// `x_{ab} -> x_{a(b+a)}` onto `S(-H)`.
    pub negate_via_side1: bool,
    pub side0_relation_map: Option<Vec<usize>>,
    pub side1_relation_map: Option<Vec<usize>>,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.swap_sides
            && self.row_negation
            && self.col_negation
            && self.negate_via_side0
            && self.negate_via_side1
    }
}

pub fn lemma_maps_verify(base: &AssociationScheme, h: &HadamardMatrix) -> Result<LemmaReport> {
    let n = base.order();
    let src = build_sh(base, h)?.scheme;
    let flip_b_where = |x_filter: Option<usize>, side: usize| {
        move |i: usize| {
            let p = ExtendedPoint::from_index(i);
            let hit = p.a as usize == side && x_filter.is_none_or(|y| y == p.x);
            if hit {
                i ^ 1
            } else {
                i
            }
        }
    };

    let transposed = build_sh(base, &h.transpose())?.scheme;
    let swap_sides = induced_relation_map(&src, &transposed, |i| i ^ 2).is_some();

    let mut row_negation = true;
    let mut col_negation = true;
    for y in 0..n {
        let rows = build_sh(base, &h.negate_row(y))?.scheme;
        row_negation &= induced_relation_map(&src, &rows, flip_b_where(Some(y), 0)).is_some();
        let cols = build_sh(base, &h.negate_col(y))?.scheme;
        col_negation &= induced_relation_map(&src, &cols, flip_b_where(Some(y), 1)).is_some();
    }

    let negated = build_sh(base, &h.negate())?.scheme;
    let side0_relation_map = induced_relation_map(&src, &negated, flip_b_where(None, 0));
    let side1_relation_map = induced_relation_map(&src, &negated, flip_b_where(None, 1));
    Ok(LemmaReport {
        swap_sides,
        row_negation,
        col_negation,
        negate_via_side0: side0_relation_map.is_some(),
        negate_via_side1: side1_relation_map.is_some(),
        side0_relation_map,
        side1_relation_map,
    })
}
