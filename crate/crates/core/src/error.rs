use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    BadInput(String),

    #[error("relation indices do not partition X x X: index {missing} never occurs")]
    NotAPartition { missing: usize },

    #[error("identity condition fails at ({x}, {y}): relation {relation}")]
    BadIdentity { x: usize, y: usize, relation: usize },

    #[error("relation set is not closed under transpose: ({x}, {y}) lies in {relation} but ({y}, {x}) lies in {transpose}")]
    NotClosedUnderTranspose {
        x: usize,
        y: usize,
        relation: usize,
        transpose: usize,
    },

    #[error(
        "intersection number c[{s}][{t}][{u}] is not constant: {first:?} gives {first_count}, {second:?} gives {second_count}"
    )]
    NonConstantIntersection {
        s: usize,
        t: usize,
        u: usize,
        first: (usize, usize),
        first_count: usize,
        second: (usize, usize),
        second_count: usize,
    },

    #[error("multiplication table is not a group with identity 0: {0}")]
    NotAGroup(String),

    #[error("rows {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),

    #[error("no Hadamard matrix has order {0}")]
    BadOrder(usize),

    #[error("order {order} exceeds the supported cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("degree {degree} exceeds the brute-force cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("dimension mismatch: scheme has {scheme} points, matrix has order {matrix}")]
    DimensionMismatch { scheme: usize, matrix: usize },

    #[error("graph distance classes disagree with the relation labels at ({x}, {y}): distance {distance}, relation {relation}")]
    DistanceMismatch {
        x: usize,
        y: usize,
        distance: usize,
        relation: usize,
    },

    #[error("orbit enumeration does not support order {order} in {mode} mode")]
    OrderUnsupported { order: usize, mode: &'static str },
}
