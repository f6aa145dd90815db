//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("images are not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("group is not transitive")]
    NotTransitive,

    #[error("group is trivial")]
    TrivialGroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not a subgroup of the automorphism group of the graph")]
    NotAutomorphism,

    /// A checker's stated hypothesis does not hold for the given instance.
    #[error("hypothesis failed: {0}")]
    Hypothesis(&'static str),

    /// A desk-scale cap was exceeded; never a wrong answer.
    #[error("capacity exceeded: {what} = {actual} exceeds cap {cap}")]
    Capacity {
        what: &'static str,
        actual: u128,
        cap: u128,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid construction: {0}")]
    Invalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
