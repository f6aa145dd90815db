//! Permutation groups, orbital graphs and fixity.
//!
//! The crate builds finite permutation groups with stabilizer-chain queries,
//! suborbits and orbital (di)graphs, graph automorphism groups, exact
//! fixed-point ratios, and a catalog of named instances on which every
//! explicit inequality of the accompanying bound module can be checked.

pub mod aut;
pub mod bounds;
pub mod catalog;
pub mod error;
pub mod fixity;
pub mod graph;
pub mod group;
pub mod orbital;
pub mod perm;
pub mod quotients;
pub mod random;
pub mod report;
pub mod structure;

mod chain;

pub use error::{Error, Result};
pub use fixity::{fix_set, fixed_point_ratio, relative_fixity, wreath_example, Fixity};
pub use graph::SimpleGraph;
pub use group::PermGroup;
pub use orbital::{higman_check, orbital_digraph, suborbits, OrbitalSpec};
pub use perm::Permutation;
pub use report::{BoundReport, LemmaId, ReportValue};

/// Exact rational used for fixed-point ratios and thresholds.
pub type Rational = num::rational::Ratio<u64>;
