//! Finite permutation groups with a focus on anticentral elements: elements
//! `a` whose centralizer has order `|G : G'|`.
//!
//! Conventions: right actions throughout, `x^g = g^-1 x g` and
//! `[a, g] = a^-1 g^-1 a g`, so that `a [a, g] = a^g`. Points are 0-based in
//! the API and 1-based in cycle notation.

pub mod anticentral;
pub mod arith;
pub mod chartab;
pub mod error;
pub mod limits;
pub mod par;
pub mod perm;
pub mod report;
pub mod structure;
pub mod suites;
pub mod zoo;

pub use error::{Error, Result};
pub use perm::{ActionSet, PermGroup, Permutation};
pub use report::{CheckStatus, ReportBuilder, VerificationReport};
