//! Permutations and the permutation-group engine.
//!
//! Everything uses the right action: points map as `x^(pq) = (x^p)^q` and
//! conjugation is `x^g = g^-1 x g`.

mod bsgs;
mod cosets;
mod group;
mod groupfile;
mod action_set;
mod permutation;

pub use bsgs::StabChain;
pub use cosets::{coset_action, CosetSet};
pub use group::{Elements, PermGroup};
pub use groupfile::GroupFile;
pub use action_set::ActionSet;
pub use permutation::Permutation;
