//! Subgroup structure: classes, centralizers, normalizers, series,
//! Sylow subgroups, quotients and small subgroup lattices.

mod classes;
mod lattice;
mod quotient;
mod series;
mod subgroups;
mod sylow;

pub use classes::{conjugacy_classes, Classes, ConjClass};
pub use lattice::{CayleyTable, LatticeSubgroup, SubgroupLattice, MAX_LATTICE_SIZE};
pub use quotient::{quotient_group, Quotient};
pub use series::{
    chief_series, chief_series_through, derived_series, is_nilpotent, is_solvable, lower_central_series,
    nilpotency_class, series_report, upper_central_series, FactorKind, SeriesKind, SeriesReport,
};
pub use subgroups::{
    center, centralizer, centralizer_exhaustive, centralizer_of_subgroup,
    centralizer_orbit_stabilizer, check_normal, commutator_subgroup, conjugates, derived_subgroup,
    group_from_key, is_invariant_under, is_normal, is_supplement, normal_closure, normalizer,
    product_order, subgroup_key, SubgroupKey,
};
pub use sylow::{all_sylow_subgroups, sylow_subgroup};
