//! Anticentral elements: detection, the equivalent conditions, and the
//! structural consequences checked on concrete groups.

mod carter;
mod complements;
mod detect;
mod solvable;
mod supplements;
mod sylow_hall;

pub use carter::{c_chain, carter_verify, CChain, CarterVerifier, REGIME_EXHAUSTIVE, REGIME_SAMPLED};
pub use complements::{
    cyclic_sylow_complement_check, normal_sylow_criteria, DecomposedElement, NormalSylowConditions,
};
pub use detect::{
    class_size, classify_elements, commutator_index, equivalence_report, equivalence_sweep,
    find_anticentral_classes, is_anticentral, AnticentralCertificate, EquivalenceChecker,
};
pub use solvable::{
    chief_factor_criterion, direct_product_check, hereditary_checks, invariant_class_bijection,
    solvability_contrapositive, ChiefCriterion, FactorOutcome,
};
pub use supplements::{fixed_point_analysis, supplement_properties};
pub use sylow_hall::{
    hall_system, hall_system_report, invariant_sylow, sylow_meet_supplement,
    sylow_normalizer_identity, HallSystem,
};
