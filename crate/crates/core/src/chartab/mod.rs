//! Exact character tables over cyclotomic integers.

mod cyclotomic;
mod dixon;
pub mod modp;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicValue};
pub use dixon::{character_table, parse_export, CharacterTable, ExportedTable};
