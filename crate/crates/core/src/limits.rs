use std::sync::OnceLock;

/// Default cap on exhaustive element enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// Above this order centralizers use orbit-stabilizer instead of a scan.
pub const EXHAUSTIVE_CENTRALIZER_LIMIT: u64 = 10_000;

/// Exhaustive subgroup lattices are only built up to this order.
pub const LATTICE_LIMIT: u64 = 500;

/// Exhaustive scans of Sylow and Hall conjugates up to this order.
pub const SCAN_LIMIT: u64 = 2000;

/// Enumeration bound from `ACG_ENUM_BOUND`, read once.
pub fn enumeration_bound() -> u64 {
    static BOUND: OnceLock<u64> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var("ACG_ENUM_BOUND")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&b| b > 0)
            .unwrap_or(DEFAULT_ENUMERATION_BOUND)
    })
}
