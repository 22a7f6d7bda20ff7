//! Inputs shared by the benchmarks.

use aura_topology::search::enumerate_spaces;
use aura_topology::AuraSpace;

/// Every aura space on `n` points.
pub fn spaces(n: usize) -> Vec<AuraSpace> {
    enumerate_spaces(n)
        .expect("size within enumeration range")
        .collect()
}
