//! Shared inputs for the criterion benchmarks.

use weylkit_core::Partition;

/// Parses a partition padded to `n` parts.
pub fn shape(s: &str, n: usize) -> Partition {
    s.parse::<Partition>().expect("valid partition").padded(n).expect("fits in n")
}
