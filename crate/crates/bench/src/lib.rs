//! Shared setup for the criterion benchmarks.

use bispace_core::harness::paper;
use bispace_core::kappa_family::Bispace;

/// The three-point example bispaces, cloned fresh for each measurement.
pub fn finite_examples() -> Vec<Bispace> {
    ["ex16", "ex18i", "ex30", "ex38"]
        .iter()
        .map(|id| paper::example(id).expect("catalog id"))
        .collect()
}
