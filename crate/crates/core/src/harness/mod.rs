//! Executable claim registry, exhaustive sweeps over enumerated bispaces,
//! profile search, the worked-example reproduction report, and the bispace
//! file format.

pub mod claims;
pub mod io;
pub mod paper;
pub mod search;
pub mod sweep;

pub use claims::{registry, verify_claim, Claim, ClaimOutcome, QuantifierShape, Witness};
pub use io::{bispace_to_json, load_bispace, parse_bispace, save_bispace};
pub use paper::{paper_examples_report, DiscrepancyFinding, PaperReport};
pub use search::{search_profile, ProfilePredicate, SearchHit};
pub use sweep::{sweep, ClaimReport, SweepConfig, Verdict};
