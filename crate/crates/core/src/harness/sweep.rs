//! Exhaustive claim sweeps over every ordered pair of enumerated
//! σ-structures on a small labeled carrier.
//!
//! The pair index space is partitioned into contiguous chunks across
//! workers; each worker is pure and reports its chunk-first counterexample
//! per claim, and the ordered merge keeps reports identical for any worker
//! count. Refuted verdicts re-verify their witness before emission.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::claims::{registry, Claim, Witness, WitnessPart};
use crate::harness::io;
use crate::kappa_family::{enumerate_sigma_structures, Bispace, ExplicitFamily, KappaFamily};
use crate::semi_ops::FiniteCtx;
use crate::set_universe::{FiniteUniverse, Universe};

pub const SWEEP_CAP: usize = 4;

pub struct SweepConfig {
    pub n: usize,
    /// Empty means every registered claim.
    pub claims: Vec<String>,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Holds,
    Refuted {
        /// Indices into the canonical structure enumeration.
        pair: (usize, usize),
        /// The witnessing bispace in the standard file format.
        bispace: String,
        /// Labeled witness values in binding order.
        witness: Vec<(String, String)>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub statement: String,
    pub n: usize,
    pub bispace_count: usize,
    pub verdict: Verdict,
    /// Wall time; informational only and excluded from serialized reports
    /// so that sweeps are byte-identical across worker counts.
    #[serde(skip)]
    pub elapsed: Duration,
}

pub(crate) fn carrier_labels(n: usize) -> Vec<String> {
    const NAMES: [&str; 16] = [
        "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p",
    ];
    NAMES[..n].iter().map(|s| s.to_string()).collect()
}

pub(crate) fn pair_bispace(n: usize, families: &[ExplicitFamily], pair: (usize, usize)) -> Bispace {
    let u = Universe::Finite(FiniteUniverse::new(carrier_labels(n)).expect("small carrier"));
    Bispace::new(
        u,
        KappaFamily::Explicit(families[pair.0].clone()),
        KappaFamily::Explicit(families[pair.1].clone()),
    )
    .expect("enumerated structures validate")
}

fn pair_ctx(n: usize, families: &[ExplicitFamily], pair: (usize, usize)) -> FiniteCtx {
    FiniteCtx::new(
        n,
        [
            families[pair.0].sets().to_vec(),
            families[pair.1].sets().to_vec(),
        ],
    )
}

fn render_witness(w: &Witness, n: usize) -> Vec<(String, String)> {
    let labels = carrier_labels(n);
    w.parts
        .iter()
        .map(|(name, part)| {
            let value = match part {
                WitnessPart::Order(idx) => idx.to_string(),
                WitnessPart::Side(i) => format!("kappa{}", i.number()),
                WitnessPart::Set(m) => {
                    let elems: Vec<&str> = (0..n)
                        .filter(|b| m >> b & 1 == 1)
                        .map(|b| labels[b].as_str())
                        .collect();
                    format!("{{{}}}", elems.join(","))
                }
                WitnessPart::Point(p) => labels[*p].clone(),
                WitnessPart::Note(t) => t.to_string(),
            };
            (name.to_string(), value)
        })
        .collect()
}

/// Run the selected claims over every ordered pair of σ-structures on `n`
/// labeled points.
pub fn sweep(cfg: &SweepConfig) -> Result<Vec<ClaimReport>> {
    if cfg.n == 0 || cfg.n > SWEEP_CAP {
        return Err(Error::SizeCap {
            got: cfg.n,
            cap: SWEEP_CAP,
        });
    }
    let selected: Vec<&'static Claim> = if cfg.claims.is_empty() {
        registry().iter().collect()
    } else {
        cfg.claims
            .iter()
            .map(|id| {
                registry()
                    .iter()
                    .find(|c| c.id == id)
                    .ok_or_else(|| Error::UnknownClaim(id.clone()))
            })
            .collect::<Result<_>>()?
    };
    let families = enumerate_sigma_structures(cfg.n)?;
    let count = families.len();
    let total_pairs = count * count;
    let jobs = cfg.jobs.max(1).min(total_pairs.max(1));

    let start = Instant::now();
    // chunk-first counterexample per claim, per worker
    let chunk = total_pairs.div_ceil(jobs);
    let mut per_worker: Vec<Vec<Option<(usize, Witness)>>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..jobs {
            let lo = w * chunk;
            let hi = ((w + 1) * chunk).min(total_pairs);
            let families = &families;
            let selected = &selected;
            handles.push(scope.spawn(move || {
                let mut found: Vec<Option<(usize, Witness)>> = vec![None; selected.len()];
                for pair_idx in lo..hi {
                    if found.iter().all(|f| f.is_some()) {
                        break;
                    }
                    let pair = (pair_idx / count, pair_idx % count);
                    let ctx = pair_ctx(cfg.n, families, pair);
                    for (k, claim) in selected.iter().enumerate() {
                        if found[k].is_none() {
                            if let Some(witness) = (claim.check)(&ctx) {
                                found[k] = Some((pair_idx, witness));
                            }
                        }
                    }
                }
                found
            }));
        }
        for h in handles {
            per_worker.push(h.join().expect("sweep worker panicked"));
        }
    });
    let elapsed = start.elapsed();

    let mut reports = Vec::new();
    for (k, claim) in selected.iter().enumerate() {
        // ordered merge: the lowest pair index across chunks is the global
        // first counterexample
        let first = per_worker
            .iter()
            .filter_map(|w| w[k].as_ref())
            .min_by_key(|(idx, _)| *idx);
        let verdict = match first {
            None => Verdict::Holds,
            Some((pair_idx, witness)) => {
                let pair = (pair_idx / count, pair_idx % count);
                // re-verify: plugging the witness bispace back into the
                // claim must reproduce the same counterexample
                let ctx = pair_ctx(cfg.n, &families, pair);
                let again = (claim.check)(&ctx);
                if again.as_ref() != Some(witness) {
                    return Err(Error::Internal(format!(
                        "witness for {} failed re-verification",
                        claim.id
                    )));
                }
                let bispace = pair_bispace(cfg.n, &families, pair);
                Verdict::Refuted {
                    pair,
                    bispace: io::bispace_to_json(&bispace),
                    witness: render_witness(witness, cfg.n),
                }
            }
        };
        reports.push(ClaimReport {
            claim: claim.id.to_string(),
            statement: claim.statement.to_string(),
            n: cfg.n,
            bispace_count: total_pairs,
            verdict,
            elapsed,
        });
    }
    Ok(reports)
}
