//! The bispace file format: UTF-8 JSON, loaded with validation and saved
//! canonically so that load ∘ save is the identity byte for byte.
//!
//! Finite:
//! `{"universe":["a","b"],"kappa1":[[],["a"],["a","b"]],"kappa2":[...]}`
//!
//! Symbolic:
//! `{"universe":{"symbolic":true,"atoms":["r3"]},"kappa1":{"required":["r3"],"excluded":[],"countable":true,"cocountable":false},"kappa2":{...}}`

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kappa_family::{Bispace, ExplicitFamily, KappaFamily, KappaIndex, Schema};
use crate::set_universe::{FiniteUniverse, SymbolicUniverse, Universe};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum UniverseRepr {
    Finite(Vec<String>),
    Symbolic { symbolic: bool, atoms: Vec<String> },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FamilyRepr {
    Explicit(Vec<Vec<String>>),
    Schema {
        required: Vec<String>,
        excluded: Vec<String>,
        countable: bool,
        cocountable: bool,
    },
}

#[derive(Serialize, Deserialize)]
struct BispaceRepr {
    universe: UniverseRepr,
    kappa1: FamilyRepr,
    kappa2: FamilyRepr,
}

fn family_from_repr(repr: FamilyRepr, universe: &Universe) -> Result<KappaFamily> {
    match (repr, universe) {
        (FamilyRepr::Explicit(sets), Universe::Finite(u)) => {
            let masks = sets
                .iter()
                .map(|labels| u.mask_of(labels.iter().map(|s| s.as_str())))
                .collect::<Result<Vec<_>>>()?;
            Ok(KappaFamily::Explicit(ExplicitFamily::new(masks)))
        }
        (
            FamilyRepr::Schema {
                required,
                excluded,
                countable,
                cocountable,
            },
            Universe::Symbolic(u),
        ) => Ok(KappaFamily::Schema(Schema {
            required: u.atom_set(required.iter().map(|s| s.as_str()))?,
            excluded: u.atom_set(excluded.iter().map(|s| s.as_str()))?,
            countable,
            cocountable,
        })),
        (FamilyRepr::Explicit(_), Universe::Symbolic(_)) => Err(Error::Parse(
            "explicit set lists require a finite universe".into(),
        )),
        (FamilyRepr::Schema { .. }, Universe::Finite(_)) => Err(Error::Parse(
            "schema families require a symbolic universe".into(),
        )),
    }
}

fn family_to_repr(family: &KappaFamily, universe: &Universe) -> FamilyRepr {
    match (family, universe) {
        (KappaFamily::Explicit(f), Universe::Finite(u)) => {
            FamilyRepr::Explicit(f.sets().iter().map(|&m| u.labels_of(m)).collect())
        }
        (KappaFamily::Schema(s), Universe::Symbolic(u)) => FamilyRepr::Schema {
            required: u.atom_labels(s.required),
            excluded: u.atom_labels(s.excluded),
            countable: s.countable,
            cocountable: s.cocountable,
        },
        _ => unreachable!("validated bispace"),
    }
}

pub fn parse_bispace(text: &str) -> Result<Bispace> {
    let repr: BispaceRepr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let universe = match repr.universe {
        UniverseRepr::Finite(labels) => Universe::Finite(FiniteUniverse::new(labels)?),
        UniverseRepr::Symbolic { symbolic, atoms } => {
            if !symbolic {
                return Err(Error::Parse(
                    "symbolic universe must set \"symbolic\": true".into(),
                ));
            }
            Universe::Symbolic(SymbolicUniverse::new(atoms)?)
        }
    };
    let kappa1 = family_from_repr(repr.kappa1, &universe)?;
    let kappa2 = family_from_repr(repr.kappa2, &universe)?;
    Bispace::new(universe, kappa1, kappa2)
}

/// Canonical single-line JSON: families sorted by mask, sets as labels in
/// carrier order.
pub fn bispace_to_json(b: &Bispace) -> String {
    let universe = match b.universe() {
        Universe::Finite(u) => UniverseRepr::Finite(u.labels().to_vec()),
        Universe::Symbolic(u) => UniverseRepr::Symbolic {
            symbolic: true,
            atoms: u.atoms().to_vec(),
        },
    };
    let repr = BispaceRepr {
        universe,
        kappa1: family_to_repr(b.family(KappaIndex::K1), b.universe()),
        kappa2: family_to_repr(b.family(KappaIndex::K2), b.universe()),
    };
    serde_json::to_string(&repr).expect("serializable")
}

pub fn load_bispace(path: impl AsRef<Path>) -> Result<Bispace> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Parse(format!("{}: {e}", path.as_ref().display())))?;
    parse_bispace(&text)
}

pub fn save_bispace(b: &Bispace, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), bispace_to_json(b) + "\n")
        .map_err(|e| Error::Parse(format!("{}: {e}", path.as_ref().display())))
}

/// Serialize any report deterministically.
pub fn report_to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("serializable")
}

pub fn save_report<T: Serialize>(report: &T, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), report_to_json(report) + "\n")
        .map_err(|e| Error::Parse(format!("{}: {e}", path.as_ref().display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::paper::{example, EXAMPLE_IDS};

    #[test]
    fn canonical_round_trip_all_examples() {
        for id in EXAMPLE_IDS {
            let b = example(id).unwrap();
            let text = bispace_to_json(&b);
            let parsed = parse_bispace(&text).unwrap();
            assert_eq!(parsed, b, "{id}");
            assert_eq!(bispace_to_json(&parsed), text, "{id}");
        }
    }

    #[test]
    fn missing_kappa2_is_a_parse_error() {
        let text = r#"{"universe":["a","b"],"kappa1":[[],["a"],["a","b"]]}"#;
        assert!(matches!(parse_bispace(text), Err(Error::Parse(_))));
    }

    #[test]
    fn undeclared_point_rejected() {
        let text =
            r#"{"universe":["a","b"],"kappa1":[[],["z"],["a","b"]],"kappa2":[[],["a","b"]]}"#;
        assert!(parse_bispace(text).is_err());
    }

    #[test]
    fn invalid_family_rejected_with_violation() {
        let text = r#"{"universe":["a","b"],"kappa1":[[],["a"]],"kappa2":[[],["a","b"]]}"#;
        assert!(matches!(parse_bispace(text), Err(Error::Violation(_))));
    }

    #[test]
    fn symbolic_fixture_shape() {
        let text = r#"{"universe":{"symbolic":true,"atoms":["r3"]},"kappa1":{"required":["r3"],"excluded":[],"countable":true,"cocountable":false},"kappa2":{"required":[],"excluded":[],"countable":true,"cocountable":false}}"#;
        let b = parse_bispace(text).unwrap();
        assert_eq!(b, example("ex14").unwrap());
        assert_eq!(bispace_to_json(&b), text);
    }
}
