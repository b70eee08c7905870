//! σ-structures, bispaces, closure/interior, and exhaustive enumeration of
//! all σ-structures on small finite carriers.
//!
//! On a finite carrier the countable-intersection axiom degenerates to
//! pairwise closure, so finite σ-structures coincide with finite topologies
//! and the enumerator deliberately enumerates those. The σ-vs-topology
//! distinction is exercised only by `Schema` families on symbolic carriers.

use std::fmt;

use crate::error::{Error, Result};
use crate::set_universe::{AtomSet, Bulk, Mask, SetExpr, SymbolicUniverse, Universe};

/// Which of the two structures of a bispace is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KappaIndex {
    K1,
    K2,
}

impl KappaIndex {
    pub const BOTH: [KappaIndex; 2] = [KappaIndex::K1, KappaIndex::K2];

    pub fn other(self) -> KappaIndex {
        match self {
            KappaIndex::K1 => KappaIndex::K2,
            KappaIndex::K2 => KappaIndex::K1,
        }
    }

    pub fn as_usize(self) -> usize {
        match self {
            KappaIndex::K1 => 0,
            KappaIndex::K2 => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.as_usize() as u8 + 1
    }

    pub fn from_number(n: u8) -> Result<KappaIndex> {
        match n {
            1 => Ok(KappaIndex::K1),
            2 => Ok(KappaIndex::K2),
            _ => Err(Error::Parse(format!(
                "structure index must be 1 or 2, got {n}"
            ))),
        }
    }
}

impl fmt::Display for KappaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// The open sets of a finite σ-structure, sorted by mask.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExplicitFamily {
    sets: Vec<Mask>,
}

impl ExplicitFamily {
    pub fn new(mut sets: Vec<Mask>) -> ExplicitFamily {
        sets.sort_unstable();
        sets.dedup();
        ExplicitFamily { sets }
    }

    pub fn sets(&self) -> &[Mask] {
        &self.sets
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.sets.binary_search(&m).is_ok()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Generates the open family {X, ∅} ∪ {required ∪ G : G countable, G ∩
/// excluded = ∅} when `countable` is set, plus every co-countable set when
/// `cocountable` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub required: AtomSet,
    pub excluded: AtomSet,
    pub countable: bool,
    pub cocountable: bool,
}

/// How a schema's semi-open structure behaves; the split every symbolic
/// rule in the crate keys on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SchemaShape {
    /// countable flag only, required atoms nonempty
    CtblRequired,
    /// countable flag only, no required atoms (excluded atoms allowed)
    CtblFree,
    /// cocountable flag set (with or without the countable flag)
    WithCoctbl,
    /// neither flag: the generated family is just {∅, X}
    Trivial,
}

impl Schema {
    pub(crate) fn shape(&self) -> SchemaShape {
        if self.cocountable {
            SchemaShape::WithCoctbl
        } else if self.countable {
            if self.required != 0 {
                SchemaShape::CtblRequired
            } else {
                SchemaShape::CtblFree
            }
        } else {
            SchemaShape::Trivial
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KappaFamily {
    Explicit(ExplicitFamily),
    Schema(Schema),
}

/// A failed σ-structure axiom. Axioms follow the open-set form: (1)
/// countable unions stay open, (2) finite intersections stay open, (3) ∅
/// and X are open.
#[derive(Debug, Clone, thiserror::Error)]
#[error("axiom {axiom} violated: {message}")]
pub struct Violation {
    pub axiom: u8,
    pub message: String,
    pub witnesses: Vec<String>,
}

pub fn validate(family: &KappaFamily, universe: &Universe) -> std::result::Result<(), Violation> {
    match (family, universe) {
        (KappaFamily::Explicit(fam), Universe::Finite(u)) => {
            let full = u.full_mask();
            if fam.sets.iter().any(|&m| m & !full != 0) {
                return Err(Violation {
                    axiom: 3,
                    message: "open set mentions points outside the carrier".into(),
                    witnesses: vec![],
                });
            }
            if !fam.contains(0) {
                return Err(Violation {
                    axiom: 3,
                    message: "empty set missing".into(),
                    witnesses: vec![],
                });
            }
            if !fam.contains(full) {
                return Err(Violation {
                    axiom: 3,
                    message: "whole carrier missing".into(),
                    witnesses: vec![],
                });
            }
            // Pairwise closure suffices: countable unions reduce to finite
            // ones on a finite carrier.
            for &a in &fam.sets {
                for &b in &fam.sets {
                    if !fam.contains(a | b) {
                        return Err(Violation {
                            axiom: 1,
                            message: "union of two open sets is not open".into(),
                            witnesses: vec![
                                format!("{{{}}}", u.labels_of(a).join(",")),
                                format!("{{{}}}", u.labels_of(b).join(",")),
                            ],
                        });
                    }
                    if !fam.contains(a & b) {
                        return Err(Violation {
                            axiom: 2,
                            message: "intersection of two open sets is not open".into(),
                            witnesses: vec![
                                format!("{{{}}}", u.labels_of(a).join(",")),
                                format!("{{{}}}", u.labels_of(b).join(",")),
                            ],
                        });
                    }
                }
            }
            Ok(())
        }
        (KappaFamily::Schema(s), Universe::Symbolic(u)) => {
            let all = u.all_atoms();
            if s.required & !all != 0 || s.excluded & !all != 0 {
                return Err(Violation {
                    axiom: 3,
                    message: "schema mentions undeclared atoms".into(),
                    witnesses: vec![],
                });
            }
            if s.required & s.excluded != 0 {
                return Err(Violation {
                    axiom: 2,
                    message: "required and excluded atoms overlap".into(),
                    witnesses: u
                        .atom_labels(s.required & s.excluded)
                        .iter()
                        .map(|a| a.to_string())
                        .collect(),
                });
            }
            if !s.countable && !s.cocountable && s.required == 0 {
                return Err(Violation {
                    axiom: 3,
                    message: "schema generates nothing beyond {∅, X}: set a flag or required atoms"
                        .into(),
                    witnesses: vec![],
                });
            }
            Ok(())
        }
        (KappaFamily::Explicit(_), Universe::Symbolic(_)) => Err(Violation {
            axiom: 3,
            message: "explicit family given for a symbolic carrier".into(),
            witnesses: vec![],
        }),
        (KappaFamily::Schema(_), Universe::Finite(_)) => Err(Violation {
            axiom: 3,
            message: "schema family given for a finite carrier".into(),
            witnesses: vec![],
        }),
    }
}

/// One carrier with two validated σ-structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bispace {
    universe: Universe,
    kappa: [KappaFamily; 2],
}

impl Bispace {
    pub fn new(universe: Universe, kappa1: KappaFamily, kappa2: KappaFamily) -> Result<Bispace> {
        validate(&kappa1, &universe)?;
        validate(&kappa2, &universe)?;
        Ok(Bispace {
            universe,
            kappa: [kappa1, kappa2],
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn family(&self, i: KappaIndex) -> &KappaFamily {
        &self.kappa[i.as_usize()]
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.universe, Universe::Finite(_))
    }

    pub fn is_open(&self, i: KappaIndex, s: &SetExpr) -> Result<bool> {
        match (self.family(i), s) {
            (KappaFamily::Explicit(fam), SetExpr::FiniteMask(m)) => Ok(fam.contains(*m)),
            (KappaFamily::Schema(schema), _) => {
                let u = self.universe.as_symbolic().expect("validated");
                schema_is_open(schema, u, &self.universe, s)
            }
            _ => Err(Error::UniverseMismatch),
        }
    }

    pub fn is_closed(&self, i: KappaIndex, s: &SetExpr) -> Result<bool> {
        self.is_open(i, &self.universe.complement(s))
    }

    /// Intersection of all closed supersets; equivalently the adherence
    /// set. The result need not itself be closed.
    pub fn closure(&self, i: KappaIndex, s: &SetExpr) -> Result<SetExpr> {
        match (self.family(i), s) {
            (KappaFamily::Explicit(fam), SetExpr::FiniteMask(m)) => {
                let full = self.universe.as_finite().expect("validated").full_mask();
                let mut acc = full;
                for &open in fam.sets() {
                    let closed = !open & full;
                    if closed & m == *m {
                        acc &= closed;
                    }
                }
                Ok(SetExpr::FiniteMask(acc))
            }
            (KappaFamily::Schema(schema), _) => {
                let u = self.universe.as_symbolic().expect("validated");
                schema_closure(schema, u, &self.universe, s)
            }
            _ => Err(Error::UniverseMismatch),
        }
    }

    pub fn interior(&self, i: KappaIndex, s: &SetExpr) -> Result<SetExpr> {
        let c = self.closure(i, &self.universe.complement(s))?;
        Ok(self.universe.complement(&c))
    }
}

pub(crate) fn schema_is_open(
    schema: &Schema,
    su: &SymbolicUniverse,
    u: &Universe,
    s: &SetExpr,
) -> Result<bool> {
    if u.is_empty(s).is_true() || u.is_whole(s).is_true() {
        return Ok(true);
    }
    let all = su.all_atoms();
    match s {
        SetExpr::ExplicitSmall(a) => {
            Ok(schema.countable && schema.required & !a == 0 && a & schema.excluded == 0)
        }
        SetExpr::CoFinite(_) => Ok(schema.cocountable),
        SetExpr::Abstract { ins, bulk, .. } => match bulk {
            Bulk::Countable => {
                if !schema.countable {
                    if *ins == 0 {
                        // Might still denote the (open) empty set.
                        Err(Error::Indeterminate(
                            "countable abstract set may or may not be empty".into(),
                        ))
                    } else {
                        Ok(false)
                    }
                } else if ins & schema.excluded != 0 {
                    Ok(false)
                } else if schema.required & !ins == 0 {
                    Ok(true)
                } else if *ins != 0 {
                    Ok(false)
                } else {
                    Err(Error::Indeterminate(
                        "countable abstract set may or may not be empty".into(),
                    ))
                }
            }
            Bulk::CoCountable => {
                if schema.cocountable {
                    Ok(true)
                } else if *ins != all {
                    // Proper co-countable set: definitely not generated.
                    Ok(false)
                } else {
                    // Could still denote X itself.
                    Err(Error::Indeterminate(
                        "co-countable abstract set may or may not be the whole carrier".into(),
                    ))
                }
            }
            Bulk::BothBig => Ok(false),
        },
        SetExpr::FiniteMask(_) => Err(Error::UniverseMismatch),
    }
}

/// Closed form for the schema closure: with the countable flag only,
/// closure(S) = X when S meets the required atoms, otherwise S ∪ excluded;
/// with the cocountable flag any countable S is its own closure.
pub(crate) fn schema_closure(
    schema: &Schema,
    _su: &SymbolicUniverse,
    u: &Universe,
    s: &SetExpr,
) -> Result<SetExpr> {
    if u.is_empty(s).is_true() {
        return Ok(u.empty());
    }
    if u.is_whole(s).is_true() {
        return Ok(u.whole());
    }
    let meets_required = match s {
        SetExpr::ExplicitSmall(a) | SetExpr::Abstract { ins: a, .. } => a & schema.required != 0,
        SetExpr::CoFinite(a) => schema.required & !a != 0,
        SetExpr::FiniteMask(_) => return Err(Error::UniverseMismatch),
    };
    if schema.cocountable && u.is_countable(s).is_true() {
        // Countable sets are closed once all co-countable sets are open.
        return Ok(*s);
    }
    if schema.countable && !meets_required {
        // Proper closed supersets are the co-countable sets containing the
        // excluded atoms and avoiding the required ones; their intersection
        // is S ∪ excluded.
        if schema.excluded != 0 && !u.is_empty(s).is_false() {
            return Err(Error::Indeterminate(
                "closure depends on whether the abstract set is empty".into(),
            ));
        }
        let ex = SetExpr::ExplicitSmall(schema.excluded);
        return u.union(s, &ex);
    }
    Ok(u.whole())
}

pub const ENUMERATION_CAP: usize = 4;

/// Every labeled σ-structure on `n` points, each exactly once, in a
/// canonical deterministic order (lexicographic by sorted mask sequence).
///
/// n ≤ 3 filters every candidate family; n = 4 closes every generator set
/// under union/intersection and deduplicates. The two routes are
/// cross-checked in tests.
pub fn enumerate_sigma_structures(n: usize) -> Result<Vec<ExplicitFamily>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::SizeCap {
            got: n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut out = if n <= 3 {
        enumerate_by_filter(n)
    } else {
        enumerate_by_generators(n)
    };
    out.sort();
    Ok(out)
}

fn lattice_closed(sets: &[Mask]) -> bool {
    let contains = |m: Mask| sets.binary_search(&m).is_ok();
    sets.iter()
        .all(|&a| sets.iter().all(|&b| contains(a | b) && contains(a & b)))
}

fn enumerate_by_filter(n: usize) -> Vec<ExplicitFamily> {
    let full: Mask = (1 << n) - 1;
    let inner: Vec<Mask> = (1..full).collect();
    let mut out = Vec::new();
    for cand in 0u32..(1 << inner.len()) {
        let mut sets = vec![0, full];
        for (bit, &m) in inner.iter().enumerate() {
            if cand >> bit & 1 == 1 {
                sets.push(m);
            }
        }
        sets.sort_unstable();
        if lattice_closed(&sets) {
            out.push(ExplicitFamily { sets });
        }
    }
    out
}

fn close_under_lattice(mut sets: Vec<Mask>, full: Mask) -> Vec<Mask> {
    sets.push(0);
    sets.push(full);
    sets.sort_unstable();
    sets.dedup();
    loop {
        let mut added = Vec::new();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                for m in [sets[i] | sets[j], sets[i] & sets[j]] {
                    if sets.binary_search(&m).is_err() && !added.contains(&m) {
                        added.push(m);
                    }
                }
            }
        }
        if added.is_empty() {
            return sets;
        }
        sets.extend(added);
        sets.sort_unstable();
    }
}

fn enumerate_by_generators(n: usize) -> Vec<ExplicitFamily> {
    let full: Mask = (1 << n) - 1;
    let inner: Vec<Mask> = (1..full).collect();
    let mut seen = std::collections::BTreeSet::new();
    for gen in 0u32..(1 << inner.len()) {
        let gens: Vec<Mask> = inner
            .iter()
            .enumerate()
            .filter(|(bit, _)| gen >> bit & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        seen.insert(close_under_lattice(gens, full));
    }
    seen.into_iter()
        .map(|sets| ExplicitFamily { sets })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_universe::FiniteUniverse;

    pub(crate) fn finite_universe(labels: &[&str]) -> Universe {
        Universe::Finite(
            FiniteUniverse::new(labels.iter().map(|s| s.to_string()).collect()).unwrap(),
        )
    }

    fn explicit(masks: &[Mask]) -> KappaFamily {
        KappaFamily::Explicit(ExplicitFamily::new(masks.to_vec()))
    }

    #[test]
    fn validate_accepts_nested_chain() {
        // {∅, X, {a}, {a,b}} on {a,b,c}
        let u = finite_universe(&["a", "b", "c"]);
        assert!(validate(&explicit(&[0, 0b111, 0b001, 0b011]), &u).is_ok());
    }

    #[test]
    fn validate_rejects_missing_whole() {
        let u = finite_universe(&["a", "b", "c"]);
        let err = validate(&explicit(&[0, 0b001]), &u).unwrap_err();
        assert_eq!(err.axiom, 3);
    }

    #[test]
    fn validate_rejects_missing_union() {
        let u = finite_universe(&["a", "b", "c"]);
        let err = validate(&explicit(&[0, 0b111, 0b001, 0b010]), &u).unwrap_err();
        assert_eq!(err.axiom, 1);
        assert_eq!(err.witnesses.len(), 2);
    }

    fn sym_universe(atoms: &[&str]) -> (Universe, SymbolicUniverse) {
        let su = SymbolicUniverse::new(atoms.iter().map(|s| s.to_string()).collect()).unwrap();
        (Universe::Symbolic(su.clone()), su)
    }

    #[test]
    fn schema_open_membership() {
        // All countable sets open: a singleton is open.
        let (u, su) = sym_universe(&["r5"]);
        let k = Schema {
            required: 0,
            excluded: 0,
            countable: true,
            cocountable: false,
        };
        let b = Bispace::new(u, KappaFamily::Schema(k.clone()), KappaFamily::Schema(k)).unwrap();
        let s = su.explicit_small(["r5"]).unwrap();
        assert!(b.is_open(KappaIndex::K2, &s).unwrap());
    }

    #[test]
    fn schema_open_respects_exclusion() {
        // Countable subsets of X-{r2}: {r2} itself is not open.
        let (u, su) = sym_universe(&["r2"]);
        let k2 = Schema {
            required: 0,
            excluded: su.atom_set(["r2"]).unwrap(),
            countable: true,
            cocountable: false,
        };
        let free = Schema {
            required: 0,
            excluded: 0,
            countable: true,
            cocountable: false,
        };
        let b = Bispace::new(u, KappaFamily::Schema(free), KappaFamily::Schema(k2)).unwrap();
        let s = su.explicit_small(["r2"]).unwrap();
        assert!(!b.is_open(KappaIndex::K2, &s).unwrap());
    }

    #[test]
    fn indiscrete_explicit_only_trivial_opens() {
        let u = finite_universe(&["a", "b"]);
        let b = Bispace::new(u, explicit(&[0, 0b11]), explicit(&[0, 0b11])).unwrap();
        assert!(b.is_open(KappaIndex::K1, &SetExpr::FiniteMask(0)).unwrap());
        assert!(b
            .is_open(KappaIndex::K1, &SetExpr::FiniteMask(0b11))
            .unwrap());
        assert!(!b
            .is_open(KappaIndex::K1, &SetExpr::FiniteMask(0b01))
            .unwrap());
    }

    #[test]
    fn schema_closure_with_exclusion() {
        // κ = countable subsets avoiding r2: closure({r3,r5}) = {r2,r3,r5}.
        let (u, su) = sym_universe(&["r2", "r3", "r5"]);
        let k = Schema {
            required: 0,
            excluded: su.atom_set(["r2"]).unwrap(),
            countable: true,
            cocountable: false,
        };
        let b = Bispace::new(u, KappaFamily::Schema(k.clone()), KappaFamily::Schema(k)).unwrap();
        let s = su.explicit_small(["r3", "r5"]).unwrap();
        assert_eq!(
            b.closure(KappaIndex::K1, &s).unwrap(),
            su.explicit_small(["r2", "r3", "r5"]).unwrap()
        );
    }

    #[test]
    fn finite_closure_by_intersection() {
        // κ1 = {∅, X, {a}, {a,b}}: closure({a}) = X.
        let u = finite_universe(&["a", "b", "c"]);
        let b = Bispace::new(
            u,
            explicit(&[0, 0b111, 0b001, 0b011]),
            explicit(&[0, 0b111]),
        )
        .unwrap();
        assert_eq!(
            b.closure(KappaIndex::K1, &SetExpr::FiniteMask(0b001))
                .unwrap(),
            SetExpr::FiniteMask(0b111)
        );
    }

    #[test]
    fn interior_is_dual_to_closure() {
        let u = finite_universe(&["a", "b", "c"]);
        let b = Bispace::new(
            u,
            explicit(&[0, 0b111, 0b001, 0b011]),
            explicit(&[0, 0b111]),
        )
        .unwrap();
        for m in 0..=0b111u16 {
            let s = SetExpr::FiniteMask(m);
            let int = b.interior(KappaIndex::K1, &s).unwrap();
            let dual = b
                .closure(KappaIndex::K1, &SetExpr::FiniteMask(!m & 0b111))
                .unwrap();
            assert_eq!(
                int,
                SetExpr::FiniteMask(match dual {
                    SetExpr::FiniteMask(c) => !c & 0b111,
                    _ => unreachable!(),
                })
            );
        }
    }

    #[test]
    fn closure_of_empty_is_empty() {
        let u = finite_universe(&["a", "b"]);
        let b = Bispace::new(u, explicit(&[0, 0b11, 0b01]), explicit(&[0, 0b11])).unwrap();
        assert_eq!(
            b.closure(KappaIndex::K1, &SetExpr::FiniteMask(0)).unwrap(),
            SetExpr::FiniteMask(0)
        );
        let (us, su) = sym_universe(&["r3"]);
        let k = Schema {
            required: su.atom_set(["r3"]).unwrap(),
            excluded: 0,
            countable: true,
            cocountable: false,
        };
        let bs = Bispace::new(us, KappaFamily::Schema(k.clone()), KappaFamily::Schema(k)).unwrap();
        let empty = su.explicit_small([]).unwrap();
        assert_eq!(bs.closure(KappaIndex::K1, &empty).unwrap(), empty);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_sigma_structures(1).unwrap().len(), 1);
        assert_eq!(enumerate_sigma_structures(2).unwrap().len(), 4);
        assert_eq!(enumerate_sigma_structures(3).unwrap().len(), 29);
        assert_eq!(enumerate_sigma_structures(4).unwrap().len(), 355);
    }

    #[test]
    fn enumeration_rejects_oversize() {
        assert!(matches!(
            enumerate_sigma_structures(5),
            Err(Error::SizeCap { .. })
        ));
        assert!(matches!(
            enumerate_sigma_structures(0),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn both_routes_agree_up_to_cap() {
        for n in 1..=4 {
            let mut filter = enumerate_by_filter(n);
            filter.sort();
            let mut gens = enumerate_by_generators(n);
            gens.sort();
            assert_eq!(filter, gens, "routes disagree at n={n}");
        }
    }

    #[test]
    fn every_enumerated_family_validates() {
        let labels = ["a", "b", "c", "d"];
        for n in 1..=4 {
            let u = finite_universe(&labels[..n]);
            for fam in enumerate_sigma_structures(n).unwrap() {
                assert!(validate(&KappaFamily::Explicit(fam), &u).is_ok());
            }
        }
    }

    #[test]
    fn adherence_agrees_with_closed_intersection() {
        // {x : every open set containing x meets S} versus the intersection
        // of closed supersets, every family and subset, n ≤ 4.
        let labels = ["a", "b", "c", "d"];
        for n in 1..=4 {
            let u = finite_universe(&labels[..n]);
            let full: Mask = (1 << n) - 1;
            for fam in enumerate_sigma_structures(n).unwrap() {
                let b = Bispace::new(
                    u.clone(),
                    KappaFamily::Explicit(fam.clone()),
                    KappaFamily::Explicit(ExplicitFamily::new(vec![0, full])),
                )
                .unwrap();
                for s in 0..=full {
                    let by_closed =
                        match b.closure(KappaIndex::K1, &SetExpr::FiniteMask(s)).unwrap() {
                            SetExpr::FiniteMask(m) => m,
                            _ => unreachable!(),
                        };
                    let mut by_adherence = 0;
                    for x in 0..n {
                        let px: Mask = 1 << x;
                        let adheres = fam
                            .sets()
                            .iter()
                            .all(|&open| open & px == 0 || open & s != 0);
                        if adheres {
                            by_adherence |= px;
                        }
                    }
                    assert_eq!(by_closed, by_adherence);
                }
            }
        }
    }

    #[test]
    fn closure_is_extensive_and_monotone() {
        let u = finite_universe(&["a", "b", "c"]);
        for fam in enumerate_sigma_structures(3).unwrap() {
            let b = Bispace::new(
                u.clone(),
                KappaFamily::Explicit(fam),
                KappaFamily::Explicit(ExplicitFamily::new(vec![0, 0b111])),
            )
            .unwrap();
            let cl = |m: Mask| match b.closure(KappaIndex::K1, &SetExpr::FiniteMask(m)).unwrap() {
                SetExpr::FiniteMask(r) => r,
                _ => unreachable!(),
            };
            for s in 0..=0b111u16 {
                assert_eq!(cl(s) & s, s);
                for t in 0..=0b111u16 {
                    if s & !t == 0 {
                        assert_eq!(cl(s) & !cl(t), 0);
                    }
                }
            }
            assert_eq!(cl(0), 0);
            assert_eq!(cl(0b111), 0b111);
        }
    }
}
