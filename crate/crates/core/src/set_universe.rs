//! Exact and symbolic set algebra over the carrier. Every other module
//! manipulates subsets only through this interface.
//!
//! Finite carriers hold at most 16 points, so a subset is one `u16` bitmask.
//! Symbolic carriers are uncountable with a fixed finite list of
//! distinguished atoms; a subset is either exact (a finite atom set, or the
//! carrier minus a finite atom set) or an `Abstract` description that pins
//! down every atom and classifies the part away from the atoms as
//! countable, co-countable, or big on both sides.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Tri};

/// Subset of a finite carrier, one bit per point in label order.
pub type Mask = u16;

/// Finite subset of the declared atoms, one bit per atom in declaration order.
pub type AtomSet = u64;

pub const MAX_FINITE_POINTS: usize = 16;
pub const MAX_ATOMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteUniverse {
    labels: Vec<String>,
}

impl FiniteUniverse {
    /// Label order is fixed for the lifetime of the universe and gives the
    /// canonical bit positions.
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() || labels.len() > MAX_FINITE_POINTS {
            return Err(Error::SizeCap {
                got: labels.len(),
                cap: MAX_FINITE_POINTS,
            });
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::Parse(format!("duplicate point label `{l}`")));
            }
        }
        Ok(FiniteUniverse { labels })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn full_mask(&self) -> Mask {
        if self.labels.len() == MAX_FINITE_POINTS {
            Mask::MAX
        } else {
            (1 << self.labels.len()) - 1
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, bit: usize) -> &str {
        &self.labels[bit]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mask_of<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<Mask> {
        let mut m = 0;
        for l in labels {
            let bit = self
                .index_of(l)
                .ok_or_else(|| Error::UndeclaredAtom(l.to_string()))?;
            m |= 1 << bit;
        }
        Ok(m)
    }

    pub fn labels_of(&self, mask: Mask) -> Vec<String> {
        (0..self.size())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| self.labels[b].clone())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicUniverse {
    atoms: Vec<String>,
}

impl SymbolicUniverse {
    /// The carrier is understood to be uncountable; `atoms` are the only
    /// individually addressable points. The list is fixed at construction
    /// and set constructors reject undeclared atoms.
    pub fn new(atoms: Vec<String>) -> Result<Self> {
        if atoms.len() > MAX_ATOMS {
            return Err(Error::SizeCap {
                got: atoms.len(),
                cap: MAX_ATOMS,
            });
        }
        for (k, a) in atoms.iter().enumerate() {
            if atoms[..k].contains(a) {
                return Err(Error::Parse(format!("duplicate atom `{a}`")));
            }
        }
        Ok(SymbolicUniverse { atoms })
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn all_atoms(&self) -> AtomSet {
        if self.atoms.len() == MAX_ATOMS {
            AtomSet::MAX
        } else {
            (1u64 << self.atoms.len()) - 1
        }
    }

    pub fn atom_index(&self, label: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == label)
    }

    pub fn atom_set<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<AtomSet> {
        let mut s = 0;
        for l in labels {
            let bit = self
                .atom_index(l)
                .ok_or_else(|| Error::UndeclaredAtom(l.to_string()))?;
            s |= 1 << bit;
        }
        Ok(s)
    }

    pub fn atom_labels(&self, set: AtomSet) -> Vec<String> {
        (0..self.atoms.len())
            .filter(|b| set >> b & 1 == 1)
            .map(|b| self.atoms[b].clone())
            .collect()
    }

    pub fn explicit_small<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        labels: I,
    ) -> Result<SetExpr> {
        Ok(SetExpr::ExplicitSmall(self.atom_set(labels)?))
    }

    pub fn co_finite<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> Result<SetExpr> {
        Ok(SetExpr::CoFinite(self.atom_set(labels)?))
    }

    /// `ins`/`outs` must partition the declared atoms.
    pub fn abstract_set(&self, ins: AtomSet, outs: AtomSet, bulk: Bulk) -> Result<SetExpr> {
        if ins & outs != 0 {
            return Err(Error::Parse("abstract set: ins and outs overlap".into()));
        }
        if ins | outs != self.all_atoms() {
            return Err(Error::Parse(
                "abstract set: every declared atom must be classified".into(),
            ));
        }
        Ok(SetExpr::Abstract { ins, outs, bulk })
    }
}

/// Classification of the part of a set away from the declared atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bulk {
    /// Countable (possibly empty).
    Countable,
    /// Complement countable.
    CoCountable,
    /// The set and its complement are both uncountable.
    BothBig,
}

impl Bulk {
    fn flip(self) -> Bulk {
        match self {
            Bulk::Countable => Bulk::CoCountable,
            Bulk::CoCountable => Bulk::Countable,
            Bulk::BothBig => Bulk::BothBig,
        }
    }

    pub fn is_countable(self) -> bool {
        self == Bulk::Countable
    }
}

/// A subset of the carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetExpr {
    /// Exact subset of a finite universe.
    FiniteMask(Mask),
    /// Exactly the given finite atom set.
    ExplicitSmall(AtomSet),
    /// Exactly the carrier minus the given finite atom set.
    CoFinite(AtomSet),
    /// Contains every atom in `ins`, no atom in `outs`; the part away from
    /// the atoms is classified by `bulk`.
    Abstract {
        ins: AtomSet,
        outs: AtomSet,
        bulk: Bulk,
    },
}

impl SetExpr {
    pub fn is_exact(&self) -> bool {
        !matches!(self, SetExpr::Abstract { .. })
    }

    /// True when the set is countable regardless of any unknown bulk.
    fn countable(&self) -> Tri {
        match self {
            SetExpr::FiniteMask(_) | SetExpr::ExplicitSmall(_) => Tri::True,
            SetExpr::CoFinite(_) => Tri::False,
            SetExpr::Abstract { bulk, .. } => match bulk {
                Bulk::Countable => Tri::True,
                _ => Tri::False,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Universe {
    Finite(FiniteUniverse),
    Symbolic(SymbolicUniverse),
}

impl Universe {
    pub fn as_finite(&self) -> Option<&FiniteUniverse> {
        match self {
            Universe::Finite(u) => Some(u),
            _ => None,
        }
    }

    pub fn as_symbolic(&self) -> Option<&SymbolicUniverse> {
        match self {
            Universe::Symbolic(u) => Some(u),
            _ => None,
        }
    }

    pub fn empty(&self) -> SetExpr {
        match self {
            Universe::Finite(_) => SetExpr::FiniteMask(0),
            Universe::Symbolic(_) => SetExpr::ExplicitSmall(0),
        }
    }

    pub fn whole(&self) -> SetExpr {
        match self {
            Universe::Finite(u) => SetExpr::FiniteMask(u.full_mask()),
            Universe::Symbolic(_) => SetExpr::CoFinite(0),
        }
    }

    /// Panics if `s` is not a subset representation for this universe;
    /// callers must only mix sets with their own universe.
    fn check(&self, s: &SetExpr) {
        match (self, s) {
            (Universe::Finite(u), SetExpr::FiniteMask(m)) => {
                assert_eq!(m & !u.full_mask(), 0, "mask outside carrier");
            }
            (Universe::Symbolic(u), SetExpr::ExplicitSmall(a) | SetExpr::CoFinite(a)) => {
                assert_eq!(a & !u.all_atoms(), 0, "undeclared atom bits");
            }
            (Universe::Symbolic(u), SetExpr::Abstract { ins, outs, .. }) => {
                assert_eq!(ins & outs, 0, "abstract ins/outs overlap");
                assert_eq!(
                    ins | outs,
                    u.all_atoms(),
                    "abstract must classify all atoms"
                );
            }
            _ => panic!("set representation does not belong to this universe"),
        }
    }

    pub fn complement(&self, s: &SetExpr) -> SetExpr {
        self.check(s);
        match (self, s) {
            (Universe::Finite(u), SetExpr::FiniteMask(m)) => {
                SetExpr::FiniteMask(!m & u.full_mask())
            }
            (_, SetExpr::ExplicitSmall(a)) => SetExpr::CoFinite(*a),
            (_, SetExpr::CoFinite(a)) => SetExpr::ExplicitSmall(*a),
            (_, SetExpr::Abstract { ins, outs, bulk }) => SetExpr::Abstract {
                ins: *outs,
                outs: *ins,
                bulk: bulk.flip(),
            },
            _ => unreachable!(),
        }
    }

    pub fn union(&self, s: &SetExpr, t: &SetExpr) -> Result<SetExpr> {
        self.check(s);
        self.check(t);
        use SetExpr::*;
        Ok(match (s, t) {
            (FiniteMask(a), FiniteMask(b)) => FiniteMask(a | b),
            (ExplicitSmall(a), ExplicitSmall(b)) => ExplicitSmall(a | b),
            (ExplicitSmall(a), CoFinite(b)) | (CoFinite(b), ExplicitSmall(a)) => CoFinite(b & !a),
            (CoFinite(a), CoFinite(b)) => CoFinite(a & b),
            (ExplicitSmall(a), Abstract { ins, outs, bulk })
            | (Abstract { ins, outs, bulk }, ExplicitSmall(a)) => Abstract {
                ins: ins | a,
                outs: outs & !a,
                bulk: *bulk,
            },
            (CoFinite(a), Abstract { outs, .. }) | (Abstract { outs, .. }, CoFinite(a)) => {
                // (X \ a) ∪ t has complement a ∩ complement(t) = a ∩ outs.
                CoFinite(a & outs)
            }
            (
                Abstract {
                    ins: i1,
                    outs: o1,
                    bulk: b1,
                },
                Abstract {
                    ins: i2,
                    outs: o2,
                    bulk: b2,
                },
            ) => {
                let bulk = match (b1, b2) {
                    (Bulk::CoCountable, _) | (_, Bulk::CoCountable) => Bulk::CoCountable,
                    (Bulk::Countable, Bulk::Countable) => Bulk::Countable,
                    (Bulk::Countable, Bulk::BothBig) | (Bulk::BothBig, Bulk::Countable) => {
                        Bulk::BothBig
                    }
                    (Bulk::BothBig, Bulk::BothBig) => {
                        return Err(Error::Indeterminate(
                            "union of two both-big bulks is not classified".into(),
                        ))
                    }
                };
                Abstract {
                    ins: i1 | i2,
                    outs: o1 & o2,
                    bulk,
                }
            }
            _ => return Err(Error::UniverseMismatch),
        })
    }

    pub fn intersect(&self, s: &SetExpr, t: &SetExpr) -> Result<SetExpr> {
        self.check(s);
        self.check(t);
        use SetExpr::*;
        Ok(match (s, t) {
            (FiniteMask(a), FiniteMask(b)) => FiniteMask(a & b),
            (ExplicitSmall(a), ExplicitSmall(b)) => ExplicitSmall(a & b),
            (ExplicitSmall(a), CoFinite(b)) | (CoFinite(b), ExplicitSmall(a)) => {
                ExplicitSmall(a & !b)
            }
            (CoFinite(a), CoFinite(b)) => CoFinite(a | b),
            (ExplicitSmall(a), Abstract { ins, .. }) | (Abstract { ins, .. }, ExplicitSmall(a)) => {
                // The bulk avoids the atoms, so only atoms of `a` survive.
                ExplicitSmall(a & ins)
            }
            (CoFinite(a), Abstract { ins, outs, bulk })
            | (Abstract { ins, outs, bulk }, CoFinite(a)) => Abstract {
                ins: ins & !a,
                outs: outs | a,
                bulk: *bulk,
            },
            (
                Abstract {
                    ins: i1,
                    outs: o1,
                    bulk: b1,
                },
                Abstract {
                    ins: i2,
                    outs: o2,
                    bulk: b2,
                },
            ) => {
                let bulk = match (b1, b2) {
                    (Bulk::Countable, _) | (_, Bulk::Countable) => Bulk::Countable,
                    (Bulk::CoCountable, Bulk::CoCountable) => Bulk::CoCountable,
                    (Bulk::CoCountable, Bulk::BothBig) | (Bulk::BothBig, Bulk::CoCountable) => {
                        Bulk::BothBig
                    }
                    (Bulk::BothBig, Bulk::BothBig) => {
                        return Err(Error::Indeterminate(
                            "intersection of two both-big bulks is not classified".into(),
                        ))
                    }
                };
                Abstract {
                    ins: i1 & i2,
                    outs: o1 | o2,
                    bulk,
                }
            }
            _ => return Err(Error::UniverseMismatch),
        })
    }

    pub fn subset_of(&self, s: &SetExpr, t: &SetExpr) -> Tri {
        self.check(s);
        self.check(t);
        use SetExpr::*;
        match (s, t) {
            (FiniteMask(a), FiniteMask(b)) => (a & !b == 0).into(),
            (ExplicitSmall(a), ExplicitSmall(b)) => (a & !b == 0).into(),
            (ExplicitSmall(a), CoFinite(b)) => (a & b == 0).into(),
            (CoFinite(_), ExplicitSmall(_)) => Tri::False,
            (CoFinite(a), CoFinite(b)) => (b & !a == 0).into(),
            (ExplicitSmall(a), Abstract { ins, .. }) => (a & !ins == 0).into(),
            (CoFinite(a), Abstract { ins: _, outs, bulk }) => {
                // t must contain all but finitely many points; only a
                // co-countable bulk leaves that open.
                match bulk {
                    Bulk::CoCountable => {
                        if outs & !a != 0 {
                            Tri::False
                        } else {
                            Tri::Indeterminate
                        }
                    }
                    _ => Tri::False,
                }
            }
            (Abstract { ins, bulk, .. }, ExplicitSmall(b)) => {
                if ins & !b != 0 || !bulk.is_countable() {
                    Tri::False
                } else {
                    // A countable bulk may still be nonempty.
                    Tri::Indeterminate
                }
            }
            (Abstract { ins, .. }, CoFinite(b)) => {
                // s ⊆ X \ b exactly when s misses every atom of b; the bulk
                // never meets atoms.
                (ins & b == 0).into()
            }
            (
                Abstract {
                    ins: i1, bulk: b1, ..
                },
                Abstract {
                    outs: o2, bulk: b2, ..
                },
            ) => {
                if i1 & o2 != 0 {
                    return Tri::False;
                }
                // A set with uncountable bulk cannot sit inside a countable one.
                if !matches!(b1, Bulk::Countable) && matches!(b2, Bulk::Countable) {
                    return Tri::False;
                }
                Tri::Indeterminate
            }
            _ => panic!("operands belong to different universes"),
        }
    }

    pub fn set_eq(&self, s: &SetExpr, t: &SetExpr) -> Tri {
        if s == t {
            return Tri::True;
        }
        self.subset_of(s, t).and(self.subset_of(t, s))
    }

    pub fn is_empty(&self, s: &SetExpr) -> Tri {
        self.check(s);
        match s {
            SetExpr::FiniteMask(m) => (*m == 0).into(),
            SetExpr::ExplicitSmall(a) => (*a == 0).into(),
            SetExpr::CoFinite(_) => Tri::False,
            SetExpr::Abstract { ins, bulk, .. } => {
                if *ins != 0 {
                    Tri::False
                } else if bulk.is_countable() {
                    Tri::Indeterminate
                } else {
                    Tri::False
                }
            }
        }
    }

    pub fn is_whole(&self, s: &SetExpr) -> Tri {
        self.is_empty(&self.complement(s))
    }

    /// True when the set is countable (finite included).
    pub fn is_countable(&self, s: &SetExpr) -> Tri {
        self.check(s);
        match self {
            // A finite carrier makes every subset "countable"; the notion
            // only carries weight symbolically.
            Universe::Finite(_) => Tri::True,
            Universe::Symbolic(_) => s.countable(),
        }
    }

    /// Render a set for reports.
    pub fn render(&self, s: &SetExpr) -> String {
        match (self, s) {
            (Universe::Finite(u), SetExpr::FiniteMask(m)) => {
                format!("{{{}}}", u.labels_of(*m).join(","))
            }
            (Universe::Symbolic(u), SetExpr::ExplicitSmall(a)) => {
                format!("{{{}}}", u.atom_labels(*a).join(","))
            }
            (Universe::Symbolic(u), SetExpr::CoFinite(a)) => {
                if *a == 0 {
                    "X".into()
                } else {
                    format!("X-{{{}}}", u.atom_labels(*a).join(","))
                }
            }
            (Universe::Symbolic(u), SetExpr::Abstract { ins, outs, bulk }) => {
                let b = match bulk {
                    Bulk::Countable => "countable",
                    Bulk::CoCountable => "co-countable",
                    Bulk::BothBig => "both-big",
                };
                format!(
                    "abstract(in:{{{}}}, out:{{{}}}, bulk:{})",
                    u.atom_labels(*ins).join(","),
                    u.atom_labels(*outs).join(","),
                    b
                )
            }
            _ => "<invalid>".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(atoms: &[&str]) -> SymbolicUniverse {
        SymbolicUniverse::new(atoms.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn fin(labels: &[&str]) -> FiniteUniverse {
        FiniteUniverse::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn complement_exact_identities() {
        let u = Universe::Symbolic(sym(&["r2", "r3", "r5"]));
        let s = u.as_symbolic().unwrap().co_finite(["r2"]).unwrap();
        assert_eq!(
            u.complement(&s),
            u.as_symbolic().unwrap().explicit_small(["r2"]).unwrap()
        );

        let f = Universe::Finite(fin(&["a", "b", "c"]));
        assert_eq!(
            f.complement(&SetExpr::FiniteMask(0b011)),
            SetExpr::FiniteMask(0b100)
        );
    }

    #[test]
    fn complement_abstract_swaps_classification() {
        let su = sym(&["r2", "r3", "r5"]);
        let u = Universe::Symbolic(su.clone());
        let ins = su.atom_set(["r2", "r3"]).unwrap();
        let outs = su.atom_set(["r5"]).unwrap();
        let a = su.abstract_set(ins, outs, Bulk::BothBig).unwrap();
        assert_eq!(
            u.complement(&a),
            SetExpr::Abstract {
                ins: outs,
                outs: ins,
                bulk: Bulk::BothBig
            }
        );
    }

    #[test]
    fn union_cofinite_pair() {
        // X-{r2,r3,r5} ∪ X-{r2,r7,r11} = X-{r2}
        let su = sym(&["r2", "r3", "r5", "r7", "r11"]);
        let u = Universe::Symbolic(su.clone());
        let a = su.co_finite(["r2", "r3", "r5"]).unwrap();
        let b = su.co_finite(["r2", "r7", "r11"]).unwrap();
        assert_eq!(u.union(&a, &b).unwrap(), su.co_finite(["r2"]).unwrap());
    }

    #[test]
    fn intersect_masks() {
        // {a,b} ∩ {b,c} = {b}
        let u = Universe::Finite(fin(&["a", "b", "c"]));
        let got = u
            .intersect(&SetExpr::FiniteMask(0b011), &SetExpr::FiniteMask(0b110))
            .unwrap();
        assert_eq!(got, SetExpr::FiniteMask(0b010));
    }

    #[test]
    fn union_of_both_big_is_indeterminate() {
        let su = sym(&["r2"]);
        let u = Universe::Symbolic(su.clone());
        let a = su.abstract_set(0b1, 0b0, Bulk::BothBig).unwrap();
        let b = su.abstract_set(0b0, 0b1, Bulk::BothBig).unwrap();
        assert!(matches!(u.union(&a, &b), Err(Error::Indeterminate(_))));
    }

    #[test]
    fn subset_examples() {
        let su = sym(&["r3", "r5"]);
        let u = Universe::Symbolic(su.clone());
        let small = su.explicit_small(["r3", "r5"]).unwrap();
        assert_eq!(u.subset_of(&small, &u.whole()), Tri::True);

        let big = su.abstract_set(0b11, 0, Bulk::BothBig).unwrap();
        let single = su.explicit_small(["r3"]).unwrap();
        assert_eq!(u.subset_of(&big, &single), Tri::False);

        let other = su.abstract_set(0b11, 0, Bulk::BothBig).unwrap();
        assert_eq!(u.subset_of(&big, &other), Tri::Indeterminate);
    }

    #[test]
    fn double_complement_round_trips() {
        let su = sym(&["r2", "r3"]);
        let u = Universe::Symbolic(su.clone());
        let cases = [
            su.explicit_small(["r2"]).unwrap(),
            su.co_finite(["r3"]).unwrap(),
            su.abstract_set(0b01, 0b10, Bulk::Countable).unwrap(),
            su.abstract_set(0b10, 0b01, Bulk::BothBig).unwrap(),
        ];
        for s in cases {
            assert_eq!(u.complement(&u.complement(&s)), s);
        }
    }
}
