//! Pairwise separation axioms and auxiliary bispace properties.
//!
//! Point pairs are unordered: a pair satisfies an axiom if either role
//! assignment does. Example-driven tests pin that reading down. Symbolic
//! carriers are quantified by point class — each declared atom plus generic
//! bulk points — which is exhaustive because every schema rule depends only
//! on atom identity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kappa_family::{Bispace, KappaIndex, Schema, SchemaShape};
use crate::semi_ops::{FiniteCtx, SemiOps};
use crate::set_universe::Mask;
use crate::sg_star::SgIndex;

/// Boolean record of all pairwise axioms and auxiliary properties for one
/// finite bispace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AxiomProfile {
    pub semi_t0: bool,
    pub semi_t1: bool,
    pub semi_r0: bool,
    pub semi_tw: bool,
    pub semi_symmetric: bool,
    pub strongly_semi_symmetric: bool,
    pub semi_door: bool,
    pub condition_c_1: bool,
    pub condition_c_2: bool,
    pub sc_eq_so: bool,
}

impl AxiomProfile {
    pub const FIELD_NAMES: [&'static str; 10] = [
        "T0", "T1", "R0", "Tw", "Sym", "SSym", "Door", "C1", "C2", "ScEqSo",
    ];

    pub fn field(&self, name: &str) -> Option<bool> {
        match name {
            "T0" => Some(self.semi_t0),
            "T1" => Some(self.semi_t1),
            "R0" => Some(self.semi_r0),
            "Tw" => Some(self.semi_tw),
            "Sym" => Some(self.semi_symmetric),
            "SSym" => Some(self.strongly_semi_symmetric),
            "Door" => Some(self.semi_door),
            "C1" => Some(self.condition_c_1),
            "C2" => Some(self.condition_c_2),
            "ScEqSo" => Some(self.sc_eq_so),
            _ => None,
        }
    }
}

impl FiniteCtx {
    fn separates(&self, i: KappaIndex, inside: Mask, outside: Mask) -> bool {
        self.so[i.as_usize()]
            .sets
            .iter()
            .any(|&u| u & inside != 0 && u & outside == 0)
    }

    pub(crate) fn pairwise_semi_t0(&self) -> bool {
        for x in 0..self.n {
            for y in x + 1..self.n {
                let (px, py) = (1 << x, 1 << y);
                let ok = KappaIndex::BOTH
                    .iter()
                    .any(|&i| self.separates(i, px, py) || self.separates(i, py, px));
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn pairwise_semi_t1(&self) -> bool {
        for x in 0..self.n {
            for y in x + 1..self.n {
                let (px, py) = (1 << x, 1 << y);
                let direct = self.separates(KappaIndex::K1, px, py)
                    && self.separates(KappaIndex::K2, py, px);
                let swapped = self.separates(KappaIndex::K1, py, px)
                    && self.separates(KappaIndex::K2, px, py);
                if !direct && !swapped {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn pairwise_semi_r0(&self) -> bool {
        for i in KappaIndex::BOTH {
            let j = i.other();
            for &u in &self.so[i.as_usize()].sets {
                for x in 0..self.n {
                    if u >> x & 1 == 1 && self.scl(j, 1 << x) & !u != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub(crate) fn pairwise_semi_tw(&self) -> bool {
        for idx in SgIndex::both() {
            let closed = idx.closed_side();
            for m in self.subsets() {
                if self.sg_closed(idx.order(), m) && !self.is_semi_closed(closed, m) {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn pairwise_semi_symmetric(&self) -> bool {
        for i in KappaIndex::BOTH {
            let j = i.other();
            for x in 0..self.n {
                for y in 0..self.n {
                    let (px, py): (Mask, Mask) = (1 << x, 1 << y);
                    if self.scl(i, py) & px != 0 && self.scl(j, px) & py == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub(crate) fn strongly_semi_symmetric(&self) -> bool {
        SgIndex::both()
            .iter()
            .all(|idx| (0..self.n).all(|x| self.sg_closed(idx.order(), 1 << x)))
    }

    pub(crate) fn pairwise_semi_door(&self) -> bool {
        for i in KappaIndex::BOTH {
            let j = i.other();
            for m in self.subsets() {
                if !self.is_semi_closed(i, m) && !self.is_semi_open(j, m) {
                    return false;
                }
            }
        }
        true
    }

    /// Arbitrary intersections of κᵢ-closed sets are semi-κᵢ-closed. On a
    /// finite carrier the closed family is already intersection-closed, so
    /// this documents rather than discovers.
    pub(crate) fn condition_c(&self, i: KappaIndex) -> bool {
        let mut sets = self.closed[i.as_usize()].sets.clone();
        loop {
            let mut added = Vec::new();
            for a in 0..sets.len() {
                for b in a + 1..sets.len() {
                    let m = sets[a] & sets[b];
                    if !sets.contains(&m) && !added.contains(&m) {
                        added.push(m);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            sets.extend(added);
        }
        sets.iter().all(|&m| self.is_semi_closed(i, m))
    }

    pub(crate) fn sc_eq_so(&self) -> bool {
        self.sc[0].sets == self.so[1].sets && self.sc[1].sets == self.so[0].sets
    }

    pub(crate) fn profile(&self) -> AxiomProfile {
        AxiomProfile {
            semi_t0: self.pairwise_semi_t0(),
            semi_t1: self.pairwise_semi_t1(),
            semi_r0: self.pairwise_semi_r0(),
            semi_tw: self.pairwise_semi_tw(),
            semi_symmetric: self.pairwise_semi_symmetric(),
            strongly_semi_symmetric: self.strongly_semi_symmetric(),
            semi_door: self.pairwise_semi_door(),
            condition_c_1: self.condition_c(KappaIndex::K1),
            condition_c_2: self.condition_c(KappaIndex::K2),
            sc_eq_so: self.sc_eq_so(),
        }
    }
}

// ---------------------------------------------------------------------------
// Symbolic quantification by point class.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Point {
    Atom(usize),
    /// A generic bulk point; the tag only distinguishes two of them.
    Generic(u8),
}

impl Point {
    fn in_atoms(self, set: u64) -> bool {
        match self {
            Point::Atom(k) => set >> k & 1 == 1,
            Point::Generic(_) => false,
        }
    }
}

fn point_classes(atom_count: usize) -> Vec<Point> {
    let mut v: Vec<Point> = (0..atom_count).map(Point::Atom).collect();
    v.push(Point::Generic(0));
    v.push(Point::Generic(1));
    v
}

/// Is there a semi-open set of this schema containing x but not y?
fn can_separate(schema: &Schema, _x: Point, y: Point) -> bool {
    match schema.shape() {
        // Nontrivial semi-open sets are exactly the supersets of the
        // required atoms.
        SchemaShape::CtblRequired => !y.in_atoms(schema.required),
        // {x} (padded past the exclusions when needed) always works.
        SchemaShape::CtblFree => true,
        // X ∖ {y} is a co-countable open set.
        SchemaShape::WithCoctbl => true,
        SchemaShape::Trivial => false,
    }
}

/// x ∈ semi-closure of {y}?
fn scl_singleton_contains(schema: &Schema, x: Point, y: Point) -> bool {
    if x == y {
        return true;
    }
    match schema.shape() {
        SchemaShape::CtblRequired => y.in_atoms(schema.required),
        SchemaShape::CtblFree | SchemaShape::WithCoctbl => false,
        SchemaShape::Trivial => true,
    }
}

/// {x} (j-i)sg*-closed: the kernel is {x} (∪ required atoms of the open
/// side), and a certificate inside it exists only by the closed side's
/// shape.
fn singleton_sg_star_closed(open: &Schema, closed: &Schema, x: Point) -> bool {
    if open.shape() == SchemaShape::Trivial {
        // Kernel is X; F = X certifies.
        return true;
    }
    match closed.shape() {
        SchemaShape::WithCoctbl => true,
        SchemaShape::CtblFree | SchemaShape::Trivial => false,
        // Candidates are {x} plus open-side required atoms clear of the
        // closed side's requirement; {x} alone settles it.
        SchemaShape::CtblRequired => !x.in_atoms(closed.required),
    }
}

struct SymbolicBispace<'a> {
    schemas: [&'a Schema; 2],
    atom_count: usize,
}

impl<'a> SymbolicBispace<'a> {
    fn of(ops: &'a SemiOps<'a>) -> Result<SymbolicBispace<'a>> {
        let su = ops
            .universe()
            .as_symbolic()
            .ok_or_else(|| Error::Internal("symbolic path on finite bispace".into()))?;
        Ok(SymbolicBispace {
            schemas: [ops.schema(KappaIndex::K1), ops.schema(KappaIndex::K2)],
            atom_count: su.atom_count(),
        })
    }

    fn schema(&self, i: KappaIndex) -> &Schema {
        self.schemas[i.as_usize()]
    }

    fn t0(&self) -> bool {
        let pts = point_classes(self.atom_count);
        for (a, &x) in pts.iter().enumerate() {
            for &y in &pts[a + 1..] {
                let ok = KappaIndex::BOTH.iter().any(|&i| {
                    let s = self.schema(i);
                    can_separate(s, x, y) || can_separate(s, y, x)
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn t1(&self) -> bool {
        let pts = point_classes(self.atom_count);
        let (k1, k2) = (self.schema(KappaIndex::K1), self.schema(KappaIndex::K2));
        for (a, &x) in pts.iter().enumerate() {
            for &y in &pts[a + 1..] {
                let direct = can_separate(k1, x, y) && can_separate(k2, y, x);
                let swapped = can_separate(k1, y, x) && can_separate(k2, x, y);
                if !direct && !swapped {
                    return false;
                }
            }
        }
        true
    }

    fn r0(&self) -> bool {
        // scl_j({x}) ⊆ every semi-κᵢ-open set containing x; the closure is
        // either {x} or the whole carrier, and only a trivial open side
        // tolerates the latter.
        let pts = point_classes(self.atom_count);
        for i in KappaIndex::BOTH {
            let j = i.other();
            for &x in &pts {
                let closure_blows_up = match self.schema(j).shape() {
                    SchemaShape::CtblRequired => x.in_atoms(self.schema(j).required),
                    SchemaShape::Trivial => true,
                    _ => false,
                };
                if closure_blows_up && self.schema(i).shape() != SchemaShape::Trivial {
                    return false;
                }
            }
        }
        true
    }

    fn semi_symmetric(&self) -> bool {
        let pts = point_classes(self.atom_count);
        for i in KappaIndex::BOTH {
            let j = i.other();
            for &x in &pts {
                for &y in &pts {
                    if x == y {
                        continue;
                    }
                    if scl_singleton_contains(self.schema(i), x, y)
                        && !scl_singleton_contains(self.schema(j), y, x)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn strongly_semi_symmetric(&self) -> bool {
        let pts = point_classes(self.atom_count);
        SgIndex::both().iter().all(|idx| {
            let open = self.schema(idx.open_side());
            let closed = self.schema(idx.closed_side());
            pts.iter()
                .all(|&x| singleton_sg_star_closed(open, closed, x))
        })
    }

    fn sc_eq_so(&self) -> bool {
        KappaIndex::BOTH
            .iter()
            .all(|&i| family_eq_sc_so(self.schema(i), self.schema(i.other())))
    }
}

/// Does the semi-closed family of `ci` equal the semi-open family of `cj`?
/// Decides by descriptor shape; only degenerate schema pairs coincide on an
/// uncountable carrier.
fn family_eq_sc_so(ci: &Schema, cj: &Schema) -> bool {
    use SchemaShape::*;
    match (ci.shape(), cj.shape()) {
        (Trivial, Trivial) => true,
        // sc = countable ∪ co-countable ∪ {∅,X} on both sides.
        (WithCoctbl, WithCoctbl) => {
            ci.countable
                && cj.countable
                && ci.required == 0
                && ci.excluded == 0
                && cj.required == 0
                && cj.excluded == 0
        }
        // sc(ctbl-free, no exclusions) = all co-countable ∪ {∅} matches
        // so(co-countable only).
        (CtblFree, WithCoctbl) => ci.excluded == 0 && !cj.countable,
        // sc(co-countable only) = all countable ∪ {X} matches
        // so(ctbl-free, no exclusions).
        (WithCoctbl, CtblFree) => !ci.countable && cj.excluded == 0,
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// Public operations.
// ---------------------------------------------------------------------------

pub fn is_pairwise_semi_t0(b: &Bispace) -> Result<bool> {
    let ops = SemiOps::new(b);
    match ops.ctx() {
        Ok(ctx) => Ok(ctx.pairwise_semi_t0()),
        Err(_) => Ok(SymbolicBispace::of(&ops)?.t0()),
    }
}

pub fn is_pairwise_semi_t1(b: &Bispace) -> Result<bool> {
    let ops = SemiOps::new(b);
    match ops.ctx() {
        Ok(ctx) => Ok(ctx.pairwise_semi_t1()),
        Err(_) => Ok(SymbolicBispace::of(&ops)?.t1()),
    }
}

pub fn is_pairwise_semi_r0(b: &Bispace) -> Result<bool> {
    let ops = SemiOps::new(b);
    match ops.ctx() {
        Ok(ctx) => Ok(ctx.pairwise_semi_r0()),
        Err(_) => Ok(SymbolicBispace::of(&ops)?.r0()),
    }
}

/// Finite only: quantifies over every subset.
pub fn is_pairwise_semi_tw(b: &Bispace) -> Result<bool> {
    Ok(SemiOps::new(b).ctx()?.pairwise_semi_tw())
}

pub fn is_pairwise_semi_symmetric(b: &Bispace) -> Result<bool> {
    let ops = SemiOps::new(b);
    match ops.ctx() {
        Ok(ctx) => Ok(ctx.pairwise_semi_symmetric()),
        Err(_) => Ok(SymbolicBispace::of(&ops)?.semi_symmetric()),
    }
}

pub fn is_pairwise_strongly_semi_symmetric(b: &Bispace) -> Result<bool> {
    let ops = SemiOps::new(b);
    match ops.ctx() {
        Ok(ctx) => Ok(ctx.strongly_semi_symmetric()),
        Err(_) => Ok(SymbolicBispace::of(&ops)?.strongly_semi_symmetric()),
    }
}

/// No singleton of the carrier is (j-i)sg*-closed for either order; the
/// opposite extreme of strong semi-symmetry.
pub fn no_singleton_sg_star_closed(b: &Bispace) -> Result<bool> {
    let ops = SemiOps::new(b);
    match ops.ctx() {
        Ok(ctx) => Ok(SgIndex::both()
            .iter()
            .all(|idx| (0..ctx.n).all(|x| !ctx.sg_closed(idx.order(), 1 << x)))),
        Err(_) => {
            let sym = SymbolicBispace::of(&ops)?;
            let pts = point_classes(sym.atom_count);
            Ok(SgIndex::both().iter().all(|idx| {
                let open = sym.schema(idx.open_side());
                let closed = sym.schema(idx.closed_side());
                pts.iter()
                    .all(|&x| !singleton_sg_star_closed(open, closed, x))
            }))
        }
    }
}

/// Finite only.
pub fn is_pairwise_semi_door(b: &Bispace) -> Result<bool> {
    Ok(SemiOps::new(b).ctx()?.pairwise_semi_door())
}

/// Finite only: iterates the intersection-closure of the κᵢ-closed family.
pub fn condition_c(b: &Bispace, i: KappaIndex) -> Result<bool> {
    Ok(SemiOps::new(b).ctx()?.condition_c(i))
}

pub fn sc_equals_so(b: &Bispace) -> Result<bool> {
    let ops = SemiOps::new(b);
    match ops.ctx() {
        Ok(ctx) => Ok(ctx.sc_eq_so()),
        Err(_) => Ok(SymbolicBispace::of(&ops)?.sc_eq_so()),
    }
}

/// All flags for a finite bispace, with the T1 ⇒ T0 consistency assertion.
pub fn axiom_profile(b: &Bispace) -> Result<AxiomProfile> {
    let ops = SemiOps::new(b);
    let profile = ops.ctx()?.profile();
    if profile.semi_t1 && !profile.semi_t0 {
        return Err(Error::Internal("profile claims T1 without T0".into()));
    }
    Ok(profile)
}

/// Per-field report usable for both finite and symbolic bispaces; fields a
/// symbolic carrier cannot support come back as errors.
pub fn profile_entries(b: &Bispace) -> Vec<(&'static str, Result<bool>)> {
    vec![
        ("T0", is_pairwise_semi_t0(b)),
        ("T1", is_pairwise_semi_t1(b)),
        ("R0", is_pairwise_semi_r0(b)),
        ("Tw", is_pairwise_semi_tw(b)),
        ("Sym", is_pairwise_semi_symmetric(b)),
        ("SSym", is_pairwise_strongly_semi_symmetric(b)),
        ("Door", is_pairwise_semi_door(b)),
        ("C1", condition_c(b, KappaIndex::K1)),
        ("C2", condition_c(b, KappaIndex::K2)),
        ("ScEqSo", sc_equals_so(b)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::paper::example;
    use crate::kappa_family::{enumerate_sigma_structures, ExplicitFamily, KappaFamily};
    use crate::set_universe::{FiniteUniverse, Universe};

    fn bispace_for(n: usize, k1: &[Mask], k2: &[Mask]) -> Bispace {
        let labels: Vec<String> = ["a", "b", "c", "d"][..n]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let u = Universe::Finite(FiniteUniverse::new(labels).unwrap());
        Bispace::new(
            u,
            KappaFamily::Explicit(ExplicitFamily::new(k1.to_vec())),
            KappaFamily::Explicit(ExplicitFamily::new(k2.to_vec())),
        )
        .unwrap()
    }

    fn discrete(n: usize) -> Bispace {
        let all: Vec<Mask> = (0..(1u32 << n)).map(|m| m as Mask).collect();
        bispace_for(n, &all, &all)
    }

    fn indiscrete(n: usize) -> Bispace {
        let full = (1 << n) - 1;
        bispace_for(n, &[0, full], &[0, full])
    }

    #[test]
    fn ex30_profile() {
        let p = axiom_profile(&example("ex30").unwrap()).unwrap();
        assert!(p.semi_t1);
        assert!(p.semi_t0);
        assert!(!p.semi_r0);
    }

    #[test]
    fn ex38_profile() {
        let p = axiom_profile(&example("ex38").unwrap()).unwrap();
        assert!(p.semi_tw);
        assert!(!p.semi_t1);
        assert!(p.semi_t0);
        assert!(p.semi_door);
    }

    #[test]
    fn ex26_symbolic_t0_without_t1() {
        let b = example("ex26").unwrap();
        assert!(is_pairwise_semi_t0(&b).unwrap());
        assert!(!is_pairwise_semi_t1(&b).unwrap());
    }

    #[test]
    fn ex14_symbolic_t1_and_t0() {
        let b = example("ex14").unwrap();
        assert!(is_pairwise_semi_t1(&b).unwrap());
        assert!(is_pairwise_semi_t0(&b).unwrap());
    }

    #[test]
    fn ex30_symmetry_decided_by_brute_force() {
        // b sits in the k2-closure of nothing else, but a's k1-closure is
        // {a} while scl2({b}) = X, breaking the symmetric implication.
        assert!(!is_pairwise_semi_symmetric(&example("ex30").unwrap()).unwrap());
    }

    #[test]
    fn ex42_symmetries() {
        let b = example("ex42").unwrap();
        assert!(is_pairwise_semi_symmetric(&b).unwrap());
        assert!(!is_pairwise_strongly_semi_symmetric(&b).unwrap());
        assert!(no_singleton_sg_star_closed(&b).unwrap());
    }

    #[test]
    fn ex65_families_coincide() {
        let b = example("ex65").unwrap();
        assert!(sc_equals_so(&b).unwrap());
        // both symmetries hold when every singleton is countable-closed
        assert!(is_pairwise_semi_symmetric(&b).unwrap());
        assert!(is_pairwise_strongly_semi_symmetric(&b).unwrap());
    }

    #[test]
    fn finite_only_fields_error_symbolically() {
        let b = example("ex42").unwrap();
        assert!(matches!(is_pairwise_semi_tw(&b), Err(Error::FiniteOnly)));
        assert!(matches!(is_pairwise_semi_door(&b), Err(Error::FiniteOnly)));
        assert!(matches!(
            condition_c(&b, KappaIndex::K1),
            Err(Error::FiniteOnly)
        ));
    }

    #[test]
    fn discrete_bispace_satisfies_everything() {
        let p = axiom_profile(&discrete(3)).unwrap();
        assert!(p.semi_t0 && p.semi_t1 && p.semi_r0 && p.semi_tw);
        assert!(p.semi_symmetric && p.strongly_semi_symmetric);
        assert!(p.condition_c_1 && p.condition_c_2 && p.sc_eq_so);
    }

    #[test]
    fn indiscrete_profile() {
        let p = axiom_profile(&indiscrete(2)).unwrap();
        assert!(!p.semi_t0);
        assert!(!p.semi_t1);
        assert!(p.semi_r0);
        assert!(p.semi_symmetric);
    }

    #[test]
    fn profile_consistency_and_implications_exhaustive() {
        // T1 ⇒ T0 and Tw ⇒ T0 on every bispace with up to three points;
        // condition (C) is constantly true on finite carriers.
        for n in 1..=3usize {
            let families = enumerate_sigma_structures(n).unwrap();
            for f1 in &families {
                for f2 in &families {
                    let b = bispace_for(n, f1.sets(), f2.sets());
                    let p = axiom_profile(&b).unwrap();
                    assert!(!p.semi_t1 || p.semi_t0);
                    assert!(!p.semi_tw || p.semi_t0);
                    assert!(p.condition_c_1 && p.condition_c_2);
                }
            }
        }
    }

    #[test]
    fn profiles_are_deterministic() {
        let b = example("ex30").unwrap();
        let text = crate::harness::io::bispace_to_json(&b);
        let again = crate::harness::io::parse_bispace(&text).unwrap();
        assert_eq!(axiom_profile(&b).unwrap(), axiom_profile(&again).unwrap());
    }

    #[test]
    fn profile_entries_cover_symbolic_and_finite() {
        let fin = example("ex38").unwrap();
        assert!(profile_entries(&fin).iter().all(|(_, r)| r.is_ok()));
        let sym = example("ex65").unwrap();
        let entries = profile_entries(&sym);
        let get = |name: &str| {
            entries
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, r)| r.as_ref().ok().copied())
        };
        assert_eq!(get("ScEqSo"), Some(Some(true)));
        assert_eq!(get("Tw"), Some(None));
    }
}
