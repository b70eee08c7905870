//! Semi-open structure of a bispace: semi-open/closed families,
//! semi-closure, semi-interior, semi-derived sets, semi-kernels, and
//! semi-separatedness.
//!
//! A set B is semi-κᵢ-open when some κᵢ-open G satisfies G ⊆ B ⊆ cl(G);
//! semi-κᵢ-closed when its complement is semi-open. Finite families are
//! materialized once per bispace and index and every downstream query scans
//! that cache. Symbolic families are answered by closed-form rules keyed on
//! the schema shape; the rules are locked by the worked-example tests.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result, Tri};
use crate::kappa_family::{Bispace, KappaFamily, KappaIndex, Schema, SchemaShape};
use crate::set_universe::{Bulk, Mask, SetExpr, SymbolicUniverse, Universe};

/// Bitset indexed by subset mask; membership tests for families of subsets.
#[derive(Debug, Clone)]
pub(crate) struct SubsetBits {
    words: Vec<u64>,
}

impl SubsetBits {
    fn new(subset_count: usize) -> SubsetBits {
        SubsetBits {
            words: vec![0; subset_count.div_ceil(64)],
        }
    }

    fn set(&mut self, m: Mask) {
        self.words[(m as usize) / 64] |= 1 << ((m as usize) % 64);
    }

    pub(crate) fn get(&self, m: Mask) -> bool {
        self.words[(m as usize) / 64] >> ((m as usize) % 64) & 1 == 1
    }
}

/// A materialized family of subsets with O(1) membership.
#[derive(Debug, Clone)]
pub(crate) struct Fam {
    pub sets: Vec<Mask>,
    bits: SubsetBits,
}

impl Fam {
    fn from_sets(mut sets: Vec<Mask>, subset_count: usize) -> Fam {
        sets.sort_unstable();
        sets.dedup();
        let mut bits = SubsetBits::new(subset_count);
        for &m in &sets {
            bits.set(m);
        }
        Fam { sets, bits }
    }

    pub(crate) fn contains(&self, m: Mask) -> bool {
        self.bits.get(m)
    }
}

/// Everything a finite bispace's queries need, computed once.
pub(crate) struct FiniteCtx {
    pub n: usize,
    pub full: Mask,
    pub kappa: [Fam; 2],
    pub closed: [Fam; 2],
    pub so: [Fam; 2],
    pub sc: [Fam; 2],
    sgcl_cache: [OnceLock<SubsetBits>; 2],
}

impl FiniteCtx {
    pub(crate) fn new(n: usize, kappa: [Vec<Mask>; 2]) -> FiniteCtx {
        let full: Mask = if n == 16 { Mask::MAX } else { (1 << n) - 1 };
        let subset_count = full as usize + 1;
        let kappa = kappa.map(|sets| Fam::from_sets(sets, subset_count));
        let closed = [0, 1].map(|i: usize| {
            Fam::from_sets(
                kappa[i].sets.iter().map(|&m| !m & full).collect(),
                subset_count,
            )
        });
        let so = [0, 1].map(|i: usize| {
            let mut out = SubsetBits::new(subset_count);
            let mut list = Vec::new();
            for &g in &kappa[i].sets {
                let mut cl = full;
                for &f in &closed[i].sets {
                    if f & g == g {
                        cl &= f;
                    }
                }
                // every B with g ⊆ B ⊆ cl(g)
                let span = cl & !g;
                let mut sub: Mask = 0;
                loop {
                    let b = g | sub;
                    if !out.get(b) {
                        out.set(b);
                        list.push(b);
                    }
                    if sub == span {
                        break;
                    }
                    sub = sub.wrapping_sub(span) & span;
                }
            }
            Fam::from_sets(list, subset_count)
        });
        let sc = [0, 1].map(|i: usize| {
            Fam::from_sets(
                so[i].sets.iter().map(|&m| !m & full).collect(),
                subset_count,
            )
        });
        FiniteCtx {
            n,
            full,
            kappa,
            closed,
            so,
            sc,
            sgcl_cache: [OnceLock::new(), OnceLock::new()],
        }
    }

    pub(crate) fn from_bispace(b: &Bispace) -> Result<FiniteCtx> {
        let u = b.universe().as_finite().ok_or(Error::FiniteOnly)?;
        let take = |i: KappaIndex| match b.family(i) {
            KappaFamily::Explicit(f) => f.sets().to_vec(),
            KappaFamily::Schema(_) => unreachable!("validated against finite universe"),
        };
        Ok(FiniteCtx::new(
            u.size(),
            [take(KappaIndex::K1), take(KappaIndex::K2)],
        ))
    }

    pub(crate) fn subsets(&self) -> std::ops::RangeInclusive<Mask> {
        0..=self.full
    }

    pub(crate) fn is_semi_open(&self, i: KappaIndex, m: Mask) -> bool {
        self.so[i.as_usize()].contains(m)
    }

    pub(crate) fn is_semi_closed(&self, i: KappaIndex, m: Mask) -> bool {
        self.sc[i.as_usize()].contains(m)
    }

    /// Intersection of semi-closed supersets. Need not be semi-closed; no
    /// fixpoint iteration is applied.
    pub(crate) fn scl(&self, i: KappaIndex, m: Mask) -> Mask {
        let mut acc = self.full;
        for &f in &self.sc[i.as_usize()].sets {
            if f & m == m {
                acc &= f;
            }
        }
        acc
    }

    /// Intersection of semi-open supersets.
    pub(crate) fn sker(&self, i: KappaIndex, m: Mask) -> Mask {
        let mut acc = self.full;
        for &g in &self.so[i.as_usize()].sets {
            if g & m == m {
                acc &= g;
            }
        }
        acc
    }

    /// Semi-limit points: x such that every semi-open set containing x
    /// meets m ∖ {x}.
    pub(crate) fn sderived(&self, i: KappaIndex, m: Mask) -> Mask {
        let mut out = 0;
        for x in 0..self.n {
            let px: Mask = 1 << x;
            let rest = m & !px;
            if self.so[i.as_usize()]
                .sets
                .iter()
                .all(|&g| g & px == 0 || g & rest != 0)
            {
                out |= px;
            }
        }
        out
    }

    pub(crate) fn semi_separated(&self, i: KappaIndex, e: Mask, f: Mask) -> bool {
        let fam = &self.so[i.as_usize()];
        let cover_e = fam.sets.iter().any(|&g| g & e == e && g & f == 0);
        let cover_f = fam.sets.iter().any(|&h| h & f == f && h & e == 0);
        cover_e && cover_f
    }

    /// (j-i)sg*-closed membership for both index orders, memoized. Order 0
    /// is (open side 1, closed side 2); order 1 is (open side 2, closed
    /// side 1).
    pub(crate) fn sgcl_bits(&self, order: usize) -> &SubsetBits {
        self.sgcl_cache[order].get_or_init(|| {
            let (open_side, closed_side) = order_sides(order);
            let mut bits = SubsetBits::new(self.full as usize + 1);
            for m in self.subsets() {
                let k = self.sker(open_side, m);
                if self.sc[closed_side.as_usize()]
                    .sets
                    .iter()
                    .any(|&f| f & m == m && k & f == f)
                {
                    bits.set(m);
                }
            }
            bits
        })
    }

    pub(crate) fn sg_closed(&self, order: usize, m: Mask) -> bool {
        self.sgcl_bits(order).get(m)
    }

    /// Minimal-cardinality certifying set, ties broken by mask order.
    pub(crate) fn sg_witness(&self, order: usize, m: Mask) -> Option<Mask> {
        let (open_side, closed_side) = order_sides(order);
        let k = self.sker(open_side, m);
        self.sc[closed_side.as_usize()]
            .sets
            .iter()
            .copied()
            .filter(|&f| f & m == m && k & f == f)
            .min_by_key(|&f| (f.count_ones(), f))
    }

    /// Intersection of all (j-i)sg*-closed supersets.
    pub(crate) fn sgstar_closure(&self, order: usize, m: Mask) -> Mask {
        let mut acc = self.full;
        for t in self.subsets() {
            if t & m == m && self.sg_closed(order, t) {
                acc &= t;
            }
        }
        acc
    }
}

/// (open side, closed side) for a canonical order index.
pub(crate) fn order_sides(order: usize) -> (KappaIndex, KappaIndex) {
    match order {
        0 => (KappaIndex::K1, KappaIndex::K2),
        1 => (KappaIndex::K2, KappaIndex::K1),
        _ => panic!("order index out of range"),
    }
}

enum Inner {
    Finite(Box<FiniteCtx>),
    Symbolic,
}

/// Cached semi-open structure for one bispace. Caches are write-once and
/// idempotent; shared references may be queried concurrently.
pub struct SemiOps<'b> {
    bispace: &'b Bispace,
    inner: Inner,
}

impl<'b> SemiOps<'b> {
    pub fn new(bispace: &'b Bispace) -> SemiOps<'b> {
        let inner = match FiniteCtx::from_bispace(bispace) {
            Ok(ctx) => Inner::Finite(Box::new(ctx)),
            Err(_) => Inner::Symbolic,
        };
        SemiOps { bispace, inner }
    }

    pub fn bispace(&self) -> &'b Bispace {
        self.bispace
    }

    pub fn universe(&self) -> &'b Universe {
        self.bispace.universe()
    }

    pub(crate) fn ctx(&self) -> Result<&FiniteCtx> {
        match &self.inner {
            Inner::Finite(ctx) => Ok(ctx),
            Inner::Symbolic => Err(Error::FiniteOnly),
        }
    }

    pub(crate) fn schema(&self, i: KappaIndex) -> &Schema {
        match self.bispace.family(i) {
            KappaFamily::Schema(s) => s,
            KappaFamily::Explicit(_) => unreachable!("symbolic path on explicit family"),
        }
    }

    fn symbolic_universe(&self) -> &SymbolicUniverse {
        self.bispace.universe().as_symbolic().expect("validated")
    }

    fn mask_of(&self, s: &SetExpr) -> Result<Mask> {
        match s {
            SetExpr::FiniteMask(m) => Ok(*m),
            _ => Err(Error::UniverseMismatch),
        }
    }

    /// The semi-κᵢ-open family: a materialized list on finite carriers, a
    /// predicate description on symbolic ones.
    pub fn family(&self, i: KappaIndex) -> SemiFamily<'_> {
        match &self.inner {
            Inner::Finite(ctx) => SemiFamily {
                index: i,
                repr: SemiFamilyRepr::Finite(&ctx.so[i.as_usize()].sets),
            },
            Inner::Symbolic => SemiFamily {
                index: i,
                repr: SemiFamilyRepr::Symbolic(describe_schema(
                    self.schema(i),
                    self.symbolic_universe(),
                )),
            },
        }
    }

    pub fn is_semi_open(&self, i: KappaIndex, s: &SetExpr) -> Result<bool> {
        match &self.inner {
            Inner::Finite(ctx) => Ok(ctx.is_semi_open(i, self.mask_of(s)?)),
            Inner::Symbolic => schema_is_semi_open(self.schema(i), self.universe(), s),
        }
    }

    pub fn is_semi_closed(&self, i: KappaIndex, s: &SetExpr) -> Result<bool> {
        self.is_semi_open(i, &self.universe().complement(s))
    }

    pub fn semi_closure(&self, i: KappaIndex, s: &SetExpr) -> Result<SetExpr> {
        match &self.inner {
            Inner::Finite(ctx) => Ok(SetExpr::FiniteMask(ctx.scl(i, self.mask_of(s)?))),
            Inner::Symbolic => schema_semi_closure(self.schema(i), self.universe(), s),
        }
    }

    pub fn semi_interior(&self, i: KappaIndex, s: &SetExpr) -> Result<SetExpr> {
        let c = self.semi_closure(i, &self.universe().complement(s))?;
        Ok(self.universe().complement(&c))
    }

    pub fn semi_derived(&self, i: KappaIndex, s: &SetExpr) -> Result<SetExpr> {
        match &self.inner {
            Inner::Finite(ctx) => Ok(SetExpr::FiniteMask(ctx.sderived(i, self.mask_of(s)?))),
            Inner::Symbolic => schema_semi_derived(self.schema(i), self.universe(), s),
        }
    }

    pub fn semi_kernel(&self, i: KappaIndex, s: &SetExpr) -> Result<SetExpr> {
        match &self.inner {
            Inner::Finite(ctx) => Ok(SetExpr::FiniteMask(ctx.sker(i, self.mask_of(s)?))),
            Inner::Symbolic => schema_semi_kernel(self.schema(i), self.universe(), s),
        }
    }

    pub fn are_semi_separated(&self, i: KappaIndex, e: &SetExpr, f: &SetExpr) -> Result<bool> {
        match &self.inner {
            Inner::Finite(ctx) => Ok(ctx.semi_separated(i, self.mask_of(e)?, self.mask_of(f)?)),
            Inner::Symbolic => schema_semi_separated(self.schema(i), self.universe(), e, f),
        }
    }
}

#[derive(Debug)]
pub struct SemiFamily<'a> {
    pub index: KappaIndex,
    pub repr: SemiFamilyRepr<'a>,
}

#[derive(Debug)]
pub enum SemiFamilyRepr<'a> {
    Finite(&'a [Mask]),
    Symbolic(String),
}

impl SemiFamily<'_> {
    pub fn finite_sets(&self) -> Option<&[Mask]> {
        match &self.repr {
            SemiFamilyRepr::Finite(sets) => Some(sets),
            _ => None,
        }
    }
}

impl fmt::Display for SemiFamily<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            SemiFamilyRepr::Finite(sets) => write!(f, "{} sets", sets.len()),
            SemiFamilyRepr::Symbolic(d) => write!(f, "{d}"),
        }
    }
}

fn describe_schema(schema: &Schema, su: &SymbolicUniverse) -> String {
    let atoms = |s| format!("{{{}}}", su.atom_labels(s).join(","));
    match schema.shape() {
        SchemaShape::CtblRequired => {
            format!("∅, X, and every set containing {}", atoms(schema.required))
        }
        SchemaShape::CtblFree => {
            if schema.excluded == 0 {
                "∅, X, and every countable set".into()
            } else {
                format!(
                    "∅, X, and every countable set S with S∖{} nonempty",
                    atoms(schema.excluded)
                )
            }
        }
        SchemaShape::WithCoctbl => {
            let mut parts = vec![
                "∅".to_string(),
                "X".to_string(),
                "every co-countable set".to_string(),
            ];
            if schema.countable {
                if schema.required == 0 && schema.excluded == 0 {
                    parts.push("every countable set".into());
                } else {
                    parts.push(format!(
                        "every countable set containing {} and avoiding {}",
                        atoms(schema.required),
                        atoms(schema.excluded)
                    ));
                }
            }
            parts.join(", ")
        }
        SchemaShape::Trivial => "∅ and X only".into(),
    }
}

// ---------------------------------------------------------------------------
// Schema-derived symbolic rules. Each is a closed form obtained from the
// generated open family and its closures; the worked-example tests lock the
// outcomes.
// ---------------------------------------------------------------------------

fn ins_atoms(s: &SetExpr, all: u64) -> Result<u64> {
    // Atoms certainly inside S; the bulk never meets atoms.
    match s {
        SetExpr::ExplicitSmall(a) => Ok(*a),
        SetExpr::CoFinite(a) => Ok(all & !a),
        SetExpr::Abstract { ins, .. } => Ok(*ins),
        SetExpr::FiniteMask(_) => Err(Error::UniverseMismatch),
    }
}

pub(crate) fn schema_is_semi_open(schema: &Schema, u: &Universe, s: &SetExpr) -> Result<bool> {
    if u.is_empty(s).is_true() || u.is_whole(s).is_true() {
        return Ok(true);
    }
    let su = u.as_symbolic().expect("symbolic path");
    match schema.shape() {
        // Every nonempty open set has closure X, so semi-open means
        // containing the required atoms.
        SchemaShape::CtblRequired => {
            let ins = ins_atoms(s, su.all_atoms())?;
            if schema.required & !ins == 0 {
                return Ok(true);
            }
            if u.is_empty(s) == Tri::Indeterminate && ins == 0 {
                return Err(Error::Indeterminate(
                    "set may be empty and therefore trivially semi-open".into(),
                ));
            }
            Ok(false)
        }
        // Countable opens close up only over the excluded atoms: semi-open
        // means countable with a point outside the exclusions.
        SchemaShape::CtblFree => match s {
            SetExpr::ExplicitSmall(a) => Ok(a & !schema.excluded != 0),
            SetExpr::CoFinite(_) => Ok(false),
            SetExpr::Abstract { ins, bulk, .. } => match bulk {
                Bulk::Countable => {
                    if ins & !schema.excluded != 0 {
                        Ok(true)
                    } else {
                        Err(Error::Indeterminate(
                            "countable bulk may or may not reach outside the excluded atoms".into(),
                        ))
                    }
                }
                Bulk::CoCountable => {
                    if *ins != su.all_atoms() {
                        Ok(false)
                    } else {
                        Err(Error::Indeterminate(
                            "co-countable abstract set may or may not be the whole carrier".into(),
                        ))
                    }
                }
                Bulk::BothBig => Ok(false),
            },
            SetExpr::FiniteMask(_) => Err(Error::UniverseMismatch),
        },
        // With every co-countable set open, semi-open collapses to open.
        SchemaShape::WithCoctbl => crate::kappa_family::schema_is_open(schema, su, u, s),
        SchemaShape::Trivial => Ok(false),
    }
}

pub(crate) fn schema_semi_closure(schema: &Schema, u: &Universe, s: &SetExpr) -> Result<SetExpr> {
    if u.is_empty(s).is_true() {
        return Ok(u.empty());
    }
    if u.is_whole(s).is_true() {
        return Ok(u.whole());
    }
    let su = u.as_symbolic().expect("symbolic path");
    match schema.shape() {
        SchemaShape::CtblRequired => {
            let ins = ins_atoms(s, su.all_atoms())?;
            if ins & schema.required != 0 {
                Ok(u.whole())
            } else {
                Ok(*s)
            }
        }
        SchemaShape::CtblFree => match s {
            // scl(S) = X only when the complement hides inside the excluded
            // atoms; otherwise S is already an intersection of semi-closed
            // supersets.
            SetExpr::CoFinite(a) => {
                if a & !schema.excluded == 0 {
                    Ok(u.whole())
                } else {
                    Ok(*s)
                }
            }
            SetExpr::ExplicitSmall(_) => Ok(*s),
            SetExpr::Abstract { bulk, .. } => match bulk {
                Bulk::CoCountable => Err(Error::Indeterminate(
                    "semi-closure depends on the unknown co-countable complement".into(),
                )),
                _ => Ok(*s),
            },
            SetExpr::FiniteMask(_) => Err(Error::UniverseMismatch),
        },
        // Semi-open = open, so semi-closure is the schema closure.
        SchemaShape::WithCoctbl => crate::kappa_family::schema_closure(schema, su, u, s),
        SchemaShape::Trivial => Ok(u.whole()),
    }
}

pub(crate) fn schema_semi_kernel(schema: &Schema, u: &Universe, s: &SetExpr) -> Result<SetExpr> {
    if u.is_empty(s).is_true() {
        return Ok(u.empty());
    }
    match schema.shape() {
        // Semi-open supersets are exactly the supersets of S ∪ required.
        SchemaShape::CtblRequired => u.union(s, &SetExpr::ExplicitSmall(schema.required)),
        SchemaShape::CtblFree => match u.is_countable(s) {
            Tri::True => Ok(*s),
            Tri::False => Ok(u.whole()),
            Tri::Indeterminate => Err(Error::Indeterminate("kernel needs the set's size".into())),
        },
        // Co-countable opens X∖{x} pin the kernel to S itself.
        SchemaShape::WithCoctbl => Ok(*s),
        SchemaShape::Trivial => {
            if u.is_empty(s).is_false() {
                Ok(u.whole())
            } else {
                Err(Error::Indeterminate(
                    "kernel needs to know whether the set is empty".into(),
                ))
            }
        }
    }
}

pub(crate) fn schema_semi_derived(schema: &Schema, u: &Universe, s: &SetExpr) -> Result<SetExpr> {
    if u.is_empty(s).is_true() {
        return Ok(u.empty());
    }
    let su = u.as_symbolic().expect("symbolic path");
    let all = su.all_atoms();
    // x is a semi-limit point of S exactly when x ∈ scl(S ∖ {x}).
    match schema.shape() {
        SchemaShape::CtblRequired => {
            let hit = ins_atoms(s, all)? & schema.required;
            match hit.count_ones() {
                0 => Ok(u.empty()),
                1 => Ok(SetExpr::CoFinite(hit)),
                _ => Ok(u.whole()),
            }
        }
        SchemaShape::CtblFree => match s {
            SetExpr::CoFinite(a) => {
                if a & !schema.excluded == 0 {
                    Ok(SetExpr::ExplicitSmall(schema.excluded))
                } else {
                    Ok(u.empty())
                }
            }
            SetExpr::ExplicitSmall(_) => Ok(u.empty()),
            SetExpr::Abstract { bulk, .. } => match bulk {
                Bulk::CoCountable => Err(Error::Indeterminate(
                    "semi-derived set depends on the unknown complement".into(),
                )),
                _ => Ok(u.empty()),
            },
            SetExpr::FiniteMask(_) => Err(Error::UniverseMismatch),
        },
        SchemaShape::WithCoctbl => {
            if u.is_countable(s).is_true() {
                // Every countable set is semi-closed here, so no point of it
                // is a semi-limit point of the rest.
                return Ok(u.empty());
            }
            if !schema.countable {
                return Ok(u.whole());
            }
            let hit = ins_atoms(s, all)? & schema.required;
            match hit.count_ones() {
                0 => Ok(SetExpr::ExplicitSmall(schema.excluded)),
                1 => Ok(SetExpr::CoFinite(hit)),
                _ => Ok(u.whole()),
            }
        }
        SchemaShape::Trivial => {
            // Only X is a nonempty semi-open set.
            match s {
                SetExpr::ExplicitSmall(a) if a.count_ones() == 1 => Ok(SetExpr::CoFinite(*a)),
                SetExpr::ExplicitSmall(_) | SetExpr::CoFinite(_) => Ok(u.whole()),
                SetExpr::Abstract { ins, bulk, .. } => {
                    if ins.count_ones() >= 2 || !bulk.is_countable() {
                        Ok(u.whole())
                    } else {
                        Err(Error::Indeterminate(
                            "semi-derived set needs the set's exact size".into(),
                        ))
                    }
                }
                SetExpr::FiniteMask(_) => Err(Error::UniverseMismatch),
            }
        }
    }
}

pub(crate) fn schema_semi_separated(
    schema: &Schema,
    u: &Universe,
    e: &SetExpr,
    f: &SetExpr,
) -> Result<bool> {
    if u.is_empty(e).is_true() || u.is_empty(f).is_true() {
        return Ok(true);
    }
    let su = u.as_symbolic().expect("symbolic path");
    let all = su.all_atoms();
    let disjoint = match u.intersect(e, f) {
        Ok(m) => u.is_empty(&m),
        Err(Error::Indeterminate(_)) => Tri::Indeterminate,
        Err(other) => return Err(other),
    };
    match schema.shape() {
        SchemaShape::CtblRequired => {
            // G = required ∪ E and H = required ∪ F are the cheapest covers;
            // they work exactly when neither side meets the required atoms.
            let ie = ins_atoms(e, all)?;
            let i_f = ins_atoms(f, all)?;
            if schema.required & (ie | i_f) != 0 {
                return Ok(false);
            }
            disjoint.decided("semi-separation of abstract sets")
        }
        SchemaShape::CtblFree => {
            let both_countable = u.is_countable(e).and(u.is_countable(f));
            both_countable
                .and(disjoint)
                .decided("semi-separation of abstract sets")
        }
        SchemaShape::WithCoctbl => {
            let side = |covered: &SetExpr, avoided: &SetExpr| -> Result<Tri> {
                // A co-countable open covers when the avoided side is
                // countable; otherwise a countable open must do it.
                let co_route = u.is_countable(avoided);
                let ctbl_route = if schema.countable {
                    let ic = ins_atoms(covered, all)?;
                    let ia = ins_atoms(avoided, all)?;
                    let req_ok = schema.required & ia == 0;
                    let ex_ok = ic & !schema.required & schema.excluded == 0;
                    u.is_countable(covered).and(Tri::from(req_ok && ex_ok))
                } else {
                    Tri::False
                };
                Ok(co_route.or(ctbl_route))
            };
            let g = side(e, f)?;
            let h = side(f, e)?;
            disjoint
                .and(g)
                .and(h)
                .decided("semi-separation of abstract sets")
        }
        SchemaShape::Trivial => Ok(false),
    }
}
