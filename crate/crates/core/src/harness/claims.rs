//! The claim registry: one executable statement per theorem, evaluated
//! exhaustively over a finite bispace.
//!
//! Claims are checked as stated, including possibly-false ones; the
//! harness is a judge, not an advocate. Counterexamples come back in a
//! canonical order: index order first, then subset bitmask, then point
//! index, so reports are reproducible across machines and worker counts.

use crate::error::{Error, Result};
use crate::kappa_family::{Bispace, KappaIndex};
use crate::semi_ops::{FiniteCtx, SemiOps};
use crate::set_universe::Mask;
use crate::sg_star::SgIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantifierShape {
    PerBispace,
    PerSubset,
    PerSubsetPair,
    PerPoint,
    PerPointPair,
}

/// One value appearing in a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessPart {
    Order(SgIndex),
    Side(KappaIndex),
    Set(Mask),
    Point(usize),
    Note(&'static str),
}

/// A counterexample: labeled values in the order the claim binds them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub parts: Vec<(&'static str, WitnessPart)>,
}

impl Witness {
    fn new() -> Witness {
        Witness::default()
    }

    fn order(mut self, idx: SgIndex) -> Witness {
        self.parts.push(("order", WitnessPart::Order(idx)));
        self
    }

    fn side(mut self, label: &'static str, i: KappaIndex) -> Witness {
        self.parts.push((label, WitnessPart::Side(i)));
        self
    }

    fn set(mut self, label: &'static str, m: Mask) -> Witness {
        self.parts.push((label, WitnessPart::Set(m)));
        self
    }

    fn point(mut self, label: &'static str, p: usize) -> Witness {
        self.parts.push((label, WitnessPart::Point(p)));
        self
    }

    fn note(mut self, label: &'static str, text: &'static str) -> Witness {
        self.parts.push((label, WitnessPart::Note(text)));
        self
    }
}

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub shape: QuantifierShape,
    pub(crate) check: fn(&FiniteCtx) -> Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimOutcome {
    Holds,
    Refuted(Witness),
}

/// Evaluate one registered claim exhaustively over a finite bispace.
pub fn verify_claim(id: &str, bispace: &Bispace) -> Result<ClaimOutcome> {
    let claim = registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
    let ops = SemiOps::new(bispace);
    let ctx = ops.ctx()?;
    Ok(match (claim.check)(ctx) {
        None => ClaimOutcome::Holds,
        Some(w) => ClaimOutcome::Refuted(w),
    })
}

// --------------------------------------------------------------------------
// Shared helpers.
// --------------------------------------------------------------------------

fn singleton(x: usize) -> Mask {
    1 << x
}

/// Definition-form sg*-closedness: a single semi-closed certificate inside
/// every semi-open superset, evaluated without the kernel shortcut.
fn sg_closed_by_definition(ctx: &FiniteCtx, idx: SgIndex, b: Mask) -> bool {
    let (j, i) = (idx.open_side(), idx.closed_side());
    ctx.sc[i.as_usize()].sets.iter().any(|&f| {
        f & b == b
            && ctx.so[j.as_usize()]
                .sets
                .iter()
                .all(|&o| b & !o != 0 || f & !o == 0)
    })
}

/// ∃ a semi-κᵢ-open set containing exactly the `inside` point of the pair.
fn separates(ctx: &FiniteCtx, i: KappaIndex, inside: Mask, outside: Mask) -> bool {
    ctx.so[i.as_usize()]
        .sets
        .iter()
        .any(|&u| u & inside != 0 && u & outside == 0)
}

/// Pack the bits of `m` that lie in the subspace carrier `b` into dense
/// low positions.
fn compress(m: Mask, b: Mask) -> Mask {
    let mut out = 0;
    let mut pos = 0;
    for bit in 0..16 {
        if b >> bit & 1 == 1 {
            if m >> bit & 1 == 1 {
                out |= 1 << pos;
            }
            pos += 1;
        }
    }
    out
}

/// The subspace bispace on carrier `b`: each structure is {U ∩ b : U open}.
fn subspace(ctx: &FiniteCtx, b: Mask) -> FiniteCtx {
    let n = b.count_ones() as usize;
    let project = |k: usize| -> Vec<Mask> {
        ctx.kappa[k]
            .sets
            .iter()
            .map(|&u| compress(u & b, b))
            .collect()
    };
    FiniteCtx::new(n, [project(0), project(1)])
}

fn g_equals_g_prime(ctx: &FiniteCtx, i: KappaIndex) -> bool {
    let order = SgIndex::new(i.other(), i).expect("distinct").order();
    ctx.subsets().all(|a| {
        let comp = ctx.full & !a;
        let in_g = ctx.is_semi_closed(i, ctx.scl(i, comp));
        let in_g_prime = ctx.sg_closed(order, ctx.sgstar_closure(order, comp));
        in_g == in_g_prime
    })
}

fn all_subsets_sg_closed(ctx: &FiniteCtx) -> bool {
    SgIndex::both()
        .iter()
        .all(|idx| ctx.subsets().all(|b| ctx.sg_closed(idx.order(), b)))
}

fn single_space_semi_t0(ctx: &FiniteCtx, i: KappaIndex) -> bool {
    for x in 0..ctx.n {
        for y in x + 1..ctx.n {
            let (px, py) = (singleton(x), singleton(y));
            if !separates(ctx, i, px, py) && !separates(ctx, i, py, px) {
                return false;
            }
        }
    }
    true
}

// --------------------------------------------------------------------------
// Claim checks, in registry order.
// --------------------------------------------------------------------------

fn c_t6(ctx: &FiniteCtx) -> Option<Witness> {
    for i in KappaIndex::BOTH {
        for b in ctx.subsets() {
            if ctx.scl(i, b) != b | ctx.sderived(i, b) {
                return Some(Witness::new().side("index", i).set("B", b));
            }
        }
    }
    None
}

fn c_t6a(ctx: &FiniteCtx) -> Option<Witness> {
    for i in KappaIndex::BOTH {
        let closures_semi_closed = ctx.subsets().all(|b| ctx.is_semi_closed(i, ctx.scl(i, b)));
        if closures_semi_closed != ctx.condition_c(i) {
            return Some(Witness::new().side("index", i));
        }
    }
    None
}

fn c_t11(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        for b in ctx.subsets() {
            if ctx.sg_closed(idx.order(), b) != sg_closed_by_definition(ctx, idx, b) {
                return Some(Witness::new().order(idx).set("B", b));
            }
        }
    }
    None
}

fn c_t12(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        for b in ctx.subsets() {
            let via_complement = ctx.sg_closed(idx.order(), ctx.full & !b);
            let direct = crate::sg_star::sg_open_direct(ctx, idx.order(), b);
            if via_complement != direct {
                return Some(Witness::new().order(idx).set("B", b));
            }
        }
    }
    None
}

fn c_r13a(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        for d in ctx.subsets() {
            if ctx.is_semi_closed(idx.closed_side(), d) && !ctx.sg_closed(idx.order(), d) {
                return Some(Witness::new().order(idx).set("D", d));
            }
        }
    }
    None
}

fn c_r13b(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        for d in ctx.subsets() {
            if ctx.sker(idx.open_side(), d) == d
                && ctx.sg_closed(idx.order(), d) != ctx.is_semi_closed(idx.closed_side(), d)
            {
                return Some(Witness::new().order(idx).set("D", d));
            }
        }
    }
    None
}

fn c_t15(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        let (j, i) = (idx.open_side(), idx.closed_side());
        for b in ctx.subsets() {
            if !ctx.sg_closed(idx.order(), b) {
                continue;
            }
            let good_certificate = ctx.sc[i.as_usize()].sets.iter().any(|&f| {
                f & b == b
                    && ctx.sc[j.as_usize()]
                        .sets
                        .iter()
                        .all(|&p| p == 0 || p & !(f & !b) != 0)
            });
            if !good_certificate {
                return Some(Witness::new().order(idx).set("B", b));
            }
        }
    }
    None
}

fn c_t17(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        let j = idx.closed_side();
        for d in ctx.subsets() {
            if !ctx.sg_closed(idx.order(), d) {
                continue;
            }
            let scl = ctx.scl(j, d);
            let lhs = ctx.is_semi_closed(j, d);
            let rhs = ctx.is_semi_closed(j, scl) && ctx.is_semi_closed(j, scl & !d);
            if lhs != rhs {
                return Some(Witness::new().order(idx).set("D", d));
            }
        }
    }
    None
}

fn c_t20(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        let i = idx.closed_side();
        let hypothesis = ctx.sc[i.as_usize()].sets.iter().all(|&p| {
            ctx.sc[i.as_usize()]
                .sets
                .iter()
                .all(|&q| ctx.sg_closed(idx.order(), p | q))
        });
        if !hypothesis {
            continue;
        }
        for e in ctx.subsets() {
            if !ctx.sg_closed(idx.order(), e) {
                continue;
            }
            for f in ctx.subsets() {
                if ctx.sg_closed(idx.order(), f) && !ctx.sg_closed(idx.order(), e | f) {
                    return Some(Witness::new().order(idx).set("E", e).set("F", f));
                }
            }
        }
    }
    None
}

fn c_t22(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        let j = idx.open_side();
        let sg_open = |m: Mask| ctx.sg_closed(idx.order(), ctx.full & !m);
        for e1 in ctx.subsets() {
            if !sg_open(e1) {
                continue;
            }
            for e2 in ctx.subsets() {
                if sg_open(e2) && ctx.semi_separated(j, e1, e2) && !sg_open(e1 | e2) {
                    return Some(Witness::new().order(idx).set("E1", e1).set("E2", e2));
                }
            }
        }
    }
    None
}

fn c_t23(ctx: &FiniteCtx) -> Option<Witness> {
    // (i-j): certificates on the j side, supersets on the i side.
    for idx in SgIndex::both() {
        let i = idx.open_side();
        for x in 0..ctx.n {
            let px = singleton(x);
            if !ctx.is_semi_closed(i, px) && !ctx.sg_closed(idx.order(), ctx.full & !px) {
                return Some(Witness::new().order(idx).point("x", x));
            }
        }
    }
    None
}

fn c_t24(ctx: &FiniteCtx) -> Option<Witness> {
    let condition = |px: Mask, py: Mask| {
        KappaIndex::BOTH.iter().any(|&i| {
            let so = &ctx.so[i.as_usize()].sets;
            let sc = &ctx.sc[i.as_usize()].sets;
            so.iter().chain(sc.iter()).any(|&b| {
                let hits = (b & px != 0) as u8 + (b & py != 0) as u8;
                hits == 1
            })
        })
    };
    let t0 = ctx.pairwise_semi_t0();
    let mut first_bad_pair = None;
    'pairs: for x in 0..ctx.n {
        for y in x + 1..ctx.n {
            if !condition(singleton(x), singleton(y)) {
                first_bad_pair = Some((x, y));
                break 'pairs;
            }
        }
    }
    match (t0, first_bad_pair) {
        (true, Some((x, y))) => Some(Witness::new().point("x", x).point("y", y)),
        (false, None) => Some(Witness::new().note(
            "reason",
            "every pair is split by the combined families yet the bispace is not pairwise semi-T0",
        )),
        _ => None,
    }
}

fn c_t27(ctx: &FiniteCtx) -> Option<Witness> {
    if !ctx.pairwise_semi_t0() {
        return None;
    }
    for p in 0..ctx.n {
        for q in 0..ctx.n {
            if p == q {
                continue;
            }
            let in_scl1_q = ctx.scl(KappaIndex::K1, singleton(q)) & singleton(p) != 0;
            let in_scl2_p = ctx.scl(KappaIndex::K2, singleton(p)) & singleton(q) != 0;
            if in_scl1_q && in_scl2_p {
                return Some(Witness::new().point("p", p).point("q", q));
            }
        }
    }
    None
}

fn c_t28(ctx: &FiniteCtx) -> Option<Witness> {
    if !ctx.pairwise_semi_t0() {
        return None;
    }
    for p in 0..ctx.n {
        for q in 0..ctx.n {
            if p != q
                && ctx.scl(KappaIndex::K2, singleton(p)) == ctx.scl(KappaIndex::K1, singleton(q))
            {
                return Some(Witness::new().point("p", p).point("q", q));
            }
        }
    }
    None
}

fn c_t29(ctx: &FiniteCtx) -> Option<Witness> {
    if ctx.pairwise_semi_t0() && ctx.pairwise_semi_r0() && !ctx.pairwise_semi_t1() {
        return Some(Witness::new().note("reason", "pairwise semi-T0 and semi-R0 but not semi-T1"));
    }
    None
}

fn c_t32(ctx: &FiniteCtx) -> Option<Witness> {
    if ctx.pairwise_semi_symmetric() && ctx.pairwise_semi_t0() && !ctx.pairwise_semi_t1() {
        return Some(Witness::new().note("reason", "semi-symmetric and semi-T0 but not semi-T1"));
    }
    None
}

fn singleton_condition(ctx: &FiniteCtx) -> Option<Witness> {
    // (a) of the T_ω characterizations: a singleton not semi-κᵢ-closed is
    // semi-κⱼ-open.
    for i in KappaIndex::BOTH {
        let j = i.other();
        for x in 0..ctx.n {
            let px = singleton(x);
            if !ctx.is_semi_closed(i, px) && !ctx.is_semi_open(j, px) {
                return Some(Witness::new().side("i", i).point("x", x));
            }
        }
    }
    None
}

fn c_t35(ctx: &FiniteCtx) -> Option<Witness> {
    let tw = ctx.pairwise_semi_tw();
    let a = singleton_condition(ctx).is_none();
    let b = KappaIndex::BOTH.iter().all(|&i| g_equals_g_prime(ctx, i));
    if tw != (a && b) {
        return Some(Witness::new().note(
            "reason",
            "semi-T_w disagrees with the singleton condition plus G = G'",
        ));
    }
    None
}

fn c_t36(ctx: &FiniteCtx) -> Option<Witness> {
    let tw = ctx.pairwise_semi_tw();
    let mut intersection_property = true;
    'outer: for i in KappaIndex::BOTH {
        let j = i.other();
        for d in ctx.subsets() {
            // Intersection over the combined family {F ⊇ D : F semi-κᵢ-closed
            // or semi-κⱼ-open}.
            let mut acc = ctx.full;
            for f in ctx.subsets() {
                if f & d == d && (ctx.is_semi_closed(i, f) || ctx.is_semi_open(j, f)) {
                    acc &= f;
                }
            }
            if acc != d {
                intersection_property = false;
                break 'outer;
            }
        }
    }
    let gg = KappaIndex::BOTH.iter().all(|&i| g_equals_g_prime(ctx, i));
    if tw != (intersection_property && gg) {
        return Some(Witness::new().note(
            "reason",
            "semi-T_w disagrees with the combined-intersection property plus G = G'",
        ));
    }
    None
}

fn c_door(ctx: &FiniteCtx) -> Option<Witness> {
    if ctx.pairwise_semi_door() && !ctx.pairwise_semi_tw() {
        return Some(
            Witness::new().note("reason", "semi-door bispace that is not pairwise semi-T_w"),
        );
    }
    None
}

fn c_t39(ctx: &FiniteCtx) -> Option<Witness> {
    if ctx.pairwise_semi_tw() && !ctx.pairwise_semi_t0() {
        return Some(Witness::new().note("reason", "pairwise semi-T_w but not semi-T0"));
    }
    None
}

fn c_t41(ctx: &FiniteCtx) -> Option<Witness> {
    if ctx.strongly_semi_symmetric() && !ctx.pairwise_semi_symmetric() {
        return Some(
            Witness::new().note("reason", "strongly semi-symmetric but not semi-symmetric"),
        );
    }
    None
}

fn c_t60(ctx: &FiniteCtx) -> Option<Witness> {
    if !ctx.pairwise_semi_tw() {
        return None;
    }
    if let Some(w) = singleton_condition(ctx) {
        return Some(w);
    }
    for i in KappaIndex::BOTH {
        let order = SgIndex::new(i.other(), i).expect("distinct").order();
        for d in ctx.subsets() {
            let in_star = {
                let c = ctx.full & !d;
                ctx.sgstar_closure(order, c) == c
            };
            if ctx.is_semi_open(i, d) != in_star {
                return Some(Witness::new().side("i", i).set("D", d));
            }
        }
    }
    None
}

fn c_t61(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        let i = idx.closed_side();
        for c in ctx.subsets() {
            if !ctx.sg_closed(idx.order(), c) {
                continue;
            }
            let scl = ctx.scl(i, c);
            for d in ctx.subsets() {
                if c & !d == 0 && d & !scl == 0 && !ctx.sg_closed(idx.order(), d) {
                    return Some(Witness::new().order(idx).set("C", c).set("D", d));
                }
            }
        }
    }
    None
}

fn c_t62(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        let j = idx.open_side();
        for b in ctx.subsets() {
            if !(ctx.is_semi_open(j, b) && ctx.sg_closed(idx.order(), b)) {
                continue;
            }
            let sub = subspace(ctx, b);
            // subsets of b in ascending mask order
            let mut c: Mask = 0;
            loop {
                let absolute = ctx.sg_closed(idx.order(), c);
                let relative = sub.sg_closed(idx.order(), compress(c, b));
                if absolute != relative {
                    return Some(Witness::new().order(idx).set("B", b).set("C", c));
                }
                if c == b {
                    break;
                }
                c = c.wrapping_sub(b) & b;
            }
        }
    }
    None
}

fn c_c63(ctx: &FiniteCtx) -> Option<Witness> {
    for idx in SgIndex::both() {
        let j = idx.open_side();
        for b in ctx.subsets() {
            if !(ctx.is_semi_open(j, b) && ctx.sg_closed(idx.order(), b)) {
                continue;
            }
            for c in ctx.subsets() {
                if ctx.sg_closed(idx.order(), c) && !ctx.sg_closed(idx.order(), b & c) {
                    return Some(Witness::new().order(idx).set("B", b).set("C", c));
                }
            }
        }
    }
    None
}

fn c_t64(ctx: &FiniteCtx) -> Option<Witness> {
    if all_subsets_sg_closed(ctx) && !ctx.sc_eq_so() {
        return Some(Witness::new().note(
            "reason",
            "every subset sg*-closed yet semi-closed and opposite semi-open families differ",
        ));
    }
    None
}

fn c_t66(ctx: &FiniteCtx) -> Option<Witness> {
    if !ctx.sc_eq_so() {
        return None;
    }
    let all_sg = all_subsets_sg_closed(ctx);
    let cond_c = ctx.condition_c(KappaIndex::K1) && ctx.condition_c(KappaIndex::K2);
    if all_sg != cond_c {
        return Some(Witness::new().note(
            "reason",
            "with matching families, universal sg*-closedness disagrees with condition (C)",
        ));
    }
    None
}

fn c_c43(ctx: &FiniteCtx) -> Option<Witness> {
    if ctx.strongly_semi_symmetric() && ctx.pairwise_semi_tw() && !ctx.pairwise_semi_t1() {
        return Some(Witness::new().note(
            "reason",
            "strongly semi-symmetric and semi-T_w but not semi-T1",
        ));
    }
    None
}

fn c_r25(ctx: &FiniteCtx) -> Option<Witness> {
    let single = KappaIndex::BOTH
        .iter()
        .any(|&i| single_space_semi_t0(ctx, i));
    if single && !ctx.pairwise_semi_t0() {
        return Some(Witness::new().note(
            "reason",
            "one structure is semi-T0 on its own yet the bispace is not pairwise semi-T0",
        ));
    }
    if ctx.pairwise_semi_t1() && !ctx.pairwise_semi_t0() {
        return Some(Witness::new().note("reason", "pairwise semi-T1 but not semi-T0"));
    }
    None
}

/// Every registered claim, in report order.
pub fn registry() -> &'static [Claim] {
    use QuantifierShape::*;
    static REGISTRY: &[Claim] = &[
        Claim { id: "C-T6", statement: "semi-closure of B equals B united with its semi-derived set", shape: PerSubset, check: c_t6 },
        Claim { id: "C-T6A", statement: "every semi-closure is semi-closed iff arbitrary intersections of closed sets are semi-closed", shape: PerBispace, check: c_t6a },
        Claim { id: "C-T11", statement: "sg*-closed by definition iff a semi-closed certificate sits inside the semi-kernel", shape: PerSubset, check: c_t11 },
        Claim { id: "C-T12", statement: "sg*-open iff some semi-open subset absorbs every opposite semi-closed subset", shape: PerSubset, check: c_t12 },
        Claim { id: "C-R13a", statement: "every semi-closed set is sg*-closed", shape: PerSubset, check: c_r13a },
        Claim { id: "C-R13b", statement: "a set equal to its semi-kernel is sg*-closed iff it is semi-closed", shape: PerSubset, check: c_r13b },
        Claim { id: "C-T15", statement: "an sg*-closed set has a certificate whose excess holds no nonempty opposite semi-closed set", shape: PerSubset, check: c_t15 },
        Claim { id: "C-T17", statement: "an sg*-closed set is semi-closed iff its semi-closure and the closure's excess are semi-closed", shape: PerSubset, check: c_t17 },
        Claim { id: "C-T20", statement: "unions of sg*-closed sets are sg*-closed when unions of semi-closed sets are", shape: PerSubsetPair, check: c_t20 },
        Claim { id: "C-T22", statement: "the union of two semi-separated sg*-open sets is sg*-open", shape: PerSubsetPair, check: c_t22 },
        Claim { id: "C-T23", statement: "if a singleton is not semi-closed its complement is sg*-closed the opposite way", shape: PerPoint, check: c_t23 },
        Claim { id: "C-T24", statement: "pairwise semi-T0 iff every pair is split by a semi-open or opposite semi-closed set", shape: PerPointPair, check: c_t24 },
        Claim { id: "C-T27", statement: "in a semi-T0 bispace one point of each ordered pair escapes the other's opposite semi-closure", shape: PerPointPair, check: c_t27 },
        Claim { id: "C-T28", statement: "in a semi-T0 bispace the two singleton semi-closures of an ordered pair differ", shape: PerPointPair, check: c_t28 },
        Claim { id: "C-T29", statement: "pairwise semi-T0 and semi-R0 imply pairwise semi-T1", shape: PerBispace, check: c_t29 },
        Claim { id: "C-T32", statement: "pairwise semi-symmetric and semi-T0 imply pairwise semi-T1", shape: PerBispace, check: c_t32 },
        Claim { id: "C-T35", statement: "semi-T_w iff the singleton condition holds and G_i = G_i'", shape: PerBispace, check: c_t35 },
        Claim { id: "C-T36", statement: "semi-T_w iff every subset is a combined-family intersection and G_i = G_i'", shape: PerBispace, check: c_t36 },
        Claim { id: "C-DOOR", statement: "every semi-door bispace is pairwise semi-T_w", shape: PerBispace, check: c_door },
        Claim { id: "C-T39", statement: "pairwise semi-T_w implies pairwise semi-T0", shape: PerBispace, check: c_t39 },
        Claim { id: "C-T41", statement: "pairwise strongly semi-symmetric implies pairwise semi-symmetric", shape: PerBispace, check: c_t41 },
        Claim { id: "C-T60", statement: "in a semi-T_w bispace the starred family recovers the semi-open family", shape: PerBispace, check: c_t60 },
        Claim { id: "C-T61", statement: "sets between an sg*-closed set and its semi-closure are sg*-closed", shape: PerSubsetPair, check: c_t61 },
        Claim { id: "C-T62", statement: "inside a semi-open sg*-closed set, sg*-closedness agrees with its relative version", shape: PerSubsetPair, check: c_t62 },
        Claim { id: "C-C63", statement: "intersecting with a semi-open sg*-closed set preserves sg*-closedness", shape: PerSubsetPair, check: c_c63 },
        Claim { id: "C-T64", statement: "if every subset is sg*-closed the semi-closed family equals the opposite semi-open family", shape: PerBispace, check: c_t64 },
        Claim { id: "C-T66", statement: "with matching families, every subset is sg*-closed iff condition (C) holds", shape: PerBispace, check: c_t66 },
        Claim { id: "C-C43", statement: "strongly semi-symmetric and semi-T_w imply pairwise semi-T1", shape: PerBispace, check: c_c43 },
        Claim { id: "C-R25", statement: "a semi-T0 structure makes the bispace pairwise semi-T0, and semi-T1 implies semi-T0", shape: PerBispace, check: c_r25 },
    ];
    REGISTRY
}
