//! Reconstruction of the worked examples bundled with the theory: finite
//! ones exactly, uncountable ones through schema families. Every
//! classification an example asserts is recomputed and compared, and the
//! disagreements are surfaced as findings rather than silently adopted or
//! hidden. The finding list is computed, never hard-coded.

use serde::Serialize;

use crate::axioms;
use crate::error::{Error, Result};
use crate::kappa_family::{Bispace, ExplicitFamily, KappaFamily, KappaIndex, Schema};
use crate::semi_ops::SemiOps;
use crate::set_universe::{Bulk, FiniteUniverse, Mask, SetExpr, SymbolicUniverse, Universe};
use crate::sg_star::{self, SgIndex};

#[derive(Debug, Clone, Serialize)]
pub struct AssertionReport {
    pub assertion: String,
    /// What the catalog states.
    pub stated: String,
    /// What Definition-3-faithful computation gives.
    pub computed: String,
    pub agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub id: &'static str,
    pub description: &'static str,
    pub assertions: Vec<AssertionReport>,
}

impl ExampleReport {
    pub fn all_agree(&self) -> bool {
        self.assertions.iter().all(|a| a.agrees)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyFinding {
    pub example: String,
    pub assertion: String,
    pub stated: String,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PaperReport {
    pub examples: Vec<ExampleReport>,
    pub discrepancies: Vec<DiscrepancyFinding>,
}

impl PaperReport {
    pub fn example(&self, id: &str) -> Option<&ExampleReport> {
        self.examples.iter().find(|e| e.id == id)
    }

    pub fn discrepancy_examples(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self
            .discrepancies
            .iter()
            .map(|d| d.example.as_str())
            .collect();
        v.dedup();
        v
    }
}

pub const EXAMPLE_IDS: [&str; 9] = [
    "ex14", "ex16", "ex18i", "ex18ii", "ex26", "ex30", "ex38", "ex42", "ex65",
];

fn finite(labels: &[&str], k1: &[Mask], k2: &[Mask]) -> Bispace {
    let u = Universe::Finite(
        FiniteUniverse::new(labels.iter().map(|s| s.to_string()).collect()).expect("labels"),
    );
    Bispace::new(
        u,
        KappaFamily::Explicit(ExplicitFamily::new(k1.to_vec())),
        KappaFamily::Explicit(ExplicitFamily::new(k2.to_vec())),
    )
    .expect("catalog bispace validates")
}

fn symbolic(atoms: &[&str], k1: Schema, k2: Schema) -> Bispace {
    let u = Universe::Symbolic(
        SymbolicUniverse::new(atoms.iter().map(|s| s.to_string()).collect()).expect("atoms"),
    );
    Bispace::new(u, KappaFamily::Schema(k1), KappaFamily::Schema(k2))
        .expect("catalog bispace validates")
}

fn ctbl(required: u64, excluded: u64) -> Schema {
    Schema {
        required,
        excluded,
        countable: true,
        cocountable: false,
    }
}

/// Build one catalog example by id.
pub fn example(id: &str) -> Option<Bispace> {
    Some(match id {
        // X = irrationals, κ1 = countable sets through √3, κ2 = countable sets
        "ex14" => symbolic(&["r3"], ctbl(0b1, 0), ctbl(0, 0)),
        // X = {a,b,c}, κ1 = {∅,X,{a},{a,b}}, κ2 = {∅,X,{b},{b,c}}
        "ex16" => finite(
            &["a", "b", "c"],
            &[0, 0b111, 0b001, 0b011],
            &[0, 0b111, 0b010, 0b110],
        ),
        // X = {a,b,c}, κ1 = {∅,X,{a,b}}, κ2 = {∅,X,{b}}
        "ex18i" => finite(&["a", "b", "c"], &[0, 0b111, 0b011], &[0, 0b111, 0b010]),
        // κ1 = countable sets through √3; κ2 = countable sets avoiding √2
        "ex18ii" => symbolic(
            &["r2", "r3", "r5", "r7", "r11"],
            ctbl(0b00010, 0),
            ctbl(0, 0b00001),
        ),
        // κ1 = countable sets through {√3, √5}, κ2 = countable sets
        "ex26" => symbolic(&["r3", "r5"], ctbl(0b11, 0), ctbl(0, 0)),
        // κ1 = {∅,X,{a},{c},{a,c}}, κ2 = {∅,X,{b},{a,b}}
        "ex30" => finite(
            &["a", "b", "c"],
            &[0, 0b111, 0b001, 0b100, 0b101],
            &[0, 0b111, 0b010, 0b011],
        ),
        // X = {p,q}, κ1 = κ2 = {∅,X,{p}}
        "ex38" => finite(&["p", "q"], &[0, 0b11, 0b01], &[0, 0b11, 0b01]),
        // κ1 = κ2 = countable sets; one distinguished point l
        "ex42" => symbolic(&["l"], ctbl(0, 0), ctbl(0, 0)),
        // κ1 = κ2 = countable and co-countable sets
        "ex65" => symbolic(
            &[],
            Schema {
                required: 0,
                excluded: 0,
                countable: true,
                cocountable: true,
            },
            Schema {
                required: 0,
                excluded: 0,
                countable: true,
                cocountable: true,
            },
        ),
        _ => return None,
    })
}

struct Builder {
    report: ExampleReport,
}

impl Builder {
    fn new(id: &'static str, description: &'static str) -> Builder {
        Builder {
            report: ExampleReport {
                id,
                description,
                assertions: Vec::new(),
            },
        }
    }

    fn claim(&mut self, assertion: &str, computed: Result<bool>, witness: Option<String>) {
        let (computed_text, agrees) = match computed {
            Ok(v) => (
                if v {
                    "true".to_string()
                } else {
                    "false".to_string()
                },
                v,
            ),
            Err(e) => (format!("error: {e}"), false),
        };
        self.report.assertions.push(AssertionReport {
            assertion: assertion.to_string(),
            stated: "true".into(),
            computed: computed_text,
            agrees,
            witness,
        });
    }

    fn family_claim(
        &mut self,
        assertion: &str,
        ops: &SemiOps<'_>,
        i: KappaIndex,
        expected: &[Mask],
    ) {
        let computed = ops
            .family(i)
            .finite_sets()
            .map(|s| s.to_vec())
            .unwrap_or_default();
        let agrees = computed == expected;
        let u = ops.universe().as_finite().expect("finite example");
        let render = |sets: &[Mask]| {
            let parts: Vec<String> = sets
                .iter()
                .map(|&m| format!("{{{}}}", u.labels_of(m).join(",")))
                .collect();
            format!("[{}]", parts.join(" "))
        };
        self.report.assertions.push(AssertionReport {
            assertion: assertion.to_string(),
            stated: render(expected),
            computed: render(&computed),
            agrees,
            witness: None,
        });
    }

    fn finish(self) -> ExampleReport {
        self.report
    }
}

fn sg_closed_with_witness(
    ops: &SemiOps<'_>,
    idx: SgIndex,
    s: &SetExpr,
) -> (Result<bool>, Option<String>) {
    match sg_star::is_sg_star_closed(ops, idx, s) {
        Ok((v, w)) => (
            Ok(v),
            w.map(|w| format!("certificate {}", ops.universe().render(&w.0))),
        ),
        Err(e) => (Err(e), None),
    }
}

fn report_ex14() -> ExampleReport {
    let b = example("ex14").unwrap();
    let ops = SemiOps::new(&b);
    let su = b.universe().as_symbolic().unwrap().clone();
    let mut out = Builder::new(
        "ex14",
        "uncountable carrier; countable opens through r3 vs all countable opens",
    );
    out.claim(
        "the bispace is pairwise semi-T1",
        axioms::is_pairwise_semi_t1(&b),
        None,
    );
    out.claim(
        "the bispace is pairwise semi-T0",
        axioms::is_pairwise_semi_t0(&b),
        None,
    );
    // A: the irrationals of (1,2); contains r3 = √3, both sides uncountable.
    let a = su.abstract_set(0b1, 0, Bulk::BothBig).unwrap();
    out.claim(
        "A (irrationals of (1,2)) is not semi-k1-closed",
        ops.is_semi_closed(KappaIndex::K1, &a).map(|v| !v),
        None,
    );
    let idx = SgIndex::new(KappaIndex::K2, KappaIndex::K1).unwrap();
    let (v, w) = sg_closed_with_witness(&ops, idx, &a);
    out.claim("A is (2-1)sg*-closed", v, w);
    out.finish()
}

fn report_ex16() -> ExampleReport {
    let b = example("ex16").unwrap();
    let ops = SemiOps::new(&b);
    let mut out = Builder::new(
        "ex16",
        "three points; nested chains {a}<{a,b} and {b}<{b,c}",
    );
    out.claim(
        "{b,c} is semi-k1-closed",
        ops.is_semi_closed(KappaIndex::K1, &SetExpr::FiniteMask(0b110)),
        None,
    );
    // {b,c}∖{b} = {c}
    let ctx = ops.ctx().unwrap();
    let holds =
        !(1..=ctx.full).any(|p| p & !0b100u16 == 0 && ctx.is_semi_closed(KappaIndex::K2, p));
    out.claim(
        "{c} contains no nonempty semi-k2-closed subset",
        Ok(holds),
        (!holds).then(|| "counterexample {c} itself".to_string()),
    );
    out.claim(
        "{b} is semi-k2-open",
        ops.is_semi_open(KappaIndex::K2, &SetExpr::FiniteMask(0b010)),
        None,
    );
    let idx = SgIndex::new(KappaIndex::K2, KappaIndex::K1).unwrap();
    let (v, w) = sg_closed_with_witness(&ops, idx, &SetExpr::FiniteMask(0b010));
    out.claim("{b} is not (2-1)sg*-closed", v.map(|x| !x), w);
    out.finish()
}

fn report_ex18i() -> ExampleReport {
    let b = example("ex18i").unwrap();
    let ops = SemiOps::new(&b);
    let mut out = Builder::new("ex18i", "three points; κ1 = {∅,X,{a,b}}, κ2 = {∅,X,{b}}");
    out.family_claim(
        "the semi-k1-open family is {∅, {a,b}, X}",
        &ops,
        KappaIndex::K1,
        &[0, 0b011, 0b111],
    );
    out.family_claim(
        "the semi-k2-open family is {∅, {b}, X}",
        &ops,
        KappaIndex::K2,
        &[0, 0b010, 0b111],
    );
    let idx = SgIndex::new(KappaIndex::K2, KappaIndex::K1).unwrap();
    for (label, m) in [("{a,b}", 0b011u16), ("{b,c}", 0b110)] {
        let (v, w) = sg_closed_with_witness(&ops, idx, &SetExpr::FiniteMask(m));
        out.claim(&format!("{label} is (2-1)sg*-closed"), v, w);
    }
    let (v, _) = sg_closed_with_witness(&ops, idx, &SetExpr::FiniteMask(0b010));
    out.claim(
        "{b} = {a,b} ∩ {b,c} is not (2-1)sg*-closed",
        v.map(|x| !x),
        None,
    );
    out.finish()
}

fn report_ex18ii() -> ExampleReport {
    let b = example("ex18ii").unwrap();
    let ops = SemiOps::new(&b);
    let su = b.universe().as_symbolic().unwrap().clone();
    let u = b.universe();
    let mut out = Builder::new(
        "ex18ii",
        "uncountable carrier; κ1 = countable sets through r3, κ2 = countable sets avoiding r2",
    );
    let a = su.co_finite(["r2", "r3", "r5"]).unwrap();
    let bb = su.co_finite(["r2", "r7", "r11"]).unwrap();
    out.claim(
        "X∖A is semi-k2-open",
        ops.is_semi_open(KappaIndex::K2, &u.complement(&a)),
        None,
    );
    let idx12 = SgIndex::new(KappaIndex::K1, KappaIndex::K2).unwrap();
    let (v, w) = sg_closed_with_witness(&ops, idx12, &a);
    out.claim("A = X∖{r2,r3,r5} is (1-2)sg*-closed", v, w);
    let (v, w) = sg_closed_with_witness(&ops, idx12, &bb);
    out.claim("B = X∖{r2,r7,r11} is (1-2)sg*-closed", v, w);

    let c = u.union(&a, &bb).unwrap();
    let expected_c = su.co_finite(["r2"]).unwrap();
    out.claim("A ∪ B equals X∖{r2}", Ok(c == expected_c), None);
    out.claim(
        "{r2} is not semi-k2-open",
        ops.is_semi_open(KappaIndex::K2, &su.explicit_small(["r2"]).unwrap())
            .map(|v| !v),
        None,
    );
    out.claim(
        "X is the only semi-k2-closed superset of A ∪ B",
        ops.semi_closure(KappaIndex::K2, &c)
            .map(|scl| u.is_whole(&scl).is_true()),
        None,
    );
    out.claim(
        "A ∪ B is semi-k1-open",
        ops.is_semi_open(KappaIndex::K1, &c),
        None,
    );
    let (v, _) = sg_closed_with_witness(&ops, idx12, &c);
    out.claim("A ∪ B is not (1-2)sg*-closed", v.map(|x| !x), None);
    out.finish()
}

fn report_ex26() -> ExampleReport {
    let b = example("ex26").unwrap();
    let mut out = Builder::new(
        "ex26",
        "uncountable carrier; countable opens through {r3,r5} vs all countable opens",
    );
    out.claim(
        "the bispace is pairwise semi-T0",
        axioms::is_pairwise_semi_t0(&b),
        None,
    );
    out.claim(
        "the bispace is not pairwise semi-T1",
        axioms::is_pairwise_semi_t1(&b).map(|v| !v),
        None,
    );
    out.finish()
}

fn report_ex30() -> ExampleReport {
    let b = example("ex30").unwrap();
    let ops = SemiOps::new(&b);
    let mut out = Builder::new(
        "ex30",
        "three points; κ1 = {∅,X,{a},{c},{a,c}}, κ2 = {∅,X,{b},{a,b}}",
    );
    out.family_claim(
        "the semi-k1-open family is {∅,X,{a},{c},{a,c},{a,b},{b,c}}",
        &ops,
        KappaIndex::K1,
        &[0, 0b001, 0b011, 0b100, 0b101, 0b110, 0b111],
    );
    out.family_claim(
        "the semi-k2-open family is {∅,X,{b},{a,b},{b,c}}",
        &ops,
        KappaIndex::K2,
        &[0, 0b010, 0b011, 0b110, 0b111],
    );
    out.claim(
        "the bispace is pairwise semi-T1",
        axioms::is_pairwise_semi_t1(&b),
        None,
    );
    out.claim(
        "the bispace is not pairwise semi-R0",
        axioms::is_pairwise_semi_r0(&b).map(|v| !v),
        None,
    );
    out.claim(
        "the semi-k2-closure of {b} is X",
        ops.semi_closure(KappaIndex::K2, &SetExpr::FiniteMask(0b010))
            .map(|scl| scl == SetExpr::FiniteMask(0b111)),
        None,
    );
    out.finish()
}

fn report_ex38() -> ExampleReport {
    let b = example("ex38").unwrap();
    let mut out = Builder::new("ex38", "two points; κ1 = κ2 = {∅,X,{p}}");
    out.claim(
        "the bispace is pairwise semi-T_w",
        axioms::is_pairwise_semi_tw(&b),
        None,
    );
    out.claim(
        "the bispace is not pairwise semi-T1",
        axioms::is_pairwise_semi_t1(&b).map(|v| !v),
        None,
    );
    out.claim(
        "the bispace is pairwise semi-T0",
        axioms::is_pairwise_semi_t0(&b),
        None,
    );
    out.finish()
}

fn report_ex42() -> ExampleReport {
    let b = example("ex42").unwrap();
    let ops = SemiOps::new(&b);
    let su = b.universe().as_symbolic().unwrap().clone();
    let mut out = Builder::new(
        "ex42",
        "uncountable carrier; both structures are the countable sets",
    );
    out.claim(
        "the bispace is pairwise semi-symmetric",
        axioms::is_pairwise_semi_symmetric(&b),
        None,
    );
    let l = su.explicit_small(["l"]).unwrap();
    for i in KappaIndex::BOTH {
        out.claim(
            &format!(
                "the semi-kernel of {{l}} w.r.t. kappa{} is {{l}}",
                i.number()
            ),
            ops.semi_kernel(i, &l).map(|k| k == l),
            None,
        );
    }
    out.claim(
        "{l} is not semi-k1-closed",
        ops.is_semi_closed(KappaIndex::K1, &l).map(|v| !v),
        None,
    );
    out.claim(
        "no singleton is (j-i)sg*-closed",
        axioms::no_singleton_sg_star_closed(&b),
        None,
    );
    out.finish()
}

fn report_ex65() -> ExampleReport {
    let b = example("ex65").unwrap();
    let ops = SemiOps::new(&b);
    let su = b.universe().as_symbolic().unwrap().clone();
    let mut out = Builder::new(
        "ex65",
        "uncountable carrier; both structures are the countable and co-countable sets",
    );
    out.claim(
        "the semi-closed families equal the opposite semi-open families",
        axioms::sc_equals_so(&b),
        None,
    );
    // D: the irrationals of (0,2); both sides uncountable.
    let d = su.abstract_set(0, 0, Bulk::BothBig).unwrap();
    out.claim(
        "D (irrationals of (0,2)) is not semi-k1-closed",
        ops.is_semi_closed(KappaIndex::K1, &d).map(|v| !v),
        None,
    );
    out.claim(
        "D equals its own semi-kernel",
        ops.semi_kernel(KappaIndex::K2, &d).map(|k| k == d),
        None,
    );
    for idx in SgIndex::both() {
        let (v, _) = sg_closed_with_witness(&ops, idx, &d);
        out.claim(&format!("D is not {idx}sg*-closed"), v.map(|x| !x), None);
    }
    out.finish()
}

/// Recompute every assertion of every catalog example and collect the
/// disagreements.
pub fn paper_examples_report() -> PaperReport {
    let examples = vec![
        report_ex14(),
        report_ex16(),
        report_ex18i(),
        report_ex18ii(),
        report_ex26(),
        report_ex30(),
        report_ex38(),
        report_ex42(),
        report_ex65(),
    ];
    let discrepancies = examples
        .iter()
        .flat_map(|e| {
            e.assertions
                .iter()
                .filter(|a| !a.agrees)
                .map(|a| DiscrepancyFinding {
                    example: e.id.to_string(),
                    assertion: a.assertion.clone(),
                    stated: a.stated.clone(),
                    computed: a.computed.clone(),
                    witness: a.witness.clone(),
                })
        })
        .collect();
    PaperReport {
        examples,
        discrepancies,
    }
}

/// Convenience used by tests and fixture generation.
pub fn example_or_err(id: &str) -> Result<Bispace> {
    example(id).ok_or_else(|| Error::Parse(format!("unknown example `{id}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrepancy_list_is_computed_not_assumed() {
        let report = paper_examples_report();
        assert_eq!(report.discrepancy_examples(), vec!["ex16", "ex18i"]);
        for e in &report.examples {
            match e.id {
                "ex16" | "ex18i" => assert!(!e.all_agree()),
                _ => assert!(e.all_agree(), "{} unexpectedly disagrees", e.id),
            }
        }
    }

    #[test]
    fn ex16_finding_carries_its_certificate() {
        let report = paper_examples_report();
        let finding = report
            .discrepancies
            .iter()
            .find(|d| d.example == "ex16" && d.assertion.contains("sg*"))
            .expect("ex16 sg* finding");
        assert_eq!(finding.witness.as_deref(), Some("certificate {b}"));
    }

    #[test]
    fn every_catalog_id_builds() {
        for id in EXAMPLE_IDS {
            assert!(example(id).is_some(), "{id}");
        }
        assert!(example("ex99").is_none());
    }
}
