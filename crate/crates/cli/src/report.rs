//! The serialized analysis report.

use std::collections::BTreeMap;

use roughdm::algebras::{nelson_condition_violation, AlgebraReport, KleeneStructure, Witness};
use roughdm::approximations::{family, ApproxOp};
use roughdm::checks::{theorem_checks, CheckValue, CrossCheck};
use roughdm::error::Error;
use roughdm::relations::Relation;
use roughdm::roughsets::{enumerate_rs_with_witnesses, ApproxPair, Caps, RoughStructure};
use roughdm::set::{ElementSet, Universe};
use serde::Serialize;

use crate::error::Result;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Overrides both caps when set.
    pub max_n: Option<usize>,
    pub no_dmrs: bool,
}

impl AnalyzeOptions {
    pub fn caps(&self) -> Caps {
        self.max_n.map(Caps::uniform).unwrap_or_default()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairOut {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
}

impl PairOut {
    pub fn new(u: &Universe, p: ApproxPair) -> Self {
        PairOut {
            lower: u.labels_of(p.lower),
            upper: u.labels_of(p.upper),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub subject: String,
    pub targets: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Predicates {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub quasiorder: bool,
    pub equivalence: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NeighbourhoodRow {
    pub element: String,
    pub forward: Vec<String>,
    pub inverse: Vec<String>,
    pub core: Vec<String>,
    pub inverse_core: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Families {
    pub upper: Vec<Vec<String>>,
    pub lower: Vec<Vec<String>>,
    pub upper_inv: Vec<Vec<String>>,
    pub lower_inv: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RoughPairOut {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    /// First subset, in bit order, with this pair.
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RsOut {
    pub size: usize,
    pub elements: Vec<RoughPairOut>,
}

/// Lattice data; element lists refer to positions in `elements`.
#[derive(Clone, Debug, Serialize)]
pub struct DmrsOut {
    pub size: usize,
    pub rs_equals_dmrs: bool,
    pub elements: Vec<PairOut>,
    pub join_irreducibles: Vec<usize>,
    pub join_primes: Vec<usize>,
    pub atoms: Vec<usize>,
    pub cover_edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessOut {
    pub kind: &'static str,
    pub elements: BTreeMap<&'static str, PairOut>,
}

impl WitnessOut {
    pub fn new(u: &Universe, w: &Witness) -> Self {
        let (kind, named): (&'static str, Vec<(&'static str, ApproxPair)>) = match *w {
            Witness::NegationOutside { x } => ("negation_outside", vec![("x", x)]),
            Witness::NotDistributive { x, y, z } => {
                ("not_distributive", vec![("x", x), ("y", y), ("z", z)])
            }
            Witness::DoubleNegation { x } => ("double_negation", vec![("x", x)]),
            Witness::DeMorganJoin { x, y } => ("de_morgan_join", vec![("x", x), ("y", y)]),
            Witness::DeMorganMeet { x, y } => ("de_morgan_meet", vec![("x", x), ("y", y)]),
            Witness::KleeneInequality { x, y } => ("kleene_inequality", vec![("x", x), ("y", y)]),
            Witness::MissingImplication { a, b } => {
                ("missing_implication", vec![("a", a), ("b", b)])
            }
            Witness::NotSpatial { x } => ("not_spatial", vec![("x", x)]),
            Witness::Interpolation { p, q } => ("interpolation", vec![("p", p), ("q", q)]),
            Witness::Stone { x } => ("stone", vec![("x", x)]),
            Witness::DualStone { x } => ("dual_stone", vec![("x", x)]),
            Witness::Regular { x, y } => ("regular", vec![("x", x), ("y", y)]),
        };
        WitnessOut {
            kind,
            elements: named
                .into_iter()
                .map(|(k, p)| (k, PairOut::new(u, p)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraOut {
    pub distributive: bool,
    pub spatial: bool,
    pub de_morgan: bool,
    pub kleene: bool,
    pub quasi_nelson: bool,
    pub nelson: bool,
    pub regular_double_stone: bool,
    /// One entry per false flag.
    pub witnesses: BTreeMap<&'static str, WitnessOut>,
}

impl AlgebraOut {
    pub fn new(u: &Universe, a: &AlgebraReport) -> Self {
        let w = &a.witnesses;
        let witnesses = [
            ("distributive", &w.distributive),
            ("spatial", &w.spatial),
            ("de_morgan", &w.de_morgan),
            ("kleene", &w.kleene),
            ("quasi_nelson", &w.quasi_nelson),
            ("nelson", &w.nelson),
            ("regular_double_stone", &w.regular_double_stone),
        ]
        .into_iter()
        .filter_map(|(k, w)| w.as_ref().map(|w| (k, WitnessOut::new(u, w))))
        .collect();
        AlgebraOut {
            distributive: a.distributive,
            spatial: a.spatial,
            de_morgan: a.de_morgan,
            kleene: a.kleene,
            quasi_nelson: a.quasi_nelson,
            nelson: a.nelson,
            regular_double_stone: a.regular_double_stone,
            witnesses,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GEntry {
    pub j: usize,
    pub g: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct KleeneOut {
    /// Negation as a permutation of DM(RS) positions.
    pub negation: Vec<usize>,
    pub g: Vec<GEntry>,
    pub j_minus: Vec<usize>,
    pub j_zero: Vec<usize>,
    pub j_plus: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NelsonTriple {
    pub x: String,
    pub y: String,
    pub u: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct NelsonConditionOut {
    pub applicable: bool,
    /// Why the condition was not evaluated.
    pub reason: Option<String>,
    pub holds: Option<bool>,
    pub witness: Option<NelsonTriple>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum CheckValueOut {
    Flag(bool),
    Pairs(Vec<PairOut>),
    Sets(Vec<Vec<String>>),
    Elements(Vec<String>),
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckOut {
    pub name: &'static str,
    pub formula: CheckValueOut,
    pub oracle: CheckValueOut,
    pub agree: bool,
}

fn check_value(u: &Universe, v: &CheckValue) -> CheckValueOut {
    match v {
        CheckValue::Flag(b) => CheckValueOut::Flag(*b),
        CheckValue::Pairs(ps) => {
            CheckValueOut::Pairs(ps.iter().map(|&p| PairOut::new(u, p)).collect())
        }
        CheckValue::Sets(ss) => CheckValueOut::Sets(ss.iter().map(|&s| u.labels_of(s)).collect()),
        CheckValue::Elements(s) => CheckValueOut::Elements(u.labels_of(*s)),
    }
}

impl CrossCheckOut {
    pub fn new(u: &Universe, c: &CrossCheck) -> Self {
        CrossCheckOut {
            name: c.name,
            formula: check_value(u, &c.formula),
            oracle: check_value(u, &c.oracle),
            agree: c.agree,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CapsOut {
    pub rs: usize,
    pub dmrs: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: &'static str,
    pub universe: Vec<String>,
    pub relation: Vec<Row>,
    pub predicates: Predicates,
    pub singletons: Vec<String>,
    pub neighbourhoods: Vec<NeighbourhoodRow>,
    pub families: Families,
    pub rs: RsOut,
    pub dmrs: Option<DmrsOut>,
    pub algebra: Option<AlgebraOut>,
    pub kleene: Option<KleeneOut>,
    pub nelson_condition: NelsonConditionOut,
    pub cross_checks: Vec<CrossCheckOut>,
    pub caps: CapsOut,
}

impl AnalysisReport {
    /// Names of cross-checks whose two sides differ.
    pub fn disagreements(&self) -> Vec<&'static str> {
        self.cross_checks
            .iter()
            .filter(|c| !c.agree)
            .map(|c| c.name)
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

fn sets(u: &Universe, ss: &[ElementSet]) -> Vec<Vec<String>> {
    ss.iter().map(|&s| u.labels_of(s)).collect()
}

fn nelson_condition(r: &Relation) -> Result<NelsonConditionOut> {
    let u = r.universe();
    match nelson_condition_violation(r) {
        Ok(w) => Ok(NelsonConditionOut {
            applicable: true,
            reason: None,
            holds: Some(w.is_none()),
            witness: w.map(|w| NelsonTriple {
                x: u.label(w.x).to_string(),
                y: u.label(w.y).to_string(),
                u: u.label(w.u).to_string(),
            }),
        }),
        Err(e @ (Error::Precondition(_) | Error::Hypothesis(_))) => Ok(NelsonConditionOut {
            applicable: false,
            reason: Some(e.to_string()),
            holds: None,
            witness: None,
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn analyze(r: &Relation, options: AnalyzeOptions) -> Result<AnalysisReport> {
    let caps = options.caps();
    let u = r.universe();
    let n = r.size();

    let (rs, fams, dmrs, algebra, kleene, cross_checks) = if options.no_dmrs {
        let rs = enumerate_rs_with_witnesses(r, caps.rs)?;
        let fams = ApproxOp::ALL.map(|op| family(r, op).members().to_vec());
        (rs, fams, None, None, None, Vec::new())
    } else {
        let base = RoughStructure::build(r, caps)?;
        let l = base.lattice();
        let fams = ApproxOp::ALL.map(|op| base.family(op).members().to_vec());
        let dmrs = DmrsOut {
            size: l.len(),
            rs_equals_dmrs: base.rs_equals_dmrs(),
            elements: base.dmrs().iter().map(|&p| PairOut::new(u, p)).collect(),
            join_irreducibles: l.join_irreducibles(),
            join_primes: l.join_primes(),
            atoms: l.atoms(),
            cover_edges: l.cover_edges().into_iter().map(|(a, b)| [a, b]).collect(),
        };
        let algebra = AlgebraOut::new(u, &AlgebraReport::compute(&base)?);
        let kleene = KleeneStructure::new(&base).ok().map(|k| {
            let part = k.partition();
            KleeneOut {
                negation: (0..l.len()).map(|i| k.negation(i)).collect(),
                g: k.g_table()
                    .into_iter()
                    .map(|(j, g)| GEntry { j, g })
                    .collect(),
                j_minus: part.minus,
                j_zero: part.zero,
                j_plus: part.plus,
            }
        });
        let checks = theorem_checks(&base)?
            .iter()
            .map(|c| CrossCheckOut::new(u, c))
            .collect();
        (
            base.rs_witnesses().to_vec(),
            fams,
            Some(dmrs),
            Some(algebra),
            kleene,
            checks,
        )
    };

    let [upper, lower, upper_inv, lower_inv] = fams;
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        universe: u.labels().to_vec(),
        relation: (0..n)
            .map(|x| Row {
                subject: u.label(x).to_string(),
                targets: u.labels_of(r.neighborhood(x)),
            })
            .collect(),
        predicates: Predicates {
            reflexive: r.is_reflexive(),
            symmetric: r.is_symmetric(),
            transitive: r.is_transitive(),
            quasiorder: r.is_quasiorder(),
            equivalence: r.is_equivalence(),
        },
        singletons: u.labels_of(r.singletons()),
        neighbourhoods: (0..n)
            .map(|x| NeighbourhoodRow {
                element: u.label(x).to_string(),
                forward: u.labels_of(r.neighborhood(x)),
                inverse: u.labels_of(r.inverse_neighborhood(x)),
                core: u.labels_of(r.core(x)),
                inverse_core: u.labels_of(r.inverse_core(x)),
            })
            .collect(),
        families: Families {
            upper: sets(u, &upper),
            lower: sets(u, &lower),
            upper_inv: sets(u, &upper_inv),
            lower_inv: sets(u, &lower_inv),
        },
        rs: RsOut {
            size: rs.len(),
            elements: rs
                .iter()
                .map(|&(p, x)| RoughPairOut {
                    lower: u.labels_of(p.lower),
                    upper: u.labels_of(p.upper),
                    witness: u.labels_of(x),
                })
                .collect(),
        },
        dmrs,
        algebra,
        kleene,
        nelson_condition: nelson_condition(r)?,
        cross_checks,
        caps: CapsOut {
            rs: caps.rs,
            dmrs: caps.dmrs,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use roughdm::fixtures::{non_nelson_example, stone_example, tolerance_example};

    #[test]
    fn stone_report() {
        let rep = analyze(&stone_example(), AnalyzeOptions::default()).unwrap();
        let a = rep.algebra.as_ref().unwrap();
        assert!(a.kleene && a.nelson && a.regular_double_stone);
        assert!(a.witnesses.is_empty());
        assert_eq!(rep.dmrs.as_ref().unwrap().size, 6);
        assert!(rep.disagreements().is_empty());
    }

    #[test]
    fn non_nelson_report() {
        let rep = analyze(&non_nelson_example(), AnalyzeOptions::default()).unwrap();
        let a = rep.algebra.as_ref().unwrap();
        assert!(a.kleene && !a.nelson);
        assert_eq!(a.witnesses["nelson"].kind, "interpolation");
        let w = rep.nelson_condition.witness.as_ref().unwrap();
        assert_eq!((w.x.as_str(), w.y.as_str(), w.u.as_str()), ("2", "4", "1"));
        assert_eq!(rep.rs.size, 10);
    }

    #[test]
    fn tolerance_report() {
        let rep = analyze(&tolerance_example(), AnalyzeOptions::default()).unwrap();
        let a = rep.algebra.as_ref().unwrap();
        assert!(!a.distributive && !a.kleene);
        assert_eq!(a.witnesses["distributive"].kind, "not_distributive");
        assert!(rep.kleene.is_none());
        assert!(!rep.nelson_condition.applicable);
    }

    #[test]
    fn without_dmrs() {
        let opts = AnalyzeOptions {
            no_dmrs: true,
            ..Default::default()
        };
        let rep = analyze(&stone_example(), opts).unwrap();
        assert!(rep.dmrs.is_none() && rep.algebra.is_none() && rep.cross_checks.is_empty());
        assert_eq!(rep.rs.size, 6);
        assert_eq!(rep.families.upper.len(), 4);
    }

    #[test]
    fn max_n_sets_both_caps() {
        let opts = AnalyzeOptions {
            max_n: Some(2),
            no_dmrs: false,
        };
        let err = analyze(&stone_example(), opts).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
