//! Parsing, report assembly and rendering behind the `roughdm` binary.

pub mod document;
pub mod dot;
pub mod error;
pub mod report;

use std::collections::{BTreeMap, BTreeSet};

use roughdm::algebras::AlgebraReport;
use roughdm::checks::theorem_checks;
use roughdm::order::{FinitePoset, MAX_LATTICE_SIZE};
use roughdm::relations::Relation;
use roughdm::roughsets::{enumerate_rs, Caps, RoughStructure};
use serde::Serialize;

pub use document::RelationDocument;
pub use error::{CliError, Result};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};

use report::{AlgebraOut, CheckValueOut, PairOut, WitnessOut, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Nelson,
    Kleene,
    Stone,
    Distributive,
    Spatial,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Nelson,
        Property::Kleene,
        Property::Stone,
        Property::Distributive,
        Property::Spatial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Nelson => "nelson",
            Property::Kleene => "kleene",
            Property::Stone => "stone",
            Property::Distributive => "distributive",
            Property::Spatial => "spatial",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyVerdict {
    pub property: &'static str,
    pub holds: bool,
    pub witness: Option<WitnessOut>,
}

pub fn check_property(r: &Relation, property: Property, caps: Caps) -> Result<PropertyVerdict> {
    let base = RoughStructure::build(r, caps)?;
    let a = AlgebraReport::compute(&base)?;
    let w = &a.witnesses;
    let witness = match property {
        Property::Nelson => &w.nelson,
        Property::Kleene => &w.kleene,
        Property::Stone => &w.regular_double_stone,
        Property::Distributive => &w.distributive,
        Property::Spatial => &w.spatial,
    };
    Ok(PropertyVerdict {
        property: property.name(),
        holds: witness.is_none(),
        witness: witness.as_ref().map(|w| WitnessOut::new(r.universe(), w)),
    })
}

/// Lattice-side values only: brute-force order computations and the
/// completion of RS by cuts, with no closed-form formula evaluated.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub schema_version: &'static str,
    pub universe: Vec<String>,
    pub rs_size: usize,
    /// Number of cuts of the RS poset.
    pub cut_completion_size: usize,
    pub dmrs_size: usize,
    pub join_irreducibles: Vec<PairOut>,
    pub join_primes: Vec<PairOut>,
    pub atoms: Vec<PairOut>,
    pub algebra: AlgebraOut,
    pub values: BTreeMap<&'static str, CheckValueOut>,
}

/// Sets `{x : x ≤ b for all b ∈ B}` over all subsets `B`, computed as
/// intersections of principal down-sets.
pub fn cut_completion_size<T>(poset: &FinitePoset<T>) -> Result<usize> {
    let m = poset.len();
    let principal: Vec<Vec<usize>> = (0..m)
        .map(|b| (0..m).filter(|&x| poset.leq(x, b)).collect())
        .collect();
    let mut cuts: BTreeSet<Vec<usize>> = BTreeSet::new();
    cuts.insert((0..m).collect());
    let mut frontier: Vec<Vec<usize>> = cuts.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        for p in &principal {
            let next: Vec<usize> = c
                .iter()
                .copied()
                .filter(|x| p.binary_search(x).is_ok())
                .collect();
            if cuts.insert(next.clone()) {
                if cuts.len() > MAX_LATTICE_SIZE {
                    return Err(roughdm::error::Error::Capacity {
                        stage: "cut completion",
                        size: cuts.len(),
                        cap: MAX_LATTICE_SIZE,
                    }
                    .into());
                }
                frontier.push(next);
            }
        }
    }
    Ok(cuts.len())
}

pub fn oracle(r: &Relation, caps: Caps) -> Result<OracleReport> {
    let u = r.universe();
    let rs = enumerate_rs(r, caps.rs)?;
    let rs_size = rs.len();
    let cut_completion_size = cut_completion_size(&FinitePoset::from_pairs(rs)?)?;
    let base = RoughStructure::build(r, caps)?;
    let l = base.lattice();
    let pairs = |idx: Vec<usize>| -> Vec<PairOut> {
        idx.into_iter()
            .map(|i| PairOut::new(u, base.pair(i)))
            .collect()
    };
    let values = theorem_checks(&base)?
        .iter()
        .map(|c| (c.name, report::CrossCheckOut::new(u, c).oracle))
        .collect();
    Ok(OracleReport {
        schema_version: SCHEMA_VERSION,
        universe: u.labels().to_vec(),
        rs_size,
        cut_completion_size,
        dmrs_size: l.len(),
        join_irreducibles: pairs(l.join_irreducibles()),
        join_primes: pairs(l.join_primes()),
        atoms: pairs(l.atoms()),
        algebra: AlgebraOut::new(u, &AlgebraReport::compute(&base)?),
        values,
    })
}
