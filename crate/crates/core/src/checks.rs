//! Every closed-form statement about a relation evaluated next to the value
//! computed directly on the lattices.

use crate::algebras::{
    cores_nonempty_sufficient, join_prime_sides, neighbourhoods_are_prime_unions,
    nelson_characterization, phi_psi, spatial_cd_criterion, KleeneStructure,
};
use crate::approximations::{family, generator_join_irreducible, ApproxOp};
use crate::error::Result;
use crate::relations::Relation;
use crate::roughsets::{ApproxPair, Caps, RoughStructure, TheoremCheck};
use crate::set::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckValue {
    Flag(bool),
    Pairs(Vec<ApproxPair>),
    Sets(Vec<ElementSet>),
    Elements(ElementSet),
}

/// One statement: the formula side, the lattice side, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub name: &'static str,
    pub formula: CheckValue,
    pub oracle: CheckValue,
    pub agree: bool,
}

impl CrossCheck {
    fn flags(name: &'static str, formula: bool, oracle: bool) -> Self {
        CrossCheck {
            name,
            formula: CheckValue::Flag(formula),
            oracle: CheckValue::Flag(oracle),
            agree: formula == oracle,
        }
    }

    fn holds(name: &'static str, oracle: bool) -> Self {
        Self::flags(name, true, oracle)
    }

    fn pairs(name: &'static str, t: TheoremCheck) -> Self {
        CrossCheck {
            name,
            agree: t.agree,
            formula: CheckValue::Pairs(t.formula),
            oracle: CheckValue::Pairs(t.oracle),
        }
    }

    fn sets(name: &'static str, mut formula: Vec<ElementSet>, mut oracle: Vec<ElementSet>) -> Self {
        for v in [&mut formula, &mut oracle] {
            v.sort_by_key(|s| s.sort_key());
            v.dedup();
        }
        CrossCheck {
            name,
            agree: formula == oracle,
            formula: CheckValue::Sets(formula),
            oracle: CheckValue::Sets(oracle),
        }
    }
}

/// The five properties of neighbourhood cores.
pub fn core_properties_hold(r: &Relation) -> bool {
    let n = r.size();
    let inv = r.inverse();
    let reflexive = r.is_reflexive();
    (0..n).all(|x| {
        let rx = r.neighborhood(x);
        let cx = r.core(x);
        let same_neighbourhood = (0..n).all(|y| r.neighborhood(y) != rx || r.core(y) == cx);
        let by_inverse = (0..n).all(|w| {
            let alt = rx.contains(w)
                && rx.iter().all(|z| {
                    r.inverse_neighborhood(w)
                        .is_subset(r.inverse_neighborhood(z))
                });
            cx.contains(w) == alt
        });
        let first = cx.first().map(|y| r.inverse_neighborhood(y));
        let equal_inverse = cx.iter().all(|y| Some(r.inverse_neighborhood(y)) == first);
        let transposed = cx.iter().all(|y| inv.core(y).contains(x));
        let grows = !reflexive || cx.iter().all(|y| rx.is_subset(r.neighborhood(y)));
        same_neighbourhood && by_inverse && equal_inverse && transposed && grows
    })
}

fn join_prime_checks(
    r: &Relation,
    name: &'static str,
    sets_name: &'static str,
) -> Result<[CrossCheck; 2]> {
    let sides = join_prime_sides(r)?;
    let collect =
        |f: &dyn Fn(usize) -> bool| -> ElementSet { (0..r.size()).filter(|&x| f(x)).collect() };
    let core = collect(&|x| sides[x].core);
    let lattice = collect(&|x| sides[x].lattice);
    let union = collect(&|x| sides[x].union);
    let three_way = CrossCheck {
        name,
        formula: CheckValue::Elements(core),
        oracle: CheckValue::Elements(lattice),
        agree: core == lattice && lattice == union,
    };
    let fam = family(r, ApproxOp::UpperInv);
    let lat = fam.lattice()?;
    let primes: Vec<ElementSet> = lat
        .join_primes()
        .into_iter()
        .map(|i| *lat.element(i))
        .collect();
    let with_core: Vec<ElementSet> = core.iter().map(|x| r.neighborhood(x)).collect();
    Ok([three_way, CrossCheck::sets(sets_name, with_core, primes)])
}

/// All cross-checks that apply to the relation of `base`. Statements that
/// assume reflexivity or a Kleene structure are skipped when their
/// hypotheses fail.
pub fn theorem_checks(base: &RoughStructure) -> Result<Vec<CrossCheck>> {
    let r = base.relation();
    let l = base.lattice();
    let mut out = vec![
        CrossCheck::holds(
            "rs_inside_dmrs",
            base.rs().all(|p| base.index_of(p).is_some()),
        ),
        CrossCheck::holds("subdirect_product", base.subdirect_check()),
        CrossCheck::holds("core_properties", core_properties_hold(r)),
        CrossCheck::holds("phi_psi_dual_isomorphism", phi_psi(r).is_ok()),
    ];
    out.extend(join_prime_checks(
        r,
        "join_prime_three_way",
        "join_primes_upper_inv",
    )?);
    out.extend(join_prime_checks(
        &r.inverse(),
        "join_prime_three_way_inverse",
        "join_primes_upper",
    )?);
    if !r.is_reflexive() {
        return Ok(out);
    }

    out.push(CrossCheck::pairs(
        "join_irreducibles",
        base.theorem_join_irreducibles()?,
    ));
    out.push(CrossCheck::pairs("atoms", base.theorem_atoms()?));
    out.push(CrossCheck::holds(
        "decomposition",
        base.decomposition_check()?,
    ));

    let s = base.singletons();
    let fwd = r.neighborhoods();
    let bwd = r.inverse_neighborhoods();
    out.push(CrossCheck::holds(
        "singleton_join_irreducibles",
        s.iter().all(|x| {
            fwd[x] == ElementSet::singleton(x)
                && generator_join_irreducible(fwd, x)
                && generator_join_irreducible(bwd, x)
        }),
    ));

    let dm_distributive = l.is_distributive();
    let dm_spatial = l.is_spatial();
    let fams: Vec<_> = ApproxOp::ALL
        .iter()
        .map(|&op| base.family(op).lattice())
        .collect::<Result<_>>()?;
    for (op, fl) in ApproxOp::ALL.iter().zip(&fams) {
        let name = match op {
            ApproxOp::Upper => "distributive_upper",
            ApproxOp::Lower => "distributive_lower",
            ApproxOp::UpperInv => "distributive_upper_inv",
            ApproxOp::LowerInv => "distributive_lower_inv",
        };
        out.push(CrossCheck::flags(
            name,
            fl.is_distributive(),
            dm_distributive,
        ));
    }
    out.push(CrossCheck::flags(
        "spatial",
        fams[0].is_spatial() && fams[2].is_spatial(),
        dm_spatial,
    ));
    out.push(CrossCheck::flags(
        "spatial_cd_criterion",
        spatial_cd_criterion(r),
        dm_distributive && dm_spatial,
    ));
    out.push(CrossCheck::flags(
        "prime_unions_upper_inv",
        neighbourhoods_are_prime_unions(r),
        fams[2].is_distributive() && fams[2].is_spatial(),
    ));

    let n = r.size();
    let inverse = RoughStructure::build(&r.inverse(), Caps::uniform(n))?;
    out.push(CrossCheck::flags(
        "inverse_distributive",
        inverse.lattice().is_distributive(),
        dm_distributive,
    ));
    out.push(CrossCheck::flags(
        "inverse_spatial",
        inverse.lattice().is_spatial(),
        dm_spatial,
    ));

    let Ok(k) = KleeneStructure::new(base) else {
        return Ok(out);
    };
    let [minus, zero, plus] = k.partition_closed_forms()?;
    out.push(CrossCheck::pairs("partition_minus", minus));
    out.push(CrossCheck::pairs("partition_zero", zero));
    out.push(CrossCheck::pairs("partition_plus", plus));
    out.push(CrossCheck::pairs(
        "minus_below_negation",
        k.minus_by_negation(),
    ));
    out.push(CrossCheck::holds("g_laws", k.g_laws_hold()));

    let mut recomputed = Vec::new();
    let mut direct = Vec::new();
    let mut clean = true;
    for &j in &k.partition().minus {
        let w = k.g_core_witness(j)?;
        clean &= w.discrepancies.is_empty();
        recomputed.extend(w.recomputed);
        direct.push(w.g);
    }
    let mut g_core = CrossCheck::pairs("g_from_core", TheoremCheck::new(recomputed, direct));
    g_core.agree &= clean;
    out.push(g_core);

    out.push(CrossCheck::holds(
        "pre_interpolation",
        k.pre_interpolation_holds()?,
    ));
    if spatial_cd_criterion(r) {
        out.push(CrossCheck::flags(
            "nelson_condition",
            nelson_characterization(r)?,
            k.interpolation_property(),
        ));
    }
    if cores_nonempty_sufficient(r) {
        out.push(CrossCheck::holds(
            "nonempty_cores_give_nelson",
            k.interpolation_property(),
        ));
    }
    Ok(out)
}

/// Names of failing checks.
pub fn disagreements(checks: &[CrossCheck]) -> Vec<&'static str> {
    checks.iter().filter(|c| !c.agree).map(|c| c.name).collect()
}
