//! Rough sets, their completion DM(RS), and the structural cross-checks
//! relating neighbourhood-level formulas to the enumerated lattice.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::approximations::{
    family, generator_atom, generator_join_irreducible, lower, lower_inv, upper, upper_inv,
    ApproxOp, SetFamily,
};
use crate::error::{Error, Result};
use crate::order::{FiniteLattice, FinitePoset};
use crate::relations::Relation;
use crate::set::{all_subsets, ElementSet};

/// Default universe cap for families and RS.
pub const DEFAULT_RS_CAP: usize = 16;
/// Default universe cap for DM(RS).
pub const DEFAULT_DMRS_CAP: usize = 12;

/// A pair `(A, B)` of a lower and an upper set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ApproxPair {
    pub lower: ElementSet,
    pub upper: ElementSet,
}

impl ApproxPair {
    pub const fn new(lower: ElementSet, upper: ElementSet) -> Self {
        ApproxPair { lower, upper }
    }

    /// Coordinatewise inclusion.
    pub fn leq(&self, other: &ApproxPair) -> bool {
        self.lower.is_subset(other.lower) && self.upper.is_subset(other.upper)
    }
}

impl Ord for ApproxPair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lower.sort_key(), self.upper.sort_key())
            .cmp(&(other.lower.sort_key(), other.upper.sort_key()))
    }
}

impl PartialOrd for ApproxPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ApproxPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.lower, self.upper)
    }
}

impl FinitePoset<ApproxPair> {
    /// Pairs ordered coordinatewise.
    pub fn from_pairs(pairs: Vec<ApproxPair>) -> Result<Self> {
        Self::new(pairs, ApproxPair::leq)
    }
}

impl FiniteLattice<ApproxPair> {
    pub fn from_pairs(pairs: Vec<ApproxPair>) -> Result<Self> {
        Self::from_poset(FinitePoset::from_pairs(pairs)?)
    }
}

/// Universe-size limits for the exponential stages.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub rs: usize,
    pub dmrs: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            rs: DEFAULT_RS_CAP,
            dmrs: DEFAULT_DMRS_CAP,
        }
    }
}

impl Caps {
    /// The same limit for every stage.
    pub fn uniform(n: usize) -> Self {
        Caps { rs: n, dmrs: n }
    }
}

fn check_cap(stage: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::Capacity { stage, size, cap });
    }
    Ok(())
}

fn require_reflexive(r: &Relation, what: &str) -> Result<()> {
    if r.is_reflexive() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} requires a reflexive relation"
        )))
    }
}

/// `(X^▼, X^▲)`.
pub fn rough_pair(r: &Relation, x: ElementSet) -> ApproxPair {
    ApproxPair::new(lower(r, x), upper(r, x))
}

pub fn rough_equal(r: &Relation, x: ElementSet, y: ElementSet) -> bool {
    rough_pair(r, x) == rough_pair(r, y)
}

/// Distinct rough pairs with the first subset (in bit-pattern order) that
/// produced each. The witness is not canonical.
pub fn enumerate_rs_with_witnesses(
    r: &Relation,
    cap: usize,
) -> Result<Vec<(ApproxPair, ElementSet)>> {
    check_cap("RS enumeration", r.size(), cap)?;
    let mut first: HashMap<ApproxPair, ElementSet> = HashMap::new();
    for x in all_subsets(r.size()) {
        first.entry(rough_pair(r, x)).or_insert(x);
    }
    let mut out: Vec<_> = first.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `RS = {(X^▼, X^▲) : X ⊆ U}` in pair order.
pub fn enumerate_rs(r: &Relation, cap: usize) -> Result<Vec<ApproxPair>> {
    Ok(enumerate_rs_with_witnesses(r, cap)?
        .into_iter()
        .map(|(p, _)| p)
        .collect())
}

/// Membership in DM(RS): `A ∈ ℘(U)^▼`, `B ∈ ℘(U)^▲`, `A^{△▲} ⊆ B` and
/// `A ∩ S = B ∩ S`.
pub fn is_dm_member(r: &Relation, p: ApproxPair) -> bool {
    let s = r.singletons();
    lower(r, upper_inv(r, p.lower)) == p.lower
        && upper(r, lower_inv(r, p.upper)) == p.upper
        && upper(r, upper_inv(r, p.lower)).is_subset(p.upper)
        && p.lower.intersection(s) == p.upper.intersection(s)
}

/// DM(RS) by filtering `℘(U)^▼ × ℘(U)^▲`, in pair order.
pub fn enumerate_dmrs_pairs(r: &Relation, cap: usize) -> Result<Vec<ApproxPair>> {
    check_cap("DM(RS) enumeration", r.size(), cap)?;
    let lowers = family(r, ApproxOp::Lower);
    let uppers = family(r, ApproxOp::Upper);
    Ok(dm_filter(r, &lowers, &uppers))
}

fn dm_filter(r: &Relation, lowers: &SetFamily, uppers: &SetFamily) -> Vec<ApproxPair> {
    let s = r.singletons();
    let mut out = Vec::new();
    for &a in lowers.members() {
        let closure = upper(r, upper_inv(r, a));
        let a_s = a.intersection(s);
        for &b in uppers.members() {
            if closure.is_subset(b) && b.intersection(s) == a_s {
                out.push(ApproxPair::new(a, b));
            }
        }
    }
    out.sort();
    out
}

/// `((⋃Aᵢ)^{△▼}, ⋃Bᵢ)`.
pub fn dm_join<'a, I>(r: &Relation, pairs: I) -> ApproxPair
where
    I: IntoIterator<Item = &'a ApproxPair>,
{
    let (a, b) = pairs
        .into_iter()
        .fold((ElementSet::EMPTY, ElementSet::EMPTY), |(a, b), p| {
            (a.union(p.lower), b.union(p.upper))
        });
    ApproxPair::new(lower(r, upper_inv(r, a)), b)
}

/// `(⋂Aᵢ, (⋂Bᵢ)^{▽▲})`.
pub fn dm_meet<'a, I>(r: &Relation, pairs: I) -> ApproxPair
where
    I: IntoIterator<Item = &'a ApproxPair>,
{
    let full = r.full_set();
    let (a, b) = pairs.into_iter().fold((full, full), |(a, b), p| {
        (a.intersection(p.lower), b.intersection(p.upper))
    });
    ApproxPair::new(a, upper(r, lower_inv(r, b)))
}

/// Generators of a DM(RS) element and whether their join gives it back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `({a}^{△▼}, {a}^{△▲})` for `a ∈ A`.
    pub from_lower: Vec<ApproxPair>,
    /// `({b}^▼, {b}^▲)` for `b ∈ B^▽`.
    pub from_upper: Vec<ApproxPair>,
    pub verified: bool,
}

pub fn decompose(r: &Relation, p: ApproxPair) -> Result<Decomposition> {
    require_reflexive(r, "decomposition")?;
    if !is_dm_member(r, p) {
        return Err(Error::Precondition(format!("{p:?} is not in DM(RS)")));
    }
    let from_lower: Vec<_> = p
        .lower
        .iter()
        .map(|a| {
            let ra = r.neighborhood(a);
            ApproxPair::new(lower(r, ra), upper(r, ra))
        })
        .collect();
    let from_upper: Vec<_> = lower_inv(r, p.upper)
        .iter()
        .map(|b| rough_pair(r, ElementSet::singleton(b)))
        .collect();
    let verified = dm_join(r, from_lower.iter().chain(&from_upper)) == p;
    Ok(Decomposition {
        from_lower,
        from_upper,
        verified,
    })
}

/// A closed-form set next to the value read off the lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub formula: Vec<ApproxPair>,
    pub oracle: Vec<ApproxPair>,
    pub agree: bool,
}

impl TheoremCheck {
    pub fn new(
        formula: impl IntoIterator<Item = ApproxPair>,
        oracle: impl IntoIterator<Item = ApproxPair>,
    ) -> Self {
        let formula: Vec<_> = formula
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let oracle: Vec<_> = oracle
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let agree = formula == oracle;
        TheoremCheck {
            formula,
            oracle,
            agree,
        }
    }
}

/// Families, RS and the DM(RS) lattice of one relation.
#[derive(Clone, Debug)]
pub struct RoughStructure {
    relation: Relation,
    singletons: ElementSet,
    families: [SetFamily; 4],
    rs: Vec<(ApproxPair, ElementSet)>,
    lattice: FiniteLattice<ApproxPair>,
}

impl RoughStructure {
    pub fn build(r: &Relation, caps: Caps) -> Result<Self> {
        let rs = enumerate_rs_with_witnesses(r, caps.rs)?;
        check_cap("DM(RS) enumeration", r.size(), caps.dmrs)?;
        let families = ApproxOp::ALL.map(|op| family(r, op));
        let dmrs = dm_filter(r, &families[1], &families[0]);
        let lattice = FiniteLattice::from_pairs(dmrs)?;
        Ok(RoughStructure {
            relation: r.clone(),
            singletons: r.singletons(),
            families,
            rs,
            lattice,
        })
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn singletons(&self) -> ElementSet {
        self.singletons
    }

    pub fn family(&self, op: ApproxOp) -> &SetFamily {
        let i = ApproxOp::ALL.iter().position(|&o| o == op).unwrap();
        &self.families[i]
    }

    pub fn rs(&self) -> impl Iterator<Item = ApproxPair> + '_ {
        self.rs.iter().map(|(p, _)| *p)
    }

    /// RS pairs with the first subset producing each.
    pub fn rs_witnesses(&self) -> &[(ApproxPair, ElementSet)] {
        &self.rs
    }

    pub fn rs_len(&self) -> usize {
        self.rs.len()
    }

    /// DM(RS) in pair order; lattice index `i` is `dmrs()[i]`.
    pub fn dmrs(&self) -> &[ApproxPair] {
        self.lattice.elements()
    }

    pub fn lattice(&self) -> &FiniteLattice<ApproxPair> {
        &self.lattice
    }

    pub fn index_of(&self, p: ApproxPair) -> Option<usize> {
        self.lattice.poset().index_of(&p)
    }

    pub fn pair(&self, i: usize) -> ApproxPair {
        *self.lattice.element(i)
    }

    pub fn pairs_of(&self, idx: &[usize]) -> Vec<ApproxPair> {
        idx.iter().map(|&i| self.pair(i)).collect()
    }

    pub fn rs_equals_dmrs(&self) -> bool {
        self.rs.len() == self.dmrs().len() && self.rs().all(|p| self.index_of(p).is_some())
    }

    /// Join-irreducibles of DM(RS) from neighbourhoods against the lattice.
    pub fn theorem_join_irreducibles(&self) -> Result<TheoremCheck> {
        let r = &self.relation;
        require_reflexive(r, "the join-irreducible formula")?;
        let fwd = r.neighborhoods();
        let bwd = r.inverse_neighborhoods();
        let mut formula = Vec::new();
        for x in 0..r.size() {
            if generator_join_irreducible(fwd, x) {
                formula.push(ApproxPair::new(lower(r, fwd[x]), upper(r, fwd[x])));
            }
            if !self.singletons.contains(x) && generator_join_irreducible(bwd, x) {
                formula.push(ApproxPair::new(ElementSet::EMPTY, bwd[x]));
            }
        }
        let oracle = self.pairs_of(&self.lattice.join_irreducibles());
        Ok(TheoremCheck::new(formula, oracle))
    }

    /// Atoms of DM(RS) from atoms of `℘(U)^▲` against the lattice.
    pub fn theorem_atoms(&self) -> Result<TheoremCheck> {
        let r = &self.relation;
        require_reflexive(r, "the atom formula")?;
        let bwd = r.inverse_neighborhoods();
        let formula = (0..r.size())
            .filter(|&x| generator_atom(bwd, x))
            .map(|x| rough_pair(r, ElementSet::singleton(x)));
        let oracle = self.pairs_of(&self.lattice.atoms());
        Ok(TheoremCheck::new(formula, oracle))
    }

    /// DM(RS) is closed under the join and meet formulas (all pairs and the
    /// empty family) and projects onto `℘(U)^▼` and `℘(U)^▲`.
    pub fn subdirect_check(&self) -> bool {
        let r = &self.relation;
        let dm = self.dmrs();
        let closed = |p: ApproxPair| self.index_of(p).is_some();
        let empty = std::iter::empty::<&ApproxPair>;
        if !closed(dm_join(r, empty())) || !closed(dm_meet(r, empty())) {
            return false;
        }
        for (i, p) in dm.iter().enumerate() {
            for q in &dm[i + 1..] {
                if !closed(dm_join(r, [p, q])) || !closed(dm_meet(r, [p, q])) {
                    return false;
                }
            }
        }
        let lowers: BTreeSet<_> = dm.iter().map(|p| p.lower).collect();
        let uppers: BTreeSet<_> = dm.iter().map(|p| p.upper).collect();
        let onto = |fam: &SetFamily, proj: &BTreeSet<ElementSet>| {
            fam.len() == proj.len() && fam.members().iter().all(|s| proj.contains(s))
        };
        onto(self.family(ApproxOp::Lower), &lowers) && onto(self.family(ApproxOp::Upper), &uppers)
    }

    /// Every DM(RS) element rebuilt from its generators.
    pub fn decomposition_check(&self) -> Result<bool> {
        for &p in self.dmrs() {
            if !decompose(&self.relation, p)?.verified {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{non_nelson_example, stone_example, tolerance_example};
    use crate::order::{are_isomorphic, chain, product};
    use crate::random;
    use crate::set::Universe;
    use fixedbitset::FixedBitSet;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(r: &Relation, labels: &[&str]) -> ElementSet {
        r.universe().set_of(labels.iter().copied()).unwrap()
    }

    fn p(r: &Relation, a: &[&str], b: &[&str]) -> ApproxPair {
        ApproxPair::new(s(r, a), s(r, b))
    }

    fn build(r: &Relation) -> RoughStructure {
        RoughStructure::build(r, Caps::default()).unwrap()
    }

    #[test]
    fn rough_pairs() {
        let rb = non_nelson_example();
        assert_eq!(
            rough_pair(&rb, s(&rb, &["2", "4"])),
            p(&rb, &[], &["1", "2", "4"])
        );
        assert_eq!(
            rough_pair(&rb, s(&rb, &["1", "3", "4"])),
            p(&rb, &["3", "4"], &["1", "2", "3", "4"])
        );
        let ra = stone_example();
        assert_eq!(rough_pair(&ra, s(&ra, &["2"])), p(&ra, &["2"], &["1", "2"]));
        assert_eq!(rough_pair(&ra, ElementSet::EMPTY), ApproxPair::default());
        assert!(rough_equal(&ra, s(&ra, &["1"]), s(&ra, &["3"])));
        assert!(!rough_equal(&ra, s(&ra, &["2"]), s(&ra, &["1"])));
    }

    #[test]
    fn stone_example_structure() {
        let r = stone_example();
        let st = build(&r);
        let expected = vec![
            p(&r, &[], &[]),
            p(&r, &[], &["1", "3"]),
            p(&r, &["2"], &["1", "2"]),
            p(&r, &["3"], &["1", "3"]),
            p(&r, &["2"], &["1", "2", "3"]),
            p(&r, &["1", "2", "3"], &["1", "2", "3"]),
        ];
        let got: BTreeSet<_> = st.dmrs().iter().copied().collect();
        assert_eq!(got, expected.into_iter().collect());
        assert!(st.rs_equals_dmrs());
        let two_by_three = product(&chain(2).unwrap(), &chain(3).unwrap()).unwrap();
        assert!(are_isomorphic(st.lattice(), &two_by_three).unwrap());

        let ji = st.theorem_join_irreducibles().unwrap();
        assert!(ji.agree);
        assert_eq!(
            ji.oracle,
            vec![
                p(&r, &[], &["1", "3"]),
                p(&r, &["2"], &["1", "2"]),
                p(&r, &["3"], &["1", "3"])
            ]
        );
        let atoms = st.theorem_atoms().unwrap();
        assert!(atoms.agree);
        assert_eq!(
            atoms.oracle,
            vec![p(&r, &[], &["1", "3"]), p(&r, &["2"], &["1", "2"])]
        );
        assert!(st.subdirect_check());
        assert!(
            decompose(&r, p(&r, &["2"], &["1", "2", "3"]))
                .unwrap()
                .verified
        );
    }

    #[test]
    fn non_nelson_structure() {
        let r = non_nelson_example();
        let st = build(&r);
        // ten elements: the down-sets of its five join-irreducibles
        assert_eq!(st.rs_len(), 10);
        assert_eq!(st.dmrs().len(), 10);
        assert!(st.rs_equals_dmrs());
        let u = ["1", "2", "3", "4"];
        assert_eq!(
            dm_join(&r, &[p(&r, &[], &["4"]), p(&r, &[], &["1", "2"])]),
            p(&r, &[], &["1", "2", "4"])
        );
        assert_eq!(
            dm_meet(&r, &[p(&r, &["3", "4"], &u), p(&r, &["1", "2", "3"], &u)]),
            p(&r, &["3"], &u)
        );
        let ji = st.theorem_join_irreducibles().unwrap();
        assert!(ji.agree);
        let expected: BTreeSet<_> = [
            p(&r, &["1"], &["1", "2", "4"]),
            p(&r, &["3"], &["2", "3", "4"]),
            p(&r, &["3", "4"], &u),
            p(&r, &[], &["1", "2"]),
            p(&r, &[], &["4"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(ji.oracle.iter().copied().collect::<BTreeSet<_>>(), expected);
        let atoms = st.theorem_atoms().unwrap();
        assert!(atoms.agree);
        assert_eq!(
            atoms.oracle,
            vec![p(&r, &[], &["4"]), p(&r, &[], &["1", "2"])]
        );
        let d = decompose(&r, p(&r, &["3"], &u)).unwrap();
        assert!(d.verified);
        let d0 = decompose(&r, ApproxPair::default()).unwrap();
        assert!(d0.from_lower.is_empty() && d0.from_upper.is_empty() && d0.verified);
        assert!(decompose(&r, p(&r, &["1"], &["1"])).is_err());
    }

    #[test]
    fn empty_join_and_meet_are_bounds() {
        let r = non_nelson_example();
        let none: [ApproxPair; 0] = [];
        assert_eq!(dm_join(&r, &none), ApproxPair::default());
        assert_eq!(
            dm_meet(&r, &none),
            ApproxPair::new(r.full_set(), r.full_set())
        );
    }

    #[test]
    fn identity_relation() {
        let r = Relation::identity(Universe::new(["a", "b"]).unwrap());
        let rs = enumerate_rs(&r, 16).unwrap();
        assert_eq!(rs.len(), 4);
        assert!(rs.iter().all(|q| q.lower == q.upper));
        let st = build(&r);
        let ji = st.theorem_join_irreducibles().unwrap();
        assert!(ji.agree);
        assert_eq!(
            ji.oracle,
            vec![p(&r, &["a"], &["a"]), p(&r, &["b"], &["b"])]
        );
    }

    #[test]
    fn full_relation_has_single_atom() {
        let r = Relation::full(Universe::new(["a", "b"]).unwrap());
        let st = build(&r);
        let atoms = st.theorem_atoms().unwrap();
        assert!(atoms.agree);
        assert_eq!(atoms.oracle, vec![p(&r, &[], &["a", "b"])]);
    }

    #[test]
    fn tolerance_structure_is_consistent() {
        let r = tolerance_example();
        let st = build(&r);
        assert!(st.theorem_join_irreducibles().unwrap().agree);
        assert!(st.theorem_atoms().unwrap().agree);
        assert!(st.subdirect_check());
    }

    #[test]
    fn caps_are_enforced() {
        let r = Relation::identity(Universe::numbered(5).unwrap());
        assert!(matches!(enumerate_rs(&r, 4), Err(Error::Capacity { .. })));
        assert!(matches!(
            RoughStructure::build(&r, Caps { rs: 16, dmrs: 4 }),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn reflexive_only_checks_refuse() {
        let u = Universe::numbered(2).unwrap();
        let r = Relation::from_pairs(u, [(0, 1)]).unwrap();
        let st = build(&r);
        assert!(matches!(
            st.theorem_join_irreducibles(),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(st.theorem_atoms(), Err(Error::Precondition(_))));
        assert!(matches!(
            decompose(&r, ApproxPair::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn witnesses_reproduce_their_pairs() {
        let r = non_nelson_example();
        for (pair, x) in enumerate_rs_with_witnesses(&r, 16).unwrap() {
            assert_eq!(rough_pair(&r, x), pair);
        }
    }

    /// Lattice of cuts of RS: intersections of principal down-sets, as
    /// bitsets over RS indices.
    fn cut_completion(rs: &[ApproxPair]) -> Vec<FixedBitSet> {
        let m = rs.len();
        let principal: Vec<FixedBitSet> = rs
            .iter()
            .map(|q| {
                let mut b = FixedBitSet::with_capacity(m);
                for (i, o) in rs.iter().enumerate() {
                    if o.leq(q) {
                        b.insert(i);
                    }
                }
                b
            })
            .collect();
        let mut full = FixedBitSet::with_capacity(m);
        full.insert_range(..);
        let mut cuts = vec![full];
        let mut seen: std::collections::HashSet<FixedBitSet> = cuts.iter().cloned().collect();
        let mut i = 0;
        while i < cuts.len() {
            for d in &principal {
                let c = &cuts[i] & d;
                if seen.insert(c.clone()) {
                    cuts.push(c);
                }
            }
            i += 1;
        }
        cuts
    }

    /// DM(RS) against the generic cut completion of the RS poset: the map
    /// `(A,B) ↦ {q ∈ RS : q ≤ (A,B)}` must be an order isomorphism onto the
    /// cuts.
    fn matches_cut_completion(r: &Relation) -> bool {
        let st = build(r);
        let rs: Vec<ApproxPair> = st.rs().collect();
        let cuts = cut_completion(&rs);
        if cuts.len() != st.dmrs().len() {
            return false;
        }
        let cut_set: std::collections::HashSet<_> = cuts.into_iter().collect();
        let image: Vec<FixedBitSet> = st
            .dmrs()
            .iter()
            .map(|d| {
                let mut b = FixedBitSet::with_capacity(rs.len());
                for (i, q) in rs.iter().enumerate() {
                    if q.leq(d) {
                        b.insert(i);
                    }
                }
                b
            })
            .collect();
        let dm = st.dmrs();
        image.iter().all(|c| cut_set.contains(c))
            && (0..dm.len())
                .all(|i| (0..dm.len()).all(|j| dm[i].leq(&dm[j]) == image[i].is_subset(&image[j])))
    }

    #[test]
    fn fixtures_match_cut_completion() {
        for r in [stone_example(), non_nelson_example(), tolerance_example()] {
            assert!(matches_cut_completion(&r));
        }
    }

    #[test]
    fn random_relations_match_cut_completion() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=6 {
            for _ in 0..30 {
                let r = random::relation(&mut rng, n, 0.4);
                assert!(matches_cut_completion(&r), "{r:?}");
                let rr = random::reflexive_relation(&mut rng, n, 0.3);
                assert!(matches_cut_completion(&rr), "{rr:?}");
            }
        }
    }

    #[test]
    fn exhaustive_small_reflexive_relations() {
        for n in 1..=3 {
            for r in random::all_reflexive_relations(n) {
                let st = build(&r);
                assert!(st.theorem_join_irreducibles().unwrap().agree);
                assert!(st.theorem_atoms().unwrap().agree);
                assert!(st.subdirect_check());
                assert!(st.decomposition_check().unwrap());
                assert!(matches_cut_completion(&r));
            }
        }
    }

    fn reflexive_strategy(max_n: usize) -> impl Strategy<Value = Relation> {
        (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random::reflexive_relation(&mut rng, n, 0.35)
        })
    }

    fn any_relation_strategy(max_n: usize) -> impl Strategy<Value = Relation> {
        (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random::relation(&mut rng, n, 0.35)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rs_is_inside_dmrs(r in any_relation_strategy(6)) {
            let st = build(&r);
            for q in st.rs() {
                prop_assert!(st.index_of(q).is_some());
            }
            for &q in st.dmrs() {
                prop_assert!(is_dm_member(&r, q));
            }
        }

        #[test]
        fn formulas_agree_with_tables(r in any_relation_strategy(6), split in any::<u64>()) {
            let st = build(&r);
            let l = st.lattice();
            let m = l.len();
            for i in 0..m {
                for j in 0..m {
                    let (a, b) = (st.pair(i), st.pair(j));
                    prop_assert_eq!(dm_join(&r, [&a, &b]), st.pair(l.join(i, j)));
                    prop_assert_eq!(dm_meet(&r, [&a, &b]), st.pair(l.meet(i, j)));
                }
            }
            // joining two partial joins equals the join of the whole list
            let all = st.dmrs();
            let (left, right): (Vec<_>, Vec<_>) = all
                .iter()
                .enumerate()
                .partition(|(i, _)| split >> (i % 64) & 1 == 1);
            let jl = dm_join(&r, left.iter().map(|(_, q)| *q));
            let jr = dm_join(&r, right.iter().map(|(_, q)| *q));
            prop_assert_eq!(dm_join(&r, [&jl, &jr]), dm_join(&r, all));
            let ml = dm_meet(&r, left.iter().map(|(_, q)| *q));
            let mr = dm_meet(&r, right.iter().map(|(_, q)| *q));
            prop_assert_eq!(dm_meet(&r, [&ml, &mr]), dm_meet(&r, all));
        }

        #[test]
        fn reflexive_theorems(r in reflexive_strategy(6)) {
            let st = build(&r);
            prop_assert!(st.theorem_join_irreducibles().unwrap().agree);
            prop_assert!(st.theorem_atoms().unwrap().agree);
            prop_assert!(st.subdirect_check());
            prop_assert!(st.decomposition_check().unwrap());
            prop_assert!(st.index_of(ApproxPair::default()).is_some());
            prop_assert!(st.index_of(ApproxPair::new(r.full_set(), r.full_set())).is_some());
        }
    }
}
