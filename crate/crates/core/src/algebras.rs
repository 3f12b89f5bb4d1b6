//! De Morgan negation on DM(RS), the Kleene and Nelson checks, the map `g`
//! on join-irreducibles, cores against join-primes, and the double Stone
//! diagnostics.

use crate::approximations::{family, generator_join_irreducible, lower, upper, ApproxOp};
use crate::error::{Error, Result};
use crate::order::FiniteLattice;
use crate::relations::Relation;
use crate::roughsets::{is_dm_member, ApproxPair, Caps, RoughStructure, TheoremCheck};
use crate::set::ElementSet;

/// A concrete counterexample to one algebraic property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `∼x` is not in DM(RS).
    NegationOutside { x: ApproxPair },
    /// `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    NotDistributive {
        x: ApproxPair,
        y: ApproxPair,
        z: ApproxPair,
    },
    /// `∼∼x ≠ x`.
    DoubleNegation { x: ApproxPair },
    /// `∼(x ∨ y) ≠ ∼x ∧ ∼y`.
    DeMorganJoin { x: ApproxPair, y: ApproxPair },
    /// `∼(x ∧ y) ≠ ∼x ∨ ∼y`.
    DeMorganMeet { x: ApproxPair, y: ApproxPair },
    /// `x ∧ ∼x ≰ y ∨ ∼y`.
    KleeneInequality { x: ApproxPair, y: ApproxPair },
    /// No greatest `z` with `a ∧ z ≤ ∼a ∨ b`.
    MissingImplication { a: ApproxPair, b: ApproxPair },
    /// `x` is not the join of the join-irreducibles below it.
    NotSpatial { x: ApproxPair },
    /// Join-irreducibles `p, q ≤ g(p), g(q)` with nothing join-irreducible
    /// in between.
    Interpolation { p: ApproxPair, q: ApproxPair },
    /// `x* ∨ x** ≠ 1`.
    Stone { x: ApproxPair },
    /// `x⁺ ∧ x⁺⁺ ≠ 0`.
    DualStone { x: ApproxPair },
    /// `x ∧ x⁺ ≰ y ∨ y*`.
    Regular { x: ApproxPair, y: ApproxPair },
}

/// Universe elements `x, y ∉ S` with join-irreducible `{x}^▲, {y}^▲`, both
/// inside `{u}^▲`, but inside no join-irreducible `{z}^▲`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NelsonWitness {
    pub x: usize,
    pub y: usize,
    pub u: usize,
}

/// `∼(A, B) = (B^c, A^c)` for a member of DM(RS).
pub fn negation(r: &Relation, p: ApproxPair) -> Result<ApproxPair> {
    if !is_dm_member(r, p) {
        return Err(Error::Precondition(format!("{p:?} is not in DM(RS)")));
    }
    Ok(raw_negation(r.size(), p))
}

fn raw_negation(n: usize, p: ApproxPair) -> ApproxPair {
    ApproxPair::new(p.upper.complement(n), p.lower.complement(n))
}

/// First failure (if any) of the De Morgan and Kleene conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleeneVerdict {
    pub de_morgan: Option<Witness>,
    pub kleene: Option<Witness>,
}

impl KleeneVerdict {
    pub fn is_kleene(&self) -> bool {
        self.kleene.is_none()
    }
}

fn distributivity_witness(base: &RoughStructure) -> Option<Witness> {
    base.lattice()
        .distributivity_witness()
        .map(|(x, y, z)| Witness::NotDistributive {
            x: base.pair(x),
            y: base.pair(y),
            z: base.pair(z),
        })
}

fn negation_table(base: &RoughStructure) -> std::result::Result<Vec<usize>, Witness> {
    let n = base.relation().size();
    base.dmrs()
        .iter()
        .map(|&p| {
            base.index_of(raw_negation(n, p))
                .ok_or(Witness::NegationOutside { x: p })
        })
        .collect()
}

/// Distributivity, closure and involution of `∼`, both De Morgan laws, and
/// `x ∧ ∼x ≤ y ∨ ∼y`, each scanned in element order.
pub fn check_kleene(base: &RoughStructure) -> KleeneVerdict {
    let neg = match negation_table(base) {
        Ok(t) => t,
        Err(w) => {
            return KleeneVerdict {
                de_morgan: Some(w.clone()),
                kleene: Some(w),
            }
        }
    };
    let l = base.lattice();
    let m = l.len();
    let pr = |i| base.pair(i);
    let de_morgan = distributivity_witness(base)
        .or_else(|| {
            (0..m)
                .find(|&x| neg[neg[x]] != x)
                .map(|x| Witness::DoubleNegation { x: pr(x) })
        })
        .or_else(|| {
            (0..m).find_map(|x| {
                (0..m).find_map(|y| {
                    if neg[l.join(x, y)] != l.meet(neg[x], neg[y]) {
                        Some(Witness::DeMorganJoin { x: pr(x), y: pr(y) })
                    } else if neg[l.meet(x, y)] != l.join(neg[x], neg[y]) {
                        Some(Witness::DeMorganMeet { x: pr(x), y: pr(y) })
                    } else {
                        None
                    }
                })
            })
        });
    let kleene = de_morgan.clone().or_else(|| {
        (0..m).find_map(|x| {
            let lhs = l.meet(x, neg[x]);
            (0..m)
                .find(|&y| !l.leq(lhs, l.join(y, neg[y])))
                .map(|y| Witness::KleeneInequality { x: pr(x), y: pr(y) })
        })
    });
    KleeneVerdict { de_morgan, kleene }
}

/// `J⁻`, `J°`, `J⁺` as lattice indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JPartition {
    pub minus: Vec<usize>,
    pub zero: Vec<usize>,
    pub plus: Vec<usize>,
}

/// Result of recomputing `g(∅, {x}^▲)` from the core of `R̆(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreWitness {
    pub x: usize,
    pub z: Option<usize>,
    pub g: ApproxPair,
    pub recomputed: Option<ApproxPair>,
    /// Core members violating `z ∉ S`, join-irreducibility of `{z}^△`, or
    /// the `g` identity. Empty on a healthy run.
    pub discrepancies: Vec<String>,
}

/// Regular double Stone diagnostics; `None` means the law holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneFlags {
    pub stone: Option<Witness>,
    pub dual_stone: Option<Witness>,
    pub regular: Option<Witness>,
}

impl StoneFlags {
    pub fn holds(&self) -> bool {
        self.stone.is_none() && self.dual_stone.is_none() && self.regular.is_none()
    }

    pub fn first_witness(&self) -> Option<Witness> {
        self.stone
            .clone()
            .or_else(|| self.dual_stone.clone())
            .or_else(|| self.regular.clone())
    }
}

/// Pseudocomplement laws on a distributive DM(RS).
pub fn regular_double_stone(base: &RoughStructure) -> Result<StoneFlags> {
    let l = base.lattice();
    if !l.is_distributive() {
        return Err(Error::Hypothesis("DM(RS) is not distributive".into()));
    }
    let m = l.len();
    let star: Vec<usize> = (0..m)
        .map(|x| {
            l.pseudocomplement(x)
                .ok_or_else(|| missing("pseudocomplement", base, x))
        })
        .collect::<Result<_>>()?;
    let plus: Vec<usize> = (0..m)
        .map(|x| {
            l.dual_pseudocomplement(x)
                .ok_or_else(|| missing("dual pseudocomplement", base, x))
        })
        .collect::<Result<_>>()?;
    let pr = |i| base.pair(i);
    let stone = (0..m)
        .find(|&x| l.join(star[x], star[star[x]]) != l.top())
        .map(|x| Witness::Stone { x: pr(x) });
    let dual_stone = (0..m)
        .find(|&x| l.meet(plus[x], plus[plus[x]]) != l.bottom())
        .map(|x| Witness::DualStone { x: pr(x) });
    let regular = (0..m).find_map(|x| {
        let lhs = l.meet(x, plus[x]);
        (0..m)
            .find(|&y| !l.leq(lhs, l.join(y, star[y])))
            .map(|y| Witness::Regular { x: pr(x), y: pr(y) })
    });
    Ok(StoneFlags {
        stone,
        dual_stone,
        regular,
    })
}

fn missing(what: &str, base: &RoughStructure, x: usize) -> Error {
    Error::Defect(format!(
        "{what} of {:?} missing in a finite distributive lattice",
        base.pair(x)
    ))
}

/// DM(RS) with its De Morgan negation and the map `g`, available only once
/// the Kleene conditions hold.
#[derive(Clone, Debug)]
pub struct KleeneStructure<'a> {
    base: &'a RoughStructure,
    neg: Vec<usize>,
    ji: Vec<usize>,
    g: Vec<Option<usize>>,
}

impl<'a> KleeneStructure<'a> {
    pub fn new(base: &'a RoughStructure) -> Result<Self> {
        if let Some(w) = check_kleene(base).kleene {
            return Err(Error::Hypothesis(format!(
                "DM(RS) is not a Kleene algebra: {w:?}"
            )));
        }
        let neg = negation_table(base).expect("closure checked above");
        let l = base.lattice();
        let ji = l.join_irreducibles();
        let mut g = vec![None; l.len()];
        for &j in &ji {
            g[j] = Some(l.meet_all((0..l.len()).filter(|&x| !l.leq(x, neg[j]))));
        }
        Ok(KleeneStructure { base, neg, ji, g })
    }

    pub fn base(&self) -> &RoughStructure {
        self.base
    }

    fn lattice(&self) -> &FiniteLattice<ApproxPair> {
        self.base.lattice()
    }

    pub fn negation(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn join_irreducibles(&self) -> &[usize] {
        &self.ji
    }

    /// `g(j) = ⋀{x : x ≰ ∼j}`.
    pub fn g(&self, j: usize) -> Result<usize> {
        self.g.get(j).copied().flatten().ok_or_else(|| {
            Error::Precondition(format!("{:?} is not join-irreducible", self.base.pair(j)))
        })
    }

    pub fn g_table(&self) -> Vec<(usize, usize)> {
        self.ji.iter().map(|&j| (j, self.g[j].unwrap())).collect()
    }

    /// `g` maps into J, is antitone and involutive, and each `j` is
    /// comparable with `g(j)`.
    pub fn g_laws_hold(&self) -> bool {
        let l = self.lattice();
        let g = |j: usize| self.g[j].unwrap();
        self.ji.iter().all(|&p| {
            let gp = g(p);
            self.g[gp].is_some()
                && g(gp) == p
                && (l.leq(p, gp) || l.leq(gp, p))
                && self.ji.iter().all(|&q| !l.leq(p, q) || l.leq(g(q), gp))
        })
    }

    /// Join-irreducibles split by comparison with `g`.
    pub fn partition(&self) -> JPartition {
        let l = self.lattice();
        let mut part = JPartition::default();
        for (j, gj) in self.g_table() {
            if j == gj {
                part.zero.push(j);
            } else if l.leq(j, gj) {
                part.minus.push(j);
            } else {
                part.plus.push(j);
            }
        }
        part
    }

    /// `J⁻` against `{j ∈ J : j ≤ ∼j}`.
    pub fn minus_by_negation(&self) -> TheoremCheck {
        let l = self.lattice();
        let part = self.partition();
        let below_neg = self.ji.iter().copied().filter(|&j| l.leq(j, self.neg[j]));
        TheoremCheck::new(
            part.minus.iter().map(|&j| self.base.pair(j)),
            below_neg.map(|j| self.base.pair(j)),
        )
    }

    /// The three blocks from their closed forms (formula side) against the
    /// `g` comparison (oracle side), in the order `J⁻`, `J°`, `J⁺`.
    pub fn partition_closed_forms(&self) -> Result<[TheoremCheck; 3]> {
        let r = self.base.relation();
        if !r.is_reflexive() {
            return Err(Error::Precondition(
                "the partition formulas require a reflexive relation".into(),
            ));
        }
        let s = self.base.singletons();
        let fwd = r.neighborhoods();
        let bwd = r.inverse_neighborhoods();
        let outside: Vec<usize> = (0..r.size()).filter(|&x| !s.contains(x)).collect();
        let minus = outside
            .iter()
            .filter(|&&x| generator_join_irreducible(bwd, x))
            .map(|&x| ApproxPair::new(ElementSet::EMPTY, bwd[x]));
        let zero = s
            .iter()
            .map(|x| ApproxPair::new(ElementSet::singleton(x), bwd[x]));
        let plus = outside
            .iter()
            .filter(|&&x| generator_join_irreducible(fwd, x))
            .map(|&x| ApproxPair::new(lower(r, fwd[x]), upper(r, fwd[x])));
        let part = self.partition();
        let pairs = |v: &[usize]| self.base.pairs_of(v);
        Ok([
            TheoremCheck::new(minus, pairs(&part.minus)),
            TheoremCheck::new(zero, pairs(&part.zero)),
            TheoremCheck::new(plus, pairs(&part.plus)),
        ])
    }

    /// Recomputes `g(j)` for `j = (∅, {x}^▲) ∈ J⁻` from every `z` in the
    /// core of `R̆(x)`.
    pub fn g_core_witness(&self, j: usize) -> Result<CoreWitness> {
        let r = self.base.relation();
        let p = self.base.pair(j);
        if !self.partition().minus.contains(&j) || !p.lower.is_empty() {
            return Err(Error::Precondition(format!("{p:?} is not in J⁻")));
        }
        let s = self.base.singletons();
        let bwd = r.inverse_neighborhoods();
        let x = (0..r.size())
            .find(|&x| !s.contains(x) && bwd[x] == p.upper)
            .ok_or_else(|| Error::Precondition(format!("{p:?} is not of the form (∅, {{x}}^▲)")))?;
        let g = self.base.pair(self.g(j)?);
        let core = r.inverse_core(x);
        let image = |z: usize| {
            let rz = r.neighborhood(z);
            ApproxPair::new(lower(r, rz), upper(r, rz))
        };
        let mut discrepancies = Vec::new();
        if core.is_empty() {
            discrepancies.push(format!("core of R̆({x}) is empty"));
        }
        for z in core.iter() {
            if s.contains(z) {
                discrepancies.push(format!("core member {z} is a singleton"));
            }
            if !generator_join_irreducible(r.neighborhoods(), z) {
                discrepancies.push(format!("R({z}) is not join-irreducible"));
            }
            if image(z) != g {
                discrepancies.push(format!(
                    "core member {z} gives {:?}, g gives {g:?}",
                    image(z)
                ));
            }
        }
        let z = core.first();
        Ok(CoreWitness {
            x,
            z,
            g,
            recomputed: z.map(image),
            discrepancies,
        })
    }

    /// First join-irreducible pair violating interpolation, in element order.
    pub fn interpolation_witness(&self) -> Option<(usize, usize)> {
        let l = self.lattice();
        for (a, &p) in self.ji.iter().enumerate() {
            for &q in &self.ji[a..] {
                let hi = l.meet(self.g[p].unwrap(), self.g[q].unwrap());
                let lo = l.join(p, q);
                if l.leq(lo, hi) && !self.ji.iter().any(|&k| l.leq(lo, k) && l.leq(k, hi)) {
                    return Some((p, q));
                }
            }
        }
        None
    }

    pub fn interpolation_property(&self) -> bool {
        self.interpolation_witness().is_none()
    }

    /// For `x, y ∉ S` with join-irreducible upper singletons: a common
    /// `{u}^▲` above both exists exactly when `(∅,{x}^▲), (∅,{y}^▲) ≤
    /// g(∅,{x}^▲), g(∅,{y}^▲)`.
    pub fn pre_interpolation_holds(&self) -> Result<bool> {
        let r = self.base.relation();
        if !r.is_reflexive() {
            return Err(Error::Precondition("requires a reflexive relation".into()));
        }
        let l = self.lattice();
        let bwd = r.inverse_neighborhoods();
        let xs = nelson_candidates(r);
        for &x in &xs {
            for &y in &xs {
                let both = bwd[x].union(bwd[y]);
                let covered = bwd.iter().any(|&b| both.is_subset(b));
                let idx = |v: usize| {
                    self.base
                        .index_of(ApproxPair::new(ElementSet::EMPTY, bwd[v]))
                        .ok_or_else(|| Error::Defect(format!("(∅, R̆({v})) missing from DM(RS)")))
                };
                let (p, q) = (idx(x)?, idx(y)?);
                let (gp, gq) = (self.g(p)?, self.g(q)?);
                let bounded = [p, q].iter().all(|&a| l.leq(a, gp) && l.leq(a, gq));
                if covered != bounded {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `a ⇒ b`, the relative pseudocomplement.
    pub fn heyting(&self, a: usize, b: usize) -> usize {
        self.lattice()
            .relative_pseudocomplement(a, b)
            .expect("finite distributive lattices are Heyting")
    }

    /// `a → b = a ⇒ (∼a ∨ b)`.
    pub fn weak_implication(&self, a: usize, b: usize) -> usize {
        let l = self.lattice();
        self.heyting(a, l.join(self.neg[a], b))
    }

    /// First pair whose weak implication does not exist.
    pub fn implication_witness(&self) -> Option<(usize, usize)> {
        let l = self.lattice();
        let m = l.len();
        (0..m).find_map(|a| {
            (0..m)
                .find(|&b| {
                    l.relative_pseudocomplement(a, l.join(self.neg[a], b))
                        .is_none()
                })
                .map(|b| (a, b))
        })
    }
}

/// `x ∉ S` with `{x}^▲` join-irreducible in `℘(U)^▲`.
fn nelson_candidates(r: &Relation) -> Vec<usize> {
    let s = r.singletons();
    (0..r.size())
        .filter(|&x| !s.contains(x) && generator_join_irreducible(r.inverse_neighborhoods(), x))
        .collect()
}

/// Join-primality of one neighbourhood evaluated three ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JoinPrimeSides {
    /// `R(x)` is join-prime in the lattice `℘(U)^△`.
    pub lattice: bool,
    /// `R(x) ⊄ ⋃{R(y) : R(x) ⊄ R(y)}`.
    pub union: bool,
    /// The core of `R(x)` is nonempty.
    pub core: bool,
}

impl JoinPrimeSides {
    pub fn agree(&self) -> bool {
        self.lattice == self.union && self.union == self.core
    }
}

pub fn join_prime_sides(r: &Relation) -> Result<Vec<JoinPrimeSides>> {
    let fam = family(r, ApproxOp::UpperInv);
    let lat = fam.lattice()?;
    let fwd = r.neighborhoods();
    Ok((0..r.size())
        .map(|x| {
            let rx = fwd[x];
            let i = fam
                .index_of(rx)
                .expect("neighbourhoods generate the family");
            let others = fwd
                .iter()
                .filter(|ry| !rx.is_subset(**ry))
                .fold(ElementSet::EMPTY, |acc, &ry| acc.union(ry));
            JoinPrimeSides {
                lattice: !rx.is_empty() && lat.is_join_prime(i),
                union: !rx.is_subset(others),
                core: !r.core(x).is_empty(),
            }
        })
        .collect())
}

/// Join-primality of every `R(x)` in `℘(U)^△`; disagreement between the
/// three evaluations is a defect.
pub fn char_join_prime_all(r: &Relation) -> Result<Vec<bool>> {
    join_prime_sides(r)?
        .into_iter()
        .enumerate()
        .map(|(x, s)| {
            if s.agree() {
                Ok(s.core)
            } else {
                Err(Error::Defect(format!(
                    "join-primality of R({x}) disagrees: {s:?}"
                )))
            }
        })
        .collect()
}

pub fn char_join_prime(r: &Relation, x: usize) -> Result<bool> {
    Ok(char_join_prime_all(r)?[x])
}

/// Every `R(x)` is the union of the neighbourhoods inside it that have
/// nonempty cores.
pub fn neighbourhoods_are_prime_unions(r: &Relation) -> bool {
    let fwd = r.neighborhoods();
    fwd.iter().all(|&rx| {
        let parts = (0..r.size())
            .filter(|&y| fwd[y].is_subset(rx) && !r.core(y).is_empty())
            .fold(ElementSet::EMPTY, |acc, y| acc.union(fwd[y]));
        parts == rx
    })
}

/// [`neighbourhoods_are_prime_unions`] for `R` and for `R̆`.
pub fn spatial_cd_criterion(r: &Relation) -> bool {
    neighbourhoods_are_prime_unions(r) && neighbourhoods_are_prime_unions(&r.inverse())
}

/// The mutually inverse maps between join-primes of `℘(U)^△` and of
/// `℘(U)^▲`, as sorted `(argument, image)` lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPsi {
    pub phi: Vec<(ElementSet, ElementSet)>,
    pub psi: Vec<(ElementSet, ElementSet)>,
}

fn core_map(
    from: &[ElementSet],
    to: &[ElementSet],
    core: impl Fn(usize) -> ElementSet,
) -> Result<Vec<(ElementSet, ElementSet)>> {
    let mut map: Vec<(ElementSet, ElementSet)> = Vec::new();
    for (x, &fx) in from.iter().enumerate() {
        for w in core(x).iter() {
            let entry = (fx, to[w]);
            match map.iter().find(|(a, _)| *a == fx) {
                Some(&(_, img)) if img != to[w] => {
                    return Err(Error::Defect(format!(
                        "image of {:?} depends on the core member chosen",
                        fx
                    )))
                }
                Some(_) => {}
                None => map.push(entry),
            }
        }
    }
    map.sort_by_key(|(a, _)| a.sort_key());
    Ok(map)
}

/// `φ: R(x) ↦ R̆(w)` and `ψ: R̆(x) ↦ R(w)` for `w` in the respective core,
/// checked for well-definedness, mutual inversion and order reversal.
pub fn phi_psi(r: &Relation) -> Result<PhiPsi> {
    let fwd = r.neighborhoods();
    let bwd = r.inverse_neighborhoods();
    let phi = core_map(fwd, bwd, |x| r.core(x))?;
    let psi = core_map(bwd, fwd, |x| r.inverse_core(x))?;
    let apply = |m: &[(ElementSet, ElementSet)], a: ElementSet| {
        m.iter().find(|(k, _)| *k == a).map(|&(_, v)| v)
    };
    for &(a, b) in &phi {
        if apply(&psi, b) != Some(a) {
            return Err(Error::Defect(format!("ψ(φ({a:?})) ≠ {a:?}")));
        }
    }
    for &(a, b) in &psi {
        if apply(&phi, b) != Some(a) {
            return Err(Error::Defect(format!("φ(ψ({a:?})) ≠ {a:?}")));
        }
    }
    for &(a1, b1) in &phi {
        for &(a2, b2) in &phi {
            if a1.is_subset(a2) != b2.is_subset(b1) {
                return Err(Error::Defect(format!("φ does not reverse {a1:?} ⊆ {a2:?}")));
            }
        }
    }
    Ok(PhiPsi { phi, psi })
}

/// First violation of the neighbourhood-level Nelson condition, scanning
/// `x` then `y`, with the least covering `u`.
pub fn nelson_condition_violation(r: &Relation) -> Result<Option<NelsonWitness>> {
    if !r.is_reflexive() {
        return Err(Error::Precondition(
            "the Nelson condition requires a reflexive relation".into(),
        ));
    }
    if !spatial_cd_criterion(r) {
        return Err(Error::Hypothesis(
            "DM(RS) is not completely distributive and spatial".into(),
        ));
    }
    let bwd = r.inverse_neighborhoods();
    let xs = nelson_candidates(r);
    let ji: Vec<usize> = (0..r.size())
        .filter(|&z| generator_join_irreducible(bwd, z))
        .collect();
    for &x in &xs {
        for &y in &xs {
            let both = bwd[x].union(bwd[y]);
            let Some(u) = (0..r.size()).find(|&u| both.is_subset(bwd[u])) else {
                continue;
            };
            if !ji.iter().any(|&z| both.is_subset(bwd[z])) {
                return Ok(Some(NelsonWitness { x, y, u }));
            }
        }
    }
    Ok(None)
}

pub fn nelson_characterization(r: &Relation) -> Result<bool> {
    Ok(nelson_condition_violation(r)?.is_none())
}

/// Both cores are nonempty at every element.
pub fn cores_nonempty_sufficient(r: &Relation) -> bool {
    (0..r.size()).all(|x| !r.core(x).is_empty() && !r.inverse_core(x).is_empty())
}

/// Property flags of DM(RS), each false flag paired with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub distributive: bool,
    pub spatial: bool,
    pub de_morgan: bool,
    pub kleene: bool,
    pub quasi_nelson: bool,
    pub nelson: bool,
    pub regular_double_stone: bool,
    pub witnesses: Witnesses,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witnesses {
    pub distributive: Option<Witness>,
    pub spatial: Option<Witness>,
    pub de_morgan: Option<Witness>,
    pub kleene: Option<Witness>,
    pub quasi_nelson: Option<Witness>,
    pub nelson: Option<Witness>,
    pub regular_double_stone: Option<Witness>,
}

impl AlgebraReport {
    pub fn compute(base: &RoughStructure) -> Result<Self> {
        let l = base.lattice();
        let pr = |i| base.pair(i);
        let mut w = Witnesses {
            distributive: distributivity_witness(base),
            spatial: l
                .spatiality_witness()
                .map(|x| Witness::NotSpatial { x: pr(x) }),
            ..Witnesses::default()
        };
        let verdict = check_kleene(base);
        w.de_morgan = verdict.de_morgan.clone();
        w.kleene = verdict.kleene.clone();
        match &verdict.kleene {
            Some(k) => {
                w.quasi_nelson = Some(k.clone());
                w.nelson = Some(k.clone());
            }
            None => {
                let ks = KleeneStructure::new(base)?;
                w.quasi_nelson = ks
                    .implication_witness()
                    .map(|(a, b)| Witness::MissingImplication { a: pr(a), b: pr(b) });
                w.nelson = w.spatial.clone().or_else(|| {
                    ks.interpolation_witness()
                        .map(|(p, q)| Witness::Interpolation { p: pr(p), q: pr(q) })
                });
            }
        }
        w.regular_double_stone = match &w.distributive {
            Some(d) => Some(d.clone()),
            None => regular_double_stone(base)?.first_witness(),
        };
        Ok(AlgebraReport {
            distributive: w.distributive.is_none(),
            spatial: w.spatial.is_none(),
            de_morgan: w.de_morgan.is_none(),
            kleene: w.kleene.is_none(),
            quasi_nelson: w.quasi_nelson.is_none(),
            nelson: w.nelson.is_none(),
            regular_double_stone: w.regular_double_stone.is_none(),
            witnesses: w,
        })
    }
}

/// Reports for `R` and its inverse, and whether their distributivity and
/// spatiality flags coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseReport {
    pub direct: AlgebraReport,
    pub inverse: AlgebraReport,
    pub agree: bool,
}

pub fn inverse_relation_report(r: &Relation, caps: Caps) -> Result<InverseReport> {
    let direct = AlgebraReport::compute(&RoughStructure::build(r, caps)?)?;
    let inverse = AlgebraReport::compute(&RoughStructure::build(&r.inverse(), caps)?)?;
    let mut agree =
        direct.distributive == inverse.distributive && direct.spatial == inverse.spatial;
    if r.is_reflexive() && cores_nonempty_sufficient(r) {
        agree &= direct.nelson && inverse.nelson;
    }
    Ok(InverseReport {
        direct,
        inverse,
        agree,
    })
}
