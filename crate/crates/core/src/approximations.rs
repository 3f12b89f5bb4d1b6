//! Lower and upper approximation operators and the families of sets they
//! produce.
//!
//! With `R̆` the inverse of `R`:
//!
//! | op | symbol | definition |
//! |----|--------|------------|
//! | [`ApproxOp::Lower`] | `▼` | `{x : R(x) ⊆ X}` |
//! | [`ApproxOp::Upper`] | `▲` | `{x : R(x) ∩ X ≠ ∅}` |
//! | [`ApproxOp::LowerInv`] | `▽` | `{x : R̆(x) ⊆ X}` |
//! | [`ApproxOp::UpperInv`] | `△` | `{x : R̆(x) ∩ X ≠ ∅}` |

use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::order::FiniteLattice;
use crate::relations::Relation;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ApproxOp {
    Lower,
    Upper,
    LowerInv,
    UpperInv,
}

impl ApproxOp {
    pub const ALL: [ApproxOp; 4] = [
        ApproxOp::Upper,
        ApproxOp::Lower,
        ApproxOp::UpperInv,
        ApproxOp::LowerInv,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            ApproxOp::Lower => "▼",
            ApproxOp::Upper => "▲",
            ApproxOp::LowerInv => "▽",
            ApproxOp::UpperInv => "△",
        }
    }

    /// ASCII name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            ApproxOp::Lower => "lower",
            ApproxOp::Upper => "upper",
            ApproxOp::LowerInv => "lower_inv",
            ApproxOp::UpperInv => "upper_inv",
        }
    }

    /// True for the union-closed (upper) operators.
    pub fn is_upper(self) -> bool {
        matches!(self, ApproxOp::Upper | ApproxOp::UpperInv)
    }

    pub fn apply(self, r: &Relation, x: ElementSet) -> ElementSet {
        match self {
            ApproxOp::Lower => lower(r, x),
            ApproxOp::Upper => upper(r, x),
            ApproxOp::LowerInv => lower_inv(r, x),
            ApproxOp::UpperInv => upper_inv(r, x),
        }
    }
}

impl fmt::Display for ApproxOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

fn contained_in(nbhds: &[ElementSet], x: ElementSet) -> ElementSet {
    nbhds
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_subset(x))
        .map(|(i, _)| i)
        .collect()
}

fn union_over(nbhds: &[ElementSet], x: ElementSet) -> ElementSet {
    x.iter()
        .fold(ElementSet::EMPTY, |acc, i| acc.union(nbhds[i]))
}

/// `X^▼`.
pub fn lower(r: &Relation, x: ElementSet) -> ElementSet {
    contained_in(r.neighborhoods(), x)
}

/// `X^▲ = ⋃_{x∈X} R̆(x)`.
pub fn upper(r: &Relation, x: ElementSet) -> ElementSet {
    union_over(r.inverse_neighborhoods(), x)
}

/// `X^▽`.
pub fn lower_inv(r: &Relation, x: ElementSet) -> ElementSet {
    contained_in(r.inverse_neighborhoods(), x)
}

/// `X^△ = ⋃_{x∈X} R(x)`.
pub fn upper_inv(r: &Relation, x: ElementSet) -> ElementSet {
    union_over(r.neighborhoods(), x)
}

/// Applies `ops` left to right, so `compose(r, &[UpperInv, Upper], x)` is
/// `X^{△▲}`.
pub fn compose(r: &Relation, ops: &[ApproxOp], x: ElementSet) -> ElementSet {
    ops.iter().fold(x, |acc, op| op.apply(r, acc))
}

/// The image `{X^op : X ⊆ U}` of one approximation operator.
#[derive(Clone, Debug)]
pub struct SetFamily {
    origin: ApproxOp,
    universe_size: usize,
    members: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
}

impl SetFamily {
    fn from_members(origin: ApproxOp, universe_size: usize, mut members: Vec<ElementSet>) -> Self {
        members.sort_by_key(|s| s.sort_key());
        members.dedup();
        let index = members.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        SetFamily {
            origin,
            universe_size,
            members,
            index,
        }
    }

    pub fn origin(&self) -> ApproxOp {
        self.origin
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    /// Members sorted by cardinality, then bit pattern.
    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.index.contains_key(&s)
    }

    pub fn index_of(&self, s: ElementSet) -> Option<usize> {
        self.index.get(&s).copied()
    }

    /// The family ordered by inclusion.
    pub fn lattice(&self) -> Result<FiniteLattice<ElementSet>> {
        FiniteLattice::from_sets(self.members.clone())
    }

    /// `{X^c : X ∈ self}`.
    fn complemented(&self, origin: ApproxOp) -> SetFamily {
        let n = self.universe_size;
        Self::from_members(
            origin,
            n,
            self.members.iter().map(|s| s.complement(n)).collect(),
        )
    }
}

/// All unions of `generators`, including the empty union.
fn union_closure(generators: &[ElementSet]) -> Vec<ElementSet> {
    let mut seen: std::collections::HashSet<ElementSet> = [ElementSet::EMPTY].into_iter().collect();
    let mut members = vec![ElementSet::EMPTY];
    for &g in generators {
        let mut i = 0;
        let len = members.len();
        while i < len {
            let u = members[i].union(g);
            if seen.insert(u) {
                members.push(u);
            }
            i += 1;
        }
    }
    members
}

/// `℘(U)^op`. Upper families are built as union closures of the point
/// images (`{x}^▲ = R̆(x)`, `{x}^△ = R(x)`); lower families are the
/// complements of the dual upper family (`X^▼ = X^{c▲c}`, `X^▽ = X^{c△c}`).
pub fn family(r: &Relation, op: ApproxOp) -> SetFamily {
    let n = r.size();
    match op {
        ApproxOp::Upper => SetFamily::from_members(op, n, union_closure(r.inverse_neighborhoods())),
        ApproxOp::UpperInv => SetFamily::from_members(op, n, union_closure(r.neighborhoods())),
        ApproxOp::Lower => family(r, ApproxOp::Upper).complemented(op),
        ApproxOp::LowerInv => family(r, ApproxOp::UpperInv).complemented(op),
    }
}

/// Whether `generators[i]` is join-irreducible in the union closure of
/// `generators`: nonempty and not the union of the generators strictly
/// inside it.
pub fn generator_join_irreducible(generators: &[ElementSet], i: usize) -> bool {
    let g = generators[i];
    let below = generators
        .iter()
        .filter(|h| h.is_proper_subset(g))
        .fold(ElementSet::EMPTY, |acc, &h| acc.union(h));
    !g.is_empty() && below != g
}

/// Whether `generators[i]` is join-prime in the union closure of
/// `generators`: not covered by the generators that do not contain it.
pub fn generator_join_prime(generators: &[ElementSet], i: usize) -> bool {
    let g = generators[i];
    let others = generators
        .iter()
        .filter(|h| !g.is_subset(**h))
        .fold(ElementSet::EMPTY, |acc, &h| acc.union(h));
    !g.is_subset(others)
}

/// Whether `generators[i]` is an atom of the union closure of `generators`.
pub fn generator_atom(generators: &[ElementSet], i: usize) -> bool {
    let g = generators[i];
    !g.is_empty()
        && !generators
            .iter()
            .any(|h| !h.is_empty() && h.is_proper_subset(g))
}
