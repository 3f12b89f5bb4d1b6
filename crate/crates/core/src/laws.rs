//! The Galois-connection, duality and reflexivity laws of the approximation
//! operators as checkable predicates.

use std::fmt;

use crate::approximations::{compose, lower, lower_inv, upper, upper_inv, ApproxOp};
use crate::relations::Relation;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    /// `∅^▲ = ∅^△ = ∅`, `U^▼ = U^▽ = U`.
    Bounds,
    /// `X^{▽▲} ⊆ X ⊆ X^{▲▽}` and `X^{▼△} ⊆ X ⊆ X^{△▼}`.
    Adjunction,
    /// All four operators are monotone.
    Monotone,
    /// `▲` and `△` preserve unions.
    Unions,
    /// `▼` and `▽` preserve intersections.
    Intersections,
    /// `X^{▲▽▲} = X^▲` and the three analogues.
    TripleComposition,
    /// `X^{c▲} = X^{▼c}` and the three analogues.
    Duality,
    /// `∅^▼ = ∅^▽ = ∅`, `U^▲ = U^△ = U`.
    ReflexiveBounds,
    /// `X^▼ ⊆ X ⊆ X^▲` and `X^▽ ⊆ X ⊆ X^△`.
    ReflexiveInclusion,
}

impl Law {
    /// Laws valid for every relation.
    pub const GENERAL: [Law; 7] = [
        Law::Bounds,
        Law::Adjunction,
        Law::Monotone,
        Law::Unions,
        Law::Intersections,
        Law::TripleComposition,
        Law::Duality,
    ];

    /// Laws valid exactly for reflexive relations.
    pub const REFLEXIVE: [Law; 2] = [Law::ReflexiveBounds, Law::ReflexiveInclusion];

    pub fn name(self) -> &'static str {
        match self {
            Law::Bounds => "bounds",
            Law::Adjunction => "adjunction",
            Law::Monotone => "monotone",
            Law::Unions => "unions",
            Law::Intersections => "intersections",
            Law::TripleComposition => "triple_composition",
            Law::Duality => "duality",
            Law::ReflexiveBounds => "reflexive_bounds",
            Law::ReflexiveInclusion => "reflexive_inclusion",
        }
    }

    /// Whether the law holds at `x`, `y` and the family `h`. Laws with no
    /// set argument ignore them; monotonicity is tested on `x ⊆ x ∪ y`.
    pub fn holds(self, r: &Relation, x: ElementSet, y: ElementSet, h: &[ElementSet]) -> bool {
        use ApproxOp::*;
        let n = r.size();
        let full = r.full_set();
        let empty = ElementSet::EMPTY;
        match self {
            Law::Bounds => {
                upper(r, empty).is_empty()
                    && upper_inv(r, empty).is_empty()
                    && lower(r, full) == full
                    && lower_inv(r, full) == full
            }
            Law::Adjunction => {
                compose(r, &[LowerInv, Upper], x).is_subset(x)
                    && x.is_subset(compose(r, &[Upper, LowerInv], x))
                    && compose(r, &[Lower, UpperInv], x).is_subset(x)
                    && x.is_subset(compose(r, &[UpperInv, Lower], x))
            }
            Law::Monotone => {
                let big = x.union(y);
                ApproxOp::ALL
                    .iter()
                    .all(|op| op.apply(r, x).is_subset(op.apply(r, big)))
            }
            Law::Unions => {
                let u = h.iter().fold(empty, |a, &s| a.union(s));
                [Upper, UpperInv].iter().all(|op| {
                    op.apply(r, u) == h.iter().fold(empty, |a, &s| a.union(op.apply(r, s)))
                })
            }
            Law::Intersections => {
                let i = h.iter().fold(full, |a, &s| a.intersection(s));
                [Lower, LowerInv].iter().all(|op| {
                    op.apply(r, i) == h.iter().fold(full, |a, &s| a.intersection(op.apply(r, s)))
                })
            }
            Law::TripleComposition => [
                [Upper, LowerInv, Upper],
                [UpperInv, Lower, UpperInv],
                [Lower, UpperInv, Lower],
                [LowerInv, Upper, LowerInv],
            ]
            .iter()
            .all(|ops| compose(r, ops, x) == ops[0].apply(r, x)),
            Law::Duality => {
                let xc = x.complement(n);
                upper(r, xc) == lower(r, x).complement(n)
                    && lower(r, xc) == upper(r, x).complement(n)
                    && upper_inv(r, xc) == lower_inv(r, x).complement(n)
                    && lower_inv(r, xc) == upper_inv(r, x).complement(n)
            }
            Law::ReflexiveBounds => {
                lower(r, empty).is_empty()
                    && lower_inv(r, empty).is_empty()
                    && upper(r, full) == full
                    && upper_inv(r, full) == full
            }
            Law::ReflexiveInclusion => {
                lower(r, x).is_subset(x)
                    && x.is_subset(upper(r, x))
                    && lower_inv(r, x).is_subset(x)
                    && x.is_subset(upper_inv(r, x))
            }
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::stone_example;
    use crate::set::Universe;

    #[test]
    fn non_reflexive_relation_breaks_inclusion() {
        let r = Relation::from_pairs(Universe::numbered(2).unwrap(), [(0, 1)]).unwrap();
        let x = ElementSet::singleton(0);
        assert!(!Law::ReflexiveInclusion.holds(&r, x, x, &[]));
        for law in Law::GENERAL {
            assert!(law.holds(&r, x, ElementSet::singleton(1), &[x]), "{law}");
        }
    }

    #[test]
    fn empty_family() {
        let r = stone_example();
        assert!(Law::Unions.holds(&r, ElementSet::EMPTY, ElementSet::EMPTY, &[]));
        assert!(Law::Intersections.holds(&r, ElementSet::EMPTY, ElementSet::EMPTY, &[]));
    }
}
