//! Explicit finite posets and lattices.
//!
//! Everything here works on the materialised order relation and operation
//! tables, independently of how the elements were produced. The rough-set
//! modules use it as the brute-force side of every structural check.

use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest lattice whose operation tables will be materialised.
pub const MAX_LATTICE_SIZE: usize = 4096;

/// Largest lattice accepted by [`are_isomorphic`].
pub const MAX_ISOMORPHISM_SIZE: usize = 64;

/// A finite partial order over explicit elements.
///
/// Internally the elements are also laid out along a linear extension and
/// the up/down sets are bitsets over that layout, so that the least element
/// of an up-set is its lowest set bit.
#[derive(Clone, Debug)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    pos: Vec<usize>,
    at: Vec<usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl<T: Clone + Eq + Hash> FinitePoset<T> {
    /// Builds the poset of `elements` under `leq`, validating that `leq` is a
    /// partial order and that the elements are distinct.
    pub fn new(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let m = elements.len();
        let mut index = HashMap::with_capacity(m);
        for (i, e) in elements.iter().enumerate() {
            if let Some(first) = index.insert(e.clone(), i) {
                return Err(Error::DuplicateElement(first, i));
            }
        }

        let mut le = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            for j in 0..m {
                if leq(&elements[i], &elements[j]) {
                    le[i].insert(j);
                }
            }
        }
        for i in 0..m {
            if !le[i].contains(i) {
                return Err(Error::NotAPartialOrder(format!(
                    "element {i} is not ≤ itself"
                )));
            }
            for j in le[i].ones().filter(|&j| j != i) {
                if le[j].contains(i) {
                    return Err(Error::NotAPartialOrder(format!(
                        "elements {i} and {j} are mutually ≤"
                    )));
                }
                if !le[j].is_subset(&le[i]) {
                    return Err(Error::NotAPartialOrder(format!(
                        "transitivity fails through {i} ≤ {j}"
                    )));
                }
            }
        }

        let mut down_count = vec![0usize; m];
        for row in &le {
            for j in row.ones() {
                down_count[j] += 1;
            }
        }
        let mut at: Vec<usize> = (0..m).collect();
        at.sort_by_key(|&i| (down_count[i], i));
        let mut pos = vec![0; m];
        for (p, &i) in at.iter().enumerate() {
            pos[i] = p;
        }

        let mut up = vec![FixedBitSet::with_capacity(m); m];
        let mut down = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            for j in le[i].ones() {
                up[i].insert(pos[j]);
                down[j].insert(pos[i]);
            }
        }
        Ok(FinitePoset {
            elements,
            index,
            pos,
            at,
            up,
            down,
        })
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }
}

impl FinitePoset<ElementSet> {
    /// Sets ordered by inclusion.
    pub fn from_sets(sets: Vec<ElementSet>) -> Result<Self> {
        Self::new(sets, |a, b| a.is_subset(*b))
    }
}

impl<T> FinitePoset<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(self.pos[j])
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Least upper bound of `i` and `j`, if one exists.
    pub fn least_upper_bound(&self, i: usize, j: usize) -> Option<usize> {
        let ub = &self.up[i] & &self.up[j];
        let c = self.at[ub.minimum()?];
        ub.is_subset(&self.up[c]).then_some(c)
    }

    /// Greatest lower bound of `i` and `j`, if one exists.
    pub fn greatest_lower_bound(&self, i: usize, j: usize) -> Option<usize> {
        let lb = &self.down[i] & &self.down[j];
        let c = self.at[lb.maximum()?];
        lb.is_subset(&self.down[c]).then_some(c)
    }

    /// First pair (in index order) lacking a join or meet.
    pub fn lattice_witness(&self) -> Option<(usize, usize, &'static str)> {
        let m = self.len();
        for i in 0..m {
            for j in i + 1..m {
                if self.least_upper_bound(i, j).is_none() {
                    return Some((i, j, "join"));
                }
                if self.greatest_lower_bound(i, j).is_none() {
                    return Some((i, j, "meet"));
                }
            }
        }
        None
    }

    pub fn is_lattice(&self) -> bool {
        !self.is_empty() && self.lattice_witness().is_none()
    }

    /// Element indices along a linear extension (every element after
    /// everything below it).
    pub fn linear_extension(&self) -> &[usize] {
        &self.at
    }
}

/// A finite lattice with materialised join/meet tables and cover relation.
#[derive(Clone, Debug)]
pub struct FiniteLattice<T> {
    poset: FinitePoset<T>,
    join: Vec<u16>,
    meet: Vec<u16>,
    bottom: usize,
    top: usize,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

impl<T: Clone + Eq + Hash> FiniteLattice<T> {
    pub fn new(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        Self::from_poset(FinitePoset::new(elements, leq)?)
    }
}

impl FiniteLattice<ElementSet> {
    pub fn from_sets(sets: Vec<ElementSet>) -> Result<Self> {
        Self::from_poset(FinitePoset::from_sets(sets)?)
    }
}

impl<T> FiniteLattice<T> {
    /// Materialises the lattice tables, or reports the first pair without a
    /// join or meet.
    pub fn from_poset(poset: FinitePoset<T>) -> Result<Self> {
        let m = poset.len();
        if m == 0 {
            return Err(Error::Precondition(
                "a lattice needs at least one element".into(),
            ));
        }
        if m > MAX_LATTICE_SIZE {
            return Err(Error::Capacity {
                stage: "lattice tables",
                size: m,
                cap: MAX_LATTICE_SIZE,
            });
        }
        let mut join = vec![0u16; m * m];
        let mut meet = vec![0u16; m * m];
        for i in 0..m {
            join[i * m + i] = i as u16;
            meet[i * m + i] = i as u16;
            for j in i + 1..m {
                let jn = poset
                    .least_upper_bound(i, j)
                    .ok_or(Error::NotALattice(i, j, "join"))?;
                let mt = poset
                    .greatest_lower_bound(i, j)
                    .ok_or(Error::NotALattice(i, j, "meet"))?;
                join[i * m + j] = jn as u16;
                join[j * m + i] = jn as u16;
                meet[i * m + j] = mt as u16;
                meet[j * m + i] = mt as u16;
            }
        }
        let bottom = poset.at[0];
        let top = poset.at[m - 1];

        let mut lower_covers = vec![Vec::new(); m];
        let mut upper_covers = vec![Vec::new(); m];
        for (i, ups) in upper_covers.iter_mut().enumerate() {
            for pj in poset.up[i].ones() {
                let j = poset.at[pj];
                if j != i && poset.up[i].intersection_count(&poset.down[j]) == 2 {
                    ups.push(j);
                    lower_covers[j].push(i);
                }
            }
        }
        for v in upper_covers.iter_mut().chain(lower_covers.iter_mut()) {
            v.sort_unstable();
        }
        Ok(FiniteLattice {
            poset,
            join,
            meet,
            bottom,
            top,
            lower_covers,
            upper_covers,
        })
    }

    pub fn poset(&self) -> &FinitePoset<T> {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn element(&self, i: usize) -> &T {
        self.poset.element(i)
    }

    pub fn elements(&self) -> &[T] {
        self.poset.elements()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.poset.lt(i, j)
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j] as usize
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j] as usize
    }

    /// Join of arbitrarily many elements; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of arbitrarily many elements; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    /// Hasse diagram edges `(lower, upper)`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.upper_covers[i].iter().map(move |&j| (i, j)))
            .collect()
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower_covers[i].len() == 1)
            .collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper_covers[i].len() == 1)
            .collect()
    }

    /// `p ≠ 0` with `p ≰ ⋁{x : p ≰ x}`.
    pub fn join_primes(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&p| p != self.bottom && self.is_join_prime(p))
            .collect()
    }

    pub fn is_join_prime(&self, p: usize) -> bool {
        let outside = self.join_all((0..self.len()).filter(|&x| !self.leq(p, x)));
        !self.leq(p, outside)
    }

    /// Upper covers of the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers[self.bottom].clone()
    }

    /// First triple `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    ///
    /// Triples where `y` and `z` are comparable, or `x` lies below `y` or
    /// `z`, satisfy the law in every lattice and are skipped.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let m = self.len();
        for x in 0..m {
            for y in 0..m {
                if self.leq(x, y) {
                    continue;
                }
                let xy = self.meet(x, y);
                for z in y + 1..m {
                    if self.poset.comparable(y, z) || self.leq(x, z) {
                        continue;
                    }
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(xy, self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Finite lattices are completely distributive exactly when they satisfy
    /// the binary distributive law.
    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// A pentagon sublattice `[0', a, c, b, 1']` with `a < c` and `b`
    /// incomparable to both.
    pub fn find_n5(&self) -> Option<[usize; 5]> {
        let m = self.len();
        for a in 0..m {
            for c in 0..m {
                if !self.lt(a, c) {
                    continue;
                }
                for b in 0..m {
                    if self.poset.comparable(a, b) || self.poset.comparable(c, b) {
                        continue;
                    }
                    let top = self.join(a, b);
                    let bot = self.meet(c, b);
                    if self.join(c, b) == top && self.meet(a, b) == bot {
                        return Some([bot, a, c, b, top]);
                    }
                }
            }
        }
        None
    }

    /// A diamond sublattice `[0', a, b, c, 1']` of three incomparable
    /// elements with common pairwise joins and meets.
    pub fn find_m3(&self) -> Option<[usize; 5]> {
        let m = self.len();
        for a in 0..m {
            for b in a + 1..m {
                if self.poset.comparable(a, b) {
                    continue;
                }
                let top = self.join(a, b);
                let bot = self.meet(a, b);
                for c in b + 1..m {
                    if self.join(a, c) == top
                        && self.join(b, c) == top
                        && self.meet(a, c) == bot
                        && self.meet(b, c) == bot
                        && !self.poset.comparable(a, c)
                        && !self.poset.comparable(b, c)
                    {
                        return Some([bot, a, b, c, top]);
                    }
                }
            }
        }
        None
    }

    /// First element that is not the join of the join-irreducibles below it.
    pub fn spatiality_witness(&self) -> Option<usize> {
        let ji = self.join_irreducibles();
        (0..self.len())
            .find(|&x| self.join_all(ji.iter().copied().filter(|&j| self.leq(j, x))) != x)
    }

    pub fn is_spatial(&self) -> bool {
        self.spatiality_witness().is_none()
    }

    /// Greatest `y` with `x ∧ y = 0`.
    pub fn pseudocomplement(&self, x: usize) -> Option<usize> {
        let s = self.join_all((0..self.len()).filter(|&y| self.meet(x, y) == self.bottom));
        (self.meet(x, s) == self.bottom).then_some(s)
    }

    /// Least `y` with `x ∨ y = 1`.
    pub fn dual_pseudocomplement(&self, x: usize) -> Option<usize> {
        let s = self.meet_all((0..self.len()).filter(|&y| self.join(x, y) == self.top));
        (self.join(x, s) == self.top).then_some(s)
    }

    /// Greatest `x` with `a ∧ x ≤ b`.
    pub fn relative_pseudocomplement(&self, a: usize, b: usize) -> Option<usize> {
        let s = self.join_all((0..self.len()).filter(|&x| self.leq(self.meet(a, x), b)));
        self.leq(self.meet(a, s), b).then_some(s)
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.len()];
        for &i in self.poset.linear_extension() {
            h[i] = self.lower_covers[i]
                .iter()
                .map(|&c| h[c] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }
}

/// The chain `0 < 1 < ... < k-1`.
pub fn chain(k: usize) -> Result<FiniteLattice<usize>> {
    if k == 0 {
        return Err(Error::Precondition(
            "a chain needs at least one element".into(),
        ));
    }
    if k > MAX_LATTICE_SIZE {
        return Err(Error::Capacity {
            stage: "chain",
            size: k,
            cap: MAX_LATTICE_SIZE,
        });
    }
    FiniteLattice::new((0..k).collect(), |a, b| a <= b)
}

/// Direct product ordered componentwise.
pub fn product<A, B>(a: &FiniteLattice<A>, b: &FiniteLattice<B>) -> Result<FiniteLattice<(A, B)>>
where
    A: Clone + Eq + Hash,
    B: Clone + Eq + Hash,
{
    let size = a.len() * b.len();
    if size > MAX_LATTICE_SIZE {
        return Err(Error::Capacity {
            stage: "product",
            size,
            cap: MAX_LATTICE_SIZE,
        });
    }
    let mut elements = Vec::with_capacity(size);
    let mut coords = HashMap::with_capacity(size);
    for i in 0..a.len() {
        for j in 0..b.len() {
            coords.insert((a.element(i).clone(), b.element(j).clone()), (i, j));
            elements.push((a.element(i).clone(), b.element(j).clone()));
        }
    }
    FiniteLattice::new(elements, |x, y| {
        let (xi, xj) = coords[x];
        let (yi, yj) = coords[y];
        a.leq(xi, yi) && b.leq(xj, yj)
    })
}

/// Whether two lattices are order-isomorphic, by backtracking over
/// candidates with matching (height, lower-cover count, upper-cover count).
pub fn are_isomorphic<A, B>(a: &FiniteLattice<A>, b: &FiniteLattice<B>) -> Result<bool> {
    for len in [a.len(), b.len()] {
        if len > MAX_ISOMORPHISM_SIZE {
            return Err(Error::Capacity {
                stage: "isomorphism search",
                size: len,
                cap: MAX_ISOMORPHISM_SIZE,
            });
        }
    }
    if a.len() != b.len() {
        return Ok(false);
    }
    let signature = |h: &[usize], lc: &dyn Fn(usize) -> usize, uc: &dyn Fn(usize) -> usize, i| {
        (h[i], lc(i), uc(i))
    };
    let ha = a.heights();
    let hb = b.heights();
    let sa: Vec<_> = (0..a.len())
        .map(|i| {
            signature(
                &ha,
                &|k| a.lower_covers(k).len(),
                &|k| a.upper_covers(k).len(),
                i,
            )
        })
        .collect();
    let sb: Vec<_> = (0..b.len())
        .map(|i| {
            signature(
                &hb,
                &|k| b.lower_covers(k).len(),
                &|k| b.upper_covers(k).len(),
                i,
            )
        })
        .collect();
    let mut ma = sa.clone();
    let mut mb = sb.clone();
    ma.sort_unstable();
    mb.sort_unstable();
    if ma != mb {
        return Ok(false);
    }

    let order: Vec<usize> = a.poset().linear_extension().to_vec();
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];

    #[allow(clippy::too_many_arguments)]
    fn extend<A, B>(
        depth: usize,
        order: &[usize],
        a: &FiniteLattice<A>,
        b: &FiniteLattice<B>,
        sa: &[(usize, usize, usize)],
        sb: &[(usize, usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for y in 0..b.len() {
            if used[y] || sa[x] != sb[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let v = map[u];
                a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if extend(depth + 1, order, a, b, sa, sb, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    Ok(extend(0, &order, a, b, &sa, &sb, &mut map, &mut used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bowtie() -> FinitePoset<usize> {
        // 0,1 minimal; 2,3 maximal; both minimal below both maximal.
        FinitePoset::new(vec![0, 1, 2, 3], |a, b| a == b || (*a < 2 && *b >= 2)).unwrap()
    }

    fn pentagon() -> FiniteLattice<&'static str> {
        let up = |a: &&str, b: &&str| -> bool {
            let rank = |s: &str| match s {
                "0" => 0,
                "1" => 4,
                _ => 1,
            };
            a == b || rank(a) == 0 || rank(b) == 4 || (*a == "a" && *b == "c")
        };
        FiniteLattice::new(vec!["0", "a", "b", "c", "1"], up).unwrap()
    }

    fn diamond3() -> FiniteLattice<u8> {
        FiniteLattice::new(vec![0, 1, 2, 3, 4], |a, b| a == b || *a == 0 || *b == 4).unwrap()
    }

    fn boolean(n: usize) -> FiniteLattice<ElementSet> {
        FiniteLattice::from_sets(crate::set::all_subsets(n).collect()).unwrap()
    }

    #[test]
    fn rejects_duplicates_and_non_orders() {
        assert_eq!(
            FinitePoset::new(vec![1, 1], |a, b| a <= b).unwrap_err(),
            Error::DuplicateElement(0, 1)
        );
        assert!(matches!(
            FinitePoset::new(vec![1, 2], |_, _| true),
            Err(Error::NotAPartialOrder(_))
        ));
        assert!(matches!(
            FinitePoset::new(vec![0, 1, 2], |a, b| a == b || b - a == 1),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        let p = bowtie();
        assert!(!p.is_lattice());
        assert_eq!(p.lattice_witness(), Some((0, 1, "join")));
        assert_eq!(
            FiniteLattice::from_poset(p).unwrap_err(),
            Error::NotALattice(0, 1, "join")
        );
    }

    #[test]
    fn single_element_lattice() {
        let l = chain(1).unwrap();
        assert_eq!(l.bottom(), l.top());
        assert!(l.join_irreducibles().is_empty());
        assert!(l.is_spatial());
        assert!(l.is_distributive());
        assert!(l.atoms().is_empty());
    }

    #[test]
    fn chains() {
        let c2 = chain(2).unwrap();
        assert_eq!(c2.join_irreducibles(), vec![1]);
        assert_eq!(c2.cover_edges(), vec![(0, 1)]);
        let c3 = chain(3).unwrap();
        assert_eq!(c3.atoms(), vec![1]);
        assert!(c3.is_distributive());
        assert_eq!(c3.join_primes(), c3.join_irreducibles());
        assert!(chain(0).is_err());
    }

    #[test]
    fn products() {
        let p = product(&chain(2).unwrap(), &chain(3).unwrap()).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.cover_edges().len(), 7);
        let d = product(&chain(2).unwrap(), &chain(2).unwrap()).unwrap();
        assert!(are_isomorphic(&d, &boolean(2)).unwrap());
    }

    #[test]
    fn isomorphism() {
        let d = product(&chain(2).unwrap(), &chain(2).unwrap()).unwrap();
        assert!(!are_isomorphic(&d, &chain(4).unwrap()).unwrap());
        assert!(are_isomorphic(&pentagon(), &pentagon()).unwrap());
        assert!(!are_isomorphic(&pentagon(), &diamond3()).unwrap());
        let big = chain(65).unwrap();
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn pentagon_and_diamond_are_not_distributive() {
        let n5 = pentagon();
        assert!(!n5.is_distributive());
        assert!(n5.find_n5().is_some());
        assert!(n5.find_m3().is_none());
        // a and c are join-irreducible in N5, but c is not join-prime.
        let c = n5.poset().index_of(&"c").unwrap();
        assert!(n5.join_irreducibles().contains(&c));
        assert!(!n5.join_primes().contains(&c));

        let m3 = diamond3();
        assert!(!m3.is_distributive());
        assert!(m3.find_m3().is_some());
        assert!(m3.join_primes().is_empty());
    }

    #[test]
    fn pseudocomplements_in_boolean_lattice() {
        let b = boolean(3);
        for x in 0..b.len() {
            let comp = b.element(x).complement(3);
            let ci = b.poset().index_of(&comp).unwrap();
            assert_eq!(b.pseudocomplement(x), Some(ci));
            assert_eq!(b.dual_pseudocomplement(x), Some(ci));
            for y in 0..b.len() {
                if b.leq(x, y) {
                    assert_eq!(b.relative_pseudocomplement(x, y), Some(b.top()));
                }
            }
        }
    }

    #[test]
    fn pseudocomplement_can_be_absent() {
        // In M3 the atoms have no greatest disjoint element.
        let m3 = diamond3();
        assert_eq!(m3.pseudocomplement(1), None);
        assert_eq!(m3.pseudocomplement(0), Some(4));
    }

    fn random_set_lattice() -> impl Strategy<Value = FiniteLattice<ElementSet>> {
        // Union-closed families with ∅ and the full set are lattices.
        (2usize..6).prop_flat_map(|n| {
            proptest::collection::vec(0..(1u64 << n), 0..7).prop_map(move |gens| {
                let mut members = vec![ElementSet::EMPTY];
                for g in gens
                    .into_iter()
                    .map(ElementSet::from_bits)
                    .chain([ElementSet::full(n)])
                {
                    let extra: Vec<_> = members.iter().map(|m| m.union(g)).collect();
                    members.extend(extra);
                    members.sort();
                    members.dedup();
                }
                FiniteLattice::from_sets(members).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn lattice_laws(l in random_set_lattice()) {
            let m = l.len();
            for x in 0..m {
                prop_assert_eq!(l.join(x, l.bottom()), x);
                prop_assert_eq!(l.meet(x, l.top()), x);
                for y in 0..m {
                    prop_assert_eq!(l.join(x, y), l.join(y, x));
                    prop_assert_eq!(l.meet(x, y), l.meet(y, x));
                    prop_assert_eq!(l.join(x, l.meet(x, y)), x);
                    prop_assert_eq!(l.meet(x, l.join(x, y)), x);
                    prop_assert_eq!(l.leq(x, y), l.join(x, y) == y);
                    prop_assert_eq!(l.leq(x, y), l.meet(x, y) == x);
                }
            }
            for x in (0..m).step_by(2) {
                for y in 0..m {
                    for z in (0..m).step_by(3) {
                        prop_assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
                        prop_assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
                    }
                }
            }
        }

        #[test]
        fn covers_are_the_transitive_reduction(l in random_set_lattice()) {
            let m = l.len();
            for x in 0..m {
                for y in 0..m {
                    let covers = l.lt(x, y) && !(0..m).any(|z| l.lt(x, z) && l.lt(z, y));
                    prop_assert_eq!(l.upper_covers(x).contains(&y), covers);
                    prop_assert_eq!(l.lower_covers(y).contains(&x), covers);
                }
            }
        }

        #[test]
        fn irreducible_prime_and_atom_inclusions(l in random_set_lattice()) {
            let ji = l.join_irreducibles();
            let jp = l.join_primes();
            prop_assert!(jp.iter().all(|p| ji.contains(p)));
            prop_assert!(l.atoms().iter().all(|a| ji.contains(a)));
            if l.is_distributive() {
                prop_assert_eq!(&jp, &ji);
            }
            // finite lattices are spatial, recomputed rather than assumed
            prop_assert!(l.is_spatial());
            for x in 0..l.len() {
                let below = ji.iter().copied().filter(|&j| l.leq(j, x));
                prop_assert_eq!(l.join_all(below), x);
            }
        }

        #[test]
        fn distributivity_agrees_with_full_triple_scan(l in random_set_lattice()) {
            let m = l.len();
            let full = (0..m).all(|x| (0..m).all(|y| (0..m).all(|z| {
                l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))
            })));
            prop_assert_eq!(l.is_distributive(), full);
            // a finite lattice is distributive iff it has no N5 or M3
            prop_assert_eq!(full, l.find_n5().is_none() && l.find_m3().is_none());
        }

        #[test]
        fn relative_pseudocomplement_is_greatest(l in random_set_lattice()) {
            let m = l.len();
            for a in 0..m {
                for b in 0..m {
                    let cands: Vec<usize> = (0..m).filter(|&x| l.leq(l.meet(a, x), b)).collect();
                    let greatest = cands.iter().copied().find(|&g| cands.iter().all(|&c| l.leq(c, g)));
                    prop_assert_eq!(l.relative_pseudocomplement(a, b), greatest);
                }
            }
        }

        #[test]
        fn isomorphic_to_a_relabelling(l in random_set_lattice(), seed in any::<u64>()) {
            prop_assume!(l.len() <= MAX_ISOMORPHISM_SIZE);
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..l.len()).collect();
            perm.shuffle(&mut rng);
            let relabelled = FiniteLattice::new(perm.clone(), |a, b| l.leq(*a, *b)).unwrap();
            prop_assert!(are_isomorphic(&l, &relabelled).unwrap());
        }
    }
}
