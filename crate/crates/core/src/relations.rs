//! Finite binary relations stored as neighbourhood lists.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::set::{ElementSet, Universe};

/// A binary relation `R` on a finite universe, stored as `R(x)` for every `x`.
///
/// The inverse neighbourhoods are precomputed since every approximation
/// operator needs one direction or the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    universe: Arc<Universe>,
    forward: Vec<ElementSet>,
    backward: Vec<ElementSet>,
}

impl Relation {
    pub fn from_neighborhoods(
        universe: impl Into<Arc<Universe>>,
        neighborhoods: Vec<ElementSet>,
    ) -> Result<Self> {
        let universe = universe.into();
        let n = universe.len();
        if neighborhoods.len() != n {
            return Err(Error::Precondition(format!(
                "expected {n} neighbourhoods, got {}",
                neighborhoods.len()
            )));
        }
        if neighborhoods.iter().any(|s| !s.fits(n)) {
            return Err(Error::OutOfUniverse { size: n });
        }
        let backward = transpose(&neighborhoods);
        Ok(Relation {
            universe,
            forward: neighborhoods,
            backward,
        })
    }

    pub fn from_pairs(
        universe: impl Into<Arc<Universe>>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let universe = universe.into();
        let n = universe.len();
        let mut nbhd = vec![ElementSet::EMPTY; n];
        for (x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::OutOfUniverse { size: n });
            }
            nbhd[x].insert(y);
        }
        Self::from_neighborhoods(universe, nbhd)
    }

    /// Builds a relation from labelled neighbourhood lists, e.g.
    /// `[("1", &["1", "2"]), ...]`. Elements without an entry get `R(x) = ∅`.
    pub fn from_labels(
        universe: impl Into<Arc<Universe>>,
        rows: &[(&str, &[&str])],
    ) -> Result<Self> {
        let universe = universe.into();
        let mut nbhd = vec![ElementSet::EMPTY; universe.len()];
        for (x, ys) in rows {
            let x = universe.index_of(x)?;
            nbhd[x] = universe.set_of(ys.iter().copied())?;
        }
        Self::from_neighborhoods(universe, nbhd)
    }

    pub fn identity(universe: impl Into<Arc<Universe>>) -> Self {
        let universe = universe.into();
        let nbhd = (0..universe.len()).map(ElementSet::singleton).collect();
        Self::from_neighborhoods(universe, nbhd).expect("identity fits its universe")
    }

    pub fn full(universe: impl Into<Arc<Universe>>) -> Self {
        let universe = universe.into();
        let nbhd = vec![universe.full(); universe.len()];
        Self::from_neighborhoods(universe, nbhd).expect("full relation fits its universe")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn shared_universe(&self) -> Arc<Universe> {
        Arc::clone(&self.universe)
    }

    /// Number of elements of the universe.
    pub fn size(&self) -> usize {
        self.forward.len()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    /// `R(x)`.
    pub fn neighborhood(&self, x: usize) -> ElementSet {
        self.forward[x]
    }

    /// `R(x)` looked up by label.
    pub fn neighborhood_of(&self, label: &str) -> Result<ElementSet> {
        Ok(self.forward[self.universe.index_of(label)?])
    }

    /// `R̆(x) = {y : x ∈ R(y)}`.
    pub fn inverse_neighborhood(&self, x: usize) -> ElementSet {
        self.backward[x]
    }

    pub fn neighborhoods(&self) -> &[ElementSet] {
        &self.forward
    }

    pub fn inverse_neighborhoods(&self) -> &[ElementSet] {
        &self.backward
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.forward[x].contains(y)
    }

    pub fn inverse(&self) -> Relation {
        Relation {
            universe: Arc::clone(&self.universe),
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    pub fn reflexive_closure(&self) -> Relation {
        let nbhd = self
            .forward
            .iter()
            .enumerate()
            .map(|(x, s)| s.with(x))
            .collect();
        Self::from_neighborhoods(Arc::clone(&self.universe), nbhd).expect("closure fits")
    }

    pub fn is_reflexive(&self) -> bool {
        self.forward.iter().enumerate().all(|(x, s)| s.contains(x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.forward == self.backward
    }

    pub fn is_transitive(&self) -> bool {
        // x R y and y R z imply x R z, i.e. R(y) ⊆ R(x) whenever y ∈ R(x).
        self.forward
            .iter()
            .all(|&rx| rx.iter().all(|y| self.forward[y].is_subset(rx)))
    }

    pub fn is_quasiorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_quasiorder() && self.is_symmetric()
    }

    /// Elements whose neighbourhood has exactly one member.
    pub fn singletons(&self) -> ElementSet {
        self.forward
            .iter()
            .enumerate()
            .filter(|(_, s)| s.len() == 1)
            .map(|(x, _)| x)
            .collect()
    }

    /// Core of `R(x)`: members `w` of `R(x)` such that every neighbourhood
    /// containing `w` contains all of `R(x)`.
    pub fn core(&self, x: usize) -> ElementSet {
        let rx = self.forward[x];
        rx.iter()
            .filter(|&w| {
                self.backward[w]
                    .iter()
                    .all(|y| rx.is_subset(self.forward[y]))
            })
            .collect()
    }

    /// Core of `R̆(x)`.
    pub fn inverse_core(&self, x: usize) -> ElementSet {
        let rx = self.backward[x];
        rx.iter()
            .filter(|&w| {
                self.forward[w]
                    .iter()
                    .all(|y| rx.is_subset(self.backward[y]))
            })
            .collect()
    }

    /// Number of ordered pairs in the relation.
    pub fn pair_count(&self) -> usize {
        self.forward.iter().map(|s| s.len()).sum()
    }
}

fn transpose(nbhd: &[ElementSet]) -> Vec<ElementSet> {
    let mut out = vec![ElementSet::EMPTY; nbhd.len()];
    for (x, s) in nbhd.iter().enumerate() {
        for y in s.iter() {
            out[y].insert(x);
        }
    }
    out
}
