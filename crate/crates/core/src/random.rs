//! Random and exhaustive relation generators for differential testing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::relations::Relation;
use crate::set::{ElementSet, Universe};

/// Each ordered pair is present independently with probability `density`.
pub fn relation<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Relation {
    let nbhd = (0..n)
        .map(|_| (0..n).filter(|_| rng.random_bool(density)).collect())
        .collect();
    Relation::from_neighborhoods(Universe::numbered(n).unwrap(), nbhd).unwrap()
}

pub fn reflexive_relation<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Relation {
    relation(rng, n, density).reflexive_closure()
}

/// Equivalence drawn by assigning every element a class label uniformly.
pub fn equivalence<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Relation {
    let classes = rng.random_range(1..=n);
    let mut labels: Vec<usize> = (0..n).map(|_| rng.random_range(0..classes)).collect();
    labels.shuffle(rng);
    let nbhd = (0..n)
        .map(|x| (0..n).filter(|&y| labels[y] == labels[x]).collect())
        .collect();
    Relation::from_neighborhoods(Universe::numbered(n).unwrap(), nbhd).unwrap()
}

pub fn quasiorder<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Relation {
    quasiorder_closure(&reflexive_relation(rng, n, density))
}

/// Reflexive-transitive closure.
pub fn quasiorder_closure(r: &Relation) -> Relation {
    let n = r.size();
    let mut nbhd: Vec<ElementSet> = r.reflexive_closure().neighborhoods().to_vec();
    for k in 0..n {
        for x in 0..n {
            if nbhd[x].contains(k) {
                nbhd[x] = nbhd[x].union(nbhd[k]);
            }
        }
    }
    Relation::from_neighborhoods(r.shared_universe(), nbhd).unwrap()
}

/// Every reflexive relation on an `n`-element universe, `2^(n(n-1))` of them.
pub fn all_reflexive_relations(n: usize) -> impl Iterator<Item = Relation> {
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    assert!(
        off_diagonal.len() < 32,
        "exhaustive sweep too large for n = {n}"
    );
    let universe = std::sync::Arc::new(Universe::numbered(n).unwrap());
    (0..1u64 << off_diagonal.len()).map(move |mask| {
        let pairs = (0..n).map(|x| (x, x)).chain(
            off_diagonal
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p),
        );
        Relation::from_pairs(universe.clone(), pairs).unwrap()
    })
}
