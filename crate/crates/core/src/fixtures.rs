//! The three worked relations used throughout the tests and documentation.

use crate::relations::Relation;
use crate::set::Universe;

/// Reflexive, non-symmetric, non-transitive relation on `{1,2,3}` whose
/// completion is the regular double Stone algebra `2 × 3`.
pub fn stone_example() -> Relation {
    Relation::from_labels(
        Universe::numbered(3).unwrap(),
        &[("1", &["1", "2", "3"]), ("2", &["2"]), ("3", &["1", "3"])],
    )
    .unwrap()
}

/// Reflexive relation on `{1,2,3,4}` with `RS = DM(RS)` distributive and
/// spatial but not a Nelson algebra.
pub fn non_nelson_example() -> Relation {
    Relation::from_labels(
        Universe::numbered(4).unwrap(),
        &[
            ("1", &["1", "2"]),
            ("2", &["1", "2", "3"]),
            ("3", &["3"]),
            ("4", &["1", "3", "4"]),
        ],
    )
    .unwrap()
}

/// Tolerance on `{1,2,3,4}` whose upper approximations contain `N5`.
pub fn tolerance_example() -> Relation {
    Relation::from_labels(
        Universe::numbered(4).unwrap(),
        &[
            ("1", &["1", "2"]),
            ("2", &["1", "2", "3"]),
            ("3", &["2", "3", "4"]),
            ("4", &["3", "4"]),
        ],
    )
    .unwrap()
}
