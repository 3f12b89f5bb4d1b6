use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("duplicate universe label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("set contains bits outside a universe of size {size}")]
    OutOfUniverse { size: usize },
    #[error("{stage}: size {size} exceeds the cap of {cap}")]
    Capacity {
        stage: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("duplicate element at positions {0} and {1}")]
    DuplicateElement(usize, usize),
    #[error("order relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("poset is not a lattice: elements {0} and {1} have no {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("internal consistency failure: {0}")]
    Defect(String),
}
