pub mod algebras;
pub mod approximations;
pub mod checks;
pub mod error;
pub mod fixtures;
pub mod laws;
pub mod order;
pub mod random;
pub mod relations;
pub mod roughsets;
pub mod set;
