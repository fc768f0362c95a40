pub mod cell;
pub mod chain;
pub mod corpus;
pub mod error;
pub mod figures;
pub mod fnset;
pub mod hga;
pub mod hochschild_ring;
pub mod homology_ring;
pub mod loop_model;
pub mod simplicial;
pub mod suite;
pub mod twisted;

pub use error::{Error, Result};
