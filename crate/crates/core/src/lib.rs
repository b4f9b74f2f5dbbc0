//! Exact computer algebra for quantum operations.

pub mod coeff;
pub mod error;
pub mod pairing;
pub mod perm;
pub mod freealg;
pub mod linalg;
pub mod primcheck;
pub mod ops;
pub mod presets;

pub use error::{Error, Result};
