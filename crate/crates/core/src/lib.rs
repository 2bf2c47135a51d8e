//! Geometry of surfaces in Minkowski 3-space and the quantum mechanics of a
//! particle confined to them.
//!
//! Units: `hbar = 2m = 1` throughout, so energies come out in units of
//! `hbar^2 / (2 m R^2)` whenever a length scale `R` is present.

pub mod error;
pub mod lorentz;
pub mod numdiff;
pub mod revolution;
pub mod spectral;
pub mod surface;

pub use error::{Error, Result};
pub use lorentz::{
    classify_signature, classify_vector, lorentz_cross, lorentz_inner, CausalClass, MinkVector,
    Signature2, SignatureLabel, TAU_C,
};
