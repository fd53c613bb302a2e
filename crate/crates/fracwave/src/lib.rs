//! Fractional powers of the wave operator on gridded spacetime data.
//!
//! Three routes compute □^α f: the Fourier multiplier ([`symbol`]), the
//! hypersingular integral ([`hypersingular`]) and the AdS extension problem
//! ([`extension`], [`solver`]). [`geometry`] covers product spaces and global AdS.

pub mod config;
pub mod error;
pub mod extension;
pub mod geometry;
pub mod grid;
pub mod hypersingular;
pub mod io;
pub mod report;
pub mod sampler;
pub mod solver;
pub mod spectral;
pub mod symbol;
pub mod validate;

pub use error::{Error, Result};
pub use fracwave_core::{Complex64, FractionalOrder};
pub use grid::{ScalarField, SpacetimeGrid, SpectralField};
