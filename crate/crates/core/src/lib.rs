//! Spectral geometry of minimal submanifolds in Berger spheres.
//!
//! Modules:
//! - [`berger`]: metric, Killing field, curvature, geodesic-sphere and Tai embeddings
//! - [`spectra`]: Laplace spectra of Berger spheres and Clifford hypersurfaces
//! - [`jacobi`]: Jacobi spectra, index and nullity of the model submanifolds
//! - [`oracle`]: independent brute-force and sampling checks
//! - [`stability`]: stability predicates, moduli of Clifford tori, phase data
//! - [`cli`]: the `berger` command line

pub mod berger;
pub mod cli;
pub mod error;
pub mod exact;
pub mod jacobi;
pub mod oracle;
pub mod spectra;
pub mod stability;

pub use error::{Error, Result};
