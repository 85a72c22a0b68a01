//! Exact moment-matrix certificates for max clique on random graphs.
//!
//! The library builds the dual certificate that a degree-2r sum-of-squares
//! relaxation assigns to the clique axioms of a graph, entirely in exact
//! rational arithmetic: the moment functional, the moment matrices over
//! r-subsets and over all subsets of size at most r, the filled matrix M′
//! and its decomposition into expectation + locally-random + global-error
//! parts, and the knapsack certificate on the complete graph.  On top of the
//! exact layer sit a dense symmetric eigensolver for PSD verdicts and
//! spectral norms, closed-form evaluators for the tail and norm bounds the
//! certificate's analysis relies on, and a Monte Carlo harness that compares
//! empirical statistics against those bounds.
//!
//! Modules, bottom up:
//!
//! * [`combinat`]: arbitrary-precision binomials, exact rationals, and the
//!   colexicographic subset indexing every matrix row order is built on.
//! * [`graphs`]: bitset graphs, seeded G(n,1/2) sampling, clique counting,
//!   and the clique-degree function deg_G.
//! * [`ratmat`]: dense matrices over exact rationals and floats.
//! * [`johnson`]: the Johnson association scheme: D/P bases, exact change
//!   of basis, and closed-form spectra.
//! * [`certificate`]: the moment functional, M, M′, E + L + Δ, lifts,
//!   the knapsack certificate, and exact axiom/kernel/Gram checks.
//! * [`spectra`]: cyclic Jacobi eigensolver, PSD verdicts, spectral norms.
//! * [`bounds`]: closed-form bound evaluators.
//! * [`experiments`]: exact enumeration oracles and Monte Carlo trials.
//! * [`cli`]: the `cliquecert` command-line front end.

pub mod bounds;
pub mod certificate;
pub mod cli;
pub mod combinat;
pub mod experiments;
pub mod graphs;
pub mod johnson;
pub mod ratmat;
pub mod spectra;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The request exceeds a documented capacity cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// The certificate degenerates (no 2r-clique exists, so the moment of 1
    /// is zero and nothing can be normalized).
    #[error("degenerate certificate: {0}")]
    Degenerate(String),
    /// A matrix that must be numerically PSD is not.
    #[error("matrix is not PSD: min eigenvalue {min_eigenvalue:e} below -{tolerance:e} x scale")]
    NotPsd { min_eigenvalue: f64, tolerance: f64 },
    /// An iterative numerical routine failed to converge.
    #[error("numerical routine did not converge: {0}")]
    NonConvergence(String),
    /// I/O failure while reading or writing an artifact.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// A file being read does not match its documented format.
    #[error("parse error: {0}")]
    Parse(String),
    /// JSON serialization or deserialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
