//! Hermitian positive Jordan triple systems, bounded symmetric domains and
//! their symplectic invariants.
//!
//! The crate is organized around five building blocks:
//!
//! * [`jts`] — the four classical Jordan triple systems (rectangular,
//!   skew-symmetric and symmetric matrices, and the spin factor) with their
//!   triple products, trace form and Bergman-type operators;
//! * [`spectral`] — spectral decomposition of triple-system elements,
//!   spectral norm and the two membership tests for the bounded domain;
//! * [`embeddings`] — the ball → domain, domain → cylinder and
//!   domain → compact dual maps, together with a numerical pullback
//!   verifier for symplectic forms;
//! * [`quantum`] — exact quantum cohomology of complex Grassmannians
//!   (Littlewood–Richardson coefficients, rim-hook reduction,
//!   Gromov–Witten numbers and nonvanishing searches);
//! * [`capacities`] — a forward-chaining certificate engine that derives
//!   two-sided bounds for the Gromov width, Hofer–Zehnder capacities and
//!   related quantities on the spaces described by [`catalog`].
//!
//! All capacity values are exact rational multiples of π; numerical work is
//! confined to the embedding verifiers and the linear-algebra layer.

pub mod capacities;
pub mod catalog;
pub mod embeddings;
pub mod error;
pub mod json;
pub mod jts;
pub mod linalg;
pub mod quantum;
pub mod spectral;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
