//! Exact-arithmetic toolkit for integer partitions, hook-length statistics,
//! core/quotient decompositions and truncated multivariate series, together
//! with a registry of generating-function identities that are checked
//! coefficient-by-coefficient over the rationals.
//!
//! The crate is organised in five layers:
//!
//! * [`partition`] — partitions, hooks, modular hook multisets and related
//!   statistics, plus enumeration;
//! * [`littlewood`] — 0/1 boundary sequences and the two decompositions
//!   `phi` (core + quotient) and `psi` (kernel + cofactor);
//! * [`series`] — truncated multivariate power/Laurent series with exact
//!   rational coefficients;
//! * [`elliptic`] — truncated theta functions and the machinery for the
//!   elliptic checks;
//! * [`harness`] — the identity registry and the verifier.
//!
//! Everything is exact: there is no floating point anywhere in the crate.

pub mod elliptic;
pub mod harness;
pub mod littlewood;
pub mod parallel;
pub mod partition;
pub mod series;

pub use partition::{HookMultiset, Partition, Square};
