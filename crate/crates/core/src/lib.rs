//! Exact arithmetic for difference Goncarov polynomials.
//!
//! The library is organized around the backward difference operator
//! `Δp(x) = p(x) - p(x-1)` acting on polynomials with arbitrary-precision
//! rational coefficients:
//!
//! - [`exact_poly`]: sparse multivariate polynomials over `BigRational`,
//!   the difference and shift operators, the upper-factorial basis
//!   `x^(n) = x(x+1)...(x+n-1)`, and box-truncated power series.
//! - [`goncarov_uni`]: univariate difference Goncarov polynomials by two
//!   independent constructions (linear recursion and determinant), the
//!   classical identities as checkable predicates, and lattice-path counting.
//! - [`goncarov_multi`]: the d-dimensional polynomials on a node grid,
//!   identity verifiers, Abel closed forms for linear grids, and closed-form
//!   counts of increasing U-parking functions for affine weight sets.
//! - [`combinatorics`]: ground-truth enumeration of lattice paths, bounded
//!   sequence tuples, and U-parking functions; every counting formula in the
//!   other modules is tested against these brute-force oracles.
//! - [`verify`]: seeded randomized suites over all identity verifiers and
//!   formula-vs-oracle sweeps, shared by the CLI and the test suite.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here may be freely shared across threads.

pub mod combinatorics;
pub mod error;
pub mod exact_poly;
pub mod goncarov_multi;
pub mod goncarov_uni;
mod linalg;
pub mod verify;

pub use error::{Error, Result};
pub use exact_poly::{ExponentVec, MultiPoly, TruncatedSeries};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
