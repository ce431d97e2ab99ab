//! Exact rational polynomial arithmetic and the backward-difference calculus.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! equality of polynomials is decidable and used directly in tests, and no
//! operation introduces rounding.

mod basis;
mod exponent;
pub mod scalar;
mod poly;
mod series;

pub use basis::{
    from_upper_factorial_basis, rising_factorial_poly, to_upper_factorial_basis, upper_factorial,
    upper_factorial_product,
};
pub use exponent::{box_iter, ExponentVec};
pub use poly::{MultiPoly, TermJson};
pub use series::{series_inv_pow, TruncatedSeries};
