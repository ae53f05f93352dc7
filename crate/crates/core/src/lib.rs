//! Exact-arithmetic construction and certification of linear matrix
//! pencils whose eigenvalue pairing breaks under quantisation.
//!
//! Everything load-bearing is computed over the rationals: determinants,
//! characteristic polynomials, gcd/squarefree multiplicity structure,
//! resultants and discriminants, matrix-algebra span closure. A floating
//! point eigensolver exists only as a cross-check oracle.

pub mod algebra;
pub mod charpoly;
pub mod error;
pub mod family;
pub mod historic;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod quantizer;
pub mod quotient;
pub mod scalar;

pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use poly::{RationalPolynomial, SquarefreeDecomposition};
pub use scalar::{GaussianRational, Rational};
