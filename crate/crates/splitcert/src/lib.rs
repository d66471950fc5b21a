//! splitcert: an exact computational commutative algebra engine that decides,
//! constructs, and certifies free direct-summand splittings of finitely
//! presented modules over multivariate polynomial rings.
//!
//! Everything is exact (arbitrary-precision rationals or prime fields), and
//! every positive answer from the splitting search is a machine-checkable
//! certificate: elements and functionals whose defining identities re-verify
//! from scratch. Negative answers carry a Gröbner-basis proof; a search that
//! runs out of budget says so instead of guessing.

pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod modules;
pub mod poly;
pub mod render;
pub mod session;
pub mod splitter;

pub use error::{Error, Result};
