//! Exact polynomial-map algebra over ℚ.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`] : sparse multivariate polynomials, parsing and printing, gcds;
//! * [`linalg`] : polynomial and rational matrices, Jacobians, determinants;
//! * [`factor`] : square-freeness, factorization over ℚ and absolute
//!   irreducibility certificates;
//! * [`constructions`] : dimension-extension, gradient and symmetric
//!   reductions of Keller maps, Družkowski lifts, tame sequences;
//! * [`verify`] : seeded instance generators and property checkers.

pub mod constructions;
pub mod error;
pub mod factor;
pub mod linalg;
pub mod mapfile;
pub mod poly;
pub mod rational;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{PolyMap, Polynomial, VariableFrame};
pub use linalg::{PolyMatrix, ScalarMatrix};
pub use mapfile::MapFile;
pub use rational::Rational;
pub use verdict::Verdict;
