//! Leibniz n-algebras over the rationals: the fundamental identity,
//! Lie-central series, multiplier bounds, and the Pascal-triangle
//! combinatorics behind them.

pub mod algebra;
pub mod bounds;
pub mod combinatorics;
pub mod error;
pub mod ideal;
pub mod identity;
pub mod io;
pub mod linalg;
pub mod par;
pub mod series;
pub mod tuples;

pub use algebra::StructureConstants;
pub use error::{Error, Result};
pub use linalg::{QMatrix, QVector, Rational, Subspace};
