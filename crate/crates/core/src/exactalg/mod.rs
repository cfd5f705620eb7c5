//! Exact arithmetic substrate: rationals, truncated power series, cycle
//! index polynomials and linear algebra over the rationals.

pub mod cycleindex;
pub mod linalg;
pub mod rational;
pub mod series;

pub use cycleindex::{CycleIndexPoly, Monomial, Specialization};
pub use linalg::{qmatrix_kernel, qmatrix_rank, span_contains, Echelon, QMatrix, SparseRow};
pub use rational::{parse_rational, rat, Rational};
pub use series::{binomial_transform, TruncatedSeries, DEFAULT_ORDER};
