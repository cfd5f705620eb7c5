//! Exact computation with connected Hopf monoids in vector species.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactalg`]: rationals, truncated power series, cycle index polynomials
//!   and exact linear algebra.
//! - [`species`]: finite label sets, combinatorial structures, sparse vectors
//!   and the generating series of a species.
//! - [`structures`]: concrete Hopf monoids (`E`, `L`, `Π`, `Σ`, `Pal`, ...)
//!   and the canonical morphisms between them.
//! - [`axioms`]: exhaustive small-size verification of the Hopf monoid axioms.
//! - [`seqtests`]: necessary conditions on dimension sequences.
//! - [`kernels`]: primitives, Lie and Hopf kernels, explicit bases and the
//!   factorization checks.
//!
//! No floating point is used anywhere; every coefficient is an exact rational.

pub mod axioms;
pub mod error;
pub mod exactalg;
pub mod kernels;
pub mod report;
pub mod seqtests;
pub mod species;
pub mod structures;

pub use error::{Error, Result};
pub use exactalg::{Rational, TruncatedSeries};
pub use species::{Decomposition, FiniteSet, Label, QTensor, QVector, Species, Structure};
pub use structures::{HopfMonoid, HopfMorphism};
