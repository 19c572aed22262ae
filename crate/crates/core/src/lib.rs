//! Exact monoid rings, polynomial rings and formal power series.
//!
//! * [`ring`]: coefficient rings (ℤ, ℚ, ℚ(i), ℤ/n) behind the [`Ring`] trait.
//! * [`monoid`]: exponent vectors, words, cyclic groups and products.
//! * [`monoid_ring`]: `R[M]` with convolution, evaluation and currying.
//! * [`polynomial`]: `R[x_i]` as the monoid ring over exponent vectors.
//! * [`series`]: lazy, memoized `R[[x_1, ..., x_n]]`.
//! * [`completion`]: truncation towers and evaluation in `R[y]/(y^k)`.
//! * [`expr`]: the expression language used by the command-line tool.

pub mod completion;
pub mod expr;
pub mod monoid;
pub mod monoid_ring;
pub mod polynomial;
pub mod report;
pub mod ring;
pub mod sampling;
pub mod series;
mod text;

pub use monoid::{ExponentVector, Monoid};
pub use monoid_ring::MonoidRing;
pub use polynomial::{polynomial_ring, Polynomial, PolynomialRing};
pub use report::Report;
pub use ring::Ring;
pub use series::PowerSeries;
