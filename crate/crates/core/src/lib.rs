//! Self-conjugate t-core partition counts `sc_t(n)` computed four independent
//! ways and cross-checked against each other:
//!
//! - [`combinatorics`]: brute-force enumeration of partitions and hooks, plus
//!   the alternating-composition recursions,
//! - [`qseries`]: exact eta-quotient expansions of the generating functions,
//! - [`quadforms`] and [`arith`]: closed formulas for small `t` through
//!   quadratic forms, divisor sums and elliptic curve coefficients,
//! - [`circle`]: Dedekind sums, multiplier systems, Gauss sums and the
//!   circle-method main term for `t >= 10`.

pub mod arith;
pub mod circle;
pub mod combinatorics;
mod error;
mod limits;
pub mod qseries;
pub mod quadforms;
pub mod table;

pub use error::{Error, Result};
pub use limits::Limits;
