//! Exact ordered products in groups of formal series.
//!
//! The crate is organised bottom-up:
//!
//! - [`order`]: tree-like linear orderings on finite ordinals, given by sign
//!   sequences.
//! - [`free`]: truncated formal power series in non-commuting variables over
//!   the rationals, with evaluation morphisms, `log`/`exp`, binomial powers
//!   and span/ideal membership in the truncated coordinate space.
//! - [`product`]: the ordered product on `1 + m` obtained by evaluating the
//!   formal ordered product, together with a randomized axiom harness.
//! - [`chain`]: the formal chain-rule relations, multiplier family and the
//!   truncated ideal-membership check built on them.
//! - [`hahn`]: finitely supported series with rational exponents and a
//!   precision floor.
//! - [`tgroup`]: the group `x + o(x)` under composition, fractional iteration,
//!   growth orders, ordered products along tree orders, scales and the
//!   unique scale decomposition.
//! - [`verify`]: randomized verification suites shared by the CLI and the
//!   acceptance tests.

pub mod chain;
pub mod error;
pub mod free;
pub mod hahn;
pub mod order;
pub mod product;
pub mod random;
pub mod rational;
pub mod tgroup;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
