//! Exact stringy invariants of three-dimensional A-D-E singularities.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: exact rationals, polynomials and rational functions in `w = uv`;
//! * [`catalog`]: resolution data (divisors, discrepancies, intersection graph)
//!   for every A-D-E type;
//! * [`engine`]: the stringy E-function, Euler number and index of a
//!   resolution graph, computed along independent routes;
//! * [`closed`]: the closed-form expressions used as oracles for the engine;
//! * [`global`]: compact threefolds with prescribed A-D-E points;
//! * [`verify`]: the cross-check battery behind `stringy verify`.

pub mod algebra;
pub mod catalog;
pub mod closed;
pub mod engine;
pub mod error;
pub mod global;
pub mod verify;

pub use algebra::{BigRational, Polynomial, RationalFunction};
pub use catalog::{build_graph, AdeType, Divisor, ResolutionGraph, SurfaceKind};
pub use engine::StringyResult;
pub use error::{Error, Result};
