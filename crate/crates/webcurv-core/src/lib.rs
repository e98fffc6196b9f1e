//! Exact symbolic kernel for planar web geometry.
//!
//! Everything is computed over a number field ℚ(α) presented by a monic
//! minimal polynomial; there is no floating point anywhere in the kernel
//! (the only numerics live in [`numeric`], a dyadic interval layer used to
//! pin integration constants of logarithmic identities).
//!
//! The crate is `no_std` + `alloc`: all values are immutable after
//! construction and freely shareable across threads.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod abelrel;
pub mod binform;
pub mod catalog;
pub mod error;
pub mod field;
pub mod geometry;
pub mod jet;
pub mod numeric;
pub mod poly;
pub mod ratfunc;
pub mod webops;

pub use error::{Error, Result};
pub use field::{FieldScalar, NumberField, Rational};
pub use geometry::{Foliation, OneForm, TwoForm, VectorField, Web};
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
