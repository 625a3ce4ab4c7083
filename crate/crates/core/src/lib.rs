//! Divisibility by 2 on quartic models `y^2 = f(x)` of elliptic curves over Q,
//! and its application to extending rational D(q)-quadruples to quintuples.
//!
//! Everything is computed in exact rational arithmetic.

pub mod error;
pub mod cli;
pub mod descent;
pub mod dioph;
pub mod exactnum;
pub mod ptsearch;
pub mod qmodel;
pub mod wmodel;

pub use error::{Error, Result};
pub use exactnum::{Poly, Rat};
