//! Exact rational arithmetic, square detection and rational root finding.

mod poly;
mod rat;
mod roots;

pub use poly::Poly;
pub use rat::{int_sqrt, parse_list, Rat};
pub use roots::rational_roots;

/// Shorthand for parsing a rational literal; panics on malformed input, so
/// only use it with constants.
#[doc(hidden)]
pub fn rat(s: &str) -> Rat {
    s.parse().unwrap_or_else(|e| panic!("bad rational literal {s:?}: {e}"))
}
