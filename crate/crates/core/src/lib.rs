//! Exact mensuration of triangles and quadrilaterals.
//!
//! Lengths and areas are [`Surd`]s, exact values of the form `q·√r` with
//! rational `q` and squarefree `r`. The closed-form rules live in
//! [`mensuration`], the integer constructions from Pythagorean triples in
//! [`construct`], and [`oracle`] re-derives areas and concyclicity from
//! explicit coordinates at configurable decimal precision.

pub mod cli;
pub mod construct;
pub mod error;
pub mod exactnum;
pub mod mensuration;
pub mod oracle;
pub mod triples;

pub use error::{Error, Result};
pub use exactnum::{parse_decimal, ApproxScalar, ExactScalar, Rational, Surd};
