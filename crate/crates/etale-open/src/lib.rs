//! Exact computation with etale images over concrete computable fields.
//!
//! The library materializes one topology three ways: the basic opens of the
//! etale-open topology on affine space are images of *standard etale pairs*
//! `(f, g)` — `f` monic in a fiber variable `y`, with `∂f/∂y` invertible
//! wherever `f = 0 ≠ g` — and this crate computes those images exactly
//!
//! * over finite fields, by enumeration ([`images::enumerate_finite`]),
//! * over the p-adics, by Hensel lifting with finite certificates
//!   ([`images::member_padic`]),
//! * over the reals, as finite unions of intervals with algebraic endpoints
//!   ([`images::real_intervals`]).
//!
//! Around that core sit exact field arithmetic ([`algebra`]), Groebner-basis
//! machinery that decides whether a pair really is etale ([`poly`], [`etale`]),
//! Weil restriction of scalars ([`weil`]), the Steinitz-number subfield
//! calculus for algebraic extensions of F_p ([`steinitz`]), and desk-scale
//! counting experiments ([`experiments`]).
//!
//! The `book/` directory of the repository walks through each piece with
//! runnable examples; its code blocks compile as doc-tests of this crate.

pub mod algebra;
pub mod etale;
pub mod experiments;
pub mod images;
pub mod poly;
pub mod steinitz;
pub mod weil;

mod book;
mod error;

pub use error::{Error, Result};
