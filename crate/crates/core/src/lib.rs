//! Unique expansions in non-integer bases: sequences, exact base arithmetic,
//! classification of bases and points, and the components of `(1, inf) \ V`.
#![no_std]

extern crate alloc;

pub mod algebraic;
pub mod baseclass;
pub mod components;
pub mod error;
pub mod expansion;
pub mod field;
pub mod oracle;
pub mod poly;
pub mod sequence;
pub mod sft;

pub use algebraic::{base_from_alpha, solve_expansion_of_one, AlgebraicReal};
pub use error::{Error, Result};
pub use field::FieldElem;
pub use poly::Poly;
pub use sequence::{lex_cmp, Digit, EpSeq, Word};
