//! Row-determinants over free noncommutative polynomial rings and exact
//! verification of the pre-Pieri rules and their specializations.

pub mod algebra;
pub mod error;
pub mod ninthvar;
pub mod nsym;
pub mod permcomb;
pub mod prelr;
pub mod prepieri;
pub mod rowdet;
pub mod schur;
pub mod sweep;

pub use error::{Error, Result};
