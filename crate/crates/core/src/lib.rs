//! TZ maximum rank distance codes over `F_{q^{2n}}`, odd `q`:
//! field arithmetic, linearized polynomials, code construction, a
//! syndrome-based decoder and an experiment harness.

pub mod code;
pub mod error;
pub mod field;
pub mod linalg;
pub mod linpoly;
pub mod space;

pub use code::{CodeParams, TzCode};
pub use error::{Error, Result};
pub use field::{Elem, Field, PrimeField};
pub use linpoly::LinPoly;
pub use space::Basis;
pub mod decoder;
pub mod harness;

pub use decoder::{decode, decode_with, DecodeOutcome, DecoderOptions, FailureReason};
