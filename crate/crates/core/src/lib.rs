//! Deciding and certifying the weak and strong Lefschetz properties of
//! Artinian monomial quotient modules `(I + J) / J` over `k[x, y, z, t]`
//! in characteristic zero.
//!
//! All arithmetic is exact. Ranks and determinants come from
//! fraction-free elimination over the integers (see [`linalg`]), which is
//! generic over [`ExactScalar`]; the crate-level aliases fix the scalar to
//! arbitrary-precision integers.

pub mod csm;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod lefschetz;
pub mod lgv;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod pipeline;
pub mod scalar;
mod serde_int;
pub mod sweep;
pub mod theorems;

pub use error::{Error, Result};
pub use hilbert::{degrees_coincide, hilbert_cl_closed_form, HilbertSeries, ReflectingDegree};
pub use ideal::{minimalize, MonomialIdeal};
pub use lefschetz::{
    check_slp, check_wlp, direct_sum_slp, map_has_maximal_rank, mult_matrix, DirectSum,
    LefschetzReport, LinearForm, Property, Summand,
};
pub use linalg::{binomial, multinomial, Matrix};
pub use module::QuotientModule;
pub use monomial::Monomial;
pub use parse::{parse_ideal, parse_ideal_in};
pub use scalar::ExactScalar;

/// Integer matrix with arbitrary-precision entries.
pub type ExactMatrix = Matrix<num_bigint::BigInt>;

/// Fixed-width matrix for callers that know their entries stay small.
pub type SmallMatrix = Matrix<i128>;
