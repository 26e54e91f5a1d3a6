//! Gröbner bases of polynomial ideals over prime fields.
//!
//! The computing core is an incremental engine built on labeled
//! polynomials: each basis candidate carries a signature recording where it
//! came from, reduction is restricted to signature-safe steps, and a single
//! signature-divisibility criterion prunes pending work. An independent
//! Buchberger implementation serves as the verification oracle, and the
//! frontend supplies a text format, benchmark generators, and the CLI.

pub mod algebra;
pub mod engine;
pub mod frontend;
pub mod labeled;
pub mod oracle;

pub use algebra::{FieldElement, Monomial, Monomial0, MonomialOrder, Polynomial, PrimeField, Ring};
pub use engine::{
    incremental_groebner, interreduce, simple_signature_groebner, EngineOptions, RunStats,
};
pub use labeled::{h_compare, HOrdering, LabeledPolynomial};
