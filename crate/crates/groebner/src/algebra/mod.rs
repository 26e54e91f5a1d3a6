//! Arithmetic substrate: prime-field coefficients, exponent-vector
//! monomials, monomial orders, and sparse polynomials.
//!
//! Everything here is a pure function of its inputs given an immutable
//! [`Ring`] context, so values can be shared freely across threads.

mod field;
mod monomial;
mod order;
mod poly;

pub use field::{FieldElement, FieldError, PrimeField};
pub use monomial::{Monomial, Monomial0};
pub use order::MonomialOrder;
pub use poly::{Polynomial, Term};

/// Immutable ring context: the coefficient field, the number of variables,
/// and the active monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ring {
    field: PrimeField,
    nvars: usize,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(modulus: u64, nvars: usize, order: MonomialOrder) -> Result<Self, FieldError> {
        Ok(Ring {
            field: PrimeField::new(modulus)?,
            nvars,
            order,
        })
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }
}
