//! Text format, benchmark generators, report serialization, and the pieces
//! behind the command-line interface.

mod bench;
mod format;
mod parser;
mod report;

pub use bench::{gen_benchmark, random_system, BenchError, BenchFamily};
pub use format::{format_basis, format_polynomial};
pub use parser::{parse_system, ParseError};
pub use report::{stats_json, RunReport};

use crate::algebra::{FieldError, MonomialOrder, Polynomial, Ring};

/// A parsed polynomial system: the ring data plus its generators. Variable
/// index 0 is the greatest variable of the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDescription {
    pub modulus: u64,
    pub variables: Vec<String>,
    pub order: MonomialOrder,
    pub generators: Vec<Polynomial>,
}

impl SystemDescription {
    pub fn ring(&self) -> Result<Ring, FieldError> {
        Ring::new(self.modulus, self.variables.len(), self.order)
    }
}
