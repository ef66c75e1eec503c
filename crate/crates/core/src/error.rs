// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::form::BQForm;
use crate::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("the zero form has no content")]
    ZeroForm,
    #[error("{0} is not positive-definite")]
    NotPositiveDefinite(BQForm),
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(Int),
    #[error("{0} is not a negative discriminant (must be < 0 and 0 or 1 mod 4)")]
    InvalidDiscriminant(Int),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(Int),
    #[error("{form} is imprimitive (content {content})")]
    Imprimitive { form: BQForm, content: Int },
    #[error("search exhausted at bound {bound}")]
    SearchExhausted { bound: u64 },
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(Int, Int),
    #[error("grids live in different fields: D_K = {0} vs {1}")]
    FieldMismatch(Int, Int),
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(Int),
    #[error("degenerate basis: generators do not span a rank-2 module")]
    DegenerateGrid,
    #[error("module is not an ideal of the order of conductor {conductor}")]
    NotAnIdeal { conductor: Int },
    #[error("bilinear form took a non-integral value")]
    NonIntegralForm,
    #[error("forms are not in the same genus")]
    NotSameGenus,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("{terms} q-series terms cannot reach the tolerance at |q| = {q_abs}")]
    TooFewTerms { terms: usize, q_abs: f64 },
    #[error("invalid range [{0}, {1}]")]
    InvalidRange(Int, Int),
    #[error("range of {requested} discriminants exceeds the budget of {budget}")]
    RangeTooLarge { requested: u64, budget: u64 },
    #[error("row {row} failed check: {check}")]
    RowCheckFailed { row: usize, check: String },
    #[error("unknown table row {0}")]
    UnknownRow(usize),
}
