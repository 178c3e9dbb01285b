use thiserror::Error;

use crate::construct::{Axis, FamilyId, LinearConstraint};
use crate::verify::OrthogonalityReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("value {value} is outside 1..={max} for order {order}")]
    ValueOutOfRange { value: i64, order: usize, max: i64 },

    #[error("digits (m={m}, n={n}) out of range for order {order}: need 0 <= m < {order} and 1 <= n <= {order}")]
    DigitsOutOfRange { m: i64, n: i64, order: usize },

    #[error("grid has {len} cells, expected {expected} for order {order}")]
    BadShape { order: usize, len: usize, expected: usize },

    #[error("row {row} has {len} cells, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },

    #[error("symbol index {index} at ({row}, {col}) is out of range for order {order}")]
    SymbolOutOfRange { row: usize, col: usize, index: usize, order: usize },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("expected a {expected} grid, got a {found} grid")]
    RoleMismatch { expected: &'static str, found: &'static str },

    #[error("{role} values {values:?} are not a permutation of {expected:?}")]
    InvalidAssignment { role: &'static str, values: Vec<i64>, expected: Vec<i64> },

    #[error("axis {axis:?} needs an odd order, got {order}")]
    AxisNeedsOddOrder { axis: Axis, order: usize },

    #[error("mirror cells {first:?} and {second:?} across {axis:?} both hold latin letter {letter}")]
    MirrorConflict { axis: Axis, first: (usize, usize), second: (usize, usize), letter: char },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("family {0} is a fixed square, not a lettered figure")]
    NotAFigure(FamilyId),

    #[error("variant {variant} is not available for family {family}")]
    VariantUnavailable { family: FamilyId, variant: char },

    #[error("family {0} cannot be enumerated")]
    NotEnumerable(FamilyId),

    #[error("assignment violates constraint {0}")]
    ConstraintViolated(LinearConstraint),

    #[error("figure is not orthogonal: {} duplicated pair(s), {} missing pair(s)", .0.duplicate_pairs.len(), .0.missing_pairs.len())]
    NotOrthogonal(OrthogonalityReport),

    #[error("family {family} produced a non-magic square under {assignment}")]
    NonMagicOutput { family: FamilyId, assignment: String },

    #[error("order {order} exceeds the supported bound of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("constraint over {found} symbols does not fit order {order}")]
    ConstraintShape { order: usize, found: usize },

    #[error("cannot parse constraint `{0}`")]
    ConstraintSyntax(String),
}
