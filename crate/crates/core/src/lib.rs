//! Magic squares built by superposing a grid of Latin letters and a grid of
//! Greek letters.
//!
//! Each number `1..=x²` is `m·x + n`; the Latin letter in a cell carries
//! `m·x` and the Greek letter carries `n`. If the two letter grids are
//! orthogonal (every letter pair appears exactly once) the evaluated grid
//! uses each number once, and if every line's letters sum to the totals the
//! result is magic. Lines that repeat letters impose linear conditions on
//! the letter values; [`construct::diagonal_constraints`] extracts them and
//! [`construct::solve_assignments`] enumerates the values that satisfy them.

pub mod construct;
pub mod enumerate;
mod error;
pub mod model;
pub mod verify;

pub use construct::{
    build_square, diagonal_constraints, editor_square, family_figure, family_figure_variant, reflect_greek,
    rotate_lines, solve_assignments, Axis, Family, FamilyId, LineAxis, LinearConstraint, Variant,
};
pub use enumerate::{
    canonicalize, census, enumerate_family, oracle_search, subset_check, CanonicalSquare, Dihedral, FamilyCensus,
    OracleSet, SubsetReport,
};
pub use error::{Error, Result};
pub use model::{
    compose, decompose, evaluate, magic_constant, superpose, Order, Role, Square, SuperposedGrid, SymbolGrid, SymbolId,
    ValueAssignment,
};
pub use verify::{
    line_sums, verify_latin, verify_magic, verify_orthogonality, LatinReport, LineId, LineKind, OrthogonalityReport,
    RepeatedPair, Verdict, VerificationReport,
};
