//! The lettered figures, the rules that derive them, and the value
//! conditions they impose.

mod constraints;
mod figures;
mod reflect;
mod solve;

pub use constraints::{diagonal_constraints, line_constraint, LinearConstraint};
pub use figures::{editor_square, family_figure, family_figure_variant, FamilyId, Variant};
pub use reflect::{reflect_greek, rotate_lines, Axis, LineAxis};
pub use solve::{solve_assignments, MAX_SOLVE_ORDER};

use crate::error::{Error, Result};
use crate::model::{evaluate, Square, SuperposedGrid, ValueAssignment};
use crate::verify::verify_orthogonality;

/// A family's figure together with the constraints extracted from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    id: FamilyId,
    figure: SuperposedGrid,
    constraints: Vec<LinearConstraint>,
}

impl Family {
    pub fn new(id: FamilyId) -> Result<Self> {
        Family::with_variant(id, Variant::C)
    }

    pub fn with_variant(id: FamilyId, variant: Variant) -> Result<Self> {
        let figure = family_figure_variant(id, variant)?;
        let constraints = diagonal_constraints(&figure);
        Ok(Family { id, figure, constraints })
    }

    pub fn id(&self) -> FamilyId {
        self.id
    }

    pub fn figure(&self) -> &SuperposedGrid {
        &self.figure
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn assignments(&self) -> Result<impl Iterator<Item = ValueAssignment>> {
        solve_assignments(&self.constraints, self.figure.order())
    }

    /// Evaluates the figure, refusing figures that are not orthogonal and
    /// assignments that break a constraint.
    pub fn build(&self, va: &ValueAssignment) -> Result<Square> {
        let report = verify_orthogonality(&self.figure);
        if !report.ok {
            return Err(Error::NotOrthogonal(report));
        }
        if va.order() != self.figure.order() {
            return Err(Error::OrderMismatch { left: self.figure.order().get(), right: va.order().get() });
        }
        if let Some(c) = self.constraints.iter().find(|c| !c.holds(va)) {
            return Err(Error::ConstraintViolated(c.clone()));
        }
        evaluate(&self.figure, va)
    }
}

pub fn build_square(id: FamilyId, va: &ValueAssignment) -> Result<Square> {
    Family::new(id)?.build(va)
}
