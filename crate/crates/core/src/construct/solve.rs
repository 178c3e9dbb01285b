use std::sync::Arc;

use itertools::Itertools;

use crate::construct::constraints::LinearConstraint;
use crate::error::{Error, Result};
use crate::model::{Order, ValueAssignment};

/// Largest order for which all `x!·x!` permutation pairs are enumerated.
pub const MAX_SOLVE_ORDER: usize = 6;

/// All value assignments satisfying every constraint, in lexicographic order
/// of the Latin values, then the Greek values.
///
/// Constraints on one alphabet only prune that alphabet's permutations up
/// front; coupled constraints are checked on each surviving pair.
pub fn solve_assignments(
    constraints: &[LinearConstraint],
    order: Order,
) -> Result<impl Iterator<Item = ValueAssignment>> {
    let x = order.get();
    if x > MAX_SOLVE_ORDER {
        return Err(Error::OrderTooLarge { order: x, max: MAX_SOLVE_ORDER });
    }
    if let Some(c) = constraints.iter().find(|c| c.order() != order) {
        return Err(Error::ConstraintShape { order: x, found: c.coefficients().len() });
    }

    let (latin_only, rest): (Vec<_>, Vec<_>) = constraints.iter().partition(|c| c.is_latin_only());
    let (greek_only, coupled): (Vec<_>, Vec<_>) = rest.into_iter().partition(|c| c.is_greek_only());

    let side = x as i64;
    let latin: Vec<Vec<i64>> = (0..side)
        .map(|m| m * side)
        .permutations(x)
        .filter(|p| latin_only.iter().all(|c| dot(c.latin_part(), p) == 0))
        .collect();
    let greek: Arc<Vec<Vec<i64>>> = Arc::new(
        (1..=side).permutations(x).filter(|p| greek_only.iter().all(|c| dot(c.greek_part(), p) == 0)).collect(),
    );
    let coupled: Arc<Vec<LinearConstraint>> = Arc::new(coupled.into_iter().cloned().collect());

    Ok(latin.into_iter().flat_map(move |l| {
        let greek = Arc::clone(&greek);
        let coupled = Arc::clone(&coupled);
        (0..greek.len()).filter_map(move |i| {
            let g = &greek[i];
            coupled
                .iter()
                .all(|c| dot(c.latin_part(), &l) + dot(c.greek_part(), g) == 0)
                .then(|| ValueAssignment::from_parts_unchecked(l.clone(), g.clone()))
        })
    }))
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
