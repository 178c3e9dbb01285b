//! Linear conditions on letter values forced by lines with repeated letters.
//!
//! A line whose letters are all distinct sums to the total of all letter
//! values automatically. A line that repeats letters only does so when
//! `Σ (count(s) - 1) · value(s) = 0` over all `2x` letters `s`, which is the
//! constraint recorded here. Letters that appear too often end up with a
//! positive coefficient, missing letters with `-1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Order, Role, SuperposedGrid, SymbolId, ValueAssignment};
use crate::verify::LineId;

/// `Σ coefficient · value = 0` over the `x` Latin and `x` Greek letters.
///
/// Coefficients are stored Latin first, then Greek. The Latin coefficients
/// sum to zero, and so do the Greek ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearConstraint {
    order: Order,
    coefficients: Vec<i64>,
}

impl LinearConstraint {
    pub fn new(order: Order, coefficients: Vec<i64>) -> Result<Self> {
        let x = order.get();
        if coefficients.len() != 2 * x {
            return Err(Error::ConstraintShape { order: x, found: coefficients.len() });
        }
        if coefficients.iter().all(|&c| c == 0) {
            return Err(Error::ConstraintSyntax("all coefficients are zero".into()));
        }
        let latin: i64 = coefficients[..x].iter().sum();
        let greek: i64 = coefficients[x..].iter().sum();
        if latin != 0 || greek != 0 {
            return Err(Error::ConstraintSyntax(format!(
                "latin coefficients sum to {latin}, greek to {greek}; both must be 0"
            )));
        }
        Ok(LinearConstraint { order, coefficients })
    }

    /// Parses the display form, e.g. `2c+2δ = a+e+α+γ`.
    pub fn parse(order: Order, text: &str) -> Result<Self> {
        let bad = || Error::ConstraintSyntax(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (lhs, rhs) = compact.split_once('=').ok_or_else(bad)?;
        let x = order.get();
        let mut coefficients = vec![0i64; 2 * x];
        for (side, sign) in [(lhs, 1), (rhs, -1)] {
            for term in side.split('+') {
                let digits_end = term.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
                let (num, letter) = term.split_at(digits_end);
                let coef: i64 = if num.is_empty() { 1 } else { num.parse().map_err(|_| bad())? };
                let mut chars = letter.chars();
                let sym = match (chars.next(), chars.next()) {
                    (Some(c), None) => SymbolId::from_letter(c).ok_or_else(bad)?,
                    _ => return Err(bad()),
                };
                if sym.index >= x {
                    return Err(bad());
                }
                coefficients[slot(order, sym)] += sign * coef;
            }
        }
        LinearConstraint::new(order, coefficients)
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coefficient(&self, sym: SymbolId) -> i64 {
        self.coefficients[slot(self.order, sym)]
    }

    pub fn latin_part(&self) -> &[i64] {
        &self.coefficients[..self.order.get()]
    }

    pub fn greek_part(&self) -> &[i64] {
        &self.coefficients[self.order.get()..]
    }

    /// Only Latin letters have nonzero coefficients.
    pub fn is_latin_only(&self) -> bool {
        self.greek_part().iter().all(|&c| c == 0)
    }

    pub fn is_greek_only(&self) -> bool {
        self.latin_part().iter().all(|&c| c == 0)
    }

    /// Left side minus right side under the given values.
    pub fn residual(&self, va: &ValueAssignment) -> i64 {
        let latin: i64 = self.latin_part().iter().zip(va.latin()).map(|(c, v)| c * v).sum();
        let greek: i64 = self.greek_part().iter().zip(va.greek()).map(|(c, v)| c * v).sum();
        latin + greek
    }

    pub fn holds(&self, va: &ValueAssignment) -> bool {
        self.residual(va) == 0
    }

    /// Divided by the gcd of its coefficients, first nonzero coefficient
    /// positive. Two constraints describe the same equation iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> LinearConstraint {
        let mut coefficients = reduce(&self.coefficients);
        if coefficients.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            coefficients.iter_mut().for_each(|c| *c = -*c);
        }
        LinearConstraint { order: self.order, coefficients }
    }

    pub fn is_equivalent(&self, other: &LinearConstraint) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.order.get();
        let term = |i: usize, c: i64| {
            let sym = if i < x { SymbolId::latin(i) } else { SymbolId::greek(i - x) };
            if c == 1 {
                sym.letter().to_string()
            } else {
                format!("{c}{}", sym.letter())
            }
        };
        let side = |positive: bool| {
            let terms: Vec<String> = self
                .coefficients
                .iter()
                .enumerate()
                .filter(|(_, &c)| if positive { c > 0 } else { c < 0 })
                .map(|(i, &c)| term(i, c.abs()))
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        };
        write!(f, "{} = {}", side(true), side(false))
    }
}

fn slot(order: Order, sym: SymbolId) -> usize {
    match sym.role {
        Role::Latin => sym.index,
        Role::Greek => order.get() + sym.index,
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn reduce(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0, |acc, &c| gcd(acc, c));
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|c| c / g).collect()
    }
}

/// Rank over the rationals, via fraction-free elimination.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&c| c as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            let factor = m[r][col];
            if factor == 0 {
                continue;
            }
            let pivot_row = m[rank].clone();
            let lead = pivot_row[col];
            for (v, p) in m[r].iter_mut().zip(&pivot_row) {
                *v = *v * lead - p * factor;
            }
            let g = m[r].iter().fold(0i128, |acc, &v| {
                let (mut a, mut b) = (acc.abs(), v.abs());
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                a
            });
            if g > 1 {
                m[r].iter_mut().for_each(|v| *v /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn in_span(basis: &[Vec<i64>], v: &[i64]) -> bool {
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(&with) == rank(basis)
}

/// The constraint a single line imposes, or `None` if every letter occurs
/// on it exactly once.
pub fn line_constraint(pairs: &SuperposedGrid, line: LineId) -> Option<LinearConstraint> {
    let order = pairs.order();
    let x = order.get();
    let mut coefficients = vec![-1i64; 2 * x];
    for (r, c) in line.cells(order) {
        let (l, g) = pairs.get(r, c);
        coefficients[l] += 1;
        coefficients[x + g] += 1;
    }
    if coefficients.iter().all(|&c| c == 0) {
        return None;
    }
    Some(LinearConstraint { order, coefficients: reduce(&coefficients) })
}

/// All conditions the figure's lines place on the letter values.
///
/// Lines are scanned rows, columns, main diagonal, anti diagonal. Whenever
/// the system implies a condition on the Latin letters alone (or the Greek
/// letters alone) that condition is reported by itself; any remaining
/// coupled line conditions follow. Latin-only conditions come first, then
/// Greek-only, then coupled, each in line order. The result is a basis:
/// no condition is implied by the ones before it.
pub fn diagonal_constraints(pairs: &SuperposedGrid) -> Vec<LinearConstraint> {
    let order = pairs.order();
    let x = order.get();
    let lines: Vec<LinearConstraint> =
        LineId::all(order).into_iter().filter_map(|line| line_constraint(pairs, line)).collect();
    let system: Vec<Vec<i64>> = lines.iter().map(|c| c.coefficients.clone()).collect();

    let mut out: Vec<LinearConstraint> = Vec::new();
    let mut basis: Vec<Vec<i64>> = Vec::new();
    let mut push = |coefficients: Vec<i64>, out: &mut Vec<LinearConstraint>| {
        if !in_span(&basis, &coefficients) {
            basis.push(coefficients.clone());
            out.push(LinearConstraint { order, coefficients });
        }
    };

    for role in [Role::Latin, Role::Greek] {
        for c in &lines {
            let mut part = c.coefficients.clone();
            let keep = match role {
                Role::Latin => 0..x,
                Role::Greek => x..2 * x,
            };
            for (i, v) in part.iter_mut().enumerate() {
                if !keep.contains(&i) {
                    *v = 0;
                }
            }
            if part.iter().all(|&v| v == 0) || !in_span(&system, &part) {
                continue;
            }
            push(reduce(&part), &mut out);
        }
    }
    for c in &lines {
        push(c.coefficients.clone(), &mut out);
    }
    out
}
