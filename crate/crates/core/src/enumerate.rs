//! Family enumeration, dihedral canonical forms, and the brute-force oracle.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::construct::{Family, FamilyId, Variant};
use crate::error::{Error, Result};
use crate::model::{magic_constant, Order, Square, ValueAssignment};
use crate::verify::{verify_magic, LineId, Verdict};

/// The eight symmetries of the square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dihedral {
    Identity,
    Rotate90,
    Rotate180,
    Rotate270,
    Transpose,
    AntiTranspose,
    FlipColumns,
    FlipRows,
}

impl Dihedral {
    pub const ALL: [Dihedral; 8] = [
        Dihedral::Identity,
        Dihedral::Rotate90,
        Dihedral::Rotate180,
        Dihedral::Rotate270,
        Dihedral::Transpose,
        Dihedral::AntiTranspose,
        Dihedral::FlipColumns,
        Dihedral::FlipRows,
    ];

    /// Source cell read into output cell `(r, c)`. Rotations are clockwise.
    fn source(self, r: usize, c: usize, x: usize) -> (usize, usize) {
        let last = x - 1;
        match self {
            Dihedral::Identity => (r, c),
            Dihedral::Rotate90 => (last - c, r),
            Dihedral::Rotate180 => (last - r, last - c),
            Dihedral::Rotate270 => (c, last - r),
            Dihedral::Transpose => (c, r),
            Dihedral::AntiTranspose => (last - c, last - r),
            Dihedral::FlipColumns => (r, last - c),
            Dihedral::FlipRows => (last - r, c),
        }
    }

    pub fn apply(self, square: &Square) -> Square {
        let x = square.order().get();
        let cells = (0..x)
            .flat_map(|r| (0..x).map(move |c| (r, c)))
            .map(|(r, c)| {
                let (sr, sc) = self.source(r, c, x);
                square.get(sr, sc)
            })
            .collect();
        Square::new(square.order(), cells).expect("same shape")
    }
}

/// The row-major lexicographically smallest of a square's eight images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSquare(Square);

impl CanonicalSquare {
    pub fn as_square(&self) -> &Square {
        &self.0
    }

    pub fn into_square(self) -> Square {
        self.0
    }
}

pub fn canonicalize(square: &Square) -> CanonicalSquare {
    let best =
        Dihedral::ALL.iter().map(|t| t.apply(square)).min_by(|a, b| a.cells().cmp(b.cells())).expect("eight images");
    CanonicalSquare(best)
}

/// Every square a family yields, one per satisfying assignment, each
/// checked to be magic.
pub fn enumerate_family(id: FamilyId) -> Result<Vec<Square>> {
    enumerate_family_variant(id, Variant::C)
}

pub fn enumerate_family_variant(id: FamilyId, variant: Variant) -> Result<Vec<Square>> {
    if !id.is_enumerable() {
        return Err(Error::NotEnumerable(id));
    }
    let family = Family::with_variant(id, variant)?;
    let assignments: Vec<_> = family.assignments()?.collect();
    assignments.iter().map(|va| build_checked(&family, va)).collect()
}

fn build_checked(family: &Family, va: &ValueAssignment) -> Result<Square> {
    let square = family.build(va)?;
    if verify_magic(&square).verdict != Verdict::Magic {
        return Err(Error::NonMagicOutput { family: family.id(), assignment: va.to_string() });
    }
    Ok(square)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyCensus {
    pub family: FamilyId,
    pub assignments_total: usize,
    pub squares_distinct: usize,
    pub squares_distinct_dihedral: usize,
}

pub fn census(id: FamilyId) -> Result<FamilyCensus> {
    census_with(id, Variant::C, true)
}

/// Counts assignments, distinct squares, and distinct dihedral classes.
/// `parallel` only changes how squares are evaluated; the counts agree.
pub fn census_with(id: FamilyId, variant: Variant, parallel: bool) -> Result<FamilyCensus> {
    if !id.is_enumerable() {
        return Err(Error::NotEnumerable(id));
    }
    let family = Family::with_variant(id, variant)?;
    let assignments: Vec<_> = family.assignments()?.collect();
    let squares: Vec<Square> = if parallel {
        assignments.par_iter().map(|va| build_checked(&family, va)).collect::<Result<_>>()?
    } else {
        assignments.iter().map(|va| build_checked(&family, va)).collect::<Result<_>>()?
    };
    let distinct: HashSet<&Square> = squares.iter().collect();
    let dihedral: HashSet<CanonicalSquare> = if parallel {
        squares.par_iter().map(canonicalize).collect()
    } else {
        squares.iter().map(canonicalize).collect()
    };
    Ok(FamilyCensus {
        family: id,
        assignments_total: assignments.len(),
        squares_distinct: distinct.len(),
        squares_distinct_dihedral: dihedral.len(),
    })
}

/// Exhaustive search is only attempted up to this order.
pub const MAX_ORACLE_ORDER: usize = 4;

/// Every magic square of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSet {
    order: Order,
    squares: BTreeSet<Square>,
}

impl OracleSet {
    pub fn order(&self) -> Order {
        self.order
    }

    pub fn squares(&self) -> &BTreeSet<Square> {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn contains(&self, square: &Square) -> bool {
        self.squares.contains(square)
    }

    /// Squares sorted by canonical form, then by the square itself.
    pub fn canonical_order(&self) -> Vec<&Square> {
        let mut keyed: Vec<(CanonicalSquare, &Square)> = self.squares.iter().map(|s| (canonicalize(s), s)).collect();
        keyed.sort();
        keyed.into_iter().map(|(_, s)| s).collect()
    }
}

struct Layout {
    side: usize,
    max: i64,
    target: i64,
    /// For each cell, the lines through it and how many of their cells
    /// come later in row-major order.
    lines_of: Vec<Vec<(usize, usize)>>,
}

impl Layout {
    fn new(order: Order) -> Self {
        let side = order.get();
        let lines = LineId::all(order);
        let mut lines_of = vec![Vec::new(); order.cells()];
        for (li, line) in lines.iter().enumerate() {
            let mut cells: Vec<usize> = line.cells(order).map(|(r, c)| r * side + c).collect();
            cells.sort_unstable();
            let len = cells.len();
            for (k, pos) in cells.into_iter().enumerate() {
                lines_of[pos].push((li, len - 1 - k));
            }
        }
        Layout { side, max: order.cells() as i64, target: magic_constant(order), lines_of }
    }

    /// Whether `v` fits at `pos` given the partial line sums.
    fn admits(&self, pos: usize, v: i64, sums: &[i64]) -> bool {
        self.lines_of[pos].iter().all(|&(li, rest)| {
            let s = sums[li] + v;
            if rest == 0 {
                return s == self.target;
            }
            let rest = rest as i64;
            let least = rest * (rest + 1) / 2;
            let most = rest * self.max - rest * (rest - 1) / 2;
            s + least <= self.target && s + most >= self.target
        })
    }
}

struct Search<'a> {
    layout: &'a Layout,
    cells: Vec<i64>,
    used: Vec<bool>,
    sums: Vec<i64>,
    found: Vec<Vec<i64>>,
}

impl<'a> Search<'a> {
    fn new(layout: &'a Layout) -> Self {
        Search {
            layout,
            cells: Vec::with_capacity(layout.side * layout.side),
            used: vec![false; layout.max as usize + 1],
            sums: vec![0; 2 * layout.side + 2],
            found: Vec::new(),
        }
    }

    fn place(&mut self, v: i64) {
        let pos = self.cells.len();
        self.cells.push(v);
        self.used[v as usize] = true;
        for &(li, _) in &self.layout.lines_of[pos] {
            self.sums[li] += v;
        }
    }

    fn unplace(&mut self) {
        let v = self.cells.pop().expect("placed");
        let pos = self.cells.len();
        self.used[v as usize] = false;
        for &(li, _) in &self.layout.lines_of[pos] {
            self.sums[li] -= v;
        }
    }

    fn try_value(&mut self, v: i64) {
        let pos = self.cells.len();
        if (1..=self.layout.max).contains(&v) && !self.used[v as usize] && self.layout.admits(pos, v, &self.sums) {
            self.place(v);
            self.run();
            self.unplace();
        }
    }

    fn run(&mut self) {
        let pos = self.cells.len();
        if pos == self.layout.side * self.layout.side {
            self.found.push(self.cells.clone());
            return;
        }
        // The last empty cell of any line is forced.
        let forced = self.layout.lines_of[pos]
            .iter()
            .find(|&&(_, rest)| rest == 0)
            .map(|&(li, _)| self.layout.target - self.sums[li]);
        match forced {
            Some(v) => self.try_value(v),
            None => {
                for v in 1..=self.layout.max {
                    self.try_value(v);
                }
            }
        }
    }
}

/// All magic squares of order `x <= 4`, by row-major backtracking with
/// line-sum pruning and forced completion of each line's last cell.
pub fn oracle_search(order: Order) -> Result<OracleSet> {
    let x = order.get();
    if x > MAX_ORACLE_ORDER {
        return Err(Error::OrderTooLarge { order: x, max: MAX_ORACLE_ORDER });
    }
    let layout = Layout::new(order);
    let found: Vec<Vec<i64>> = if x == 1 {
        let mut search = Search::new(&layout);
        search.run();
        search.found
    } else {
        (1..=layout.max)
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut search = Search::new(&layout);
                search.try_value(first);
                search.found
            })
            .collect()
    };
    let squares = found.into_iter().map(|cells| Square::new(order, cells).expect("full grid")).collect();
    Ok(OracleSet { order, squares })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetReport {
    pub family: FamilyId,
    pub holds: bool,
    /// Distinct squares the family produced.
    pub family_squares: usize,
    /// Family squares missing from the oracle.
    pub counterexamples: Vec<Square>,
}

impl SubsetReport {
    /// Share of the oracle's squares the family reaches.
    pub fn coverage(&self, oracle: &OracleSet) -> f64 {
        if oracle.is_empty() {
            return 0.0;
        }
        (self.family_squares - self.counterexamples.len()) as f64 / oracle.len() as f64
    }
}

/// Checks that every square the family produces is one the oracle found.
pub fn subset_check(id: FamilyId, oracle: &OracleSet) -> Result<SubsetReport> {
    if id.order() != oracle.order() {
        return Err(Error::OrderMismatch { left: id.order().get(), right: oracle.order().get() });
    }
    let squares: BTreeSet<Square> = enumerate_family(id)?.into_iter().collect();
    let counterexamples: Vec<Square> = squares.iter().filter(|s| !oracle.contains(s)).cloned().collect();
    Ok(SubsetReport { family: id, holds: counterexamples.is_empty(), family_squares: squares.len(), counterexamples })
}
