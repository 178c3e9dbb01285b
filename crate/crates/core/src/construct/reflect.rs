use crate::error::{Error, Result};
use crate::model::{latin_letter, Role, SuperposedGrid, SymbolGrid};

/// The mirror line used to place Greek letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    MiddleColumn,
    MiddleRow,
    MainDiagonal,
    AntiDiagonal,
}

impl Axis {
    /// Image of `(row, col)` under reflection across this axis.
    pub fn mirror(self, row: usize, col: usize, side: usize) -> (usize, usize) {
        let last = side - 1;
        match self {
            Axis::MiddleColumn => (row, last - col),
            Axis::MiddleRow => (last - row, col),
            Axis::MainDiagonal => (col, row),
            Axis::AntiDiagonal => (last - col, last - row),
        }
    }

    fn needs_odd_order(self) -> bool {
        matches!(self, Axis::MiddleColumn | Axis::MiddleRow)
    }
}

/// Derives a Greek grid from a Latin one: on the axis each cell takes the
/// Greek equivalent of its own Latin letter, off the axis the Greek
/// equivalent of the Latin letter in the mirrored cell.
///
/// Every pair of mirrored cells must hold different Latin letters.
pub fn reflect_greek(latin: &SymbolGrid, axis: Axis) -> Result<SymbolGrid> {
    if latin.role() != Role::Latin {
        return Err(Error::RoleMismatch { expected: "latin", found: latin.role().name() });
    }
    let x = latin.order().get();
    if axis.needs_odd_order() && x.is_multiple_of(2) {
        return Err(Error::AxisNeedsOddOrder { axis, order: x });
    }
    let mut cells = Vec::with_capacity(x * x);
    for r in 0..x {
        for c in 0..x {
            let (mr, mc) = axis.mirror(r, c, x);
            let here = latin.get(r, c);
            let there = latin.get(mr, mc);
            if (mr, mc) != (r, c) && here == there {
                let (first, second) = if (r, c) < (mr, mc) { ((r, c), (mr, mc)) } else { ((mr, mc), (r, c)) };
                return Err(Error::MirrorConflict { axis, first, second, letter: latin_letter(here) });
            }
            cells.push(there);
        }
    }
    SymbolGrid::new(latin.order(), Role::Greek, cells)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineAxis {
    Columns,
    Rows,
}

/// Cyclically shifts columns (or rows). A shift of `-1` moves the first
/// column to the end; `+1` moves the last one to the front.
pub fn rotate_lines(grid: &SuperposedGrid, axis: LineAxis, shift: isize) -> SuperposedGrid {
    let x = grid.order().get();
    let k = shift.rem_euclid(x as isize) as usize;
    let mut cells = Vec::with_capacity(x * x);
    for r in 0..x {
        for c in 0..x {
            let cell = match axis {
                LineAxis::Columns => grid.get(r, (c + x - k) % x),
                LineAxis::Rows => grid.get((r + x - k) % x, c),
            };
            cells.push(cell);
        }
    }
    SuperposedGrid::new(grid.order(), cells).expect("rotation keeps shape")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn latin(text: &str) -> SymbolGrid {
        SymbolGrid::parse(Role::Latin, text).unwrap()
    }

    #[test]
    fn middle_column_on_order_three() {
        let g = reflect_greek(&latin("a b c / b c a / c a b"), Axis::MiddleColumn).unwrap();
        assert_eq!(g, SymbolGrid::parse(Role::Greek, "γ β α / α γ β / β α γ").unwrap());
    }

    #[test]
    fn mirror_conflict_is_reported() {
        let err = reflect_greek(&latin("a b a / b c a / c a b"), Axis::MiddleColumn).unwrap_err();
        assert_eq!(err, Error::MirrorConflict { axis: Axis::MiddleColumn, first: (0, 0), second: (0, 2), letter: 'a' });
    }

    #[test]
    fn middle_axes_need_odd_order() {
        let g = latin("a b / b a");
        assert!(matches!(reflect_greek(&g, Axis::MiddleRow), Err(Error::AxisNeedsOddOrder { .. })));
        assert!(matches!(reflect_greek(&g, Axis::AntiDiagonal), Err(Error::MirrorConflict { .. })));
        assert!(reflect_greek(&latin("a b / a b"), Axis::AntiDiagonal).is_ok());
    }

    #[test]
    fn mirror_is_involution() {
        for axis in [Axis::MiddleColumn, Axis::MiddleRow, Axis::MainDiagonal, Axis::AntiDiagonal] {
            for r in 0..5 {
                for c in 0..5 {
                    let (mr, mc) = axis.mirror(r, c, 5);
                    assert_eq!(axis.mirror(mr, mc, 5), (r, c));
                }
            }
        }
    }

    #[test]
    fn rotation_shift_zero_and_full_cycle_are_identity() {
        let g = SuperposedGrid::parse("aγ bβ cα / bα cγ aβ / cβ aα bγ").unwrap();
        assert_eq!(rotate_lines(&g, LineAxis::Columns, 0), g);
        assert_eq!(rotate_lines(&g, LineAxis::Rows, 3), g);
        let there = rotate_lines(&g, LineAxis::Rows, 2);
        assert_eq!(rotate_lines(&there, LineAxis::Rows, -2), g);
    }

    #[test]
    fn shift_minus_one_moves_first_column_to_end() {
        let g = SuperposedGrid::parse("aγ bβ cα / bα cγ aβ / cβ aα bγ").unwrap();
        let moved = rotate_lines(&g, LineAxis::Columns, -1);
        assert_eq!(moved, SuperposedGrid::parse("bβ cα aγ / cγ aβ bα / aα bγ cβ").unwrap());
    }
}
