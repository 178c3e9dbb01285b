//! Grids, value assignments and the `m·x + n` number representation.
//!
//! Every number `1..=x²` is written as `m·x + n` with `0 <= m < x` and
//! `1 <= n <= x`. The multiple `m·x` is carried by a Latin letter and the
//! remainder `n` by a Greek letter, so a square is fully described by a grid
//! of letter pairs plus the values the letters stand for.

use std::fmt;

use crate::error::{Error, Result};

const GREEK: [char; 12] = ['α', 'β', 'γ', 'δ', 'ε', 'ζ', 'η', 'θ', 'ι', 'κ', 'λ', 'μ'];

/// Number of cells along one side of a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Order(usize);

impl Order {
    pub fn new(x: usize) -> Result<Self> {
        if x == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Order(x))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Total number of cells, `x²`.
    #[inline]
    pub fn cells(self) -> usize {
        self.0 * self.0
    }

    pub fn magic_constant(self) -> i64 {
        magic_constant(self)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The common line sum `x(1 + x²)/2`.
pub fn magic_constant(x: Order) -> i64 {
    let x = x.get() as i64;
    x * (1 + x * x) / 2
}

/// Splits `k` into `(m, n)` with `k = m·x + n`, `0 <= m < x`, `1 <= n <= x`.
pub fn decompose(k: i64, x: Order) -> Result<(i64, i64)> {
    let max = x.cells() as i64;
    if !(1..=max).contains(&k) {
        return Err(Error::ValueOutOfRange { value: k, order: x.get(), max });
    }
    let side = x.get() as i64;
    Ok(((k - 1) / side, (k - 1) % side + 1))
}

/// Inverse of [`decompose`].
pub fn compose(m: i64, n: i64, x: Order) -> Result<i64> {
    let side = x.get() as i64;
    if !(0..side).contains(&m) || !(1..=side).contains(&n) {
        return Err(Error::DigitsOutOfRange { m, n, order: x.get() });
    }
    Ok(m * side + n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Latin,
    Greek,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Latin => "latin",
            Role::Greek => "greek",
        }
    }
}

/// One letter: index 0 is `a` / `α`, index 1 is `b` / `β`, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolId {
    pub role: Role,
    pub index: usize,
}

impl SymbolId {
    pub fn latin(index: usize) -> Self {
        SymbolId { role: Role::Latin, index }
    }

    pub fn greek(index: usize) -> Self {
        SymbolId { role: Role::Greek, index }
    }

    pub fn letter(self) -> char {
        match self.role {
            Role::Latin => latin_letter(self.index),
            Role::Greek => greek_letter(self.index),
        }
    }

    /// Reads a single letter in either alphabet.
    pub fn from_letter(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            return Some(SymbolId::latin((c as u8 - b'a') as usize));
        }
        GREEK.iter().position(|&g| g == c).map(SymbolId::greek)
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub fn latin_letter(index: usize) -> char {
    if index < 26 {
        (b'a' + index as u8) as char
    } else {
        '?'
    }
}

pub fn greek_letter(index: usize) -> char {
    GREEK.get(index).copied().unwrap_or('?')
}

fn check_len(order: Order, len: usize) -> Result<()> {
    if len != order.cells() {
        return Err(Error::BadShape { order: order.get(), len, expected: order.cells() });
    }
    Ok(())
}

/// An `x × x` grid of letters from a single alphabet, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolGrid {
    order: Order,
    role: Role,
    cells: Vec<usize>,
}

impl SymbolGrid {
    pub fn new(order: Order, role: Role, cells: Vec<usize>) -> Result<Self> {
        check_len(order, cells.len())?;
        let x = order.get();
        if let Some(pos) = cells.iter().position(|&s| s >= x) {
            return Err(Error::SymbolOutOfRange { row: pos / x, col: pos % x, index: cells[pos], order: x });
        }
        Ok(SymbolGrid { order, role, cells })
    }

    /// Parses whitespace separated letters, one row per line or per `/`.
    ///
    /// ```
    /// # use magic_core::{Role, SymbolGrid};
    /// let g = SymbolGrid::parse(Role::Latin, "a b c / b c a / c a b").unwrap();
    /// assert_eq!(g.get(1, 2), 0);
    /// ```
    pub fn parse(role: Role, text: &str) -> Result<Self> {
        let mut cells = Vec::new();
        let mut rows = 0;
        for row in split_rows(text) {
            rows += 1;
            for tok in row.split_whitespace() {
                let sym = single_symbol(tok).filter(|s| s.role == role);
                cells
                    .push(sym.map(|s| s.index).ok_or(Error::RoleMismatch { expected: role.name(), found: "foreign" })?);
            }
        }
        SymbolGrid::new(Order::new(rows)?, role, cells)
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.order.get() + col]
    }
}

impl fmt::Display for SymbolGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.order.get();
        for (i, row) in self.cells.chunks(x).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> =
                row.iter().map(|&s| SymbolId { role: self.role, index: s }.letter().to_string()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// An `x × x` grid of `(latin, greek)` letter pairs, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperposedGrid {
    order: Order,
    cells: Vec<(usize, usize)>,
}

impl SuperposedGrid {
    pub fn new(order: Order, cells: Vec<(usize, usize)>) -> Result<Self> {
        check_len(order, cells.len())?;
        let x = order.get();
        for (pos, &(l, g)) in cells.iter().enumerate() {
            if l >= x || g >= x {
                return Err(Error::SymbolOutOfRange { row: pos / x, col: pos % x, index: l.max(g), order: x });
            }
        }
        Ok(SuperposedGrid { order, cells })
    }

    /// Parses letter pairs such as `aγ bβ cα / bα cγ aβ / cβ aα bγ`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cells = Vec::new();
        let mut rows = 0;
        for row in split_rows(text) {
            rows += 1;
            for tok in row.split_whitespace() {
                let mut chars = tok.chars();
                let (Some(l), Some(g), None) = (chars.next(), chars.next(), chars.next()) else {
                    return Err(Error::RoleMismatch { expected: "pair", found: "token" });
                };
                match (SymbolId::from_letter(l), SymbolId::from_letter(g)) {
                    (Some(l), Some(g)) if l.role == Role::Latin && g.role == Role::Greek => {
                        cells.push((l.index, g.index))
                    }
                    _ => return Err(Error::RoleMismatch { expected: "pair", found: "token" }),
                }
            }
        }
        SuperposedGrid::new(Order::new(rows)?, cells)
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> (usize, usize) {
        self.cells[row * self.order.get() + col]
    }

    pub fn latin_component(&self) -> SymbolGrid {
        SymbolGrid { order: self.order, role: Role::Latin, cells: self.cells.iter().map(|p| p.0).collect() }
    }

    pub fn greek_component(&self) -> SymbolGrid {
        SymbolGrid { order: self.order, role: Role::Greek, cells: self.cells.iter().map(|p| p.1).collect() }
    }
}

impl fmt::Display for SuperposedGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.order.get();
        for (i, row) in self.cells.chunks(x).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> =
                row.iter().map(|&(l, g)| format!("{}{}", latin_letter(l), greek_letter(g))).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn split_rows(text: &str) -> impl Iterator<Item = &str> {
    text.split(['\n', '/']).filter(|r| !r.trim().is_empty())
}

fn single_symbol(tok: &str) -> Option<SymbolId> {
    let mut chars = tok.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => SymbolId::from_letter(c),
        _ => None,
    }
}

/// Which multiple of `x` each Latin letter denotes and which of `1..=x` each
/// Greek letter denotes. Both lists are indexed by letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueAssignment {
    latin: Vec<i64>,
    greek: Vec<i64>,
}

impl ValueAssignment {
    pub fn new(order: Order, latin: Vec<i64>, greek: Vec<i64>) -> Result<Self> {
        let x = order.get() as i64;
        let latin_set: Vec<i64> = (0..x).map(|m| m * x).collect();
        let greek_set: Vec<i64> = (1..=x).collect();
        if !is_permutation_of(&latin, &latin_set) {
            return Err(Error::InvalidAssignment { role: "latin", values: latin, expected: latin_set });
        }
        if !is_permutation_of(&greek, &greek_set) {
            return Err(Error::InvalidAssignment { role: "greek", values: greek, expected: greek_set });
        }
        Ok(ValueAssignment { latin, greek })
    }

    /// `a = 0, b = x, …` and `α = 1, β = 2, …`.
    pub fn natural(order: Order) -> Self {
        let x = order.get() as i64;
        ValueAssignment { latin: (0..x).map(|m| m * x).collect(), greek: (1..=x).collect() }
    }

    pub(crate) fn from_parts_unchecked(latin: Vec<i64>, greek: Vec<i64>) -> Self {
        ValueAssignment { latin, greek }
    }

    pub fn order(&self) -> Order {
        Order(self.latin.len())
    }

    pub fn latin(&self) -> &[i64] {
        &self.latin
    }

    pub fn greek(&self) -> &[i64] {
        &self.greek
    }

    pub fn value_of(&self, sym: SymbolId) -> i64 {
        match sym.role {
            Role::Latin => self.latin[sym.index],
            Role::Greek => self.greek[sym.index],
        }
    }
}

impl fmt::Display for ValueAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let latin: Vec<String> =
            self.latin.iter().enumerate().map(|(i, v)| format!("{}={}", latin_letter(i), v)).collect();
        let greek: Vec<String> =
            self.greek.iter().enumerate().map(|(i, v)| format!("{}={}", greek_letter(i), v)).collect();
        write!(f, "{}; {}", latin.join(" "), greek.join(" "))
    }
}

fn is_permutation_of(values: &[i64], set: &[i64]) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted == set
}

/// A numeric `x × x` grid. Cells are unconstrained so malformed squares can
/// still be audited.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    order: Order,
    cells: Vec<i64>,
}

impl Square {
    pub fn new(order: Order, cells: Vec<i64>) -> Result<Self> {
        check_len(order, cells.len())?;
        Ok(Square { order, cells })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let order = Order::new(rows.len())?;
        let x = order.get();
        let mut cells = Vec::with_capacity(order.cells());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != x {
                return Err(Error::RaggedRow { row: i, len: row.len(), expected: x });
            }
            cells.extend(row);
        }
        Ok(Square { order, cells })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn cells(&self) -> &[i64] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.cells[row * self.order.get() + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.cells.chunks(self.order.get())
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(<[i64]>::to_vec).collect()
    }

    /// Swaps two cells; handy for building perturbed copies.
    pub fn swapped(&self, a: (usize, usize), b: (usize, usize)) -> Square {
        let x = self.order.get();
        let mut out = self.clone();
        out.cells.swap(a.0 * x + a.1, b.0 * x + b.1);
        out
    }
}

impl fmt::Display for Square {
    /// Right-aligned, space separated, width of the widest cell.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cells.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Pairs the two letter grids cell by cell.
pub fn superpose(latin: &SymbolGrid, greek: &SymbolGrid) -> Result<SuperposedGrid> {
    if latin.order != greek.order {
        return Err(Error::OrderMismatch { left: latin.order.get(), right: greek.order.get() });
    }
    if latin.role != Role::Latin {
        return Err(Error::RoleMismatch { expected: "latin", found: latin.role.name() });
    }
    if greek.role != Role::Greek {
        return Err(Error::RoleMismatch { expected: "greek", found: greek.role.name() });
    }
    let cells = latin.cells.iter().copied().zip(greek.cells.iter().copied()).collect();
    Ok(SuperposedGrid { order: latin.order, cells })
}

/// Replaces every letter pair by `latin value + greek value`.
pub fn evaluate(pairs: &SuperposedGrid, va: &ValueAssignment) -> Result<Square> {
    if pairs.order != va.order() {
        return Err(Error::OrderMismatch { left: pairs.order.get(), right: va.order().get() });
    }
    let cells = pairs.cells.iter().map(|&(l, g)| va.latin[l] + va.greek[g]).collect();
    Ok(Square { order: pairs.order, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(x: usize) -> Order {
        Order::new(x).unwrap()
    }

    #[test]
    fn magic_constant_table() {
        let table: Vec<i64> = (1..=9).map(|x| magic_constant(ord(x))).collect();
        assert_eq!(table, vec![1, 5, 15, 34, 65, 111, 175, 260, 369]);
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(Order::new(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(9, ord(3)).unwrap(), (2, 3));
        assert_eq!(decompose(1, ord(5)).unwrap(), (0, 1));
        assert_eq!(decompose(16, ord(4)).unwrap(), (3, 4));
        assert!(decompose(0, ord(3)).is_err());
        assert!(decompose(10, ord(3)).is_err());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(2, 3, ord(3)).unwrap(), 9);
        assert_eq!(compose(0, 1, ord(7)).unwrap(), 1);
        assert_eq!(compose(3, 4, ord(4)).unwrap(), 16);
        assert!(compose(3, 1, ord(3)).is_err());
        assert!(compose(0, 0, ord(3)).is_err());
        assert!(compose(-1, 1, ord(3)).is_err());
    }

    #[test]
    fn superpose_checks_roles_and_orders() {
        let l = SymbolGrid::parse(Role::Latin, "a b / b a").unwrap();
        let g = SymbolGrid::parse(Role::Greek, "α β / β α").unwrap();
        let g3 = SymbolGrid::parse(Role::Greek, "α β γ / β γ α / γ α β").unwrap();
        assert!(superpose(&l, &g).is_ok());
        assert!(matches!(superpose(&g, &l), Err(Error::RoleMismatch { .. })));
        assert!(matches!(superpose(&l, &g3), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn order_one_superposition() {
        let l = SymbolGrid::parse(Role::Latin, "a").unwrap();
        let g = SymbolGrid::parse(Role::Greek, "α").unwrap();
        let p = superpose(&l, &g).unwrap();
        assert_eq!(p.cells(), &[(0, 0)]);
        let sq = evaluate(&p, &ValueAssignment::natural(ord(1))).unwrap();
        assert_eq!(sq.cells(), &[1]);
    }

    #[test]
    fn assignment_rejects_wrong_sets() {
        assert!(ValueAssignment::new(ord(3), vec![0, 6, 3], vec![1, 3, 2]).is_ok());
        assert!(ValueAssignment::new(ord(3), vec![0, 3, 3], vec![1, 3, 2]).is_err());
        assert!(ValueAssignment::new(ord(3), vec![0, 6, 3], vec![0, 1, 2]).is_err());
        assert!(ValueAssignment::new(ord(3), vec![0, 6], vec![1, 3, 2]).is_err());
    }

    #[test]
    fn square_display_is_fixed_width() {
        let sq = Square::from_rows(vec![vec![8, 10], vec![1, 16]]).unwrap();
        assert_eq!(sq.to_string(), " 8 10\n 1 16");
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(matches!(
            Square::from_rows(vec![vec![1, 2], vec![3]]),
            Err(Error::RaggedRow { row: 1, len: 1, expected: 2 })
        ));
    }

    #[test]
    fn pair_grid_round_trips_through_text() {
        let p = SuperposedGrid::parse("aγ bβ cα / bα cγ aβ / cβ aα bγ").unwrap();
        assert_eq!(SuperposedGrid::parse(&p.to_string()).unwrap(), p);
    }
}
