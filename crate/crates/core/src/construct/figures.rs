use std::fmt;
use std::str::FromStr;

use crate::construct::reflect::{reflect_greek, rotate_lines, Axis, LineAxis};
use crate::error::{Error, Result};
use crate::model::{superpose, Order, Role, Square, SuperposedGrid, SymbolGrid};

/// A named construction: one lettered figure, or in the case of
/// [`FamilyId::E6Editor`] one fixed 6×6 square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    E3Reflect,
    E3Rotated,
    E4Diag,
    E4Rotated,
    E4Block,
    E4Interleave,
    E5Diag,
    E5Rotated,
    E5Center,
    E6Paired,
    E6Editor,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::E3Reflect,
        FamilyId::E3Rotated,
        FamilyId::E4Diag,
        FamilyId::E4Rotated,
        FamilyId::E4Block,
        FamilyId::E4Interleave,
        FamilyId::E5Diag,
        FamilyId::E5Rotated,
        FamilyId::E5Center,
        FamilyId::E6Paired,
        FamilyId::E6Editor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::E3Reflect => "e3.reflect",
            FamilyId::E3Rotated => "e3.rotated",
            FamilyId::E4Diag => "e4.diag",
            FamilyId::E4Rotated => "e4.rotated",
            FamilyId::E4Block => "e4.block",
            FamilyId::E4Interleave => "e4.interleave",
            FamilyId::E5Diag => "e5.diag",
            FamilyId::E5Rotated => "e5.rotated",
            FamilyId::E5Center => "e5.center",
            FamilyId::E6Paired => "e6.paired",
            FamilyId::E6Editor => "e6.editor",
        }
    }

    pub fn order(self) -> Order {
        let x = match self {
            FamilyId::E3Reflect | FamilyId::E3Rotated => 3,
            FamilyId::E4Diag | FamilyId::E4Rotated | FamilyId::E4Block | FamilyId::E4Interleave => 4,
            FamilyId::E5Diag | FamilyId::E5Rotated | FamilyId::E5Center => 5,
            FamilyId::E6Paired | FamilyId::E6Editor => 6,
        };
        Order::new(x).expect("family orders are positive")
    }

    pub fn description(self) -> &'static str {
        match self {
            FamilyId::E3Reflect => "greek letters mirrored across the middle column",
            FamilyId::E3Rotated => "e3.reflect with its first column moved to the end",
            FamilyId::E4Diag => "all letters on every line, greek mirrored across the main diagonal",
            FamilyId::E4Rotated => "e4.diag with its first column moved to the end",
            FamilyId::E4Block => "two latin letters per row, greek mirrored across the main diagonal",
            FamilyId::E4Interleave => "two latin letters per row, interleaved",
            FamilyId::E5Diag => "all letters on every line, greek mirrored across the middle column",
            FamilyId::E5Rotated => "e5.diag with its first column moved to the end",
            FamilyId::E5Center => "main diagonal filled with c, greek mirrored across the middle row",
            FamilyId::E6Paired => "paired-letter 6x6 figure; not orthogonal, never magic",
            FamilyId::E6Editor => "a fixed 6x6 magic square",
        }
    }

    /// Families whose assignments can be enumerated into magic squares.
    pub fn is_enumerable(self) -> bool {
        !matches!(self, FamilyId::E6Paired | FamilyId::E6Editor)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL.into_iter().find(|id| id.as_str() == s).ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Which letter fills the second cell of the main diagonal in the order-4
/// Latin figure. `C` is the printed figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    C,
    D,
}

impl Variant {
    pub fn letter(self) -> char {
        match self {
            Variant::C => 'c',
            Variant::D => 'd',
        }
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "c" => Ok(Variant::C),
            "d" => Ok(Variant::D),
            other => Err(format!("unknown variant `{other}`, expected c or d")),
        }
    }
}

const E3_REFLECT: &str = "aγ bβ cα / bα cγ aβ / cβ aα bγ";
const E3_ROTATED: &str = "bβ cα aγ / cγ aβ bα / aα bγ cβ";
const E4_DIAG: &str = "aα bδ cβ dγ / dβ cγ bα aδ / bγ aβ dδ cα / cδ dα aγ bβ";
const E4_ROTATED: &str = "bδ cβ dγ aα / cγ bα aδ dβ / aβ dδ cα bγ / dα aγ bβ cδ";
// Row 4 follows the superposed figure (c c b b), not the Latin-only print.
const E4_BLOCK: &str = "aα aδ dβ dγ / dα dδ aβ aγ / bδ bα cγ cβ / cδ cα bγ bβ";
const E4_INTERLEAVE: &str = "aα dβ aδ dγ / bδ cγ bα cβ / dα aβ dδ aγ / cδ bγ cα bβ";
const E5_DIAG: &str = "aε bδ cγ dβ eα / eβ cα dδ aγ bε / dα eγ bβ cε aδ / bγ dε aα eδ cβ / cδ aβ eε bα dγ";
const E5_ROTATED: &str = "bδ cγ dβ eα aε / cα dδ aγ bε eβ / eγ bβ cε aδ dα / dε aα eδ cβ bγ / aβ eε bα dγ cδ";
const E5_CENTER: &str = "cδ dε eα aβ bγ / bε cα dβ eγ aδ / aα bβ cγ dδ eε / eβ aγ bδ cε dα / dγ eδ aε bα cβ";
const E6_PAIRED: &str = "aα aζ aβ fε fγ fδ / fα fζ fβ aε aγ aδ / bα bζ bβ eε eγ eδ / \
                         eζ eα eε bβ bδ bγ / cζ cα cε dβ dδ dγ / dζ dα dε cβ cδ cγ";

/// The order-4 Latin figure with `d` in the second diagonal cell.
const E4_LATIN_D: &str = "a b c d / c d a b / d c b a / b a d c";

const EDITOR_SQUARE: [[i64; 6]; 6] = [
    [3, 36, 30, 4, 11, 27],
    [22, 13, 35, 12, 14, 15],
    [16, 18, 8, 31, 17, 21],
    [28, 20, 6, 29, 19, 9],
    [32, 23, 25, 2, 24, 5],
    [10, 1, 7, 33, 26, 34],
];

fn transcribed(id: FamilyId) -> Result<&'static str> {
    Ok(match id {
        FamilyId::E3Reflect => E3_REFLECT,
        FamilyId::E3Rotated => E3_ROTATED,
        FamilyId::E4Diag => E4_DIAG,
        FamilyId::E4Rotated => E4_ROTATED,
        FamilyId::E4Block => E4_BLOCK,
        FamilyId::E4Interleave => E4_INTERLEAVE,
        FamilyId::E5Diag => E5_DIAG,
        FamilyId::E5Rotated => E5_ROTATED,
        FamilyId::E5Center => E5_CENTER,
        FamilyId::E6Paired => E6_PAIRED,
        FamilyId::E6Editor => return Err(Error::NotAFigure(id)),
    })
}

/// The lettered figure of a family, exactly as printed.
pub fn family_figure(id: FamilyId) -> Result<SuperposedGrid> {
    let text = transcribed(id)?;
    Ok(SuperposedGrid::parse(text).expect("built-in figures parse"))
}

/// Like [`family_figure`], with the alternative order-4 arrangement
/// available for `e4.diag` and `e4.rotated`.
pub fn family_figure_variant(id: FamilyId, variant: Variant) -> Result<SuperposedGrid> {
    match (id, variant) {
        (_, Variant::C) => family_figure(id),
        (FamilyId::E4Diag, Variant::D) => e4_variant_d(),
        (FamilyId::E4Rotated, Variant::D) => Ok(rotate_lines(&e4_variant_d()?, LineAxis::Columns, -1)),
        (family, variant) => Err(Error::VariantUnavailable { family, variant: variant.letter() }),
    }
}

fn e4_variant_d() -> Result<SuperposedGrid> {
    let latin = SymbolGrid::parse(Role::Latin, E4_LATIN_D).expect("built-in figure parses");
    let greek = reflect_greek(&latin, Axis::MainDiagonal)?;
    superpose(&latin, &greek)
}

/// The fixed 36-cell magic square.
pub fn editor_square() -> Square {
    Square::from_rows(EDITOR_SQUARE.iter().map(|r| r.to_vec()).collect()).expect("6x6 literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in FamilyId::ALL {
            assert_eq!(id.as_str().parse::<FamilyId>().unwrap(), id);
        }
        assert!(matches!("e7.magic".parse::<FamilyId>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn figures_have_family_order() {
        for id in FamilyId::ALL.into_iter().filter(|&id| id != FamilyId::E6Editor) {
            assert_eq!(family_figure(id).unwrap().order(), id.order(), "{id}");
        }
        assert_eq!(family_figure(FamilyId::E6Editor), Err(Error::NotAFigure(FamilyId::E6Editor)));
    }

    #[test]
    fn first_rows() {
        let row = |id| {
            let f = family_figure(id).unwrap();
            f.to_string().lines().next().unwrap().to_string()
        };
        assert_eq!(row(FamilyId::E4Block), "aα aδ dβ dγ");
        assert_eq!(row(FamilyId::E6Paired), "aα aζ aβ fε fγ fδ");
        assert_eq!(row(FamilyId::E5Center), "cδ dε eα aβ bγ");
    }

    #[test]
    fn editor_first_row() {
        assert_eq!(editor_square().to_rows()[0], vec![3, 36, 30, 4, 11, 27]);
    }

    #[test]
    fn variant_only_for_order_four_diag() {
        assert!(family_figure_variant(FamilyId::E4Diag, Variant::D).is_ok());
        assert!(family_figure_variant(FamilyId::E4Rotated, Variant::D).is_ok());
        assert!(matches!(family_figure_variant(FamilyId::E5Diag, Variant::D), Err(Error::VariantUnavailable { .. })));
    }
}
