#![allow(dead_code)]

use magic_core::{family_figure, FamilyId, Order, Square, SuperposedGrid, ValueAssignment};
use proptest::prelude::*;

pub fn ord(x: usize) -> Order {
    Order::new(x).unwrap()
}

pub fn square(rows: &[&[i64]]) -> Square {
    Square::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// A printed square, the family it comes from, and the letter values used.
pub struct Golden {
    pub name: &'static str,
    pub family: FamilyId,
    pub expected_sum: i64,
    pub latin: &'static [i64],
    pub greek: &'static [i64],
    pub rows: &'static [&'static [i64]],
}

impl Golden {
    pub fn square(&self) -> Square {
        square(self.rows)
    }

    pub fn assignment(&self) -> Option<ValueAssignment> {
        if self.latin.is_empty() {
            return None;
        }
        Some(ValueAssignment::new(self.family.order(), self.latin.to_vec(), self.greek.to_vec()).unwrap())
    }
}

/// The eight printed squares, in reading order.
pub const GOLDEN: [Golden; 8] = [
    Golden {
        name: "order 3, a=0 b=6",
        family: FamilyId::E3Reflect,
        expected_sum: 15,
        latin: &[0, 6, 3],
        greek: &[1, 3, 2],
        rows: &[&[2, 9, 4], &[7, 5, 3], &[6, 1, 8]],
    },
    Golden {
        name: "order 4, rotated",
        family: FamilyId::E4Rotated,
        expected_sum: 34,
        latin: &[0, 4, 8, 12],
        greek: &[1, 2, 3, 4],
        rows: &[&[8, 10, 15, 1], &[11, 5, 4, 14], &[2, 16, 9, 7], &[13, 3, 6, 12]],
    },
    Golden {
        name: "order 4, block",
        family: FamilyId::E4Block,
        expected_sum: 34,
        latin: &[0, 4, 8, 12],
        greek: &[1, 2, 3, 4],
        rows: &[&[1, 4, 14, 15], &[13, 16, 2, 3], &[8, 5, 11, 10], &[12, 9, 7, 6]],
    },
    Golden {
        name: "order 4, interleave",
        family: FamilyId::E4Interleave,
        expected_sum: 34,
        latin: &[0, 4, 8, 12],
        greek: &[1, 2, 3, 4],
        rows: &[&[1, 14, 4, 15], &[8, 11, 5, 10], &[13, 2, 16, 3], &[12, 7, 9, 6]],
    },
    Golden {
        name: "order 5, rotated, progressions",
        family: FamilyId::E5Rotated,
        expected_sum: 65,
        // d=0 b=5 a=10 c=15 e=20; α=1 β=2 δ=3 ε=4 γ=5
        latin: &[10, 5, 15, 0, 20],
        greek: &[1, 2, 5, 3, 4],
        rows: &[
            &[8, 20, 2, 21, 14],
            &[16, 3, 15, 9, 22],
            &[25, 7, 19, 13, 1],
            &[4, 11, 23, 17, 10],
            &[12, 24, 6, 5, 18],
        ],
    },
    Golden {
        name: "order 5, center, natural values",
        family: FamilyId::E5Center,
        expected_sum: 65,
        latin: &[0, 5, 10, 15, 20],
        greek: &[1, 2, 3, 4, 5],
        rows: &[
            &[14, 20, 21, 2, 8],
            &[10, 11, 17, 23, 4],
            &[1, 7, 13, 19, 25],
            &[22, 3, 9, 15, 16],
            &[18, 24, 5, 6, 12],
        ],
    },
    Golden {
        name: "order 5, center, switched values",
        family: FamilyId::E5Center,
        expected_sum: 65,
        // b=0 e=5 c=10 a=15 d=20; δ=1 α=2 γ=3 ε=4 β=5
        latin: &[15, 0, 10, 20, 5],
        greek: &[2, 5, 3, 1, 4],
        rows: &[
            &[11, 24, 7, 20, 3],
            &[4, 12, 25, 8, 16],
            &[17, 5, 13, 21, 9],
            &[10, 18, 1, 14, 22],
            &[23, 6, 19, 2, 15],
        ],
    },
    Golden {
        name: "order 6, fixed square",
        family: FamilyId::E6Editor,
        expected_sum: 111,
        latin: &[],
        greek: &[],
        rows: &[
            &[3, 36, 30, 4, 11, 27],
            &[22, 13, 35, 12, 14, 15],
            &[16, 18, 8, 31, 17, 21],
            &[28, 20, 6, 29, 19, 9],
            &[32, 23, 25, 2, 24, 5],
            &[10, 1, 7, 33, 26, 34],
        ],
    },
];

/// Line sums computed directly, without the verifier.
pub fn is_magic_brute(cells: &[i64], x: usize) -> bool {
    let n = (x * x) as i64;
    let mut seen = vec![false; x * x + 1];
    for &v in cells {
        if v < 1 || v > n || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    let target = (x as i64) * (1 + n) / 2;
    let at = |r: usize, c: usize| cells[r * x + c];
    (0..x).all(|r| (0..x).map(|c| at(r, c)).sum::<i64>() == target)
        && (0..x).all(|c| (0..x).map(|r| at(r, c)).sum::<i64>() == target)
        && (0..x).map(|k| at(k, k)).sum::<i64>() == target
        && (0..x).map(|k| at(k, x - 1 - k)).sum::<i64>() == target
}

/// Lexicographic next permutation; false once the last one is passed.
pub fn next_permutation(v: &mut [i64]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A known orthogonal pair of the given order, with rows, columns and both
/// alphabets relabelled at random. Relabelling keeps orthogonality.
pub fn orthogonal_figure() -> impl Strategy<Value = SuperposedGrid> {
    prop_oneof![Just(1usize), Just(3), Just(4), Just(5), Just(7)].prop_flat_map(|x| {
        (permutation(x), permutation(x), permutation(x), permutation(x)).prop_map(move |(rows, cols, ls, gs)| {
            let base: Vec<(usize, usize)> = if x == 4 {
                family_figure(FamilyId::E4Diag).unwrap().cells().to_vec()
            } else {
                (0..x).flat_map(|i| (0..x).map(move |j| ((i + j) % x, (i + 2 * j) % x))).collect()
            };
            let cells = (0..x)
                .flat_map(|r| (0..x).map(move |c| (r, c)))
                .map(|(r, c)| {
                    let (l, g) = base[rows[r] * x + cols[c]];
                    (ls[l], gs[g])
                })
                .collect();
            SuperposedGrid::new(Order::new(x).unwrap(), cells).unwrap()
        })
    })
}

pub fn assignment(x: usize) -> impl Strategy<Value = ValueAssignment> {
    let side = x as i64;
    (
        Just((0..side).map(|m| m * side).collect::<Vec<_>>()).prop_shuffle(),
        Just((1..=side).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(move |(l, g)| ValueAssignment::new(Order::new(x).unwrap(), l, g).unwrap())
}

pub fn any_square() -> impl Strategy<Value = Square> {
    (1usize..=6).prop_flat_map(|x| {
        prop_oneof![
            Just((1..=(x * x) as i64).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(-5i64..40, x * x),
        ]
        .prop_map(move |cells| Square::new(Order::new(x).unwrap(), cells).unwrap())
    })
}
