//! Inputs shared by the benchmarks.

use magic_core::{Order, Square};

pub fn order(x: usize) -> Order {
    Order::new(x).expect("positive order")
}

/// The `x × x` square with `k` in row-major cell `k - 1`; not magic, which
/// keeps the verifier on its slow path.
pub fn counting_square(x: usize) -> Square {
    Square::new(order(x), (1..=(x * x) as i64).collect()).expect("x*x cells")
}
