//! Small hand-entered graphs shared by the unit tests.

use crate::graph::{ColoredGraph, GraphBuilder, Sign};

/// `Q_3` with the twisted coloring: colors 1 and 2 form 4-cycles, while
/// 1/3 and 2/3 are Hamiltonian. Bosons are `1..=4`.
pub fn q3_twisted() -> ColoredGraph {
    [
        (1, 6, 1),
        (2, 5, 1),
        (3, 7, 1),
        (4, 8, 1),
        (1, 5, 2),
        (2, 6, 2),
        (3, 8, 2),
        (4, 7, 2),
        (1, 7, 3),
        (2, 8, 3),
        (3, 5, 3),
        (4, 6, 3),
    ]
    .into_iter()
    .fold(GraphBuilder::new(8, 3), |b, (u, v, c)| b.edge(u, v, c))
    .build()
    .unwrap()
    .with_default_parity()
    .unwrap()
}

/// A dashed `N = 4` Adinkra on 8 vertices; bosons are 1, 2, 7, 8.
pub fn n4_adinkra() -> ColoredGraph {
    use Sign::*;
    [
        (1, 4, 1, Plus),
        (2, 5, 1, Minus),
        (3, 7, 1, Plus),
        (6, 8, 1, Minus),
        (1, 5, 2, Plus),
        (2, 4, 2, Plus),
        (3, 8, 2, Plus),
        (6, 7, 2, Plus),
        (1, 3, 3, Minus),
        (2, 6, 3, Minus),
        (4, 7, 3, Plus),
        (5, 8, 3, Plus),
        (1, 6, 4, Minus),
        (2, 3, 4, Plus),
        (4, 8, 4, Minus),
        (5, 7, 4, Plus),
    ]
    .into_iter()
    .fold(GraphBuilder::new(8, 4), |b, (u, v, c, s)| b.signed_edge(u, v, c, s))
    .build()
    .unwrap()
    .with_default_parity()
    .unwrap()
}

pub const HEIGHTS_242: [i64; 8] = [0, 0, 1, 1, 1, 1, 2, 2];
pub const HEIGHTS_341: [i64; 8] = [0, 0, 1, 1, 1, 1, 0, 2];

pub fn n4_with_heights(h: [i64; 8]) -> ColoredGraph {
    n4_adinkra().with_heights(Some(h.to_vec())).unwrap()
}
