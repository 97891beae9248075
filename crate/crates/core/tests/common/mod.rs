#![allow(dead_code)]

use lg_core::braid::{builtin_knot_table, KnotRecord};

/// The knots on which the cabling identities are checked.
pub const CABLING_KNOTS: [&str; 5] = ["0_1", "3_1", "4_1", "5_1", "5_2"];

pub fn knot(name: &str) -> KnotRecord {
    builtin_knot_table()
        .into_iter()
        .find(|r| r.matches(name))
        .unwrap_or_else(|| panic!("{name} is not in the shipped table"))
}

pub fn cabling_knots() -> Vec<KnotRecord> {
    CABLING_KNOTS.iter().map(|n| knot(n)).collect()
}

/// The multiplicity triangles of `V(0,α)^{⊗n}`, `n = 1..6`, row `k`, column `ℓ`,
/// as tabulated in the literature.
pub fn displayed_triangles() -> Vec<Vec<Vec<u64>>> {
    vec![
        vec![vec![1]],
        vec![vec![1, 1], vec![1]],
        vec![vec![1, 3, 1], vec![2, 2], vec![1]],
        vec![vec![1, 6, 6, 1], vec![3, 8, 3], vec![3, 3], vec![1]],
        vec![vec![1, 10, 20, 10, 1], vec![4, 20, 20, 4], vec![6, 15, 6], vec![4, 4], vec![1]],
        vec![vec![1, 15, 50, 50, 15, 1], vec![5, 40, 75, 40, 5], vec![10, 24, 10], vec![5, 5], vec![1]],
    ]
}
