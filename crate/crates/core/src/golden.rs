//! Reference values for the verification suite, typed in from the published
//! tables that this crate reproduces. They are inputs to tests and to the
//! `verify` runner, kept separate from anything the pipelines compute, so
//! "matches the reference" and "self-consistent" stay independent axes.

use crate::gl2::{HPoly, LPoly};
use crate::moduli::{LevelRow, M1nRow};
use crate::motive::MotiveClass;
use crate::partitions::IntPartition;
use crate::ring::{int, rat_int, Int, Rat};
use std::collections::BTreeMap;

fn lp(coeffs: &[i64]) -> LPoly {
    LPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
}

fn hp(entries: &[(u32, &[i64])]) -> HPoly {
    let mut terms = BTreeMap::new();
    for (h, coeffs) in entries {
        terms.insert(*h, lp(coeffs));
    }
    HPoly::new(terms)
}

fn part(parts: &[u32]) -> IntPartition {
    IntPartition::new(parts.to_vec())
}

fn mc(lpoly: &[i64]) -> MotiveClass {
    let mut out = MotiveClass::zero();
    for (k, &c) in lpoly.iter().enumerate() {
        out = out.add(&MotiveClass::from_l_power(k as u32).scale(&int(c)));
    }
    out
}

/// The displayed rows of the first-kind Stirling matrix (the sixth row is
/// elided behind the diagonal dots in the display).
pub fn stirling_first_display() -> Vec<Vec<Int>> {
    [
        [1i64, 0, 0, 0, 0, 0],
        [-1, 1, 0, 0, 0, 0],
        [2, -3, 1, 0, 0, 0],
        [-6, 11, -6, 1, 0, 0],
        [24, -50, 35, -10, 1, 0],
    ]
    .iter()
    .map(|row| row.iter().map(|&c| int(c)).collect())
    .collect()
}

/// The displayed rows of the second-kind Stirling matrix.
pub fn stirling_second_display() -> Vec<Vec<Int>> {
    [
        [1i64, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [1, 3, 1, 0, 0, 0],
        [1, 7, 6, 1, 0, 0],
        [1, 15, 25, 10, 1, 0],
    ]
    .iter()
    .map(|row| row.iter().map(|&c| int(c)).collect())
    .collect()
}

/// The published level-N table rows for n = 1..=5, exactly as displayed
/// (including the five-line n = 5 row, transcribed sign for sign).
pub fn level_table_display() -> Vec<LevelRow> {
    let row = |n: u32, entries: &[(&[u32], &[(u32, &[i64])])]| -> LevelRow {
        LevelRow {
            n,
            entries: entries
                .iter()
                .map(|(parts, h)| (part(parts), hp(h)))
                .collect(),
        }
    };
    vec![
        row(1, &[(&[1], &[(0, &[1])])]),
        row(2, &[(&[2], &[(0, &[0, 1])]), (&[1, 1], &[(1, &[-1])])]),
        row(
            3,
            &[
                (&[3], &[(0, &[0, 0, 1]), (1, &[1])]),
                (&[2, 1], &[(1, &[0, -1])]),
                (&[1, 1, 1], &[(2, &[1])]),
            ],
        ),
        row(
            4,
            &[
                (&[4], &[(0, &[0, -1, 0, 1]), (1, &[0, 1])]),
                (&[3, 1], &[(1, &[0, 1, -1]), (2, &[-1])]),
                (&[2, 2], &[(1, &[-1])]),
                (&[2, 1, 1], &[(2, &[0, 1])]),
                (&[1, 1, 1, 1], &[(3, &[-1])]),
            ],
        ),
        row(
            5,
            &[
                (&[5], &[(0, &[0, 0, -1, 0, 1]), (1, &[0, 0, 1]), (2, &[1])]),
                (
                    &[4, 1],
                    &[(0, &[0, 0, -1]), (1, &[0, 0, 1, -1]), (2, &[0, -1])],
                ),
                (&[3, 2], &[(0, &[0, 1]), (1, &[0, 1, 1]), (2, &[1, 1])]),
                (&[3, 1, 1], &[(1, &[-1]), (2, &[0, 1, 1]), (3, &[1])]),
                (&[2, 2, 1], &[(1, &[0, 1]), (2, &[1])]),
                (&[2, 1, 1, 1], &[(3, &[0, -1])]),
                (&[1, 1, 1, 1, 1], &[(4, &[1])]),
            ],
        ),
    ]
}

/// The published level-one table for n = 1..=5: equivariant class,
/// underlying class, Euler number.
pub fn m1n_table_display() -> Vec<M1nRow> {
    let row = |n: u32, eq: &[(&[u32], &[i64])], noneq: &[i64], euler: i64| -> M1nRow {
        M1nRow {
            n,
            equivariant: eq.iter().map(|(parts, c)| (part(parts), mc(c))).collect(),
            nonequivariant: mc(noneq),
            euler: int(euler),
        }
    };
    vec![
        row(1, &[(&[1], &[0, 1])], &[0, 1], 1),
        row(2, &[(&[2], &[0, 0, 1])], &[0, 0, 1], 1),
        row(
            3,
            &[(&[3], &[0, 0, 0, 1]), (&[1, 1, 1], &[-1])],
            &[-1, 0, 0, 1],
            0,
        ),
        row(
            4,
            &[
                (&[4], &[0, 0, -1, 0, 1]),
                (&[3, 1], &[1]),
                (&[2, 1, 1], &[0, -1]),
            ],
            &[3, -3, -1, 0, 1],
            0,
        ),
        row(
            5,
            &[
                (&[5], &[-1, 0, 0, -1, 0, 1]),
                (&[4, 1], &[0, 1, 0, -1]),
                (&[3, 2], &[-1, 1, 1]),
                (&[3, 1, 1], &[0, 1, -1]),
                (&[2, 2, 1], &[-1]),
                (&[1, 1, 1, 1, 1], &[-1]),
            ],
            &[-12, 15, -1, -5, 0, 1],
            -2,
        ),
    ]
}

/// The displayed non-equivariant class of the eleven-pointed space. The
/// source prints two terms with exponent 8 (4575 and 584550); the second is
/// a typographical duplicate. `listed` holds every printed (degree,
/// coefficient) pair except the duplicate; `displaced_coefficient` is the
/// 584550 that belongs at the single degree missing from `listed`'s span.
pub struct M111Display {
    pub listed: Vec<(u32, Int)>,
    pub displaced_coefficient: Int,
    pub cusp_weight: u32,
    pub cusp_coefficient: Int,
    pub euler: Int,
}

pub fn m1_11_display() -> M111Display {
    M111Display {
        listed: vec![
            (11, int(1)),
            (9, int(-330)),
            (8, int(4575)),
            (7, int(-30657)),
            (6, int(124_992)),
            (5, int(-336_820)),
            (3, int(-406_769)),
            (2, int(-865_316)),
            (1, int(2_437_776)),
            (0, int(-1_814_400)),
        ],
        displaced_coefficient: int(584_550),
        cusp_weight: 12,
        cusp_coefficient: int(-1),
        euler: int(-302_400),
    }
}

/// Residues of the Euler integrand at the eight circle poles, keyed by the
/// power of the primitive twelfth root of unity.
pub fn residue_display() -> Vec<(i64, Rat)> {
    use crate::ring::rat;
    vec![
        (0, rat(1, 6)),
        (6, rat(1, 6)),
        (2, rat(-1, 3)),
        (8, rat(-1, 3)),
        (4, rat(-1, 3)),
        (10, rat(-1, 3)),
        (3, rat(-1, 2)),
        (9, rat(-1, 2)),
    ]
}
