//! The verification runner behind `verify --suite ...`: recomputes every
//! table by its independent routes and diffs the results against the
//! built-in reference values and the committed golden files.
//!
//! Two independent axes, kept separate on purpose: "matches the published
//! display" (reference values typed in from the tables this tool
//! reproduces) and "self-consistent / regenerable" (independent routes agree
//! and the committed golden files re-derive byte for byte).

use equichar::gl2::{weyl_pair, LPoly};
use equichar::golden;
use equichar::moduli;
use equichar::motive::expected_euler_law;
use equichar::partitions::IntPartition;
use equichar::ring::int;
use equichar::StirlingMatrices;

pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            ok: true,
            detail: String::new(),
        }
    }
    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            ok: false,
            detail: detail.into(),
        }
    }
}

/// The five catalogued sign misprints in the displayed level-N row 5:
/// (Schur partition, H index, L power).
fn catalogued_row5_flips() -> Vec<(IntPartition, u32, usize)> {
    let p = |parts: &[u32]| IntPartition::new(parts.to_vec());
    vec![
        (p(&[2, 2, 1]), 1, 1),
        (p(&[3, 1, 1]), 1, 0),
        (p(&[3, 1, 1]), 2, 1),
        (p(&[3, 2]), 1, 1),
        (p(&[3, 2]), 2, 1),
    ]
}

pub fn suite_tables() -> Vec<Check> {
    let mut out = Vec::new();
    // Stirling display.
    let m = StirlingMatrices::new(6);
    let first_ok = golden::stirling_first_display()
        .iter()
        .enumerate()
        .all(|(i, row)| &m.first[i] == row);
    let second_ok = golden::stirling_second_display()
        .iter()
        .enumerate()
        .all(|(i, row)| &m.second[i] == row);
    out.push(if first_ok && second_ok {
        Check::pass("stirling matrices match the display")
    } else {
        Check::fail("stirling matrices match the display", "entry mismatch")
    });

    // Level rows.
    match moduli::level_n_series(5) {
        Err(e) => out.push(Check::fail("level table computes", e.to_string())),
        Ok(rows) => {
            let display = golden::level_table_display();
            for (r, d) in rows.iter().zip(&display).take(4) {
                out.push(if r.entries == d.entries {
                    Check::pass(format!("level table row {} matches the display", r.n))
                } else {
                    Check::fail(
                        format!("level table row {} matches the display", r.n),
                        "entry mismatch",
                    )
                });
            }
            // Row 5: computed differs from the display in exactly five
            // catalogued sign misprints; anything else is a failure.
            let mut flips = Vec::new();
            let r = &rows[4];
            let d = &display[4];
            let mut clean = r.entries.len() == d.entries.len();
            for (lambda, h) in &r.entries {
                let Some(ph) = d.entries.get(lambda) else {
                    clean = false;
                    continue;
                };
                for idx in 0..=8u32 {
                    let a = h.coeff(idx);
                    let b = ph.coeff(idx);
                    for pow in 0..10usize {
                        let ca = a.coeff(pow);
                        let cb = b.coeff(pow);
                        if ca != cb {
                            if ca == -cb.clone() {
                                flips.push((lambda.clone(), idx, pow));
                            } else {
                                clean = false;
                            }
                        }
                    }
                }
            }
            let name = "level table row 5 matches the display up to the five \
                        catalogued sign misprints";
            out.push(if clean && flips == catalogued_row5_flips() {
                Check::pass(name)
            } else {
                Check::fail(name, format!("unexpected differences: {flips:?}"))
            });
        }
    }

    // Level-one table.
    match moduli::m1n_table(5) {
        Err(e) => out.push(Check::fail("level-one table computes", e.to_string())),
        Ok(rows) => {
            for (r, d) in rows.iter().zip(&golden::m1n_table_display()) {
                let ok = r.equivariant == d.equivariant
                    && r.nonequivariant == d.nonequivariant
                    && r.euler == d.euler;
                out.push(if ok {
                    Check::pass(format!("level-one table row {} matches the display", r.n))
                } else {
                    Check::fail(
                        format!("level-one table row {} matches the display", r.n),
                        format!("computed Serre = {}, chi = {}", r.nonequivariant, r.euler),
                    )
                });
            }
        }
    }

    // Eleven points.
    match moduli::m1n_row(11, 11) {
        Err(e) => out.push(Check::fail("eleven-point class computes", e.to_string())),
        Ok(row) => {
            let d = golden::m1_11_display();
            let m = &row.nonequivariant;
            let mut ok = row.euler == d.euler;
            let mut seen = std::collections::BTreeSet::new();
            for (deg, c) in &d.listed {
                ok &= &m.coefficient(&(*deg, None)) == c;
                seen.insert(*deg);
            }
            let leftover: Vec<_> = m
                .terms()
                .iter()
                .filter(|((deg, s), _)| s.is_none() && !seen.contains(deg))
                .collect();
            ok &= leftover.len() == 1 && leftover[0].1 == &d.displaced_coefficient;
            ok &= m.coefficient(&(0, Some(d.cusp_weight))) == d.cusp_coefficient;
            out.push(if ok {
                Check::pass(
                    "eleven-point class matches the display (584550 placed at \
                     the single missing degree)",
                )
            } else {
                Check::fail("eleven-point class matches the display", format!("{m}"))
            });
        }
    }
    out
}

pub fn suite_don(n_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    match moduli::verify_don(n_max) {
        Err(e) => out.push(Check::fail("residue verification computes", e.to_string())),
        Ok(report) => {
            out.push(if report.poles_simple {
                Check::pass("all eight poles are simple")
            } else {
                Check::fail("all eight poles are simple", "a pole failed the check")
            });
            for (e, got, want) in &report.residues {
                out.push(if got == want {
                    Check::pass(format!("residue at zeta^{e} equals {want}"))
                } else {
                    Check::fail(
                        format!("residue at zeta^{e} equals {want}"),
                        format!("got {got}"),
                    )
                });
            }
            out.push(if report.binomial_vanishing {
                Check::pass("binomial factor vanishes at every pole except 1 (n >= 4)")
            } else {
                Check::fail(
                    "binomial factor vanishes at every pole except 1",
                    "violation",
                )
            });
            for (n, got, want) in &report.euler_column {
                out.push(if got == want {
                    Check::pass(format!("chi at n = {n} equals {want}"))
                } else {
                    Check::fail(
                        format!("chi at n = {n} equals {want}"),
                        format!("got {got}"),
                    )
                });
            }
        }
    }
    out
}

pub fn suite_closed_form(n_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let table = match moduli::m1n_table(n_max) {
        Ok(t) => t,
        Err(e) => {
            out.push(Check::fail("substitution route computes", e.to_string()));
            return out;
        }
    };
    match moduli::closed_form_series(n_max) {
        Err(e) => out.push(Check::fail("closed form computes", e.to_string())),
        Ok(closed) => {
            for (c, t) in closed.iter().zip(&table) {
                out.push(if c.entries == t.equivariant {
                    Check::pass(format!(
                        "closed form agrees with substitution at n = {}",
                        c.n
                    ))
                } else {
                    Check::fail(
                        format!("closed form agrees with substitution at n = {}", c.n),
                        "row mismatch",
                    )
                });
            }
        }
    }
    match moduli::nonequi_series(n_max) {
        Err(e) => out.push(Check::fail(
            "binomial residue route computes",
            e.to_string(),
        )),
        Ok(list) => {
            let ok = list.iter().zip(&table).all(|(m, t)| m == &t.nonequivariant);
            out.push(if ok {
                Check::pass(format!("binomial residue route agrees for n <= {n_max}"))
            } else {
                Check::fail("binomial residue route agrees", "column mismatch")
            });
        }
    }
    let mut weyl_ok = true;
    for k in 0..=10u32 {
        for l in 0..=10u32 {
            let v = weyl_pair(k, l);
            weyl_ok &= if k == l {
                v == LPoly::l_power(k + 1)
            } else {
                v.is_zero()
            };
        }
    }
    out.push(if weyl_ok {
        Check::pass("Weyl pairing identity holds for k, l <= 10")
    } else {
        Check::fail("Weyl pairing identity holds for k, l <= 10", "violation")
    });
    // Euler law re-stated against the factorial formula.
    let mut law_ok = true;
    for row in table.iter().filter(|r| r.n >= 5) {
        law_ok &= row.euler == expected_euler_law(row.n);
    }
    for (row, want) in table.iter().zip([int(1), int(1), int(0), int(0)]) {
        law_ok &= row.euler == want;
    }
    out.push(if law_ok {
        Check::pass("Euler column obeys the factorial law")
    } else {
        Check::fail("Euler column obeys the factorial law", "violation")
    });
    out
}

/// Golden files: every committed artifact re-derives byte for byte. The
/// generating command is recorded next to each file name.
pub fn suite_golden() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, expected, regenerate) in golden_files() {
        let got = regenerate();
        out.push(match got {
            Ok(got) if got == expected => Check::pass(format!("golden file {name} re-derives")),
            Ok(got) => {
                let diff = first_diff(expected, &got);
                Check::fail(format!("golden file {name} re-derives"), diff)
            }
            Err(e) => Check::fail(format!("golden file {name} re-derives"), e),
        });
    }
    out
}

fn first_diff(expected: &str, got: &str) -> String {
    for (i, (a, b)) in expected.lines().zip(got.lines()).enumerate() {
        if a != b {
            return format!("line {}: expected `{a}`, got `{b}`", i + 1);
        }
    }
    format!(
        "length mismatch: expected {} lines, got {}",
        expected.lines().count(),
        got.lines().count()
    )
}

type Regen = fn() -> Result<String, String>;

/// (file name, committed bytes, regenerating closure). Commands are in the
/// README: each file is the exact stdout of one invocation.
pub fn golden_files() -> Vec<(&'static str, &'static str, Regen)> {
    vec![
        (
            "stirling_n6.txt",
            include_str!("../golden/stirling_n6.txt"),
            || crate::command_output(&["stirling", "--n", "6"]),
        ),
        (
            "level_table_n5.txt",
            include_str!("../golden/level_table_n5.txt"),
            || crate::command_output(&["config-serre", "--ring", "gl2", "--max-n", "5"]),
        ),
        (
            "m1n_table_n5.json",
            include_str!("../golden/m1n_table_n5.json"),
            || crate::command_output(&["m1n-table", "--max-n", "5", "--format", "json"]),
        ),
        (
            "m1n_n11.json",
            include_str!("../golden/m1n_n11.json"),
            || crate::command_output(&["m1n", "--n", "11", "--format", "json"]),
        ),
        ("phi_w4.txt", include_str!("../golden/phi_w4.txt"), || {
            crate::command_output(&["phi", "--max-weight", "4"])
        }),
        (
            "quotient_x12.txt",
            include_str!("../golden/quotient_x12.txt"),
            || crate::command_output(&["quotient", "--max-x", "12"]),
        ),
    ]
}
