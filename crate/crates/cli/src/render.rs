//! Deterministic text / JSON / CSV rendering of the core artifacts.
//!
//! Output never depends on iteration order of anything unordered: all maps
//! are ordered, and every renderer walks them in that order. JSON encodes
//! integer coefficients as numbers when they fit in 64 bits and as decimal
//! strings otherwise.

use equichar::gl2::{Gl2, HPoly, LPoly};
use equichar::moduli::{LevelRow, M1nRow, QuotientReport};
use equichar::motive::{hodge_specialize, MotiveClass};
use equichar::partitions::IntPartition;
use equichar::ring::{rat_to_string, Int, Rat};
use equichar::symfun::FreeKey;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn int_value(c: &Int) -> Value {
    match i64::try_from(c.clone()) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

pub fn rat_value(q: &Rat) -> Value {
    if q.denom() == &Int::from(1) {
        int_value(q.numer())
    } else {
        json!(rat_to_string(q))
    }
}

pub fn partition_value(p: &IntPartition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

pub fn lpoly_value(p: &LPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rat_value).collect())
}

pub fn gl2_value(x: &Gl2) -> Value {
    Value::Array(
        x.terms()
            .iter()
            .map(|(&e, p)| json!({"w_exp": e, "L_poly": lpoly_value(p)}))
            .collect(),
    )
}

pub fn hpoly_value(h: &HPoly) -> Value {
    Value::Array(
        h.terms()
            .iter()
            .map(|(&n, p)| json!({"h": n, "L_poly": lpoly_value(p)}))
            .collect(),
    )
}

pub fn motive_value(m: &MotiveClass) -> Value {
    Value::Array(
        m.terms()
            .iter()
            .map(|((l, s), c)| {
                json!({
                    "L": l,
                    "S": s.map(Value::from).unwrap_or(Value::Null),
                    "coeff": int_value(c),
                })
            })
            .collect(),
    )
}

/// Text for one monomial of the level-one ring, e.g. `L^2`, `S12`, `L*S12`.
pub fn motive_monomial_text(l: u32, s: Option<u32>) -> String {
    let mut parts = Vec::new();
    match l {
        0 => {}
        1 => parts.push("L".to_string()),
        k => parts.push(format!("L^{k}")),
    }
    if let Some(w) = s {
        parts.push(format!("S{w}"));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn schur_label(p: &IntPartition) -> String {
    format!("s{p}")
}

/// Text rendering of a Schur-indexed map of H-polynomials (one level row).
pub fn level_row_text(row: &LevelRow) -> String {
    let mut out = format!("n = {}\n", row.n);
    for (lambda, h) in &row.entries {
        out.push_str(&format!("  {}: {}\n", schur_label(lambda), h));
    }
    out
}

pub fn level_row_value(row: &LevelRow) -> Value {
    json!({
        "n": row.n,
        "entries": row
            .entries
            .iter()
            .map(|(l, h)| json!({"partition": partition_value(l), "coeff": hpoly_value(h)}))
            .collect::<Vec<_>>(),
    })
}

pub fn m1n_row_text(row: &M1nRow, with_hodge: bool) -> String {
    let mut out = format!("n = {}\n", row.n);
    for (lambda, m) in &row.equivariant {
        out.push_str(&format!("  {}: {}\n", schur_label(lambda), m));
    }
    out.push_str(&format!("  Serre = {}\n", row.nonequivariant));
    out.push_str(&format!("  chi   = {}\n", row.euler));
    if with_hodge {
        let h = hodge_specialize(&row.nonequivariant);
        out.push_str(&format!("  E(t)  = {}\n", poly_in_t_text(&h)));
    }
    out
}

fn poly_in_t_text(coeffs: &[Int]) -> String {
    if coeffs.iter().all(|c| c.is_zero()) {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag_str = if mag == Int::from(1) && k > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        match k {
            0 => out.push_str(&mag.to_string()),
            1 => {
                out.push_str(&mag_str);
                if !mag_str.is_empty() {
                    out.push('*');
                }
                out.push('t');
            }
            _ => {
                out.push_str(&mag_str);
                if !mag_str.is_empty() {
                    out.push('*');
                }
                out.push_str(&format!("t^{k}"));
            }
        }
    }
    out
}

/// Power-sum presentation of a level-one row: the coefficient of p_rho is
/// (1/z_rho) sum_lambda chi^lambda(rho) c_lambda, a rational combination of
/// powers of L and cusp symbols.
pub fn m1n_row_powersum_text(row: &M1nRow) -> String {
    use equichar::characters::char_table;
    use equichar::motive::MotiveLaurent;
    use equichar::partitions::partitions_of;
    let table = char_table(row.n);
    let mut out = format!("n = {}\n", row.n);
    for rho in partitions_of(row.n) {
        let mut acc = MotiveLaurent::zero();
        for (lambda, m) in &row.equivariant {
            let chi = table.value(lambda, &rho);
            for ((l, s), c) in m.terms() {
                let scale = Rat::new(chi * c, rho.z_factor());
                let term = match s {
                    None => MotiveLaurent::l_power(*l as i64),
                    Some(w) => MotiveLaurent::cusp_l_power(*w, *l as i64),
                };
                acc = acc.add(&term.scale(&scale));
            }
        }
        if acc.is_zero() {
            continue;
        }
        let rendered: Vec<String> = acc
            .terms()
            .iter()
            .map(|((l, s), c)| {
                let mono = motive_monomial_text(u32::try_from(*l).unwrap_or(0), *s);
                format!("({})*{}", rat_to_string(c), mono)
            })
            .collect();
        out.push_str(&format!("  p{rho}: {}\n", rendered.join(" + ")));
    }
    out
}

pub fn m1n_row_value(row: &M1nRow) -> Value {
    json!({
        "n": row.n,
        "equivariant": row
            .equivariant
            .iter()
            .map(|(l, m)| json!({"partition": partition_value(l), "coeff": motive_value(m)}))
            .collect::<Vec<_>>(),
        "serre": motive_value(&row.nonequivariant),
        "euler": int_value(&row.euler),
    })
}

/// CSV rows for one table row: n, partition, monomial, coefficient.
pub fn m1n_row_csv(row: &M1nRow, out: &mut String) {
    for (lambda, m) in &row.equivariant {
        for ((l, s), c) in m.terms() {
            out.push_str(&format!(
                "{},\"{}\",{},{}\n",
                row.n,
                lambda,
                motive_monomial_text(*l, *s),
                c
            ));
        }
    }
}

pub const M1N_CSV_HEADER: &str = "n,partition,monomial,coefficient\n";

/// Parse the CSV produced by `m1n_row_csv` back into structured rows
/// (quote-aware: the partition field contains commas); the renderer and
/// this parser round-trip, which the tests assert.
pub fn parse_m1n_csv(text: &str) -> Result<Vec<(u32, String, String, Int)>, String> {
    fn split_row(line: &str) -> Result<Vec<String>, String> {
        let mut fields = Vec::new();
        let mut cur = String::new();
        let mut quoted = false;
        for c in line.chars() {
            match c {
                '"' => quoted = !quoted,
                ',' if !quoted => fields.push(std::mem::take(&mut cur)),
                _ => cur.push(c),
            }
        }
        if quoted {
            return Err(format!("unbalanced quotes: {line}"));
        }
        fields.push(cur);
        Ok(fields)
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != M1N_CSV_HEADER.trim_end() {
                return Err(format!("bad header: {line}"));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields = split_row(line)?;
        if fields.len() != 4 {
            return Err(format!("bad row: {line}"));
        }
        let n: u32 = fields[0].parse().map_err(|e| format!("bad n: {e}"))?;
        let coeff: Int = fields[3]
            .parse()
            .map_err(|e| format!("bad coefficient: {e}"))?;
        out.push((n, fields[1].clone(), fields[2].clone(), coeff));
    }
    Ok(out)
}

/// Text for a sigma-monomial of the universal polynomials:
/// `sigma[2,1](E1)*E3`.
pub fn sigma_monomial_text(key: &FreeKey) -> String {
    if key.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (alphabet, mu) in key {
        if mu.parts() == [1] {
            parts.push(format!("E{alphabet}"));
        } else {
            parts.push(format!("sigma{mu}(E{alphabet})"));
        }
    }
    parts.join("*")
}

pub fn phi_text(lambda: &IntPartition, poly: &BTreeMap<FreeKey, Int>) -> String {
    let mut out = format!("Phi{lambda} =");
    if poly.is_empty() {
        out.push_str(" 0");
        return out;
    }
    // Deterministic: keys in BTreeMap order; sign-aware joining.
    let mut first = true;
    for (key, c) in poly {
        let mag = c.abs();
        if first {
            out.push(' ');
            if c.is_negative() {
                out.push_str("- ");
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag == Int::from(1) {
            out.push_str(&sigma_monomial_text(key));
        } else {
            out.push_str(&format!("{mag}*{}", sigma_monomial_text(key)));
        }
    }
    out
}

pub fn phi_value(lambda: &IntPartition, poly: &BTreeMap<FreeKey, Int>) -> Value {
    json!({
        "partition": partition_value(lambda),
        "terms": poly
            .iter()
            .map(|(key, c)| {
                json!({
                    "monomial": key
                        .iter()
                        .map(|(a, mu)| json!({"alphabet": a, "partition": partition_value(mu)}))
                        .collect::<Vec<_>>(),
                    "coeff": int_value(c),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn quotient_text(q: &QuotientReport) -> String {
    let mut out = String::new();
    out.push_str("invariants (coefficients of x^m, H-basis):\n");
    for (m, inv) in q.invariants.iter().enumerate().skip(1) {
        let h = inv.h_basis().expect("invariants are symmetric");
        out.push_str(&format!("  x^{m}: {h}\n"));
    }
    out.push_str("classes:\n");
    for (m, s) in q.serre.iter().enumerate().skip(1) {
        out.push_str(&format!("  x^{m}: {s}\n"));
    }
    out.push_str("euler:\n  ");
    let eulers: Vec<String> = q.euler.iter().skip(1).map(|e| e.to_string()).collect();
    out.push_str(&eulers.join(", "));
    out.push('\n');
    out
}

pub fn quotient_value(q: &QuotientReport) -> Value {
    json!({
        "max_x": q.n_max,
        "invariants": q.invariants.iter().skip(1).map(gl2_value).collect::<Vec<_>>(),
        "serre": q.serre.iter().skip(1).map(motive_value).collect::<Vec<_>>(),
        "euler": q.euler.iter().skip(1).map(int_value).collect::<Vec<_>>(),
    })
}

pub fn stirling_text(m: &equichar::StirlingMatrices) -> String {
    let mut out = String::new();
    let width = 6;
    out.push_str("s (first kind):\n");
    for row in &m.first {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&format!("  [{}]\n", cells.join(" ")));
    }
    out.push_str("S (second kind):\n");
    for row in &m.second {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&format!("  [{}]\n", cells.join(" ")));
    }
    out.push_str(&format!(
        "product s.S = identity: {}\n",
        m.product_is_identity()
    ));
    out
}

pub fn stirling_value(m: &equichar::StirlingMatrices) -> Value {
    let rows = |mat: &Vec<Vec<Int>>| -> Value {
        Value::Array(
            mat.iter()
                .map(|r| Value::Array(r.iter().map(int_value).collect()))
                .collect(),
        )
    };
    json!({
        "n": m.size,
        "first": rows(&m.first),
        "second": rows(&m.second),
        "product_identity": m.product_is_identity(),
    })
}

pub fn stirling_csv(m: &equichar::StirlingMatrices) -> String {
    let mut out = String::from("kind,n,k,value\n");
    for (i, row) in m.first.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            out.push_str(&format!("s,{},{},{}\n", i + 1, j + 1, c));
        }
    }
    for (i, row) in m.second.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            out.push_str(&format!("S,{},{},{}\n", i + 1, j + 1, c));
        }
    }
    out
}

/// Parse the CSV produced by `stirling_csv`: (kind, n, k, value) rows.
pub fn parse_stirling_csv(text: &str) -> Result<Vec<(char, u32, u32, Int)>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 {
            if line != "kind,n,k,value" {
                return Err(format!("bad header: {line}"));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 || fields[0].len() != 1 {
            return Err(format!("bad row: {line}"));
        }
        let kind = fields[0].chars().next().unwrap();
        let n: u32 = fields[1].parse().map_err(|e| format!("bad n: {e}"))?;
        let k: u32 = fields[2].parse().map_err(|e| format!("bad k: {e}"))?;
        let value: Int = fields[3].parse().map_err(|e| format!("bad value: {e}"))?;
        out.push((kind, n, k, value));
    }
    Ok(out)
}
