//! Argument parsing and dispatch.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error. Output is
//! byte-deterministic for fixed inputs; nothing depends on environment
//! variables or configuration files.

use crate::render;
use crate::render::Format;
use crate::verify;
use clap::{Args, Parser, Subcommand, ValueEnum};
use equichar::arnold;
use equichar::configspace::{config_serre, phi_polynomials, SerreInput};
use equichar::moduli;
use equichar::partitions::partitions_of;
use equichar::ring::rat_int;
use equichar::StirlingMatrices;
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "equichar",
    about = "Exact equivariant Serre characteristics of configuration spaces \
             and of the moduli of pointed genus-one curves",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the rendered output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Print timing information to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingArg {
    /// Trivial coefficients (a single point class).
    Unit,
    /// The rank-two local system ring Z[H, L].
    Gl2,
    /// The free lambda-ring on the classes E(1), E(2), ...
    Free,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Schur,
    Powersum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Don,
    Tables,
    ClosedForm,
    Golden,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Both Stirling matrices up to size N with the identity-product check.
    Stirling(StirlingArgs),
    /// Orlik-Solomon data: ranks, characters, exactness, components.
    Os(OsArgs),
    /// The universal polynomials Phi_lambda in the sigma-monomial basis.
    Phi(PhiArgs),
    /// The configuration series over a chosen coefficient ring.
    ConfigSerre(ConfigArgs),
    /// One row of the level-one table.
    M1n(M1nArgs),
    /// The level-one table up to a bound.
    M1nTable(M1nTableArgs),
    /// Quotient series: invariants, classes and Euler numbers.
    Quotient(QuotientArgs),
    /// Recompute everything and diff against reference values and golden
    /// files; nonzero exit on any mismatch.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct StirlingArgs {
    /// Matrix size.
    #[arg(long, default_value_t = 6)]
    n: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct OsArgs {
    /// Number of points.
    #[arg(long)]
    n: u32,
    /// Print the rank table (default).
    #[arg(long)]
    rank: bool,
    /// Print the character table of every graded piece.
    #[arg(long)]
    characters: bool,
    /// Print the exactness report of the circle differential.
    #[arg(long)]
    acyclic: bool,
    /// Print the partition-indexed component decomposition.
    #[arg(long)]
    components: bool,
    /// Raise the size cap (default 8, maximum 9).
    #[arg(long, default_value_t = arnold::DEFAULT_CAP)]
    cap: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct PhiArgs {
    /// Largest weight |lambda| to tabulate (at most 6).
    #[arg(long, default_value_t = 4)]
    max_weight: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct ConfigArgs {
    #[arg(long, value_enum)]
    ring: RingArg,
    /// Truncation degree.
    #[arg(long)]
    max_n: u32,
    #[arg(long, value_enum, default_value_t = BasisArg::Schur)]
    basis: BasisArg,
    /// Constant class value for the unit ring.
    #[arg(long, default_value_t = 1)]
    value: i64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct M1nArgs {
    /// Number of marked points (1..=12).
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = BasisArg::Schur)]
    basis: BasisArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct M1nTableArgs {
    /// Largest number of marked points (at most 12).
    #[arg(long, default_value_t = 5)]
    max_n: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct QuotientArgs {
    /// Expansion order in x (at most 12).
    #[arg(long, default_value_t = 12)]
    max_x: u32,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Route-consistency bound (5..=12).
    #[arg(long, default_value_t = 12)]
    max_n: u32,
}

fn usage_error(msg: &str) -> String {
    format!("usage error: {msg}")
}

/// Render a subcommand to its output string. Everything the binary prints
/// goes through here, so the golden-file checks re-run the exact code path.
pub fn command_output(argv: &[&str]) -> Result<String, String> {
    let mut full = vec!["equichar"];
    full.extend_from_slice(argv);
    let cli = Cli::try_parse_from(full).map_err(|e| e.to_string())?;
    dispatch(&cli.command)
}

fn dispatch(cmd: &Command) -> Result<String, String> {
    match cmd {
        Command::Stirling(a) => {
            if a.n == 0 || a.n > 64 {
                return Err(usage_error("stirling size must be in 1..=64"));
            }
            let m = StirlingMatrices::new(a.n);
            Ok(match a.format.into() {
                Format::Text => render::stirling_text(&m),
                Format::Json => format!("{:#}\n", render::stirling_value(&m)),
                Format::Csv => render::stirling_csv(&m),
            })
        }
        Command::Os(a) => os_command(a),
        Command::Phi(a) => {
            if a.max_weight > 6 {
                return Err(usage_error("phi table is capped at weight 6"));
            }
            let phis = phi_polynomials(a.max_weight).map_err(|e| e.to_string())?;
            Ok(match a.format.into() {
                Format::Text => {
                    let mut out = String::new();
                    for (lambda, poly) in &phis {
                        out.push_str(&render::phi_text(lambda, poly));
                        out.push('\n');
                    }
                    out
                }
                Format::Json => {
                    let rows: Vec<_> = phis.iter().map(|(l, p)| render::phi_value(l, p)).collect();
                    format!("{:#}\n", serde_json::Value::Array(rows))
                }
                Format::Csv => return Err(usage_error("phi has no CSV form")),
            })
        }
        Command::ConfigSerre(a) => config_command(a),
        Command::M1n(a) => {
            if a.n == 0 || a.n > moduli::DEFAULT_BOUND {
                return Err(usage_error("m1n supports 1..=12 marked points"));
            }
            let row = moduli::m1n_row(a.n, a.n).map_err(|e| e.to_string())?;
            if a.basis == BasisArg::Powersum {
                // The power-sum presentation carries 1/z_rho denominators.
                if a.format != FormatArg::Text {
                    return Err(usage_error("the power-sum presentation is text only"));
                }
                return Ok(render::m1n_row_powersum_text(&row));
            }
            Ok(match a.format.into() {
                Format::Text => render::m1n_row_text(&row, true),
                Format::Json => format!("{:#}\n", render::m1n_row_value(&row)),
                Format::Csv => {
                    let mut out = String::from(render::M1N_CSV_HEADER);
                    render::m1n_row_csv(&row, &mut out);
                    out
                }
            })
        }
        Command::M1nTable(a) => {
            if a.max_n == 0 || a.max_n > moduli::DEFAULT_BOUND {
                return Err(usage_error("m1n-table supports 1..=12 marked points"));
            }
            let rows = moduli::m1n_table(a.max_n).map_err(|e| e.to_string())?;
            Ok(match a.format.into() {
                Format::Text => {
                    let mut out = String::new();
                    for row in &rows {
                        out.push_str(&render::m1n_row_text(row, false));
                    }
                    out
                }
                Format::Json => {
                    let rows: Vec<_> = rows.iter().map(render::m1n_row_value).collect();
                    format!("{:#}\n", serde_json::Value::Array(rows))
                }
                Format::Csv => {
                    let mut out = String::from(render::M1N_CSV_HEADER);
                    for row in &rows {
                        render::m1n_row_csv(row, &mut out);
                    }
                    out
                }
            })
        }
        Command::Quotient(a) => {
            if a.max_x == 0 || a.max_x > moduli::DEFAULT_BOUND {
                return Err(usage_error("quotient supports 1..=12"));
            }
            let q = moduli::quotient_series(a.max_x).map_err(|e| e.to_string())?;
            Ok(match a.format.into() {
                Format::Text => render::quotient_text(&q),
                Format::Json => format!("{:#}\n", render::quotient_value(&q)),
                Format::Csv => return Err(usage_error("quotient has no CSV form")),
            })
        }
        Command::Verify(_) => Err(usage_error("verify cannot be nested")),
    }
}

fn os_command(a: &OsArgs) -> Result<String, String> {
    if a.cap > 9 {
        return Err(usage_error("the Orlik-Solomon cap tops out at 9"));
    }
    if a.n == 0 || a.n > a.cap {
        return Err(usage_error(&format!("os supports 1..=cap (= {})", a.cap)));
    }
    let n = a.n;
    let mut out = String::new();
    let mut json_obj = serde_json::Map::new();
    let want_rank = a.rank || !(a.characters || a.acyclic || a.components);
    if want_rank {
        let mut ranks = Vec::new();
        for k in 1..=n {
            let b = arnold::os_basis_with_cap(n, k, a.cap).map_err(|e| e.to_string())?;
            ranks.push((k, b.len()));
        }
        out.push_str(&format!("ranks of the graded pieces (n = {n}):\n"));
        for (k, r) in &ranks {
            out.push_str(&format!("  k = {k}: rank {r}\n"));
        }
        json_obj.insert(
            "ranks".into(),
            serde_json::Value::Array(
                ranks
                    .iter()
                    .map(|(k, r)| json!({"k": k, "rank": r}))
                    .collect(),
            ),
        );
    }
    if a.characters {
        out.push_str(&format!("characters per cycle type (n = {n}):\n"));
        let mut rows = Vec::new();
        for k in 1..=n {
            let chi = arnold::character_of_with_cap(n, k, a.cap).map_err(|e| e.to_string())?;
            out.push_str(&format!("  k = {k}:\n"));
            for (t, v) in chi.values() {
                out.push_str(&format!("    {t}: {}\n", equichar::ring::rat_to_string(v)));
                rows.push(json!({
                    "k": k,
                    "cycle_type": render::partition_value(t),
                    "trace": render::rat_value(v),
                }));
            }
        }
        json_obj.insert("characters".into(), serde_json::Value::Array(rows));
    }
    if a.acyclic {
        if n < 2 {
            return Err(usage_error("the acyclicity report needs n >= 2"));
        }
        let rep = arnold::check_acyclic_with_cap(n, a.cap).map_err(|e| e.to_string())?;
        out.push_str(&format!(
            "acyclicity (n = {n}): dims {:?}, ranks {:?}, homology {:?}, homotopy {}\n",
            rep.dims, rep.ranks, rep.homology, rep.homotopy_identity
        ));
        json_obj.insert(
            "acyclic".into(),
            json!({
                "dims": rep.dims,
                "ranks": rep.ranks,
                "homology": rep.homology,
                "homotopy_identity": rep.homotopy_identity,
                "exact": rep.is_exact(),
            }),
        );
    }
    if a.components {
        out.push_str(&format!("components by induced partition (n = {n}):\n"));
        let mut rows = Vec::new();
        for k in 1..=n {
            for comp in
                arnold::component_decompose_with_cap(n, k, a.cap).map_err(|e| e.to_string())?
            {
                out.push_str(&format!(
                    "  {}: rank {}\n",
                    comp.partition,
                    comp.basis.len()
                ));
                rows.push(json!({
                    "k": k,
                    "partition": comp.partition.to_string(),
                    "rank": comp.basis.len(),
                    "monomials": comp
                        .basis
                        .iter()
                        .map(|m| {
                            serde_json::Value::Array(
                                m.edges().iter().map(|&(i, j)| json!([i, j])).collect(),
                            )
                        })
                        .collect::<Vec<_>>(),
                }));
            }
        }
        json_obj.insert("components".into(), serde_json::Value::Array(rows));
    }
    match a.format.into() {
        Format::Text => Ok(out),
        Format::Json => Ok(format!("{:#}\n", serde_json::Value::Object(json_obj))),
        Format::Csv => Err(usage_error("os has no CSV form")),
    }
}

fn config_command(a: &ConfigArgs) -> Result<String, String> {
    if a.max_n == 0 || a.max_n > moduli::DEFAULT_BOUND {
        return Err(usage_error("config-serre supports degrees 1..=12"));
    }
    match a.ring {
        RingArg::Unit => {
            let input = SerreInput::constant(rat_int(a.value), a.max_n);
            let series = config_serre(&input, a.max_n).map_err(|e| e.to_string())?;
            let mut out = String::new();
            let mut rows = Vec::new();
            for n in 1..=a.max_n {
                out.push_str(&format!("n = {n}\n"));
                match a.basis {
                    BasisArg::Schur => {
                        for (lambda, c) in series.schur_coefficients(n) {
                            out.push_str(&format!(
                                "  {}: {}\n",
                                render::schur_label(&lambda),
                                equichar::ring::rat_to_string(&c)
                            ));
                            rows.push(json!({
                                "n": n,
                                "partition": render::partition_value(&lambda),
                                "coeff": render::rat_value(&c),
                            }));
                        }
                    }
                    BasisArg::Powersum => {
                        for lambda in partitions_of(n) {
                            let c = series.coefficient(&lambda);
                            if num_traits::Zero::is_zero(&c) {
                                continue;
                            }
                            out.push_str(&format!(
                                "  p{lambda}: {}\n",
                                equichar::ring::rat_to_string(&c)
                            ));
                            rows.push(json!({
                                "n": n,
                                "partition": render::partition_value(&lambda),
                                "coeff": render::rat_value(&c),
                            }));
                        }
                    }
                }
            }
            finish_series(a.format.into(), out, rows)
        }
        RingArg::Gl2 => match a.basis {
            BasisArg::Schur => {
                let rows_data = moduli::level_n_series(a.max_n).map_err(|e| e.to_string())?;
                let mut out = String::new();
                let mut rows = Vec::new();
                for row in &rows_data {
                    out.push_str(&render::level_row_text(row));
                    rows.push(render::level_row_value(row));
                }
                finish_series(a.format.into(), out, rows)
            }
            BasisArg::Powersum => {
                let series = moduli::torsor_series_gl2(a.max_n).map_err(|e| e.to_string())?;
                let mut out = String::new();
                let mut rows = Vec::new();
                for (lambda, c) in series.terms() {
                    out.push_str(&format!("p{lambda}: {c}\n"));
                    rows.push(json!({
                        "partition": render::partition_value(lambda),
                        "coeff": render::gl2_value(c),
                    }));
                }
                finish_series(a.format.into(), out, rows)
            }
        },
        RingArg::Free => {
            if a.max_n > 6 {
                return Err(usage_error("the free ring is capped at degree 6"));
            }
            let phis = phi_polynomials(a.max_n).map_err(|e| e.to_string())?;
            let mut out = String::new();
            let mut rows = Vec::new();
            for (lambda, poly) in &phis {
                out.push_str(&render::phi_text(lambda, poly));
                out.push('\n');
                rows.push(render::phi_value(lambda, poly));
            }
            finish_series(a.format.into(), out, rows)
        }
    }
}

fn finish_series(
    format: Format,
    text: String,
    rows: Vec<serde_json::Value>,
) -> Result<String, String> {
    match format {
        Format::Text => Ok(text),
        Format::Json => Ok(format!("{:#}\n", serde_json::Value::Array(rows))),
        Format::Csv => Err(usage_error("this subcommand has no CSV form")),
    }
}

fn run_verify(a: &VerifyArgs) -> ExitCode {
    if a.max_n < 5 || a.max_n > moduli::DEFAULT_BOUND {
        eprintln!("usage error: verify bound must be in 5..=12");
        return ExitCode::from(2);
    }
    let mut checks = Vec::new();
    match a.suite {
        SuiteArg::Don => checks.extend(verify::suite_don(a.max_n)),
        SuiteArg::Tables => checks.extend(verify::suite_tables()),
        SuiteArg::ClosedForm => checks.extend(verify::suite_closed_form(a.max_n)),
        SuiteArg::Golden => checks.extend(verify::suite_golden()),
        SuiteArg::All => {
            checks.extend(verify::suite_tables());
            checks.extend(verify::suite_don(a.max_n));
            checks.extend(verify::suite_closed_form(a.max_n));
            checks.extend(verify::suite_golden());
        }
    }
    let mut failures = 0usize;
    for c in &checks {
        if c.ok {
            println!("ok   - {}", c.name);
        } else {
            failures += 1;
            println!("FAIL - {}: {}", c.name, c.detail);
        }
    }
    println!("{} checks, {} failed", checks.len(), failures);
    if failures > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let started = std::time::Instant::now();
    let code = match &cli.command {
        Command::Verify(a) => run_verify(a),
        other => match dispatch(other) {
            Ok(text) => {
                if let Some(path) = &cli.output {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error writing {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                } else {
                    let mut stdout = std::io::stdout().lock();
                    if stdout.write_all(text.as_bytes()).is_err() {
                        return ExitCode::from(1);
                    }
                }
                ExitCode::SUCCESS
            }
            Err(msg) if msg.starts_with("usage error") => {
                eprintln!("{msg}");
                ExitCode::from(2)
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        },
    };
    if cli.verbose > 0 {
        eprintln!("elapsed: {:?}", started.elapsed());
    }
    code
}
