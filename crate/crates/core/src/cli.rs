// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. [`run`] is the whole program; `main` only wires
//! it to the process streams.
//!
//! Exit codes: 0 success, 1 a verification did not hold, 2 usage, parse or
//! arithmetic errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::class_group::{class_group, compose, FormClass};
use crate::error::{Error, Result};
use crate::form::{BQForm, Discriminant};
use crate::genus::{genus_classes, same_genus, GenusReport};
use crate::grid::Grid;
use crate::zariski::{check_row, conjugation_certificate, find_candidate_pairs, row, table1, table1_csv, RowReport};
use crate::Int;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "quadgenus", version, about = "Binary quadratic forms, class groups and genera")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced representative and the witness g with F·g = R
    Reduce { form: BQForm },
    /// Discriminant b² − 4ac
    Disc { form: BQForm },
    /// Equivalence test, with a witness when equivalent
    Equiv(EquivArgs),
    /// Class group of primitive forms of discriminant d
    #[command(allow_negative_numbers = true)]
    Classgroup { d: Int },
    /// Product of two classes of discriminant d
    #[command(allow_negative_numbers = true)]
    Compose { d: Int, f1: BQForm, f2: BQForm },
    /// Whether two forms lie in one genus
    Genus { f1: BQForm, f2: BQForm },
    /// All SL₂-classes in the genus of F
    GenusList { form: BQForm },
    /// Genus size g(T), counting classes up to GL₂ and SL₂
    Gcount { form: BQForm },
    /// Grids in an imaginary quadratic field
    #[command(subcommand)]
    Grid(GridCommand),
    /// Certificate carrying the oriented lattice F1 to F2 by squaring an ideal
    Conjugate { f1: BQForm, f2: BQForm },
    /// The table of conjugate sextic lattices
    #[command(subcommand)]
    Table(TableCommand),
    /// Discriminants in [d_min, d_max] whose genera hold two or more lattices
    #[command(allow_negative_numbers = true)]
    Search { d_min: Int, d_max: Int },
}

#[derive(Debug, Args)]
struct EquivArgs {
    /// SL₂-equivalence only
    #[arg(long, conflicts_with = "full")]
    proper: bool,
    /// GL₂-equivalence (default)
    #[arg(long)]
    full: bool,
    f1: BQForm,
    f2: BQForm,
}

#[derive(Debug, Subcommand)]
enum GridCommand {
    /// The grid L_F with norm form F
    FromForm { form: BQForm },
    /// Product L_F1 · L_F2
    Product { f1: BQForm, f2: BQForm },
}

#[derive(Debug, Subcommand)]
enum TableCommand {
    /// Check every row (or one row)
    Verify {
        #[arg(long)]
        row: Option<usize>,
    },
    /// Export the table
    Export {
        #[arg(long, required = true)]
        csv: bool,
    },
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut buf = Vec::new();
    match execute(&cli, &mut buf) {
        Ok(ok) => {
            let _ = out.write_all(&buf);
            if ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = out.write_all(&buf);
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit<T: Serialize>(out: &mut Vec<u8>, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::Parse { input: String::new(), reason: e.to_string() })?;
    writeln!(out, "{text}").expect("writing to a buffer");
    Ok(())
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => { writeln!($out, $($arg)*).expect("writing to a buffer") };
}

fn list(forms: impl IntoIterator<Item = impl std::fmt::Display>) -> String {
    forms.into_iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
}

fn grid_json(g: &Grid) -> Result<serde_json::Value> {
    Ok(json!({
        "grid": g,
        "conductor": g.conductor()?,
        "norm_form": g.norm_form()?,
        "class": g.class()?,
    }))
}

fn say_grid(out: &mut Vec<u8>, g: &Grid) -> Result<()> {
    let [r1, r2] = g.basis();
    say!(out, "D_K = {}, den = {}, basis = [{},{}], [{},{}]", g.field_discriminant(), g.den(), r1[0], r1[1], r2[0], r2[1]);
    say!(out, "conductor: {}", g.conductor()?);
    say!(out, "norm form: {}", g.norm_form()?);
    say!(out, "class: {}", g.class()?);
    Ok(())
}

fn say_row(out: &mut Vec<u8>, r: &RowReport) {
    say!(
        out,
        "row {:>2} {:<16} {} {} d={} m={} g={} {}",
        r.index,
        r.dynkin,
        r.t1,
        r.t2,
        r.d,
        r.m,
        r.g_gl2,
        if r.passed { "ok" } else { "FAILED" }
    );
}

/// Returns `Ok(false)` when a verification ran but did not hold.
fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<bool> {
    let json = cli.json;
    match &cli.command {
        Command::Reduce { form } => {
            let (r, g) = form.reduce()?;
            if json {
                emit(out, &json!({ "form": form, "reduced": r, "witness": g }))?;
            } else {
                say!(out, "{r}");
                say!(out, "witness: {g}");
            }
        }
        Command::Disc { form } => {
            let d = form.discriminant()?;
            if json {
                emit(out, &json!({ "form": form, "d": d }))?;
            } else {
                say!(out, "{d}");
            }
        }
        Command::Equiv(a) => {
            let witness = if a.proper { a.f1.equivalent_properly(&a.f2)? } else { a.f1.equivalent(&a.f2)? };
            let kind = if a.proper { "proper" } else { "full" };
            if json {
                emit(out, &json!({ "kind": kind, "equivalent": witness.is_some(), "witness": witness }))?;
            } else {
                say!(out, "equivalent: {}", witness.is_some());
                if let Some(g) = witness {
                    say!(out, "witness: {g}");
                }
            }
        }
        Command::Classgroup { d } => {
            let group = class_group(Discriminant::new(*d)?);
            if json {
                emit(out, &group)?;
            } else {
                let structure = group.structure()?;
                let shape = if structure.is_empty() {
                    "trivial".to_string()
                } else {
                    structure.iter().map(|n| format!("Z/{n}")).collect::<Vec<_>>().join(" x ")
                };
                say!(out, "h = {}", group.order());
                say!(out, "structure: {shape}");
                say!(out, "classes: {}", list(group.classes()));
            }
        }
        Command::Compose { d, f1, f2 } => {
            for f in [f1, f2] {
                let df = f.discriminant()?;
                if df != *d {
                    return Err(Error::DiscriminantMismatch(*d, df));
                }
            }
            let x = compose(&FormClass::new(f1)?, &FormClass::new(f2)?)?;
            if json {
                emit(out, &json!({ "d": d, "product": x }))?;
            } else {
                say!(out, "{x}");
            }
        }
        Command::Genus { f1, f2 } => {
            let sg = same_genus(f1, f2)?;
            if json {
                emit(out, &sg)?;
            } else {
                say!(out, "same genus: {}", sg.same_genus);
                if let Some(reason) = &sg.reason {
                    say!(out, "reason: {reason}");
                }
                if let Some(s) = &sg.square_root {
                    say!(out, "square root: {s}");
                }
            }
        }
        Command::GenusList { form } => {
            let report = GenusReport::new(&genus_classes(form)?, None);
            if json {
                emit(out, &report)?;
            } else {
                for f in &report.genus {
                    say!(out, "{f}");
                }
                say!(out, "g_sl2 = {}, g_gl2 = {}", report.g_sl2, report.g_gl2);
            }
        }
        Command::Gcount { form } => {
            let (g_sl2, g_gl2) = genus_classes(form)?.size();
            if json {
                emit(out, &json!({ "form": form, "g_sl2": g_sl2, "g_gl2": g_gl2 }))?;
            } else {
                say!(out, "g(T) = {g_gl2}");
                say!(out, "oriented classes: {g_sl2}");
            }
        }
        Command::Grid(GridCommand::FromForm { form }) => {
            let g = Grid::from_form(form)?;
            if json {
                emit(out, &grid_json(&g)?)?;
            } else {
                say_grid(out, &g)?;
            }
        }
        Command::Grid(GridCommand::Product { f1, f2 }) => {
            let (g1, g2) = (Grid::from_form(f1)?, Grid::from_form(f2)?);
            if g1.field_discriminant() != g2.field_discriminant() {
                return Err(Error::FieldMismatch(g1.field_discriminant(), g2.field_discriminant()));
            }
            let g = g1.product(&g2)?;
            if json {
                emit(out, &grid_json(&g)?)?;
            } else {
                say_grid(out, &g)?;
            }
        }
        Command::Conjugate { f1, f2 } => {
            let c = conjugation_certificate(f1, f2)?;
            if json {
                emit(out, &c)?;
            } else {
                say!(out, "d = {}, m = {}, d0 = {}, D_K = {}, f = {}", c.d, c.m, c.d0, c.field_disc, c.f);
                say!(out, "[L0] = {}, [L0'] = {}", c.class_l0, c.class_l0_prime);
                say!(out, "square root s = {}", c.square_root);
                for (name, g) in [("I_f", &c.i_f), ("J", &c.j), ("I_mf", &c.i_mf)] {
                    let [r1, r2] = g.basis();
                    say!(out, "{name}: den {}, basis [{},{}], [{},{}]", g.den(), r1[0], r1[1], r2[0], r2[1]);
                }
                let flags = c.flags;
                for (name, ok) in [
                    ("[I_f]^2 [L0] = [L0']", flags.square_relation),
                    ("I_f prime to mf", flags.i_f_prime_to_mf),
                    ("I_mf proper and prime to mf", flags.i_mf_proper_prime_to_mf),
                    ("I_mf O_f = I_f", flags.i_mf_extends_to_i_f),
                    ("I_mf I_f L0 ~ L0'", flags.replay_reaches_target),
                ] {
                    say!(out, "{name}: {ok}");
                }
                say!(out, "certificate: {}", if c.verified() { "verified" } else { "FAILED" });
            }
            return Ok(c.verified());
        }
        Command::Table(TableCommand::Verify { row: which }) => {
            let rows = match which {
                Some(k) => vec![row(*k)?],
                None => table1(),
            };
            let reports = rows.iter().map(check_row).collect::<Result<Vec<_>>>()?;
            let passed = reports.iter().filter(|r| r.passed).count();
            if json {
                emit(out, &json!({ "rows": reports, "passed": passed, "total": reports.len() }))?;
            } else {
                for r in &reports {
                    say_row(out, r);
                }
                say!(out, "{passed}/{} rows verified", reports.len());
            }
            return Ok(passed == reports.len());
        }
        Command::Table(TableCommand::Export { .. }) => {
            write!(out, "{}", table1_csv()).expect("writing to a buffer");
        }
        Command::Search { d_min, d_max } => {
            let found = find_candidate_pairs(*d_min, *d_max)?;
            if json {
                emit(out, &found)?;
            } else {
                for c in &found {
                    for g in &c.genera {
                        say!(out, "d = {}: g_gl2 = {}, g_sl2 = {}: {}", c.d, g.g_gl2, g.g_sl2, list(&g.classes));
                    }
                }
                say!(out, "{} discriminants", found.len());
            }
        }
    }
    Ok(true)
}
