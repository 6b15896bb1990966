//! Command-line front end and the sweep harness.
//!
//! Exit codes: 0 success, 1 verification or consistency failure, 2 invalid
//! input.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circulant::make_circulant;
use crate::error::{Error, Result};
use crate::intmat::{collapse_diagram_holds, CollapseSign, LabeledMatrix};
use crate::periodic::{
    certify, check_certificate, find_periodic_coloring, find_uncolorable_segment, verify_periodic,
    ChiCertificate, LowerBound, PeriodicColoring,
};
use crate::zhu::{chi_formula, heuberger_matrix, orient_for_matrix, DistanceTriple};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "zhu-chromatic", version)]
#[command(
    about = "Chromatic numbers and periodic colorings of integer distance graphs Cay(Z, {±a, ±b, ±c})"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic number and the case that decides it
    Chi {
        #[command(flatten)]
        triple: TripleArgs,
        /// Print the full certificate as JSON
        #[arg(long)]
        json: bool,
    },
    /// Periodic coloring with period at most b+c
    Color {
        #[command(flatten)]
        triple: TripleArgs,
        /// Number of colors (defaults to the chromatic number)
        #[arg(long = "k", value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
    },
    /// Check a periodic color word
    Verify {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        period: u64,
        /// Comma-separated colors, one per residue
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        colors: Vec<usize>,
    },
    /// Relation matrix, reduction step and row collapses
    Matrix {
        #[command(flatten)]
        triple: TripleArgs,
        /// Annotate each stage with its annihilation check and JSON form
        #[arg(long)]
        steps: bool,
    },
    /// Cross-check every triple up to a bound
    Sweep {
        #[arg(long = "max", default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct TripleArgs {
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub a: u64,
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub b: u64,
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    pub c: u64,
}

impl TripleArgs {
    fn normalize(&self) -> Result<DistanceTriple> {
        DistanceTriple::new(self.a, self.b, self.c)
    }

    fn note(&self, t: &DistanceTriple, out: &mut dyn Write) -> io::Result<()> {
        if t.scale() > 1 || [self.a, self.b, self.c] != t.distances() {
            writeln!(
                out,
                "note: ({}, {}, {}) normalized to {t} (scale {})",
                self.a,
                self.b,
                self.c,
                t.scale()
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One line of the sweep table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub chi_formula: u32,
    pub chi_certified: u32,
    pub period: u64,
    /// `q * k^q` with `q = c` and `k = chi_certified`.
    #[serde(with = "decimal")]
    pub ees_bound: BigUint,
    pub agree: bool,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| D::Error::custom("not a decimal integer"))
    }
}

pub const CSV_HEADER: &str = "a,b,c,chi_formula,chi_certified,period,ees_bound,agree";

pub fn ees_bound(q: u64, k: u32) -> BigUint {
    BigUint::from(q) * BigUint::from(k).pow(q as u32)
}

/// Chromatic number found without consulting the closed form: the least
/// `k` with a periodic `k`-coloring of period `<= b + c`, confirmed by a
/// re-checked lower-bound witness.
pub fn certify_by_search(t: &DistanceTriple) -> Result<ChiCertificate> {
    let (upper, chi) = (2..=5usize)
        .find_map(|k| find_periodic_coloring(t, k).map(|pc| (pc, k as u32)))
        .ok_or_else(|| {
            Error::Inconsistency(format!("{t}: no periodic coloring with at most 5 colors"))
        })?;
    let lower = match chi {
        2 => LowerBound::Trivial,
        3 => LowerBound::Parity,
        _ => find_uncolorable_segment(t, chi as usize - 1)
            .map(|length| LowerBound::Segment { length })
            .ok_or_else(|| {
                Error::Inconsistency(format!("{t}: no uncolorable segment for chi {chi}"))
            })?,
    };
    let cert = ChiCertificate {
        triple: *t,
        chi,
        branch: chi_formula(t).1,
        upper,
        lower,
    };
    check_certificate(&cert)?;
    Ok(cert)
}

pub fn sweep_row(t: &DistanceTriple) -> Result<SweepRow> {
    let (formula, _) = chi_formula(t);
    let cert = certify_by_search(t)?;
    Ok(SweepRow {
        a: t.a(),
        b: t.b(),
        c: t.c(),
        chi_formula: formula,
        chi_certified: cert.chi,
        period: cert.upper.period,
        ees_bound: ees_bound(t.c(), cert.chi),
        agree: formula == cert.chi,
    })
}

/// All rows for `1 <= a <= b <= c <= max`, sorted by `(a, b, c)`.
pub fn sweep_rows(max: u64) -> Result<Vec<SweepRow>> {
    let triples: Vec<_> = DistanceTriple::enumerate(max).collect();
    let mut rows = triples
        .par_iter()
        .map(sweep_row)
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.a, r.b, r.c));
    Ok(rows)
}

pub fn write_csv(rows: &[SweepRow], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(())
}

pub fn write_json(rows: &[SweepRow], mut out: impl Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, rows).map_err(|e| Error::InvalidInput(e.to_string()))?;
    writeln!(out).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Chi { triple, json } => cmd_chi(triple, json, out, err),
        Command::Color { triple, k } => cmd_color(triple, k, out, err),
        Command::Verify {
            triple,
            period,
            colors,
        } => cmd_verify(triple, period, colors, out, err),
        Command::Matrix { triple, steps } => cmd_matrix(triple, steps, out, err),
        Command::Sweep {
            max,
            out: path,
            format,
        } => cmd_sweep(max, path, format, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_FAILURE
    })
}

fn invalid(err: &mut dyn Write, e: impl std::fmt::Display) -> io::Result<u8> {
    writeln!(err, "error: {e}")?;
    Ok(EXIT_INVALID)
}

fn cmd_chi(
    args: TripleArgs,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let t = match args.normalize() {
        Ok(t) => t,
        Err(e) => return invalid(err, e),
    };
    args.note(&t, out)?;
    if json {
        match certify(&t) {
            Ok(cert) => writeln!(out, "{}", serde_json::to_string(&cert)?)?,
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_FAILURE);
            }
        }
    } else {
        let (chi, branch) = chi_formula(&t);
        writeln!(out, "{chi} ({})", branch.describe())?;
    }
    Ok(EXIT_OK)
}

fn cmd_color(
    args: TripleArgs,
    k: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let t = match args.normalize() {
        Ok(t) => t,
        Err(e) => return invalid(err, e),
    };
    args.note(&t, out)?;
    let k = k.map_or(chi_formula(&t).0 as usize, |k| k as usize);
    match find_periodic_coloring(&t, k) {
        Some(pc) => {
            if !verify_periodic(&t, &pc) {
                writeln!(err, "error: search returned an improper coloring")?;
                return Ok(EXIT_FAILURE);
            }
            writeln!(out, "period {}", pc.period)?;
            writeln!(out, "{}", join(&pc.colors, " "))?;
            Ok(EXIT_OK)
        }
        None => {
            writeln!(
                err,
                "no periodic {k}-coloring of {t} with period <= {}",
                t.period_bound()
            )?;
            Ok(EXIT_FAILURE)
        }
    }
}

fn cmd_verify(
    args: TripleArgs,
    period: u64,
    colors: Vec<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let t = match args.normalize() {
        Ok(t) => t,
        Err(e) => return invalid(err, e),
    };
    let pc = match PeriodicColoring::from_word(period, colors) {
        Ok(pc) => pc,
        Err(e) => return invalid(err, e),
    };
    args.note(&t, out)?;
    if verify_periodic(&t, &pc) {
        writeln!(
            out,
            "proper periodic {}-coloring with period {period}",
            pc.k
        )?;
        return Ok(EXIT_OK);
    }
    let p = period as usize;
    let (i, s) = (0..p)
        .flat_map(|i| t.distances().map(move |s| (i, s as usize)))
        .find(|&(i, s)| pc.colors[i] == pc.colors[(i + s) % p])
        .expect("an improper coloring has a monochromatic edge");
    writeln!(
        out,
        "improper: {i} and {} differ by {s} but both have color {}",
        i + s,
        pc.colors[i]
    )?;
    Ok(EXIT_FAILURE)
}

fn show_stage(name: &str, m: &LabeledMatrix, steps: bool, out: &mut dyn Write) -> io::Result<bool> {
    writeln!(out, "{name} = {m}")?;
    let ok = m.annihilates();
    if steps {
        for (j, r) in m.annihilation_residues().iter().enumerate() {
            let mark = if *r == 0 { "= 0 ✓" } else { "≠ 0 ✗" };
            writeln!(out, "  label·col{} {mark}", j + 1)?;
        }
        writeln!(out, "  json: {}", serde_json::to_string(m)?)?;
    }
    Ok(ok)
}

fn cmd_matrix(
    args: TripleArgs,
    steps: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let t = match args.normalize() {
        Ok(t) => t,
        Err(e) => return invalid(err, e),
    };
    args.note(&t, out)?;
    let (a1, a2, a3) = orient_for_matrix(&t);
    writeln!(out, "triple {t}")?;
    writeln!(out, "oriented (a1, a2, a3) = ({a1}, {a2}, {a3})")?;
    let m = heuberger_matrix(&t);
    let mut ok = show_stage("M", &m, steps, out)?;
    writeln!(out, "column sums {:?}", m.column_sums())?;

    match m.eq2_reduce() {
        Ok(step) => {
            writeln!(out, "reduction: q = {}, r = {}", step.q, step.r)?;
            ok &= show_stage("M1", &step.reduced, steps, out)?;
        }
        Err(e) => writeln!(out, "reduction: {e}")?,
    }

    writeln!(out, "row collapses:")?;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        for sign in CollapseSign::BOTH {
            let Ok(y) = m.collapse_rows(i, j, sign) else {
                continue;
            };
            let circ = make_circulant(y.modulus() as u64, y.label())
                .expect("collapse already rejected loops");
            let name = format!(
                "rows {},{} (row{} {sign} row{})",
                i + 1,
                j + 1,
                i + 1,
                j + 1
            );
            ok &= show_stage(&name, &y, steps, out)?;
            writeln!(out, "  circulant {}", serde_json::to_string(&circ)?)?;
            if steps {
                let commutes = collapse_diagram_holds(&m, i, j, sign).unwrap_or(false);
                ok &= commutes;
                writeln!(
                    out,
                    "  diagram commutes {}",
                    if commutes { "✓" } else { "✗" }
                )?;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_sweep(
    max: u64,
    path: Option<PathBuf>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let mut file = match &path {
        Some(p) => match File::create(p) {
            Ok(f) => Some(f),
            Err(e) => return invalid(err, format!("cannot write {}: {e}", p.display())),
        },
        None => None,
    };
    let rows = match sweep_rows(max) {
        Ok(rows) => rows,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_FAILURE);
        }
    };
    let sink: &mut dyn Write = match file.as_mut() {
        Some(f) => f,
        None => out,
    };
    let written = match format {
        Format::Csv => write_csv(&rows, sink),
        Format::Json => write_json(&rows, sink),
    };
    if let Err(e) = written {
        return invalid(err, e);
    }
    let disagree = rows.iter().filter(|r| !r.agree).count();
    writeln!(err, "{} triples, {disagree} disagreements", rows.len())?;
    Ok(if disagree == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
