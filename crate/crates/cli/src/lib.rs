//! The `painleve` command: derive systems from curve families, convolve
//! them, and verify the algebraic solutions of Painleve VI.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use painleve_core::RatFunc;
use painleve_scalar::{apparent_singularities, riemann_scheme, system_to_scalar, Coordinate, ThetaChoice};
use painleve_schlesinger::{build_from_pvi, from_json, to_json, PVIData};
use painleve_vi::suite::{self, Check};
use painleve_vi::{check_relation, convolve, derive, family_system, quartic_relation, solution_row, verify_row};
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "painleve", version, about = "Algebraic solutions of Painleve VI from Picard-Fuchs systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the full pipeline for a curve family and report (theta, t, lambda, mu, nu, L).
    Derive {
        #[arg(long)]
        family: u8,
        /// Exponent parameter `a`.
        #[arg(long, default_value = "a", allow_hyphen_values = true)]
        a: String,
        /// Exponent parameter `c` (family 2 only).
        #[arg(long, default_value = "c", allow_hyphen_values = true)]
        c: String,
        /// Write the Schlesinger system here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reduce a family's system to a scalar equation and print its Riemann scheme.
    Scalar {
        #[arg(long)]
        family: u8,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        coordinate: u8,
    },
    /// Write the Schlesinger system of a registry row.
    Schlesinger {
        #[arg(long)]
        row: u8,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Read a system file and print its Painleve VI data.
    PviData {
        #[arg(long)]
        input: PathBuf,
    },
    /// Middle convolution of a system file.
    Mc {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify one registry row, or every row together with the convolution checks.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        row: Option<u8>,
        #[arg(long)]
        all: bool,
    },
    /// Check that a relation in `lambda` and `t` holds along a curve.
    CheckIdentity {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Defaults to the quartic satisfied by row 5.
        #[arg(long, allow_hyphen_values = true)]
        relation: Option<String>,
    },
}

enum Failure {
    Input(String),
    Failed(String),
}

type Outcome = std::result::Result<i32, Failure>;

fn input<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn failed<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Failed(e.to_string())
}

fn expr(flag: &str, text: &str) -> std::result::Result<RatFunc, Failure> {
    RatFunc::parse(text.trim()).map_err(|e| Failure::Input(format!("--{flag} `{text}`: {e}")))
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(input(&path.display().to_string()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(input(&p.display().to_string())),
        None => out.write_all(text.as_bytes()).map_err(failed),
    }
}

/// Runs one invocation and returns the exit code: 0 on success, 1 when a
/// verification fails, 2 on bad input.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "failed: {msg}");
            EXIT_FAILED
        }
    }
}

fn family_id(family: u8) -> std::result::Result<u8, Failure> {
    if (1..=5).contains(&family) {
        Ok(family)
    } else {
        Err(Failure::Input(format!("no curve family {family}; expected 1 to 5")))
    }
}

fn row_data(id: u8) -> std::result::Result<painleve_vi::Table1Row, Failure> {
    solution_row(id).map_err(|e| Failure::Input(e.to_string()))
}

fn print_data(out: &mut dyn Write, d: &PVIData) -> std::io::Result<()> {
    let theta: Vec<String> = d.theta.iter().map(|x| x.to_string()).collect();
    writeln!(out, "theta: ({})", theta.join(", "))?;
    writeln!(out, "t: {}", d.t)?;
    writeln!(out, "lambda: {}", d.lambda)?;
    writeln!(out, "mu: {}", d.mu)?;
    writeln!(out, "nu: {}", d.nu)?;
    writeln!(out, "alpha: {}", d.alpha)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Derive { family, a, c, output } => {
            let family = family_id(family)?;
            let (a, c) = (expr("a", &a)?, expr("c", &c)?);
            let d = derive(family, &a, &c, ThetaChoice::Canonical).map_err(failed)?;
            writeln!(out, "family {family}").map_err(failed)?;
            let p: Vec<String> = d.points.iter().map(|x| x.to_string()).collect();
            writeln!(out, "singular points: ({})", p.join(", ")).map_err(failed)?;
            writeln!(out, "apparent point: {}", d.accessory.lambda).map_err(failed)?;
            writeln!(out, "L: {}", d.accessory.l).map_err(failed)?;
            print_data(out, &d.data).map_err(failed)?;
            if let Some(path) = output {
                emit(out, Some(&path), &to_json(&d.schlesinger).map_err(failed)?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Scalar { family, coordinate } => {
            let family = family_id(family)?;
            let sys = family_system(family, &RatFunc::parse("a").map_err(failed)?, &RatFunc::parse("c").map_err(failed)?)
                .map_err(failed)?;
            let coordinate = if coordinate == 1 { Coordinate::First } else { Coordinate::Second };
            let ode = system_to_scalar(&sys, coordinate).map_err(failed)?;
            writeln!(out, "p1: {}", ode.p1).map_err(failed)?;
            writeln!(out, "p2: {}", ode.p2).map_err(failed)?;
            for ap in apparent_singularities(&ode, sys.singularities()).map_err(failed)? {
                let [e0, e1] = ap.exponents();
                writeln!(out, "apparent: {} exponents ({e0}, {e1})", ap.location).map_err(failed)?;
            }
            let scheme = riemann_scheme(&ode).map_err(failed)?;
            for p in &scheme.points {
                let at = p.location.as_ref().map_or("infinity".to_string(), |l| l.to_string());
                writeln!(out, "exponents at {at}: ({}, {})", p.exponents[0], p.exponents[1]).map_err(failed)?;
            }
            writeln!(out, "Fuchs relation: {}", scheme.satisfies_fuchs_relation()).map_err(failed)?;
            Ok(EXIT_OK)
        }
        Command::Schlesinger { row, output } => {
            let r = row_data(row)?;
            let d = PVIData::new(r.theta, r.lambda, r.mu, r.t).map_err(failed)?;
            let s = build_from_pvi(&d).map_err(failed)?;
            emit(out, output.as_deref(), &to_json(&s).map_err(failed)?)?;
            Ok(EXIT_OK)
        }
        Command::PviData { input: path } => {
            let (_, d) = from_json(&read(&path)?).map_err(input(&path.display().to_string()))?;
            print_data(out, &d).map_err(failed)?;
            Ok(EXIT_OK)
        }
        Command::Mc { input: path, mu, output } => {
            let mu_c = expr("mu", &mu)?;
            let (s, d) = from_json(&read(&path)?).map_err(input(&path.display().to_string()))?;
            let conv = convolve(&s, &d, &mu_c).map_err(failed)?;
            emit(out, output.as_deref(), &to_json(&conv).map_err(failed)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { row: Some(id), .. } => {
            let started = Instant::now();
            let ok = verify_one(out, id)?;
            let _ = writeln!(err, "row {id}: {:.2}s", started.elapsed().as_secs_f64());
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Verify { row: None, .. } => verify_all(out, err),
        Command::CheckIdentity { lambda, t, relation } => {
            let (lambda, t) = (expr("lambda", &lambda)?, expr("t", &t)?);
            let relation = match relation {
                Some(r) => expr("relation", &r)?,
                None => quartic_relation(),
            };
            let holds = check_relation(&lambda, &t, &relation).map_err(failed)?;
            writeln!(out, "relation {relation}: {}", if holds { "holds" } else { "does not hold" }).map_err(failed)?;
            Ok(if holds { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn row_report(id: u8) -> std::result::Result<(String, bool), Failure> {
    let row = row_data(id)?;
    let v = verify_row(&row).map_err(failed)?;
    let mut text = format!("row {id}\n");
    let theta: Vec<String> = row.theta.iter().map(|x| x.to_string()).collect();
    text += &format!("theta: ({})\nlambda: {}\nmu: {}\nt: {}\n", theta.join(", "), row.lambda, row.mu, row.t);
    text += &format!("residual: {}, {}\n", v.residual.r_lambda, v.residual.r_mu);
    if let Some(signs) = v.alternate_signs {
        text += &format!("note: residual vanishes with theta signs {signs:?}\n");
    }
    if let Some(printed) = &row.printed_mu {
        text += &format!("note: printed mu {printed} replaced by the momentum above\n");
    }
    if let Some(link) = &row.convolution {
        text += &format!("convolution of row {} with mu_c = {}\n", link.source_row, link.mu_c);
    }
    if id == 5 {
        let q = check_relation(&row.lambda, &row.t, &quartic_relation()).map_err(failed)?;
        text += &format!("quartic relation: {}\n", if q { "holds" } else { "fails" });
    }
    Ok((text, v.residual.is_zero()))
}

fn verify_one(out: &mut dyn Write, id: u8) -> std::result::Result<bool, Failure> {
    let (text, ok) = row_report(id)?;
    out.write_all(text.as_bytes()).map_err(failed)?;
    Ok(ok)
}

fn format_check(c: &Check) -> String {
    let mut text = format!("{} [{}]\n", c.name, if c.passed { "PASS" } else { "FAIL" });
    for (name, ok) in &c.items {
        if !ok {
            text += &format!("  mismatch: {name}\n");
        }
    }
    for note in &c.notes {
        text += &format!("  note: {note}\n");
    }
    text
}

fn verify_all(out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let started = Instant::now();
    let rows: Vec<_> = (2..=6u8).into_par_iter().map(row_report).collect();
    let checks: Vec<Check> = suite::all_checks().into_par_iter().map(|f| f()).collect();
    let mut ok = true;
    for r in rows {
        let (text, passed) = r?;
        ok &= passed;
        writeln!(out, "{text}").map_err(failed)?;
    }
    for c in &checks {
        ok &= c.passed;
        out.write_all(format_check(c).as_bytes()).map_err(failed)?;
    }
    writeln!(out, "{}", if ok { "all checks passed" } else { "some checks failed" }).map_err(failed)?;
    let _ = writeln!(err, "total: {:.2}s", started.elapsed().as_secs_f64());
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}
