//! Command-line front end for `monopole-core`.
//!
//! [`run_command`] does all the work and returns the exit code with the text
//! for standard output and standard error, so the binary is a thin wrapper.

pub mod parse;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use monopole_core::gauge::{quiver_to_theory, toric_to_theory, Theory};
use monopole_core::lie::{weyl_molien_degrees, CartanType, RootSystem, DEFAULT_MOLIEN_CAP};
use monopole_core::monopole::{classify_with, hilbert_series_with, MonopoleOptions, DEFAULT_SCAN_RADIUS};
use monopole_core::slices::slice_report;
use monopole_core::toric::mirror_check;
use monopole_core::Error as CoreError;

pub use parse::{parse_input, render, Input, ParseError, QuiverFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DIVERGENT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_UNCERTIFIED: i32 = 4;

const DEFAULT_SLICE_DEGREE: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "monopole",
    version,
    about = "Coulomb branch Hilbert series via the monopole formula"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monopole-formula Hilbert series up to t^D.
    Hilbert {
        #[arg(long)]
        theory: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Accept results whose enumeration radius comes from a finite scan.
        #[arg(long)]
        allow_uncertified: bool,
        #[arg(long, default_value_t = DEFAULT_SCAN_RADIUS)]
        scan_radius: i64,
    },
    /// Good / Ugly / Bad classification.
    Classify {
        #[arg(long)]
        theory: PathBuf,
        #[arg(long)]
        allow_uncertified: bool,
        #[arg(long, default_value_t = DEFAULT_SCAN_RADIUS)]
        scan_radius: i64,
    },
    /// Compare the Coulomb series of a toric datum with the Higgs series of its Gale dual.
    MirrorCheck {
        #[arg(long)]
        charges: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Slice data of a framed ADE quiver and its monopole series.
    Slice {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SLICE_DEGREE)]
        degree: usize,
    },
    /// Invariant degrees and exponents of a Weyl group.
    LieDegrees {
        #[arg(long)]
        series: String,
        #[arg(long)]
        rank: usize,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {stderr}\n"),
        }
    }
}

fn core_failure(e: CoreError) -> Outcome {
    let code = match e {
        CoreError::Divergent { .. } => EXIT_DIVERGENT,
        CoreError::Validation(_) | CoreError::Capacity { .. } => EXIT_INPUT,
    };
    Outcome::fail(code, e)
}

fn read_input(path: &Path) -> Result<Input, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_INPUT, format_args!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| Outcome::fail(EXIT_INPUT, format_args!("{}:{e}", path.display())))
}

/// Any input file read as a gauge theory.
fn read_theory(path: &Path) -> Result<Theory, Outcome> {
    let theory = match read_input(path)? {
        Input::Theory(t) => t,
        Input::Quiver(q) => quiver_to_theory(&q.quiver).map_err(core_failure)?,
        Input::Charges(c) => toric_to_theory(&c).map_err(core_failure)?,
    };
    theory.validate().map_err(|v| {
        Outcome::fail(
            EXIT_INPUT,
            v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        )
    })?;
    Ok(theory)
}

fn uncertified() -> Outcome {
    Outcome::fail(
        EXIT_UNCERTIFIED,
        format_args!(
            "gauge rank exceeds {} so the enumeration radius is not certified; rerun with --allow-uncertified",
            monopole_core::monopole::EXACT_RANK_LIMIT
        ),
    )
}

fn hilbert(path: &Path, degree: usize, format: Format, allow: bool, scan_radius: i64) -> Result<Outcome, Outcome> {
    let theory = read_theory(path)?;
    let opts = MonopoleOptions {
        scan_radius,
        ..MonopoleOptions::default()
    };
    let h = hilbert_series_with(&theory, degree, &opts).map_err(core_failure)?;
    if !h.certified && !allow {
        return Err(uncertified());
    }
    Ok(Outcome::ok(match format {
        Format::Text => format!("{}\n", h.series),
        Format::Csv => h.series.to_csv(),
    }))
}

fn classify(path: &Path, allow: bool, scan_radius: i64) -> Result<Outcome, Outcome> {
    let theory = read_theory(path)?;
    let opts = MonopoleOptions {
        scan_radius,
        ..MonopoleOptions::default()
    };
    let c = classify_with(&theory, &opts).map_err(core_failure)?;
    if !c.certified && !allow {
        return Err(uncertified());
    }
    let mut out = format!("{} (witness θ={})\n", c.kind, c.witness);
    writeln!(out, "min exponent {}, min slope {}", c.min_exponent, c.min_slope).unwrap();
    if !c.certified {
        out.push_str("uncertified\n");
    }
    let code = if c.kind == monopole_core::TheoryKind::Bad {
        EXIT_DIVERGENT
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

fn mirror(path: &Path, degree: usize) -> Result<Outcome, Outcome> {
    let Input::Charges(c) = read_input(path)? else {
        return Err(Outcome::fail(
            EXIT_INPUT,
            format_args!("{}: expected a charges file", path.display()),
        ));
    };
    let r = mirror_check(&c, degree).map_err(core_failure)?;
    match r.first_mismatch_degree {
        None => Ok(Outcome::ok(format!("EQUAL up to t^{degree}\n"))),
        Some(k) => Ok(Outcome {
            code: EXIT_MISMATCH,
            stdout: format!("MISMATCH at t^{k}\ncoulomb {}\nhiggs   {}\n", r.lhs, r.rhs),
            stderr: String::new(),
        }),
    }
}

fn coords(xs: &[i64]) -> String {
    monopole_core::error::Coords(xs).to_string()
}

fn slice(path: &Path, degree: usize) -> Result<Outcome, Outcome> {
    let Input::Quiver(q) = read_input(path)? else {
        return Err(Outcome::fail(
            EXIT_INPUT,
            format_args!("{}: expected a quiver file", path.display()),
        ));
    };
    let rs = RootSystem::new(q.series, q.rank).map_err(core_failure)?;
    let r = slice_report(&q.quiver, &rs, degree).map_err(core_failure)?;
    let d = &r.data;
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(out, "type {}{}", q.series, q.rank).unwrap();
    writeln!(out, "lambda {} (fundamental weights)", coords(&d.lambda.coords)).unwrap();
    writeln!(out, "mu {} (fundamental weights)", coords(&d.mu.coords)).unwrap();
    writeln!(out, "alpha {} (simple roots)", coords(&d.alpha.coords)).unwrap();
    writeln!(out, "nonempty {}", yes(d.nonempty)).unwrap();
    writeln!(out, "dim {}", d.dim).unwrap();
    writeln!(
        out,
        "fixed point {} (multiplicity {})",
        yes(d.has_fixed_point),
        d.fixed_point_multiplicity
    )
    .unwrap();
    let code = match &r.monopole {
        Ok(h) => {
            writeln!(out, "hilbert {}", h.series).unwrap();
            match r.pole_order_estimate {
                Some(p) => writeln!(out, "pole order estimate {p}").unwrap(),
                None => writeln!(out, "pole order estimate unavailable").unwrap(),
            }
            EXIT_OK
        }
        Err(e) => {
            writeln!(out, "hilbert {e}").unwrap();
            EXIT_DIVERGENT
        }
    };
    Ok(Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

fn lie_degrees(series: &str, rank: usize) -> Result<Outcome, Outcome> {
    let series: CartanType = series.parse().map_err(core_failure)?;
    let rs = RootSystem::new(series, rank).map_err(core_failure)?;
    let d = weyl_molien_degrees(&rs, DEFAULT_MOLIEN_CAP).map_err(core_failure)?;
    let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    Ok(Outcome::ok(format!(
        "degrees {}\nexponents {}\norder {}\n",
        join(&d.degrees),
        join(&d.exponents),
        d.group_order
    )))
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Hilbert {
            theory,
            degree,
            format,
            allow_uncertified,
            scan_radius,
        } => hilbert(&theory, degree, format, allow_uncertified, scan_radius),
        Command::Classify {
            theory,
            allow_uncertified,
            scan_radius,
        } => classify(&theory, allow_uncertified, scan_radius),
        Command::MirrorCheck { charges, degree } => mirror(&charges, degree),
        Command::Slice { quiver, degree } => slice(&quiver, degree),
        Command::LieDegrees { series, rank } => lie_degrees(&series, rank),
    };
    result.unwrap_or_else(|e| e)
}
