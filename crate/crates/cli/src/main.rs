//! `sphcover`: run verification suites, sweep them to CSV or JSON, and
//! measure bodies or point sets.
//!
//! Exit codes: 0 all claims passed, 1 some claim failed, 2 usage or
//! configuration error, 3 I/O error.

mod input;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sphcover::shapes::{ShapeKind, ShapeSpec, DEFAULT_SAMPLES};
use sphcover::verify::{self, Suite, SuiteConfig, VerificationReport};
use sphcover::{Error, SphericalConvexPolygon};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sphcover",
    version,
    about = "Spherical convex body verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite and print a summary line per row (or a report with --format)
    Verify {
        suite: String,
        #[command(flatten)]
        opts: SuiteOpts,
    },
    /// Run a suite and write its full report (CSV by default)
    Sweep {
        suite: String,
        #[command(flatten)]
        opts: SuiteOpts,
    },
    /// Measure a catalog shape by name, or the hull of a JSON point file
    Measure {
        /// Shape name (disk, quarter_disk, reuleaux_triangle, reuleaux_odd_gon,
        /// equilateral_triangle, isosceles_two_height, polar_constant_width)
        /// or a path to {"points": [[x, y, z], ...]}
        shape: String,
        #[arg(long, value_parser = input::parse_angle, default_value = "1.0")]
        delta: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        n: usize,
        /// Odd-gon order (reuleaux_odd_gon, polar_constant_width)
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = input::parse_angle)]
        alpha: Option<f64>,
        /// Tolerance of the constant-width test
        #[arg(long, default_value_t = 2e-3)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimal enclosing cap of a JSON point file
    Circumcap {
        file: PathBuf,
        /// Shuffle seed of the cap solver
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SuiteOpts {
    /// Single thickness value (overrides the suite's delta grid)
    #[arg(long, value_parser = input::parse_angle, conflicts_with = "delta_grid")]
    delta: Option<f64>,
    /// Comma-separated thickness values; `lo:hi:count` expands to a range
    // spelled out so clap takes the parser's whole list as one value
    #[arg(long, value_parser = input::parse_grid)]
    delta_grid: Option<std::vec::Vec<f64>>,
    /// Sampling density, point count or grid size, depending on the suite
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = input::parse_angle)]
    alpha: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random instances
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl SuiteOpts {
    fn config(&self, suite: Suite) -> SuiteConfig {
        let mut config = suite.default_config();
        if let Some(delta) = self.delta {
            config.delta_grid = vec![delta];
        }
        if let Some(grid) = &self.delta_grid {
            config.delta_grid = grid.clone();
        }
        if let Some(n) = self.n {
            config.n = n;
        }
        if self.alpha.is_some() {
            config.alpha = self.alpha;
        }
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(count) = self.count {
            config.count = count;
        }
        if let Some(tol) = self.tol {
            config.tol = tol;
        }
        config
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("sphcover: {e}");
            ExitCode::from(match e {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_USAGE,
            })
        }
    }
}

/// Returns whether every checked claim passed.
fn run(command: Command) -> sphcover::Result<bool> {
    match command {
        Command::Verify { suite, opts } => {
            let suite: Suite = suite.parse()?;
            let rows = verify::run_suite(suite, &opts.config(suite))?;
            match opts.format {
                Some(format) => emit_report(&rows, format, opts.out.as_deref())?,
                None => emit(opts.out.as_deref(), |w| write_summary(&rows, w))?,
            }
            Ok(report_status(suite, &rows))
        }
        Command::Sweep { suite, opts } => {
            let suite: Suite = suite.parse()?;
            let rows = verify::run_suite(suite, &opts.config(suite))?;
            emit_report(
                &rows,
                opts.format.unwrap_or(Format::Csv),
                opts.out.as_deref(),
            )?;
            Ok(report_status(suite, &rows))
        }
        Command::Measure {
            shape,
            delta,
            n,
            k,
            alpha,
            tol,
            format,
            out,
        } => {
            let body = match ShapeKind::parse(&shape) {
                Some(kind) => {
                    let mut spec = ShapeSpec::new(kind, delta).with_samples(n);
                    if let Some(k) = k {
                        spec = spec.with_order(k);
                    }
                    if let Some(alpha) = alpha {
                        spec = spec.with_alpha(alpha);
                    }
                    spec.build()?
                }
                None if Path::new(&shape).exists() => {
                    SphericalConvexPolygon::convex_hull(&input::read_points(Path::new(&shape))?)?
                }
                None => {
                    return Err(Error::InvalidConfig(format!(
                        "`{shape}` is neither a shape name nor a readable file"
                    )))
                }
            };
            let m = Measurement::of(&body, tol)?;
            emit_record(&m, format, out.as_deref())?;
            Ok(true)
        }
        Command::Circumcap {
            file,
            seed,
            format,
            out,
        } => {
            let points = input::read_points(&file)?;
            let cap = match seed {
                Some(seed) => sphcover::enclosing::min_enclosing_cap_seeded(&points, seed)?,
                None => sphcover::min_enclosing_cap(&points)?,
            };
            let record = CapRecord {
                points: points.len(),
                center: cap.center.to_array(),
                radius: cap.radius,
            };
            emit_record(&record, format, out.as_deref())?;
            Ok(true)
        }
    }
}

fn report_status(suite: Suite, rows: &[VerificationReport]) -> bool {
    let failed = rows.iter().filter(|r| !r.passed).count();
    eprintln!(
        "{suite}: {} of {} rows passed",
        rows.len() - failed,
        rows.len()
    );
    failed == 0
}

fn write_summary(rows: &[VerificationReport], w: &mut dyn Write) -> std::io::Result<()> {
    for r in rows {
        let mut params = Vec::new();
        if let Some(d) = r.params.delta {
            params.push(format!("delta={}", verify::format_g12(d)));
        }
        if let Some(n) = r.params.n {
            params.push(format!("n={n}"));
        }
        if let Some(a) = r.params.alpha {
            params.push(format!("alpha={}", verify::format_g12(a)));
        }
        if let Some(s) = r.params.seed {
            params.push(format!("seed={s}"));
        }
        writeln!(
            w,
            "{} {} [{}] formula={} numeric={} error={:.3e} tol={:.0e}",
            if r.passed { "PASS" } else { "FAIL" },
            r.claim_id,
            params.join(" "),
            verify::format_g12(r.formula_value),
            verify::format_g12(r.numeric_value),
            r.abs_error,
            r.tolerance
        )?;
    }
    Ok(())
}

fn emit_report(
    rows: &[VerificationReport],
    format: Format,
    out: Option<&Path>,
) -> sphcover::Result<()> {
    match out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let w = std::io::BufWriter::new(file);
            match format {
                Format::Csv => verify::write_csv(rows, w),
                Format::Json => verify::write_json(rows, w),
            }
        }
        None => {
            let stdout = std::io::stdout().lock();
            match format {
                Format::Csv => verify::write_csv(rows, stdout),
                Format::Json => {
                    verify::write_json(rows, stdout)?;
                    println!();
                    Ok(())
                }
            }
        }
    }
}

fn emit(
    out: Option<&Path>,
    body: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> sphcover::Result<()> {
    let result = match out {
        Some(path) => std::fs::File::create(path).and_then(|f| {
            let mut w = std::io::BufWriter::new(f);
            body(&mut w)?;
            w.flush()
        }),
        None => body(&mut std::io::stdout().lock()),
    };
    result.map_err(|e| Error::Io(e.to_string()))
}

/// Writes one record as pretty JSON, or as `key,value` CSV lines.
fn emit_record<T: Serialize>(
    record: &T,
    format: Format,
    out: Option<&Path>,
) -> sphcover::Result<()> {
    let value = serde_json::to_value(record).map_err(|e| Error::Io(e.to_string()))?;
    emit(out, |w| match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *w, &value)?;
            writeln!(w)
        }
        Format::Csv => {
            writeln!(w, "key,value")?;
            for (key, v) in value.as_object().into_iter().flatten() {
                let cell = match v {
                    serde_json::Value::Number(x) => x
                        .as_f64()
                        .map(verify::format_g12)
                        .unwrap_or_else(|| x.to_string()),
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Bool(b) => b.to_string(),
                    other => format!("\"{}\"", other.to_string().replace('"', "\"\"")),
                };
                writeln!(w, "{key},{cell}")?;
            }
            Ok(())
        }
    })
}

#[derive(Serialize)]
struct CapRecord {
    points: usize,
    center: [f64; 3],
    radius: f64,
}

#[derive(Serialize)]
struct Measurement {
    vertices: usize,
    diameter: f64,
    thickness: f64,
    width_spread: f64,
    constant_width: bool,
    circumcenter: [f64; 3],
    circumradius: f64,
}

impl Measurement {
    fn of(body: &SphericalConvexPolygon, tol: f64) -> sphcover::Result<Self> {
        let cap = body.min_enclosing_cap()?;
        let width_spread = body.width_spread()?;
        Ok(Measurement {
            vertices: body.len(),
            diameter: body.diameter(),
            thickness: body.thickness()?,
            width_spread,
            constant_width: width_spread <= tol,
            circumcenter: cap.center.to_array(),
            circumradius: cap.radius,
        })
    }
}
