//! Command-line interface. [`run`] does everything; the binary only forwards
//! the process arguments and exit code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::family::{emt_quad, moduli_point_quad, quad_predicates, FlipCase, ModuliPoint};
use crate::generator::{
    apply_flips, build_emt, count_flip_tilings, enumerate_flip_tilings, flip_quad, q_table, sporadic, SporadicId,
};
use crate::geometry::{export_obj, realize, Mesh};
use crate::json::{census_line, export_json, parse_json};
use crate::tiling::{validate, Tiling};
use crate::trig::{check_quad, Quadrilateral};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

const DEFAULT_TOL: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(name = "a3b", about = "Tilings of the sphere by congruent a3b quadrilaterals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Outputs {
    /// Write the tiling as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the realized tiling as OBJ polylines.
    #[arg(long)]
    obj: Option<PathBuf>,
    /// Samples per edge in OBJ output.
    #[arg(long, default_value_t = 16)]
    segments: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The earth map tile for (f, beta) with its residual report.
    Quad {
        #[arg(long)]
        f: u32,
        #[arg(long)]
        beta: f64,
    },
    /// The earth map tiling for (f, beta).
    Emt {
        #[arg(long)]
        f: u32,
        #[arg(long)]
        beta: f64,
        #[command(flatten)]
        out: Outputs,
    },
    /// Flip modifications for beta = (f/2 - m) 4/f.
    Flips {
        #[arg(long)]
        f: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, conflicts_with = "count")]
        list: bool,
        #[arg(long)]
        count: bool,
        /// Write every flip tiling as JSON into this directory.
        #[arg(long)]
        emit_all: Option<PathBuf>,
    },
    /// One of the five sporadic tilings.
    Sporadic {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        out: Outputs,
    },
    /// Run every validator check on a JSON tiling.
    Verify {
        #[arg(long)]
        json: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Q1, Q2, Q3 for f.
    Counts {
        #[arg(long)]
        f: u32,
    },
    /// CSV rows (t, beta, a, b, alpha, delta) along the a3b moduli curve.
    Moduli {
        #[arg(long)]
        f: u32,
        #[arg(long)]
        samples: usize,
    },
    /// Realize a JSON tiling on the sphere and write OBJ.
    Realize {
        #[arg(long)]
        json: PathBuf,
        #[arg(long)]
        obj: PathBuf,
        #[arg(long, default_value_t = 16)]
        segments: usize,
    },
}

/// Failure of one command, carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SingularConfiguration(_)
            | Error::DegenerateFamily(_)
            | Error::InconsistentQuadrilateral { .. }
            | Error::GeometricInconsistency { .. }
            | Error::NoQuadrilateral(_) => EXIT_NUMERIC,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    }
}

/// Formats `x` with 12 significant digits, trimming trailing zeros.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..12).contains(&e) {
        let s = format!("{:.*}", (11 - e).max(0) as usize, x);
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" { "0".into() } else { s }
    } else {
        format!("{x:.11e}")
    }
}

fn write_outputs(
    t: &Tiling,
    q: &Quadrilateral,
    out: &Outputs,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let mesh = if out.json.is_some() || out.obj.is_some() {
        Some(realize(t, q)?)
    } else {
        None
    };
    if let Some(path) = &out.json {
        fs::write(path, export_json(t, q, mesh.as_ref())).map_err(|e| io_failure(path, e))?;
    }
    if let (Some(path), Some(mesh)) = (&out.obj, &mesh) {
        fs::write(path, export_obj(mesh, out.segments.max(1))).map_err(|e| io_failure(path, e))?;
    }
    if let Some(mesh) = &mesh {
        let _ = writeln!(stdout, "discrepancy={}", sig12(mesh.discrepancy));
    }
    Ok(())
}

fn summary(t: &Tiling, q: &Quadrilateral, stdout: &mut dyn Write) -> Result<(), Failure> {
    let a = &q.angles;
    let _ = writeln!(stdout, "f={} tiles={} vertices={}", q.f, t.f(), t.vertices().len());
    let _ = writeln!(
        stdout,
        "alpha={} beta={} gamma={} delta={}",
        sig12(a.alpha),
        sig12(a.beta),
        sig12(a.gamma),
        sig12(a.delta)
    );
    let _ = writeln!(stdout, "a={} b={}", sig12(q.edges.a), sig12(q.edges.b));
    let _ = writeln!(stdout, "vertices: {}", census_line(t));
    let report = validate(t, q, DEFAULT_TOL);
    if !report.passed() {
        return Err(Failure {
            code: EXIT_VALIDATION,
            message: report.to_string(),
        });
    }
    Ok(())
}

fn mesh_line(mesh: &Mesh) -> String {
    format!(
        "discrepancy={} total_excess={}",
        sig12(mesh.discrepancy),
        sig12(mesh.total_excess())
    )
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Quad { f, beta } => {
            let q = emt_quad(f, beta)?;
            let a = &q.angles;
            let _ = writeln!(
                stdout,
                "alpha={} beta={} gamma={} delta={}",
                sig12(a.alpha),
                sig12(a.beta),
                sig12(a.gamma),
                sig12(a.delta)
            );
            let _ = writeln!(stdout, "a={} b={}", sig12(q.edges.a), sig12(q.edges.b));
            let r = check_quad(&q, DEFAULT_TOL);
            let _ = writeln!(
                stdout,
                "angle_sum_residual={} max_trig_residual={} min_coolsaet_residual={}",
                sig12(r.angle_sum),
                sig12(r.max_trig()),
                sig12(r.min_coolsaet())
            );
            let p = quad_predicates(&q);
            let _ = writeln!(stdout, "predicates: {}", if p.consistent() { "ok" } else { "violated" });
            for v in &p.violations {
                let _ = writeln!(stdout, "  {v}");
            }
            Ok(if r.passed { EXIT_OK } else { EXIT_NUMERIC })
        }
        Command::Emt { f, beta, out } => {
            let q = emt_quad(f, beta)?;
            let t = build_emt(f)?;
            summary(&t, &q, stdout)?;
            write_outputs(&t, &q, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Flips {
            f,
            m,
            list: _,
            count,
            emit_all,
        } => {
            let case = FlipCase::new(f, m)?;
            if count {
                let mut parts = Vec::new();
                let mut total = 0;
                for n in 1..=case.max_flips() {
                    let c = count_flip_tilings(f, m, n)?;
                    total += c;
                    parts.push(format!("n={n}:{c}"));
                }
                let _ = writeln!(stdout, "{} total:{total}", parts.join(" "));
            } else {
                for spec in enumerate_flip_tilings(f, m)? {
                    let gaps: Vec<String> = spec.gaps.iter().map(u32::to_string).collect();
                    let _ = writeln!(stdout, "n={} gaps={}", spec.n(), gaps.join(","));
                }
            }
            if let Some(dir) = emit_all {
                fs::create_dir_all(&dir).map_err(|e| io_failure(&dir, e))?;
                let q = flip_quad(f, m)?;
                for spec in enumerate_flip_tilings(f, m)? {
                    let t = apply_flips(f, m, &spec.gaps)?;
                    let mesh = realize(&t, &q)?;
                    let gaps: Vec<String> = spec.gaps.iter().map(u32::to_string).collect();
                    let path = dir.join(format!("flip_f{f}_m{m}_g{}.json", gaps.join("-")));
                    fs::write(&path, export_json(&t, &q, Some(&mesh))).map_err(|e| io_failure(&path, e))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Sporadic { name, out } => {
            let id: SporadicId = name.parse()?;
            let (q, tilings) = sporadic(id)?;
            let t = &tilings[0];
            summary(t, &q, stdout)?;
            write_outputs(t, &q, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { json, tol } => {
            let text = fs::read_to_string(&json).map_err(|e| io_failure(&json, e))?;
            let doc = parse_json(&text)?;
            let report = validate(&doc.tiling, &doc.quad, tol);
            let _ = write!(stdout, "{report}");
            Ok(if report.passed() { EXIT_OK } else { EXIT_VALIDATION })
        }
        Command::Counts { f } => {
            let (q1, q2, q3) = q_table(f)?;
            let _ = writeln!(stdout, "Q1={q1} Q2={q2} Q3={q3}");
            Ok(EXIT_OK)
        }
        Command::Moduli { f, samples } => {
            if samples == 0 {
                return Err(Error::InvalidParameter("samples must be positive".into()).into());
            }
            let (lo, hi) = ModuliPoint::t_interval(f);
            let _ = writeln!(stdout, "t,beta,a,b,alpha,delta");
            for j in 1..=samples {
                let t = lo + (hi - lo) * j as f64 / (samples + 1) as f64;
                let q = moduli_point_quad(ModuliPoint { f, t })?;
                let _ = writeln!(
                    stdout,
                    "{},{},{},{},{},{}",
                    sig12(t),
                    sig12(q.angles.beta),
                    sig12(q.edges.a),
                    sig12(q.edges.b),
                    sig12(q.angles.alpha),
                    sig12(q.angles.delta)
                );
            }
            Ok(EXIT_OK)
        }
        Command::Realize { json, obj, segments } => {
            let text = fs::read_to_string(&json).map_err(|e| io_failure(&json, e))?;
            let doc = parse_json(&text)?;
            let mesh = realize(&doc.tiling, &doc.quad)?;
            fs::write(&obj, export_obj(&mesh, segments.max(1))).map_err(|e| io_failure(&obj, e))?;
            let _ = writeln!(stdout, "{}", mesh_line(&mesh));
            Ok(EXIT_OK)
        }
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code: 0 success, 1 validation failure, 2 invalid arguments,
/// 3 numeric failure.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
