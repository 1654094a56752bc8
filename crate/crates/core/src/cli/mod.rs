//! Curve files, reports and the `realknot` command line.
//!
//! Exit codes: 0 on success, 2 for malformed input, 3 when a mathematical
//! precondition fails, 4 for an internal error.

mod commands;
mod file;
mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

pub use commands::*;
pub use file::{load_curve, AmbientTag, CurveFile};
pub use report::{Check, Report, Status};

use crate::error::{Error, ErrorClass, Result};
use crate::forms::parse_rat;

#[derive(Parser, Debug)]
#[command(name = "realknot", version, about = "Exact tools for real rational curves in RP3 and on the 3-sphere")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify degree, sphere membership, immersion and nonsingularity.
    /// Reads standard input for `-`.
    Verify { path: PathBuf },
    /// Encomplexed writhe, from diagrams at two projection centers.
    Writhe { path: PathBuf },
    /// Stereographic projection of an on-sphere curve to RP3.
    Project {
        path: PathBuf,
        #[arg(long, default_value = "1,0,0,0,1")]
        center: String,
    },
    /// Inverse stereographic projection of an RP3 curve into the sphere.
    Lift {
        path: PathBuf,
        #[arg(long, default_value = "1,0,0,0,1")]
        center: String,
        /// preserving, through-center or at-double-point
        #[arg(long, default_value = "preserving")]
        contract: String,
    },
    /// Join two curves meeting in one point. Without --epsilon, searches
    /// from 1 by halving.
    Join {
        path1: PathBuf,
        path2: PathBuf,
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Bi-degree of a curve on x0 x3 = x1 x2.
    Bidegree { path: PathBuf },
    /// Quadrics containing the curve.
    Quadric { path: PathBuf },
    /// Torus knot on the sphere, written as a curve file.
    TorusKnot {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        m: usize,
        /// a,b with a^2 + b^2 = 1
        #[arg(long, default_value = "3/5,4/5")]
        radii: String,
    },
    /// Rank of the Jacobian of the on-sphere conditions.
    Jacobian { path: PathBuf },
    /// Linking number of two disjoint curves.
    Link { path1: PathBuf, path2: PathBuf },
    /// All double points and cusps.
    DoublePoints { path: PathBuf },
    /// Real transform moving a non-real point at infinity onto the empty
    /// conic.
    Retract { path: PathBuf },
    /// Verify and compute writhes for every `.curve` file in a directory.
    CorpusRun { dir: PathBuf },
}

pub fn run_command(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Verify { path } => verify(path),
        Command::Writhe { path } => writhe(path),
        Command::Project { path, center } => project_file(path, &parse_point(center)?),
        Command::Lift { path, center, contract } => lift_file(path, &parse_point(center)?, parse_contract(contract)?),
        Command::Join { path1, path2, epsilon } => {
            let e = epsilon.as_deref().map(parse_rat).transpose()?;
            join_files(path1, path2, e.as_ref())
        }
        Command::Bidegree { path } => bidegree(path),
        Command::Quadric { path } => quadric(path),
        Command::TorusKnot { degree, m, radii } => torus_knot_report(*degree, *m, parse_pair(radii)?),
        Command::Jacobian { path } => jacobian(path),
        Command::Link { path1, path2 } => link(path1, path2),
        Command::DoublePoints { path } => double_points(path),
        Command::Retract { path } => retract(path),
        Command::CorpusRun { dir } => corpus_run(dir),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e.class() {
        ErrorClass::Parse => 2,
        ErrorClass::Math => 3,
        ErrorClass::Internal => 4,
    }
}

/// Runs the parsed command line, printing the report or a diagnostic, and
/// returns the exit code.
pub fn main_with(cli: Cli) -> i32 {
    let start = Instant::now();
    match run_command(&cli.command) {
        Ok(mut r) => {
            if cli.timing {
                r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            print!("{}", if cli.json { r.to_json() + "\n" } else { r.to_text() });
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "curve"))
        .collect();
    files.sort();
    Ok(files)
}

/// One line per curve file: its verification verdict and, for knots, the
/// writhe.
pub fn corpus_run(dir: &Path) -> Result<Report> {
    let mut r = Report::new("corpus-run", &[&dir.display().to_string()]);
    for path in corpus_files(dir)? {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let c = load_curve(&path)?;
        let v = verify_curve(&c, &name)?;
        let verdict = v.check("nonsingular").map(|c| c.summary.clone()).unwrap_or_default();
        let knot = v.passed() && (c.dim() == 3 || c.is_on_sphere());
        let mut check = Check::verdict(&name, v.passed() || verdict.starts_with("singular"), verdict.clone())
            .with("degree", c.degree())
            .with("ambient", if c.dim() == 3 { "P3" } else { "P4" });
        let mut line = format!("degree {}, {verdict}", c.degree());
        if knot {
            let w = writhe_curve(&c, &name)?;
            let wc = w.check("writhe").expect("writhe reports a writhe");
            if wc.status == Status::Fail {
                check.status = Status::Fail;
            }
            line.push_str(&format!(", writhe {}", wc.summary));
            check = check.with("writhe", wc.certificates["value"].clone());
        }
        check.summary = line;
        r.push(check);
    }
    Ok(r)
}
