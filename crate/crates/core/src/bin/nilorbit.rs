use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nilorbit::io::{parse_point, parse_problem, ProblemFile};
use nilorbit::oracle::{Grid, RecurrenceParams};
use nilorbit::regularity::Sampling;
use nilorbit::report::{self, InputDigest, Report};
use nilorbit::Error;

/// Orbit classification for linear actions of nilpotent Lie groups.
#[derive(Parser)]
#[command(name = "nilorbit", version)]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxbAction {
    Classify,
}

#[derive(Subcommand)]
enum Command {
    /// Weight spaces, real form, blocks and the dE + dν split of a representation.
    Decompose {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Regularity of one point, or of every point listed in the problem file.
    Regular {
        #[arg(long)]
        rep: PathBuf,
        /// `(a, b, …)`, a JSON array, or a path to a JSON file.
        #[arg(long)]
        point: Option<String>,
    },
    /// Global classification of the regular set by sampling.
    Dichotomy {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampled integer coordinates lie in [−bound, bound].
        #[arg(long, default_value_t = 5000)]
        bound: i64,
    },
    /// Type I / antiliminary classification of 𝒱 ⋊_D ℝ.
    Axb {
        action: Option<AxbAction>,
        #[arg(long, conflicts_with = "spectrum", required_unless_present = "spectrum")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        spectrum: Option<PathBuf>,
    },
    /// Float orbit samples as CSV plus a recurrence score.
    OrbitSample {
        /// A representation or a matrix problem file.
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        point: String,
        /// `radius,steps`; steps are per algebra coordinate.
        #[arg(long, default_value = "6.283185307179586,64")]
        grid: String,
        /// CSV destination; without it the CSV goes to stdout and the report to stderr.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 10.0)]
        t_min: f64,
        #[arg(long, default_value_t = 1e4)]
        t_max: f64,
        #[arg(long, default_value_t = 1e-2)]
        epsilon: f64,
        /// Comma separated coordinates of the flow direction in the Lie algebra.
        #[arg(long)]
        direction: Option<String>,
    },
    /// Runs the bundled fixtures.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Sink {
    Stdout,
    Stderr,
    File(PathBuf),
}

/// Writes through a temporary file in the same directory and renames it into place.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

fn emit(sink: &Sink, contents: &str) -> Result<(), Error> {
    let res = match sink {
        Sink::Stdout => std::io::stdout().write_all(contents.as_bytes()),
        Sink::Stderr => std::io::stderr().write_all(contents.as_bytes()),
        Sink::File(p) => write_atomic(p, contents),
    };
    res.map_err(|e| Error::InvalidParameter(format!("cannot write output: {e}")))
}

fn read(path: &Path, pointer_hint: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::malformed(pointer_hint, format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path, digest: &mut InputDigest, label: &str) -> Result<ProblemFile, Error> {
    let text = read(path, "")?;
    digest.add(label, text.as_bytes());
    parse_problem(&text).map_err(|e| match e {
        Error::Malformed { pointer, message } => Error::Malformed {
            pointer,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

/// Inline text, or the contents of the file it names.
fn point_text(arg: &str) -> Result<String, Error> {
    let p = Path::new(arg);
    if p.is_file() {
        read(p, "")
    } else {
        Ok(arg.to_string())
    }
}

fn parse_grid(s: &str) -> Result<Grid, Error> {
    let bad = || Error::InvalidParameter(format!("grid must be `radius,steps`, got {s:?}"));
    let (r, n) = s.split_once(',').ok_or_else(bad)?;
    Ok(Grid {
        radius: r.trim().parse().map_err(|_| bad())?,
        steps: n.trim().parse().map_err(|_| bad())?,
    })
}

fn parse_floats(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|_| Error::InvalidParameter(format!("not a number: {c:?}"))))
        .collect()
}

fn configure_threads() -> Result<(), Error> {
    let Ok(v) = std::env::var("NILORBIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::InvalidParameter(format!("NILORBIT_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Internal(e.to_string()))
}

fn run(cli: Cli) -> Result<i32, Error> {
    configure_threads()?;
    let mut sink = cli.out.clone().map_or(Sink::Stdout, Sink::File);
    let (name, digest, verdicts, seed, code) = match cli.command {
        Command::Decompose { rep } => {
            let mut d = InputDigest::new("decompose");
            let p = load(&rep, &mut d, "rep")?;
            ("decompose", d, report::decompose(&p)?, None, 0)
        }
        Command::Regular { rep, point } => {
            let mut d = InputDigest::new("regular");
            let p = load(&rep, &mut d, "rep")?;
            let points = match point {
                Some(a) => {
                    let text = point_text(&a)?;
                    d.add("point", text.as_bytes());
                    vec![parse_point(&text, p.field.as_ref())?]
                }
                None => Vec::new(),
            };
            ("regular", d, report::regular(&p, &points)?, None, 0)
        }
        Command::Dichotomy {
            rep,
            samples,
            seed,
            bound,
        } => {
            let mut d = InputDigest::new("dichotomy");
            let p = load(&rep, &mut d, "rep")?;
            let sampling = Sampling {
                count: samples,
                seed,
                coordinate_bound: bound,
            };
            d.add("sampling", format!("{samples},{bound}").as_bytes());
            ("dichotomy", d, report::dichotomy(&p, &sampling)?, Some(seed), 0)
        }
        Command::Axb { matrix, spectrum, .. } => {
            let mut d = InputDigest::new("axb");
            let (label, path) = match (matrix, spectrum) {
                (Some(m), _) => ("matrix", m),
                (None, Some(s)) => ("spectrum", s),
                (None, None) => unreachable!("clap requires one of the inputs"),
            };
            let p = load(&path, &mut d, label)?;
            ("axb", d, report::axb(&p)?, None, 0)
        }
        Command::OrbitSample {
            rep,
            point,
            grid,
            csv,
            t_min,
            t_max,
            epsilon,
            direction,
        } => {
            let mut d = InputDigest::new("orbit-sample");
            let p = load(&rep, &mut d, "rep")?;
            let text = point_text(&point)?;
            d.add("point", text.as_bytes());
            let v = parse_point(&text, p.field.as_ref())?;
            let grid = parse_grid(&grid)?;
            let params = RecurrenceParams {
                t_min,
                t_max,
                epsilon,
                direction: direction.as_deref().map(parse_floats).transpose()?,
            };
            d.add("params", serde_json::to_string(&(grid, &params)).expect("params serialize").as_bytes());
            let (sample, score) = report::orbit(&p, &v, grid, &params)?;
            match csv {
                Some(path) => emit(&Sink::File(path), &sample.to_csv())?,
                None => {
                    emit(&Sink::Stdout, &sample.to_csv())?;
                    if matches!(sink, Sink::Stdout) {
                        sink = Sink::Stderr;
                    }
                }
            }
            ("orbit-sample", d, report::orbit_value(&sample, &score, grid), None, 0)
        }
        Command::Selftest { seed } => {
            let d = InputDigest::new("selftest");
            let out = report::selftest(seed);
            let code = if out.passed { 0 } else { 1 };
            ("selftest", d, serde_json::to_value(&out).expect("selftest serializes"), Some(seed), code)
        }
    };
    emit(&sink, &Report::new(name, digest, verdicts, seed).to_json())?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let pointer = match &e {
                Error::Malformed { pointer, .. } => Some(pointer.clone()),
                _ => None,
            };
            let body = json!({ "error": { "kind": e.kind(), "message": e.to_string(), "pointer": pointer } });
            eprintln!("{}", serde_json::to_string_pretty(&body).expect("error serializes"));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
