//! `tvlab`: build complexes, compute exact homology and map degrees, and
//! search point configurations for Radon/Tverberg partitions with
//! self-verifying certificates.
//!
//! Exit codes: 0 success (or suite passed), 1 suite check failure, 2 usage
//! or input error. All machine output is JSON with a fixed key order;
//! nothing nondeterministic is printed unless `--timing` asks for it.

mod suites;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use suites::{SuiteConfig, SuiteName};
use tvlab_core::homology::homology_of_complex;
use tvlab_core::{
    chessboard, chessboard_actions, deleted_join, fundamental_cycle_chessboard, radon_partition,
    simplex_boundary_cycle, simplicial_map_degree, tverberg_search, verify_no_partition,
    witness_configuration, Coefficients, Coloring, GroupAction, PointConfiguration,
    SearchConstraints, SimplicialComplex,
};

#[derive(Parser)]
#[command(
    name = "tvlab",
    version,
    about = "Simplicial complexes, exact integer homology, and Tverberg partition certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct complexes and point configurations
    Complex {
        #[command(subcommand)]
        command: ComplexCommand,
    },
    /// Integral or mod-p homology of a complex file
    Homology(HomologyArgs),
    /// Degree of the column projection from a chessboard onto a simplex boundary
    Degree(DegreeArgs),
    /// Radon partition of d+2 points in dimension d
    Radon(RadonArgs),
    /// Search a point configuration for a Tverberg partition
    Tverberg(TverbergArgs),
    /// Run a verification suite and report every check
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum ComplexCommand {
    /// Build a named construction
    Build {
        #[command(subcommand)]
        construction: Construction,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// Chessboard complex on an m x n board
    Chessboard {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: ComplexOut,
    },
    /// r-fold k-wise deleted join of the input complex
    DeletedJoin {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        /// Intersection arity: every k constituent faces must be disjoint
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        out: ComplexOut,
    },
    /// Join of two complexes (the second vertex set is shifted past the first)
    Join {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        with: PathBuf,
        #[command(flatten)]
        out: ComplexOut,
    },
    /// k-skeleton of the input complex
    Skeleton {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        dim: i64,
        #[command(flatten)]
        out: ComplexOut,
    },
    /// Point configuration of (d+1)(r-1) points admitting no r-part partition
    Witness {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        /// Write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ComplexOut {
    /// Write here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Emit the JSON mirror (with any group action) instead of the text format
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HomologyArgs {
    /// Complex file (text format or JSON mirror)
    #[arg(long)]
    input: PathBuf,
    /// Compute ranks over Z/p instead of Z (p prime)
    #[arg(long)]
    mod_p: Option<u64>,
}

#[derive(Args)]
struct DegreeArgs {
    /// Number of columns: the map sends cell (i,j) of the (p-1) x p board to vertex j
    #[arg(long)]
    p: usize,
}

#[derive(Args)]
struct RadonArgs {
    /// Point configuration file
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct TverbergArgs {
    /// Point configuration file
    #[arg(long)]
    input: PathBuf,
    /// Number of parts
    #[arg(long)]
    r: usize,
    /// Parts may use faces of at most this dimension
    #[arg(long)]
    max_dim: Option<usize>,
    /// Coloring file; parts must be rainbow (at most one vertex per class)
    #[arg(long)]
    colors: Option<PathBuf>,
    /// Require equal coefficients per color class across parts (needs --colors)
    #[arg(long)]
    equal_coeffs: bool,
    /// Refuse configurations whose unconstrained family space exceeds the
    /// exhaustive-search budget instead of searching anyway
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run
    suite: SuiteName,
    /// Seed for every randomized check (same seed, same report)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Parallel checks (default: env TVERBERG_JOBS, then all cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// Render an aligned table instead of JSON
    #[arg(long)]
    human: bool,
    /// Include per-check elapsed milliseconds (output is no longer reproducible)
    #[arg(long)]
    timing: bool,
    /// Comma-separated column counts for the degree-factorial suite
    #[arg(long, default_value = "3,5")]
    primes: String,
    /// Draw random coordinates with denominators up to 10 instead of integers
    #[arg(long)]
    dense_rationals: bool,
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (`tvlab ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Complex { command } => {
            let ComplexCommand::Build { construction } = command;
            build(construction)?;
            Ok(0)
        }
        Command::Homology(args) => {
            homology_cmd(&args)?;
            Ok(0)
        }
        Command::Degree(args) => {
            degree_cmd(&args)?;
            Ok(0)
        }
        Command::Radon(args) => {
            radon_cmd(&args)?;
            Ok(0)
        }
        Command::Tverberg(args) => {
            tverberg_cmd(&args)?;
            Ok(0)
        }
        Command::Verify(args) => verify_cmd(&args),
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Reads either serialization of a complex; the JSON mirror starts with '{'.
fn read_complex(path: &Path) -> Result<(SimplicialComplex, Option<GroupAction>)> {
    let text = read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        SimplicialComplex::from_json(&text).with_context(|| format!("{}", path.display()))
    } else {
        let k = SimplicialComplex::from_text(&text)
            .with_context(|| format!("{}", path.display()))?;
        Ok((k, None))
    }
}

fn read_points(path: &Path) -> Result<PointConfiguration> {
    let text = read_to_string(path)?;
    PointConfiguration::from_text(&text).with_context(|| format!("{}", path.display()))
}

fn read_colors(path: &Path) -> Result<Coloring> {
    let text = read_to_string(path)?;
    Coloring::from_text(&text).with_context(|| format!("{}", path.display()))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_complex(
    k: &SimplicialComplex,
    action: Option<&GroupAction>,
    out: &ComplexOut,
) -> Result<()> {
    let content = if out.json {
        let mut s = k.to_json(action);
        s.push('\n');
        s
    } else {
        k.to_text()
    };
    emit(&out.output, &content)
}

fn build(construction: Construction) -> Result<()> {
    match construction {
        Construction::Chessboard { m, n, out } => {
            if m < 1 || n < 1 {
                bail!("chessboard needs m >= 1 and n >= 1");
            }
            let board = chessboard(m, n);
            let action = chessboard_actions(m, n).cyclic_columns;
            emit_complex(&board, Some(&action), &out)
        }
        Construction::DeletedJoin { input, r, k, out } => {
            if r < 2 {
                bail!("deleted join needs r >= 2");
            }
            if k < 2 || k > r {
                bail!("deleted join needs 2 <= k <= r");
            }
            let (base, _) = read_complex(&input)?;
            if base.vertex_count() > 64 {
                bail!("deleted join is limited to 64 vertices in the base complex");
            }
            let (dj, action) = deleted_join(&base, r, k);
            emit_complex(&dj, Some(&action), &out)
        }
        Construction::Join { input, with, out } => {
            let (a, _) = read_complex(&input)?;
            let (b, _) = read_complex(&with)?;
            emit_complex(&a.join(&b), None, &out)
        }
        Construction::Skeleton { input, dim, out } => {
            if dim < -1 {
                bail!("skeleton dimension must be at least -1");
            }
            let (k, _) = read_complex(&input)?;
            emit_complex(&k.skeleton(dim), None, &out)
        }
        Construction::Witness { d, r, output } => {
            if d < 1 || r < 2 {
                bail!("witness configuration needs d >= 1 and r >= 2");
            }
            let points = witness_configuration(d, r);
            emit(&output, &points.to_text())
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn homology_cmd(args: &HomologyArgs) -> Result<()> {
    let (k, _) = read_complex(&args.input)?;
    let coefficients = match args.mod_p {
        Some(p) => {
            if !is_prime(p) {
                bail!("--mod-p needs a prime, got {p}");
            }
            Coefficients::ModP(p)
        }
        None => Coefficients::Integers,
    };
    let summary = homology_of_complex(&k, coefficients);
    println!(
        "{}",
        serde_json::to_string_pretty(&summary).expect("summary serialization cannot fail")
    );
    Ok(())
}

#[derive(Serialize)]
struct DegreeOut {
    p: usize,
    degree: i64,
}

fn degree_cmd(args: &DegreeArgs) -> Result<()> {
    let p = args.p;
    if p < 2 {
        bail!("the column projection needs p >= 2");
    }
    let board = chessboard(p - 1, p);
    let target = SimplicialComplex::simplex_boundary(p - 1);
    // Board vertex i*p + j is cell (i, j); the projection forgets the row.
    let f: Vec<usize> = (0..board.vertex_count()).map(|v| v % p).collect();
    let degree = simplicial_map_degree(
        &f,
        &board,
        &target,
        &fundamental_cycle_chessboard(p),
        &simplex_boundary_cycle(p - 1),
    )
    .context("degree computation")?;
    println!(
        "{}",
        serde_json::to_string(&DegreeOut { p, degree }).expect("fixed shape")
    );
    Ok(())
}

fn radon_cmd(args: &RadonArgs) -> Result<()> {
    let points = read_points(&args.input)?;
    let cert = radon_partition(&points).context("radon partition")?;
    println!("{}", cert.to_json());
    Ok(())
}

fn tverberg_cmd(args: &TverbergArgs) -> Result<()> {
    if args.r < 2 {
        bail!("a Tverberg partition needs r >= 2");
    }
    let points = read_points(&args.input)?;
    let rainbow = args.colors.as_deref().map(read_colors).transpose()?;
    let constraints = SearchConstraints {
        max_face_dimension: args.max_dim,
        rainbow,
        equal_coefficients: args.equal_coeffs,
    };
    let unconstrained = constraints.max_face_dimension.is_none()
        && constraints.rainbow.is_none()
        && !constraints.equal_coefficients;
    if args.exhaustive && unconstrained {
        // The budgeted path also certifies that exhaustion stayed in bounds.
        if verify_no_partition(&points, args.r).context("exhaustive search")? {
            println!("{{\"result\": \"none\"}}");
            return Ok(());
        }
    }
    match tverberg_search(&points, args.r, &constraints).context("search")? {
        Some(cert) => {
            cert.verify(&points)
                .expect("search certificates verify by construction");
            println!("{}", cert.to_json());
        }
        None => println!("{{\"result\": \"none\"}}"),
    }
    Ok(())
}

fn verify_cmd(args: &VerifyArgs) -> Result<u8> {
    let mut primes = Vec::new();
    for part in args.primes.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let p: usize = part
            .parse()
            .with_context(|| format!("--primes entry {part:?} is not an integer"))?;
        if p < 2 {
            bail!("--primes entries must be at least 2, got {p}");
        }
        primes.push(p);
    }
    if primes.is_empty() {
        bail!("--primes must name at least one column count");
    }
    let jobs = match args.jobs {
        Some(n) if n >= 1 => n,
        Some(_) => bail!("--jobs must be at least 1"),
        None => match std::env::var("TVERBERG_JOBS") {
            Ok(v) => v
                .trim()
                .parse()
                .with_context(|| format!("TVERBERG_JOBS={v:?} is not a number"))?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    let config = SuiteConfig {
        seed: args.seed,
        jobs,
        timing: args.timing,
        primes,
        dense_rationals: args.dense_rationals,
    };
    let report = suites::run(args.suite, &config)?;
    if args.human {
        print!("{}", report.human_table());
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
        );
    }
    Ok(if report.pass { 0 } else { 1 })
}
