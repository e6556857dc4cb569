use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use monocone_cli::corpus::{run_corpus, CorpusParams};
use monocone_cli::plot::{plot_points, to_csv, to_svg};
use monocone_cli::request::{build_window, parse_request, parse_window};
use monocone_cli::{run, CliError, CliResult, ErrorCode};

#[derive(Parser)]
#[command(name = "monocone", version, about = "Analyse submonoids of free commutative monoids")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the commands of a request (or `atoms` and `classify` on a bare spec).
    Analyze {
        /// Request or monoid spec; `-` reads stdin.
        spec: PathBuf,
        /// Window bounds `a,b[,c…]`, overriding the request.
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the members of a 2-dimensional window with atoms flagged.
    Plot {
        spec: PathBuf,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Random generated monoids checked against brute force and the face
    /// correspondence; exits 1 on any violation.
    Corpus {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 6)]
        max_generators: usize,
        #[arg(long, default_value_t = 5)]
        max_entry: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_input(path: &Path) -> CliResult<String> {
    let io = |e: std::io::Error| CliError::new(ErrorCode::Io, format!("{}: {e}", path.display()));
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::new(ErrorCode::Io, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn window_arg(w: Option<&str>) -> CliResult<Option<Vec<i64>>> {
    w.map(parse_window).transpose()
}

fn main_inner(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Cmd::Analyze { spec, window, out } => {
            let req = parse_request(&read_input(&spec)?)?;
            let report = run(req, window_arg(window.as_deref())?)?;
            write_output(out.as_deref(), &report.to_json())?;
            Ok(true)
        }
        Cmd::Plot { spec, window, svg, csv } => {
            let req = parse_request(&read_input(&spec)?)?;
            let m = req.monoid.build()?;
            let bounds = window_arg(window.as_deref())?
                .or(req.window)
                .ok_or_else(|| CliError::new(ErrorCode::SchemaViolation, "no window given"))?;
            let w = build_window(&bounds, m.dim())?;
            let pts = plot_points(&m, &w)?;
            if svg.is_none() && csv.is_none() {
                write_output(None, &to_csv(&pts))?;
            }
            if let Some(p) = csv {
                write_output(Some(&p), &to_csv(&pts))?;
            }
            if let Some(p) = svg {
                write_output(Some(&p), &to_svg(&pts, &w))?;
            }
            Ok(true)
        }
        Cmd::Corpus { seed, count, max_dim, max_generators, max_entry, out } => {
            let params = CorpusParams { max_dim, max_generators, max_entry, ..CorpusParams::default() };
            if max_dim == 0 || max_generators == 0 || max_entry < 1 {
                return Err(CliError::new(ErrorCode::BadArgument, "corpus parameters must be positive"));
            }
            let report = run_corpus(seed, count, &params)?;
            write_output(out.as_deref(), &report.to_json())?;
            Ok(report.summary.violations == 0)
        }
    }
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(2)
        }
    }
}
