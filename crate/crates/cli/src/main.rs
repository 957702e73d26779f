//! `roundfold` command-line front end.
//!
//! Exit codes: 0 success/true, 1 false/none, 2 invalid input, 3 internal error.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use roundfold_core::census::{census_table, census_table_with_workers, CensusError, DEFAULT_K_MAX};
use roundfold_core::classify::a_equivalent;
use roundfold_core::io::{
    parse_graph, parse_manifold_spec, parse_page, render_critical_values, render_reeb,
    render_table, serialize_page, RenderFormat, TableFormat,
};
use roundfold_core::reeb::{validate_page, Page};
use roundfold_core::roundfold::{admits_directed, admits_round_fold, RoundFoldDescriptor};

#[derive(Parser)]
#[command(
    name = "roundfold",
    version,
    about = "Round fold maps from labeled Reeb graph pages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check page invariants; exits 1 and lists violations if any fail.
    Validate { file: PathBuf },
    /// Surface type, fiber counts and fold counts of a page.
    Invariants { file: PathBuf },
    /// Total space of the round fold map with this page.
    Build {
        file: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        clutching: i64,
    },
    /// Print a witness page for SPEC, or `none`.
    Admits {
        #[arg(long)]
        manifold: String,
        #[arg(long)]
        directed: bool,
    },
    /// Decide A-equivalence of two round fold maps.
    Classify {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        clutching0: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        clutching1: i64,
    },
    /// Enumerate round fold maps with at most S critical spheres.
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s_max: u32,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = CensusFormat::Table)]
        format: CensusFormat,
        /// Worker threads (default: all cores).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Draw the critical value circles or the Reeb graph.
    Render {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: DiagramKind,
        #[arg(long)]
        out: PathBuf,
        /// Source dimension for the circle diagram.
        #[arg(long, default_value_t = 5)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Table,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramKind {
    Circles,
    Reeb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Dot,
}

/// A failed command: exit code plus message for standard error.
struct Failure(u8, String);

fn invalid(e: impl Display) -> Failure {
    Failure(2, e.to_string())
}

fn internal(e: impl Display) -> Failure {
    Failure(3, e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_page(path: &Path) -> Result<Page, Failure> {
    parse_page(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn descriptor(n: u32, page: Page, clutching: i64) -> Result<RoundFoldDescriptor, Failure> {
    RoundFoldDescriptor::new(n, page, clutching).map_err(invalid)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate { file } => {
            let text = read(&file)?;
            let graph =
                parse_graph(&text).map_err(|e| invalid(format!("{}: {e}", file.display())))?;
            let report = validate_page(&graph);
            if report.is_valid() {
                println!("valid");
                Ok(0)
            } else {
                for v in report.iter() {
                    eprintln!("{}: {v}", file.display());
                }
                println!("invalid");
                Ok(1)
            }
        }
        Command::Invariants { file } => {
            let page = load_page(&file)?;
            let counts: Vec<String> = page
                .regular_fiber_counts()
                .iter()
                .map(u32::to_string)
                .collect();
            // Fold counts do not depend on n; any admissible dimension will do.
            let folds = descriptor(5, page.clone(), 0)?.fold_counts();
            println!("surface_type: {}", page.surface_type());
            println!("euler: {}", page.euler());
            println!("orientable: {}", page.is_orientable());
            println!("boundary_circles: {}", page.boundary_count());
            println!("critical_spheres: {}", page.critical_count());
            println!("fiber_counts: {}", counts.join(" "));
            println!("fold_counts: n0={} n1={}", folds.definite, folds.indefinite);
            Ok(0)
        }
        Command::Build { file, n, clutching } => {
            let rf = descriptor(n, load_page(&file)?, clutching)?;
            println!("{}", rf.build_total_space());
            Ok(0)
        }
        Command::Admits { manifold, directed } => {
            let d = parse_manifold_spec(&manifold).map_err(invalid)?;
            let witness = if directed {
                admits_directed(&d)
            } else {
                admits_round_fold(&d)
            };
            match witness {
                Some(rf) => {
                    eprintln!("n={} clutching={}", rf.n(), rf.clutching());
                    print!("{}", serialize_page(rf.page()));
                    Ok(0)
                }
                None => {
                    println!("none");
                    Ok(1)
                }
            }
        }
        Command::Classify {
            file1,
            file2,
            n,
            clutching0,
            clutching1,
        } => {
            let rf0 = descriptor(n, load_page(&file1)?, clutching0)?;
            let rf1 = descriptor(n, load_page(&file2)?, clutching1)?;
            if a_equivalent(&rf0, &rf1) {
                println!("A-equivalent");
                Ok(0)
            } else {
                println!("not A-equivalent");
                Ok(1)
            }
        }
        Command::Census {
            n,
            s_max,
            k_max,
            format,
            workers,
        } => {
            let table = match workers {
                Some(w) => census_table_with_workers(n, s_max, k_max, w),
                None => census_table(n, s_max, k_max),
            };
            let table = table.map_err(|e| match e {
                CensusError::Pool(_) => internal(e),
                _ => invalid(e),
            })?;
            let format = match format {
                CensusFormat::Table => TableFormat::Table,
                CensusFormat::Jsonl => TableFormat::Jsonl,
            };
            print!("{}", render_table(&table, format));
            Ok(0)
        }
        Command::Render {
            file,
            kind,
            out,
            n,
            format,
        } => {
            let page = load_page(&file)?;
            let format = match format {
                Format::Svg => RenderFormat::Svg,
                Format::Dot => RenderFormat::Dot,
            };
            let doc = match kind {
                DiagramKind::Circles => render_critical_values(&descriptor(n, page, 0)?, format),
                DiagramKind::Reeb => render_reeb(&page, format),
            }
            .map_err(invalid)?;
            fs::write(&out, doc).map_err(|e| internal(format!("{}: {e}", out.display())))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("roundfold: {message}");
            ExitCode::from(code)
        }
    }
}
