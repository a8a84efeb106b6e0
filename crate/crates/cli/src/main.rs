//! Command-line front end: generate instances, compute and verify
//! bounded-diameter monochromatic covers, scan small complete graphs, and
//! export DOT drawings.
//!
//! Exit codes: 0 success, 1 contract violation (invalid cover, exhausted
//! budget, trichotomy violation), 2 input error (unreadable or malformed
//! files, bad flags).

use bichrome::cover::bounded_cover;
use bichrome::dot::export_dot;
use bichrome::generators::{generate, GenKind, GenSpec};
use bichrome::graph::ColouredGraph;
use bichrome::io;
use bichrome::oracle::{alpha_exact, folk_scan, verify_cover};
use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bichrome",
    version,
    about = "Cover a red-blue edge-coloured graph by at most alpha(G) monochromatic \
             pieces of diameter at most 8a^2 + 12a + 4"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a bounded-diameter cover of an instance
    Cover(CoverArgs),
    /// Check a cover document against an instance
    Verify(VerifyArgs),
    /// Generate an instance file
    Gen(GenArgs),
    /// Classify every colouring of the complete graph on n vertices
    FolkScan(FolkScanArgs),
    /// Render an instance, optionally with a cover overlay, as DOT
    ExportDot(ExportDotArgs),
}

#[derive(Args)]
struct CoverArgs {
    /// Instance file (JSON: {"n": ..., "edges": [{"u", "v", "c"}]})
    #[arg(long)]
    input: PathBuf,
    /// Piece budget: a positive integer at least alpha(G), or "auto" to use
    /// the exact independence number (refused above the oracle size limit)
    #[arg(long, default_value = "auto")]
    budget: String,
    /// Write the cover document here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Cover document to check
    #[arg(long)]
    cover: PathBuf,
    /// Budget to verify against (defaults to the cover file's own)
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// gnp, complete, long_path_gadget, shortcut_gadget or swap_gadget
    #[arg(long)]
    kind: String,
    /// Number of vertices (gadgets have minimum sizes)
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability (gnp only)
    #[arg(long, default_value_t = 0.3)]
    p_edge: f64,
    #[arg(long, default_value_t = 0.4)]
    p_red: f64,
    #[arg(long, default_value_t = 0.4)]
    p_blue: f64,
    #[arg(long, default_value_t = 0.2)]
    p_both: f64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FolkScanArgs {
    /// Complete-graph size, at most 5
    #[arg(long)]
    n: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ExportDotArgs {
    #[arg(long)]
    input: PathBuf,
    /// Cover document whose piece indices label the vertices
    #[arg(long)]
    cover: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Contract(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Contract(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Contract(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Cover(args) => cmd_cover(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
        Command::FolkScan(args) => cmd_folk_scan(args),
        Command::ExportDot(args) => cmd_export_dot(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn read_graph(path: &Path) -> Result<ColouredGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    io::graph_from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_text(target: Option<&Path>, text: &str) -> Result<(), Failure> {
    match target {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_cover(args: CoverArgs) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let budget = match args.budget.as_str() {
        "auto" => alpha_exact(&g).map_err(|e| {
            Failure::Input(format!("cannot pick the budget automatically: {e}"))
        })?,
        text => text.parse::<usize>().map_err(|_| {
            Failure::Input(format!("--budget must be a positive integer or \"auto\", got {text:?}"))
        })?,
    };
    let cover = bounded_cover(&g, budget).map_err(|e| Failure::Contract(e.to_string()))?;
    write_text(args.output.as_deref(), &io::cover_to_json(&cover))?;
    let report = verify_cover(&g, &cover, budget);
    if !report.is_valid() {
        return Err(Failure::Contract(format!(
            "computed cover failed validation: {:?}",
            report.violations
        )));
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let text = std::fs::read_to_string(&args.cover)
        .map_err(|e| Failure::Input(format!("{}: {e}", args.cover.display())))?;
    let cover = io::cover_from_json(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", args.cover.display())))?;
    let budget = args.budget.unwrap_or(cover.budget);
    let report = verify_cover(&g, &cover, budget);
    let mut doc = serde_json::to_string_pretty(&report).expect("report serialises");
    doc.push('\n');
    write_text(args.output.as_deref(), &doc)?;
    if report.is_valid() {
        Ok(())
    } else {
        Err(Failure::Contract(format!("{} violations", report.violations.len())))
    }
}

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    let kind: GenKind = args.kind.parse().map_err(Failure::Input)?;
    let spec = GenSpec {
        kind,
        n: args.n,
        p_edge: args.p_edge,
        p_red: args.p_red,
        p_blue: args.p_blue,
        p_both: args.p_both,
        seed: args.seed,
    };
    let g = generate(&spec).map_err(|e| Failure::Input(e.to_string()))?;
    write_text(args.output.as_deref(), &io::graph_to_json(&g))
}

fn cmd_folk_scan(args: FolkScanArgs) -> Result<(), Failure> {
    let summary = folk_scan(args.n).map_err(|e| Failure::Input(e.to_string()))?;
    let mut doc = serde_json::to_string_pretty(&summary).expect("summary serialises");
    doc.push('\n');
    write_text(args.output.as_deref(), &doc)?;
    if summary.violations == 0 {
        Ok(())
    } else {
        Err(Failure::Contract(format!("{} trichotomy violations", summary.violations)))
    }
}

fn cmd_export_dot(args: ExportDotArgs) -> Result<(), Failure> {
    let g = read_graph(&args.input)?;
    let cover = match &args.cover {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Some(
                io::cover_from_json(&text)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
            )
        }
        None => None,
    };
    write_text(args.output.as_deref(), &export_dot(&g, cover.as_ref()))
}
