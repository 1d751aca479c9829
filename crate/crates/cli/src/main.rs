use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use descent_cli::{catalog_workspace, run_command, CliError, Context, ErrorKind, Format, Workspace};

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

/// Exact descent and codescent checks over a workspace of rings, modules,
/// finite sets and finite categories.
#[derive(Parser)]
#[command(name = "descent", version)]
struct Cli {
    /// One of: check-beck, amitsur, e2, coring, can, prim, sdr,
    /// strict-complete, adjunction-iso, cech, codescent-beck, coalgebra, kan,
    /// kan-assembly, laws, matching, selftest, or emit-workspace.
    command: String,
    /// Command arguments as key=value.
    args: Vec<String>,
    /// JSON workspace; the built-in catalog when omitted.
    #[arg(long)]
    workspace: Option<PathBuf>,
    /// Overrides the workspace truncation.
    #[arg(long)]
    truncation: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    /// Print the elapsed time to stderr.
    #[arg(long)]
    timing: bool,
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let workspace = match &cli.workspace {
        Some(path) => Workspace::load(path)?,
        None => catalog_workspace(),
    };
    if cli.command == "emit-workspace" {
        if !cli.args.is_empty() {
            return Err(CliError::usage("emit-workspace takes no arguments"));
        }
        println!("{}", workspace.to_json()?);
        return Ok(true);
    }
    let mut ctx = Context::new(workspace);
    if let Some(n) = cli.truncation {
        if n < 1 {
            return Err(CliError::usage("truncation must be at least 1"));
        }
        ctx.truncation = n;
    }
    ctx.seed = cli.seed;
    let start = Instant::now();
    let report = run_command(&ctx, &cli.command, &cli.args)?;
    if cli.timing {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    let format = match cli.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
    };
    print!("{}", report.render(format));
    Ok(report.holds())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", e);
            match e.kind {
                ErrorKind::Usage | ErrorKind::Validation | ErrorKind::Computation => ExitCode::from(2),
            }
        }
    }
}
