use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use contactify::pipeline::{self, Format, Item, RunOptions};
use contactify::presets::{self, Kind};
use std::path::PathBuf;
use std::process::ExitCode;

/// Pfaffian systems with prescribed simple symmetry algebras, computed exactly.
#[derive(Parser)]
#[command(name = "contactify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalogued presets.
    List,
    /// Print the recipe and expected results of a preset.
    Describe { preset: String },
    /// Run the full pipeline on a preset and compare against expected values and golden files.
    Run {
        preset: String,
        #[command(flatten)]
        opts: PipelineArgs,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
        /// Also write report.json and report.txt into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one artifact of a preset: its 1-forms, 2-forms, representations or algebra.
    Export {
        preset: String,
        #[arg(long, value_enum, default_value_t = ExportItem::Lambda)]
        item: ExportItem,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
        #[command(flatten)]
        opts: PipelineArgs,
    },
}

#[derive(Args)]
struct PipelineArgs {
    /// Highest prolongation degree computed; n_{max-k} must vanish.
    #[arg(long, default_value_t = 4)]
    max_k: usize,
    /// Weight bound of the polynomial ansatz of the symmetry oracle.
    #[arg(long, default_value_t = 4)]
    wmax: usize,
    /// Also solve for the symmetry algebra of the distribution directly.
    #[arg(long)]
    oracle: bool,
    /// Lift the cap on the number of unknowns of the symmetry oracle.
    #[arg(long)]
    allow_huge: bool,
    #[arg(long)]
    golden_dir: Option<PathBuf>,
}

impl PipelineArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            max_k: self.max_k,
            wmax: self.wmax,
            oracle: self.oracle,
            allow_huge: self.allow_huge,
            golden_dir: self.golden_dir.clone().unwrap_or_else(pipeline::default_golden_dir),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
    Latex,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Text => Format::Text,
            OutFormat::Latex => Format::Latex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportItem {
    Lambda,
    Omega,
    Rho,
    Tau,
    Algebra,
}

impl From<ExportItem> for Item {
    fn from(i: ExportItem) -> Self {
        match i {
            ExportItem::Lambda => Item::Lambda,
            ExportItem::Omega => Item::Omega,
            ExportItem::Rho => Item::Rho,
            ExportItem::Tau => Item::Tau,
            ExportItem::Algebra => Item::Algebra,
        }
    }
}

fn list() {
    let catalog = presets::catalog();
    for p in catalog.iter().filter(|p| p.kind == Kind::Magical) {
        println!("{:<20} {}", p.name, p.summary);
    }
    for p in catalog.iter().filter(|p| p.kind == Kind::FormsOnly) {
        println!("{:<20} {} (forms only)", p.name, p.summary);
    }
}

fn describe(name: &str) -> Result<()> {
    let p = presets::find(name)?;
    let e = &p.expected;
    println!("{}: {}", p.name, p.summary);
    println!("recipe: {}", p.recipe);
    println!("r = {}, s = {}, sign convention {}", p.r, p.s, p.sign);
    println!("expected algebra {} of dimension {}, grades {:?}, Killing signature {:?}", e.algebra, e.total, e.grade_dims, e.killing_signature);
    Ok(())
}

fn run(name: &str, opts: &RunOptions, format: Format, out: Option<&PathBuf>) -> Result<bool> {
    let result = pipeline::run_preset(name, opts)?;
    let report = &result.report;
    let json = serde_json::to_string_pretty(report)? + "\n";
    let text = report.to_text();
    match format {
        Format::Json => print!("{json}"),
        _ => print!("{text}"),
    }
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        std::fs::write(dir.join("report.json"), &json)?;
        std::fs::write(dir.join("report.txt"), &text)?;
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::List => {
            list();
            Ok(true)
        }
        Command::Describe { preset } => describe(&preset).map(|_| true),
        Command::Run { preset, opts, format, out } => run(&preset, &opts.options(), format.into(), out.as_ref()),
        Command::Export { preset, item, format, opts } => (|| {
            if opts.oracle {
                bail!("--oracle has no effect on export");
            }
            let result = pipeline::run_preset(&preset, &opts.options())?;
            let text = pipeline::export(&result, item.into(), format.into()).map_err(|e| anyhow!(e))?;
            print!("{text}");
            Ok(true)
        })(),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
