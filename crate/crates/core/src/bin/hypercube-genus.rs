use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use hypercube_genus::cube_complex::Dimension;
use hypercube_genus::decomposition::CycleDecomposition;
use hypercube_genus::mesh::{export_mesh, Projection};
use hypercube_genus::report::{self, RunReport, DEFAULT_BUILD_LIMIT};
use hypercube_genus::surface::{build_cycle_surface, ColorCycle, Surface};
use hypercube_genus::Error;

#[derive(Parser)]
#[command(
    name = "hypercube-genus",
    version,
    about = "Build and certify genus embeddings of hypercube graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format on stdout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Include wall time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProjectionKind {
    Random,
    Axis,
}

#[derive(Subcommand)]
enum Command {
    /// Build T(Z) and certify it.
    Build {
        #[arg(long)]
        n: u32,
        /// Hamiltonian color cycle, e.g. 1,3,5,2,4 (default 1,2,...,n).
        #[arg(long)]
        cycle: Option<String>,
        /// Write the surface JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and certify a parallel family of surfaces.
    Family {
        #[arg(long)]
        n: u32,
        /// JSON list of color cycles; defaults to a Hamiltonian decomposition (odd n).
        #[arg(long)]
        decomposition: Option<PathBuf>,
        /// Write the family summary JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-certify a serialized surface.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Genus table for n = 3..=n_max.
    Table {
        #[arg(long = "n-max", alias = "n")]
        n_max: u32,
        /// Largest n for which a surface is actually built.
        #[arg(long, default_value_t = DEFAULT_BUILD_LIMIT)]
        build_limit: u32,
    },
    /// Export a certified surface as an OFF mesh.
    Export {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        cycle: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ProjectionKind::Random)]
        projection: ProjectionKind,
        /// OFF destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search the 2-skeleton of H_n for an orientation-reversing face strip.
    Mobius {
        #[arg(long)]
        n: u32,
    },
}

fn emit(report: &mut RunReport, format: Format, started: Option<Instant>) -> Result<(), Error> {
    if let Some(t) = started {
        report.wall_time_ms = Some(t.elapsed().as_millis() as u64);
    }
    match format {
        Format::Json => print!("{}", report.to_json()?),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Error> {
    let started = cli.timing.then(Instant::now);
    let format = cli.format;
    match cli.command {
        Command::Build { n, cycle, out } => {
            let n = Dimension::new(n)?;
            let cycle = cycle.map(|c| c.parse::<ColorCycle>()).transpose()?;
            let (mut report, surface) = report::run_build(n, cycle)?;
            if let Some(path) = out {
                fs::write(path, surface.to_json()? + "\n")?;
            }
            emit(&mut report, format, started)?;
            Ok(report.passed)
        }
        Command::Family { n, decomposition, out } => {
            let n = Dimension::new(n)?;
            let d = decomposition
                .map(|p| CycleDecomposition::from_json(n, &fs::read_to_string(p)?))
                .transpose()?;
            let (mut report, family) = report::run_family(n, d)?;
            if let Some(path) = out {
                fs::write(path, serde_json::to_string_pretty(&family.summary())? + "\n")?;
            }
            emit(&mut report, format, started)?;
            Ok(report.passed)
        }
        Command::Verify { input } => {
            let surface = Surface::from_json(&fs::read_to_string(&input)?)?;
            let mut report = report::run_verify(&surface, Some(input.display().to_string()));
            emit(&mut report, format, started)?;
            Ok(report.passed)
        }
        Command::Table { n_max, build_limit } => {
            let mut report = report::run_table(n_max, build_limit)?;
            emit(&mut report, format, started)?;
            Ok(report.passed)
        }
        Command::Export {
            n,
            cycle,
            seed,
            projection,
            out,
        } => {
            let n = Dimension::new(n)?;
            let cycle = match cycle {
                Some(c) => c.parse::<ColorCycle>()?,
                None => ColorCycle::identity(n)?,
            };
            let surface = build_cycle_surface(n, &cycle)?;
            let projection = match projection {
                ProjectionKind::Random => Projection::Random { seed },
                ProjectionKind::Axis => Projection::Axis,
            };
            let mesh = export_mesh(&surface, projection)?;
            let off = mesh.to_off();
            match out {
                Some(path) => {
                    fs::write(path, off)?;
                    let mut report = report::run_verify(&surface, None);
                    report.command = "export".to_string();
                    report.parameters.seed = Some(seed);
                    report.parameters.projection = Some(projection.name().to_string());
                    emit(&mut report, format, started)?;
                    Ok(report.passed)
                }
                None => {
                    print!("{off}");
                    Ok(true)
                }
            }
        }
        Command::Mobius { n } => {
            let mut report = report::run_mobius(Dimension::new(n)?);
            emit(&mut report, format, started)?;
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
