use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use repdim_cli::{
    cmd_dot, cmd_generator, cmd_gldim, cmd_torsion, cmd_validate, cmd_verify, CliError, Component, InstanceSpec, Report,
    SpecOptions,
};

/// Auslander generators of tame cluster-tilted algebras, checked over exact
/// rational arithmetic.
#[derive(Parser)]
#[command(name = "repdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the instance file describes a tilting module.
    Validate(Common),
    /// Torsion class of T and its maximal cones.
    Torsion(Common),
    /// The generator M' and the quiver of B.
    Generator(Common),
    /// Resolution certificate over the sample window.
    Verify(Common),
    /// gl.dim End(M') and the representation-dimension verdict.
    Gldim(Common),
    /// DOT picture of one component.
    Dot {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "tubes")]
        component: Component,
    },
}

#[derive(Args)]
struct Common {
    /// Instance file (JSON).
    #[arg(long)]
    spec: PathBuf,
    /// Largest transjective power of the sample window.
    #[arg(long)]
    window: Option<usize>,
    /// Largest tube level of the sample window.
    #[arg(long)]
    levels: Option<usize>,
    /// Enlarge the slice so that M' contains every preinjective τ²T_i.
    #[arg(long)]
    cogenerator: bool,
    /// Write the JSON twin of the report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Cutoff for projective dimensions.
    #[arg(long)]
    cutoff: Option<usize>,
}

impl Common {
    fn load(&self) -> Result<InstanceSpec, CliError> {
        let overrides = SpecOptions {
            window: self.window,
            levels: self.levels,
            cogenerator: self.cogenerator,
            cutoff: self.cutoff,
            ..Default::default()
        };
        Ok(InstanceSpec::load(&self.spec)?.with_overrides(&overrides))
    }
}

fn run(command: &Command) -> Result<Report, CliError> {
    let (common, spec) = match command {
        Command::Validate(c) | Command::Torsion(c) | Command::Generator(c) | Command::Verify(c) | Command::Gldim(c) => {
            (c, c.load()?)
        }
        Command::Dot { common, .. } => (common, common.load()?),
    };
    let report = match command {
        Command::Validate(_) => cmd_validate(&spec)?,
        Command::Torsion(_) => cmd_torsion(&spec)?,
        Command::Generator(_) => cmd_generator(&spec)?,
        Command::Verify(_) => cmd_verify(&spec)?,
        Command::Gldim(_) => cmd_gldim(&spec)?,
        Command::Dot { component, .. } => cmd_dot(&spec, *component)?,
    };
    if let Some(path) = &common.json {
        let body = serde_json::to_string_pretty(&report.json).expect("reports serialize");
        std::fs::write(path, body + "\n")
            .map_err(|e| CliError::Output { path: path.display().to_string(), message: e.to_string() })?;
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(report.outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
