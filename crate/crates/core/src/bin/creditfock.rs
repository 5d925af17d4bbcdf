use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use creditfock::exciton1d;
use creditfock::scenario::exciton::parse_exciton_config;
use creditfock::scenario::{self, presets, ConfigError, OutputFormat, ScenarioConfig};
use creditfock::{selftest, Error};

#[derive(Parser)]
#[command(
    name = "creditfock",
    version,
    about = "Money-debt pair dynamics in a fermionic Fock space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file (or `preset:NAME`) and export its time series.
    Run {
        config: String,
        /// Directory for `<name>.csv` / `<name>.jsonl`; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Export only this format (csv or jsonl).
        #[arg(long)]
        format: Option<String>,
    },
    /// Check a scenario file and list every problem.
    Validate { config: String },
    /// Eigenvalues of the static Hamiltonian of a scenario.
    Spectrum { config: String },
    /// Solve a 1-D exciton config.
    Exciton1d {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inspect the preset library.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
    /// Run the invariant battery.
    Selftest,
}

#[derive(Subcommand)]
enum PresetAction {
    List,
    Show { name: String },
}

enum Failure {
    Validation(String),
    Runtime(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Runtime(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Runtime(m) | Failure::Io(m) => m,
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e.root() {
            Error::Io(_) => Failure::Io(e.to_string()),
            Error::UnsupportedFormat(_) => Failure::Validation(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn load_config(arg: &str) -> Result<ScenarioConfig, Failure> {
    if let Some(name) = arg.strip_prefix("preset:") {
        return Ok(presets::load(name)?);
    }
    let path = Path::new(arg);
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(scenario::parse_scenario(&text)?)
}

/// Writes to stdout; a closed pipe (e.g. `| head`) ends output quietly.
fn emit(text: &str) -> Result<(), Failure> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Failure::Io(format!("stdout: {e}")))
        }
        _ => Ok(()),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn run(config: &str, out: Option<PathBuf>, format: Option<String>) -> Result<(), Failure> {
    let cfg = load_config(config)?;
    let formats = match format {
        Some(f) => vec![f.parse::<OutputFormat>()?],
        None => cfg.outputs.clone(),
    };
    let result = scenario::run_scenario(&cfg)?;
    match out {
        None => emit(&scenario::export_series(&result, formats[0]))?,
        Some(dir) => {
            std::fs::create_dir_all(&dir).map_err(|e| io_failure(&dir, e))?;
            for f in formats {
                let path = dir.join(format!("{}.{}", cfg.name, f.extension()));
                write_file(&path, &scenario::export_series(&result, f))?;
                eprintln!("wrote {}", path.display());
            }
        }
    }
    let m = &result.metadata;
    eprintln!(
        "{}: {} steps, norm drift {:e}, config {}",
        m.scenario, m.n_steps, m.norm_drift, m.config_hash
    );
    for ev in &result.events {
        eprintln!("event {} at t = {}: {}", ev.index, ev.t, ev.outcome);
    }
    Ok(())
}

fn spectrum(config: &str) -> Result<(), Failure> {
    let cfg = load_config(config)?;
    let mut text = String::from("n,energy\n");
    for (i, e) in scenario::spectrum(&cfg)?.iter().enumerate() {
        text.push_str(&format!("{i},{e:.16e}\n"));
    }
    emit(&text)
}

fn exciton(config: &Path, out: Option<PathBuf>) -> Result<(), Failure> {
    let text = std::fs::read_to_string(config).map_err(|e| io_failure(config, e))?;
    let cfg = parse_exciton_config(&text)?;
    let base = config.parent().unwrap_or(Path::new("."));
    let result = cfg.solve(base)?;
    let energies = exciton1d::energies_csv(&result);
    match out {
        None => emit(&energies)?,
        Some(dir) => {
            std::fs::create_dir_all(&dir).map_err(|e| io_failure(&dir, e))?;
            write_file(&dir.join(format!("{}_energies.csv", cfg.name)), &energies)?;
            if cfg.wavefunctions {
                let path = dir.join(format!("{}_wavefunctions.csv", cfg.name));
                write_file(&path, &exciton1d::wavefunctions_csv(&result))?;
            }
        }
    }
    Ok(())
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Run {
            config,
            out,
            format,
        } => run(&config, out, format),
        Command::Validate { config } => {
            let cfg = load_config(&config)?;
            println!(
                "{}: valid (config {})",
                cfg.name,
                scenario::config_hash(&cfg)
            );
            Ok(())
        }
        Command::Spectrum { config } => spectrum(&config),
        Command::Exciton1d { config, out } => exciton(&config, out),
        Command::Presets { action } => match action {
            PresetAction::List => {
                for name in presets::names() {
                    let cfg = presets::load(name)?;
                    println!("{name}\t{}", cfg.description.unwrap_or_default());
                }
                Ok(())
            }
            PresetAction::Show { name } => {
                let text = presets::source(&name)
                    .ok_or_else(|| Failure::Validation(format!("unknown preset `{name}`")))?;
                emit(text)
            }
        },
        Command::Selftest => {
            let checks = selftest::run();
            for c in &checks {
                println!(
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            match checks.iter().filter(|c| !c.passed).count() {
                0 => Ok(()),
                n => Err(Failure::Runtime(format!("{n} selftest checks failed"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
