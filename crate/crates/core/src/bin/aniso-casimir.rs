//! Thickness sweeps and figure presets from the command line.
//!
//! Precedence: a `--config` file replaces the sweep flags entirely; `--out`
//! only applies when the config file names no output. `--figure` ignores the
//! sweep flags and writes `<preset>_<curve>.csv` plus `<preset>.gp` into the
//! `--out` directory (default: current directory).
//!
//! Exit codes: 0 success, 1 usage error, 2 computation failure (any row
//! failed), 3 I/O error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use aniso_casimir::sweep::{
    figure_preset, run_figure, run_sweep, write_csv, write_figure, Mode, Spacing, StackSpec, SweepConfig,
    SweepResult,
};
use aniso_casimir::Error;
use clap::Parser;

#[derive(Debug, Parser)]
#[command(name = "aniso-casimir", version, about = "Casimir pressure across an anisotropic film")]
struct Cli {
    /// left,film_xx,film_zz,right material names
    #[arg(long)]
    stack: Option<StackSpec>,
    /// Temperature in K
    #[arg(long, default_value_t = 300.0)]
    temperature: f64,
    /// Smallest film thickness in m
    #[arg(long)]
    a_min: Option<f64>,
    /// Largest film thickness in m
    #[arg(long)]
    a_max: Option<f64>,
    #[arg(long, default_value_t = 50)]
    points: usize,
    /// log or linear
    #[arg(long, default_value = "log")]
    spacing: Spacing,
    /// Comma-separated subset of exact,nonrel,classical
    #[arg(long, value_delimiter = ',', default_value = "exact,nonrel,classical")]
    modes: Vec<Mode>,
    /// fig1, fig2a, fig2b, fig3, table_dpnr or table_dpcl
    #[arg(long, conflicts_with_all = ["stack", "config"])]
    figure: Option<String>,
    /// CSV file (sweeps; stdout if absent) or directory (figures)
    #[arg(long)]
    out: Option<PathBuf>,
    /// TOML sweep description; overrides the sweep flags
    #[arg(long)]
    config: Option<PathBuf>,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Io { .. } | Error::Csv(_) => 3,
        Error::InvalidInput(_)
        | Error::UnknownMaterial(_)
        | Error::UnknownPreset(_)
        | Error::Config(_)
        | Error::Domain(_) => 1,
        _ => 2,
    }
}

fn report_failures(results: &[SweepResult]) -> u8 {
    let mut failed = 0;
    for result in results {
        for row in result.rows.iter().filter(|r| r.failed()) {
            eprintln!("a = {:e} m: {}", row.a, row.error.as_deref().unwrap_or(""));
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} point(s) failed");
        2
    } else {
        0
    }
}

fn sweep_from_flags(cli: &Cli) -> aniso_casimir::Result<SweepConfig> {
    let stack = cli
        .stack
        .clone()
        .ok_or_else(|| Error::InvalidInput("one of --stack, --config or --figure is required".into()))?;
    let (Some(a_min), Some(a_max)) = (cli.a_min, cli.a_max) else {
        return Err(Error::InvalidInput("--a-min and --a-max are required with --stack".into()));
    };
    let mut cfg = SweepConfig::new(stack, a_min, a_max, cli.points).with_modes(&cli.modes);
    cfg.temperature = cli.temperature;
    cfg.spacing = cli.spacing;
    cfg.output = cli.out.clone();
    Ok(cfg)
}

fn run(cli: &Cli) -> aniso_casimir::Result<u8> {
    if let Some(name) = &cli.figure {
        let preset = figure_preset(name)?;
        let registry = aniso_casimir::materials::MaterialRegistry::builtin();
        let results = run_figure(&preset, &registry)?;
        let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
        for path in write_figure(&preset, &results, &dir)? {
            log::info!("wrote {}", path.display());
        }
        return Ok(report_failures(&results));
    }

    let cfg = match &cli.config {
        Some(path) => {
            let mut cfg = SweepConfig::load(path)?;
            if cfg.output.is_none() {
                cfg.output = cli.out.clone();
            }
            cfg
        }
        None => sweep_from_flags(cli)?,
    };
    let result = run_sweep(&cfg, &cfg.registry()?)?;
    match &cfg.output {
        Some(path) => aniso_casimir::sweep::emit_csv(&result, path)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_csv(&result, &mut lock)?;
            lock.flush().map_err(|e| Error::Io {
                path: "<stdout>".into(),
                source: e,
            })?;
        }
    }
    Ok(report_failures(std::slice::from_ref(&result)))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
