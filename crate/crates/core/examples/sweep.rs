//! Thickness sweep from a TOML description, written as CSV.
//!
//! ```text
//! cargo run --release --example sweep [config.toml] [out.csv]
//! ```
//!
//! Without arguments a built-in description is used and the CSV is printed.

use aniso_casimir::sweep::{emit_csv, run_sweep, write_csv, SweepConfig};

const DEFAULT_CONFIG: &str = r#"
temperature = 300.0
a_min = 1e-9
a_max = 1e-6
points = 13
spacing = "log"
modes = ["exact", "nonrel", "classical"]

[stack]
left = "SiO2"
film_xx = "BeO_xx"
film_zz = "BeO_zz"
right = "glass"

[materials.glass]
kind = "oscillator_sum"
terms = [
    { strength = 1.25, frequency = 2.0e16 },
]
"#;

fn main() -> aniso_casimir::Result<()> {
    env_logger::init();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let config = match args.first() {
        Some(path) => SweepConfig::load(path)?,
        None => SweepConfig::from_toml_str(DEFAULT_CONFIG)?,
    };
    let result = run_sweep(&config, &config.registry()?)?;
    match args.get(1) {
        Some(out) => {
            emit_csv(&result, out)?;
            eprintln!("wrote {} rows to {out}", result.rows.len());
        }
        None => write_csv(&result, std::io::stdout().lock())?,
    }
    for row in result.rows.iter().filter(|r| r.failed()) {
        eprintln!("a = {:e}: {}", row.a, row.error.as_deref().unwrap_or(""));
    }
    Ok(())
}
