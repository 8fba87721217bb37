//! Regenerates a figure preset: one CSV per curve plus a gnuplot script.
//!
//! ```text
//! cargo run --release --example figure -- fig3 out/
//! gnuplot -e "cd 'out'" out/fig3.gp
//! ```

use aniso_casimir::materials::MaterialRegistry;
use aniso_casimir::sweep::{figure_preset, run_figure, write_figure, FigureName};

fn main() -> aniso_casimir::Result<()> {
    env_logger::init();
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "table_dpnr".to_string());
    let dir = args.next().unwrap_or_else(|| "figures".to_string());

    let preset = figure_preset(&name)?;
    let results = run_figure(&preset, &MaterialRegistry::builtin())?;
    for path in write_figure(&preset, &results, &dir)? {
        println!("wrote {}", path.display());
    }

    if matches!(preset.name, FigureName::TableDpnr | FigureName::TableDpcl) {
        for (cfg, result) in preset.series.iter().zip(&results) {
            print!("{:<12}", cfg.label);
            for row in &result.rows {
                let delta = row.delta_nr.or(row.delta_cl).map(|d| 100.0 * d);
                match delta {
                    Some(d) => print!("{d:>10.2}%"),
                    None => print!("{:>11}", "-"),
                }
            }
            println!();
        }
    }
    Ok(())
}
