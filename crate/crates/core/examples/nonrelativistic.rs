//! Nonrelativistic limit and its error at small film thicknesses.
//!
//! ```text
//! cargo run --release --example nonrelativistic
//! ```

use aniso_casimir::prelude::*;

fn main() -> aniso_casimir::Result<()> {
    let registry = MaterialRegistry::builtin();
    let qspec = QuadratureSpec::default();
    let sspec = SeriesSpec::default();
    let stacks = [
        ("SiO2 | BeO | SiO2", ["SiO2", "BeO_xx", "BeO_zz", "SiO2"]),
        ("SiO2 | vacuum | SiO2", ["SiO2", "vacuum", "vacuum", "SiO2"]),
        ("Au | BeO | Au", ["Au_plasma", "BeO_xx", "BeO_zz", "Au_plasma"]),
    ];

    for (title, [l, xx, zz, r]) in stacks {
        let stack = LayerStack::from_names(&registry, l, xx, zz, r)?;
        println!("\n{title}");
        println!("{:>8} {:>14} {:>14} {:>10}", "a (nm)", "P (Pa)", "P_nr (Pa)", "dP_nr (%)");
        for a in [1e-9, 2e-9, 5e-9, 10e-9] {
            let geom = ThermalGeometry::new(a, 300.0)?;
            let exact = casimir_pressure(&stack, &geom, &qspec, &sspec)?.pressure;
            let nr = nonrel_free_energy_pressure(&stack, &geom, &sspec)?.pressure;
            println!(
                "{:>8.1} {:>14.5e} {:>14.5e} {:>10.3}",
                a * 1e9,
                exact,
                nr,
                ErrorMetric::between(nr, exact)?.percent()
            );
        }
    }
    Ok(())
}
