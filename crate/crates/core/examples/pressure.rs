//! Exact Lifshitz pressure and free energy across a BeO film.
//!
//! ```text
//! cargo run --release --example pressure
//! ```

use aniso_casimir::prelude::*;

fn main() -> aniso_casimir::Result<()> {
    let registry = MaterialRegistry::builtin();
    let qspec = QuadratureSpec::default();
    let sspec = SeriesSpec::default();

    for (left, right) in [("SiO2", "SiO2"), ("Au_plasma", "Au_plasma"), ("Au_plasma", "SiO2")] {
        let stack = LayerStack::from_names(&registry, left, "BeO_xx", "BeO_zz", right)?;
        println!("\n{left} | BeO | {right}");
        println!(
            "{:>10} {:>14} {:>14} {:>8} {:>8} {:>7}",
            "a (nm)", "P (Pa)", "F (J/m^2)", "TM", "TE", "terms"
        );
        for a in [2e-9, 10e-9, 100e-9, 1e-6] {
            let geom = ThermalGeometry::new(a, 300.0)?;
            let r = casimir_pressure(&stack, &geom, &qspec, &sspec)?;
            println!(
                "{:>10.1} {:>14.5e} {:>14.5e} {:>8.4} {:>8.4} {:>7}",
                a * 1e9,
                r.pressure,
                r.free_energy,
                r.tm_share,
                r.te_share,
                r.terms_used
            );
        }
    }

    // How much the anisotropy matters: compare with an isotropic film of the
    // same in-plane permittivity.
    let stack = LayerStack::from_names(&registry, "SiO2", "BeO_xx", "BeO_zz", "SiO2")?;
    let geom = ThermalGeometry::new(10e-9, 300.0)?;
    let aniso = casimir_pressure(&stack, &geom, &qspec, &sspec)?.pressure;
    let iso = casimir_pressure(&stack.isotropized(), &geom, &qspec, &sspec)?.pressure;
    println!("\nat 10 nm, anisotropic / isotropic(xx) pressure = {:.4}", aniso / iso);
    Ok(())
}
