//! Classical (high temperature) limit at micrometre thicknesses.
//!
//! Compares the closed forms with the full Lifshitz result and with the
//! numerically integrated zero-frequency term alone.
//!
//! ```text
//! cargo run --release --example classical
//! ```

use aniso_casimir::prelude::*;

fn main() -> aniso_casimir::Result<()> {
    let registry = MaterialRegistry::builtin();
    let qspec = QuadratureSpec::default();
    let sspec = SeriesSpec::default();

    for (left, right) in [("SiO2", "SiO2"), ("Au_plasma", "SiO2"), ("Au_plasma", "Au_plasma")] {
        let stack = LayerStack::from_names(&registry, left, "BeO_xx", "BeO_zz", right)?;
        println!("\n{left} | BeO | {right}");
        println!(
            "{:>7} {:>13} {:>13} {:>13} {:>10}",
            "a (um)", "P (Pa)", "P_cl (Pa)", "P_l=0 (Pa)", "dP_cl (%)"
        );
        for a in [1.5e-6, 2e-6, 2.5e-6, 3e-6, 6e-6] {
            let geom = ThermalGeometry::new(a, 300.0)?;
            let exact = casimir_pressure(&stack, &geom, &qspec, &sspec)?.pressure;
            let cl = classical_limit(&stack, &geom)?.pressure;
            let zero = zero_frequency_term(&stack, &geom, &qspec)?.pressure;
            println!(
                "{:>7.2} {:>13.5e} {:>13.5e} {:>13.5e} {:>10.3}",
                a * 1e6,
                exact,
                cl,
                zero,
                ErrorMetric::between(cl, exact)?.percent()
            );
        }
    }
    Ok(())
}
