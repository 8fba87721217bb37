//! Reflection coefficients at the plate/film interfaces.
//!
//! Tabulates r_TM and r_TE on both sides of Au | BeO | SiO2 for a 100 nm film
//! at 300 K, as functions of the dimensionless wave number y.
//!
//! ```text
//! cargo run --example reflection
//! ```

use aniso_casimir::prelude::*;

fn main() -> aniso_casimir::Result<()> {
    let registry = MaterialRegistry::builtin();
    let stack = LayerStack::from_names(&registry, "Au_plasma", "BeO_xx", "BeO_zz", "SiO2")?;
    let grid = MatsubaraGrid::new(&ThermalGeometry::new(100e-9, 300.0)?);
    println!("tau = {:.5}", grid.tau);

    for l in [0usize, 1, 10] {
        let zeta = grid.zeta(l);
        let eps_xx = stack.film_xx.permittivity_at(grid.xi(l))?;
        let eps_zz = stack.film_zz.permittivity_at(grid.xi(l))?;
        // the TE lower limit is the larger one, so every y below is valid for both
        let y_min = eps_xx.max(eps_zz).sqrt() * zeta;
        println!("\nl = {l}, zeta = {zeta:.4}");
        println!("{:>10} {:>12} {:>12} {:>12} {:>12}", "y", "r_TM(Au)", "r_TM(SiO2)", "r_TE(Au)", "r_TE(SiO2)");
        for k in 0..6 {
            let y = y_min + k as f64 * 2.0;
            let point = SpectralPoint { l, y };
            println!(
                "{y:>10.4} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
                reflection_tm(&stack, Side::Minus, point, &grid)?,
                reflection_tm(&stack, Side::Plus, point, &grid)?,
                reflection_te(&stack, Side::Minus, point, &grid)?,
                reflection_te(&stack, Side::Plus, point, &grid)?,
            );
        }
    }

    let r = r_nonrel(&stack, 300.0, 1)?;
    println!("\nnonrelativistic coefficients at l = 1: Au {:.5}, SiO2 {:.5}", r[0], r[1]);
    Ok(())
}
