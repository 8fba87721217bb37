//! Dielectric permittivities along the imaginary frequency axis.
//!
//! Prints every built-in material at the first few Matsubara frequencies for
//! T = 300 K, then registers a custom material from TOML.
//!
//! ```text
//! cargo run --example materials
//! ```

use aniso_casimir::prelude::*;

fn main() -> aniso_casimir::Result<()> {
    let registry = MaterialRegistry::builtin();
    let grid = MatsubaraGrid::new(&ThermalGeometry::new(1e-8, 300.0)?);
    let ls = [0usize, 1, 5, 50, 500];

    print!("{:<18}", "material");
    for l in ls {
        print!("{:>14}", format!("l = {l}"));
    }
    println!();
    for (name, model) in registry.iter() {
        print!("{name:<18}");
        for l in ls {
            match model.permittivity_at(grid.xi(l)) {
                Ok(eps) => print!("{eps:>14.5}"),
                Err(_) => print!("{:>14}", "inf"),
            }
        }
        println!();
    }

    println!("\nxi_1 = {:.4e} rad/s", grid.xi_step);
    if let Some(delta) = registry.preset("Au_plasma")?.penetration_depth() {
        println!("Au penetration depth c/omega_p = {:.2} nm", delta * 1e9);
    }

    let custom = MaterialRegistry::from_toml_str(
        r#"
[materials.glass]
kind = "constant"
value = 2.25

[materials.two_band]
kind = "oscillator_sum"
terms = [
    { strength = 1.2, frequency = 2.0e16 },
    { strength = 0.8, frequency = 1.5e14 },
]
"#,
    )?;
    let mut extended = registry.clone();
    extended.extend(custom);
    println!("\nregistry now holds: {}", extended.names().collect::<Vec<_>>().join(", "));
    let two_band = extended.preset("two_band")?;
    println!("two_band static permittivity = {:.3}", two_band.permittivity_at(0.0)?);
    Ok(())
}
