//! Closed-form limits of the Lifshitz result and their deviation from it.
//!
//! * Nonrelativistic (van der Waals) limit: only TM survives and, with
//!   `r_nr = (ε − √(ε_xx ε_zz))/(ε + √(ε_xx ε_zz))`, every Matsubara term
//!   reduces to `(ε_zz/ε_xx)·Li₃(r_nr⁺ r_nr⁻)`.
//! * Classical (high temperature) limit: only `l = 0` survives. Dielectric
//!   plates give `Li₃` of the static TM reflection product; one metal plate
//!   sets its factor to one; two metal plates add a TE contribution expanded
//!   to second order in the penetration depth `δ₀ = c/ω_p`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::lifshitz::{casimir_pressure, LayerStack, Side, ThermalGeometry};
use crate::materials::{DielectricModel, CONSTANTS};
use crate::numerics::{li3_unchecked, sum_matsubara, QuadratureSpec, SeriesSpec, ZETA_3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Nonrelativistic,
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitResult {
    /// J/m².
    pub free_energy: f64,
    /// Pa.
    pub pressure: f64,
    pub regime: Regime,
}

/// Signed relative deviation `(|P_approx| − |P|)/|P|`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ErrorMetric(pub f64);

impl ErrorMetric {
    pub fn between(approx: f64, exact: f64) -> Result<Self> {
        if exact == 0.0 || !exact.is_finite() {
            return Err(Error::UndefinedMetric);
        }
        Ok(ErrorMetric((approx.abs() - exact.abs()) / exact.abs()))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn percent(self) -> f64 {
        100.0 * self.0
    }
}

fn nonrel_coefficient(plate: &DielectricModel, xi: f64, film: f64) -> Result<f64> {
    match plate.permittivity_at(xi) {
        Ok(eps) => Ok((eps - film) / (eps + film)),
        Err(Error::DivergentPermittivity { .. }) => Ok(1.0),
        Err(e) => Err(e),
    }
}

/// Nonrelativistic reflection coefficients `[r⁻, r⁺]` at Matsubara index `l`.
/// Infinite plate permittivity gives exactly one.
/// `ξ_1 = 2π k_B T/ħ`.
fn matsubara_step(temperature: f64) -> Result<f64> {
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "temperature must be positive, got {temperature}"
        )));
    }
    Ok(2.0 * PI * CONSTANTS.boltzmann_k * temperature / CONSTANTS.hbar)
}

pub fn r_nonrel(stack: &LayerStack, temperature: f64, l: usize) -> Result<[f64; 2]> {
    let xi = matsubara_step(temperature)? * l as f64;
    let film = (stack.film_xx.permittivity_at(xi)? * stack.film_zz.permittivity_at(xi)?).sqrt();
    Ok([
        nonrel_coefficient(stack.plate(Side::Minus), xi, film)?,
        nonrel_coefficient(stack.plate(Side::Plus), xi, film)?,
    ])
}

/// `Σ'_l (ε_zz,l/ε_xx,l) Li₃(r_nr⁺ r_nr⁻)`; independent of the separation.
pub fn nonrel_matsubara_sum(stack: &LayerStack, temperature: f64, sspec: &SeriesSpec) -> Result<f64> {
    let step = matsubara_step(temperature)?;
    let sum = sum_matsubara(
        |l| {
            let xi = step * l as f64;
            let exx = stack.film_xx.permittivity_at(xi)?;
            let ezz = stack.film_zz.permittivity_at(xi)?;
            let film = (exx * ezz).sqrt();
            let rm = nonrel_coefficient(&stack.plate_minus, xi, film)?;
            let rp = nonrel_coefficient(&stack.plate_plus, xi, film)?;
            Ok(ezz / exx * li3_unchecked(rm * rp))
        },
        sspec,
    )?;
    Ok(sum.value)
}

pub fn nonrel_free_energy_pressure(
    stack: &LayerStack,
    geom: &ThermalGeometry,
    sspec: &SeriesSpec,
) -> Result<LimitResult> {
    let s = nonrel_matsubara_sum(stack, geom.temperature, sspec)?;
    let kt = CONSTANTS.boltzmann_k * geom.temperature;
    let a = geom.separation;
    Ok(LimitResult {
        free_energy: -kt / (8.0 * PI * a * a) * s,
        pressure: -kt / (4.0 * PI * a.powi(3)) * s,
        regime: Regime::Nonrelativistic,
    })
}

/// Static TM reflection coefficient of a dielectric plate against the film.
fn static_tm(plate: &DielectricModel, film: f64) -> Result<f64> {
    let eps = plate.permittivity_at(0.0)?;
    Ok((eps - film) / (eps + film))
}

/// Closed-form classical free energy and pressure.
pub fn classical_limit(stack: &LayerStack, geom: &ThermalGeometry) -> Result<LimitResult> {
    let exx = stack.film_xx.permittivity_at(0.0)?;
    let ezz = stack.film_zz.permittivity_at(0.0)?;
    let ratio = ezz / exx;
    let film = (exx * ezz).sqrt();
    let kt = CONSTANTS.boltzmann_k * geom.temperature;
    let a = geom.separation;
    let energy_scale = -kt / (16.0 * PI * a * a);
    let pressure_scale = -kt / (8.0 * PI * a.powi(3));

    let (minus, plus) = (&stack.plate_minus, &stack.plate_plus);
    let (free_energy, pressure) = match (minus.is_metal(), plus.is_metal()) {
        (false, false) => {
            let li = li3_unchecked(static_tm(minus, film)? * static_tm(plus, film)?);
            (energy_scale * ratio * li, pressure_scale * ratio * li)
        }
        (true, false) | (false, true) => {
            let dielectric = if minus.is_metal() { plus } else { minus };
            let li = li3_unchecked(static_tm(dielectric, film)?);
            (energy_scale * ratio * li, pressure_scale * ratio * li)
        }
        (true, true) => {
            let d_minus = minus.penetration_depth().unwrap_or(0.0);
            let d_plus = plus.penetration_depth().unwrap_or(0.0);
            if (d_minus - d_plus).abs() > 1e-12 * d_minus.max(d_plus) {
                return Err(Error::InvalidInput(
                    "classical closed form for two metals needs identical plates".into(),
                ));
            }
            let x = d_minus / a;
            let energy = energy_scale * ZETA_3 * (ratio + 1.0 - 4.0 * x + 12.0 * x * x);
            let pressure = pressure_scale * ZETA_3 * (ratio + 1.0 - 6.0 * x + 24.0 * x * x);
            (energy, pressure)
        }
    };
    Ok(LimitResult {
        free_energy,
        pressure,
        regime: Regime::Classical,
    })
}

/// `(|P_nr| − |P|)/|P|`.
pub fn retardation_error(
    stack: &LayerStack,
    geom: &ThermalGeometry,
    qspec: &QuadratureSpec,
    sspec: &SeriesSpec,
) -> Result<ErrorMetric> {
    let exact = casimir_pressure(stack, geom, qspec, sspec)?.pressure;
    let nr = nonrel_free_energy_pressure(stack, geom, sspec)?.pressure;
    ErrorMetric::between(nr, exact)
}

/// `(|P_cl| − |P|)/|P|`.
pub fn classicality_error(
    stack: &LayerStack,
    geom: &ThermalGeometry,
    qspec: &QuadratureSpec,
    sspec: &SeriesSpec,
) -> Result<ErrorMetric> {
    let exact = casimir_pressure(stack, geom, qspec, sspec)?.pressure;
    let cl = classical_limit(stack, geom)?.pressure;
    ErrorMetric::between(cl, exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::{au_plasma, beo_xx, beo_zz, sio2, vacuum};

    fn geom(a: f64) -> ThermalGeometry {
        ThermalGeometry::new(a, 300.0).unwrap()
    }

    fn stack(l: DielectricModel, r: DielectricModel) -> LayerStack {
        LayerStack::new(l, beo_xx(), beo_zz(), r).unwrap()
    }

    #[test]
    fn nonrel_coefficients() {
        let vac = LayerStack::new(vacuum(), vacuum(), vacuum(), vacuum()).unwrap();
        assert_eq!(r_nonrel(&vac, 300.0, 3).unwrap(), [0.0, 0.0]);
        let r = r_nonrel(&stack(sio2(), sio2()), 300.0, 0).unwrap();
        assert!((r[0] + 0.312_13).abs() < 1e-5);
        let r = r_nonrel(&stack(au_plasma(), sio2()), 300.0, 0).unwrap();
        assert_eq!(r[0], 1.0);
        let r = r_nonrel(&stack(au_plasma(), sio2()), 300.0, 1).unwrap();
        assert!(r[0] > 0.9 && r[0] < 1.0);
    }

    #[test]
    fn vacuum_limits_vanish() {
        let vac = LayerStack::new(vacuum(), vacuum(), vacuum(), vacuum()).unwrap();
        let nr = nonrel_free_energy_pressure(&vac, &geom(1e-8), &SeriesSpec::default()).unwrap();
        assert_eq!((nr.free_energy, nr.pressure), (0.0, 0.0));
        let cl = classical_limit(&vac, &geom(1e-6)).unwrap();
        assert_eq!((cl.free_energy, cl.pressure), (0.0, 0.0));
    }

    #[test]
    fn pressure_is_twice_energy_over_a() {
        let a = 3.7e-8;
        for s in [stack(sio2(), sio2()), stack(au_plasma(), sio2())] {
            for r in [
                nonrel_free_energy_pressure(&s, &geom(a), &SeriesSpec::default()).unwrap(),
                classical_limit(&s, &geom(a)).unwrap(),
            ] {
                assert!((r.pressure / (2.0 * r.free_energy / a) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn metal_brackets() {
        let a = 3e-6;
        let g = geom(a);
        let r = classical_limit(&stack(au_plasma(), au_plasma()), &g).unwrap();
        let kt = CONSTANTS.boltzmann_k * 300.0;
        let x = CONSTANTS.light_speed_c / (9.0 * CONSTANTS.ev_to_radps) / a;
        let ratio = 7.651 / 6.94;
        let p = -kt * ZETA_3 / (8.0 * PI * a.powi(3)) * (ratio + 1.0 - 6.0 * x + 24.0 * x * x);
        let f = -kt * ZETA_3 / (16.0 * PI * a * a) * (ratio + 1.0 - 4.0 * x + 12.0 * x * x);
        assert!((r.pressure / p - 1.0).abs() < 1e-12);
        assert!((r.free_energy / f - 1.0).abs() < 1e-12);
        assert!((x * a - 21.93e-9).abs() < 0.01e-9);
    }

    #[test]
    fn ideal_metals_isotropic_film() {
        let pc = DielectricModel::PerfectConductor;
        let s = LayerStack::new(pc.clone(), sio2(), sio2(), pc).unwrap();
        let a = 2e-6;
        let r = classical_limit(&s, &geom(a)).unwrap();
        let kt = CONSTANTS.boltzmann_k * 300.0;
        let expect = -kt * ZETA_3 / (4.0 * PI * a.powi(3));
        assert!((r.pressure / expect - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dissimilar_plates_repel_classically() {
        let r = classical_limit(&stack(au_plasma(), sio2()), &geom(2e-6)).unwrap();
        assert!(r.pressure > 0.0);
        let r = classical_limit(&stack(sio2(), au_plasma()), &geom(2e-6)).unwrap();
        assert!(r.pressure > 0.0);
    }

    #[test]
    fn dissimilar_metals_rejected() {
        let s = stack(au_plasma(), DielectricModel::PerfectConductor);
        assert!(classical_limit(&s, &geom(1e-6)).is_err());
    }

    #[test]
    fn anisotropy_ratio_is_linear() {
        // ε_zz doubled while the reflection product is held fixed: constant plates
        // with ε = √(ε_xx ε_zz)·(1+r)/(1−r) on both sides.
        let g = geom(1e-6);
        let build = |ezz: f64| {
            let exx = 2.0;
            let film = (exx * ezz).sqrt();
            let r = -0.3;
            let plate = DielectricModel::Constant { value: film * (1.0 + r) / (1.0 - r) };
            LayerStack::new(
                plate.clone(),
                DielectricModel::Constant { value: exx },
                DielectricModel::Constant { value: ezz },
                plate,
            )
            .unwrap()
        };
        let p1 = classical_limit(&build(3.0), &g).unwrap().pressure;
        let p2 = classical_limit(&build(6.0), &g).unwrap().pressure;
        assert!((p2 / p1 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn metric_needs_nonzero_exact() {
        assert!(matches!(ErrorMetric::between(1.0, 0.0), Err(Error::UndefinedMetric)));
        assert_eq!(ErrorMetric::between(-2.0, -2.0).unwrap().value(), 0.0);
        assert!((ErrorMetric::between(-1.1, -1.0).unwrap().value() - 0.1).abs() < 1e-12);
    }
}
