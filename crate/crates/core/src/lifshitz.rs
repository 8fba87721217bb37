//! Lifshitz free energy and pressure for an isotropic | uniaxial | isotropic
//! stack, with the film's optical axis normal to the plates.
//!
//! Everything is evaluated in dimensionless form. With `ζ_l = 2aξ_l/c`, the
//! TM integral runs over `y = 2a·(k⊥² + ε_zz ξ_l²/c²)^{1/2}` and the TE
//! integral over `y = 2a·(k⊥² + ε_xx ξ_l²/c²)^{1/2}`, so that
//!
//! ```text
//! P = -k_B T/(8π a³) Σ'_l { √(ε_xx/ε_zz) ∫ y² dy [e^{√(ε_xx/ε_zz) y}/(r_TM r_TM) - 1]^{-1}
//!                            + ∫ y² dy [e^{y}/(r_TE r_TE) - 1]^{-1} }
//! F =  k_B T/(8π a²) Σ'_l { ∫ y dy ln[1 - r_TM r_TM e^{-√(ε_xx/ε_zz) y}]
//!                            + ∫ y dy ln[1 - r_TE r_TE e^{-y}] }
//! ```
//!
//! The free-energy form follows from `k⊥ dk⊥ = y dy / (4a²)` under either
//! substitution and `2a·k_TM = √(ε_xx/ε_zz)·y`.
//!
//! Sign convention: negative pressure is attraction.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::materials::{DielectricModel, MaterialRegistry, CONSTANTS};
use crate::numerics::{integrate_semi_infinite, sum_matsubara_multi, QuadratureSpec, SeriesSpec};

/// Smallest separation at which the macroscopic description is trusted.
pub const MIN_TRUSTED_SEPARATION: f64 = 1e-9;

/// Relative slack allowed when checking that `y` lies on its branch.
const BRANCH_SLACK: f64 = 1e-14;

/// Two isotropic half-spaces around a uniaxial film.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerStack {
    pub plate_minus: DielectricModel,
    pub plate_plus: DielectricModel,
    pub film_xx: DielectricModel,
    pub film_zz: DielectricModel,
}

impl LayerStack {
    pub fn new(
        plate_minus: DielectricModel,
        film_xx: DielectricModel,
        film_zz: DielectricModel,
        plate_plus: DielectricModel,
    ) -> Result<Self> {
        for m in [&plate_minus, &plate_plus, &film_xx, &film_zz] {
            m.validate()?;
        }
        if film_xx.is_metal() || film_zz.is_metal() {
            return Err(Error::InvalidInput(
                "the film must be a dielectric (finite static permittivity)".into(),
            ));
        }
        Ok(LayerStack {
            plate_minus,
            plate_plus,
            film_xx,
            film_zz,
        })
    }

    /// Builds a stack from registry names, in `left, film_xx, film_zz, right` order.
    pub fn from_names(
        registry: &MaterialRegistry,
        left: &str,
        film_xx: &str,
        film_zz: &str,
        right: &str,
    ) -> Result<Self> {
        Self::new(
            registry.preset(left)?,
            registry.preset(film_xx)?,
            registry.preset(film_zz)?,
            registry.preset(right)?,
        )
    }

    /// Same stack with the film made isotropic, `ε_zz := ε_xx`.
    pub fn isotropized(&self) -> Self {
        LayerStack {
            film_zz: self.film_xx.clone(),
            ..self.clone()
        }
    }

    pub fn plate(&self, side: Side) -> &DielectricModel {
        match side {
            Side::Minus => &self.plate_minus,
            Side::Plus => &self.plate_plus,
        }
    }
}

/// Which half-space bounds the film.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Minus,
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalGeometry {
    /// Film thickness, m.
    pub separation: f64,
    /// Temperature, K.
    pub temperature: f64,
}

impl ThermalGeometry {
    pub fn new(separation: f64, temperature: f64) -> Result<Self> {
        if !(separation > 0.0 && separation.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "separation must be positive, got {separation}"
            )));
        }
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "temperature must be positive, got {temperature}"
            )));
        }
        if separation < MIN_TRUSTED_SEPARATION {
            log::warn!(
                "separation {separation:e} m is below {MIN_TRUSTED_SEPARATION:e} m, where continuum electrodynamics is unreliable"
            );
        }
        Ok(ThermalGeometry {
            separation,
            temperature,
        })
    }

    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        Self::new(separation, self.temperature)
    }
}

/// Matsubara ladder for a given geometry: `ξ_l = 2π k_B T l/ħ`, `ζ_l = τ l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsubaraGrid {
    /// `τ = 4π a k_B T / (c ħ)`.
    pub tau: f64,
    /// `ω_c = c / (2a)`, rad/s.
    pub characteristic_omega: f64,
    /// First Matsubara frequency `ξ_1`, rad/s.
    pub xi_step: f64,
    separation: f64,
}

impl MatsubaraGrid {
    pub fn new(geom: &ThermalGeometry) -> Self {
        let xi_step = 2.0 * PI * CONSTANTS.boltzmann_k * geom.temperature / CONSTANTS.hbar;
        let characteristic_omega = CONSTANTS.light_speed_c / (2.0 * geom.separation);
        MatsubaraGrid {
            tau: xi_step / characteristic_omega,
            characteristic_omega,
            xi_step,
            separation: geom.separation,
        }
    }

    pub fn xi(&self, l: usize) -> f64 {
        self.xi_step * l as f64
    }

    pub fn zeta(&self, l: usize) -> f64 {
        self.tau * l as f64
    }

    /// Converts `ε(iξ)·ξ²` (rad/s)² into the dimensionless `ε ζ²`.
    fn dimensionless_eps_xi2(&self, eps_xi2: f64) -> f64 {
        eps_xi2 / (self.characteristic_omega * self.characteristic_omega)
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }
}

/// One node `(l, y)` of the Matsubara sum and transverse integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    pub l: usize,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct PlateResponse {
    /// `ε_l` of the plate, `None` where it is infinite.
    eps: Option<f64>,
    /// `[ε_l − ε_zz,l] ζ_l²`, enters the TM coefficient.
    tm_shift: f64,
    /// `[ε_l − ε_xx,l] ζ_l²`, enters the TE coefficient; `+∞` for an ideal metal.
    te_shift: f64,
}

/// Film and plate response at one Matsubara frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatsubaraTerm {
    pub l: usize,
    pub zeta: f64,
    pub eps_xx: f64,
    pub eps_zz: f64,
    plates: [PlateResponse; 2],
}

impl MatsubaraTerm {
    pub fn new(stack: &LayerStack, grid: &MatsubaraGrid, l: usize) -> Result<Self> {
        let xi = grid.xi(l);
        let eps_xx = stack.film_xx.permittivity_at(xi)?;
        let eps_zz = stack.film_zz.permittivity_at(xi)?;
        let film_zz_xi2 = grid.dimensionless_eps_xi2(eps_zz * xi * xi);
        let film_xx_xi2 = grid.dimensionless_eps_xi2(eps_xx * xi * xi);
        let response = |model: &DielectricModel| -> Result<PlateResponse> {
            let eps = match model.permittivity_at(xi) {
                Ok(e) => Some(e),
                Err(Error::DivergentPermittivity { .. }) => None,
                Err(e) => return Err(e),
            };
            let plate_xi2 = grid.dimensionless_eps_xi2(model.eps_times_xi_squared(xi));
            Ok(PlateResponse {
                eps,
                tm_shift: plate_xi2 - film_zz_xi2,
                te_shift: plate_xi2 - film_xx_xi2,
            })
        };
        Ok(MatsubaraTerm {
            l,
            zeta: grid.zeta(l),
            eps_xx,
            eps_zz,
            plates: [response(&stack.plate_minus)?, response(&stack.plate_plus)?],
        })
    }

    fn plate(&self, side: Side) -> &PlateResponse {
        match side {
            Side::Minus => &self.plates[0],
            Side::Plus => &self.plates[1],
        }
    }

    /// Lower limit `√ε_zz ζ_l` of the TM integral.
    pub fn tm_lower(&self) -> f64 {
        self.eps_zz.sqrt() * self.zeta
    }

    /// Lower limit `√ε_xx ζ_l` of the TE integral.
    pub fn te_lower(&self) -> f64 {
        self.eps_xx.sqrt() * self.zeta
    }

    /// Decay rate `√(ε_xx/ε_zz)` of the TM exponential in `y`.
    pub fn tm_decay(&self) -> f64 {
        (self.eps_xx / self.eps_zz).sqrt()
    }

    /// TM coefficient without the branch check.
    pub fn r_tm(&self, side: Side, y: f64) -> f64 {
        let p = self.plate(side);
        let Some(eps) = p.eps else {
            return 1.0;
        };
        let film = (self.eps_xx * self.eps_zz).sqrt();
        if p.tm_shift == 0.0 {
            return (eps - film) / (eps + film);
        }
        let q = (y * y + p.tm_shift).max(0.0).sqrt();
        (eps * y - film * q) / (eps * y + film * q)
    }

    /// TE coefficient without the branch check.
    pub fn r_te(&self, side: Side, y: f64) -> f64 {
        let shift = self.plate(side).te_shift;
        if shift == 0.0 {
            return 0.0;
        }
        if shift.is_infinite() {
            return -1.0;
        }
        let q = (y * y + shift).max(0.0).sqrt();
        let s = y + q;
        if s == 0.0 {
            return 0.0;
        }
        // (y - q)/(y + q) rewritten to avoid cancellation
        -shift / (s * s)
    }

    fn tm_vanishes(&self) -> bool {
        self.plates.iter().any(|p| match p.eps {
            Some(eps) => p.tm_shift == 0.0 && eps == (self.eps_xx * self.eps_zz).sqrt(),
            None => false,
        })
    }

    fn te_vanishes(&self) -> bool {
        self.plates.iter().any(|p| p.te_shift == 0.0)
    }

    fn tm_product(&self, y: f64) -> f64 {
        self.r_tm(Side::Minus, y) * self.r_tm(Side::Plus, y)
    }

    fn te_product(&self, y: f64) -> f64 {
        self.r_te(Side::Minus, y) * self.r_te(Side::Plus, y)
    }

    /// TM and TE pieces of the pressure summand (TM already carries `√(ε_xx/ε_zz)`).
    pub fn pressure_parts(&self, qspec: &QuadratureSpec) -> Result<[f64; 2]> {
        let alpha = self.tm_decay();
        let tm = if self.tm_vanishes() || (-alpha * self.tm_lower()).exp() == 0.0 {
            0.0
        } else {
            let lower = self.tm_lower();
            alpha
                * integrate_semi_infinite(
                    |y| {
                        let y = y.max(lower);
                        let (x, gap) = round_trip(self.tm_product(y), alpha * y);
                        y * y * x / gap
                    },
                    lower,
                    qspec,
                )?
                .value
        };
        let te = if self.te_vanishes() || (-self.te_lower()).exp() == 0.0 {
            0.0
        } else {
            let lower = self.te_lower();
            integrate_semi_infinite(
                |y| {
                    let y = y.max(lower);
                    let (x, gap) = round_trip(self.te_product(y), y);
                    y * y * x / gap
                },
                lower,
                qspec,
            )?
            .value
        };
        Ok([tm, te])
    }

    /// TM and TE pieces of the free-energy summand.
    pub fn free_energy_parts(&self, qspec: &QuadratureSpec) -> Result<[f64; 2]> {
        let alpha = self.tm_decay();
        let tm = if self.tm_vanishes() || (-alpha * self.tm_lower()).exp() == 0.0 {
            0.0
        } else {
            let lower = self.tm_lower();
            integrate_semi_infinite(
                |y| {
                    let y = y.max(lower);
                    y * round_trip_log(self.tm_product(y), alpha * y)
                },
                lower,
                qspec,
            )?
            .value
        };
        let te = if self.te_vanishes() || (-self.te_lower()).exp() == 0.0 {
            0.0
        } else {
            let lower = self.te_lower();
            integrate_semi_infinite(
                |y| {
                    let y = y.max(lower);
                    y * round_trip_log(self.te_product(y), y)
                },
                lower,
                qspec,
            )?
            .value
        };
        Ok([tm, te])
    }
}

/// `(R e^{-d}, 1 - R e^{-d})` for the round-trip factor of reflection
/// product `R` and phase `d ≥ 0`, without cancellation when `R e^{-d} → 1`.
fn round_trip(r: f64, d: f64) -> (f64, f64) {
    let x = r * (-d).exp();
    let gap = if r > 0.0 {
        (1.0 - r) - r * (-d).exp_m1()
    } else {
        1.0 - x
    };
    (x, gap)
}

/// `ln(1 - R e^{-d})`.
fn round_trip_log(r: f64, d: f64) -> f64 {
    let (x, gap) = round_trip(r, d);
    if x > 0.5 {
        gap.ln()
    } else {
        (-x).ln_1p()
    }
}

fn check_branch(y: f64, lower: f64, polarization: &str) -> Result<()> {
    if y.is_finite() && y >= lower * (1.0 - BRANCH_SLACK) && y >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{polarization} branch needs y >= {lower}, got {y}"
        )))
    }
}

/// `r_TM^{(0,±1)}(iζ_l, y)`.
pub fn reflection_tm(
    stack: &LayerStack,
    side: Side,
    point: SpectralPoint,
    grid: &MatsubaraGrid,
) -> Result<f64> {
    let term = MatsubaraTerm::new(stack, grid, point.l)?;
    check_branch(point.y, term.tm_lower(), "TM")?;
    Ok(term.r_tm(side, point.y.max(term.tm_lower())))
}

/// `r_TE^{(0,±1)}(iζ_l, y)`.
pub fn reflection_te(
    stack: &LayerStack,
    side: Side,
    point: SpectralPoint,
    grid: &MatsubaraGrid,
) -> Result<f64> {
    let term = MatsubaraTerm::new(stack, grid, point.l)?;
    check_branch(point.y, term.te_lower(), "TE")?;
    Ok(term.r_te(side, point.y.max(term.te_lower())))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PressureResult {
    /// Pa; negative means attraction.
    pub pressure: f64,
    /// J/m².
    pub free_energy: f64,
    pub tm_share: f64,
    pub te_share: f64,
    pub terms_used: usize,
}

fn pressure_prefactor(geom: &ThermalGeometry) -> f64 {
    -CONSTANTS.boltzmann_k * geom.temperature / (8.0 * PI * geom.separation.powi(3))
}

fn free_energy_prefactor(geom: &ThermalGeometry) -> f64 {
    CONSTANTS.boltzmann_k * geom.temperature / (8.0 * PI * geom.separation.powi(2))
}

fn shares(tm: f64, te: f64) -> (f64, f64) {
    let total = tm + te;
    if total == 0.0 {
        (0.0, 0.0)
    } else {
        (tm / total, te / total)
    }
}

/// Pressure and free energy in one pass over the Matsubara ladder.
pub fn casimir_pressure(
    stack: &LayerStack,
    geom: &ThermalGeometry,
    qspec: &QuadratureSpec,
    sspec: &SeriesSpec,
) -> Result<PressureResult> {
    let grid = MatsubaraGrid::new(geom);
    let ([p_tm, p_te, f_tm, f_te], terms_used) = sum_matsubara_multi(
        |l| {
            let term = MatsubaraTerm::new(stack, &grid, l)?;
            let [p_tm, p_te] = term.pressure_parts(qspec)?;
            let [f_tm, f_te] = term.free_energy_parts(qspec)?;
            Ok([p_tm, p_te, f_tm, f_te])
        },
        sspec,
    )?;
    let (tm_share, te_share) = shares(p_tm, p_te);
    Ok(PressureResult {
        pressure: pressure_prefactor(geom) * (p_tm + p_te),
        free_energy: free_energy_prefactor(geom) * (f_tm + f_te),
        tm_share,
        te_share,
        terms_used,
    })
}

/// Free energy per unit area, J/m².
pub fn casimir_free_energy(
    stack: &LayerStack,
    geom: &ThermalGeometry,
    qspec: &QuadratureSpec,
    sspec: &SeriesSpec,
) -> Result<f64> {
    let grid = MatsubaraGrid::new(geom);
    let ([tm, te], _) = sum_matsubara_multi(
        |l| MatsubaraTerm::new(stack, &grid, l)?.free_energy_parts(qspec),
        sspec,
    )?;
    Ok(free_energy_prefactor(geom) * (tm + te))
}

/// The `l = 0` term alone (with its weight ½), evaluated numerically. This is
/// the untruncated counterpart of the classical closed forms.
pub fn zero_frequency_term(
    stack: &LayerStack,
    geom: &ThermalGeometry,
    qspec: &QuadratureSpec,
) -> Result<PressureResult> {
    let grid = MatsubaraGrid::new(geom);
    let term = MatsubaraTerm::new(stack, &grid, 0)?;
    let [p_tm, p_te] = term.pressure_parts(qspec)?;
    let [f_tm, f_te] = term.free_energy_parts(qspec)?;
    let (tm_share, te_share) = shares(p_tm, p_te);
    Ok(PressureResult {
        pressure: 0.5 * pressure_prefactor(geom) * (p_tm + p_te),
        free_energy: 0.5 * free_energy_prefactor(geom) * (f_tm + f_te),
        tm_share,
        te_share,
        terms_used: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::{au_plasma, beo_xx, beo_zz, sio2, vacuum};

    fn geom(a: f64) -> ThermalGeometry {
        ThermalGeometry::new(a, 300.0).unwrap()
    }

    fn sio2_beo_sio2() -> LayerStack {
        LayerStack::new(sio2(), beo_xx(), beo_zz(), sio2()).unwrap()
    }

    fn all_vacuum() -> LayerStack {
        LayerStack::new(vacuum(), vacuum(), vacuum(), vacuum()).unwrap()
    }

    #[test]
    fn grid_relations() {
        let g = MatsubaraGrid::new(&geom(1e-6));
        assert!((g.tau - 1.646).abs() < 1e-3);
        assert_eq!(g.zeta(0), 0.0);
        for l in 1..50 {
            let z = 2.0 * 1e-6 * g.xi(l) / CONSTANTS.light_speed_c;
            assert!((g.zeta(l) - z).abs() <= 1e-14 * z);
            assert!(g.zeta(l) > g.zeta(l - 1));
        }
    }

    #[test]
    fn rejects_metal_film_and_bad_geometry() {
        assert!(LayerStack::new(sio2(), au_plasma(), beo_zz(), sio2()).is_err());
        assert!(ThermalGeometry::new(0.0, 300.0).is_err());
        assert!(ThermalGeometry::new(1e-8, -1.0).is_err());
        // below the trusted range only warns
        assert!(ThermalGeometry::new(5e-10, 300.0).is_ok());
    }

    #[test]
    fn vacuum_has_no_contrast() {
        let s = all_vacuum();
        let g = MatsubaraGrid::new(&geom(1e-7));
        for l in [0, 1, 7, 100] {
            for y in [0.5, 3.0, 40.0] {
                let y = y + g.zeta(l);
                let p = SpectralPoint { l, y };
                assert_eq!(reflection_tm(&s, Side::Plus, p, &g).unwrap(), 0.0);
                assert_eq!(reflection_te(&s, Side::Minus, p, &g).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn static_dielectric_tm() {
        let g = MatsubaraGrid::new(&geom(1e-7));
        let film = (6.94f64 * 7.651).sqrt();
        let expect = (3.82 - film) / (3.82 + film);
        for y in [0.0, 0.3, 12.0] {
            let p = SpectralPoint { l: 0, y };
            let r = reflection_tm(&sio2_beo_sio2(), Side::Minus, p, &g).unwrap();
            assert!((r - expect).abs() < 1e-12, "{r}");
            assert_eq!(reflection_te(&sio2_beo_sio2(), Side::Minus, p, &g).unwrap(), 0.0);
        }
        assert!((expect + 0.312_13).abs() < 1e-5);
    }

    #[test]
    fn metals_at_zero_frequency() {
        let g = MatsubaraGrid::new(&geom(1e-7));
        let s = LayerStack::new(DielectricModel::PerfectConductor, beo_xx(), beo_zz(), au_plasma()).unwrap();
        let p = SpectralPoint { l: 0, y: 1.3 };
        assert_eq!(reflection_tm(&s, Side::Minus, p, &g).unwrap(), 1.0);
        assert_eq!(reflection_tm(&s, Side::Plus, p, &g).unwrap(), 1.0);
        assert_eq!(reflection_te(&s, Side::Minus, p, &g).unwrap(), -1.0);
    }

    #[test]
    fn plasma_te_at_its_own_scale() {
        let a = 1e-7;
        let g = MatsubaraGrid::new(&geom(a));
        let s = LayerStack::new(au_plasma(), beo_xx(), beo_zz(), sio2()).unwrap();
        let wp = 9.0 * CONSTANTS.ev_to_radps;
        let y = 2.0 * a * wp / CONSTANTS.light_speed_c;
        let r = reflection_te(&s, Side::Minus, SpectralPoint { l: 0, y }, &g).unwrap();
        let expect = (1.0 - 2f64.sqrt()) / (1.0 + 2f64.sqrt());
        assert!((r - expect).abs() < 1e-13);
        assert!((expect + 0.171_573).abs() < 1e-6);
    }

    #[test]
    fn branch_violation() {
        let g = MatsubaraGrid::new(&geom(1e-6));
        let s = sio2_beo_sio2();
        let t = MatsubaraTerm::new(&s, &g, 3).unwrap();
        let below = SpectralPoint { l: 3, y: 0.9 * t.tm_lower() };
        assert!(matches!(reflection_tm(&s, Side::Plus, below, &g), Err(Error::Domain(_))));
        let below = SpectralPoint { l: 3, y: 0.9 * t.te_lower() };
        assert!(matches!(reflection_te(&s, Side::Plus, below, &g), Err(Error::Domain(_))));
        // exactly on the limit is allowed
        let on = SpectralPoint { l: 3, y: t.tm_lower() };
        assert!(reflection_tm(&s, Side::Plus, on, &g).is_ok());
    }

    #[test]
    fn isotropic_film_merges_polarization_limits() {
        let s = sio2_beo_sio2().isotropized();
        let g = MatsubaraGrid::new(&geom(1e-7));
        for l in [0, 1, 10, 1000] {
            let t = MatsubaraTerm::new(&s, &g, l).unwrap();
            assert!((t.tm_lower() - t.te_lower()).abs() <= 1e-14 * t.te_lower().max(1.0));
            assert!((t.tm_decay() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn vacuum_pressure_is_zero() {
        let r = casimir_pressure(&all_vacuum(), &geom(1e-7), &QuadratureSpec::default(), &SeriesSpec::default()).unwrap();
        assert_eq!(r.pressure, 0.0);
        assert_eq!(r.free_energy, 0.0);
        let f = casimir_free_energy(&all_vacuum(), &geom(1e-7), &QuadratureSpec::default(), &SeriesSpec::default()).unwrap();
        assert_eq!(f, 0.0);
    }

    #[test]
    fn shares_sum_to_one() {
        let r = casimir_pressure(&sio2_beo_sio2(), &geom(1e-7), &QuadratureSpec::default(), &SeriesSpec::default()).unwrap();
        assert!(r.pressure < 0.0);
        assert!((r.tm_share + r.te_share - 1.0).abs() < 1e-12);
        assert!(r.terms_used > 5);
    }

    #[test]
    fn huge_separation_keeps_only_zero_term() {
        let s = sio2_beo_sio2();
        let g = geom(2e-3);
        let q = QuadratureSpec::default();
        let full = casimir_pressure(&s, &g, &q, &SeriesSpec::default()).unwrap();
        let zero = zero_frequency_term(&s, &g, &q).unwrap();
        assert_eq!(full.pressure, zero.pressure);
        assert_eq!(full.terms_used, SeriesSpec::default().min_terms);
    }
}
