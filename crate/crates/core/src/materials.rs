//! Dielectric response along the imaginary frequency axis.
//!
//! Every model is evaluated at imaginary frequencies `iξ` with `ξ` in rad/s,
//! where the permittivity is real and at least one. Metals described by the
//! plasma model diverge as `ξ → 0`; the finite product `ε(iξ)·ξ²` is exposed
//! through [`DielectricModel::eps_times_xi_squared`] so that the zero-frequency
//! Matsubara term never needs infinity arithmetic.
//!
//! Material sets can be read from and written to TOML:
//!
//! ```toml
//! [materials.glass]
//! kind = "constant"
//! value = 2.25
//!
//! [materials.BeO_xx]
//! kind = "oscillator_sum"
//! terms = [
//!     { strength = 4.04, frequency = 1.3e14 },
//!     { strength = 1.90, frequency = 1.98e16 },
//! ]
//!
//! [materials.Au_plasma]
//! kind = "plasma"
//! omega_p = 1.3673e16
//!
//! [materials.ideal]
//! kind = "perfect_conductor"
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CODATA 2018 values of the constants used throughout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Boltzmann constant, J/K.
    pub boltzmann_k: f64,
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Speed of light, m/s.
    pub light_speed_c: f64,
    /// Angular frequency of one electron-volt, rad/s per eV.
    pub ev_to_radps: f64,
}

pub const CONSTANTS: PhysicalConstants = PhysicalConstants {
    boltzmann_k: 1.380_649e-23,
    hbar: 1.054_571_817e-34,
    light_speed_c: 299_792_458.0,
    // e / hbar
    ev_to_radps: 1.602_176_634e-19 / 1.054_571_817e-34,
};

/// One Lorentz-type absorption band: contributes `C ω² / (ξ² + ω²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorTerm {
    pub strength: f64,
    /// Characteristic absorption frequency, rad/s.
    pub frequency: f64,
}

impl OscillatorTerm {
    pub fn new(strength: f64, frequency: f64) -> Result<Self> {
        let term = OscillatorTerm {
            strength,
            frequency,
        };
        term.validate()?;
        Ok(term)
    }

    fn validate(&self) -> Result<()> {
        if !(self.strength >= 0.0 && self.strength.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "oscillator strength must be finite and >= 0, got {}",
                self.strength
            )));
        }
        if !(self.frequency > 0.0 && self.frequency.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "oscillator frequency must be finite and > 0, got {}",
                self.frequency
            )));
        }
        Ok(())
    }
}

/// Permittivity model evaluable at imaginary frequencies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DielectricModel {
    /// Frequency-independent permittivity (≥ 1). Never becomes transparent,
    /// so the nonrelativistic Matsubara sum diverges when a plate uses it.
    Constant { value: f64 },
    /// `1 + Σ C_j ω_j² / (ξ² + ω_j²)`.
    OscillatorSum { terms: Vec<OscillatorTerm> },
    /// Lossless plasma model `1 + ω_p² / ξ²`, `omega_p` in rad/s.
    Plasma { omega_p: f64 },
    /// Ideal metal, infinite permittivity at every frequency.
    PerfectConductor,
}

impl DielectricModel {
    pub fn constant(value: f64) -> Result<Self> {
        let m = DielectricModel::Constant { value };
        m.validate()?;
        Ok(m)
    }

    pub fn oscillators(terms: Vec<OscillatorTerm>) -> Result<Self> {
        let m = DielectricModel::OscillatorSum { terms };
        m.validate()?;
        Ok(m)
    }

    /// Plasma model from a plasma frequency given in eV.
    pub fn plasma_ev(omega_p_ev: f64) -> Result<Self> {
        let m = DielectricModel::Plasma {
            omega_p: omega_p_ev * CONSTANTS.ev_to_radps,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            DielectricModel::Constant { value } => {
                if !(*value >= 1.0 && value.is_finite()) {
                    return Err(Error::InvalidInput(format!(
                        "constant permittivity must be finite and >= 1, got {value}"
                    )));
                }
            }
            DielectricModel::OscillatorSum { terms } => {
                for t in terms {
                    t.validate()?;
                }
            }
            DielectricModel::Plasma { omega_p } => {
                if !(*omega_p > 0.0 && omega_p.is_finite()) {
                    return Err(Error::InvalidInput(format!(
                        "plasma frequency must be finite and > 0, got {omega_p}"
                    )));
                }
            }
            DielectricModel::PerfectConductor => {}
        }
        Ok(())
    }

    fn kind_name(&self) -> &'static str {
        match self {
            DielectricModel::Constant { .. } => "constant",
            DielectricModel::OscillatorSum { .. } => "oscillator_sum",
            DielectricModel::Plasma { .. } => "plasma",
            DielectricModel::PerfectConductor => "perfect_conductor",
        }
    }

    /// Plasma models and perfect conductors are metals; everything else is a dielectric.
    pub fn is_metal(&self) -> bool {
        matches!(
            self,
            DielectricModel::Plasma { .. } | DielectricModel::PerfectConductor
        )
    }

    /// Penetration depth `c / ω_p` in meters; zero for a perfect conductor, `None` for dielectrics.
    pub fn penetration_depth(&self) -> Option<f64> {
        match self {
            DielectricModel::Plasma { omega_p } => Some(CONSTANTS.light_speed_c / omega_p),
            DielectricModel::PerfectConductor => Some(0.0),
            _ => None,
        }
    }

    /// `ε(iξ)`. Fails for metals wherever the value is infinite.
    pub fn permittivity_at(&self, xi: f64) -> Result<f64> {
        check_xi(xi)?;
        match self {
            DielectricModel::Constant { value } => Ok(*value),
            DielectricModel::OscillatorSum { terms } => Ok(oscillator_sum(terms, xi)),
            DielectricModel::Plasma { omega_p } => {
                if xi == 0.0 {
                    Err(Error::DivergentPermittivity {
                        model: self.kind_name(),
                        xi,
                    })
                } else {
                    Ok(1.0 + (omega_p / xi).powi(2))
                }
            }
            DielectricModel::PerfectConductor => Err(Error::DivergentPermittivity {
                model: self.kind_name(),
                xi,
            }),
        }
    }

    /// `ε(iξ)·ξ²` in (rad/s)². Finite for a plasma at `ξ = 0` (gives `ω_p²`);
    /// a perfect conductor returns `+∞`.
    pub fn eps_times_xi_squared(&self, xi: f64) -> f64 {
        let xi2 = xi * xi;
        match self {
            DielectricModel::Constant { value } => value * xi2,
            DielectricModel::OscillatorSum { terms } => oscillator_sum(terms, xi) * xi2,
            DielectricModel::Plasma { omega_p } => xi2 + omega_p * omega_p,
            DielectricModel::PerfectConductor => f64::INFINITY,
        }
    }

    /// Static permittivity, `None` for metals.
    pub fn static_permittivity(&self) -> Option<f64> {
        if self.is_metal() {
            None
        } else {
            self.permittivity_at(0.0).ok()
        }
    }
}

fn check_xi(xi: f64) -> Result<()> {
    if xi >= 0.0 && xi.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "imaginary frequency must be finite and >= 0, got {xi}"
        )))
    }
}

fn oscillator_sum(terms: &[OscillatorTerm], xi: f64) -> f64 {
    let xi2 = xi * xi;
    1.0 + terms
        .iter()
        .map(|t| {
            let w2 = t.frequency * t.frequency;
            t.strength * w2 / (xi2 + w2)
        })
        .sum::<f64>()
}

/// Plasma frequency of gold used by the `Au_plasma` preset, eV.
pub const AU_PLASMA_FREQUENCY_EV: f64 = 9.0;

/// BeO, ordinary (in-plane) component.
pub fn beo_xx() -> DielectricModel {
    DielectricModel::OscillatorSum {
        terms: vec![
            OscillatorTerm {
                strength: 4.04,
                frequency: 1.3e14,
            },
            OscillatorTerm {
                strength: 1.90,
                frequency: 1.98e16,
            },
        ],
    }
}

/// BeO, extraordinary component along the optical axis.
pub fn beo_zz() -> DielectricModel {
    DielectricModel::OscillatorSum {
        terms: vec![
            OscillatorTerm {
                strength: 4.70,
                frequency: 1.4e14,
            },
            OscillatorTerm {
                strength: 1.951,
                frequency: 2.37e16,
            },
        ],
    }
}

/// Amorphous silica: three infrared bands and one ultraviolet band.
pub fn sio2() -> DielectricModel {
    DielectricModel::OscillatorSum {
        terms: vec![
            OscillatorTerm {
                strength: 0.829,
                frequency: 0.867e14,
            },
            OscillatorTerm {
                strength: 0.095,
                frequency: 1.508e14,
            },
            OscillatorTerm {
                strength: 0.798,
                frequency: 2.026e14,
            },
            OscillatorTerm {
                strength: 1.098,
                frequency: 2.034e16,
            },
        ],
    }
}

pub fn au_plasma() -> DielectricModel {
    DielectricModel::Plasma {
        omega_p: AU_PLASMA_FREQUENCY_EV * CONSTANTS.ev_to_radps,
    }
}

pub fn vacuum() -> DielectricModel {
    DielectricModel::Constant { value: 1.0 }
}

/// Named material models. Built-in presets are always present; more can be
/// loaded from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialRegistry {
    materials: BTreeMap<String, DielectricModel>,
}

impl Default for MaterialRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl MaterialRegistry {
    pub fn empty() -> Self {
        MaterialRegistry {
            materials: BTreeMap::new(),
        }
    }

    /// vacuum, BeO_xx, BeO_zz, SiO2, Au_plasma and perfect_conductor.
    pub fn builtin() -> Self {
        let mut materials = BTreeMap::new();
        materials.insert("vacuum".to_string(), vacuum());
        materials.insert("BeO_xx".to_string(), beo_xx());
        materials.insert("BeO_zz".to_string(), beo_zz());
        materials.insert("SiO2".to_string(), sio2());
        materials.insert("Au_plasma".to_string(), au_plasma());
        materials.insert(
            "perfect_conductor".to_string(),
            DielectricModel::PerfectConductor,
        );
        MaterialRegistry { materials }
    }

    pub fn preset(&self, name: &str) -> Result<DielectricModel> {
        self.materials
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownMaterial(name.to_string()))
    }

    pub fn insert(&mut self, name: impl Into<String>, model: DielectricModel) -> Result<()> {
        model.validate()?;
        self.materials.insert(name.into(), model);
        Ok(())
    }

    /// Adds every entry of `other`, replacing same-named entries.
    pub fn extend(&mut self, other: MaterialRegistry) {
        self.materials.extend(other.materials);
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.materials.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &DielectricModel)> {
        self.materials.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.materials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.materials.is_empty()
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let reg: MaterialRegistry =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        for model in reg.materials.values() {
            model.validate()?;
        }
        Ok(reg)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml_str(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_toml_string()?).map_err(|e| Error::io(path, e))
    }
}
