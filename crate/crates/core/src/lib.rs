//! Thermal Casimir free energy and pressure between two isotropic plates
//! separated by a uniaxial anisotropic dielectric film whose optical axis is
//! normal to the plates.
//!
//! The crate provides
//!
//! * [`materials`]: permittivity models along the imaginary frequency axis and
//!   the BeO, SiO₂, Au (plasma model) presets;
//! * [`numerics`]: semi-infinite quadrature, Matsubara summation and `Li₃`;
//! * [`lifshitz`]: the full relativistic Lifshitz pressure and free energy;
//! * [`limits`]: nonrelativistic and classical closed forms and the relative
//!   errors comparing them with the exact result;
//! * [`sweep`]: thickness sweeps, figure presets, CSV and gnuplot output.
//!
//! ```no_run
//! use aniso_casimir::prelude::*;
//!
//! let reg = MaterialRegistry::builtin();
//! let stack = LayerStack::from_names(&reg, "SiO2", "BeO_xx", "BeO_zz", "SiO2")?;
//! let geom = ThermalGeometry::new(100e-9, 300.0)?;
//! let r = casimir_pressure(&stack, &geom, &QuadratureSpec::default(), &SeriesSpec::default())?;
//! println!("P = {:e} Pa", r.pressure);
//! # Ok::<(), aniso_casimir::Error>(())
//! ```

pub mod error;
pub mod lifshitz;
pub mod limits;
pub mod materials;
pub mod numerics;
pub mod sweep;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::lifshitz::{
        casimir_free_energy, casimir_pressure, reflection_te, reflection_tm, zero_frequency_term,
        LayerStack, MatsubaraGrid, PressureResult, Side, SpectralPoint, ThermalGeometry,
    };
    pub use crate::limits::{
        classical_limit, classicality_error, nonrel_free_energy_pressure, r_nonrel,
        retardation_error, ErrorMetric, LimitResult, Regime,
    };
    pub use crate::materials::{DielectricModel, MaterialRegistry, OscillatorTerm, CONSTANTS};
    pub use crate::numerics::{polylog3, QuadratureSpec, SeriesSpec};
}
