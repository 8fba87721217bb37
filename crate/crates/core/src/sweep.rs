//! Thickness sweeps, figure presets and their CSV / gnuplot output.
//!
//! A sweep evaluates the exact, nonrelativistic and classical pressures of one
//! stack over a grid of film thicknesses. Points run concurrently; rows are
//! always returned in ascending thickness. A point that fails is kept as a
//! row with empty cells and an error message instead of aborting the sweep.
//!
//! CSV columns, in this order:
//!
//! ```text
//! a_m,P_exact_Pa,F_exact_J_per_m2,P_nr_Pa,P_cl_Pa,delta_nr,delta_cl,terms_used
//! ```
//!
//! Numbers are written in scientific notation with 12 significant digits;
//! modes that were not requested leave their cells empty.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lifshitz::{casimir_pressure, LayerStack, ThermalGeometry};
use crate::limits::{classical_limit, nonrel_free_energy_pressure, ErrorMetric};
use crate::materials::{DielectricModel, MaterialRegistry};
use crate::numerics::{QuadratureSpec, SeriesSpec};

pub const CSV_HEADER: [&str; 8] = [
    "a_m",
    "P_exact_Pa",
    "F_exact_J_per_m2",
    "P_nr_Pa",
    "P_cl_Pa",
    "delta_nr",
    "delta_cl",
    "terms_used",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Nonrel,
    Classical,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" => Ok(Mode::Exact),
            "nonrel" | "nr" => Ok(Mode::Nonrel),
            "classical" | "cl" => Ok(Mode::Classical),
            other => Err(Error::InvalidInput(format!("unknown mode '{other}'"))),
        }
    }
}

pub const ALL_MODES: [Mode; 3] = [Mode::Exact, Mode::Nonrel, Mode::Classical];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "log" => Ok(Spacing::Log),
            "linear" | "lin" => Ok(Spacing::Linear),
            other => Err(Error::InvalidInput(format!("unknown spacing '{other}'"))),
        }
    }
}

/// Stack given by material names: left plate, film xx, film zz, right plate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StackSpec {
    pub left: String,
    pub film_xx: String,
    pub film_zz: String,
    pub right: String,
}

impl StackSpec {
    pub fn new(left: &str, film_xx: &str, film_zz: &str, right: &str) -> Self {
        StackSpec {
            left: left.into(),
            film_xx: film_xx.into(),
            film_zz: film_zz.into(),
            right: right.into(),
        }
    }

    pub fn resolve(&self, registry: &MaterialRegistry) -> Result<LayerStack> {
        LayerStack::from_names(registry, &self.left, &self.film_xx, &self.film_zz, &self.right)
    }
}

impl FromStr for StackSpec {
    type Err = Error;

    /// `left,film_xx,film_zz,right`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        match parts.as_slice() {
            [l, xx, zz, r] if parts.iter().all(|p| !p.is_empty()) => Ok(StackSpec::new(l, xx, zz, r)),
            _ => Err(Error::InvalidInput(format!(
                "stack must be 'left,film_xx,film_zz,right', got '{s}'"
            ))),
        }
    }
}

impl fmt::Display for StackSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.left, self.film_xx, self.film_zz, self.right)
    }
}

fn default_temperature() -> f64 {
    300.0
}

fn default_points() -> usize {
    50
}

fn default_modes() -> Vec<Mode> {
    ALL_MODES.to_vec()
}

/// One sweep: a stack, a temperature, a thickness grid and the modes to compute.
///
/// Also the schema of the TOML config file:
///
/// ```toml
/// temperature = 300.0
/// a_min = 1e-9
/// a_max = 1e-8
/// points = 10
/// spacing = "log"
/// modes = ["exact", "nonrel"]
/// output = "sio2.csv"
///
/// [stack]
/// left = "SiO2"
/// film_xx = "BeO_xx"
/// film_zz = "BeO_zz"
/// right = "SiO2"
///
/// [materials.glass]   # optional, extends the built-in registry
/// kind = "constant"
/// value = 2.25
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub label: String,
    pub stack: StackSpec,
    #[serde(default = "default_temperature")]
    pub temperature: f64,
    #[serde(default)]
    pub a_min: f64,
    #[serde(default)]
    pub a_max: f64,
    #[serde(default = "default_points")]
    pub points: usize,
    #[serde(default)]
    pub spacing: Spacing,
    /// Explicit thicknesses; replaces the `a_min..a_max` grid when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thicknesses: Option<Vec<f64>>,
    #[serde(default = "default_modes")]
    pub modes: Vec<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadrature_tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series_tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub materials: BTreeMap<String, DielectricModel>,
}

impl SweepConfig {
    pub fn new(stack: StackSpec, a_min: f64, a_max: f64, points: usize) -> Self {
        SweepConfig {
            label: String::new(),
            stack,
            temperature: default_temperature(),
            a_min,
            a_max,
            points,
            spacing: Spacing::Log,
            thicknesses: None,
            modes: default_modes(),
            output: None,
            quadrature_tolerance: None,
            series_tolerance: None,
            materials: BTreeMap::new(),
        }
    }

    pub fn with_modes(mut self, modes: &[Mode]) -> Self {
        self.modes = modes.to_vec();
        self
    }

    pub fn with_thicknesses(mut self, thicknesses: &[f64]) -> Self {
        self.thicknesses = Some(thicknesses.to_vec());
        self
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.into();
        self
    }

    pub fn has(&self, mode: Mode) -> bool {
        self.modes.contains(&mode)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.temperature > 0.0 && self.temperature.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "temperature must be positive, got {}",
                self.temperature
            )));
        }
        if self.modes.is_empty() {
            return Err(Error::InvalidInput("at least one mode is required".into()));
        }
        match &self.thicknesses {
            Some(list) => {
                if list.is_empty() || list.iter().any(|a| !(*a > 0.0 && a.is_finite())) {
                    return Err(Error::InvalidInput(
                        "thicknesses must be a non-empty list of positive numbers".into(),
                    ));
                }
            }
            None => {
                if !(self.a_min > 0.0 && self.a_min < self.a_max && self.a_max.is_finite()) {
                    return Err(Error::InvalidInput(format!(
                        "need 0 < a_min < a_max, got {} and {}",
                        self.a_min, self.a_max
                    )));
                }
                if self.points < 2 {
                    return Err(Error::InvalidInput(format!(
                        "need at least 2 points, got {}",
                        self.points
                    )));
                }
            }
        }
        if let Some(t) = self.quadrature_tolerance {
            QuadratureSpec::with_tolerance(t).validate()?;
        }
        Ok(())
    }

    /// Thicknesses in ascending order, endpoints exact.
    pub fn grid(&self) -> Vec<f64> {
        if let Some(list) = &self.thicknesses {
            let mut v = list.clone();
            v.sort_by(f64::total_cmp);
            v.dedup();
            return v;
        }
        let n = self.points;
        let last = n - 1;
        (0..n)
            .map(|i| {
                if i == 0 {
                    self.a_min
                } else if i == last {
                    self.a_max
                } else {
                    let t = i as f64 / last as f64;
                    match self.spacing {
                        Spacing::Log => self.a_min * (self.a_max / self.a_min).powf(t),
                        Spacing::Linear => self.a_min + (self.a_max - self.a_min) * t,
                    }
                }
            })
            .collect()
    }

    pub fn quadrature_spec(&self) -> QuadratureSpec {
        self.quadrature_tolerance
            .map(QuadratureSpec::with_tolerance)
            .unwrap_or_default()
    }

    pub fn series_spec(&self) -> SeriesSpec {
        self.series_tolerance
            .map(SeriesSpec::with_tolerance)
            .unwrap_or_default()
    }

    /// Built-in registry extended with this config's `[materials]`.
    pub fn registry(&self) -> Result<MaterialRegistry> {
        let mut reg = MaterialRegistry::builtin();
        for (name, model) in &self.materials {
            reg.insert(name.clone(), model.clone())?;
        }
        Ok(reg)
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: SweepConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml_str(&text)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub p_exact: Option<f64>,
    pub f_exact: Option<f64>,
    pub p_nr: Option<f64>,
    pub p_cl: Option<f64>,
    pub delta_nr: Option<f64>,
    pub delta_cl: Option<f64>,
    pub terms_used: Option<usize>,
    /// Why the point failed; not written to CSV.
    pub error: Option<String>,
}

impl SweepRow {
    pub fn failed(&self) -> bool {
        self.error.is_some()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SweepResult {
    /// Curve label within a figure, e.g. `sio2`.
    pub label: String,
    /// Figure preset this result was produced for, if any.
    pub origin: Option<String>,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn failed_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.failed()).count()
    }
}

fn compute_row(
    a: f64,
    config: &SweepConfig,
    stack: &LayerStack,
    qspec: &QuadratureSpec,
    sspec: &SeriesSpec,
) -> Result<SweepRow> {
    let geom = ThermalGeometry::new(a, config.temperature)?;
    let mut row = SweepRow {
        a,
        ..Default::default()
    };
    if config.has(Mode::Exact) {
        let exact = casimir_pressure(stack, &geom, qspec, sspec)?;
        if !exact.pressure.is_finite() {
            return Err(Error::Domain(format!("non-finite pressure at a = {a:e}")));
        }
        row.p_exact = Some(exact.pressure);
        row.f_exact = Some(exact.free_energy);
        row.terms_used = Some(exact.terms_used);
    }
    if config.has(Mode::Nonrel) {
        row.p_nr = Some(nonrel_free_energy_pressure(stack, &geom, sspec)?.pressure);
    }
    if config.has(Mode::Classical) {
        row.p_cl = Some(classical_limit(stack, &geom)?.pressure);
    }
    if let Some(p) = row.p_exact {
        row.delta_nr = row
            .p_nr
            .map(|nr| ErrorMetric::between(nr, p).map(ErrorMetric::value))
            .transpose()?;
        row.delta_cl = row
            .p_cl
            .map(|cl| ErrorMetric::between(cl, p).map(ErrorMetric::value))
            .transpose()?;
    }
    Ok(row)
}

/// Runs every requested mode at every grid point.
///
/// Fails only for configuration problems (invalid grid, unknown material);
/// numerical failures at a point are recorded in that row.
pub fn run_sweep(config: &SweepConfig, registry: &MaterialRegistry) -> Result<SweepResult> {
    config.validate()?;
    let stack = config.stack.resolve(registry)?;
    let qspec = config.quadrature_spec();
    let sspec = config.series_spec();
    let rows = config
        .grid()
        .into_par_iter()
        .map(|a| {
            compute_row(a, config, &stack, &qspec, &sspec).unwrap_or_else(|e| {
                log::warn!("sweep point a = {a:e} m failed: {e}");
                SweepRow {
                    a,
                    error: Some(e.to_string()),
                    ..Default::default()
                }
            })
        })
        .collect();
    Ok(SweepResult {
        label: config.label.clone(),
        origin: None,
        rows,
    })
}

fn fmt_num(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.11e}")).unwrap_or_default()
}

pub fn write_csv<W: Write>(result: &SweepResult, writer: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(writer);
    w.write_record(CSV_HEADER)?;
    for r in &result.rows {
        w.write_record([
            fmt_num(Some(r.a)),
            fmt_num(r.p_exact),
            fmt_num(r.f_exact),
            fmt_num(r.p_nr),
            fmt_num(r.p_cl),
            fmt_num(r.delta_nr),
            fmt_num(r.delta_cl),
            r.terms_used.map(|t| t.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush().map_err(|e| Error::io("<csv writer>", e))?;
    Ok(())
}

pub fn emit_csv(result: &SweepResult, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv(result, std::io::BufWriter::new(file))
}

fn parse_cell<T: FromStr>(cell: &str) -> Result<Option<T>> {
    if cell.is_empty() {
        return Ok(None);
    }
    cell.parse()
        .map(Some)
        .map_err(|_| Error::InvalidInput(format!("bad CSV cell '{cell}'")))
}

/// Reads rows written by [`write_csv`].
pub fn read_csv<R: Read>(reader: R) -> Result<SweepResult> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    if header != CSV_HEADER {
        return Err(Error::InvalidInput(format!("unexpected CSV header {header:?}")));
    }
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let cell = |i: usize| rec.get(i).unwrap_or("");
        rows.push(SweepRow {
            a: parse_cell(cell(0))?
                .ok_or_else(|| Error::InvalidInput("missing thickness".into()))?,
            p_exact: parse_cell(cell(1))?,
            f_exact: parse_cell(cell(2))?,
            p_nr: parse_cell(cell(3))?,
            p_cl: parse_cell(cell(4))?,
            delta_nr: parse_cell(cell(5))?,
            delta_cl: parse_cell(cell(6))?,
            terms_used: parse_cell(cell(7))?,
            error: None,
        });
    }
    Ok(SweepResult {
        rows,
        ..Default::default()
    })
}

pub fn parse_csv(path: impl AsRef<Path>) -> Result<SweepResult> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_csv(file)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureName {
    Fig1,
    Fig2a,
    Fig2b,
    Fig3,
    TableDpnr,
    TableDpcl,
}

impl FigureName {
    pub const ALL: [FigureName; 6] = [
        FigureName::Fig1,
        FigureName::Fig2a,
        FigureName::Fig2b,
        FigureName::Fig3,
        FigureName::TableDpnr,
        FigureName::TableDpcl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FigureName::Fig1 => "fig1",
            FigureName::Fig2a => "fig2a",
            FigureName::Fig2b => "fig2b",
            FigureName::Fig3 => "fig3",
            FigureName::TableDpnr => "table_dpnr",
            FigureName::TableDpcl => "table_dpcl",
        }
    }
}

impl FromStr for FigureName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

impl fmt::Display for FigureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A figure or table: one sweep per curve.
#[derive(Debug, Clone, PartialEq)]
pub struct FigurePreset {
    pub name: FigureName,
    pub series: Vec<SweepConfig>,
}

impl FigurePreset {
    pub fn csv_name(&self, config: &SweepConfig) -> String {
        format!("{}_{}.csv", self.name, config.label)
    }

    pub fn script_name(&self) -> String {
        format!("{}.gp", self.name)
    }
}

fn beo_between(left: &str, right: &str) -> StackSpec {
    StackSpec::new(left, "BeO_xx", "BeO_zz", right)
}

pub fn figure_preset(name: &str) -> Result<FigurePreset> {
    let name: FigureName = name.parse()?;
    let series = match name {
        FigureName::Fig1 => [("sio2", "SiO2"), ("au", "Au_plasma")]
            .into_iter()
            .map(|(label, plate)| {
                SweepConfig::new(beo_between(plate, plate), 1e-9, 1e-8, 46)
                    .with_modes(&[Mode::Exact, Mode::Nonrel])
                    .with_label(label)
            })
            .collect(),
        FigureName::Fig2a | FigureName::Fig2b => {
            let (label, plate) = if name == FigureName::Fig2a {
                ("sio2", "SiO2")
            } else {
                ("au", "Au_plasma")
            };
            vec![SweepConfig::new(beo_between(plate, plate), 1e-8, 3e-6, 60)
                .with_modes(&[Mode::Exact, Mode::Classical])
                .with_label(label)]
        }
        FigureName::Fig3 => vec![SweepConfig::new(beo_between("Au_plasma", "SiO2"), 1e-9, 5e-6, 50)
            .with_label("au_sio2")],
        FigureName::TableDpnr => [
            ("sio2_beo", beo_between("SiO2", "SiO2")),
            ("sio2_vacuum", StackSpec::new("SiO2", "vacuum", "vacuum", "SiO2")),
            ("au_beo", beo_between("Au_plasma", "Au_plasma")),
        ]
        .into_iter()
        .map(|(label, stack)| {
            SweepConfig::new(stack, 1e-9, 1e-8, 4)
                .with_thicknesses(&[1e-9, 2e-9, 5e-9, 1e-8])
                .with_modes(&[Mode::Exact, Mode::Nonrel])
                .with_label(label)
        })
        .collect(),
        FigureName::TableDpcl => [
            ("sio2_beo", beo_between("SiO2", "SiO2")),
            ("au_sio2", beo_between("Au_plasma", "SiO2")),
            ("au_beo", beo_between("Au_plasma", "Au_plasma")),
        ]
        .into_iter()
        .map(|(label, stack)| {
            SweepConfig::new(stack, 1.5e-6, 3e-6, 4)
                .with_thicknesses(&[1.5e-6, 2e-6, 2.5e-6, 3e-6])
                .with_modes(&[Mode::Exact, Mode::Classical])
                .with_label(label)
        })
        .collect(),
    };
    Ok(FigurePreset { name, series })
}

/// Runs every curve of a preset, tagging results with the preset name.
pub fn run_figure(preset: &FigurePreset, registry: &MaterialRegistry) -> Result<Vec<SweepResult>> {
    preset
        .series
        .iter()
        .map(|cfg| {
            let mut r = run_sweep(cfg, registry)?;
            r.origin = Some(preset.name.to_string());
            Ok(r)
        })
        .collect()
}

/// Writes one CSV per curve and the plot script into `dir`.
pub fn write_figure(preset: &FigurePreset, results: &[SweepResult], dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    for (cfg, result) in preset.series.iter().zip(results) {
        let path = dir.join(preset.csv_name(cfg));
        emit_csv(result, &path)?;
        written.push(path);
    }
    let script = dir.join(preset.script_name());
    emit_plot_script(results, preset, &script)?;
    written.push(script);
    Ok(written)
}

/// Builds the gnuplot script for `preset` from its results.
pub fn plot_script(results: &[SweepResult], preset: &FigurePreset) -> Result<String> {
    let expected = preset.name.to_string();
    for r in results {
        let found = r.origin.clone().unwrap_or_else(|| "<unlabelled>".into());
        if found != expected {
            return Err(Error::PresetMismatch { expected, found });
        }
    }
    if results.len() != preset.series.len()
        || results.iter().zip(&preset.series).any(|(r, c)| r.label != c.label)
    {
        return Err(Error::PresetMismatch {
            expected,
            found: format!("{} curve(s) with other labels", results.len()),
        });
    }

    let mut s = String::new();
    s.push_str(&format!("# {} -- regenerate the CSV files before plotting\n", preset.name));
    s.push_str("# columns: 1 a_m, 2 P_exact_Pa, 3 F_exact_J_per_m2, 4 P_nr_Pa, 5 P_cl_Pa, 6 delta_nr, 7 delta_cl, 8 terms_used\n");
    s.push_str("set datafile separator ','\n");
    s.push_str("set datafile missing ''\n");
    s.push_str("set terminal pngcairo size 900,650\n");
    s.push_str(&format!("set output '{}.png'\n", preset.name));
    s.push_str("set grid\n");

    let mut curves = Vec::new();
    let csv = |cfg: &SweepConfig| preset.csv_name(cfg);
    match preset.name {
        FigureName::Fig1 => {
            s.push_str("set xlabel 'a (nm)'\n");
            s.push_str("set ylabel '|P| a^3 (N m)'\n");
            for (i, cfg) in preset.series.iter().enumerate() {
                let lc = i + 1;
                curves.push(format!(
                    "'{}' skip 1 using ($1*1e9):(abs($2)*$1**3) with lines dt 1 lc {lc} lw 2 title '{} exact'",
                    csv(cfg),
                    cfg.label
                ));
                curves.push(format!(
                    "'{}' skip 1 using ($1*1e9):(abs($4)*$1**3) with lines dt 2 lc {lc} lw 2 title '{} nonrelativistic'",
                    csv(cfg),
                    cfg.label
                ));
            }
        }
        FigureName::Fig2a | FigureName::Fig2b => {
            s.push_str("set logscale x\n");
            s.push_str("set xlabel 'a (m)'\n");
            s.push_str("set ylabel '|P| a^4 (N m^2)'\n");
            for cfg in &preset.series {
                curves.push(format!(
                    "'{}' skip 1 using 1:(abs($2)*$1**4) with lines dt 1 lc 1 lw 2 title '{} exact'",
                    csv(cfg),
                    cfg.label
                ));
                curves.push(format!(
                    "'{}' skip 1 using 1:(abs($5)*$1**4) with lines dt 2 lc 1 lw 2 title '{} classical'",
                    csv(cfg),
                    cfg.label
                ));
            }
        }
        FigureName::Fig3 => {
            s.push_str("set logscale xy\n");
            s.push_str("set format y '10^{%L}'\n");
            s.push_str("set xlabel 'a (m)'\n");
            s.push_str("set ylabel 'P (Pa)'\n");
            for cfg in &preset.series {
                curves.push(format!(
                    "'{}' skip 1 using 1:2 with lines dt 1 lc 1 lw 2 title '{} exact'",
                    csv(cfg),
                    cfg.label
                ));
                curves.push(format!(
                    "'{}' skip 1 using 1:5 with lines dt 2 lc 1 lw 2 title '{} classical'",
                    csv(cfg),
                    cfg.label
                ));
            }
        }
        FigureName::TableDpnr | FigureName::TableDpcl => {
            let (col, what) = if preset.name == FigureName::TableDpnr {
                (6, "delta P_nr (%)")
            } else {
                (7, "delta P_cl (%)")
            };
            s.push_str("set xlabel 'a (m)'\n");
            s.push_str(&format!("set ylabel '{what}'\n"));
            for (i, cfg) in preset.series.iter().enumerate() {
                curves.push(format!(
                    "'{}' skip 1 using 1:(100*${col}) with linespoints pt 7 lc {} title '{}'",
                    csv(cfg),
                    i + 1,
                    cfg.label
                ));
            }
        }
    }
    s.push_str("plot ");
    s.push_str(&curves.join(", \\\n     "));
    s.push('\n');
    Ok(s)
}

pub fn emit_plot_script(results: &[SweepResult], preset: &FigurePreset, path: impl AsRef<Path>) -> Result<()> {
    let text = plot_script(results, preset)?;
    let path = path.as_ref();
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flags() {
        let s: StackSpec = "SiO2, BeO_xx,BeO_zz ,Au_plasma".parse().unwrap();
        assert_eq!(s, StackSpec::new("SiO2", "BeO_xx", "BeO_zz", "Au_plasma"));
        assert!("SiO2,BeO_xx".parse::<StackSpec>().is_err());
        assert_eq!("nonrel".parse::<Mode>().unwrap(), Mode::Nonrel);
        assert!("fast".parse::<Mode>().is_err());
        assert_eq!("linear".parse::<Spacing>().unwrap(), Spacing::Linear);
    }

    #[test]
    fn grids() {
        let cfg = SweepConfig::new(StackSpec::new("SiO2", "vacuum", "vacuum", "SiO2"), 1e-9, 1e-8, 10);
        let g = cfg.grid();
        assert_eq!(g.len(), 10);
        assert_eq!(g[0], 1e-9);
        assert_eq!(g[9], 1e-8);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        assert!((g[1] / g[0] - 10f64.powf(1.0 / 9.0)).abs() < 1e-12);
        let mut lin = cfg.clone();
        lin.spacing = Spacing::Linear;
        let g = lin.grid();
        assert!((g[1] - g[0] - 1e-9).abs() < 1e-20);
        let two = SweepConfig::new(cfg.stack.clone(), 5e-9, 1e-8, 2);
        assert_eq!(two.grid(), vec![5e-9, 1e-8]);
        let listed = cfg.with_thicknesses(&[3e-9, 1e-9, 2e-9]);
        assert_eq!(listed.grid(), vec![1e-9, 2e-9, 3e-9]);
    }

    #[test]
    fn invalid_configs() {
        let stack = StackSpec::new("SiO2", "vacuum", "vacuum", "SiO2");
        assert!(SweepConfig::new(stack.clone(), 2e-9, 1e-9, 10).validate().is_err());
        assert!(SweepConfig::new(stack.clone(), 1e-9, 2e-9, 1).validate().is_err());
        assert!(SweepConfig::new(stack.clone(), 1e-9, 2e-9, 5).with_modes(&[]).validate().is_err());
        let reg = MaterialRegistry::builtin();
        let bad = SweepConfig::new(StackSpec::new("SiO2", "unobtainium", "vacuum", "SiO2"), 1e-9, 2e-9, 2);
        assert!(matches!(run_sweep(&bad, &reg), Err(Error::UnknownMaterial(_))));
    }

    #[test]
    fn presets() {
        let f3 = figure_preset("fig3").unwrap();
        assert_eq!(f3.series.len(), 1);
        let c = &f3.series[0];
        assert_eq!(c.stack, StackSpec::new("Au_plasma", "BeO_xx", "BeO_zz", "SiO2"));
        assert_eq!((c.temperature, c.a_min, c.a_max), (300.0, 1e-9, 5e-6));
        let f1 = figure_preset("fig1").unwrap();
        assert!(f1.series.iter().all(|c| c.a_min == 1e-9 && c.a_max == 1e-8));
        assert_eq!(f1.series.len(), 2);
        let t = figure_preset("table_dpcl").unwrap();
        assert_eq!(t.series[0].grid(), vec![1.5e-6, 2e-6, 2.5e-6, 3e-6]);
        assert!(matches!(figure_preset("figX"), Err(Error::UnknownPreset(_))));
        for name in FigureName::ALL {
            for cfg in figure_preset(name.as_str()).unwrap().series {
                cfg.validate().unwrap();
            }
        }
    }

    #[test]
    fn empty_csv_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&SweepResult::default(), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "a_m,P_exact_Pa,F_exact_J_per_m2,P_nr_Pa,P_cl_Pa,delta_nr,delta_cl,terms_used\n"
        );
    }

    #[test]
    fn csv_cells() {
        let result = SweepResult {
            rows: vec![SweepRow {
                a: 1e-9,
                p_exact: Some(-1_198_021.747_848_644),
                terms_used: Some(7311),
                ..Default::default()
            }],
            ..Default::default()
        };
        let mut buf = Vec::new();
        write_csv(&result, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1).unwrap(), "1.00000000000e-9,-1.19802174785e6,,,,,,7311");
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn plot_script_checks_origin() {
        let fig2a = figure_preset("fig2a").unwrap();
        let fig3 = figure_preset("fig3").unwrap();
        let r = SweepResult {
            label: "sio2".into(),
            origin: Some("fig2a".into()),
            rows: vec![],
        };
        assert!(plot_script(std::slice::from_ref(&r), &fig2a).is_ok());
        assert!(matches!(
            plot_script(&[r], &fig3),
            Err(Error::PresetMismatch { .. })
        ));
    }

    #[test]
    fn config_round_trip() {
        let text = r#"
temperature = 300.0
a_min = 1e-9
a_max = 1e-8
points = 10
spacing = "log"
modes = ["exact", "nonrel"]
output = "sio2.csv"

[stack]
left = "SiO2"
film_xx = "BeO_xx"
film_zz = "BeO_zz"
right = "glass"

[materials.glass]
kind = "constant"
value = 2.25
"#;
        let cfg = SweepConfig::from_toml_str(text).unwrap();
        assert_eq!(cfg.points, 10);
        assert_eq!(cfg.modes, vec![Mode::Exact, Mode::Nonrel]);
        assert!(cfg.stack.resolve(&cfg.registry().unwrap()).is_ok());
        let again = SweepConfig::from_toml_str(&cfg.to_toml_string().unwrap()).unwrap();
        assert_eq!(cfg, again);
    }
}
