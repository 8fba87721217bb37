//! Adaptive Gauss-Kronrod quadrature on `[lower, ∞)` for exponentially
//! decaying integrands.
//!
//! The half-line is covered by consecutive panels of doubling width. Each
//! panel is integrated by globally adaptive bisection with the 21-point
//! Kronrod rule; panels stop being added once both the last panel and the
//! bound `|f(b)|·width` on the remaining tail fall below the tolerance.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub relative_tolerance: f64,
    /// Total number of bisections allowed over all panels.
    pub max_subdivisions: usize,
    /// Width of the first panel; later panels double.
    pub initial_width: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            relative_tolerance: 1e-9,
            max_subdivisions: 4000,
            initial_width: 4.0,
        }
    }
}

impl QuadratureSpec {
    pub fn with_tolerance(relative_tolerance: f64) -> Self {
        QuadratureSpec {
            relative_tolerance,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.relative_tolerance > 0.0 && self.relative_tolerance < 1e-3) {
            return Err(Error::InvalidInput(format!(
                "quadrature tolerance must lie in (0, 1e-3), got {}",
                self.relative_tolerance
            )));
        }
        if self.max_subdivisions < 16 {
            return Err(Error::InvalidInput(format!(
                "max_subdivisions must be >= 16, got {}",
                self.max_subdivisions
            )));
        }
        if !(self.initial_width > 0.0 && self.initial_width.is_finite()) {
            return Err(Error::InvalidInput("initial panel width must be > 0".into()));
        }
        Ok(())
    }
}

/// Integral estimate with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// 21-point Kronrod rule with embedded 10-point Gauss error estimate.
fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut res_k = f_center * WGK[10];
    let mut res_g = 0.0;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let err = (res_k - res_g) * half;
    let w = half.abs();
    Segment {
        a,
        b,
        value: res_k * half,
        error: rescale_error(err, res_abs * w, res_asc * w),
    }
}

/// Integrates `f` over the finite panel `[a, b]` until the summed error is
/// below `max(abs_floor, rel_tol·|value + offset|)`, where `offset` is the
/// already accumulated integral of earlier panels.
fn integrate_panel<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    rel_tol: f64,
    offset: f64,
    budget: &mut usize,
    evaluations: &mut usize,
) -> std::result::Result<Integral, Integral> {
    let mut segments = vec![gk21(f, a, b)];
    *evaluations += 21;
    loop {
        let value: f64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        let target = rel_tol * (value + offset).abs();
        if error <= target || error == 0.0 {
            return Ok(Integral {
                value,
                error,
                evaluations: *evaluations,
            });
        }
        let (worst, _) = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("non-empty");
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        if *budget == 0 || mid <= seg.a || mid >= seg.b {
            segments.push(seg);
            return Err(Integral {
                value,
                error,
                evaluations: *evaluations,
            });
        }
        *budget -= 1;
        segments.push(gk21(f, seg.a, mid));
        segments.push(gk21(f, mid, seg.b));
        *evaluations += 42;
    }
}

/// `∫_lower^∞ f(y) dy` for an integrand decaying at least like `e^{-y}`.
pub fn integrate_semi_infinite<F>(f: F, lower: f64, spec: &QuadratureSpec) -> Result<Integral>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    if !(lower >= 0.0 && lower.is_finite()) {
        return Err(Error::Domain(format!(
            "lower integration limit must be finite and >= 0, got {lower}"
        )));
    }
    let tol = spec.relative_tolerance;
    let mut budget = spec.max_subdivisions;
    let mut evaluations = 0;
    let mut total = 0.0;
    let mut error = 0.0;
    let mut a = lower;
    let mut width = spec.initial_width;
    // 2^60 panel widths reach far beyond any exponential decay scale.
    for _ in 0..60 {
        let b = a + width;
        let panel = integrate_panel(&f, a, b, tol, total, &mut budget, &mut evaluations)
            .map_err(|best| Error::Convergence {
                estimate: total + best.value,
                error_bound: error + best.error,
                context: "semi-infinite quadrature",
            })?;
        if !panel.value.is_finite() {
            return Err(Error::Domain(format!("integrand is not finite on [{a}, {b}]")));
        }
        total += panel.value;
        error += panel.error;
        let tail = f(b).abs() * width;
        evaluations += 1;
        let threshold = tol * total.abs();
        if panel.value.abs() <= threshold && tail <= threshold {
            return Ok(Integral {
                value: total,
                error,
                evaluations,
            });
        }
        a = b;
        width *= 2.0;
    }
    Err(Error::Convergence {
        estimate: total,
        error_bound: error,
        context: "semi-infinite quadrature tail",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn exponential() {
        let r = integrate_semi_infinite(|y| (-y).exp(), 0.0, &spec()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn gamma_three() {
        let r = integrate_semi_infinite(|y| y * y * (-y).exp(), 0.0, &spec()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn shifted_lower_limit() {
        // ∫_L^∞ e^{-y} dy = e^{-L}
        let r = integrate_semi_infinite(|y| (-y).exp(), 30.0, &spec()).unwrap();
        assert!((r.value / (-30f64).exp() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bose_type_integrand() {
        // 2·Li3(0.25) from the direct series
        let oracle: f64 = 2.0 * (1..200).map(|k| 0.25f64.powi(k) / (k as f64).powi(3)).sum::<f64>();
        let r = integrate_semi_infinite(|y| y * y / (y.exp() / 0.25 - 1.0), 0.0, &spec()).unwrap();
        assert!((r.value - oracle).abs() < 1e-9 * oracle);
        assert!((oracle - 0.516_9).abs() < 1e-4);
    }

    #[test]
    fn log_endpoint_singularity() {
        // ∫ y ln(1 - e^{-y}) dy = -ζ(3)
        let r = integrate_semi_infinite(|y| y * (-(-y).exp()).ln_1p(), 0.0, &spec()).unwrap();
        assert!((r.value + 1.202_056_903_159_594_2).abs() < 1e-9);
    }

    #[test]
    fn zero_integrand() {
        let r = integrate_semi_infinite(|_| 0.0, 0.0, &spec()).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn linear_in_integrand() {
        let f = |y: f64| (-y).exp();
        let g = |y: f64| y * (-2.0 * y).exp();
        let (alpha, beta) = (2.5, -0.75);
        let rf = integrate_semi_infinite(f, 0.0, &spec()).unwrap().value;
        let rg = integrate_semi_infinite(g, 0.0, &spec()).unwrap().value;
        let rh = integrate_semi_infinite(|y| alpha * f(y) + beta * g(y), 0.0, &spec()).unwrap().value;
        let expect = alpha * rf + beta * rg;
        assert!((rh - expect).abs() <= 2e-9 * expect.abs());
    }

    #[test]
    fn reports_non_convergence() {
        let tight = QuadratureSpec {
            relative_tolerance: 1e-12,
            max_subdivisions: 16,
            initial_width: 4.0,
        };
        // a near-singular kink that 16 bisections cannot resolve
        let r = integrate_semi_infinite(|y| (y - 1.013_579).abs().powf(-0.9) * (-y).exp(), 0.0, &tight);
        match r {
            Err(Error::Convergence { estimate, error_bound, .. }) => {
                assert!(estimate.is_finite() && error_bound > 0.0)
            }
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }

    #[test]
    fn validates_spec() {
        let bad = QuadratureSpec {
            relative_tolerance: 0.1,
            ..Default::default()
        };
        assert!(integrate_semi_infinite(|y| (-y).exp(), 0.0, &bad).is_err());
        let bad = QuadratureSpec {
            max_subdivisions: 4,
            ..Default::default()
        };
        assert!(integrate_semi_infinite(|y| (-y).exp(), 0.0, &bad).is_err());
    }
}
