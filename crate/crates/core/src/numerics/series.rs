//! Primed Matsubara sums `½·t(0) + Σ_{l≥1} t(l)`.

use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSpec {
    pub relative_tolerance: f64,
    pub min_terms: usize,
    pub max_terms: usize,
}

impl Default for SeriesSpec {
    fn default() -> Self {
        SeriesSpec {
            relative_tolerance: 1e-10,
            min_terms: 5,
            max_terms: 1_000_000,
        }
    }
}

impl SeriesSpec {
    pub fn with_tolerance(relative_tolerance: f64) -> Self {
        SeriesSpec {
            relative_tolerance,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_terms < 1 || self.max_terms <= self.min_terms {
            return Err(Error::InvalidInput(format!(
                "series spec needs 1 <= min_terms < max_terms, got {} / {}",
                self.min_terms, self.max_terms
            )));
        }
        if self.relative_tolerance.is_nan() || self.relative_tolerance <= 0.0 {
            return Err(Error::InvalidInput(
                "series tolerance must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Number of consecutive negligible terms required before truncating.
pub const QUIET_RUN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: f64,
    /// Terms evaluated and kept, counting `l = 0`.
    pub terms: usize,
}

/// Running state of a primed sum of `N` components; terms must be pushed in
/// order of `l`. Converged once every component has been quiet for
/// [`QUIET_RUN`] consecutive terms.
#[derive(Debug)]
struct Accumulator<const N: usize> {
    spec: SeriesSpec,
    sum: [f64; N],
    next_l: usize,
    quiet: usize,
}

impl<const N: usize> Accumulator<N> {
    fn new(spec: SeriesSpec) -> Self {
        Accumulator {
            spec,
            sum: [0.0; N],
            next_l: 0,
            quiet: 0,
        }
    }

    fn push(&mut self, term: [f64; N]) -> bool {
        let weight = if self.next_l == 0 { 0.5 } else { 1.0 };
        let mut quiet = true;
        for (s, t) in self.sum.iter_mut().zip(term) {
            let w = weight * t;
            *s += w;
            quiet &= w.abs() <= self.spec.relative_tolerance * s.abs();
        }
        self.next_l += 1;
        self.quiet = if quiet { self.quiet + 1 } else { 0 };
        self.next_l >= self.spec.min_terms && self.quiet >= QUIET_RUN
    }

    fn exhausted(&self) -> Error {
        Error::Convergence {
            estimate: self.sum[0],
            error_bound: f64::NAN,
            context: "Matsubara series exceeded max_terms",
        }
    }
}

/// Sums `term(l)` sequentially, halving the `l = 0` term, until
/// [`QUIET_RUN`] consecutive terms are each below the relative tolerance.
pub fn sum_matsubara<F>(mut term: F, spec: &SeriesSpec) -> Result<SeriesSum>
where
    F: FnMut(usize) -> Result<f64>,
{
    spec.validate()?;
    let mut acc = Accumulator::<1>::new(*spec);
    for l in 0..spec.max_terms {
        if acc.push([term(l)?]) {
            return Ok(SeriesSum {
                value: acc.sum[0],
                terms: acc.next_l,
            });
        }
    }
    Err(acc.exhausted())
}

/// Same result as [`sum_matsubara`], but evaluates terms concurrently in
/// blocks. Reduction stays in order of `l`, so the value does not depend on
/// scheduling.
pub fn sum_matsubara_par<F>(term: F, spec: &SeriesSpec) -> Result<SeriesSum>
where
    F: Fn(usize) -> Result<f64> + Sync,
{
    let (value, terms) = sum_matsubara_multi(|l| term(l).map(|t| [t]), spec)?;
    Ok(SeriesSum {
        value: value[0],
        terms,
    })
}

/// Parallel primed sum of `N` components at once. Returns the component sums
/// and the number of terms kept.
pub fn sum_matsubara_multi<const N: usize, F>(term: F, spec: &SeriesSpec) -> Result<([f64; N], usize)>
where
    F: Fn(usize) -> Result<[f64; N]> + Sync,
{
    spec.validate()?;
    let mut acc = Accumulator::<N>::new(*spec);
    let mut block = 16usize;
    let mut start = 0usize;
    while start < spec.max_terms {
        let end = (start + block).min(spec.max_terms);
        let values: Vec<Result<[f64; N]>> = (start..end).into_par_iter().map(&term).collect();
        for v in values {
            if acc.push(v?) {
                return Ok((acc.sum, acc.next_l));
            }
        }
        start = end;
        block = (block * 2).min(1024);
    }
    Err(acc.exhausted())
}
