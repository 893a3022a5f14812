//! Exact periodic correlation.
//!
//! `R_ab(τ) = Σ_t (-1)^(a(t) + b(t+τ))` with indices taken modulo the period.
//! The direct `O(N²)` engine here is the reference every other path is
//! checked against: [`fast_auto_spectrum`] runs through an FFT and falls back
//! to it whenever its rounding guard trips.

use std::collections::BTreeMap;

use rayon::prelude::*;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::seq::{reduce, BinarySequence};

/// Spectra at or above this period are evaluated in parallel over `τ`.
const PARALLEL_PERIOD: usize = 512;

/// Largest distance from the nearest integer the FFT path may produce
/// before its result is discarded.
pub const RESIDUAL_GUARD: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Auto,
    Cross,
}

/// `R(0), …, R(N-1)` for one pair of sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationSpectrum {
    kind: SpectrumKind,
    values: Vec<i64>,
}

impl CorrelationSpectrum {
    pub fn new(kind: SpectrumKind, values: Vec<i64>) -> Self {
        Self { kind, values }
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `R(τ mod N)`.
    #[inline]
    pub fn at(&self, tau: i64) -> i64 {
        self.values[reduce(tau, self.values.len())]
    }

    /// Values for `τ ≢ 0`.
    pub fn off_phase(&self) -> &[i64] {
        &self.values[1..]
    }

    /// Value counts over all `τ`.
    pub fn histogram(&self) -> BTreeMap<i64, usize> {
        count_values(&self.values)
    }

    pub fn off_phase_histogram(&self) -> BTreeMap<i64, usize> {
        count_values(self.off_phase())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("tau,R\n");
        for (tau, r) in self.values.iter().enumerate() {
            out.push_str(&format!("{tau},{r}\n"));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (tau, r) in self.values.iter().enumerate() {
            out.push_str(&format!("{tau}\t{r}\n"));
        }
        out
    }

    /// `{"period": N, "values": [...], "histogram": {value: count}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let histogram: serde_json::Map<String, serde_json::Value> = self
            .histogram()
            .into_iter()
            .map(|(v, c)| (v.to_string(), c.into()))
            .collect();
        serde_json::json!({
            "period": self.period(),
            "values": self.values,
            "histogram": histogram,
        })
    }
}

pub(crate) fn count_values(values: &[i64]) -> BTreeMap<i64, usize> {
    let mut hist = BTreeMap::new();
    for &v in values {
        *hist.entry(v).or_insert(0) += 1;
    }
    hist
}

/// `τ = T·τ₁ + τ₂` with `0 ≤ τ₂ < T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauDecomposition {
    pub tau: usize,
    pub tau1: usize,
    pub tau2: usize,
}

impl TauDecomposition {
    pub fn new(tau: usize, columns: usize) -> Self {
        Self {
            tau,
            tau1: tau / columns,
            tau2: tau % columns,
        }
    }

    pub fn recompose(&self, columns: usize) -> usize {
        columns * self.tau1 + self.tau2
    }
}

fn check_periods(a: &BinarySequence, b: &BinarySequence) -> Result<()> {
    if a.period() == b.period() {
        Ok(())
    } else {
        Err(Error::PeriodMismatch {
            left: a.period(),
            right: b.period(),
        })
    }
}

/// Direct evaluation on raw symbol slices of equal length; `tau < N`.
#[inline]
fn corr_raw(a: &[u8], b: &[u8], tau: usize) -> i64 {
    let n = a.len();
    let (head, tail) = a.split_at(n - tau);
    let disagree = xor_count(head, &b[tau..]) + xor_count(tail, &b[..tau]);
    n as i64 - 2 * disagree as i64
}

#[inline]
fn xor_count(x: &[u8], y: &[u8]) -> u64 {
    // Chunked so the inner sum stays in u32 lanes and vectorizes.
    x.chunks(1 << 16)
        .zip(y.chunks(1 << 16))
        .map(|(cx, cy)| cx.iter().zip(cy).map(|(&p, &q)| u32::from(p ^ q)).sum::<u32>() as u64)
        .sum()
}

/// `R_ab(τ)` with `τ` reduced modulo the common period.
pub fn cross_corr(a: &BinarySequence, b: &BinarySequence, tau: i64) -> Result<i64> {
    check_periods(a, b)?;
    Ok(corr_raw(a.bits(), b.bits(), reduce(tau, a.period())))
}

fn spectrum_raw(a: &[u8], b: &[u8]) -> Vec<i64> {
    let n = a.len();
    if n >= PARALLEL_PERIOD {
        (0..n).into_par_iter().map(|tau| corr_raw(a, b, tau)).collect()
    } else {
        (0..n).map(|tau| corr_raw(a, b, tau)).collect()
    }
}

pub fn auto_spectrum(a: &BinarySequence) -> CorrelationSpectrum {
    CorrelationSpectrum::new(SpectrumKind::Auto, spectrum_raw(a.bits(), a.bits()))
}

pub fn cross_spectrum(a: &BinarySequence, b: &BinarySequence) -> Result<CorrelationSpectrum> {
    check_periods(a, b)?;
    Ok(CorrelationSpectrum::new(
        SpectrumKind::Cross,
        spectrum_raw(a.bits(), b.bits()),
    ))
}

/// Autocorrelation through the support: `R(τ) = N − 4(k − |(τ + C) ∩ C|)`.
pub fn auto_corr_via_support(a: &BinarySequence, tau: i64) -> i64 {
    let support = a.support();
    let n = a.period() as i64;
    let k = support.size() as i64;
    n - 4 * (k - support.shifted_overlap(tau) as i64)
}

/// How [`fast_auto_spectrum_checked`] produced its answer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FastPathOutcome {
    /// The transform result passed the guard.
    Transform { max_residual: f64 },
    /// The guard tripped and the direct engine was used instead.
    Fallback { max_residual: f64 },
}

impl FastPathOutcome {
    pub fn is_fallback(&self) -> bool {
        matches!(self, Self::Fallback { .. })
    }
}

/// FFT autocorrelation, rounded to integers. The result is accepted only if
/// every pre-rounding value lies within [`RESIDUAL_GUARD`] of an integer and
/// the rounded values keep the parity and bounds every exact spectrum has.
pub fn fast_auto_spectrum_checked(a: &BinarySequence) -> (CorrelationSpectrum, FastPathOutcome) {
    let n = a.period();
    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(n);
    let inverse = planner.plan_fft_inverse(n);

    let mut buffer: Vec<Complex<f64>> = a
        .bits()
        .iter()
        .map(|&b| Complex::new(if b == 0 { 1.0 } else { -1.0 }, 0.0))
        .collect();
    forward.process(&mut buffer);
    for x in buffer.iter_mut() {
        *x = Complex::new(x.norm_sqr(), 0.0);
    }
    inverse.process(&mut buffer);

    let scale = n as f64;
    let mut max_residual = 0.0f64;
    let mut values = Vec::with_capacity(n);
    let mut consistent = true;
    for x in &buffer {
        let raw = x.re / scale;
        let rounded = raw.round();
        max_residual = max_residual.max((raw - rounded).abs()).max((x.im / scale).abs());
        let r = rounded as i64;
        if (r - n as i64).rem_euclid(2) != 0 || r.unsigned_abs() as usize > n {
            consistent = false;
        }
        values.push(r);
    }
    consistent &= values.first() == Some(&(n as i64));

    if consistent && max_residual < RESIDUAL_GUARD {
        (
            CorrelationSpectrum::new(SpectrumKind::Auto, values),
            FastPathOutcome::Transform { max_residual },
        )
    } else {
        (auto_spectrum(a), FastPathOutcome::Fallback { max_residual })
    }
}

pub fn fast_auto_spectrum(a: &BinarySequence) -> CorrelationSpectrum {
    fast_auto_spectrum_checked(a).0
}

/// Cross-correlation of two interleaved sequences evaluated column by column.
///
/// With `u = I(c₀, …, c_{T−1})`, `u' = I(d₀, …, d_{T−1})` and `τ = T·τ₁ + τ₂`,
/// `R_{uu'}(τ) = Σ_j R_{c_j, d_{(j+τ₂) mod T}}(τ₁ + [j + τ₂ ≥ T])`.
pub fn interleaved_cross_decompose(
    left: &[BinarySequence],
    right: &[BinarySequence],
    tau: i64,
) -> Result<i64> {
    let columns = left.len();
    if columns == 0 {
        return Err(Error::NoColumns);
    }
    if right.len() != columns {
        return Err(Error::MaskLength {
            mask: right.len(),
            columns,
        });
    }
    let rows = left[0].period();
    for c in left.iter().chain(right) {
        if c.period() != rows {
            return Err(Error::PeriodMismatch {
                left: rows,
                right: c.period(),
            });
        }
    }
    let d = TauDecomposition::new(reduce(tau, rows * columns), columns);
    let mut total = 0;
    for (j, col) in left.iter().enumerate() {
        let target = j + d.tau2;
        let carry = usize::from(target >= columns);
        total += cross_corr(col, &right[target % columns], (d.tau1 + carry) as i64)?;
    }
    Ok(total)
}

/// Autocorrelation of `I(columns)` at `τ` from the column correlations.
pub fn interleaved_corr_decompose(columns: &[BinarySequence], tau: i64) -> Result<i64> {
    interleaved_cross_decompose(columns, columns, tau)
}
