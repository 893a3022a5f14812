//! Closed-form spectrum predictions and their check against brute force.
//!
//! A [`PredictedSpectrum`] carries one or more *variants*: alternative
//! readings of a formula (a sign left open by "8 (or −8)", a residue-class
//! labeling, a branch of a two-way formula). Verification evaluates every
//! variant against the exact spectrum and keeps the one with the fewest
//! mismatches; zero mismatches is required for a check to count as verified.

mod biconditional;
mod lemma3;
mod pairs;
mod predict;
mod targets;
mod wlists;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::correlation::{auto_spectrum, CorrelationSpectrum};
use crate::error::{Error, Result};
use crate::seq::BinarySequence;

pub use biconditional::{exhaustive_v_biconditional, BiconditionalReport, Characterization};
pub use lemma3::check_lemma3;
pub use pairs::{
    predict_lemma10, predict_lemma10_half, predict_lemma11, predict_lemma11_half, predict_lemma12,
    predict_lemma8, predict_lemma9,
};
pub use predict::{
    predict_legendre, predict_legendre_cross, predict_lemma4, predict_lemma7, predict_theorem, predict_v,
    predict_w, CrossOrder, Lemma4Prediction, Lemma7Prediction, TheoremParams,
};
pub use targets::{
    verify_lemma3, verify_lemma4, verify_lemma5, verify_lemma6, verify_lemma7, verify_theorem1,
    verify_theorem2, verify_theorem3, verify_theorem7, verify_theorem_instance, verify_wlist,
    InputOrder, Lemma3Family, SeriesFamily,
};
pub use wlists::predict_wlist;

pub type ParamMap = BTreeMap<String, String>;

fn param_map<'a>(pairs: impl IntoIterator<Item = (&'a str, String)>) -> ParamMap {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// One reading of a closed form, tabulated over `τ = 0..period`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictionVariant {
    pub params: ParamMap,
    pub values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedSpectrum {
    period: usize,
    provenance: String,
    variants: Vec<PredictionVariant>,
}

impl PredictedSpectrum {
    pub fn new(period: usize, provenance: impl Into<String>) -> Self {
        Self {
            period,
            provenance: provenance.into(),
            variants: Vec::new(),
        }
    }

    /// Single-variant prediction from a closed form.
    pub fn from_fn(period: usize, provenance: impl Into<String>, f: impl Fn(usize) -> i64) -> Self {
        Self::new(period, provenance).with_variant(ParamMap::new(), f)
    }

    pub fn with_variant(mut self, params: ParamMap, f: impl Fn(usize) -> i64) -> Self {
        self.variants.push(PredictionVariant {
            params,
            values: (0..self.period).map(f).collect(),
        });
        self
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn variants(&self) -> &[PredictionVariant] {
        &self.variants
    }

    /// Value of the first variant at `τ mod period`.
    pub fn evaluate(&self, tau: i64) -> i64 {
        self.evaluate_variant(0, tau)
    }

    pub fn evaluate_variant(&self, variant: usize, tau: i64) -> i64 {
        self.variants[variant].values[tau.rem_euclid(self.period as i64) as usize]
    }

    /// The variant whose params contain every `(key, value)` in `selector`.
    pub fn variant_where(&self, key: &str, value: &str) -> Option<&PredictionVariant> {
        self.variants
            .iter()
            .find(|v| v.params.get(key).map(String::as_str) == Some(value))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub tau: usize,
    pub predicted: i64,
    pub computed: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantOutcome {
    pub params: ParamMap,
    pub mismatches: usize,
}

/// Comparison of one computed spectrum against one prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumCheck {
    pub name: String,
    pub provenance: String,
    pub checked: usize,
    /// Mismatches of the best variant.
    pub mismatches: Vec<Mismatch>,
    /// Parameters of the best variant.
    pub resolved: ParamMap,
    pub variants: Vec<VariantOutcome>,
}

impl SpectrumCheck {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Mismatch count of the first variant carrying `key = value`.
    pub fn variant_mismatches(&self, key: &str, value: &str) -> Option<usize> {
        self.variants
            .iter()
            .find(|v| v.params.get(key).map(String::as_str) == Some(value))
            .map(|v| v.mismatches)
    }
}

/// Compares `computed` with every variant of `prediction`, keeping the
/// variant with the fewest mismatches (earliest on ties).
pub fn verify_spectrum(
    name: impl Into<String>,
    computed: &CorrelationSpectrum,
    prediction: &PredictedSpectrum,
) -> Result<SpectrumCheck> {
    if computed.period() != prediction.period() {
        return Err(Error::PeriodMismatch {
            left: computed.period(),
            right: prediction.period(),
        });
    }
    let mut best: Option<(usize, Vec<Mismatch>)> = None;
    let mut variants = Vec::with_capacity(prediction.variants.len());
    for (idx, variant) in prediction.variants.iter().enumerate() {
        let mismatches: Vec<Mismatch> = computed
            .values()
            .iter()
            .zip(&variant.values)
            .enumerate()
            .filter(|(_, (c, p))| c != p)
            .map(|(tau, (&computed, &predicted))| Mismatch {
                tau,
                predicted,
                computed,
            })
            .collect();
        variants.push(VariantOutcome {
            params: variant.params.clone(),
            mismatches: mismatches.len(),
        });
        if best.as_ref().map_or(true, |(_, m)| mismatches.len() < m.len()) {
            best = Some((idx, mismatches));
        }
    }
    let (idx, mismatches) = best.ok_or_else(|| Error::InvalidParameter("prediction has no variants".into()))?;
    Ok(SpectrumCheck {
        name: name.into(),
        provenance: prediction.provenance.clone(),
        checked: computed.period(),
        mismatches,
        resolved: prediction.variants[idx].params.clone(),
        variants,
    })
}

/// Brute-force autocorrelation of `seq` against `prediction`.
pub fn verify_construction(seq: &BinarySequence, prediction: &PredictedSpectrum) -> Result<SpectrumCheck> {
    verify_spectrum("R", &auto_spectrum(seq), prediction)
}

/// Outcome of one verification target, possibly spanning several spectra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub target: String,
    pub params: ParamMap,
    pub checks: Vec<SpectrumCheck>,
}

impl VerificationReport {
    pub fn new(target: impl Into<String>, params: ParamMap, checks: Vec<SpectrumCheck>) -> Self {
        Self {
            target: target.into(),
            params,
            checks,
        }
    }

    pub fn verified(&self) -> bool {
        self.checks.iter().all(SpectrumCheck::verified)
    }

    pub fn checked(&self) -> usize {
        self.checks.iter().map(|c| c.checked).sum()
    }

    pub fn mismatch_count(&self) -> usize {
        self.checks.iter().map(|c| c.mismatches.len()).sum()
    }

    pub fn check(&self, name: &str) -> Option<&SpectrumCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Resolved variant parameters; keys are prefixed with the check name
    /// when the report spans more than one spectrum.
    pub fn resolved(&self) -> ParamMap {
        let prefix = self.checks.len() > 1;
        self.checks
            .iter()
            .flat_map(|c| {
                c.resolved.iter().map(move |(k, v)| {
                    let key = if prefix { format!("{}.{k}", c.name) } else { k.clone() };
                    (key, v.clone())
                })
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mismatches: Vec<serde_json::Value> = self
            .checks
            .iter()
            .flat_map(|c| {
                c.mismatches.iter().map(move |m| {
                    serde_json::json!({
                        "spectrum": c.name,
                        "tau": m.tau,
                        "predicted": m.predicted,
                        "computed": m.computed,
                    })
                })
            })
            .collect();
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "spectrum": c.name,
                    "provenance": c.provenance,
                    "checked": c.checked,
                    "verified": c.verified(),
                    "variants": c.variants,
                })
            })
            .collect();
        serde_json::json!({
            "schema": 1,
            "target": self.target,
            "params": self.params,
            "verified": self.verified(),
            "resolved": self.resolved(),
            "mismatches": mismatches,
            "checks": checks,
        })
    }
}
