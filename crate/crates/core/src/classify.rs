//! Spectrum classification against the perfect/optimal value tables, and
//! difference-function analysis of supports.
//!
//! Perfect off-phase value sets by `N mod 4`: `{0}`, `{1}`, `{2}` or `{−2}`,
//! `{−1}`. Optimal sets: `{0, −4}`, `{1, −3}`, `{2, −2}`, `{−1, 3}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::correlation::{auto_spectrum, CorrelationSpectrum, SpectrumKind};
use crate::error::{Error, Result};
use crate::seq::{BinarySequence, Support};

/// The perfect off-phase value sets for a period residue mod 4.
pub fn perfect_sets(residue: usize) -> Vec<BTreeSet<i64>> {
    let sets: &[&[i64]] = match residue % 4 {
        0 => &[&[0]],
        1 => &[&[1]],
        2 => &[&[2], &[-2]],
        _ => &[&[-1]],
    };
    sets.iter().map(|s| s.iter().copied().collect()).collect()
}

/// The optimal off-phase value set for a period residue mod 4.
pub fn optimal_set(residue: usize) -> BTreeSet<i64> {
    let set: [i64; 2] = match residue % 4 {
        0 => [0, -4],
        1 => [1, -3],
        2 => [2, -2],
        _ => [-1, 3],
    };
    set.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumLabel {
    /// Off-phase values form the perfect set. `ideal_two_level` marks the
    /// constant −1 case.
    Perfect { ideal_two_level: bool },
    Optimal,
    Other(String),
}

impl SpectrumLabel {
    pub fn is_perfect(&self) -> bool {
        matches!(self, Self::Perfect { .. })
    }
}

impl fmt::Display for SpectrumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Perfect { ideal_two_level: false } => f.write_str("perfect"),
            Self::Perfect { ideal_two_level: true } => f.write_str("perfect/ideal-two-level"),
            Self::Optimal => f.write_str("optimal"),
            Self::Other(desc) => write!(f, "other({desc})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumClassification {
    pub period: usize,
    pub residue: usize,
    /// Distinct off-phase values with their multiplicities.
    pub off_phase: BTreeMap<i64, usize>,
    pub label: SpectrumLabel,
}

impl SpectrumClassification {
    pub fn value_set(&self) -> BTreeSet<i64> {
        self.off_phase.keys().copied().collect()
    }
}

fn describe(values: &BTreeSet<i64>) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("off-phase values {{{}}}", parts.join(", "))
}

pub fn classify_spectrum(spec: &CorrelationSpectrum) -> Result<SpectrumClassification> {
    if spec.kind() != SpectrumKind::Auto {
        return Err(Error::NotAutoSpectrum);
    }
    let period = spec.period();
    let residue = period % 4;
    let off_phase = spec.off_phase_histogram();
    let values: BTreeSet<i64> = off_phase.keys().copied().collect();

    let label = if values.is_empty() {
        SpectrumLabel::Other("no off-phase values".into())
    } else if perfect_sets(residue).contains(&values) {
        SpectrumLabel::Perfect {
            ideal_two_level: values.len() == 1 && values.contains(&-1),
        }
    } else if values.is_subset(&optimal_set(residue)) {
        SpectrumLabel::Optimal
    } else {
        SpectrumLabel::Other(describe(&values))
    };

    Ok(SpectrumClassification {
        period,
        residue,
        off_phase,
        label,
    })
}

pub fn classify_sequence(a: &BinarySequence) -> SpectrumClassification {
    classify_spectrum(&auto_spectrum(a)).expect("auto spectrum")
}

/// `(N, k, λ, t)`: the difference function takes `λ` on `t` shifts and
/// `λ + 1` on the remaining `N − 1 − t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdsParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub t: usize,
}

/// Difference function of a support: `d_C(w) = |(w + C) ∩ C|`, `w ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdsReport {
    pub period: usize,
    pub k: usize,
    /// Entry `i` holds `d_C(i + 1)`.
    pub diff_counts: Vec<usize>,
    pub value_histogram: BTreeMap<usize, usize>,
    pub ads_params: Option<AdsParams>,
}

impl AdsReport {
    pub fn count(&self, w: usize) -> usize {
        self.diff_counts[w - 1]
    }

    /// `λ` when the difference function is constant, i.e. the support is a
    /// cyclic difference set.
    pub fn difference_set_lambda(&self) -> Option<usize> {
        match self.value_histogram.keys().collect::<Vec<_>>().as_slice() {
            [&lambda] => Some(lambda),
            _ => None,
        }
    }
}

pub fn diff_function(c: &Support) -> AdsReport {
    let n = c.period();
    let diff_counts: Vec<usize> = (1..n).map(|w| c.shifted_overlap(w as i64)).collect();
    let mut value_histogram = BTreeMap::new();
    for &d in &diff_counts {
        *value_histogram.entry(d).or_insert(0) += 1;
    }
    let ads_params = match value_histogram.iter().collect::<Vec<_>>().as_slice() {
        [(&lambda, &t), (&upper, _)] if upper == lambda + 1 => Some(AdsParams {
            n,
            k: c.size(),
            lambda,
            t,
        }),
        _ => None,
    };
    AdsReport {
        period: n,
        k: c.size(),
        diff_counts,
        value_histogram,
        ads_params,
    }
}

pub fn ads_of_sequence(a: &BinarySequence) -> AdsReport {
    diff_function(&a.support())
}

/// `{"schema":1, "period", "residue", "histogram", "label", "ads": {...}}`.
pub fn report_json(a: &BinarySequence) -> serde_json::Value {
    let class = classify_sequence(a);
    let ads = ads_of_sequence(a);
    let histogram: serde_json::Map<String, serde_json::Value> = class
        .off_phase
        .iter()
        .map(|(v, c)| (v.to_string(), (*c).into()))
        .collect();
    serde_json::json!({
        "schema": 1,
        "period": class.period,
        "residue": class.residue,
        "histogram": histogram,
        "label": class.label.to_string(),
        "ads": ads_json(&ads),
    })
}

pub fn ads_json(ads: &AdsReport) -> serde_json::Value {
    let values: serde_json::Map<String, serde_json::Value> = ads
        .value_histogram
        .iter()
        .map(|(v, c)| (v.to_string(), (*c).into()))
        .collect();
    let params = ads
        .ads_params
        .map(|p| serde_json::json!([p.n, p.k, p.lambda, p.t]))
        .unwrap_or(serde_json::Value::Null);
    serde_json::json!({
        "k": ads.k,
        "values": values,
        "params": params,
    })
}
