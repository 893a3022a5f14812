//! Exhaustive search for sequences with a prescribed off-phase value set.
//!
//! Candidates are walked in Gray-code order so that each step flips one
//! symbol; the difference function `d_C(w) = |(w + C) ∩ C|` is updated in
//! `O(N)` per step and the autocorrelation read off as `N − 4(k − d_C(w))`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::classify::{optimal_set, perfect_sets};
use crate::correlation::auto_spectrum;
use crate::error::{Error, Result};
use crate::seq::BinarySequence;

pub const DEFAULT_MAX_PERIOD: usize = 28;
/// Hard ceiling even with an override: words are 64-bit and the walk is
/// exponential.
pub const ABSOLUTE_MAX_PERIOD: usize = 40;
pub const MAX_PERIOD_ENV: &str = "OPTSEQ_MAX_N";

/// Search cap from `OPTSEQ_MAX_N`, falling back to the default.
pub fn configured_max_period() -> usize {
    std::env::var(MAX_PERIOD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .map_or(DEFAULT_MAX_PERIOD, |n: usize| n.min(ABSOLUTE_MAX_PERIOD))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchTarget {
    Perfect,
    Optimal,
    /// Every off-phase value lies in the set.
    Values(BTreeSet<i64>),
}

impl fmt::Display for SearchTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Perfect => f.write_str("perfect"),
            Self::Optimal => f.write_str("optimal"),
            Self::Values(values) => {
                let parts: Vec<String> = values.iter().map(i64::to_string).collect();
                write!(f, "values={}", parts.join(","))
            }
        }
    }
}

impl FromStr for SearchTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perfect" => Ok(Self::Perfect),
            "optimal" => Ok(Self::Optimal),
            _ => {
                let csv = s
                    .strip_prefix("values=")
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown search target {s:?}")))?;
                let values = csv
                    .split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::InvalidParameter(format!("bad target value {v:?}")))
                    })
                    .collect::<Result<BTreeSet<i64>>>()?;
                Ok(Self::Values(values))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub period: usize,
    pub target: SearchTarget,
    /// Report one representative (the least rotation) per class.
    pub canonicalize: bool,
    /// Worker threads; 0 uses the global pool.
    pub jobs: usize,
    pub max_period: usize,
}

impl SearchSpec {
    pub fn new(period: usize, target: SearchTarget) -> Self {
        Self {
            period,
            target,
            canonicalize: false,
            jobs: 0,
            max_period: configured_max_period(),
        }
    }

    pub fn canonical(mut self, canonicalize: bool) -> Self {
        self.canonicalize = canonicalize;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn max_period(mut self, cap: usize) -> Self {
        self.max_period = cap;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.period == 0 {
            return Err(Error::EmptySequence);
        }
        let cap = self.max_period.min(ABSOLUTE_MAX_PERIOD);
        if self.period > cap {
            return Err(Error::SearchCap {
                period: self.period,
                cap,
            });
        }
        if let SearchTarget::Values(values) = &self.target {
            if let Some(&value) = values.iter().find(|&&v| (v - self.period as i64) % 2 != 0) {
                return Err(Error::TargetParity {
                    value,
                    period: self.period,
                });
            }
        }
        Ok(())
    }
}

/// Which symmetries [`canonical_form_with`] quotients by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Equivalence {
    #[default]
    Rotation,
    RotationComplement,
}

/// Least rotation of `a` in lexicographic order.
pub fn canonical_form(a: &BinarySequence) -> BinarySequence {
    canonical_form_with(a, Equivalence::Rotation)
}

pub fn canonical_form_with(a: &BinarySequence, equivalence: Equivalence) -> BinarySequence {
    let least = |s: &BinarySequence| {
        (0..s.period() as i64)
            .map(|m| s.shift(m))
            .min()
            .expect("period is positive")
    };
    match equivalence {
        Equivalence::Rotation => least(a),
        Equivalence::RotationComplement => least(a).min(least(&a.complement())),
    }
}

/// Off-phase predicate for a target at a fixed period.
#[derive(Debug, Clone)]
struct Predicate {
    allowed: BTreeSet<i64>,
    /// Sets that must be matched exactly rather than as subsets.
    exact: Vec<BTreeSet<i64>>,
    /// Sets excluded even though they pass `allowed`.
    excluded: Vec<BTreeSet<i64>>,
}

impl Predicate {
    fn new(target: &SearchTarget, period: usize) -> Self {
        let residue = period % 4;
        match target {
            SearchTarget::Perfect => {
                let exact = perfect_sets(residue);
                Self {
                    allowed: exact.iter().flatten().copied().collect(),
                    exact,
                    excluded: Vec::new(),
                }
            }
            SearchTarget::Optimal => Self {
                allowed: optimal_set(residue),
                exact: Vec::new(),
                excluded: perfect_sets(residue),
            },
            SearchTarget::Values(values) => Self {
                allowed: values.clone(),
                exact: Vec::new(),
                excluded: Vec::new(),
            },
        }
    }

    fn quick(&self, value: i64) -> bool {
        self.allowed.contains(&value)
    }

    fn accepts(&self, off_phase: &[i64]) -> bool {
        if !off_phase.iter().all(|v| self.quick(*v)) {
            return false;
        }
        let set: BTreeSet<i64> = off_phase.iter().copied().collect();
        if set.is_empty() {
            return false;
        }
        (self.exact.is_empty() || self.exact.contains(&set)) && !self.excluded.contains(&set)
    }
}

/// Difference-function state of one candidate, updated one flip at a time.
#[derive(Debug, Clone)]
pub struct SupportWalker {
    period: usize,
    bits: Vec<u8>,
    weight: i64,
    /// `diff[w] = |(w + C) ∩ C|`.
    diff: Vec<i64>,
}

impl SupportWalker {
    pub fn new(period: usize, word: u64) -> Self {
        let bits: Vec<u8> = (0..period).map(|t| ((word >> t) & 1) as u8).collect();
        let diff = (0..period)
            .map(|w| (0..period).filter(|&t| bits[t] == 1 && bits[(t + w) % period] == 1).count() as i64)
            .collect();
        Self {
            period,
            weight: bits.iter().map(|&b| i64::from(b)).sum(),
            bits,
            diff,
        }
    }

    pub fn flip(&mut self, j: usize) {
        let n = self.period;
        let delta = if self.bits[j] == 1 { -1 } else { 1 };
        for w in 1..n {
            let incident = i64::from(self.bits[(j + w) % n]) + i64::from(self.bits[(j + n - w) % n]);
            self.diff[w] += delta * incident;
        }
        self.bits[j] ^= 1;
        self.weight += delta;
        self.diff[0] = self.weight;
    }

    pub fn word(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (t, &b)| acc | (u64::from(b) << t))
    }

    /// `R(w) = N − 4(k − d_C(w))`.
    #[inline]
    pub fn autocorrelation(&self, w: usize) -> i64 {
        self.period as i64 - 4 * (self.weight - self.diff[w])
    }

    pub fn spectrum(&self) -> Vec<i64> {
        (0..self.period).map(|w| self.autocorrelation(w)).collect()
    }

    pub fn sequence(&self) -> BinarySequence {
        BinarySequence::new(self.bits.clone()).expect("positive period")
    }
}

/// Walks `2^low` candidates sharing the high bits of `start`, in Gray-code
/// order, calling `f` on each state.
fn walk(period: usize, start: u64, low: usize, mut f: impl FnMut(&SupportWalker)) {
    let mut walker = SupportWalker::new(period, start);
    f(&walker);
    for i in 1u64..(1u64 << low) {
        walker.flip(i.trailing_zeros() as usize);
        f(&walker);
    }
}

/// Visits every sequence of the period once, in Gray-code order, with its
/// support-based autocorrelation state.
pub fn for_each_candidate(period: usize, f: impl FnMut(&SupportWalker)) {
    walk(period, 0, period, f);
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSummary {
    pub period: usize,
    pub target: SearchTarget,
    pub canonical: bool,
    pub candidates: u64,
    /// Hits before canonical reduction.
    pub hits: u64,
    /// Distinct rotation classes among the hits.
    pub classes: u64,
    pub reported: u64,
}

impl SearchSummary {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "period": self.period,
            "target": self.target.to_string(),
            "canonical": self.canonical,
            "candidates": self.candidates,
            "hits": self.hits,
            "classes": self.classes,
            "reported": self.reported,
            "audited": true,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Lexicographically sorted.
    pub sequences: Vec<BinarySequence>,
    pub summary: SearchSummary,
}

const PARTITION_BITS: usize = 6;

pub fn exhaustive_search(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let n = spec.period;
    let predicate = Predicate::new(&spec.target, n);
    let high = PARTITION_BITS.min(n);
    let low = n - high;
    // Off-phase values are symmetric, so w ≤ N/2 decides.
    let half = n / 2;

    let run = || -> Vec<Vec<BinarySequence>> {
        (0..1u64 << high)
            .into_par_iter()
            .map(|prefix| {
                let mut found = Vec::new();
                walk(n, prefix << low, low, |state| {
                    if (1..=half).all(|w| predicate.quick(state.autocorrelation(w)))
                        && predicate.accepts(&state.spectrum()[1..])
                    {
                        found.push(state.sequence());
                    }
                });
                found
            })
            .collect()
    };
    let parts = if spec.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| Error::Guard(format!("thread pool: {e}")))?
            .install(run)
    };

    let mut hits: Vec<BinarySequence> = parts.into_iter().flatten().collect();
    hits.sort();
    for hit in &hits {
        if !predicate.accepts(auto_spectrum(hit).off_phase()) {
            return Err(Error::Guard(format!("search hit {hit} fails its audit")));
        }
    }
    let classes: BTreeSet<BinarySequence> = hits.iter().map(canonical_form).collect();
    let total = hits.len() as u64;
    let sequences: Vec<BinarySequence> = if spec.canonicalize {
        classes.iter().cloned().collect()
    } else {
        hits
    };
    Ok(SearchOutcome {
        summary: SearchSummary {
            period: n,
            target: spec.target.clone(),
            canonical: spec.canonicalize,
            candidates: 1u64 << n,
            hits: total,
            classes: classes.len() as u64,
            reported: sequences.len() as u64,
        },
        sequences,
    })
}
