use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::constructions::construct_v;
use crate::correlation::auto_spectrum;
use crate::error::{Error, Result};
use crate::seq::BinarySequence;

/// Input condition under which `v` is claimed to reach the pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characterization {
    /// Both inputs ideal (`N ≡ 3 mod 4`); pattern `{−4, 0}` off-phase.
    BothIdeal,
    /// Both inputs with off-phase constantly 1 (`N ≡ 1 mod 4`); pattern `{4, 0}`.
    BothConstantOne,
}

impl Characterization {
    pub fn for_period(period: usize) -> Result<Self> {
        match period % 4 {
            3 => Ok(Self::BothIdeal),
            1 => Ok(Self::BothConstantOne),
            _ => Err(Error::InvalidParameter(format!(
                "no characterization for period {period}"
            ))),
        }
    }

    fn input_value(self) -> i64 {
        match self {
            Self::BothIdeal => -1,
            Self::BothConstantOne => 1,
        }
    }

    pub fn pattern(self) -> BTreeSet<i64> {
        match self {
            Self::BothIdeal => BTreeSet::from([-4, 0]),
            Self::BothConstantOne => BTreeSet::from([4, 0]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiconditionalReport {
    pub period: usize,
    pub characterization: Characterization,
    pub pairs_checked: u64,
    /// Pairs whose `v` shows the pattern.
    pub pattern_hits: u64,
    /// Pairs satisfying the input characterization.
    pub characterized: u64,
    /// Characterized pairs whose `v` misses the pattern.
    pub forward_failures: Vec<(BinarySequence, BinarySequence)>,
    /// Pattern pairs outside the characterization.
    pub backward_failures: Vec<(BinarySequence, BinarySequence)>,
}

impl BiconditionalReport {
    pub fn holds(&self) -> bool {
        self.forward_failures.is_empty() && self.backward_failures.is_empty()
    }
}

const MAX_PERIOD: usize = 10;

/// Exhaustive check over all `2^N × 2^N` input pairs that `v = I(a, b, ...)`
/// has off-phase values inside the pattern exactly when `(a, b)` satisfies
/// the characterization for `N mod 4`.
pub fn exhaustive_v_biconditional(period: usize) -> Result<BiconditionalReport> {
    if period > MAX_PERIOD {
        return Err(Error::SearchCap {
            period,
            cap: MAX_PERIOD,
        });
    }
    let characterization = Characterization::for_period(period)?;
    let pattern = characterization.pattern();
    let target = characterization.input_value();
    let all: Vec<BinarySequence> = (0..1u64 << period)
        .map(|w| BinarySequence::from_word(w, period).expect("positive period"))
        .collect();
    let good: Vec<bool> = all
        .iter()
        .map(|a| auto_spectrum(a).off_phase().iter().all(|&r| r == target))
        .collect();

    type Pair = (BinarySequence, BinarySequence);
    let per_a: Vec<(u64, u64, Vec<Pair>, Vec<Pair>)> = (0..all.len())
        .into_par_iter()
        .map(|i| {
            let (mut hits, mut characterized) = (0, 0);
            let (mut fwd, mut bwd) = (Vec::new(), Vec::new());
            for j in 0..all.len() {
                let v = construct_v(&all[i], &all[j]).expect("odd period");
                let in_pattern = auto_spectrum(&v).off_phase().iter().all(|r| pattern.contains(r));
                let expected = good[i] && good[j];
                hits += in_pattern as u64;
                characterized += expected as u64;
                match (expected, in_pattern) {
                    (true, false) => fwd.push((all[i].clone(), all[j].clone())),
                    (false, true) => bwd.push((all[i].clone(), all[j].clone())),
                    _ => {}
                }
            }
            (hits, characterized, fwd, bwd)
        })
        .collect();

    let mut report = BiconditionalReport {
        period,
        characterization,
        pairs_checked: (all.len() * all.len()) as u64,
        pattern_hits: 0,
        characterized: 0,
        forward_failures: Vec::new(),
        backward_failures: Vec::new(),
    };
    for (hits, characterized, fwd, bwd) in per_a {
        report.pattern_hits += hits;
        report.characterized += characterized;
        report.forward_failures.extend(fwd);
        report.backward_failures.extend(bwd);
    }
    Ok(report)
}
