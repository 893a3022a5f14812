use crate::correlation::cross_spectrum;
use crate::error::{Error, Result};
use crate::seq::BinarySequence;

use super::{param_map, Mismatch, SpectrumCheck, VariantOutcome, VerificationReport};

/// Checks `R_{s's}(τ) = R_{ss'}(τ) ⇔ d(a_{T−τ₂}) = d(a_{τ₂})` at every `τ`,
/// with `a_i` the columns of `s` and `τ₂ = τ mod T`.
///
/// A mismatch records the balance condition as `predicted` and the spectrum
/// equality as `computed`, each encoded as 1 (holds) or 0 (fails).
pub fn check_lemma3(s: &BinarySequence, s_mod: &BinarySequence, columns: usize) -> Result<VerificationReport> {
    let period = s.period();
    if columns == 0 || period % columns != 0 {
        return Err(Error::NotDivisible {
            period,
            divisor: columns,
        });
    }
    let forward = cross_spectrum(s, s_mod)?;
    let reverse = cross_spectrum(s_mod, s)?;
    let balances: Vec<i64> = s.deinterleave(columns)?.iter().map(BinarySequence::balance).collect();

    let mismatches: Vec<Mismatch> = (0..period)
        .filter_map(|tau| {
            let t2 = tau % columns;
            let predicted = balances[(columns - t2) % columns] == balances[t2];
            let computed = forward.values()[tau] == reverse.values()[tau];
            (predicted != computed).then_some(Mismatch {
                tau,
                predicted: predicted as i64,
                computed: computed as i64,
            })
        })
        .collect();

    let check = SpectrumCheck {
        name: "biconditional".into(),
        provenance: "cross-correlation symmetry vs column balance".into(),
        checked: period,
        variants: vec![VariantOutcome {
            params: Default::default(),
            mismatches: mismatches.len(),
        }],
        mismatches,
        resolved: Default::default(),
    };
    Ok(VerificationReport::new(
        "lemma3",
        param_map([("period", period.to_string()), ("columns", columns.to_string())]),
        vec![check],
    ))
}
