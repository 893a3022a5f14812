//! Correlation of pair interleaves `a ‖ b`.

use crate::constructions::half_shift;
use crate::correlation::CorrelationSpectrum;
use crate::error::{Error, Result};

use super::PredictedSpectrum;

fn same_period(spectra: &[&CorrelationSpectrum]) -> Result<usize> {
    let n = spectra[0].period();
    match spectra.iter().find(|s| s.period() != n) {
        Some(s) => Err(Error::PeriodMismatch {
            left: n,
            right: s.period(),
        }),
        None => Ok(n),
    }
}

fn odd(n: usize) -> Result<usize> {
    if n % 2 == 0 {
        Err(Error::EvenPeriod(n))
    } else {
        Ok(n)
    }
}

/// `R_{(a‖b)(c‖d)}`: even `τ` gives `R_ac(τ/2) + R_bd(τ/2)`, odd `τ` gives
/// `R_ad((τ−1)/2) + R_bc((τ+1)/2)`.
pub fn predict_lemma8(
    rac: &CorrelationSpectrum,
    rbd: &CorrelationSpectrum,
    rad: &CorrelationSpectrum,
    rbc: &CorrelationSpectrum,
) -> Result<PredictedSpectrum> {
    let n = same_period(&[rac, rbd, rad, rbc])?;
    Ok(PredictedSpectrum::from_fn(2 * n, "pair interleave cross-correlation", |tau| {
        let t = tau as i64;
        if tau % 2 == 0 {
            rac.at(t / 2) + rbd.at(t / 2)
        } else {
            rad.at((t - 1) / 2) + rbc.at((t + 1) / 2)
        }
    }))
}

/// `R_{a‖b}`, the auto case of [`predict_lemma8`].
pub fn predict_lemma9(
    ra: &CorrelationSpectrum,
    rb: &CorrelationSpectrum,
    rab: &CorrelationSpectrum,
    rba: &CorrelationSpectrum,
) -> Result<PredictedSpectrum> {
    predict_lemma8(ra, rb, rab, rba)
}

fn shifted_pair(ra: &CorrelationSpectrum, m: i64, sign: i64, provenance: &str) -> PredictedSpectrum {
    PredictedSpectrum::from_fn(2 * ra.period(), provenance, |tau| {
        let t = tau as i64;
        if tau % 2 == 0 {
            2 * ra.at(t / 2)
        } else {
            sign * (ra.at((t - 1) / 2 + m) + ra.at((t + 1) / 2 - m))
        }
    })
}

fn half_pair(ra: &CorrelationSpectrum, sign: i64, provenance: &str) -> Result<PredictedSpectrum> {
    let n = odd(ra.period())? as i64;
    Ok(PredictedSpectrum::from_fn(2 * n as usize, provenance, |tau| {
        let t = tau as i64;
        if tau % 2 == 0 {
            2 * ra.at(t / 2)
        } else {
            sign * 2 * ra.at((t + n) / 2)
        }
    }))
}

/// `R_{a‖L^m(a)}`.
pub fn predict_lemma10(ra: &CorrelationSpectrum, m: i64) -> PredictedSpectrum {
    shifted_pair(ra, m, 1, "a ‖ L^m(a)")
}

/// `R_{a‖L^m(a)}` for odd `N` and `m = (N+1)/2`: odd `τ` gives `2R_a((τ+N)/2)`.
pub fn predict_lemma10_half(ra: &CorrelationSpectrum) -> Result<PredictedSpectrum> {
    half_pair(ra, 1, "a ‖ L^((N+1)/2)(a)")
}

/// `R_{a‖L^m(ā)}`: the odd branch of [`predict_lemma10`] negated.
pub fn predict_lemma11(ra: &CorrelationSpectrum, m: i64) -> PredictedSpectrum {
    shifted_pair(ra, m, -1, "a ‖ L^m(ā)")
}

pub fn predict_lemma11_half(ra: &CorrelationSpectrum) -> Result<PredictedSpectrum> {
    half_pair(ra, -1, "a ‖ L^((N+1)/2)(ā)")
}

/// Cross-correlation of `a ‖ L^m(ā)` with `b ‖ L^m(b)`, `m = (N+1)/2`, in
/// either order: identically zero.
pub fn predict_lemma12(base_period: usize) -> Result<PredictedSpectrum> {
    let n = odd(base_period)?;
    debug_assert_eq!(half_shift(n) as usize, (n + 1) / 2);
    Ok(PredictedSpectrum::from_fn(2 * n, "half-shift pair cross-correlation", |_| 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{auto_spectrum, cross_spectrum};
    use crate::seq::{interleave2, BinarySequence};

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn lemma9_on_a_small_pair() {
        let (a, b) = (seq("1101000"), seq("0010111"));
        let p = predict_lemma9(
            &auto_spectrum(&a),
            &auto_spectrum(&b),
            &cross_spectrum(&a, &b).unwrap(),
            &cross_spectrum(&b, &a).unwrap(),
        )
        .unwrap();
        assert_eq!(p.variants()[0].values, auto_spectrum(&interleave2(&a, &b).unwrap()).values());
    }

    #[test]
    fn half_shift_forms() {
        let a = seq("110010100");
        let m = half_shift(9);
        let ra = auto_spectrum(&a);
        let u = interleave2(&a, &a.shift(m)).unwrap();
        assert_eq!(predict_lemma10_half(&ra).unwrap().variants()[0].values, auto_spectrum(&u).values());
        assert_eq!(predict_lemma10(&ra, m).variants()[0].values, auto_spectrum(&u).values());
        let u = interleave2(&a, &a.complement().shift(m)).unwrap();
        assert_eq!(predict_lemma11_half(&ra).unwrap().variants()[0].values, auto_spectrum(&u).values());
    }

    #[test]
    fn lemma12_zero() {
        let (a, b) = (seq("10011"), seq("01110"));
        let m = half_shift(5);
        let left = interleave2(&a, &a.complement().shift(m)).unwrap();
        let right = interleave2(&b, &b.shift(m)).unwrap();
        let zero = predict_lemma12(5).unwrap();
        assert_eq!(zero.variants()[0].values, cross_spectrum(&left, &right).unwrap().values());
        assert_eq!(zero.variants()[0].values, cross_spectrum(&right, &left).unwrap().values());
        assert!(predict_lemma12(6).is_err());
    }
}
