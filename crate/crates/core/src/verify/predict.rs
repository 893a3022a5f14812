use crate::arith::{is_prime, residue_table};
use crate::constructions::{half_shift, LegendreVariant};
use crate::correlation::{CorrelationSpectrum, TauDecomposition};
use crate::error::{Error, Result};

use super::{param_map, ParamMap, PredictedSpectrum};

fn odd_base(spectra: &[&CorrelationSpectrum]) -> Result<usize> {
    let n = spectra[0].period();
    if let Some(s) = spectra.iter().find(|s| s.period() != n) {
        return Err(Error::PeriodMismatch {
            left: n,
            right: s.period(),
        });
    }
    if n % 2 == 0 {
        return Err(Error::EvenPeriod(n));
    }
    Ok(n)
}

/// Autocorrelation of `v = I(a, b, L^m(ā), L^m(b))`, `m = (N+1)/2`:
///
/// * `τ₂ = 0`: `2R_a(τ₁) + 2R_b(τ₁)`
/// * `τ₂ ∈ {1, 3}`: `0`
/// * `τ₂ = 2`: `−2R_a(τ₁ + m) + 2R_b(τ₁ + m)`
pub fn predict_v(ra: &CorrelationSpectrum, rb: &CorrelationSpectrum) -> Result<PredictedSpectrum> {
    let n = odd_base(&[ra, rb])?;
    let m = half_shift(n);
    Ok(PredictedSpectrum::from_fn(4 * n, "v interleave", |tau| {
        let d = TauDecomposition::new(tau, 4);
        let t1 = d.tau1 as i64;
        match d.tau2 {
            0 => 2 * ra.at(t1) + 2 * rb.at(t1),
            2 => -2 * ra.at(t1 + m) + 2 * rb.at(t1 + m),
            _ => 0,
        }
    }))
}

/// Autocorrelation of `w = I(a, L^η(ā), b, L^η(b))`.
///
/// `τ₂ = 0` and `τ₂ = 2` are unambiguous. For the odd offsets two readings
/// are carried as `branch` variants: `decomposition` (column-by-column
/// expansion) and `statement` (the form with the cross terms of each odd
/// offset at a common argument).
pub fn predict_w(
    ra: &CorrelationSpectrum,
    rb: &CorrelationSpectrum,
    rab: &CorrelationSpectrum,
    rba: &CorrelationSpectrum,
    eta: i64,
) -> Result<PredictedSpectrum> {
    let n = odd_base(&[ra, rb, rab, rba])?;
    let even = |d: &TauDecomposition| {
        let t1 = d.tau1 as i64;
        match d.tau2 {
            0 => Some(2 * ra.at(t1) + 2 * rb.at(t1)),
            2 => Some(0),
            _ => None,
        }
    };
    let decomposition = |tau: usize| {
        let d = TauDecomposition::new(tau, 4);
        let t1 = d.tau1 as i64;
        even(&d).unwrap_or_else(|| {
            if d.tau2 == 1 {
                -ra.at(t1 + eta) + rb.at(t1 + eta) - rab.at(t1 - eta) + rba.at(t1 + 1 - eta)
            } else {
                -ra.at(t1 + 1 - eta) + rb.at(t1 + 1 - eta) + rab.at(t1 + eta) - rba.at(t1 + 1 + eta)
            }
        })
    };
    let statement = |tau: usize| {
        let d = TauDecomposition::new(tau, 4);
        let t1 = d.tau1 as i64;
        even(&d).unwrap_or_else(|| {
            if d.tau2 == 1 {
                -ra.at(t1 + eta) + rb.at(t1 + eta) - rab.at(t1 - eta) + rba.at(t1 - eta)
            } else {
                -ra.at(t1 + 1 - eta) + rb.at(t1 + 1 - eta) + rab.at(t1 + eta) - rba.at(t1 + eta)
            }
        })
    };
    Ok(PredictedSpectrum::new(4 * n, "w interleave")
        .with_variant(param_map([("branch", "decomposition".to_string())]), decomposition)
        .with_variant(param_map([("branch", "statement".to_string())]), statement))
}

/// The three generalized GMW spectra: `R_s`, `R_{s'}`, `R_{ss'}`.
#[derive(Debug, Clone)]
pub struct Lemma4Prediction {
    pub auto: PredictedSpectrum,
    pub auto_modified: PredictedSpectrum,
    pub cross: PredictedSpectrum,
}

pub fn predict_lemma4(n: u32) -> Result<Lemma4Prediction> {
    if n < 2 {
        return Err(Error::GmwOrder(n));
    }
    let two_n = 1i64 << n;
    let period = (two_n * two_n - 1) as usize;
    let columns = (two_n + 1) as usize;
    let on_class = move |tau: usize| tau % columns == 0;
    Ok(Lemma4Prediction {
        auto: PredictedSpectrum::from_fn(period, "generalized GMW R_s", |tau| {
            if tau == 0 { period as i64 } else { -1 }
        }),
        auto_modified: PredictedSpectrum::from_fn(period, "generalized GMW R_s'", |tau| match tau {
            0 => period as i64,
            t if on_class(t) => -1,
            _ => 3,
        }),
        cross: PredictedSpectrum::from_fn(period, "generalized GMW R_ss'", |tau| match tau {
            0 => two_n * two_n - 2 * two_n + 1,
            t if on_class(t) => -2 * two_n + 1,
            _ => 1,
        }),
    })
}

fn checked_odd_prime(p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 3 {
        return Err(Error::NotOddPrime(p));
    }
    Ok(p as usize)
}

fn labeling(name: &str) -> ParamMap {
    param_map([("legendre_labeling", name.to_string())])
}

/// Residue-class prediction with `paper` and `swapped` labelings: the first
/// labeling puts `on_qr` on residues and `on_nqr` on non-residues.
fn residue_split(p: usize, at_zero: i64, on_qr: i64, on_nqr: i64, provenance: String) -> PredictedSpectrum {
    let qr = residue_table(p as u64);
    let split = |qr_value: i64, nqr_value: i64| {
        let qr = qr.clone();
        move |tau: usize| match tau {
            0 => at_zero,
            t if qr[t] => qr_value,
            _ => nqr_value,
        }
    };
    PredictedSpectrum::new(p, provenance)
        .with_variant(labeling("paper"), split(on_qr, on_nqr))
        .with_variant(labeling("swapped"), split(on_nqr, on_qr))
}

/// Autocorrelation of the Legendre sequence of the given type.
pub fn predict_legendre(p: u64, variant: LegendreVariant) -> Result<PredictedSpectrum> {
    let n = checked_odd_prime(p)?;
    let provenance = format!("Legendre {variant} type autocorrelation");
    if p % 4 == 3 {
        return Ok(PredictedSpectrum::from_fn(n, provenance, |tau| {
            if tau == 0 { n as i64 } else { -1 }
        }));
    }
    Ok(match variant {
        LegendreVariant::First => residue_split(n, n as i64, 1, -3, provenance),
        LegendreVariant::Second => residue_split(n, n as i64, -3, 1, provenance),
    })
}

/// Which sequence comes first in a cross-correlation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossOrder {
    /// `R_{ll'}`.
    FirstSecond,
    /// `R_{l'l}`.
    SecondFirst,
}

pub fn predict_legendre_cross(p: u64, order: CrossOrder) -> Result<PredictedSpectrum> {
    let n = checked_odd_prime(p)?;
    let name = match order {
        CrossOrder::FirstSecond => "R_ll'",
        CrossOrder::SecondFirst => "R_l'l",
    };
    let provenance = format!("Legendre cross-correlation {name}");
    if p % 4 == 1 {
        return Ok(PredictedSpectrum::from_fn(n, provenance, |tau| {
            if tau == 0 { n as i64 - 2 } else { -1 }
        }));
    }
    Ok(match order {
        CrossOrder::FirstSecond => residue_split(n, n as i64 - 2, 1, -3, provenance),
        CrossOrder::SecondFirst => residue_split(n, n as i64 - 2, -3, 1, provenance),
    })
}

/// The three twin-prime spectra: `R_t`, `R_{t'}`, `R_{tt'}`.
#[derive(Debug, Clone)]
pub struct Lemma7Prediction {
    pub auto: PredictedSpectrum,
    pub auto_modified: PredictedSpectrum,
    pub cross: PredictedSpectrum,
}

pub fn predict_lemma7(p: u64) -> Result<Lemma7Prediction> {
    if !(is_prime(p) && is_prime(p + 2)) || p < 3 {
        return Err(Error::NotTwinPrime { p, q: p + 2 });
    }
    let q = (p + 2) as usize;
    let period = p as usize * q;
    let pi = p as i64;
    Ok(Lemma7Prediction {
        auto: PredictedSpectrum::from_fn(period, "twin-prime R_t", |tau| {
            if tau == 0 { period as i64 } else { -1 }
        }),
        auto_modified: PredictedSpectrum::from_fn(period, "twin-prime R_t'", |tau| match tau {
            0 => period as i64,
            t if t % q == 0 => -1,
            _ => 3,
        }),
        cross: PredictedSpectrum::from_fn(period, "twin-prime R_tt'", |tau| match tau {
            0 => pi * pi,
            t if t % q == 0 => -2 * pi - 1,
            _ => 1,
        }),
    })
}

/// Instantiation data for [`predict_theorem`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TheoremParams {
    /// Base period `N` (theorems 2 and 3).
    pub period: Option<usize>,
    /// GMW order (theorem 4).
    pub n: Option<u32>,
    /// Prime (theorems 5 and 6).
    pub p: Option<u64>,
}

impl TheoremParams {
    pub fn period(period: usize) -> Self {
        Self {
            period: Some(period),
            ..Self::default()
        }
    }

    pub fn gmw(n: u32) -> Self {
        Self {
            n: Some(n),
            ..Self::default()
        }
    }

    pub fn prime(p: u64) -> Self {
        Self {
            p: Some(p),
            ..Self::default()
        }
    }
}

fn missing(what: &str, id: u32) -> Error {
    Error::InvalidParameter(format!("theorem {id} needs {what}"))
}

fn sign_variant(sign: i64) -> ParamMap {
    param_map([("sign_tau2_2", if sign > 0 { "+8" } else { "-8" }.to_string())])
}

/// `v` spectra when both inputs come from a two-spectrum family on `T`
/// classes (GMW or twin-prime): `∓4` on `τ₂ = 0`, `0`/`±8` on `τ₂ = 2`.
fn class_family(period: usize, classes: usize, provenance: String) -> PredictedSpectrum {
    let half = half_shift(period) as usize;
    let eval = move |sign: i64| {
        move |tau: usize| {
            if tau == 0 {
                return 4 * period as i64;
            }
            let d = TauDecomposition::new(tau, 4);
            match d.tau2 {
                0 if d.tau1 % classes == 0 => -4,
                0 => 4,
                2 if ((d.tau1 + half) % period) % classes == 0 => 0,
                2 => 8 * sign,
                _ => 0,
            }
        }
    };
    PredictedSpectrum::new(4 * period, provenance)
        .with_variant(sign_variant(1), eval(1))
        .with_variant(sign_variant(-1), eval(-1))
}

/// The `v` spectra of theorems 2–6.
///
/// * 2: ideal inputs, `N ≡ 3 (mod 4)`
/// * 3: inputs with off-phase value 1, `N ≡ 1 (mod 4)`
/// * 4: generalized GMW pair
/// * 5: Legendre pair, `p ≡ 1 (mod 4)`
/// * 6: twin-prime pair
///
/// Every "8 (or −8)" piece is carried as a `sign_tau2_2` variant.
pub fn predict_theorem(id: u32, params: &TheoremParams) -> Result<PredictedSpectrum> {
    match id {
        2 | 3 => {
            let n = params.period.ok_or_else(|| missing("a period", id))?;
            if n % 4 != if id == 2 { 3 } else { 1 } {
                return Err(Error::InvalidParameter(format!(
                    "theorem {id} does not apply to period {n}"
                )));
            }
            let off_class = if id == 2 { -4 } else { 4 };
            Ok(PredictedSpectrum::from_fn(4 * n, format!("theorem {id}"), move |tau| {
                match (tau, tau % 4) {
                    (0, _) => 4 * n as i64,
                    (_, 0) => off_class,
                    _ => 0,
                }
            }))
        }
        4 => {
            let n = params.n.ok_or_else(|| missing("n", id))?;
            if n < 2 {
                return Err(Error::GmwOrder(n));
            }
            let two_n = 1usize << n;
            Ok(class_family(two_n * two_n - 1, two_n + 1, "theorem 4 (GMW)".into()))
        }
        5 => {
            let p = params.p.ok_or_else(|| missing("p", id))?;
            let n = checked_odd_prime(p)?;
            if p % 4 != 1 {
                return Err(Error::InvalidParameter(format!("theorem 5 needs p ≡ 1 mod 4, got {p}")));
            }
            let qr = residue_table(p);
            let half = half_shift(n) as usize;
            let eval = |sign: i64| {
                let qr = qr.clone();
                move |tau: usize| {
                    if tau == 0 {
                        return 4 * n as i64;
                    }
                    let d = TauDecomposition::new(tau, 4);
                    match d.tau2 {
                        0 => -4,
                        2 => {
                            let x = (d.tau1 + half) % n;
                            match x {
                                0 => 0,
                                x if qr[x] => 8 * sign,
                                _ => -8 * sign,
                            }
                        }
                        _ => 0,
                    }
                }
            };
            Ok(PredictedSpectrum::new(4 * n, "theorem 5 (Legendre)")
                .with_variant(sign_variant(1), eval(1))
                .with_variant(sign_variant(-1), eval(-1)))
        }
        6 => {
            let p = params.p.ok_or_else(|| missing("p", id))?;
            if !(is_prime(p) && is_prime(p + 2)) || p < 3 {
                return Err(Error::NotTwinPrime { p, q: p + 2 });
            }
            let q = (p + 2) as usize;
            Ok(class_family(p as usize * q, q, "theorem 6 (twin-prime)".into()))
        }
        other => Err(Error::UnknownTheorem(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_v, gmw_a, GmwParams};
    use crate::correlation::{auto_spectrum, interleaved_corr_decompose};
    use crate::seq::BinarySequence;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn v_prediction_pieces() {
        let (a, b) = (seq("0110100"), seq("1011100"));
        let p = predict_v(&auto_spectrum(&a), &auto_spectrum(&b)).unwrap();
        for t1 in 0..7 {
            assert_eq!(p.evaluate(4 * t1 + 1), 0);
            assert_eq!(p.evaluate(4 * t1 + 3), 0);
        }
        let same = predict_v(&auto_spectrum(&a), &auto_spectrum(&a)).unwrap();
        for t1 in 0..7 {
            assert_eq!(same.evaluate(4 * t1 + 2), 0);
        }
    }

    #[test]
    fn v_prediction_matches_worked_example() {
        let (a, b) = (seq("01000"), seq("10000"));
        let v = construct_v(&a, &b).unwrap();
        let p = predict_v(&auto_spectrum(&a), &auto_spectrum(&b)).unwrap();
        assert_eq!(p.variants()[0].values, auto_spectrum(&v).values());
    }

    #[test]
    fn v_prediction_agrees_with_column_decomposition() {
        let (a, b) = (seq("110100111"), seq("000101101"));
        let m = half_shift(9);
        let cols = [a.clone(), b.clone(), a.complement().shift(m), b.shift(m)];
        let p = predict_v(&auto_spectrum(&a), &auto_spectrum(&b)).unwrap();
        for tau in 0..36 {
            assert_eq!(p.evaluate(tau), interleaved_corr_decompose(&cols, tau).unwrap());
        }
    }

    #[test]
    fn v_prediction_rejects_even_periods() {
        let s = auto_spectrum(&seq("0111"));
        assert_eq!(predict_v(&s, &s), Err(Error::EvenPeriod(4)));
    }

    #[test]
    fn w_fixed_pieces() {
        let (a, b) = (seq("10110"), seq("00110"));
        let (ra, rb) = (auto_spectrum(&a), auto_spectrum(&b));
        let rab = crate::correlation::cross_spectrum(&a, &b).unwrap();
        let rba = crate::correlation::cross_spectrum(&b, &a).unwrap();
        let p = predict_w(&ra, &rb, &rab, &rba, 2).unwrap();
        for variant in 0..2 {
            for t1 in 0..5 {
                assert_eq!(p.evaluate_variant(variant, 4 * t1 + 2), 0);
                assert_eq!(p.evaluate_variant(variant, 4 * t1), 2 * ra.at(t1) + 2 * rb.at(t1));
            }
        }
    }

    #[test]
    fn lemma4_values() {
        let l = predict_lemma4(2).unwrap();
        let r: Vec<i64> = (0..15).map(|t| l.auto_modified.evaluate(t)).collect();
        assert_eq!(r[0], 15);
        assert_eq!((r[5], r[10], r[1]), (-1, -1, 3));
        assert_eq!(l.cross.evaluate(0), 9);
        assert_eq!(l.cross.evaluate(5), -7);
        assert_eq!(l.cross.evaluate(3), 1);
        let l3 = predict_lemma4(3).unwrap();
        assert!((1..63).all(|t| l3.auto.evaluate(t) == -1));
        let s = gmw_a(GmwParams::new(3)).unwrap();
        assert_eq!(l3.auto.variants()[0].values, auto_spectrum(&s).values());
    }

    #[test]
    fn legendre_predictions() {
        let p7 = predict_legendre(7, LegendreVariant::First).unwrap();
        assert!((1..7).all(|t| p7.evaluate(t) == -1));
        let c5 = predict_legendre_cross(5, CrossOrder::FirstSecond).unwrap();
        assert_eq!(c5.evaluate(0), 3);
        assert!((1..5).all(|t| c5.evaluate(t) == -1));
        let a5 = predict_legendre(5, LegendreVariant::First).unwrap();
        let swapped = a5.variant_where("legendre_labeling", "swapped").unwrap();
        // QR_5 = {1, 4}.
        assert_eq!(swapped.values, vec![5, -3, 1, 1, -3]);
    }

    #[test]
    fn lemma7_values() {
        let l = predict_lemma7(3).unwrap();
        assert!((1..15).all(|t| l.auto.evaluate(t) == -1));
        assert_eq!(l.cross.evaluate(5), -7);
        assert_eq!(l.cross.evaluate(0), 9);
        assert!(predict_lemma7(7).is_err());
    }

    #[test]
    fn theorem_shapes() {
        let t2 = predict_theorem(2, &TheoremParams::period(7)).unwrap();
        assert_eq!(t2.evaluate(0), 28);
        assert_eq!(t2.evaluate(4), -4);
        assert_eq!(t2.evaluate(5), 0);
        assert_eq!(t2.evaluate(6), 0);

        let t4 = predict_theorem(4, &TheoremParams::gmw(2)).unwrap();
        for v in t4.variants() {
            assert!(v.values[1..].iter().all(|x| [-8, -4, 0, 4, 8].contains(x)));
        }

        let t6 = predict_theorem(6, &TheoremParams::prime(3)).unwrap();
        let minus_four: Vec<usize> = (1..60).filter(|&t| t6.evaluate(t as i64) == -4).collect();
        assert_eq!(minus_four, vec![20, 40]);

        assert_eq!(predict_theorem(9, &TheoremParams::default()), Err(Error::UnknownTheorem(9)));
        assert!(predict_theorem(5, &TheoremParams::prime(7)).is_err());
        assert!(predict_theorem(2, &TheoremParams::period(5)).is_err());
    }
}
