//! The printed off-phase lists for `w` built from family pairs.
//!
//! Each list is a set of conditions per `τ₂`. Conditions are evaluated with
//! the zero conditions first; a `τ` no condition covers predicts 0.
//! Variants: `eta_convention` (`as-printed` or `negated`, flipping the sign
//! of every `η` in the conditions) and, for Legendre pairs,
//! `legendre_labeling` (`paper` or `swapped`, exchanging QR and NQR).

use crate::arith::residue_table;
use crate::correlation::TauDecomposition;
use crate::error::{Error, Result};

use super::targets::{InputOrder, SeriesFamily};
use super::{param_map, PredictedSpectrum};

/// `τ₁ + eta·η + offset`.
#[derive(Debug, Clone, Copy)]
struct Arg {
    eta: i64,
    offset: i64,
}

const fn arg(eta: i64, offset: i64) -> Arg {
    Arg { eta, offset }
}

impl Arg {
    fn eval(self, tau1: i64, eta: i64, modulus: i64) -> i64 {
        (tau1 + self.eta * eta + self.offset).rem_euclid(modulus)
    }
}

#[derive(Debug, Clone, Copy)]
enum Piece {
    Const(i64),
    /// `zero` when the argument is `≡ 0 mod T`, `other` otherwise.
    Class { arg: Arg, zero: i64, other: i64 },
    /// Split by QR/NQR of the argument; `zero_at` gives 0 when its argument
    /// vanishes.
    Residue { arg: Arg, qr: i64, nqr: i64, zero_at: Option<Arg> },
}

fn class(arg: Arg, zero: i64, other: i64) -> Piece {
    Piece::Class { arg, zero, other }
}

fn residue(arg: Arg, qr: i64, nqr: i64, zero_at: Option<Arg>) -> Piece {
    Piece::Residue { arg, qr, nqr, zero_at }
}

/// Pieces for `τ₂ = 0, 1, 3`; `τ₂ = 2` is 0 in every list.
type List = [Piece; 3];

fn list(family: SeriesFamily, order: InputOrder) -> List {
    use InputOrder::*;
    use SeriesFamily::*;
    let id = arg(0, 0);
    match (family, order) {
        (Gmw { .. }, Forward) => [class(id, -4, 4), class(arg(1, 0), 0, 4), class(arg(-1, 1), 0, 4)],
        (Gmw { .. }, Reverse) => [class(id, -4, 4), class(arg(-1, 0), 0, -4), class(arg(1, 0), 0, -4)],
        (Legendre { p }, Forward) if p % 4 == 3 => [
            Piece::Const(-4),
            residue(arg(-1, 0), -4, 4, Some(arg(-1, 0))),
            residue(arg(1, 0), 4, -4, None),
        ],
        (Legendre { p }, Reverse) if p % 4 == 3 => [
            Piece::Const(-4),
            residue(arg(-1, 0), 4, -4, None),
            residue(arg(1, 0), -4, 4, Some(arg(-1, 1))),
        ],
        (Legendre { .. }, Forward) => [
            Piece::Const(-4),
            residue(arg(1, 0), -4, 4, Some(arg(-1, 0))),
            residue(arg(-1, 1), -4, 4, Some(arg(-1, 1))),
        ],
        (Legendre { .. }, Reverse) => [
            Piece::Const(-4),
            residue(arg(1, 0), 4, -4, Some(arg(-1, 0))),
            residue(arg(-1, 1), 4, -4, Some(arg(-1, 1))),
        ],
        (TwinPrime { .. }, Forward) => [class(id, -4, 4), class(id, 0, 4), class(arg(-1, 1), 0, 4)],
        (TwinPrime { .. }, Reverse) => [class(id, -4, 4), class(id, 0, -4), class(arg(-1, 1), 0, -4)],
    }
}

struct Evaluator {
    base: i64,
    classes: i64,
    qr: Vec<bool>,
    eta: i64,
    swap: bool,
}

impl Evaluator {
    fn piece(&self, piece: Piece, tau1: i64) -> i64 {
        match piece {
            Piece::Const(v) => v,
            Piece::Class { arg, zero, other } => {
                if arg.eval(tau1, self.eta, self.base) % self.classes == 0 {
                    zero
                } else {
                    other
                }
            }
            Piece::Residue { arg, qr, nqr, zero_at } => {
                if zero_at.is_some_and(|z| z.eval(tau1, self.eta, self.base) == 0) {
                    return 0;
                }
                match arg.eval(tau1, self.eta, self.base) as usize {
                    0 => 0,
                    x if self.qr[x] != self.swap => qr,
                    _ => nqr,
                }
            }
        }
    }

    fn at(&self, pieces: &List, tau: usize) -> i64 {
        if tau == 0 {
            return 4 * self.base;
        }
        let d = TauDecomposition::new(tau, 4);
        let tau1 = d.tau1 as i64;
        match d.tau2 {
            0 => self.piece(pieces[0], tau1),
            1 => self.piece(pieces[1], tau1),
            3 => self.piece(pieces[2], tau1),
            _ => 0,
        }
    }
}

/// Prediction for `w` built from the family pair in the given order
/// (forward: `(s, s')`, `(l, l')`, `(t, t')`) with shift `η`.
pub fn predict_wlist(family: SeriesFamily, order: InputOrder, eta: i64) -> Result<PredictedSpectrum> {
    let base = family.base_period()?;
    let (classes, qr) = match family {
        SeriesFamily::Gmw { n } => ((1usize << n) + 1, Vec::new()),
        SeriesFamily::Legendre { p } => (p as usize, residue_table(p)),
        SeriesFamily::TwinPrime { p } => (p as usize + 2, Vec::new()),
    };
    if base % classes != 0 {
        return Err(Error::NotDivisible {
            period: base,
            divisor: classes,
        });
    }
    let pieces = list(family, order);
    let labelings: &[(&str, bool)] = match family {
        SeriesFamily::Legendre { .. } => &[("paper", false), ("swapped", true)],
        _ => &[("paper", false)],
    };
    let legendre = matches!(family, SeriesFamily::Legendre { .. });
    let mut prediction = PredictedSpectrum::new(4 * base, format!("w list, {family} {order}"));
    for (convention, sign) in [("as-printed", 1), ("negated", -1)] {
        for &(labeling, swap) in labelings {
            let eval = Evaluator {
                base: base as i64,
                classes: classes as i64,
                qr: qr.clone(),
                eta: sign * eta,
                swap,
            };
            let mut params = vec![("eta_convention", convention.to_string())];
            if legendre {
                params.push(("legendre_labeling", labeling.to_string()));
            }
            prediction = prediction.with_variant(param_map(params), |tau| eval.at(&pieces, tau));
        }
    }
    Ok(prediction)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_layout() {
        let gmw = predict_wlist(SeriesFamily::Gmw { n: 2 }, InputOrder::Forward, 1).unwrap();
        assert_eq!(gmw.period(), 60);
        assert_eq!(gmw.variants().len(), 2);
        let leg = predict_wlist(SeriesFamily::Legendre { p: 7 }, InputOrder::Reverse, 2).unwrap();
        assert_eq!(leg.variants().len(), 4);
        assert!(leg.variant_where("legendre_labeling", "swapped").is_some());
    }

    #[test]
    fn printed_values() {
        let gmw = predict_wlist(SeriesFamily::Gmw { n: 2 }, InputOrder::Forward, 1).unwrap();
        assert_eq!(gmw.evaluate(0), 60);
        // τ₁ = 5: class zero on τ₂ = 0; τ₁ + η = 6 is off-class on τ₂ = 1.
        assert_eq!(gmw.evaluate(20), -4);
        assert_eq!(gmw.evaluate(21), 4);
        assert_eq!(gmw.evaluate(22), 0);
        // τ₁ = 0, τ₁ + 1 − η = 0 on τ₂ = 3.
        assert_eq!(gmw.evaluate(3), 0);

        let leg = predict_wlist(SeriesFamily::Legendre { p: 7 }, InputOrder::Forward, 0).unwrap();
        // QR_7 = {1, 2, 4}.
        assert_eq!(leg.evaluate(5), -4);
        assert_eq!(leg.evaluate(13), 4);
        assert_eq!(leg.evaluate(1), 0);
        assert_eq!(leg.evaluate(3), 0);
    }
}
