//! One runner per verification target.

use std::fmt;
use std::str::FromStr;

use crate::constructions::{
    construct_v, construct_w, gmw, legendre, twin_prime, GmwParams, LegendreParams, LegendreVariant, TwinPrimeParams,
    WParams,
};
use crate::correlation::{auto_spectrum, cross_spectrum};
use crate::error::{Error, Result};
use crate::seq::BinarySequence;

use super::{
    check_lemma3, param_map, predict_legendre, predict_legendre_cross, predict_lemma4, predict_lemma7, predict_theorem,
    predict_v, predict_w, predict_wlist, verify_construction, verify_spectrum, CrossOrder, ParamMap, TheoremParams,
    VerificationReport,
};

/// Order of a family pair as fed into `v` or `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputOrder {
    Forward,
    Reverse,
}

impl fmt::Display for InputOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Forward => "forward",
            Self::Reverse => "reverse",
        })
    }
}

impl FromStr for InputOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" => Ok(Self::Forward),
            "reverse" => Ok(Self::Reverse),
            other => Err(Error::InvalidParameter(format!("unknown order {other:?}"))),
        }
    }
}

/// A family providing a pair of related sequences of one period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesFamily {
    /// `(s, s')`, GMW Constructions A and B.
    Gmw { n: u32 },
    /// `(l, l')`, first and second type Legendre.
    Legendre { p: u64 },
    /// `(t, t')`, twin-prime and modified twin-prime.
    TwinPrime { p: u64 },
}

impl fmt::Display for SeriesFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Gmw { n } => write!(f, "gmw(n={n})"),
            Self::Legendre { p } => write!(f, "legendre(p={p})"),
            Self::TwinPrime { p } => write!(f, "twinprime(p={p})"),
        }
    }
}

impl SeriesFamily {
    pub fn base_period(&self) -> Result<usize> {
        Ok(self.members()?.0.period())
    }

    /// The pair in its natural order: `(s, s')`, `(l, l')`, `(t, t')`.
    pub fn members(&self) -> Result<(BinarySequence, BinarySequence)> {
        match *self {
            Self::Gmw { n } => Ok((
                gmw(GmwParams::new(n))?,
                gmw(GmwParams::new(n).modified(true))?,
            )),
            Self::Legendre { p } => Ok((
                legendre(LegendreParams::new(p, LegendreVariant::First))?,
                legendre(LegendreParams::new(p, LegendreVariant::Second))?,
            )),
            Self::TwinPrime { p } => Ok((
                twin_prime(TwinPrimeParams::new(p))?,
                twin_prime(TwinPrimeParams::new(p).modified(true))?,
            )),
        }
    }

    /// Inputs `(a, b)` for the `v` theorems. Forward is `(s, s')`, `(l', l)`
    /// and `(t, t')`, matching the order each theorem names first.
    pub fn theorem_pair(&self, order: InputOrder) -> Result<(BinarySequence, BinarySequence)> {
        let (x, y) = self.members()?;
        let forward = match self {
            Self::Legendre { .. } => (y, x),
            _ => (x, y),
        };
        Ok(match order {
            InputOrder::Forward => forward,
            InputOrder::Reverse => (forward.1, forward.0),
        })
    }

    /// Inputs `(a, b)` for `w`: forward is the natural order.
    pub fn wlist_pair(&self, order: InputOrder) -> Result<(BinarySequence, BinarySequence)> {
        let (x, y) = self.members()?;
        Ok(match order {
            InputOrder::Forward => (x, y),
            InputOrder::Reverse => (y, x),
        })
    }

    pub fn theorem_id(&self) -> u32 {
        match self {
            Self::Gmw { .. } => 4,
            Self::Legendre { .. } => 5,
            Self::TwinPrime { .. } => 6,
        }
    }

    fn theorem_params(&self) -> TheoremParams {
        match *self {
            Self::Gmw { n } => TheoremParams::gmw(n),
            Self::Legendre { p } | Self::TwinPrime { p } => TheoremParams::prime(p),
        }
    }

    fn params(&self) -> Vec<(&'static str, String)> {
        match *self {
            Self::Gmw { n } => vec![("family", "gmw".into()), ("n", n.to_string())],
            Self::Legendre { p } => vec![("family", "legendre".into()), ("p", p.to_string())],
            Self::TwinPrime { p } => vec![("family", "twinprime".into()), ("p", p.to_string())],
        }
    }
}

/// Families for which the column-balance biconditional is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma3Family {
    Gmw { n: u32 },
    TwinPrime { p: u64 },
}

pub fn verify_lemma3(family: Lemma3Family) -> Result<VerificationReport> {
    let (series, columns) = match family {
        Lemma3Family::Gmw { n } => (SeriesFamily::Gmw { n }, (1usize << n) + 1),
        Lemma3Family::TwinPrime { p } => (SeriesFamily::TwinPrime { p }, p as usize + 2),
    };
    let (s, s_mod) = series.members()?;
    let mut report = check_lemma3(&s, &s_mod, columns)?;
    report.params.extend(series.params().into_iter().map(|(k, v)| (k.to_string(), v)));
    Ok(report)
}

pub fn verify_lemma4(n: u32) -> Result<VerificationReport> {
    let (s, s_mod) = SeriesFamily::Gmw { n }.members()?;
    let p = predict_lemma4(n)?;
    let checks = vec![
        verify_spectrum("R_s", &auto_spectrum(&s), &p.auto)?,
        verify_spectrum("R_s'", &auto_spectrum(&s_mod), &p.auto_modified)?,
        verify_spectrum("R_ss'", &cross_spectrum(&s, &s_mod)?, &p.cross)?,
        verify_spectrum("R_s's", &cross_spectrum(&s_mod, &s)?, &p.cross)?,
    ];
    Ok(VerificationReport::new("lemma4", param_map([("n", n.to_string())]), checks))
}

pub fn verify_lemma5(p: u64) -> Result<VerificationReport> {
    let (l, l_second) = SeriesFamily::Legendre { p }.members()?;
    let checks = vec![
        verify_spectrum("R_l", &auto_spectrum(&l), &predict_legendre(p, LegendreVariant::First)?)?,
        verify_spectrum(
            "R_l'",
            &auto_spectrum(&l_second),
            &predict_legendre(p, LegendreVariant::Second)?,
        )?,
    ];
    Ok(VerificationReport::new("lemma5", param_map([("p", p.to_string())]), checks))
}

pub fn verify_lemma6(p: u64) -> Result<VerificationReport> {
    let (l, l_second) = SeriesFamily::Legendre { p }.members()?;
    let checks = vec![
        verify_spectrum(
            "R_ll'",
            &cross_spectrum(&l, &l_second)?,
            &predict_legendre_cross(p, CrossOrder::FirstSecond)?,
        )?,
        verify_spectrum(
            "R_l'l",
            &cross_spectrum(&l_second, &l)?,
            &predict_legendre_cross(p, CrossOrder::SecondFirst)?,
        )?,
    ];
    Ok(VerificationReport::new("lemma6", param_map([("p", p.to_string())]), checks))
}

pub fn verify_lemma7(p: u64) -> Result<VerificationReport> {
    let (t, t_mod) = SeriesFamily::TwinPrime { p }.members()?;
    let pred = predict_lemma7(p)?;
    let checks = vec![
        verify_spectrum("R_t", &auto_spectrum(&t), &pred.auto)?,
        verify_spectrum("R_t'", &auto_spectrum(&t_mod), &pred.auto_modified)?,
        verify_spectrum("R_tt'", &cross_spectrum(&t, &t_mod)?, &pred.cross)?,
        verify_spectrum("R_t't", &cross_spectrum(&t_mod, &t)?, &pred.cross)?,
    ];
    Ok(VerificationReport::new("lemma7", param_map([("p", p.to_string())]), checks))
}

fn pair_params(a: &BinarySequence, b: &BinarySequence) -> ParamMap {
    param_map([("a", a.to_string()), ("b", b.to_string())])
}

pub fn verify_theorem1(a: &BinarySequence, b: &BinarySequence) -> Result<VerificationReport> {
    let v = construct_v(a, b)?;
    let check = verify_construction(&v, &predict_v(&auto_spectrum(a), &auto_spectrum(b))?)?;
    Ok(VerificationReport::new("thm1", pair_params(a, b), vec![check]))
}

fn verify_closed_v(id: u32, a: &BinarySequence, b: &BinarySequence) -> Result<VerificationReport> {
    let v = construct_v(a, b)?;
    let check = verify_construction(&v, &predict_theorem(id, &TheoremParams::period(a.period()))?)?;
    Ok(VerificationReport::new(format!("thm{id}"), pair_params(a, b), vec![check]))
}

/// `v` from ideal inputs, `N ≡ 3 mod 4`.
pub fn verify_theorem2(a: &BinarySequence, b: &BinarySequence) -> Result<VerificationReport> {
    verify_closed_v(2, a, b)
}

/// `v` from inputs with off-phase constantly 1, `N ≡ 1 mod 4`.
pub fn verify_theorem3(a: &BinarySequence, b: &BinarySequence) -> Result<VerificationReport> {
    verify_closed_v(3, a, b)
}

/// `v` from `(L^η₁(x), L^η₂(y))` with `(x, y)` the family pair in the
/// given order, checked against theorem 4, 5 or 6.
pub fn verify_theorem_instance(
    family: SeriesFamily,
    eta1: i64,
    eta2: i64,
    order: InputOrder,
) -> Result<VerificationReport> {
    let (x, y) = family.theorem_pair(order)?;
    let v = construct_v(&x.shift(eta1), &y.shift(eta2))?;
    let id = family.theorem_id();
    let check = verify_construction(&v, &predict_theorem(id, &family.theorem_params())?)?;
    let mut params = family.params();
    params.extend([
        ("eta1", eta1.to_string()),
        ("eta2", eta2.to_string()),
        ("order", order.to_string()),
    ]);
    Ok(VerificationReport::new(format!("thm{id}"), param_map(params), vec![check]))
}

pub fn verify_theorem7(a: &BinarySequence, b: &BinarySequence, eta: i64) -> Result<VerificationReport> {
    let w = construct_w(a, b, WParams::new(eta))?;
    let prediction = predict_w(
        &auto_spectrum(a),
        &auto_spectrum(b),
        &cross_spectrum(a, b)?,
        &cross_spectrum(b, a)?,
        eta,
    )?;
    let check = verify_construction(&w, &prediction)?;
    let mut params = pair_params(a, b);
    params.insert("eta".into(), eta.to_string());
    Ok(VerificationReport::new("thm7", params, vec![check]))
}

/// `w` from the family pair against its printed off-phase list.
pub fn verify_wlist(family: SeriesFamily, order: InputOrder, eta: i64) -> Result<VerificationReport> {
    let (a, b) = family.wlist_pair(order)?;
    let w = construct_w(&a, &b, WParams::new(eta))?;
    let check = verify_construction(&w, &predict_wlist(family, order, eta)?)?;
    let mut params = family.params();
    params.extend([("order", order.to_string()), ("eta", eta.to_string())]);
    Ok(VerificationReport::new("wlists", param_map(params), vec![check]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_theorems() {
        assert!(verify_theorem1(&seq("01000"), &seq("10000")).unwrap().verified());
        assert!(verify_theorem3(&seq("01000"), &seq("00010")).unwrap().verified());
        let l7 = legendre(LegendreParams::new(7, LegendreVariant::First)).unwrap();
        assert!(verify_theorem2(&l7, &l7.shift(3)).unwrap().verified());
    }

    #[test]
    fn lemma_targets() {
        assert!(verify_lemma4(2).unwrap().verified());
        assert!(verify_lemma7(3).unwrap().verified());
        assert!(verify_lemma3(Lemma3Family::Gmw { n: 2 }).unwrap().verified());
        assert!(verify_lemma3(Lemma3Family::TwinPrime { p: 3 }).unwrap().verified());
        let l5 = verify_lemma5(5).unwrap();
        assert!(l5.verified());
        assert_eq!(l5.resolved()["R_l.legendre_labeling"], "swapped");
        assert!(verify_lemma6(7).unwrap().verified());
    }

    #[test]
    fn theorem_instances_resolve_sign() {
        let fwd = verify_theorem_instance(SeriesFamily::Gmw { n: 2 }, 1, 2, InputOrder::Forward).unwrap();
        assert!(fwd.verified());
        let rev = verify_theorem_instance(SeriesFamily::Gmw { n: 2 }, 0, 0, InputOrder::Reverse).unwrap();
        assert!(rev.verified());
        assert_ne!(fwd.resolved()["sign_tau2_2"], rev.resolved()["sign_tau2_2"]);
    }

    #[test]
    fn theorem7_branches() {
        let r = verify_theorem7(&seq("1101000"), &seq("0110100"), 2).unwrap();
        assert!(r.verified());
        assert_eq!(r.checks[0].variant_mismatches("branch", "decomposition"), Some(0));
    }

    #[test]
    fn order_parsing() {
        assert_eq!("reverse".parse::<InputOrder>().unwrap(), InputOrder::Reverse);
        assert!("sideways".parse::<InputOrder>().is_err());
    }
}
