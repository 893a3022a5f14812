use std::fmt;
use std::str::FromStr;

use crate::arith::{is_prime, residue_table};
use crate::error::{Error, Result};
use crate::seq::BinarySequence;

/// Which symbol sits at `t = 0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum LegendreVariant {
    /// `l(0) = 1`.
    #[default]
    First,
    /// `l'(0) = 0`.
    Second,
}

impl fmt::Display for LegendreVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::First => "first",
            Self::Second => "second",
        })
    }
}

impl FromStr for LegendreVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" | "1" => Ok(Self::First),
            "second" | "2" => Ok(Self::Second),
            other => Err(Error::InvalidParameter(format!("unknown Legendre variant {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LegendreParams {
    pub p: u64,
    pub variant: LegendreVariant,
}

impl LegendreParams {
    pub fn new(p: u64, variant: LegendreVariant) -> Self {
        Self { p, variant }
    }
}

/// `l(t) = (1 − (t/p)) / 2` for `t ≠ 0`, so the ones sit on the
/// non-residues; `l(0)` is fixed by the variant.
pub fn legendre(params: LegendreParams) -> Result<BinarySequence> {
    let p = params.p;
    if !is_prime(p) || p < 3 {
        return Err(if is_prime(p) { Error::NotOddPrime(p) } else { Error::NotPrime(p) });
    }
    let residues = residue_table(p);
    BinarySequence::from_fn(p as usize, |t| {
        if t == 0 {
            params.variant == LegendreVariant::First
        } else {
            !residues[t]
        }
    })
}
