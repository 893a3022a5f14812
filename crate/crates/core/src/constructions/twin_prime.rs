use crate::arith::{is_prime, mod_inverse, residue_table};
use crate::error::{Error, Result};
use crate::seq::{interleave, BinarySequence};

use super::legendre::{legendre, LegendreParams, LegendreVariant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwinPrimeParams {
    pub p: u64,
    /// All-one first column instead of all-zero.
    pub modified: bool,
}

impl TwinPrimeParams {
    pub fn new(p: u64) -> Self {
        Self { p, modified: false }
    }

    pub fn modified(self, modified: bool) -> Self {
        Self { modified, ..self }
    }

    pub fn period(&self) -> usize {
        (self.p * (self.p + 2)) as usize
    }
}

/// `I(0_p, L^{e₁}(a₁) + b(1), …, L^{e_{p+1}}(a_{p+1}) + b(p+1))` with
/// `e_i = i·(p+2)^{-1} mod p`. Column `i` uses the second-type Legendre
/// sequence complemented (`b(i) = 1`) when `i ∈ QR_{p+2}`, the first-type
/// one uncomplemented otherwise.
pub fn twin_prime(params: TwinPrimeParams) -> Result<BinarySequence> {
    let p = params.p;
    let q = p + 2;
    if !(is_prime(p) && is_prime(q)) || p < 3 {
        return Err(Error::NotTwinPrime { p, q });
    }
    let inverse = mod_inverse(q as i64, p as i64).ok_or(Error::NotTwinPrime { p, q })?;
    let first = legendre(LegendreParams::new(p, LegendreVariant::First))?;
    let second = legendre(LegendreParams::new(p, LegendreVariant::Second))?;
    let residues_q = residue_table(q);

    let mut columns = Vec::with_capacity(q as usize);
    columns.push(if params.modified {
        BinarySequence::ones(p as usize)?
    } else {
        BinarySequence::zeros(p as usize)?
    });
    for i in 1..q as i64 {
        let e = (i * inverse).rem_euclid(p as i64);
        columns.push(if residues_q[i as usize] {
            second.shift(e).complement()
        } else {
            first.shift(e)
        });
    }
    interleave(&columns)
}
