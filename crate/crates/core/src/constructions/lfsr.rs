use crate::error::{Error, Result};
use crate::seq::BinarySequence;

/// One primitive polynomial per degree, bit `i` holding the coefficient of
/// `x^i`. Index = degree.
pub const PRIMITIVE_POLYS: [u64; 21] = [
    0,
    0x3,       // x + 1
    0x7,       // x^2 + x + 1
    0xB,       // x^3 + x + 1
    0x13,      // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x43,      // x^6 + x + 1
    0x83,      // x^7 + x + 1
    0x11D,     // x^8 + x^4 + x^3 + x^2 + 1
    0x211,     // x^9 + x^4 + 1
    0x409,     // x^10 + x^3 + 1
    0x805,     // x^11 + x^2 + 1
    0x1053,    // x^12 + x^6 + x^4 + x + 1
    0x201B,    // x^13 + x^4 + x^3 + x + 1
    0x4443,    // x^14 + x^10 + x^6 + x + 1
    0x8003,    // x^15 + x + 1
    0x1100B,   // x^16 + x^12 + x^3 + x + 1
    0x20009,   // x^17 + x^3 + 1
    0x40081,   // x^18 + x^7 + 1
    0x80027,   // x^19 + x^5 + x^2 + x + 1
    0x100009,  // x^20 + x^3 + 1
];

pub const MAX_DEGREE: u32 = 24;

pub fn default_primitive_poly(degree: u32) -> Option<u64> {
    PRIMITIVE_POLYS
        .get(degree as usize)
        .copied()
        .filter(|&p| p != 0)
}

/// Maximal-length sequence of the recurrence
/// `s(t + d) = Σ_{i<d} c_i · s(t + i)` for `poly = x^d + Σ c_i x^i`,
/// started from the fill `s(0..d) = 1, 0, …, 0`.
///
/// Primitivity is established by the state returning to the initial fill
/// after exactly `2^d − 1` steps and not earlier.
pub fn mseq(degree: u32, poly: u64) -> Result<BinarySequence> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(degree));
    }
    let not_primitive = Error::NotPrimitive { degree, poly };
    if poly >> degree != 1 || poly & 1 == 0 {
        return Err(not_primitive);
    }
    let taps = poly & ((1u64 << degree) - 1);
    let period = (1usize << degree) - 1;
    let init = 1u64;

    let mut state = init;
    let mut bits = Vec::with_capacity(period);
    for step in 0..period {
        if step > 0 && state == init {
            return Err(not_primitive);
        }
        bits.push((state & 1) as u8);
        let feedback = u64::from((state & taps).count_ones() & 1);
        state = (state >> 1) | (feedback << (degree - 1));
    }
    if state != init {
        return Err(not_primitive);
    }
    BinarySequence::new(bits)
}
