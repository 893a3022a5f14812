use crate::error::{Error, Result};
use crate::seq::{interleave, BinarySequence, Support};

/// Parameters of the `w` construction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct WParams {
    pub eta: i64,
}

impl WParams {
    pub fn new(eta: i64) -> Self {
        Self { eta }
    }
}

/// `(N + 1) / 2`, the inverse of 2 modulo an odd `N`.
pub fn half_shift(period: usize) -> i64 {
    (period as i64 + 1) / 2
}

fn odd_pair(a: &BinarySequence, b: &BinarySequence) -> Result<usize> {
    if a.period() != b.period() {
        return Err(Error::PeriodMismatch {
            left: a.period(),
            right: b.period(),
        });
    }
    if a.period() % 2 == 0 {
        return Err(Error::EvenPeriod(a.period()));
    }
    Ok(a.period())
}

/// `v = I(a, b, L^{(N+1)/2}(ā), L^{(N+1)/2}(b))`, period `4N`.
pub fn construct_v(a: &BinarySequence, b: &BinarySequence) -> Result<BinarySequence> {
    let m = half_shift(odd_pair(a, b)?);
    interleave(&[a.clone(), b.clone(), a.complement().shift(m), b.shift(m)])
}

/// `w = I(a, L^η(ā), b, L^η(b))`, period `4N`.
pub fn construct_w(a: &BinarySequence, b: &BinarySequence, params: WParams) -> Result<BinarySequence> {
    odd_pair(a, b)?;
    let eta = params.eta;
    interleave(&[a.clone(), a.complement().shift(eta), b.clone(), b.shift(eta)])
}

/// Characteristic sequence of `elements ⊆ Z_N`.
pub fn difference_set_sequence(period: usize, elements: &[usize]) -> Result<BinarySequence> {
    Support::new(period, elements.iter().copied())?.to_sequence()
}
