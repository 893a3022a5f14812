//! Periodic binary sequences and the structural operators used by every
//! construction: shift, complement, support and column interleaving.
//!
//! Symbols are stored as `0`/`1` bytes. The `±1` view only exists inside
//! [`crate::correlation`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An immutable periodic sequence over `{0, 1}`.
///
/// Index arithmetic is modulo the period: `bit(t)` accepts any integer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinarySequence {
    bits: Vec<u8>,
}

impl BinarySequence {
    /// Builds a sequence from explicit symbols. Every entry must be 0 or 1.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(offset) = bits.iter().position(|&b| b > 1) {
            return Err(Error::IllegalCharacter {
                offset,
                found: char::from(b'0' + bits[offset].min(9)),
            });
        }
        Ok(Self { bits })
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        Self::new(bits.into_iter().map(u8::from).collect())
    }

    /// Builds a period-`period` sequence from a predicate on the index.
    pub fn from_fn(period: usize, f: impl FnMut(usize) -> bool) -> Result<Self> {
        Self::from_bools((0..period).map(f))
    }

    pub fn zeros(period: usize) -> Result<Self> {
        Self::new(vec![0; period])
    }

    pub fn ones(period: usize) -> Result<Self> {
        Self::new(vec![1; period])
    }

    /// Characteristic sequence of the low `period` bits of `word`, bit `t`
    /// of the word becoming symbol `t`.
    pub fn from_word(word: u64, period: usize) -> Result<Self> {
        Self::from_fn(period, |t| (word >> t) & 1 == 1)
    }

    #[inline]
    pub fn period(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Symbol at index `t mod N`.
    #[inline]
    pub fn bit(&self, t: i64) -> u8 {
        self.bits[reduce(t, self.period())]
    }

    /// Left shift `L^m`: `result(t) = self(t + m)`.
    pub fn shift(&self, m: i64) -> Self {
        let n = self.period();
        let m = reduce(m, n);
        let mut bits = Vec::with_capacity(n);
        bits.extend_from_slice(&self.bits[m..]);
        bits.extend_from_slice(&self.bits[..m]);
        Self { bits }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| b ^ 1).collect(),
        }
    }

    /// Hamming weight over one period.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Number of ones minus number of zeros in one period.
    pub fn balance(&self) -> i64 {
        2 * self.weight() as i64 - self.period() as i64
    }

    pub fn support(&self) -> Support {
        Support {
            period: self.period(),
            positions: self
                .bits
                .iter()
                .enumerate()
                .filter_map(|(t, &b)| (b == 1).then_some(t))
                .collect(),
        }
    }

    /// Packs the sequence into a word, symbol `t` in bit `t`. Only valid for
    /// periods up to 64.
    pub fn to_word(&self) -> Option<u64> {
        (self.period() <= 64).then(|| {
            self.bits
                .iter()
                .enumerate()
                .fold(0u64, |acc, (t, &b)| acc | (u64::from(b) << t))
        })
    }

    pub fn deinterleave(&self, columns: usize) -> Result<Vec<Self>> {
        deinterleave(self, columns)
    }
}

/// Reduces any integer into `0..n`.
#[inline]
pub(crate) fn reduce(t: i64, n: usize) -> usize {
    t.rem_euclid(n as i64) as usize
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits.iter().map(|&b| char::from(b'0' + b)).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

/// Parses a line of ASCII `0`/`1` characters. A single trailing newline is
/// accepted so file contents can be passed through unchanged.
pub fn parse_sequence(text: &str) -> Result<BinarySequence> {
    let text = text
        .strip_suffix('\n')
        .map(|t| t.strip_suffix('\r').unwrap_or(t))
        .unwrap_or(text);
    if text.is_empty() {
        return Err(Error::EmptySequence);
    }
    let bits = text
        .chars()
        .enumerate()
        .map(|(offset, c)| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            found => Err(Error::IllegalCharacter { offset, found }),
        })
        .collect::<Result<Vec<u8>>>()?;
    Ok(BinarySequence { bits })
}

/// The positions carrying a `1`, as a sorted set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    period: usize,
    positions: Vec<usize>,
}

impl Support {
    /// Builds a support from arbitrary residues; duplicates collapse.
    pub fn new(period: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut positions: Vec<usize> = positions.into_iter().collect();
        if let Some(&element) = positions.iter().find(|&&p| p >= period) {
            return Err(Error::OutOfRange { element, period });
        }
        positions.sort_unstable();
        positions.dedup();
        Ok(Self { period, positions })
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// The support size `k`.
    pub fn size(&self) -> usize {
        self.positions.len()
    }

    pub fn contains(&self, t: usize) -> bool {
        self.positions.binary_search(&t).is_ok()
    }

    /// `|(w + C) ∩ C|`.
    pub fn shifted_overlap(&self, w: i64) -> usize {
        let n = self.period;
        self.positions
            .iter()
            .filter(|&&c| self.contains(reduce(c as i64 + w, n)))
            .count()
    }

    pub fn to_sequence(&self) -> Result<BinarySequence> {
        BinarySequence::from_fn(self.period, |t| self.contains(t))
    }
}

/// Per-column complement pattern for a masked interleave.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterleaveMask {
    bits: Vec<u8>,
}

impl InterleaveMask {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        Ok(Self {
            bits: BinarySequence::new(bits)?.bits,
        })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Hamming weight `H(t)` of the mask.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }
}

impl FromStr for InterleaveMask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self {
            bits: parse_sequence(s)?.bits,
        })
    }
}

pub fn shift(a: &BinarySequence, m: i64) -> BinarySequence {
    a.shift(m)
}

pub fn complement(a: &BinarySequence) -> BinarySequence {
    a.complement()
}

pub fn weight(a: &BinarySequence) -> usize {
    a.weight()
}

pub fn balance(a: &BinarySequence) -> i64 {
    a.balance()
}

pub fn support(a: &BinarySequence) -> Support {
    a.support()
}

fn common_period(columns: &[BinarySequence]) -> Result<usize> {
    let first = columns.first().ok_or(Error::NoColumns)?.period();
    match columns.iter().find(|c| c.period() != first) {
        Some(c) => Err(Error::PeriodMismatch {
            left: first,
            right: c.period(),
        }),
        None => Ok(first),
    }
}

/// Row-major read-off of the `K × T` array whose columns are `columns`:
/// `result(T·i + j) = columns[j](i)`.
pub fn interleave(columns: &[BinarySequence]) -> Result<BinarySequence> {
    let rows = common_period(columns)?;
    let mut bits = Vec::with_capacity(rows * columns.len());
    for i in 0..rows {
        bits.extend(columns.iter().map(|c| c.bits[i]));
    }
    Ok(BinarySequence { bits })
}

/// `a ‖ b`: even positions carry `a`, odd positions carry `b`.
pub fn interleave2(a: &BinarySequence, b: &BinarySequence) -> Result<BinarySequence> {
    interleave(&[a.clone(), b.clone()])
}

/// Interleaves `columns`, complementing column `j` when mask bit `j` is set.
pub fn interleave_masked(columns: &[BinarySequence], mask: &InterleaveMask) -> Result<BinarySequence> {
    if mask.len() != columns.len() {
        return Err(Error::MaskLength {
            mask: mask.len(),
            columns: columns.len(),
        });
    }
    let masked: Vec<BinarySequence> = columns
        .iter()
        .zip(mask.bits())
        .map(|(c, &m)| if m == 1 { c.complement() } else { c.clone() })
        .collect();
    interleave(&masked)
}

/// `I(a0 + t(0), a1 + t(1), a2 + t(2), a3 + t(3))`, period `4N`.
pub fn interleave4_masked(columns: &[BinarySequence; 4], mask: &InterleaveMask) -> Result<BinarySequence> {
    interleave_masked(columns, mask)
}

/// Inverse of [`interleave`]: `column_j(i) = s(T·i + j)`.
pub fn deinterleave(s: &BinarySequence, columns: usize) -> Result<Vec<BinarySequence>> {
    if columns == 0 || s.period() % columns != 0 {
        return Err(Error::NotDivisible {
            period: s.period(),
            divisor: columns,
        });
    }
    Ok((0..columns)
        .map(|j| BinarySequence {
            bits: s.bits.iter().skip(j).step_by(columns).copied().collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(seq("0111").bits(), &[0, 1, 1, 1]);
        assert_eq!(seq("0").period(), 1);
        assert_eq!(
            parse_sequence("01x0"),
            Err(Error::IllegalCharacter { offset: 2, found: 'x' })
        );
        assert_eq!(parse_sequence(""), Err(Error::EmptySequence));
        assert_eq!(parse_sequence("\n"), Err(Error::EmptySequence));
        assert_eq!(seq("0110\n").to_string(), "0110");
    }

    #[test]
    fn shift_examples() {
        assert_eq!(seq("0111").shift(1), seq("1110"));
        // 00010 is L^2(10000) under the left-shift convention.
        assert_eq!(seq("10000").shift(2), seq("00010"));
        assert_eq!(seq("10000").shift(3), seq("00100"));
        assert_eq!(seq("10000").shift(-3), seq("00010"));
        assert_eq!(seq("0111").shift(0), seq("0111"));
        assert_eq!(seq("0111").shift(4), seq("0111"));
        assert_eq!(seq("0111").bit(-1), 1);
        assert_eq!(seq("0111").bit(8), 0);
    }

    #[test]
    fn complement_weight_balance() {
        assert_eq!(seq("01000").complement(), seq("10111"));
        assert_eq!(BinarySequence::zeros(6).unwrap().complement(), BinarySequence::ones(6).unwrap());
        assert_eq!(seq("0111").weight(), 3);
        assert_eq!(seq("01101010001100000010").weight(), 7);
        assert_eq!(seq("0000").weight(), 0);
        assert_eq!(seq("011").balance(), 1);
        assert_eq!(seq("000").balance(), -3);
        assert_eq!(seq("1001011").balance(), 1);
    }

    #[test]
    fn support_examples() {
        assert_eq!(seq("0111").support().positions(), &[1, 2, 3]);
        let u = seq("01101010001100000010").support();
        assert_eq!(u.positions(), &[1, 2, 4, 6, 10, 11, 18]);
        assert_eq!(u.size(), 7);
        assert!(seq("000").support().positions().is_empty());
        assert_eq!(u.to_sequence().unwrap(), seq("01101010001100000010"));
        assert_eq!(
            Support::new(5, [5]),
            Err(Error::OutOfRange { element: 5, period: 5 })
        );
    }

    #[test]
    fn interleave_examples() {
        let cols = ["01000", "10000", "11101", "00100"].map(seq);
        assert_eq!(interleave(&cols).unwrap(), seq("01101010001100000010"));
        assert_eq!(interleave(&[seq("0110")]).unwrap(), seq("0110"));
        let cols = ["000", "011", "011", "101", "011"].map(seq);
        assert_eq!(interleave(&cols).unwrap(), seq("000100110101111"));
        assert_eq!(
            interleave(&[seq("01"), seq("011")]),
            Err(Error::PeriodMismatch { left: 2, right: 3 })
        );
        assert_eq!(interleave(&[]), Err(Error::NoColumns));
    }

    #[test]
    fn interleave2_examples() {
        assert_eq!(interleave2(&seq("01"), &seq("10")).unwrap(), seq("0110"));
        assert_eq!(interleave2(&seq("01"), &seq("01")).unwrap(), seq("0011"));
        assert!(interleave2(&seq("01"), &seq("0")).is_err());
    }

    #[test]
    fn masked_interleave() {
        let cols = ["0100", "1101", "0010", "1111"].map(seq);
        let plain = interleave(&cols).unwrap();
        let zero: InterleaveMask = "0000".parse().unwrap();
        let full: InterleaveMask = "1111".parse().unwrap();
        assert_eq!(interleave4_masked(&cols, &zero).unwrap(), plain);
        assert_eq!(interleave4_masked(&cols, &full).unwrap(), plain.complement());
        let short: InterleaveMask = "011".parse().unwrap();
        assert_eq!(
            interleave4_masked(&cols, &short),
            Err(Error::MaskLength { mask: 3, columns: 4 })
        );
    }

    #[test]
    fn deinterleave_examples() {
        let cols = deinterleave(&seq("000100110101111"), 5).unwrap();
        let expected = ["000", "011", "011", "101", "011"].map(seq);
        assert_eq!(cols, expected);
        assert_eq!(
            cols.iter().filter(|c| c.weight() == 0).count(),
            1,
            "exactly one all-zero column"
        );
        assert_eq!(deinterleave(&seq("0110"), 1).unwrap(), vec![seq("0110")]);
        assert_eq!(deinterleave(&seq("0110"), 2).unwrap(), vec![seq("01"), seq("10")]);
        assert_eq!(
            deinterleave(&seq("011"), 2),
            Err(Error::NotDivisible { period: 3, divisor: 2 })
        );
    }

    #[test]
    fn word_round_trip() {
        let a = seq("1101001");
        assert_eq!(BinarySequence::from_word(a.to_word().unwrap(), 7).unwrap(), a);
    }
}
