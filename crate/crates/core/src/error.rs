use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,
    #[error("illegal character {found:?} at offset {offset}")]
    IllegalCharacter { offset: usize, found: char },
    #[error("period mismatch: {left} vs {right}")]
    PeriodMismatch { left: usize, right: usize },
    #[error("{divisor} does not divide period {period}")]
    NotDivisible { period: usize, divisor: usize },
    #[error("expected an odd period, got {0}")]
    EvenPeriod(usize),
    #[error("mask has {mask} entries for {columns} columns")]
    MaskLength { mask: usize, columns: usize },
    #[error("no columns to interleave")]
    NoColumns,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{p} and {q} are not twin primes")]
    NotTwinPrime { p: u64, q: u64 },
    #[error("polynomial {poly:#x} is not primitive of degree {degree}")]
    NotPrimitive { degree: u32, poly: u64 },
    #[error("unsupported degree {0}")]
    UnsupportedDegree(u32),
    #[error("GMW parameter n must be at least 2, got {0}")]
    GmwOrder(u32),
    #[error("element {element} out of range for period {period}")]
    OutOfRange { element: usize, period: usize },
    #[error("expected an autocorrelation spectrum")]
    NotAutoSpectrum,
    #[error("search period {period} exceeds the cap {cap}")]
    SearchCap { period: usize, cap: usize },
    #[error("target value {value} does not have the parity of period {period}")]
    TargetParity { value: i64, period: usize },
    #[error("unknown theorem {0}")]
    UnknownTheorem(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("internal guard failed: {0}")]
    Guard(String),
}
