use crate::error::{Error, Result};
use crate::seq::{deinterleave, interleave, BinarySequence};

use super::lfsr::{default_primitive_poly, mseq};

/// Generalized GMW parameters. The underlying m-sequence has degree `2n`,
/// giving `T = 2^n + 1` columns of period `K = 2^n − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GmwParams {
    pub n: u32,
    /// Primitive polynomial of degree `2n`; the built-in table when `None`.
    pub poly: Option<u64>,
    /// Construction B (all-one first column) when set.
    pub modified: bool,
}

impl GmwParams {
    pub fn new(n: u32) -> Self {
        Self {
            n,
            poly: None,
            modified: false,
        }
    }

    pub fn modified(self, modified: bool) -> Self {
        Self { modified, ..self }
    }

    pub fn with_poly(self, poly: u64) -> Self {
        Self {
            poly: Some(poly),
            ..self
        }
    }

    /// Column count `2^n + 1`.
    pub fn columns(&self) -> usize {
        (1usize << self.n) + 1
    }

    /// Column period `2^n − 1`.
    pub fn rows(&self) -> usize {
        (1usize << self.n) - 1
    }

    pub fn period(&self) -> usize {
        self.columns() * self.rows()
    }
}

pub fn gmw(params: GmwParams) -> Result<BinarySequence> {
    if params.modified {
        gmw_b(params)
    } else {
        gmw_a(params)
    }
}

/// Construction A: `I(0_K, a₁, …, a_{T−1})`.
///
/// The degree-`2n` m-sequence is read as a `K × T` array; exactly one column
/// is identically zero and the others are shifts of one period-`K`
/// m-sequence. The whole sequence is rotated so that the zero column lands
/// at index 0.
pub fn gmw_a(params: GmwParams) -> Result<BinarySequence> {
    if params.n < 2 {
        return Err(Error::GmwOrder(params.n));
    }
    let degree = 2 * params.n;
    let poly = match params.poly {
        Some(p) => p,
        None => default_primitive_poly(degree).ok_or(Error::UnsupportedDegree(degree))?,
    };
    let m = mseq(degree, poly)?;
    let columns = deinterleave(&m, params.columns())?;
    let zero_columns: Vec<usize> = columns
        .iter()
        .enumerate()
        .filter_map(|(j, c)| (c.weight() == 0).then_some(j))
        .collect();
    match zero_columns.as_slice() {
        [j] => Ok(m.shift(*j as i64)),
        _ => Err(Error::NotPrimitive { degree, poly }),
    }
}

/// Construction B: Construction A with the zero column replaced by `1_K`.
pub fn gmw_b(params: GmwParams) -> Result<BinarySequence> {
    let s = gmw_a(params)?;
    let mut columns = deinterleave(&s, params.columns())?;
    columns[0] = columns[0].complement();
    interleave(&columns)
}
