//! Sequence families: Legendre, m-sequences, generalized GMW, twin-prime,
//! and the four-column interleaved `v` and `w` sequences.

mod gmw;
mod interleaved;
mod legendre;
mod lfsr;
mod twin_prime;

pub use gmw::{gmw, gmw_a, gmw_b, GmwParams};
pub use interleaved::{construct_v, construct_w, difference_set_sequence, half_shift, WParams};
pub use legendre::{legendre, LegendreParams, LegendreVariant};
pub use lfsr::{default_primitive_poly, mseq, PRIMITIVE_POLYS};
pub use twin_prime::{twin_prime, TwinPrimeParams};
