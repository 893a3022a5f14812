//! Binary sequences with low periodic autocorrelation.
//!
//! The crate builds Legendre, m-sequence, generalized GMW, twin-prime and the
//! four-column interleaved `v`/`w` sequences, computes their exact periodic
//! correlation spectra, classifies those spectra against the perfect and
//! optimal value tables, and checks closed-form spectrum formulas against
//! brute force.
//!
//! ```
//! use optseq::{constructions, correlation};
//!
//! let a = "01000".parse().unwrap();
//! let b = "10000".parse().unwrap();
//! let v = constructions::construct_v(&a, &b).unwrap();
//! assert_eq!(v.to_string(), "01101010001100000010");
//!
//! let spectrum = correlation::auto_spectrum(&v);
//! assert_eq!(spectrum.values()[0], 20);
//! assert!(spectrum.off_phase().iter().all(|&r| r == 0 || r == 4));
//! ```

pub mod arith;
pub mod classify;
pub mod cli;
pub mod constructions;
pub mod correlation;
pub mod error;
pub mod search;
pub mod seq;
pub mod verify;

pub use error::{Error, Result};
pub use seq::{BinarySequence, InterleaveMask, Support};
