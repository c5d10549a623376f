//! Exact dense linear algebra over prime fields GF(p).
//!
//! Three storage backends sit behind one [`GFMatrix`] type: GF(2) packed 64
//! entries per word, GF(3) packed as two bit-planes (2 bits per entry
//! amortized, word-level bit-sliced arithmetic, no table lookups in the
//! inner loops), and a byte-per-entry path for the remaining small primes.
//! Vectors are rows and matrices act on the right throughout the crate; a
//! left group action `g·v` is stored as the right multiplication
//! `v · mat(g)`, so `mat(gh) = mat(h)·mat(g)`.
//!
//! [`Echelon`] is the streaming workhorse: rows are fed in (optionally in
//! batches), independent rows are kept, dependent rows come back expressed
//! over the kept ones.  All higher-level algorithms (spinning, solving,
//! module bases) are built on it.

mod bytes;
mod echelon;
mod gf2;
mod gf3;
mod matrix;
mod scalar;

pub use echelon::{Echelon, Fed};
pub use matrix::{echelonize, kernel, left_kernel, solve, EchelonForm, GFMatrix};
pub use scalar::GFScalar;

use core::fmt;

/// Errors from the linear-algebra layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GfError {
    /// Matrix dimensions do not conform.
    DimMismatch,
    /// Operands live over different primes.
    FieldMismatch,
    /// The modulus is not one of the supported primes.
    UnsupportedPrime(u8),
    /// A linear system has no solution.
    Inconsistent,
    /// A streamed echelonization would exceed its memory budget.
    MemoryBudget { needed: u64, budget: u64 },
    /// More independent rows appeared than the caller allowed for.
    RankCapExceeded,
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::DimMismatch => write!(f, "matrix dimensions do not conform"),
            GfError::FieldMismatch => write!(f, "matrices over different fields"),
            GfError::UnsupportedPrime(p) => write!(f, "unsupported prime {p}"),
            GfError::Inconsistent => write!(f, "inconsistent linear system"),
            GfError::MemoryBudget { needed, budget } => {
                write!(f, "memory budget exceeded: need {needed} bytes, budget {budget}")
            }
            GfError::RankCapExceeded => write!(f, "rank cap exceeded"),
        }
    }
}

impl core::error::Error for GfError {}

pub(crate) fn is_supported_prime(p: u8) -> bool {
    matches!(p, 2 | 3 | 5 | 7 | 11 | 13)
}

/// Number of 64-bit words per packed row of `cols` entries.
#[inline]
pub(crate) fn words_per_row(cols: usize) -> usize {
    cols.div_ceil(64)
}
