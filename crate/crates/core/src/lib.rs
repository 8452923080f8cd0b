//! Exact arithmetic for Fermat's descent proofs.
//!
//! The crate covers three layers:
//!
//! - [`numeric`]: gcd, integer square roots, reduced rationals and the
//!   coprimality propositions used by the descent, as checked predicates.
//! - [`pythagoras`]: generation and canonical classification of Pythagorean
//!   triples through rational points of the unit circle.
//! - [`descent`], [`diophantus20`], [`fermat4`]: a measure-audited infinite
//!   descent engine, the descent step for "can `pq(q²-p²)` be a square?",
//!   and bounded exhaustive verifiers for the right-triangle problem and
//!   `x⁴ + y⁴ = z⁴`.
//!
//! Everything is `no_std` (with `alloc`) and works on `u64` with checked
//! arithmetic: overflow is reported as [`Error::Overflow`], never wrapped.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

use alloc::vec::Vec;

mod error;

pub mod descent;
pub mod diophantus20;
pub mod fermat4;
pub mod numeric;
pub mod pythagoras;

pub use error::{Error, Result};
pub use numeric::{Nat, Rational};
pub use pythagoras::{CirclePoint, Orientation, Parametrization, Triple};

/// Outcome of scanning one index sub-range of an exhaustive verifier.
///
/// A scan never stops early: `checked` is the number of candidates in the
/// range and `hits` lists every counterexample in scan order. Scans of
/// consecutive ranges therefore concatenate into the scan of their union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scan<T> {
    pub checked: u64,
    pub hits: Vec<T>,
}

impl<T> Scan<T> {
    pub(crate) fn empty() -> Self {
        Scan {
            checked: 0,
            hits: Vec::new(),
        }
    }

    pub fn first(self) -> Option<T> {
        self.hits.into_iter().next()
    }

    /// Appends the scan of the range directly following this one.
    pub fn merge(&mut self, next: Scan<T>) {
        self.checked += next.checked;
        self.hits.extend(next.hits);
    }
}
