//! Residue arithmetic in the cyclic group `Z_n`, `n` odd and at least 3.
//!
//! Elements are stored as their canonical representatives in `0..n`. The
//! modulus travels with the containing structure rather than with each
//! residue.

use crate::error::{Error, Result};

/// An element of `Z_n`, always the representative in `0..n`.
pub type Residue = u32;

/// An odd modulus `n >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::InvalidOrder(n as u64));
        }
        Ok(Modulus(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `q = (n - 1) / 2`, the number of pairs in a 2-partition of `Z_n*`.
    #[inline]
    pub fn half(self) -> u32 {
        (self.0 - 1) / 2
    }

    #[inline]
    pub fn reduce(self, v: i64) -> Residue {
        v.rem_euclid(self.0 as i64) as Residue
    }

    #[inline]
    pub fn add(self, a: Residue, b: Residue) -> Residue {
        ((a as u64 + b as u64) % self.0 as u64) as Residue
    }

    #[inline]
    pub fn sub(self, a: Residue, b: Residue) -> Residue {
        debug_assert!(a < self.0 && b < self.0);
        if a >= b {
            a - b
        } else {
            self.0 - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: Residue) -> Residue {
        debug_assert!(a < self.0);
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn double(self, a: Residue) -> Residue {
        self.add(a, a)
    }

    /// Representative of `{d, -d}` in `0..=q`.
    #[inline]
    pub fn sign_class(self, d: Residue) -> Residue {
        d.min(self.neg(d))
    }

    /// The nonzero residues `1..n` in natural order.
    pub fn nonzero(self) -> std::ops::Range<Residue> {
        1..self.0
    }

    /// Modulus of `Z_{nm}`, if it fits.
    pub fn checked_mul(self, other: Modulus) -> Result<Modulus> {
        self.0
            .checked_mul(other.0)
            .map(Modulus)
            .ok_or(Error::ProductTooLarge {
                left: self.0,
                right: other.0,
            })
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}
