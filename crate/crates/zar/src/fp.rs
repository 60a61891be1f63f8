//! Arithmetic in the prime field `F_p`.
//!
//! Elements are `u64` residues in `0..p`; the modulus lives in the
//! [`FpField`] context that is threaded through polynomial operations.

use crate::arith::{is_prime_u64, mul_mod, pow_mod};
use crate::error::Error;
use crate::Result;

/// The field `F_p` for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FpField {
    pub p: u64,
}

impl FpField {
    /// Builds the field, rejecting composite moduli.
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FpField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Multiplicative inverse of a nonzero residue (via Fermat).
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
}
