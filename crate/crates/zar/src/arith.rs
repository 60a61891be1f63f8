//! Exact integer arithmetic: primality, factorization, and p-adic orders.
//!
//! Factorization is plain trial division and is exact for inputs below
//! `2^63`; larger inputs are rejected with [`Error::InputTooLarge`] instead
//! of being handled probabilistically.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// Modular multiplication that cannot overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Modular exponentiation by squaring.
pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test.
///
/// The fixed witness set is known to be exact for every `n < 3.3 * 10^24`,
/// which covers all of `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Trial-division factorization of `n >= 1` into `(prime, multiplicity)`
/// pairs in ascending order of prime.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    // Wheel over residues coprime to 6.
    let mut d = 5u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= n) {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All primes `<= bound` via a sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = alloc::vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Multiplicity of the prime `p` in the nonzero integer `n`.
pub fn int_ord(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut e = 0i64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if r.is_zero() {
            n = q;
            e += 1;
        } else {
            return e;
        }
    }
}

/// Factor a nonzero integer, ignoring sign. Errors if `|n| >= 2^63`.
pub fn factor_bigint(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    let m = n
        .abs()
        .to_u64()
        .filter(|&m| m < (1u64 << 63))
        .ok_or_else(|| Error::InputTooLarge(n.to_string()))?;
    Ok(factor_u64(m))
}

/// All positive divisors of `n >= 1`, ascending. Errors if `n >= 2^63`.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let fac = factor_bigint(n)?;
    let mut divs = alloc::vec![BigInt::from(1u32)];
    for (p, e) in fac {
        let p = BigInt::from(p);
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pw = BigInt::from(1u32);
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Whether a nonnegative integer is a perfect square; returns the root.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = num_integer::Roots::sqrt(n);
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}
