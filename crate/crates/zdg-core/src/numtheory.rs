//! Elementary number theory: factorization, divisor sets, Euler's totient.
//!
//! Everything here is exact integer arithmetic by trial division; the ring
//! order cap (2^20) keeps that instantaneous.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumError {
    #[error("n must be at least 2, got {0}")]
    TooSmall(u64),
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// If `q = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    match factorize(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// All divisors of `n`, ascending, including 1 and `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Divisors of `n` excluding 1 and `n` itself, ascending.
pub fn proper_divisors(n: u64) -> Vec<u64> {
    divisors(n)
        .into_iter()
        .filter(|&d| d != 1 && d != n)
        .collect()
}

/// Euler's totient, computed from the factorization.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Divisor data for `Z_n`: the proper divisors, their count `tau`, and `phi(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZnContext {
    pub n: u64,
    /// Ascending; excludes 1 and `n`.
    pub proper_divisors: Vec<u64>,
    pub tau: usize,
    pub phi: u64,
}

pub fn zn_context(n: u64) -> Result<ZnContext, NumError> {
    if n < 2 {
        return Err(NumError::TooSmall(n));
    }
    let proper_divisors = proper_divisors(n);
    Ok(ZnContext {
        n,
        tau: proper_divisors.len(),
        phi: euler_phi(n),
        proper_divisors,
    })
}
