//! Small finite fields `F_{p^n}` through log/antilog tables.

use crate::arith;
use crate::error::{Error, Result};

/// Largest field handled by table arithmetic.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// `F_{p^n}` built from a primitive polynomial. Elements are `0..size`,
/// read as base-`p` digit vectors of polynomial coefficients; element
/// `p` (the class of `x`) is the primitive element `g`.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    size: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FiniteField {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !arith::is_prime(&(p as i64)) {
            return Err(Error::NotPrime(p.to_string()));
        }
        let size = p
            .checked_pow(n)
            .filter(|s| n >= 1 && *s <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::InvalidArgument(format!("field of size {p}^{n} unsupported")))?;
        // monic f = x^n + tail, tail encoded as digits of `code`
        for code in 0..size {
            if let Some(exp) = powers_of_x(p, n, size, code) {
                let mut log = vec![0u32; size as usize];
                for (k, &e) in exp.iter().enumerate() {
                    log[e as usize] = k as u32;
                }
                return Ok(Self { p, size, exp, log });
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    /// Field with `q^m` elements, `q` a prime power.
    pub fn with_size(q: u64, m: u32) -> Result<Self> {
        let (p, r) = arith::as_prime_power(&(q as i64))
            .ok_or_else(|| Error::NotPrimePower(q.to_string()))?;
        Self::new(p as u64, r * m)
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn generator(&self) -> u64 {
        self.from_exponent(1)
    }

    /// `g^k`.
    pub fn from_exponent(&self, k: u64) -> u64 {
        self.exp[(k % (self.size - 1)) as usize] as u64
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, x: u64) -> Option<u64> {
        (x != 0).then(|| self.log[x as usize] as u64)
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, x: u64) -> u64 {
        let (mut x, mut out, mut place) = (x, 0, 1);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        match (self.log(x), self.log(y)) {
            (Some(a), Some(b)) => self.from_exponent(a + b),
            _ => 0,
        }
    }

    pub fn pow(&self, x: u64, e: u64) -> u64 {
        match self.log(x) {
            Some(a) => {
                self.from_exponent(((a as u128 * e as u128) % (self.size - 1) as u128) as u64)
            }
            None if e == 0 => 1,
            None => 0,
        }
    }
}

/// `x^k mod f` for `k = 0..size-1` if `x` has order `size - 1`, else None.
fn powers_of_x(p: u64, n: u32, size: u64, tail_code: u64) -> Option<Vec<u32>> {
    let n = n as usize;
    let tail: Vec<u64> = (0..n).map(|i| (tail_code / p.pow(i as u32)) % p).collect();
    if tail[0] == 0 {
        return None;
    }
    let encode = |c: &[u64]| c.iter().rev().fold(0u64, |acc, &d| acc * p + d);
    let mut cur = vec![0u64; n];
    cur[0] = 1;
    let mut out = Vec::with_capacity(size as usize - 1);
    for k in 0..size - 1 {
        let e = encode(&cur);
        if k > 0 && e == 1 {
            return None;
        }
        out.push(e as u32);
        // multiply by x, reduce with x^n = -tail
        let top = cur[n - 1];
        for i in (1..n).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..n {
            cur[i] = (cur[i] + p * p - top * tail[i] % p) % p;
        }
    }
    (encode(&cur) == 1).then_some(out)
}
