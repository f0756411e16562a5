//! Elementary number theory on [`ExactInt`] values.

use crate::scalar::ExactInt;

/// `d | n` with the convention that every integer divides 0 and 0 divides
/// only 0.
pub fn divides<Z: ExactInt>(d: &Z, n: &Z) -> bool {
    if d.is_zero() {
        n.is_zero()
    } else {
        (n.clone() % d.clone()).is_zero()
    }
}

pub fn is_prime<Z: ExactInt>(n: &Z) -> bool {
    let two = Z::from(2);
    if *n < two {
        return false;
    }
    if n.is_even() {
        return *n == two;
    }
    let mut d = Z::from(3);
    while d.clone() * d.clone() <= *n {
        if (n.clone() % d.clone()).is_zero() {
            return false;
        }
        d = d + two.clone();
    }
    true
}

/// Returns `k` with `n = p^k`, or `None` when `n` is not a power of `p`.
/// `n = 1` is `p^0`.
pub fn prime_power_exponent<Z: ExactInt>(n: &Z, p: &Z) -> Option<u32> {
    if !n.is_positive() || *p <= Z::one() {
        return None;
    }
    let mut m = n.clone();
    let mut k = 0;
    while (m.clone() % p.clone()).is_zero() {
        m = m / p.clone();
        k += 1;
    }
    m.is_one().then_some(k)
}

/// Splits a nonzero `n` as `p^v * u` with `p ∤ u`.
pub fn split_valuation<Z: ExactInt>(n: &Z, p: &Z) -> (u32, Z) {
    debug_assert!(!n.is_zero());
    let mut u = n.clone();
    let mut v = 0;
    while (u.clone() % p.clone()).is_zero() {
        u = u / p.clone();
        v += 1;
    }
    (v, u)
}

/// Distinct prime factors of `|n|`, ascending. Empty for `|n| <= 1`.
pub fn prime_factors<Z: ExactInt>(n: &Z) -> Vec<Z> {
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut d = Z::from(2);
    while d.clone() * d.clone() <= m {
        if (m.clone() % d.clone()).is_zero() {
            while (m.clone() % d.clone()).is_zero() {
                m = m / d.clone();
            }
            out.push(d.clone());
        }
        d = d + Z::one();
    }
    if m > Z::one() {
        out.push(m);
    }
    out
}

/// `Some((p, k))` when `q = p^k` with `k >= 1`.
pub fn as_prime_power<Z: ExactInt>(q: &Z) -> Option<(Z, u32)> {
    match prime_factors(q).as_slice() {
        [p] if q.is_positive() => prime_power_exponent(q, p).map(|k| (p.clone(), k)),
        _ => None,
    }
}

/// Positive divisors of a positive `n`, ascending.
pub fn divisors<Z: ExactInt>(n: &Z) -> Vec<Z> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = Z::one();
    while d.clone() * d.clone() <= *n {
        if (n.clone() % d.clone()).is_zero() {
            let e = n.clone() / d.clone();
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d = d + Z::one();
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mod_pow<Z: ExactInt>(base: &Z, exp: &Z, modulus: &Z) -> Z {
    let mut result = Z::one() % modulus.clone();
    let mut b = base.mod_floor(modulus);
    let mut e = exp.clone();
    let two = Z::from(2);
    while e.is_positive() {
        if e.is_odd() {
            result = (result * b.clone()).mod_floor(modulus);
        }
        b = (b.clone() * b).mod_floor(modulus);
        e = e / two.clone();
    }
    result
}

/// Legendre symbol `(a/p)` for an odd prime `p`, via Euler's criterion.
pub fn legendre<Z: ExactInt>(a: &Z, p: &Z) -> i8 {
    let r = mod_pow(a, &((p.clone() - Z::one()) / Z::from(2)), p);
    if r.is_zero() {
        0
    } else if r.is_one() {
        1
    } else {
        -1
    }
}
