//! Quadratic Hilbert symbols over Q and the local invariants of quaternion
//! algebras `(a, b)`.

use std::fmt;

use crate::arith;
use crate::brauer::InvariantClass;
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// A place of Q. Orders the real place first, then primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place<Z> {
    RealInfinite,
    Finite(Z),
}

impl<Z: ExactInt> Place<Z> {
    /// A finite place; `p` must be prime.
    pub fn finite(p: Z) -> Result<Self> {
        if arith::is_prime(&p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    /// Parses `"real"` (also `"inf"`) or a prime.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "real" | "inf" | "infinity" => Ok(Place::RealInfinite),
            t => Self::finite(
                Z::parse(t).ok_or_else(|| Error::InvalidArgument(format!("not a place: {s:?}")))?,
            ),
        }
    }

    pub fn prime(&self) -> Option<&Z> {
        match self {
            Place::RealInfinite => None,
            Place::Finite(p) => Some(p),
        }
    }
}

impl<Z: ExactInt> fmt::Display for Place<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::RealInfinite => f.write_str("real"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// The quaternion algebra `(a, b)` over Q, i.e. the conic
/// `z² = a x² + b y²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuaternionSymbol<Z> {
    a: Z,
    b: Z,
}

impl<Z: ExactInt> QuaternionSymbol<Z> {
    pub fn new(a: Z, b: Z) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroSymbolEntry);
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Z {
        &self.a
    }

    pub fn b(&self) -> &Z {
        &self.b
    }

    /// Places where the symbol can be −1: the real place, 2, and the odd
    /// primes dividing `ab`.
    pub fn candidate_places(&self) -> Vec<Place<Z>> {
        let mut places = vec![Place::RealInfinite, Place::Finite(Z::from(2))];
        let mut odd: Vec<Z> = arith::prime_factors(&self.a)
            .into_iter()
            .chain(arith::prime_factors(&self.b))
            .filter(|p| p.is_odd())
            .collect();
        odd.sort();
        odd.dedup();
        places.extend(odd.into_iter().map(Place::Finite));
        places
    }
}

/// `(a, b)_v ∈ {+1, −1}`: +1 iff `z² = a x² + b y²` has a nontrivial
/// solution over the completion of Q at `v`.
pub fn hilbert_symbol<Z: ExactInt>(q: &QuaternionSymbol<Z>, v: &Place<Z>) -> Result<i8> {
    match v {
        Place::RealInfinite => Ok(if q.a.is_negative() && q.b.is_negative() {
            -1
        } else {
            1
        }),
        Place::Finite(p) => {
            if !arith::is_prime(p) {
                return Err(Error::NotPrime(p.to_string()));
            }
            if *p == Z::from(2) {
                Ok(symbol_at_two(&q.a, &q.b))
            } else {
                Ok(symbol_at_odd(&q.a, &q.b, p))
            }
        }
    }
}

fn symbol_at_odd<Z: ExactInt>(a: &Z, b: &Z, p: &Z) -> i8 {
    let (alpha, u) = arith::split_valuation(a, p);
    let (beta, v) = arith::split_valuation(b, p);
    let mut sign = 1i8;
    // (-1)^{αβ(p-1)/2}
    let p_is_3_mod_4 = p.mod_floor(&Z::from(4)) == Z::from(3);
    if alpha % 2 == 1 && beta % 2 == 1 && p_is_3_mod_4 {
        sign = -sign;
    }
    if beta % 2 == 1 {
        sign *= arith::legendre(&u, p);
    }
    if alpha % 2 == 1 {
        sign *= arith::legendre(&v, p);
    }
    sign
}

fn symbol_at_two<Z: ExactInt>(a: &Z, b: &Z) -> i8 {
    let two = Z::from(2);
    let (alpha, u) = arith::split_valuation(a, &two);
    let (beta, v) = arith::split_valuation(b, &two);
    let residue = |x: &Z| x.mod_floor(&Z::from(8)).to_u8().expect("residue mod 8");
    let (u8_, v8) = (residue(&u), residue(&v));
    // ε(x) = (x-1)/2 mod 2, ω(x) = (x²-1)/8 mod 2, read off x mod 8
    let eps = |x: u8| u32::from(x % 4 == 3);
    let omega = |x: u8| u32::from(x == 3 || x == 5);
    let exponent = eps(u8_) * eps(v8) + alpha * omega(v8) + beta * omega(u8_);
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Local invariants of a quaternion algebra at every candidate place.
/// Places outside this list carry invariant 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalInvariants<Z> {
    entries: Vec<(Place<Z>, InvariantClass<Z>)>,
}

impl<Z: ExactInt> LocalInvariants<Z> {
    pub fn entries(&self) -> &[(Place<Z>, InvariantClass<Z>)] {
        &self.entries
    }

    pub fn get(&self, v: &Place<Z>) -> InvariantClass<Z> {
        self.entries
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, inv)| inv.clone())
            .unwrap_or_else(InvariantClass::zero)
    }

    /// Places with nonzero invariant.
    pub fn support(&self) -> Vec<Place<Z>> {
        self.entries
            .iter()
            .filter(|(_, inv)| !inv.is_zero())
            .map(|(v, _)| v.clone())
            .collect()
    }

    pub fn sum(&self) -> InvariantClass<Z> {
        self.entries
            .iter()
            .fold(InvariantClass::zero(), |acc, (_, inv)| &acc + inv)
    }
}

/// Invariant 1/2 where the Hilbert symbol is −1, 0 elsewhere.
pub fn quaternion_invariants<Z: ExactInt>(q: &QuaternionSymbol<Z>) -> LocalInvariants<Z> {
    let entries = q
        .candidate_places()
        .into_iter()
        .map(|v| {
            let s = hilbert_symbol(q, &v).expect("candidate places are valid");
            let inv = if s == -1 {
                InvariantClass::half()
            } else {
                InvariantClass::zero()
            };
            (v, inv)
        })
        .collect();
    LocalInvariants { entries }
}

/// Self-test: the local invariants of `(a, b)` sum to 0 in Q/Z.
pub fn product_formula_check<Z: ExactInt>(q: &QuaternionSymbol<Z>) -> bool {
    quaternion_invariants(q).sum().is_zero()
}
