//! Arithmetic in Q/Z, the value group of local Brauer invariants, and the
//! shape of the relative Brauer group of a curve over a p-adic field.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// An element of Q/Z, kept as a reduced fraction with representative in
/// `[0, 1)`. The zero class is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantClass<Z> {
    numerator: Z,
    denominator: Z,
}

impl<Z: ExactInt> InvariantClass<Z> {
    /// The class of `numerator/denominator` modulo 1.
    pub fn new(numerator: Z, denominator: Z) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (mut n, mut d) = (numerator, denominator);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        n = n.mod_floor(&d);
        let g = n.gcd(&d);
        Ok(Self {
            numerator: n / g.clone(),
            denominator: d / g,
        })
    }

    pub fn zero() -> Self {
        Self {
            numerator: Z::zero(),
            denominator: Z::one(),
        }
    }

    /// `1/2`, the invariant of a non-split quaternion algebra.
    pub fn half() -> Self {
        Self {
            numerator: Z::one(),
            denominator: Z::from(2),
        }
    }

    /// The generator `1/n` of `(1/n)Z/Z`.
    pub fn unit_fraction(n: Z) -> Result<Self> {
        Self::new(Z::one(), n)
    }

    pub fn numerator(&self) -> &Z {
        &self.numerator
    }

    pub fn denominator(&self) -> &Z {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Order in Q/Z; equal to the reduced denominator.
    pub fn order(&self) -> Z {
        self.denominator.clone()
    }

    /// Whether the order is `p^k` for some `k >= 0`. The zero class passes
    /// for every prime.
    pub fn is_prime_power_order(&self, p: &Z) -> Result<bool> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        Ok(arith::prime_power_exponent(&self.denominator, p).is_some())
    }

    /// Integer multiple `k·self`.
    pub fn times(&self, k: &Z) -> Self {
        Self::new(k.clone() * self.numerator.clone(), self.denominator.clone())
            .expect("denominator stays positive")
    }

    /// Parses `"k/n"` (or a bare integer, read as `k/1`).
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a fraction: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => Self::new(Z::parse(n).ok_or_else(bad)?, Z::parse(d).ok_or_else(bad)?),
            None => Self::new(Z::parse(s).ok_or_else(bad)?, Z::one()),
        }
    }
}

impl<Z: ExactInt> fmt::Display for InvariantClass<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl<Z: ExactInt> Add for InvariantClass<Z> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<Z: ExactInt> Add for &InvariantClass<Z> {
    type Output = InvariantClass<Z>;

    fn add(self, rhs: Self) -> InvariantClass<Z> {
        let d = self.denominator.lcm(&rhs.denominator);
        let n = self.numerator.clone() * (d.clone() / self.denominator.clone())
            + rhs.numerator.clone() * (d.clone() / rhs.denominator.clone());
        InvariantClass::new(n, d).expect("lcm of positive denominators is nonzero")
    }
}

impl<Z: ExactInt> Neg for InvariantClass<Z> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.numerator, self.denominator).expect("denominator stays positive")
    }
}

impl<Z: ExactInt> Sub for InvariantClass<Z> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// The cyclic subgroup `(1/n)Z/Z` of Q/Z.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicSubgroup<Z> {
    order: Z,
}

impl<Z: ExactInt> CyclicSubgroup<Z> {
    pub fn new(order: Z) -> Result<Self> {
        if !order.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "cyclic subgroup order must be positive, got {order}"
            )));
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> &Z {
        &self.order
    }

    pub fn contains(&self, a: &InvariantClass<Z>) -> bool {
        arith::divides(a.denominator(), &self.order)
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        arith::divides(&self.order, &other.order)
    }

    /// The generator `1/n`.
    pub fn generator(&self) -> InvariantClass<Z> {
        InvariantClass::unit_fraction(self.order.clone()).expect("order is positive")
    }

    /// All `n` elements `k/n`, in increasing order of `k`.
    pub fn elements(&self) -> impl Iterator<Item = InvariantClass<Z>> + '_ {
        num_iter(self.order.clone())
            .map(move |k| InvariantClass::new(k, self.order.clone()).expect("order is positive"))
    }
}

fn num_iter<Z: ExactInt>(n: Z) -> impl Iterator<Item = Z> {
    let mut k = Z::zero();
    std::iter::from_fn(move || {
        (k < n).then(|| {
            let cur = k.clone();
            k = k.clone() + Z::one();
            cur
        })
    })
}

/// Relative Brauer group of a curve over a p-adic field with given period
/// and index: the full group `(1/ix)Z/Z`, its degree-zero part
/// `(1/pe)Z/Z`, and the Néron–Severi quotient `pe·Z/ix·Z` of order `ix/pe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeBrauerShape<Z> {
    pub period: Z,
    pub index: Z,
    pub full: CyclicSubgroup<Z>,
    pub degree_zero: CyclicSubgroup<Z>,
    pub ns_order: Z,
}

impl<Z: ExactInt> RelativeBrauerShape<Z> {
    /// Over a p-adic field the relative Brauer group is as large as period
    /// and index allow.
    pub fn local(period: Z, index: Z) -> Result<Self> {
        let full = CyclicSubgroup::new(index.clone())?;
        let degree_zero = CyclicSubgroup::new(period.clone())?;
        if !arith::divides(&period, &index) {
            return Err(Error::PeriodDoesNotDivideIndex {
                period: period.to_string(),
                index: index.to_string(),
            });
        }
        let ns_order = index.clone() / period.clone();
        Ok(Self {
            period,
            index,
            full,
            degree_zero,
            ns_order,
        })
    }
}
