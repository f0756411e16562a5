use super::module::{CyclicGaloisAction, ENUMERATION_LIMIT};
use crate::error::{Error, Result};

/// A function `G → M`, `values[i] = f(σ^i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneCochain {
    values: Vec<u64>,
}

/// A function `G × G → M`, `values[i * m + j] = c(σ^i, σ^j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoCochain {
    group_order: u64,
    values: Vec<u64>,
}

fn check_values(a: &CyclicGaloisAction, values: &[u64], expected: u64) -> Result<()> {
    if values.len() as u64 != expected {
        return Err(Error::InvalidCochain(format!(
            "expected {expected} values, got {}",
            values.len()
        )));
    }
    if let Some(x) = values.iter().find(|&&x| !a.contains(x)) {
        return Err(Error::InvalidCochain(format!(
            "{x} is not an element of a module of order {}",
            a.order()
        )));
    }
    Ok(())
}

impl OneCochain {
    pub fn new(a: &CyclicGaloisAction, values: Vec<u64>) -> Result<Self> {
        check_values(a, &values, a.group_order())?;
        Ok(Self { values })
    }

    pub fn constant_zero(a: &CyclicGaloisAction) -> Self {
        Self {
            values: vec![a.zero(); a.group_order() as usize],
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, i: u64) -> u64 {
        self.values[(i % self.values.len() as u64) as usize]
    }
}

impl TwoCochain {
    pub fn new(a: &CyclicGaloisAction, values: Vec<u64>) -> Result<Self> {
        let m = a.group_order();
        check_values(a, &values, m * m)?;
        Ok(Self {
            group_order: m,
            values,
        })
    }

    /// Builds from rows `c(σ^i, ·)`.
    pub fn from_rows(a: &CyclicGaloisAction, rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.len() as u64 != a.group_order() {
            return Err(Error::InvalidCochain(format!(
                "expected {} rows, got {}",
                a.group_order(),
                rows.len()
            )));
        }
        Self::new(a, rows.into_iter().flatten().collect())
    }

    pub fn zero(a: &CyclicGaloisAction) -> Self {
        let m = a.group_order();
        Self {
            group_order: m,
            values: vec![a.zero(); (m * m) as usize],
        }
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, i: u64, j: u64) -> u64 {
        let m = self.group_order;
        self.values[((i % m) * m + j % m) as usize]
    }

    /// `c(1, τ) = c(σ, 1) = 0` for all group elements.
    pub fn is_normalized(&self) -> bool {
        (0..self.group_order).all(|i| self.get(0, i) == 0 && self.get(i, 0) == 0)
    }

    /// Pointwise sum with another cochain.
    pub fn add(&self, a: &CyclicGaloisAction, other: &Self) -> Self {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&x, &y)| a.add(x, y))
            .collect();
        Self {
            group_order: self.group_order,
            values,
        }
    }

    fn check_against(&self, a: &CyclicGaloisAction) -> Result<()> {
        check_values(a, &self.values, a.group_order() * a.group_order())
    }
}

/// `(df)(σ, τ) = σ(f_τ) - f_{στ} + f_σ`, the additive form of
/// `σ(f_τ) f_{στ}^{-1} f_σ`.
pub fn coboundary(a: &CyclicGaloisAction, f: &OneCochain) -> Result<TwoCochain> {
    check_values(a, &f.values, a.group_order())?;
    let m = a.group_order();
    let mut values = Vec::with_capacity((m * m) as usize);
    for i in 0..m {
        for j in 0..m {
            let v = a.add(a.sub(a.act(i, f.get(j)), f.get(i + j)), f.get(i));
            values.push(v);
        }
    }
    Ok(TwoCochain {
        group_order: m,
        values,
    })
}

/// `σ(c(τ, ρ)) + c(σ, τρ) = c(στ, ρ) + c(σ, τ)` for all triples.
pub fn is_cocycle(a: &CyclicGaloisAction, c: &TwoCochain) -> Result<bool> {
    c.check_against(a)?;
    let m = a.group_order();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let lhs = a.add(a.act(i, c.get(j, k)), c.get(i, j + k));
                let rhs = a.add(c.get(i + j, k), c.get(i, j));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn all_tuples(a: &CyclicGaloisAction, len: u64) -> Result<impl Iterator<Item = Vec<u64>>> {
    let order = a.order();
    let total = u32::try_from(len)
        .ok()
        .and_then(|l| order.checked_pow(l))
        .filter(|t| *t <= ENUMERATION_LIMIT)
        .ok_or(Error::TooLarge(u64::MAX))?;
    Ok((0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let x = code % order;
                code /= order;
                x
            })
            .collect()
    }))
}

/// Every 1-cochain `G → M`.
pub fn all_one_cochains(a: &CyclicGaloisAction) -> Result<impl Iterator<Item = OneCochain>> {
    Ok(all_tuples(a, a.group_order())?.map(|values| OneCochain { values }))
}

/// Every 2-cochain `G × G → M`.
pub fn all_two_cochains(a: &CyclicGaloisAction) -> Result<impl Iterator<Item = TwoCochain>> {
    let m = a.group_order();
    Ok(all_tuples(a, m * m)?.map(move |values| TwoCochain {
        group_order: m,
        values,
    }))
}
