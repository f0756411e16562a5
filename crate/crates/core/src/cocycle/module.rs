use crate::arith;
use crate::error::{Error, Result};

/// Exhaustive searches refuse modules larger than this.
pub const ENUMERATION_LIMIT: u64 = 1 << 22;

/// A finite abelian group `M`, written additively with elements
/// `0..order` and `0` as the identity, together with an action of the
/// cyclic group `G = <σ>` of order `group_order`.
///
/// Multiplicative modules such as `F_{q^m}^*` are stored through discrete
/// logarithms to a fixed primitive element, so a product of units becomes
/// a sum of exponents and Frobenius becomes multiplication by `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicGaloisAction {
    group_order: u64,
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// `Z/n` with `σ(x) = u·x`.
    Cyclic { n: u64, u: u64 },
    /// Explicit tables; `sigma_pow[i][x] = σ^i(x)`.
    Table {
        order: u64,
        add: Vec<u32>,
        neg: Vec<u32>,
        sigma_pow: Vec<Vec<u32>>,
    },
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1 % n;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, n);
        }
        b = mul_mod(b, b, n);
        e >>= 1;
    }
    r
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CyclicGaloisAction {
    /// `Z/m` acting on `Z/n` through `σ(x) = action_exponent · x`.
    pub fn cyclic(group_order: u64, n: u64, action_exponent: u64) -> Result<Self> {
        if group_order == 0 || n == 0 {
            return Err(Error::InvalidModule(
                "group and module orders must be positive".into(),
            ));
        }
        let u = action_exponent % n;
        if gcd(u, n) != 1 && n != 1 {
            return Err(Error::InvalidModule(format!(
                "multiplication by {action_exponent} is not an automorphism of Z/{n}"
            )));
        }
        if pow_mod(u, group_order, n) != 1 % n {
            return Err(Error::InvalidModule(format!(
                "σ^{group_order} is not the identity: {action_exponent}^{group_order} ≢ 1 mod {n}"
            )));
        }
        Ok(Self {
            group_order,
            repr: Repr::Cyclic { n, u },
        })
    }

    /// `Gal(F_{q^m}/F_q)` acting on `F_{q^m}^*` by Frobenius `x ↦ x^q`.
    /// Elements are exponents of a primitive element.
    pub fn finite_field_units(q: u64, m: u64) -> Result<Self> {
        if arith::as_prime_power(&(q as i64)).is_none() {
            return Err(Error::NotPrimePower(q.to_string()));
        }
        if m == 0 {
            return Err(Error::InvalidModule(
                "extension degree must be positive".into(),
            ));
        }
        let size = u32::try_from(m)
            .ok()
            .and_then(|m| q.checked_pow(m))
            .filter(|s| *s < 1 << 62)
            .ok_or_else(|| Error::InvalidModule(format!("F_{{{q}^{m}}} is too large")))?;
        Self::cyclic(m, size - 1, q)
    }

    /// Builds a module from an explicit addition table (`add[x * order + y]`)
    /// and the table of `σ`. Element `0` must be the identity.
    pub fn from_tables(group_order: u64, add: Vec<u32>, sigma: Vec<u32>) -> Result<Self> {
        let order = sigma.len();
        let bad = |msg: &str| Err(Error::InvalidModule(msg.to_string()));
        if group_order == 0 || order == 0 {
            return bad("group and module orders must be positive");
        }
        if add.len() != order * order || add.iter().chain(&sigma).any(|&x| x as usize >= order) {
            return bad("table sizes do not match the module order");
        }
        let op = |x: usize, y: usize| add[x * order + y] as usize;
        let mut neg = vec![0u32; order];
        for x in 0..order {
            if op(0, x) != x {
                return bad("element 0 is not the identity");
            }
            match (0..order).find(|&y| op(x, y) == 0) {
                Some(y) => neg[x] = y as u32,
                None => return bad("missing inverse"),
            }
            for y in 0..order {
                if op(x, y) != op(y, x) {
                    return bad("addition is not commutative");
                }
                for z in 0..order {
                    if op(op(x, y), z) != op(x, op(y, z)) {
                        return bad("addition is not associative");
                    }
                }
                if sigma[op(x, y)] as usize != op(sigma[x] as usize, sigma[y] as usize) {
                    return bad("σ is not additive");
                }
            }
        }
        let mut seen = vec![false; order];
        for &s in &sigma {
            seen[s as usize] = true;
        }
        if seen.iter().any(|s| !s) {
            return bad("σ is not bijective");
        }
        let mut sigma_pow = vec![(0..order as u32).collect::<Vec<_>>()];
        for i in 1..=group_order as usize {
            let prev = &sigma_pow[i - 1];
            let next: Vec<u32> = prev.iter().map(|&x| sigma[x as usize]).collect();
            sigma_pow.push(next);
        }
        if sigma_pow.pop() != Some(sigma_pow[0].clone()) {
            return bad("σ^m is not the identity");
        }
        Ok(Self {
            group_order,
            repr: Repr::Table {
                order: order as u64,
                add,
                neg,
                sigma_pow,
            },
        })
    }

    /// Direct sum `M ⊕ N` with the diagonal action; element `(x, y)` is
    /// stored as `x * |N| + y`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.group_order != other.group_order {
            return Err(Error::InvalidModule("group orders differ".into()));
        }
        let (a, b) = (self.order(), other.order());
        let order = a
            .checked_mul(b)
            .filter(|o| *o <= 256)
            .ok_or(Error::TooLarge(a.saturating_mul(b)))?;
        let split = |z: u64| (z / b, z % b);
        let join = |x: u64, y: u64| (x * b + y) as u32;
        let mut add = Vec::with_capacity((order * order) as usize);
        for z in 0..order {
            for w in 0..order {
                let ((x1, y1), (x2, y2)) = (split(z), split(w));
                add.push(join(self.add(x1, x2), other.add(y1, y2)));
            }
        }
        let sigma = (0..order)
            .map(|z| {
                let (x, y) = split(z);
                join(self.act(1, x), other.act(1, y))
            })
            .collect();
        Self::from_tables(self.group_order, add, sigma)
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn order(&self) -> u64 {
        match &self.repr {
            Repr::Cyclic { n, .. } => *n,
            Repr::Table { order, .. } => *order,
        }
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn contains(&self, x: u64) -> bool {
        x < self.order()
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        match &self.repr {
            Repr::Cyclic { n, .. } => ((x as u128 + y as u128) % *n as u128) as u64,
            Repr::Table { order, add, .. } => add[(x * order + y) as usize] as u64,
        }
    }

    pub fn neg(&self, x: u64) -> u64 {
        match &self.repr {
            Repr::Cyclic { n, .. } => (n - x % n) % n,
            Repr::Table { neg, .. } => neg[x as usize] as u64,
        }
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        self.add(x, self.neg(y))
    }

    /// `σ^i(x)`; `i` is read modulo the group order.
    pub fn act(&self, i: u64, x: u64) -> u64 {
        let i = i % self.group_order;
        match &self.repr {
            Repr::Cyclic { n, u } => mul_mod(x, pow_mod(*u, i, *n), *n),
            Repr::Table { sigma_pow, .. } => sigma_pow[i as usize][x as usize] as u64,
        }
    }

    /// `N(x) = x + σx + ... + σ^{m-1}x`.
    pub fn norm(&self, x: u64) -> u64 {
        (0..self.group_order).fold(self.zero(), |acc, i| self.add(acc, self.act(i, x)))
    }

    pub fn elements(&self) -> Result<std::ops::Range<u64>> {
        let n = self.order();
        if n > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(n));
        }
        Ok(0..n)
    }

    pub(crate) fn cyclic_parts(&self) -> Option<(u64, u64)> {
        match self.repr {
            Repr::Cyclic { n, u } => Some((n, u)),
            Repr::Table { .. } => None,
        }
    }
}

/// `H²(G, M) = M^G / N(M)` for cyclic `G`, recorded through the sizes of
/// the fixed submodule and of the norm image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicH2 {
    pub fixed_points: u64,
    pub norm_image: u64,
}

impl CyclicH2 {
    pub fn order(&self) -> u64 {
        self.fixed_points / self.norm_image
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

/// Second cohomology of a cyclic group, as invariants modulo norms.
///
/// Cyclic modules `Z/n` with `σ = ·u` are handled in closed form
/// (`M^G` has order `gcd(u-1, n)`, the norm image is the image of
/// multiplication by `1 + u + ... + u^{m-1}`), so field extensions of any
/// size are covered. Table modules are enumerated.
pub fn h2_cyclic(a: &CyclicGaloisAction) -> Result<CyclicH2> {
    if let Some((n, u)) = a.cyclic_parts() {
        let m = a.group_order();
        let fixed_points = gcd((u + n - 1) % n, n);
        let s = (0..m).fold(0u64, |acc, i| (acc + pow_mod(u, i, n)) % n);
        let norm_image = n / gcd(s, n);
        return Ok(CyclicH2 {
            fixed_points,
            norm_image,
        });
    }
    let elements = a.elements()?;
    let fixed_points = elements.clone().filter(|&x| a.act(1, x) == x).count() as u64;
    let mut image: Vec<u64> = elements.map(|x| a.norm(x)).collect();
    image.sort_unstable();
    image.dedup();
    Ok(CyclicH2 {
        fixed_points,
        norm_image: image.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Invariants and norms counted element by element.
    fn h2_by_enumeration(a: &CyclicGaloisAction) -> u64 {
        let xs: Vec<u64> = a.elements().unwrap().collect();
        let fixed = xs.iter().filter(|&&x| a.act(1, x) == x).count() as u64;
        let mut norms: Vec<u64> = xs
            .iter()
            .map(|&x| (0..a.group_order()).fold(0, |s, i| a.add(s, a.act(i, x))))
            .collect();
        norms.sort_unstable();
        norms.dedup();
        fixed / norms.len() as u64
    }

    #[test]
    fn rejects_bad_actions() {
        assert!(CyclicGaloisAction::cyclic(2, 4, 2).is_err());
        assert!(CyclicGaloisAction::cyclic(2, 7, 2).is_err());
        assert!(CyclicGaloisAction::cyclic(3, 7, 2).is_ok());
        assert!(CyclicGaloisAction::finite_field_units(6, 2).is_err());
        // σ = doubling on Z/4 is not injective
        let add: Vec<u32> = (0..16).map(|k| ((k / 4 + k % 4) % 4) as u32).collect();
        assert!(CyclicGaloisAction::from_tables(2, add, vec![0, 2, 0, 2]).is_err());
    }

    #[test]
    fn f9_over_f3_has_trivial_h2() {
        let a = CyclicGaloisAction::finite_field_units(3, 2).unwrap();
        assert_eq!(a.order(), 8);
        assert!(h2_cyclic(&a).unwrap().is_trivial());
        // the norm x ↦ x^4 hits all of F_3^* = {g^0, g^4}
        let norms: Vec<u64> = (0..8).map(|x| a.norm(x)).collect();
        assert!(norms.contains(&0) && norms.contains(&4));
    }

    #[test]
    fn trivial_action_gives_gcd() {
        for m in 1..=6 {
            for n in 1..=12 {
                let a = CyclicGaloisAction::cyclic(m, n, 1).unwrap();
                assert_eq!(h2_cyclic(&a).unwrap().order(), gcd(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for m in 1..=4u64 {
            for n in 1..=30u64 {
                for u in 0..n.max(1) {
                    if let Ok(a) = CyclicGaloisAction::cyclic(m, n, u) {
                        assert_eq!(h2_cyclic(&a).unwrap().order(), h2_by_enumeration(&a));
                        if m == 1 {
                            assert!(h2_cyclic(&a).unwrap().is_trivial());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_modules_agree_with_cyclic() {
        let c = CyclicGaloisAction::cyclic(2, 6, 5).unwrap();
        let add = (0..36).map(|k| c.add(k / 6, k % 6) as u32).collect();
        let sigma = (0..6).map(|x| c.act(1, x) as u32).collect();
        let t = CyclicGaloisAction::from_tables(2, add, sigma).unwrap();
        assert_eq!(h2_cyclic(&t).unwrap(), h2_cyclic(&c).unwrap());

        let klein = CyclicGaloisAction::cyclic(2, 2, 1)
            .unwrap()
            .direct_sum(&CyclicGaloisAction::cyclic(2, 2, 1).unwrap())
            .unwrap();
        assert_eq!(klein.order(), 4);
        assert_eq!(h2_cyclic(&klein).unwrap().order(), 4);
        assert_eq!(h2_by_enumeration(&klein), 4);
    }
}
