use super::cochain::{coboundary, is_cocycle, OneCochain, TwoCochain};
use super::field::FiniteField;
use super::module::{CyclicGaloisAction, ENUMERATION_LIMIT};
use crate::error::{Error, Result};

/// `u · x_{σ^i}`: a module element times a basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coefficient: u64,
    pub exponent: u64,
}

impl Monomial {
    pub fn basis(i: u64) -> Self {
        Self {
            coefficient: 0,
            exponent: i,
        }
    }
}

/// Multiplication of monomials in the crossed product `⊕ M·x_σ`:
/// `(u x_σ)(v x_τ) = u σ(v) c(σ,τ) x_{στ}`, written additively in `M`.
#[derive(Debug, Clone)]
pub struct CrossedProductTable {
    action: CyclicGaloisAction,
    cocycle: TwoCochain,
}

impl CrossedProductTable {
    fn unchecked(action: &CyclicGaloisAction, cocycle: &TwoCochain) -> Self {
        Self {
            action: action.clone(),
            cocycle: cocycle.clone(),
        }
    }

    pub fn action(&self) -> &CyclicGaloisAction {
        &self.action
    }

    pub fn cocycle(&self) -> &TwoCochain {
        &self.cocycle
    }

    pub fn identity(&self) -> Monomial {
        Monomial::basis(0)
    }

    pub fn multiply(&self, x: Monomial, y: Monomial) -> Monomial {
        let a = &self.action;
        let m = a.group_order();
        let coefficient = a.add(
            a.add(x.coefficient, a.act(x.exponent, y.coefficient)),
            self.cocycle.get(x.exponent, y.exponent),
        );
        Monomial {
            coefficient,
            exponent: (x.exponent + y.exponent) % m,
        }
    }

    /// Row `i`, column `j` holds `x_{σ^i} x_{σ^j}`.
    pub fn basis_table(&self) -> Vec<Vec<Monomial>> {
        let m = self.action.group_order();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| self.multiply(Monomial::basis(i), Monomial::basis(j)))
                    .collect()
            })
            .collect()
    }

    /// Associativity on all triples of basis vectors `x_σ`.
    pub fn is_associative_on_basis(&self) -> bool {
        let m = self.action.group_order();
        let b = Monomial::basis;
        (0..m).all(|i| {
            (0..m).all(|j| {
                (0..m).all(|k| {
                    self.multiply(self.multiply(b(i), b(j)), b(k))
                        == self.multiply(b(i), self.multiply(b(j), b(k)))
                })
            })
        })
    }

    fn monomials(&self) -> Result<Vec<Monomial>> {
        let a = &self.action;
        let total = a.order().saturating_mul(a.group_order());
        if total > 1 << 10 {
            return Err(Error::TooLarge(total));
        }
        Ok(a.elements()?
            .flat_map(|u| {
                (0..a.group_order()).map(move |i| Monomial {
                    coefficient: u,
                    exponent: i,
                })
            })
            .collect())
    }

    /// Associativity on all triples of monomials `u x_σ`.
    pub fn is_associative_on_monomials(&self) -> Result<bool> {
        let all = self.monomials()?;
        Ok(all.iter().all(|&x| {
            all.iter().all(|&y| {
                all.iter().all(|&z| {
                    self.multiply(self.multiply(x, y), z) == self.multiply(x, self.multiply(y, z))
                })
            })
        }))
    }

    /// Checks that `x_σ ↦ f_σ x_σ`, i.e. `u x_σ ↦ (u + f_σ) x_σ`, is a
    /// multiplicative isomorphism from `self` onto `base`. Holds exactly when
    /// `self` was built from `base`'s cocycle plus `df`.
    pub fn is_rescaling_of(&self, base: &Self, f: &OneCochain) -> Result<bool> {
        let a = &self.action;
        if a != &base.action {
            return Ok(false);
        }
        let psi = |x: Monomial| Monomial {
            coefficient: a.add(x.coefficient, f.get(x.exponent)),
            exponent: x.exponent,
        };
        let all = self.monomials()?;
        Ok(all.iter().all(|&x| {
            all.iter()
                .all(|&y| psi(self.multiply(x, y)) == base.multiply(psi(x), psi(y)))
        }))
    }
}

/// The crossed product of a normalized 2-cocycle.
pub fn crossed_product(a: &CyclicGaloisAction, c: &TwoCochain) -> Result<CrossedProductTable> {
    if !is_cocycle(a, c)? {
        return Err(Error::NotACocycle);
    }
    if !c.is_normalized() {
        return Err(Error::NotNormalized);
    }
    Ok(CrossedProductTable::unchecked(a, c))
}

/// Self-test: the table built from `c` is associative on basis triples
/// exactly when `c` satisfies the cocycle condition.
pub fn associativity_iff_cocycle(a: &CyclicGaloisAction, c: &TwoCochain) -> Result<bool> {
    let cocycle = is_cocycle(a, c)?;
    let associative = CrossedProductTable::unchecked(a, c).is_associative_on_basis();
    Ok(cocycle == associative)
}

/// The full crossed-product algebra `⊕ F_{q^m} x_σ` over `F_q` for a
/// normalized cocycle with values in `F_{q^m}^*` (given as exponents of
/// the field's primitive element). Elements are coefficient vectors.
#[derive(Debug, Clone)]
pub struct FieldCrossedProduct {
    field: FiniteField,
    q: u64,
    m: u64,
    cocycle: TwoCochain,
}

impl FieldCrossedProduct {
    pub fn new(q: u64, m: u32, c: &TwoCochain) -> Result<Self> {
        let units = CyclicGaloisAction::finite_field_units(q, m as u64)?;
        crossed_product(&units, c)?;
        Ok(Self {
            field: FiniteField::with_size(q, m)?,
            q,
            m: m as u64,
            cocycle: c.clone(),
        })
    }

    /// Algebra built from `df` for a 1-cochain of exponents.
    pub fn from_coboundary(q: u64, m: u32, f: &OneCochain) -> Result<Self> {
        let units = CyclicGaloisAction::finite_field_units(q, m as u64)?;
        Self::new(q, m, &coboundary(&units, f)?)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dimension_over_base(&self) -> u64 {
        self.m * self.m
    }

    fn frobenius_power(&self, i: u64, x: u64) -> u64 {
        self.field.pow(x, self.q.pow(i as u32))
    }

    /// `a x_{σ^i}` as a coefficient vector.
    pub fn monomial(&self, a: u64, i: u64) -> Vec<u64> {
        let mut v = vec![0; self.m as usize];
        v[(i % self.m) as usize] = a;
        v
    }

    pub fn multiply(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let m = self.m;
        let mut out = vec![0; m as usize];
        for i in 0..m {
            if x[i as usize] == 0 {
                continue;
            }
            for j in 0..m {
                if y[j as usize] == 0 {
                    continue;
                }
                let twist = f.from_exponent(self.cocycle.get(i, j));
                let term = f.mul(
                    f.mul(x[i as usize], self.frobenius_power(i, y[j as usize])),
                    twist,
                );
                let k = ((i + j) % m) as usize;
                out[k] = f.add(out[k], term);
            }
        }
        out
    }

    fn all_elements(&self) -> Result<impl Iterator<Item = Vec<u64>> + '_> {
        let s = self.field.size();
        let total = u32::try_from(self.m)
            .ok()
            .and_then(|m| s.checked_pow(m))
            .filter(|t| *t <= ENUMERATION_LIMIT)
            .ok_or(Error::TooLarge(u64::MAX))?;
        Ok((0..total).map(move |mut code| {
            (0..self.m)
                .map(|_| {
                    let d = code % s;
                    code /= s;
                    d
                })
                .collect()
        }))
    }

    /// Elements commuting with `g·x_1` and `x_σ`, which generate the algebra.
    pub fn center(&self) -> Result<Vec<Vec<u64>>> {
        let gens = [
            self.monomial(self.field.generator(), 0),
            self.monomial(1, 1),
        ];
        Ok(self
            .all_elements()?
            .filter(|z| {
                gens.iter()
                    .all(|g| self.multiply(z, g) == self.multiply(g, z))
            })
            .collect())
    }

    /// A nonzero `z` with `z² = 0`; division algebras have none.
    pub fn find_square_zero(&self) -> Result<Option<Vec<u64>>> {
        let zero = vec![0; self.m as usize];
        Ok(self
            .all_elements()?
            .find(|z| *z != zero && self.multiply(z, z) == zero))
    }

    /// Associativity on triples `(g^s x_σ)` with `s ∈ {0, 1}`; by
    /// bilinearity these span all products.
    pub fn is_associative_on_generators(&self) -> bool {
        let g = self.field.generator();
        let gens: Vec<Vec<u64>> = (0..self.m)
            .flat_map(|i| [self.monomial(1, i), self.monomial(g, i)])
            .collect();
        gens.iter().all(|x| {
            gens.iter().all(|y| {
                gens.iter().all(|z| {
                    self.multiply(&self.multiply(x, y), z) == self.multiply(x, &self.multiply(y, z))
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::cochain::all_two_cochains;

    #[test]
    fn quaternion_sign_pattern() {
        // {±1} as Z/2, trivial action, x_σ² = −1
        let a = CyclicGaloisAction::cyclic(2, 2, 1).unwrap();
        let c = TwoCochain::from_rows(&a, vec![vec![0, 0], vec![0, 1]]).unwrap();
        let t = crossed_product(&a, &c).unwrap();
        let table = t.basis_table();
        assert_eq!(table[0][0], Monomial::basis(0));
        assert_eq!(table[0][1], Monomial::basis(1));
        assert_eq!(table[1][0], Monomial::basis(1));
        assert_eq!(
            table[1][1],
            Monomial {
                coefficient: 1,
                exponent: 0
            }
        );
        assert!(t.is_associative_on_monomials().unwrap());
    }

    #[test]
    fn rejects_non_cocycles_and_unnormalized() {
        let a = CyclicGaloisAction::cyclic(2, 4, 3).unwrap();
        let bad = TwoCochain::from_rows(&a, vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(crossed_product(&a, &bad).unwrap_err(), Error::NotACocycle);
        let f = OneCochain::new(&a, vec![1, 0]).unwrap();
        let unnormalized = coboundary(&a, &f).unwrap();
        assert_eq!(
            crossed_product(&a, &unnormalized).unwrap_err(),
            Error::NotNormalized
        );
    }

    #[test]
    fn associativity_matches_cocycle_condition_on_z4() {
        let a = CyclicGaloisAction::cyclic(2, 4, 3).unwrap();
        let mut cocycles = 0;
        for c in all_two_cochains(&a).unwrap() {
            assert!(associativity_iff_cocycle(&a, &c).unwrap());
            cocycles += usize::from(is_cocycle(&a, &c).unwrap());
        }
        assert!(cocycles > 0 && cocycles < 256);
    }

    #[test]
    fn cohomologous_tables_are_rescalings() {
        let a = CyclicGaloisAction::cyclic(2, 4, 3).unwrap();
        let c = TwoCochain::from_rows(&a, vec![vec![0, 0], vec![0, 2]]).unwrap();
        let base = crossed_product(&a, &c).unwrap();
        for fs in 0..4 {
            let f = OneCochain::new(&a, vec![0, fs]).unwrap();
            let shifted = c.add(&a, &coboundary(&a, &f).unwrap());
            let other = crossed_product(&a, &shifted).unwrap();
            assert!(other.is_rescaling_of(&base, &f).unwrap());
        }
        let f = OneCochain::new(&a, vec![0, 1]).unwrap();
        let wrong = OneCochain::new(&a, vec![1, 0]).unwrap();
        let other = crossed_product(&a, &c.add(&a, &coboundary(&a, &f).unwrap())).unwrap();
        assert!(!other.is_rescaling_of(&base, &wrong).unwrap());
    }

    #[test]
    fn trivial_crossed_product_is_a_matrix_algebra() {
        for (q, m) in [(2u64, 2u32), (3, 2), (2, 3)] {
            let units = CyclicGaloisAction::finite_field_units(q, m as u64).unwrap();
            let alg = FieldCrossedProduct::new(q, m, &TwoCochain::zero(&units)).unwrap();
            assert!(alg.is_associative_on_generators());
            let center = alg.center().unwrap();
            assert_eq!(center.len() as u64, q);
            for z in &center {
                let a = z[0];
                assert!(z[1..].iter().all(|&c| c == 0));
                assert_eq!(alg.field().pow(a, q), a);
            }
            assert!(alg.find_square_zero().unwrap().is_some());
        }
    }

    #[test]
    fn coboundary_algebras_split_too() {
        let alg = FieldCrossedProduct::from_coboundary(
            3,
            2,
            &OneCochain::new(
                &CyclicGaloisAction::finite_field_units(3, 2).unwrap(),
                vec![0, 1],
            )
            .unwrap(),
        )
        .unwrap();
        assert!(alg.is_associative_on_generators());
        assert_eq!(alg.center().unwrap().len(), 3);
        assert!(alg.find_square_zero().unwrap().is_some());
    }
}
