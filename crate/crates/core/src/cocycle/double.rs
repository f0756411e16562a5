//! Finite double complexes of `Z/N`-modules and the `d₂` differential of
//! the associated spectral sequence (cohomology in `d''` first, then `d'`).

use super::module::ENUMERATION_LIMIT;
use crate::error::{Error, Result};

/// Row-major matrix over `Z/N`; `rows` = rank of the target.
pub type Matrix = Vec<Vec<u64>>;

/// A double complex with `C^{p,q} = (Z/N)^{rank(p,q)}` for
/// `0 <= p < columns`, `0 <= q < rows`, horizontal `d': C^{p,q} → C^{p+1,q}`
/// and vertical `d'': C^{p,q} → C^{p,q+1}`, with `d'² = d''² = 0` and
/// `d'd'' + d''d' = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleComplex {
    modulus: u64,
    ranks: Vec<Vec<usize>>,
    horizontal: Vec<Vec<Matrix>>,
    vertical: Vec<Vec<Matrix>>,
}

/// A class on the `E₂` page at `(2, 0)`, kept as the smallest element of
/// its coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct E2Class {
    pub representative: Vec<u64>,
}

impl E2Class {
    pub fn is_zero(&self) -> bool {
        self.representative.iter().all(|&c| c == 0)
    }
}

fn apply(m: &Matrix, x: &[u64], modulus: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(0u64, |acc, (&a, &b)| (acc + a * b) % modulus)
        })
        .collect()
}

fn compose(outer: &Matrix, inner: &Matrix, inner_cols: usize, modulus: u64) -> Matrix {
    outer
        .iter()
        .map(|row| {
            (0..inner_cols)
                .map(|j| {
                    row.iter()
                        .enumerate()
                        .fold(0u64, |acc, (k, &a)| (acc + a * inner[k][j]) % modulus)
                })
                .collect()
        })
        .collect()
}

fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().flatten().all(|&a| a == 0)
}

fn add_matrices(a: &Matrix, b: &Matrix, modulus: u64) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(&x, &y)| (x + y) % modulus).collect())
        .collect()
}

impl DoubleComplex {
    /// `horizontal[p][q]` is `d'` out of `C^{p,q}` (for `p + 1 < columns`),
    /// `vertical[p][q]` is `d''` out of `C^{p,q}` (for `q + 1 < rows`).
    pub fn new(
        modulus: u64,
        ranks: Vec<Vec<usize>>,
        horizontal: Vec<Vec<Matrix>>,
        vertical: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let dc = Self {
            modulus,
            ranks,
            horizontal,
            vertical,
        };
        dc.validate()?;
        Ok(dc)
    }

    /// Builds from commuting horizontal and vertical differentials, using
    /// `d'' = (-1)^p d_v` so that the two anticommute.
    pub fn from_commuting(
        modulus: u64,
        ranks: Vec<Vec<usize>>,
        horizontal: Vec<Vec<Matrix>>,
        vertical: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let signed = vertical
            .into_iter()
            .enumerate()
            .map(|(p, col)| {
                col.into_iter()
                    .map(|m| {
                        if p % 2 == 0 {
                            m
                        } else {
                            m.into_iter()
                                .map(|row| {
                                    row.into_iter()
                                        .map(|a| (modulus - a % modulus) % modulus)
                                        .collect()
                                })
                                .collect()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(modulus, ranks, horizontal, signed)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn columns(&self) -> usize {
        self.ranks.len()
    }

    pub fn rows(&self) -> usize {
        self.ranks.first().map_or(0, Vec::len)
    }

    pub fn rank(&self, p: usize, q: usize) -> usize {
        self.ranks[p][q]
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidComplex(msg));
        let (cols, rows, n) = (self.columns(), self.rows(), self.modulus);
        if n < 2 || cols == 0 || rows == 0 || self.ranks.iter().any(|c| c.len() != rows) {
            return bad("grid must be rectangular and nonempty over Z/N with N >= 2".into());
        }
        let shape_ok = |m: &Matrix, r: usize, c: usize| {
            m.len() == r
                && m.iter()
                    .all(|row| row.len() == c && row.iter().all(|&a| a < n))
        };
        if self.horizontal.len() != cols - 1 || self.vertical.len() != cols {
            return bad("wrong number of differential columns".into());
        }
        for p in 0..cols {
            for q in 0..rows {
                if p + 1 < cols
                    && !shape_ok(
                        self.horizontal[p].get(q).unwrap_or(&vec![vec![]]),
                        self.rank(p + 1, q),
                        self.rank(p, q),
                    )
                {
                    return bad(format!("d' out of ({p},{q}) has the wrong shape"));
                }
                if q + 1 < rows
                    && !shape_ok(
                        self.vertical[p].get(q).unwrap_or(&vec![vec![]]),
                        self.rank(p, q + 1),
                        self.rank(p, q),
                    )
                {
                    return bad(format!("d'' out of ({p},{q}) has the wrong shape"));
                }
            }
        }
        for p in 0..cols {
            for q in 0..rows {
                let src = self.rank(p, q);
                if p + 2 < cols
                    && !is_zero_matrix(&compose(
                        &self.horizontal[p + 1][q],
                        &self.horizontal[p][q],
                        src,
                        n,
                    ))
                {
                    return bad(format!("d'd' ≠ 0 at ({p},{q})"));
                }
                if q + 2 < rows
                    && !is_zero_matrix(&compose(
                        &self.vertical[p][q + 1],
                        &self.vertical[p][q],
                        src,
                        n,
                    ))
                {
                    return bad(format!("d''d'' ≠ 0 at ({p},{q})"));
                }
                if p + 1 < cols && q + 1 < rows {
                    let a = compose(&self.vertical[p + 1][q], &self.horizontal[p][q], src, n);
                    let b = compose(&self.horizontal[p][q + 1], &self.vertical[p][q], src, n);
                    if !is_zero_matrix(&add_matrices(&a, &b, n)) {
                        return bad(format!("d' and d'' do not anticommute at ({p},{q})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `d'` applied to `x ∈ C^{p,q}`; zero past the last column.
    pub fn d_horizontal(&self, p: usize, q: usize, x: &[u64]) -> Vec<u64> {
        if p + 1 < self.columns() {
            apply(&self.horizontal[p][q], x, self.modulus)
        } else {
            Vec::new()
        }
    }

    /// `d''` applied to `x ∈ C^{p,q}`; zero past the last row.
    pub fn d_vertical(&self, p: usize, q: usize, x: &[u64]) -> Vec<u64> {
        if q + 1 < self.rows() {
            apply(&self.vertical[p][q], x, self.modulus)
        } else {
            Vec::new()
        }
    }

    /// Total differential `d = d' + d''` on `Tot^n`, whose elements are
    /// given as one vector per `(p, n - p)` in the grid, in increasing `p`.
    pub fn total_differential(&self, n: usize, x: &[(usize, Vec<u64>)]) -> Vec<(usize, Vec<u64>)> {
        let m = self.modulus;
        let mut out: Vec<(usize, Vec<u64>)> = self
            .total_positions(n + 1)
            .into_iter()
            .map(|p| (p, vec![0; self.rank(p, n + 1 - p)]))
            .collect();
        let mut accumulate = |p: usize, v: Vec<u64>| {
            if let Some((_, slot)) = out.iter_mut().find(|(pp, _)| *pp == p) {
                for (s, a) in slot.iter_mut().zip(v) {
                    *s = (*s + a) % m;
                }
            }
        };
        for (p, v) in x {
            let q = n - p;
            if p + 1 < self.columns() {
                accumulate(p + 1, self.d_horizontal(*p, q, v));
            }
            if q + 1 < self.rows() {
                accumulate(*p, self.d_vertical(*p, q, v));
            }
        }
        out
    }

    /// Values of `p` with `(p, n - p)` inside the grid.
    pub fn total_positions(&self, n: usize) -> Vec<usize> {
        (0..self.columns())
            .filter(|&p| p <= n && n - p < self.rows())
            .collect()
    }

    fn all_vectors(&self, rank: usize) -> Result<impl Iterator<Item = Vec<u64>>> {
        let m = self.modulus;
        let total = u32::try_from(rank)
            .ok()
            .and_then(|r| m.checked_pow(r))
            .filter(|t| *t <= ENUMERATION_LIMIT)
            .ok_or(Error::TooLarge(u64::MAX))?;
        Ok((0..total).map(move |mut code| {
            (0..rank)
                .map(|_| {
                    let d = code % m;
                    code /= m;
                    d
                })
                .collect()
        }))
    }

    fn check_d2_grid(&self) -> Result<()> {
        if self.columns() < 3 || self.rows() < 2 {
            return Err(Error::InvalidComplex(
                "d2 from (0,1) to (2,0) needs at least 3 columns and 2 rows".into(),
            ));
        }
        Ok(())
    }

    /// Every `y ∈ C^{1,0}` with `d''(y) = d'(x)`, found by exhaustive search.
    pub fn witnesses(&self, x: &[u64]) -> Result<Vec<Vec<u64>>> {
        self.check_d2_grid()?;
        if x.len() != self.rank(0, 1) || x.iter().any(|&c| c >= self.modulus) {
            return Err(Error::InvalidArgument(
                "x is not an element of C^{0,1}".into(),
            ));
        }
        let target = self.d_horizontal(0, 1, x);
        Ok(self
            .all_vectors(self.rank(1, 0))?
            .filter(|y| self.d_vertical(1, 0, y) == target)
            .collect())
    }

    /// Class of `z ∈ C^{2,0}` on the `E₂` page: `z` modulo
    /// `d'(ker d'' on C^{1,0})`.
    pub fn e2_class(&self, z: &[u64]) -> Result<E2Class> {
        self.check_d2_grid()?;
        let m = self.modulus;
        let zero = vec![0; self.rank(1, 1)];
        let boundaries: Vec<Vec<u64>> = self
            .all_vectors(self.rank(1, 0))?
            .filter(|w| self.d_vertical(1, 0, w) == zero)
            .map(|w| self.d_horizontal(1, 0, &w))
            .collect();
        let representative = boundaries
            .iter()
            .map(|b| {
                z.iter()
                    .zip(b)
                    .map(|(&a, &c)| (a + c) % m)
                    .collect::<Vec<u64>>()
            })
            .min()
            .unwrap_or_else(|| z.to_vec());
        Ok(E2Class { representative })
    }

    /// `d₂^{0,1}[x] = [-d'(y)]` where `d'(x) = d''(y)`.
    pub fn total_complex_d2(&self, x: &[u64]) -> Result<E2Class> {
        self.check_d2_grid()?;
        let m = self.modulus;
        if self.rows() > 2 && self.d_vertical(0, 1, x).iter().any(|&c| c != 0) {
            return Err(Error::NotVerticalCocycle);
        }
        let y = self
            .witnesses(x)?
            .into_iter()
            .next()
            .ok_or(Error::NotVerticalBoundary)?;
        let z: Vec<u64> = self
            .d_horizontal(1, 0, &y)
            .into_iter()
            .map(|a| (m - a) % m)
            .collect();
        self.e2_class(&z)
    }
}
