//! Oracles and random generators shared by the integration tests. Nothing
//! here calls into the library's arithmetic except to build inputs.

#![allow(dead_code)]

use perind::cocycle::double::{DoubleComplex, Matrix};
use perind::cocycle::CyclicGaloisAction;
use perind::models::{FibreComponent, SpecialFibre};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Local solvability of z² = ax² + by² by search

fn strip_squares(mut a: i64, p: i64) -> i64 {
    while a % (p * p) == 0 {
        a /= p * p;
    }
    a
}

/// `+1` if `z² = ax² + by²` has a primitive solution modulo `p^k`
/// (k = 4 for odd p, 8 for p = 2), else `-1`.
///
/// After removing square factors of `p` the coefficients have valuation at
/// most 1, and then a primitive solution at that precision always lifts
/// (Hensel's lemma with a partial derivative of valuation ≤ 1, resp. ≤ 2).
/// A primitive solution has a unit coordinate, which we scale to 1.
pub fn hensel_symbol(a: i64, b: i64, p: i64) -> i8 {
    let k = if p == 2 { 8 } else { 4 };
    let n = p.pow(k);
    let (a, b) = (strip_squares(a, p), strip_squares(b, p));
    let red = |x: i64| x.rem_euclid(n) as usize;
    let mut squares = vec![false; n as usize];
    let mut b_squares = vec![false; n as usize];
    for x in 0..n {
        squares[red(x * x)] = true;
        b_squares[red(b * (x * x % n))] = true;
    }
    let solvable = (0..n).any(|t| {
        let t2 = t * t % n;
        // z = 1:  b y² = 1 - a t²
        b_squares[red(1 - a * t2)]
            // x = 1:  z² = a + b t²
            || squares[red(a + b * t2)]
            // y = 1:  z² = b + a t²
            || squares[red(b + a * t2)]
    });
    if solvable {
        1
    } else {
        -1
    }
}

pub fn is_prime_naive(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

// ---------------------------------------------------------------------------
// Modules for the cyclic-group laboratory

/// `Z/m` acting on `F_p^r` (elements as base-p digit vectors) through every
/// invertible matrix of order dividing `m`.
pub fn elementary_abelian_actions(m: u64, p: u32, r: u32) -> Vec<CyclicGaloisAction> {
    let order = p.pow(r) as usize;
    let digits = |x: usize| {
        (0..r)
            .map(|i| (x / p.pow(i) as usize) % p as usize)
            .collect::<Vec<_>>()
    };
    let encode = |v: &[usize]| v.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d);
    let add: Vec<u32> = (0..order * order)
        .map(|xy| {
            let (x, y) = (digits(xy / order), digits(xy % order));
            let s: Vec<usize> = x
                .iter()
                .zip(&y)
                .map(|(a, b)| (a + b) % p as usize)
                .collect();
            encode(&s) as u32
        })
        .collect();
    let r = r as usize;
    let mut out = Vec::new();
    for code in 0..(p as usize).pow((r * r) as u32) {
        let mat: Vec<usize> = (0..r * r)
            .map(|i| (code / (p as usize).pow(i as u32)) % p as usize)
            .collect();
        let apply = |x: usize| {
            let v = digits(x);
            let w: Vec<usize> = (0..r)
                .map(|i| (0..r).map(|j| mat[i * r + j] * v[j]).sum::<usize>() % p as usize)
                .collect();
            encode(&w)
        };
        let sigma: Vec<u32> = (0..order).map(|x| apply(x) as u32).collect();
        let mut seen = sigma.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != order {
            continue;
        }
        let identity = (0..order).all(|x| {
            let mut y = x;
            for _ in 0..m {
                y = sigma[y] as usize;
            }
            y == x
        });
        if identity {
            out.push(CyclicGaloisAction::from_tables(m, add.clone(), sigma).expect("valid action"));
        }
    }
    out
}

/// Every `Z/m`-module of order at most 9 reachable as a cyclic module, an
/// elementary abelian module with arbitrary action, or `Z/2 ⊕ Z/4`.
pub fn small_modules(m: u64) -> Vec<CyclicGaloisAction> {
    let mut out = Vec::new();
    for n in 1..=9u64 {
        for u in 0..n.max(1) {
            if let Ok(a) = CyclicGaloisAction::cyclic(m, n, u) {
                out.push(a);
            }
        }
    }
    out.extend(elementary_abelian_actions(m, 2, 2));
    out.extend(elementary_abelian_actions(m, 2, 3));
    out.extend(elementary_abelian_actions(m, 3, 2));
    for u in [1, 3] {
        if let (Ok(x), Ok(y)) = (
            CyclicGaloisAction::cyclic(m, 2, 1),
            CyclicGaloisAction::cyclic(m, 4, u),
        ) {
            out.push(x.direct_sum(&y).expect("small direct sum"));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Random double complexes over F_p

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

fn zeros(r: usize, c: usize) -> Matrix {
    vec![vec![0; c]; r]
}

fn mul(a: &Matrix, b: &Matrix, inner: usize, cols: usize, p: u64) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum::<u64>() % p)
                .collect()
        })
        .collect()
}

fn inv_mod(x: u64, p: u64) -> u64 {
    (1..p).find(|y| x * y % p == 1).expect("unit")
}

/// A random invertible `n×n` matrix together with its inverse, built from
/// elementary operations.
pub fn random_invertible(rng: &mut TestRng, n: usize, p: u64) -> (Matrix, Matrix) {
    let (mut g, mut inv) = (identity(n), identity(n));
    if n == 0 {
        return (g, inv);
    }
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        match rng.gen_range(0..3) {
            0 if i != j => {
                let c = rng.gen_range(1..p);
                let src = g[j].clone();
                for (x, y) in g[i].iter_mut().zip(src) {
                    *x = (*x + c * y) % p;
                }
                for row in inv.iter_mut() {
                    row[j] = (row[j] + (p - c) * row[i]) % p;
                }
            }
            1 => {
                let s = rng.gen_range(1..p);
                let t = inv_mod(s, p);
                for x in g[i].iter_mut() {
                    *x = *x * s % p;
                }
                for row in inv.iter_mut() {
                    row[i] = row[i] * t % p;
                }
            }
            _ => {
                g.swap(i, j);
                for row in inv.iter_mut() {
                    row.swap(i, j);
                }
            }
        }
    }
    (g, inv)
}

/// A double complex with commuting differentials, on a `3 × 3` grid.
#[derive(Clone, Debug)]
pub struct Commuting {
    pub ranks: Vec<Vec<usize>>,
    pub horizontal: Vec<Vec<Matrix>>,
    pub vertical: Vec<Vec<Matrix>>,
}

const COLS: usize = 3;
const ROWS: usize = 3;

impl Commuting {
    fn empty() -> Self {
        Self {
            ranks: vec![vec![0; ROWS]; COLS],
            horizontal: vec![vec![vec![]; ROWS]; COLS - 1],
            vertical: vec![vec![vec![]; ROWS - 1]; COLS],
        }
    }

    fn fill_zero_maps(&mut self) {
        for p in 0..COLS {
            for q in 0..ROWS {
                if p + 1 < COLS && self.horizontal[p][q].len() != self.ranks[p + 1][q] {
                    self.horizontal[p][q] = zeros(self.ranks[p + 1][q], self.ranks[p][q]);
                }
                if q + 1 < ROWS && self.vertical[p][q].len() != self.ranks[p][q + 1] {
                    self.vertical[p][q] = zeros(self.ranks[p][q + 1], self.ranks[p][q]);
                }
            }
        }
    }

    fn block_sum(a: &Matrix, ar: usize, ac: usize, b: &Matrix, br: usize, bc: usize) -> Matrix {
        let mut out = zeros(ar + br, ac + bc);
        for i in 0..ar {
            for j in 0..ac {
                out[i][j] = a[i][j];
            }
        }
        for i in 0..br {
            for j in 0..bc {
                out[ar + i][ac + j] = b[i][j];
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::empty();
        for p in 0..COLS {
            for q in 0..ROWS {
                out.ranks[p][q] = self.ranks[p][q] + other.ranks[p][q];
                if p + 1 < COLS {
                    out.horizontal[p][q] = Self::block_sum(
                        &self.horizontal[p][q],
                        self.ranks[p + 1][q],
                        self.ranks[p][q],
                        &other.horizontal[p][q],
                        other.ranks[p + 1][q],
                        other.ranks[p][q],
                    );
                }
                if q + 1 < ROWS {
                    out.vertical[p][q] = Self::block_sum(
                        &self.vertical[p][q],
                        self.ranks[p][q + 1],
                        self.ranks[p][q],
                        &other.vertical[p][q],
                        other.ranks[p][q + 1],
                        other.ranks[p][q],
                    );
                }
            }
        }
        out
    }

    /// Tensor product of a horizontal and a vertical complex of length 3.
    pub fn tensor(h: &Complex, v: &Complex, p: u64) -> Self {
        let mut out = Self::empty();
        for i in 0..COLS {
            for j in 0..ROWS {
                out.ranks[i][j] = h.ranks[i] * v.ranks[j];
            }
        }
        for i in 0..COLS {
            for j in 0..ROWS {
                let (hr, vr) = (h.ranks[i], v.ranks[j]);
                if i + 1 < COLS {
                    let hn = h.ranks[i + 1];
                    let mut m = zeros(hn * vr, hr * vr);
                    for a in 0..hn {
                        for b in 0..hr {
                            for k in 0..vr {
                                m[a * vr + k][b * vr + k] = h.d[i][a][b] % p;
                            }
                        }
                    }
                    out.horizontal[i][j] = m;
                }
                if j + 1 < ROWS {
                    let vn = v.ranks[j + 1];
                    let mut m = zeros(hr * vn, hr * vr);
                    for k in 0..hr {
                        for a in 0..vn {
                            for b in 0..vr {
                                m[k * vn + a][k * vr + b] = v.d[j][a][b] % p;
                            }
                        }
                    }
                    out.vertical[i][j] = m;
                }
            }
        }
        out
    }

    /// `x ∈ C^{0,1}` with `d'x = d_v y` for `y ∈ C^{1,0}`, and `d_v y`
    /// mapping nontrivially to `C^{2,0}`: a nonzero `d₂`.
    pub fn staircase(rng: &mut TestRng, p: u64) -> Self {
        let mut out = Self::empty();
        for (i, j) in [(0, 1), (1, 1), (1, 0), (2, 0)] {
            out.ranks[i][j] = 1;
        }
        out.fill_zero_maps();
        out.horizontal[0][1] = vec![vec![rng.gen_range(1..p)]];
        out.horizontal[1][0] = vec![vec![rng.gen_range(1..p)]];
        out.vertical[1][0] = vec![vec![rng.gen_range(1..p)]];
        out
    }

    /// Replace every differential by `g_target · d · g_source⁻¹`.
    pub fn conjugate(&self, rng: &mut TestRng, p: u64) -> Self {
        let gs: Vec<Vec<(Matrix, Matrix)>> = (0..COLS)
            .map(|i| {
                (0..ROWS)
                    .map(|j| random_invertible(rng, self.ranks[i][j], p))
                    .collect()
            })
            .collect();
        let mut out = self.clone();
        for i in 0..COLS {
            for j in 0..ROWS {
                let src = self.ranks[i][j];
                if i + 1 < COLS {
                    let tgt = self.ranks[i + 1][j];
                    let m = mul(&self.horizontal[i][j], &gs[i][j].1, src, src, p);
                    out.horizontal[i][j] = mul(&gs[i + 1][j].0, &m, tgt, src, p);
                }
                if j + 1 < ROWS {
                    let tgt = self.ranks[i][j + 1];
                    let m = mul(&self.vertical[i][j], &gs[i][j].1, src, src, p);
                    out.vertical[i][j] = mul(&gs[i][j + 1].0, &m, tgt, src, p);
                }
            }
        }
        out
    }

    pub fn build(self, p: u64) -> DoubleComplex {
        DoubleComplex::from_commuting(p, self.ranks, self.horizontal, self.vertical)
            .expect("generator produces valid complexes")
    }
}

/// A cochain complex in degrees 0, 1, 2 over `F_p`.
#[derive(Clone, Debug)]
pub struct Complex {
    pub ranks: [usize; 3],
    pub d: [Matrix; 2],
}

/// Random complex: a direct sum of one-dimensional cohomology pieces and
/// acyclic pairs, conjugated by random invertible matrices.
pub fn random_complex(rng: &mut TestRng, p: u64) -> Complex {
    let mut ranks = [0usize; 3];
    for r in ranks.iter_mut() {
        *r += rng.gen_range(0..=1);
    }
    // each acyclic pair adds a fresh source in degree k and target in k+1
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let k = rng.gen_range(0..2);
        edges.push((k, ranks[k], ranks[k + 1]));
        ranks[k] += 1;
        ranks[k + 1] += 1;
    }
    let mut d = [zeros(ranks[1], ranks[0]), zeros(ranks[2], ranks[1])];
    for (k, s, t) in edges {
        d[k][t][s] = rng.gen_range(1..p);
    }
    let gs: Vec<(Matrix, Matrix)> = ranks
        .iter()
        .map(|&r| random_invertible(rng, r, p))
        .collect();
    for k in 0..2 {
        let m = mul(&d[k], &gs[k].1, ranks[k], ranks[k], p);
        d[k] = mul(&gs[k + 1].0, &m, ranks[k + 1], ranks[k], p);
    }
    Complex { ranks, d }
}

/// A random double complex over `F_p`, `p ∈ {2, 3, 5}`, with `C^{1,0}` and
/// `C^{0,1}` small enough for exhaustive search.
pub fn random_double_complex(rng: &mut TestRng) -> DoubleComplex {
    loop {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let mut c = Commuting::empty();
        c.fill_zero_maps();
        for _ in 0..rng.gen_range(1..=2) {
            let t = Commuting::tensor(&random_complex(rng, p), &random_complex(rng, p), p);
            c = c.direct_sum(&t);
        }
        for _ in 0..rng.gen_range(0..=2) {
            c = c.direct_sum(&Commuting::staircase(rng, p));
        }
        let limit = if p == 5 { 4 } else { 6 };
        if c.ranks[1][0] <= limit
            && c.ranks[0][1] <= limit
            && c.ranks.iter().flatten().sum::<usize>() > 0
        {
            return c.conjugate(rng, p).build(p);
        }
    }
}

// ---------------------------------------------------------------------------
// Random special fibres

pub fn random_fibre(rng: &mut TestRng) -> SpecialFibre<i64> {
    let k = rng.gen_range(1..=6);
    let components = (0..k)
        .map(|i| {
            FibreComponent::new(
                format!("C{i}"),
                rng.gen_range(1..=24),
                rng.gen_range(1..=24),
            )
            .expect("positive")
        })
        .collect();
    SpecialFibre::new(components, None).expect("nonempty")
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
