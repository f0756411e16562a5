//! Index of a curve over a p-adic field read off the special fibre of a
//! regular model, and the circle-gluing degeneration.

use std::collections::{BTreeMap, BTreeSet};

use crate::arith;
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// An irreducible component of the reduced special fibre: multiplicity `e`
/// and degree `f` of its field of constants over the residue field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FibreComponent<Z> {
    pub label: String,
    pub e: Z,
    pub f: Z,
}

impl<Z: ExactInt> FibreComponent<Z> {
    pub fn new(label: impl Into<String>, e: Z, f: Z) -> Result<Self> {
        if !e.is_positive() || !f.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "component multiplicity and constant-field degree must be positive, got e={e}, f={f}"
            )));
        }
        Ok(Self {
            label: label.into(),
            e,
            f,
        })
    }
}

/// Component data of a special fibre, optionally with its dual graph over
/// the algebraic closure (vertices are geometric components, one edge per
/// node).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFibre<Z> {
    components: Vec<FibreComponent<Z>>,
    dual_graph: Option<Vec<(String, String)>>,
}

impl<Z: ExactInt> SpecialFibre<Z> {
    pub fn new(
        components: Vec<FibreComponent<Z>>,
        dual_graph: Option<Vec<(String, String)>>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyFibre);
        }
        if let Some(edges) = &dual_graph {
            if !is_connected(edges) {
                return Err(Error::DisconnectedDualGraph);
            }
        }
        Ok(Self {
            components,
            dual_graph,
        })
    }

    pub fn components(&self) -> &[FibreComponent<Z>] {
        &self.components
    }

    pub fn dual_graph(&self) -> Option<&[(String, String)]> {
        self.dual_graph.as_deref()
    }
}

fn is_connected(edges: &[(String, String)]) -> bool {
    let mut adjacency: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (a, b) in edges {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    let Some(&start) = adjacency.keys().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == adjacency.len()
}

/// `gcd(e·f)` over the components.
pub fn index_from_model<Z: ExactInt>(fb: &SpecialFibre<Z>) -> Z {
    fb.components
        .iter()
        .fold(Z::zero(), |acc, c| acc.gcd(&(c.e.clone() * c.f.clone())))
}

/// Whether the index is not a power of `p`, which rules out a section over
/// the completion when the genus is positive.
pub fn obstructs_section<Z: ExactInt>(fb: &SpecialFibre<Z>, p: &Z) -> Result<bool> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(arith::prime_power_exponent(&index_from_model(fb), p).is_none())
}

/// Glue `C ⊗ k_n` to itself at two non-conjugate `k_n`-points via
/// Frobenius, where `k` has `q` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec<Z> {
    pub n: Z,
    pub q: Z,
    pub genus_c: Z,
    /// `Aut(C) = 1` is needed to deform without enlarging the residue field;
    /// it is recorded, never checked.
    pub automorphism_free_assumed: bool,
}

impl<Z: ExactInt> GluingSpec<Z> {
    pub fn new(n: Z, q: Z, genus_c: Z) -> Result<Self> {
        if n < Z::from(2) {
            return Err(Error::InvalidArgument(format!(
                "circle length must be at least 2, got {n}"
            )));
        }
        if arith::as_prime_power(&q).is_none() {
            return Err(Error::NotPrimePower(q.to_string()));
        }
        if genus_c.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "genus must be non-negative, got {genus_c}"
            )));
        }
        Ok(Self {
            n,
            q,
            genus_c,
            automorphism_free_assumed: true,
        })
    }

    /// Residue characteristic of `k`.
    pub fn characteristic(&self) -> Z {
        arith::as_prime_power(&self.q)
            .expect("validated on construction")
            .0
    }

    /// Arithmetic genus of the glued curve (and of any smoothing):
    /// `n` copies of genus `genus_c` in a cycle of `n` nodes give
    /// `n·genus_c + 1`.
    pub fn generic_genus(&self) -> Z {
        self.n.clone() * self.genus_c.clone() + Z::one()
    }
}

/// The glued fibre: one reduced component with constant field `k_n`, whose
/// `n` geometric copies `C#0, ..., C#(n-1)` form a cycle.
pub fn glue_circle<Z: ExactInt>(spec: &GluingSpec<Z>) -> Result<SpecialFibre<Z>> {
    let n = spec
        .n
        .to_usize()
        .filter(|&n| (2..=1 << 20).contains(&n))
        .ok_or_else(|| Error::InvalidArgument(format!("unsupported circle length {}", spec.n)))?;
    let component = FibreComponent::new("C", Z::one(), spec.n.clone())?;
    let edges = (0..n)
        .map(|i| (format!("C#{i}"), format!("C#{}", (i + 1) % n)))
        .collect();
    SpecialFibre::new(vec![component], Some(edges))
}
