//! Place-by-place section obstructions for curves over Q and the global
//! deductions built on them.

use crate::arith;
use crate::brauer::{CyclicSubgroup, InvariantClass};
use crate::deduction::{DeductionReport, Rule, Statement};
use crate::error::{Error, Result};
use crate::hilbert::{quaternion_invariants, LocalInvariants, Place, QuaternionSymbol};
use crate::models::{index_from_model, SpecialFibre};
use crate::scalar::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveDescriptor<Z> {
    /// `X^{2n} - aY^{2n} - bZ^{2n} = 0`, mapping to the conic
    /// `X² - aY² - bZ² = 0` by `(X:Y:Z) ↦ (Xⁿ:Yⁿ:Zⁿ)`.
    DiagonalForm { n: Z, a: Z, b: Z },
    /// Some cover of the conic `X² - aY² - bZ² = 0`.
    ConicCover {
        a: Z,
        b: Z,
        cover_degree: Z,
        genus: Z,
    },
    /// A curve known through the special fibre of a regular model at one
    /// prime.
    ModelCurve {
        genus: Z,
        place_prime: Z,
        fibre: SpecialFibre<Z>,
    },
}

impl<Z: ExactInt> CurveDescriptor<Z> {
    pub fn diagonal(n: Z, a: Z, b: Z) -> Result<Self> {
        if !n.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "n must be positive, got {n}"
            )));
        }
        QuaternionSymbol::new(a.clone(), b.clone())?;
        Ok(Self::DiagonalForm { n, a, b })
    }

    pub fn conic_cover(a: Z, b: Z, cover_degree: Z, genus: Z) -> Result<Self> {
        QuaternionSymbol::new(a.clone(), b.clone())?;
        if !cover_degree.is_positive() || !genus.is_positive() {
            return Err(Error::InvalidArgument(
                "cover degree and genus must be positive".into(),
            ));
        }
        Ok(Self::ConicCover {
            a,
            b,
            cover_degree,
            genus,
        })
    }

    pub fn model_curve(genus: Z, place_prime: Z, fibre: SpecialFibre<Z>) -> Result<Self> {
        if !genus.is_positive() {
            return Err(Error::GenusOutOfScope(genus.to_string()));
        }
        if !arith::is_prime(&place_prime) {
            return Err(Error::NotPrime(place_prime.to_string()));
        }
        Ok(Self::ModelCurve {
            genus,
            place_prime,
            fibre,
        })
    }

    /// The quaternion algebra of the conic the curve maps to, if any.
    pub fn conic(&self) -> Option<QuaternionSymbol<Z>> {
        match self {
            Self::DiagonalForm { a, b, .. } | Self::ConicCover { a, b, .. } => Some(
                QuaternionSymbol::new(a.clone(), b.clone()).expect("validated on construction"),
            ),
            Self::ModelCurve { .. } => None,
        }
    }
}

/// Smooth plane curve of degree `2n` has genus `(2n-1)(2n-2)/2`.
pub fn genus_of<Z: ExactInt>(c: &CurveDescriptor<Z>) -> Z {
    match c {
        CurveDescriptor::DiagonalForm { n, .. } => {
            let d = n.clone() * Z::from(2);
            (d.clone() - Z::one()) * (d - Z::from(2)) / Z::from(2)
        }
        CurveDescriptor::ConicCover { genus, .. } | CurveDescriptor::ModelCurve { genus, .. } => {
            genus.clone()
        }
    }
}

/// Real points on `X^{2n} = aY^{2n} + bZ^{2n}` exist iff `a` and `b` are
/// not both negative.
pub fn real_points_diagonal<Z: ExactInt>(a: &Z, b: &Z) -> bool {
    !(a.is_negative() && b.is_negative())
}

/// Invariant at `v` of the conic's quaternion algebra; it lies in the
/// relative Brauer group of the curve at `v`.
pub fn local_brauer_class<Z: ExactInt>(
    c: &CurveDescriptor<Z>,
    v: &Place<Z>,
) -> Result<InvariantClass<Z>> {
    let q = c.conic().ok_or(Error::NoConicStructure)?;
    if let Place::Finite(p) = v {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
    }
    Ok(quaternion_invariants(&q).get(v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// No section of the fundamental group exists over the completion.
    NoSection(Rule),
    NoInformation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceVerdict<Z> {
    pub place: Place<Z>,
    pub verdict: Verdict,
    /// Whether the curve has points over the completion, when known. A
    /// `NoSection` verdict always records `Some(false)`.
    pub has_local_points_known: Option<bool>,
}

impl<Z> PlaceVerdict<Z> {
    pub fn is_obstructed(&self) -> bool {
        matches!(self.verdict, Verdict::NoSection(_))
    }
}

pub fn section_verdict<Z: ExactInt>(
    c: &CurveDescriptor<Z>,
    v: &Place<Z>,
) -> Result<PlaceVerdict<Z>> {
    let genus = genus_of(c);
    if !genus.is_positive() {
        return Err(Error::GenusOutOfScope(genus.to_string()));
    }
    let no_section = |rule| PlaceVerdict {
        place: v.clone(),
        verdict: Verdict::NoSection(rule),
        has_local_points_known: Some(false),
    };
    let no_info = |points| PlaceVerdict {
        place: v.clone(),
        verdict: Verdict::NoInformation,
        has_local_points_known: points,
    };
    match (c, v) {
        (CurveDescriptor::DiagonalForm { a, b, .. }, Place::RealInfinite) => {
            if real_points_diagonal(a, b) {
                Ok(no_info(Some(true)))
            } else {
                Ok(no_section(Rule::RealSectionCriterion))
            }
        }
        (_, Place::RealInfinite) => Ok(no_info(None)),
        (
            CurveDescriptor::ModelCurve {
                place_prime, fibre, ..
            },
            Place::Finite(p),
        ) => {
            if p != place_prime {
                return Ok(no_info(None));
            }
            let index = index_from_model(fibre);
            if arith::prime_power_exponent(&index, p).is_some() {
                Ok(no_info(None))
            } else {
                Ok(no_section(Rule::IndexPowerOfResidueCharacteristic))
            }
        }
        (_, Place::Finite(p)) => {
            let class = local_brauer_class(c, v)?;
            if class.is_prime_power_order(p)? {
                Ok(no_info(None))
            } else {
                Ok(no_section(Rule::IndexPowerOfResidueCharacteristic))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlobalConclusion<Z> {
    /// Genus at least 2 and obstructed at `witness`: no rational points and
    /// no sections, so the section conjecture holds vacuously.
    SectionConjectureHoldsTrivially {
        witness: Place<Z>,
    },
    /// Under an assumed section with no local obstruction:
    /// `Br(X/Q) = 0` and `pe = ix`.
    GlobalBrauerVanishes,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalReport<Z> {
    pub curve: CurveDescriptor<Z>,
    pub genus: Z,
    /// Real place first, then primes ascending.
    pub place_verdicts: Vec<PlaceVerdict<Z>>,
    pub global_conclusion: GlobalConclusion<Z>,
    pub quaternion_invariants: Option<LocalInvariants<Z>>,
    pub real_points: Option<bool>,
    pub global_sections_excluded: bool,
    pub global_points_excluded: bool,
    pub assumed_section: bool,
}

impl<Z: ExactInt> GlobalReport<Z> {
    /// Obstructed somewhere, but not at the real place.
    pub fn obstructed_only_at_finite_places(&self) -> bool {
        self.global_sections_excluded
            && self
                .place_verdicts
                .iter()
                .all(|v| v.place != Place::RealInfinite || !v.is_obstructed())
    }
}

pub fn global_report<Z: ExactInt>(c: &CurveDescriptor<Z>) -> Result<GlobalReport<Z>> {
    global_report_with(c, false)
}

/// As [`global_report`]; with `assume_section`, an unobstructed curve is
/// concluded to have `Br(X/Q) = 0`.
pub fn global_report_with<Z: ExactInt>(
    c: &CurveDescriptor<Z>,
    assume_section: bool,
) -> Result<GlobalReport<Z>> {
    let genus = genus_of(c);
    let invariants = c.conic().map(|q| quaternion_invariants(&q));
    let mut places = vec![Place::RealInfinite];
    if let Some(inv) = &invariants {
        places.extend(
            inv.support()
                .into_iter()
                .filter(|v| *v != Place::RealInfinite),
        );
    }
    if let CurveDescriptor::ModelCurve { place_prime, .. } = c {
        places.push(Place::Finite(place_prime.clone()));
    }
    places.sort();
    places.dedup();

    // genus 0 is outside every obstruction theorem: report, but conclude nothing
    let place_verdicts = places
        .iter()
        .map(|v| {
            if genus.is_positive() {
                section_verdict(c, v)
            } else {
                Ok(PlaceVerdict {
                    place: v.clone(),
                    verdict: Verdict::NoInformation,
                    has_local_points_known: None,
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = place_verdicts
        .iter()
        .find(|v| v.is_obstructed())
        .map(|v| v.place.clone());
    let obstructed = witness.is_some();
    let global_conclusion = match witness {
        Some(w) if genus >= Z::from(2) => {
            GlobalConclusion::SectionConjectureHoldsTrivially { witness: w }
        }
        None if assume_section && genus.is_positive() => GlobalConclusion::GlobalBrauerVanishes,
        _ => GlobalConclusion::Inconclusive,
    };
    let real_points = match c {
        CurveDescriptor::DiagonalForm { a, b, .. } => Some(real_points_diagonal(a, b)),
        _ => None,
    };
    Ok(GlobalReport {
        curve: c.clone(),
        genus,
        place_verdicts,
        global_conclusion,
        quaternion_invariants: invariants,
        real_points,
        global_sections_excluded: obstructed,
        global_points_excluded: obstructed,
        assumed_section: assume_section,
    })
}

/// Every vector of local invariants, one per constrained place and inside
/// that place's allowed group, whose entries sum to 0 in Q/Z.
pub fn hasse_brauer_noether_deduce<Z: ExactInt>(
    constraints: &[(Place<Z>, CyclicSubgroup<Z>)],
) -> Result<Vec<Vec<InvariantClass<Z>>>> {
    for (i, (v, _)) in constraints.iter().enumerate() {
        if constraints[..i].iter().any(|(w, _)| w == v) {
            return Err(Error::RepeatedPlace(v.to_string()));
        }
    }
    let groups: Vec<&CyclicSubgroup<Z>> = constraints.iter().map(|(_, g)| g).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(groups.len());
    extend_vectors(&groups, &mut prefix, InvariantClass::zero(), &mut out);
    Ok(out)
}

fn extend_vectors<Z: ExactInt>(
    groups: &[&CyclicSubgroup<Z>],
    prefix: &mut Vec<InvariantClass<Z>>,
    partial: InvariantClass<Z>,
    out: &mut Vec<Vec<InvariantClass<Z>>>,
) {
    match groups {
        [] => {
            if partial.is_zero() {
                out.push(prefix.clone());
            }
        }
        // the last entry is forced to be -partial
        [last] => {
            let needed = -partial;
            if last.contains(&needed) {
                prefix.push(needed);
                out.push(prefix.clone());
                prefix.pop();
            }
        }
        [first, rest @ ..] => {
            for a in first.elements() {
                let next = &partial + &a;
                prefix.push(a);
                extend_vectors(rest, prefix, next, out);
                prefix.pop();
            }
        }
    }
}

/// Over Q there is one place per residue characteristic, so a section
/// kills the relative Brauer group.
pub fn corollary_q_deduce<Z: ExactInt>(
    g: &Z,
    has_section: bool,
    bad_primes: &[Z],
) -> Result<DeductionReport<Z>> {
    if !g.is_positive() {
        return Err(Error::GenusOutOfScope(g.to_string()));
    }
    if let Some(p) = bad_primes.iter().find(|p| !arith::is_prime(*p)) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut report = DeductionReport::empty();
    if has_section {
        report.push(
            Statement::RelativeBrauerVanishes,
            Rule::RationalBrauerVanishing,
        );
        report.push(Statement::PeriodEqualsIndex, Rule::RationalBrauerVanishing);
    }
    Ok(report)
}
