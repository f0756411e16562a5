//! Admissible (genus, period, index) triples for curves over p-adic
//! fields and what a section of the fundamental group forces on them.

use crate::arith;
use crate::deduction::{DeductionReport, Rule, Statement};
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PITriple<Z> {
    pub genus: Z,
    pub period: Z,
    pub index: Z,
}

impl<Z: ExactInt> PITriple<Z> {
    pub fn new(genus: Z, period: Z, index: Z) -> Result<Self> {
        if genus.is_negative() || !period.is_positive() || !index.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "need g >= 0, pe >= 1, ix >= 1; got ({genus}, {period}, {index})"
            )));
        }
        Ok(Self {
            genus,
            period,
            index,
        })
    }
}

/// Individual conditions of the admissibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    /// `ix ∤ pe + 1 - g`
    IndexDividesPeriodPlusOneMinusGenus,
    /// `pe ∤ g - 1`
    PeriodDividesGenusMinusOne,
    /// `pe ∤ ix`
    PeriodDividesIndex,
    /// `ix ∤ 2pe`
    IndexDividesTwicePeriod,
    /// `ix = 2pe` but `(g-1)/pe` is not odd
    OddQuotientWhenIndexDoubles,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    pub violations: Vec<Violation>,
}

fn require_positive_genus<Z: ExactInt>(g: &Z) -> Result<()> {
    if g.is_positive() {
        Ok(())
    } else {
        Err(Error::GenusOutOfScope(g.to_string()))
    }
}

pub fn lichtenbaum_admissible<Z: ExactInt>(t: &PITriple<Z>) -> Result<Admissibility> {
    require_positive_genus(&t.genus)?;
    let (g, pe, ix) = (&t.genus, &t.period, &t.index);
    let one = Z::one();
    let gm1 = g.clone() - one.clone();
    let twice = pe.clone() * Z::from(2);
    let mut violations = Vec::new();
    if !arith::divides(ix, &(pe.clone() + one - g.clone())) {
        violations.push(Violation::IndexDividesPeriodPlusOneMinusGenus);
    }
    if !arith::divides(pe, &gm1) {
        violations.push(Violation::PeriodDividesGenusMinusOne);
    }
    if !arith::divides(pe, ix) {
        violations.push(Violation::PeriodDividesIndex);
    }
    if !arith::divides(ix, &twice) {
        violations.push(Violation::IndexDividesTwicePeriod);
    }
    if *ix == twice && !(arith::divides(pe, &gm1) && (gm1.clone() / pe.clone()).is_odd()) {
        violations.push(Violation::OddQuotientWhenIndexDoubles);
    }
    Ok(Admissibility {
        admissible: violations.is_empty(),
        violations,
    })
}

fn is_admissible<Z: ExactInt>(g: &Z, pe: &Z, ix: &Z) -> bool {
    PITriple::new(g.clone(), pe.clone(), ix.clone())
        .and_then(|t| lichtenbaum_admissible(&t))
        .map(|a| a.admissible)
        .unwrap_or(false)
}

/// All admissible `(pe, ix)` for genus `g`, sorted. Genus 1 admits every
/// period, so it needs `period_bound`; for higher genus the bound, if
/// given, also caps the period.
pub fn enumerate_admissible<Z: ExactInt>(g: &Z, period_bound: Option<&Z>) -> Result<Vec<(Z, Z)>> {
    require_positive_genus(g)?;
    let periods: Vec<Z> = if g.is_one() {
        let bound = period_bound.ok_or(Error::UnboundedEnumeration)?;
        let mut v = Vec::new();
        let mut pe = Z::one();
        while pe <= *bound {
            v.push(pe.clone());
            pe = pe + Z::one();
        }
        v
    } else {
        arith::divisors(&(g.clone() - Z::one()))
            .into_iter()
            .filter(|pe| period_bound.is_none_or(|b| pe <= b))
            .collect()
    };
    let mut out = Vec::new();
    for pe in periods {
        for ix in [pe.clone(), pe.clone() * Z::from(2)] {
            if is_admissible(g, &pe, &ix) {
                out.push((pe.clone(), ix));
            }
        }
    }
    Ok(out)
}

/// `g' = degree·(g-1) + 1` for an étale cover of the given degree.
pub fn hurwitz_genus<Z: ExactInt>(g: &Z, degree: &Z) -> Result<Z> {
    require_positive_genus(g)?;
    if !degree.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "cover degree must be positive, got {degree}"
        )));
    }
    Ok(degree.clone() * (g.clone() - Z::one()) + Z::one())
}

/// Whether an étale cover of this degree has odd genus; true for every
/// even degree.
pub fn cover_genus_is_odd<Z: ExactInt>(g: &Z, degree: &Z) -> Result<bool> {
    hurwitz_genus(g, degree).map(|h| h.is_odd())
}

/// Checks `pe = ix ⟺ ix | g-1` on an admissible triple.
pub fn step1_equivalence_holds<Z: ExactInt>(t: &PITriple<Z>) -> Result<bool> {
    if !lichtenbaum_admissible(t)?.admissible {
        return Err(Error::Inadmissible {
            g: t.genus.to_string(),
            pe: t.period.to_string(),
            ix: t.index.to_string(),
        });
    }
    let equal = t.period == t.index;
    let divides = arith::divides(&t.index, &(t.genus.clone() - Z::one()));
    Ok(equal == divides)
}

/// Hypotheses at one p-adic place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionContext<Z> {
    pub p: Z,
    pub genus: Z,
    pub has_section: bool,
    /// For `p = 2`: some even-degree finite étale cover carries a lift of
    /// the section.
    pub even_cover_with_section: bool,
}

impl<Z: ExactInt> SectionContext<Z> {
    pub fn new(p: Z, genus: Z, has_section: bool, even_cover_with_section: bool) -> Result<Self> {
        if !arith::is_prime(&p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        require_positive_genus(&genus)?;
        Ok(Self {
            p,
            genus,
            has_section,
            even_cover_with_section,
        })
    }
}

pub fn section_consequences<Z: ExactInt>(ctx: &SectionContext<Z>) -> Result<DeductionReport<Z>> {
    require_positive_genus(&ctx.genus)?;
    let mut report = DeductionReport::empty();
    if !ctx.has_section {
        return Ok(report);
    }
    let p = ctx.p.clone();
    report.push(
        Statement::PeriodIsPowerOf(p.clone()),
        Rule::PeriodPowerOfResidueCharacteristic,
    );
    report.push(
        Statement::IndexIsPowerOf(p.clone()),
        Rule::IndexPowerOfResidueCharacteristic,
    );
    if p.is_odd() {
        report.push(
            Statement::PeriodEqualsIndex,
            Rule::OddResidueCharacteristicPeriodIndex,
        );
    }
    if ctx.even_cover_with_section {
        report.push(Statement::PeriodEqualsIndex, Rule::EvenCoverPeriodIndex);
    }
    if ctx.genus > Z::one() {
        let mut triples = admissible_with_section(&ctx.genus, &p)?;
        if ctx.even_cover_with_section {
            triples.retain(|(pe, ix)| pe == ix);
        }
        report.surviving_triples = Some(triples);
    }
    Ok(report)
}

/// Admissible pairs compatible with a section at residue characteristic
/// `p`: both entries powers of `p`, and equal when `p` is odd.
pub fn admissible_with_section<Z: ExactInt>(g: &Z, p: &Z) -> Result<Vec<(Z, Z)>> {
    if *g < Z::from(2) {
        return Err(Error::GenusOutOfScope(g.to_string()));
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let p_power = |n: &Z| arith::prime_power_exponent(n, p).is_some();
    Ok(enumerate_admissible(g, None)?
        .into_iter()
        .filter(|(pe, ix)| p_power(pe) && p_power(ix))
        .filter(|(pe, ix)| p.is_even() || pe == ix)
        .collect())
}
