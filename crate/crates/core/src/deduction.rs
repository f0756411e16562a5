//! Conclusions drawn from theorem-level rules, each tagged with the rule
//! that licenses it.

use std::fmt;

/// The theorem-level facts the engines apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// Over a p-adic field: `ix | pe + 1 - g`, hence `pe | g-1`,
    /// `pe | ix | 2pe`, and `ix = 2pe` forces `(g-1)/pe` odd.
    LichtenbaumConditions,
    /// A p-adic curve whose fundamental group sequence splits has period a
    /// power of p.
    PeriodPowerOfResidueCharacteristic,
    /// A p-adic curve of positive genus with a section has
    /// `ix = #Br(X/K)` a power of p.
    IndexPowerOfResidueCharacteristic,
    /// With a section and p odd, period equals index.
    OddResidueCharacteristicPeriodIndex,
    /// With a section and p = 2, period equals index on even-degree étale
    /// covers to which the section lifts.
    EvenCoverPeriodIndex,
    /// Over R, a curve of positive genus has a section iff it has a real
    /// point iff its relative Brauer group vanishes.
    RealSectionCriterion,
    /// Over Q, a section forces every Brauer obstruction for line bundles
    /// to vanish, so `Br(X/Q) = 0` and `pe = ix`.
    RationalBrauerVanishing,
    /// Local invariants of a global Brauer class sum to zero.
    HasseBrauerNoether,
    /// A map to the Brauer–Severi variety of `A` puts `[A]` in `Br(X/k)`.
    BrauerSeveriCover,
    /// Index of the generic fibre is `gcd(e·f)` over the special fibre of a
    /// regular model.
    IndexFromRegularModel,
    /// A rational point yields a section.
    PointsGiveSections,
}

impl Rule {
    pub fn citation(self) -> &'static str {
        match self {
            Rule::LichtenbaumConditions => {
                "Lichtenbaum: ix | pe + 1 - g over p-adic fields (pe | g-1, pe | ix | 2pe, ix = 2pe => (g-1)/pe odd)"
            }
            Rule::PeriodPowerOfResidueCharacteristic => {
                "section over a p-adic field => period is a power of p"
            }
            Rule::IndexPowerOfResidueCharacteristic => {
                "section over a p-adic field, genus > 0 => ix = #Br(X/K) is a power of p"
            }
            Rule::OddResidueCharacteristicPeriodIndex => "section over a p-adic field, p odd => pe = ix",
            Rule::EvenCoverPeriodIndex => {
                "section over a 2-adic field => pe = ix on every even-degree finite étale cover carrying the section"
            }
            Rule::RealSectionCriterion => {
                "over R, genus > 0: section <=> Br(X/R) = 0 <=> X(R) nonempty"
            }
            Rule::RationalBrauerVanishing => {
                "over Q, a section => Br(X/Q) = 0 and pe = ix (one place per residue characteristic)"
            }
            Rule::HasseBrauerNoether => "Hasse-Brauer-Noether: local invariants sum to zero",
            Rule::BrauerSeveriCover => "a map X -> BS_A puts [A] in Br(X/k)",
            Rule::IndexFromRegularModel => "ix = gcd(e f) over components of a regular model's special fibre",
            Rule::PointsGiveSections => "a rational point yields a section",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.citation())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Statement<Z> {
    PeriodIsPowerOf(Z),
    IndexIsPowerOf(Z),
    PeriodEqualsIndex,
    RelativeBrauerVanishes,
}

impl<Z: fmt::Display> fmt::Display for Statement<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::PeriodIsPowerOf(p) => write!(f, "pe is a power of {p}"),
            Statement::IndexIsPowerOf(p) => write!(f, "ix is a power of {p}"),
            Statement::PeriodEqualsIndex => f.write_str("pe = ix"),
            Statement::RelativeBrauerVanishes => f.write_str("Br(X/Q) = 0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conclusion<Z> {
    pub statement: Statement<Z>,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeductionReport<Z> {
    pub conclusions: Vec<Conclusion<Z>>,
    /// `(pe, ix)` pairs still possible after the conclusions, when finite.
    pub surviving_triples: Option<Vec<(Z, Z)>>,
}

impl<Z> DeductionReport<Z> {
    pub fn empty() -> Self {
        Self {
            conclusions: Vec::new(),
            surviving_triples: None,
        }
    }

    pub(crate) fn push(&mut self, statement: Statement<Z>, rule: Rule) {
        self.conclusions.push(Conclusion { statement, rule });
    }
}

impl<Z: PartialEq> DeductionReport<Z> {
    pub fn concludes(&self, statement: &Statement<Z>) -> bool {
        self.conclusions.iter().any(|c| &c.statement == statement)
    }
}
