//! JSON shapes read and written by the command line.

use anyhow::{bail, Context};
use num_bigint::BigInt;
use perind::cocycle::CyclicGaloisAction;
use perind::deduction::Conclusion;
use perind::engine::Verdict;
use perind::{
    CyclicSubgroup, FibreComponent, GlobalConclusion, GlobalReport, InvariantClass, Place,
    SpecialFibre,
};
use serde::Deserialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "perind/1";

pub fn tagged(kind: &str, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("object body");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("kind".into(), json!(kind));
    body
}

/// Integers travel as JSON numbers or decimal strings, so big values
/// survive without precision loss.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum Int {
    Num(i64),
    Str(String),
}

impl Int {
    pub fn big(&self) -> anyhow::Result<BigInt> {
        match self {
            Int::Num(n) => Ok(BigInt::from(*n)),
            Int::Str(s) => s
                .trim()
                .parse()
                .with_context(|| format!("not an integer: {s:?}")),
        }
    }
}

pub fn int(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(small) => json!(small),
        Err(_) => json!(n.to_string()),
    }
}

#[derive(Deserialize)]
pub struct ComponentIn {
    pub label: Option<String>,
    pub e: Int,
    pub f: Int,
}

#[derive(Deserialize)]
pub struct FibreIn {
    pub components: Vec<ComponentIn>,
    pub dual_graph: Option<Vec<(String, String)>>,
}

impl FibreIn {
    pub fn build(&self) -> anyhow::Result<SpecialFibre> {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let label = c.label.clone().unwrap_or_else(|| format!("C{i}"));
                Ok(FibreComponent::new(label, c.e.big()?, c.f.big()?)?)
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(SpecialFibre::new(components, self.dual_graph.clone())?)
    }
}

pub fn fibre(fb: &SpecialFibre) -> Value {
    json!({
        "components": fb.components().iter().map(|c| json!({
            "label": c.label, "e": int(&c.e), "f": int(&c.f),
        })).collect::<Vec<_>>(),
        "dual_graph": fb.dual_graph(),
    })
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleIn {
    FiniteFieldUnits { q: u64, m: u64 },
    Cyclic { n: u64, action_exponent: u64 },
}

/// A 1-cochain lists `f(σ^i)`; a 2-cochain lists rows `c(σ^i, σ^j)`.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum CochainIn {
    Two { rows: Vec<Vec<u64>> },
    One { values: Vec<u64> },
}

#[derive(Deserialize)]
pub struct CocycleIn {
    pub group_order: u64,
    pub module: ModuleIn,
    pub cochain: Option<CochainIn>,
}

impl CocycleIn {
    pub fn action(&self) -> anyhow::Result<CyclicGaloisAction> {
        Ok(match self.module {
            ModuleIn::FiniteFieldUnits { q, m } => {
                if m != self.group_order {
                    bail!(
                        "Gal(F_{{{q}^{m}}}/F_{q}) has order {m}, but group_order is {}",
                        self.group_order
                    );
                }
                CyclicGaloisAction::finite_field_units(q, m)?
            }
            ModuleIn::Cyclic { n, action_exponent } => {
                CyclicGaloisAction::cyclic(self.group_order, n, action_exponent)?
            }
        })
    }
}

#[derive(Deserialize)]
pub struct ConstraintIn {
    pub place: String,
    pub order: Int,
}

pub fn constraints(raw: &[ConstraintIn]) -> anyhow::Result<Vec<(Place, CyclicSubgroup)>> {
    raw.iter()
        .map(|c| {
            Ok((
                Place::parse(&c.place)?,
                CyclicSubgroup::new(c.order.big()?)?,
            ))
        })
        .collect()
}

pub fn invariant(c: &InvariantClass) -> Value {
    json!(c.to_string())
}

pub fn conclusion(c: &Conclusion<BigInt>) -> Value {
    json!({
        "statement": c.statement.to_string(),
        "rule": format!("{:?}", c.rule),
        "citation": c.rule.citation(),
    })
}

pub fn pairs(ts: &[(BigInt, BigInt)]) -> Value {
    json!(ts
        .iter()
        .map(|(pe, ix)| json!({"period": int(pe), "index": int(ix)}))
        .collect::<Vec<_>>())
}

pub fn verdict_name(c: &GlobalConclusion) -> &'static str {
    match c {
        GlobalConclusion::SectionConjectureHoldsTrivially { .. } => {
            "section_conjecture_holds_trivially"
        }
        GlobalConclusion::GlobalBrauerVanishes => "global_brauer_vanishes",
        GlobalConclusion::Inconclusive => "inconclusive",
    }
}

pub fn report(r: &GlobalReport) -> Value {
    let places: Vec<Value> = r
        .place_verdicts
        .iter()
        .map(|v| {
            let (verdict, rule) = match v.verdict {
                Verdict::NoSection(rule) => ("no_section", Some(rule)),
                Verdict::NoInformation => ("no_information", None),
            };
            json!({
                "place": v.place.to_string(),
                "verdict": verdict,
                "rule": rule.map(|r| format!("{r:?}")),
                "citation": rule.map(|r| r.citation()),
                "local_points": v.has_local_points_known,
            })
        })
        .collect();
    let witness = match &r.global_conclusion {
        GlobalConclusion::SectionConjectureHoldsTrivially { witness } => Some(witness.to_string()),
        _ => None,
    };
    tagged(
        "global_report",
        json!({
            "verdict": verdict_name(&r.global_conclusion),
            "witness": witness,
            "genus": int(&r.genus),
            "places": places,
            "quaternion_invariants": r.quaternion_invariants.as_ref().map(|inv| {
                inv.entries().iter().map(|(v, c)| json!({"place": v.to_string(), "invariant": invariant(c)}))
                    .collect::<Vec<_>>()
            }),
            "real_points": r.real_points,
            "global_sections_excluded": r.global_sections_excluded,
            "global_points_excluded": r.global_points_excluded,
            "obstructed_only_at_finite_places": r.obstructed_only_at_finite_places(),
            "assumed_section": r.assumed_section,
        }),
    )
}
