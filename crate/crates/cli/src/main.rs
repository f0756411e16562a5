mod wire;

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use perind::cocycle::{
    associativity_iff_cocycle, coboundary, crossed_product, h2_cyclic, is_cocycle, OneCochain,
    TwoCochain,
};
use perind::engine::GlobalConclusion;
use perind::{
    CurveDescriptor, GlobalReport, GluingSpec, PITriple, Place, QuaternionSymbol, SectionContext,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "perind",
    version,
    about = "Period, index and section obstructions for curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert symbol (a, b)_v, or the invariants at every place
    #[command(allow_negative_numbers = true)]
    Hilbert {
        a: BigInt,
        b: BigInt,
        /// `real` or a prime
        #[arg(long)]
        place: Option<String>,
    },
    /// Check a cochain and compute H² for a cyclic Galois module (JSON file)
    Cocycle { file: PathBuf },
    #[command(subcommand)]
    Triples(Triples),
    #[command(subcommand)]
    Model(Model),
    #[command(subcommand)]
    Analyze(Analyze),
    #[command(subcommand)]
    Deduce(Deduce),
}

/// Admissible (genus, period, index) triples over p-adic fields
#[derive(Subcommand)]
enum Triples {
    Check {
        g: BigInt,
        pe: BigInt,
        ix: BigInt,
    },
    Enumerate {
        g: BigInt,
        #[arg(long)]
        bound: Option<BigInt>,
    },
    /// Consequences of a section of the fundamental group over a p-adic field
    WithSection {
        g: BigInt,
        p: BigInt,
        /// The section lifts to an even-degree étale cover
        #[arg(long)]
        even_cover: bool,
    },
}

/// Indices from special fibres of regular models
#[derive(Subcommand)]
enum Model {
    Index {
        file: PathBuf,
    },
    Glue {
        n: BigInt,
        q: BigInt,
        #[arg(long, default_value = "1")]
        genus_c: BigInt,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    json: bool,
    /// Assume the curve has a section over Q
    #[arg(long)]
    assume_section: bool,
}

/// Place-by-place section obstructions for curves over Q
#[derive(Subcommand)]
enum Analyze {
    #[command(allow_negative_numbers = true)]
    Diagonal {
        #[arg(long)]
        n: BigInt,
        #[arg(long)]
        a: BigInt,
        #[arg(long)]
        b: BigInt,
        #[command(flatten)]
        out: Output,
    },
    Model {
        #[arg(long)]
        genus: BigInt,
        #[arg(long)]
        prime: BigInt,
        #[arg(long)]
        fibre: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

/// Global deductions from local data
#[derive(Subcommand)]
enum Deduce {
    Hbn {
        #[arg(long)]
        constraints: PathBuf,
    },
    CorollaryQ {
        #[arg(long)]
        genus: BigInt,
        #[arg(long)]
        section: bool,
        #[arg(long, value_delimiter = ',')]
        bad_primes: Vec<BigInt>,
    },
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn hilbert(a: BigInt, b: BigInt, place: Option<String>) -> anyhow::Result<Value> {
    let q = QuaternionSymbol::new(a.clone(), b.clone())?;
    let (a, b) = (wire::int(&a), wire::int(&b));
    Ok(match place {
        Some(v) => {
            let v = Place::parse(&v)?;
            let s = perind::hilbert_symbol(&q, &v)?;
            wire::tagged(
                "hilbert_symbol",
                json!({"a": a, "b": b, "place": v.to_string(), "symbol": s}),
            )
        }
        None => {
            let inv = perind::quaternion_invariants(&q);
            let places: Vec<Value> = inv
                .entries()
                .iter()
                .map(|(v, c)| json!({"place": v.to_string(), "invariant": wire::invariant(c)}))
                .collect();
            let support: Vec<String> = inv.support().iter().map(|v| v.to_string()).collect();
            wire::tagged(
                "quaternion_invariants",
                json!({"a": a, "b": b, "places": places, "support": support, "sum": wire::invariant(&inv.sum())}),
            )
        }
    })
}

fn cocycle(file: &Path) -> anyhow::Result<Value> {
    let input: wire::CocycleIn = read_json(file)?;
    let a = input.action()?;
    let h2 = h2_cyclic(&a)?;
    let mut out = json!({
        "group_order": a.group_order(),
        "module_order": a.order(),
        "h2": {"order": h2.order(), "fixed_points": h2.fixed_points, "norm_image": h2.norm_image},
    });
    let checked = match &input.cochain {
        None => Value::Null,
        Some(wire::CochainIn::One { values }) => {
            let f = OneCochain::new(&a, values.clone())?;
            let df = coboundary(&a, &f)?;
            json!({
                "degree": 1,
                "coboundary": df.values(),
                "coboundary_is_cocycle": is_cocycle(&a, &df)?,
            })
        }
        Some(wire::CochainIn::Two { rows }) => {
            let c = TwoCochain::from_rows(&a, rows.clone())?;
            let cocycle = is_cocycle(&a, &c)?;
            let crossed = match crossed_product(&a, &c) {
                Ok(t) => json!({"associative_on_basis": t.is_associative_on_basis()}),
                Err(e) => json!({"error": e.to_string()}),
            };
            json!({
                "degree": 2,
                "is_cocycle": cocycle,
                "is_normalized": c.is_normalized(),
                "associativity_matches_cocycle_condition": associativity_iff_cocycle(&a, &c)?,
                "crossed_product": crossed,
            })
        }
    };
    out["cochain"] = checked;
    Ok(wire::tagged("cocycle", out))
}

fn triples(cmd: Triples) -> anyhow::Result<Value> {
    Ok(match cmd {
        Triples::Check { g, pe, ix } => {
            let t = PITriple::new(g.clone(), pe.clone(), ix.clone())?;
            let adm = perind::lichtenbaum_admissible(&t)?;
            wire::tagged(
                "triple_check",
                json!({
                    "genus": wire::int(&g), "period": wire::int(&pe), "index": wire::int(&ix),
                    "admissible": adm.admissible,
                    "violations": adm.violations.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>(),
                    "period_equals_index_iff_index_divides_g_minus_1":
                        if adm.admissible { Some(perind::step1_equivalence_holds(&t)?) } else { None },
                    "rule": format!("{:?}", perind::Rule::LichtenbaumConditions),
                }),
            )
        }
        Triples::Enumerate { g, bound } => {
            let ts = perind::enumerate_admissible(&g, bound.as_ref())?;
            wire::tagged(
                "triple_list",
                json!({"genus": wire::int(&g), "triples": wire::pairs(&ts)}),
            )
        }
        Triples::WithSection { g, p, even_cover } => {
            let ctx = SectionContext::new(p.clone(), g.clone(), true, even_cover)?;
            let report = perind::section_consequences(&ctx)?;
            wire::tagged(
                "section_consequences",
                json!({
                    "genus": wire::int(&g),
                    "prime": wire::int(&p),
                    "conclusions": report.conclusions.iter().map(wire::conclusion).collect::<Vec<_>>(),
                    "triples": report.surviving_triples.as_deref().map(wire::pairs),
                }),
            )
        }
    })
}

fn model(cmd: Model) -> anyhow::Result<Value> {
    Ok(match cmd {
        Model::Index { file } => {
            let fb = read_json::<wire::FibreIn>(&file)?.build()?;
            let mut body = wire::fibre(&fb);
            body["index"] = wire::int(&perind::index_from_model(&fb));
            wire::tagged("model_index", body)
        }
        Model::Glue { n, q, genus_c } => {
            let spec = GluingSpec::new(n, q, genus_c)?;
            let fb = perind::glue_circle(&spec)?;
            let mut body = wire::fibre(&fb);
            body["index"] = wire::int(&perind::index_from_model(&fb));
            body["generic_genus"] = wire::int(&spec.generic_genus());
            body["characteristic"] = wire::int(&spec.characteristic());
            wire::tagged("glued_fibre", body)
        }
    })
}

fn render_text(r: &GlobalReport) -> String {
    let mut lines = vec![format!("genus {}", r.genus)];
    for v in &r.place_verdicts {
        let what = match v.verdict {
            perind::Verdict::NoSection(rule) => format!("no section ({})", rule.citation()),
            perind::Verdict::NoInformation => "no information".to_string(),
        };
        lines.push(format!("  {:>6}: {what}", v.place.to_string()));
    }
    if let Some(real) = r.real_points {
        lines.push(format!("real points: {}", if real { "yes" } else { "no" }));
    }
    lines.push(match &r.global_conclusion {
        GlobalConclusion::SectionConjectureHoldsTrivially { witness } => {
            format!("section conjecture holds trivially (obstructed at {witness})")
        }
        GlobalConclusion::GlobalBrauerVanishes => "Br(X/Q) = 0 and pe = ix".to_string(),
        GlobalConclusion::Inconclusive => "inconclusive".to_string(),
    });
    lines.join("\n")
}

/// `None` means the report was already printed as text.
fn analyze(cmd: Analyze) -> anyhow::Result<Option<Value>> {
    let (curve, out) = match cmd {
        Analyze::Diagonal { n, a, b, out } => (CurveDescriptor::diagonal(n, a, b)?, out),
        Analyze::Model {
            genus,
            prime,
            fibre,
            out,
        } => {
            let fb = read_json::<wire::FibreIn>(&fibre)?.build()?;
            (CurveDescriptor::model_curve(genus, prime, fb)?, out)
        }
    };
    let report = perind::global_report_with(&curve, out.assume_section)?;
    if out.json {
        Ok(Some(wire::report(&report)))
    } else {
        println!("{}", render_text(&report));
        Ok(None)
    }
}

fn deduce(cmd: Deduce) -> anyhow::Result<Value> {
    Ok(match cmd {
        Deduce::Hbn { constraints } => {
            let raw: Vec<wire::ConstraintIn> = read_json(&constraints)?;
            let cs = wire::constraints(&raw)?;
            let vectors = perind::hasse_brauer_noether_deduce(&cs)?;
            let only_zero = vectors.len() == 1 && vectors[0].iter().all(|c| c.is_zero());
            wire::tagged(
                "hbn",
                json!({
                    "places": cs.iter().map(|(v, _)| v.to_string()).collect::<Vec<_>>(),
                    "vectors": vectors.iter()
                        .map(|v| v.iter().map(wire::invariant).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                    "only_zero": only_zero,
                    "rule": format!("{:?}", perind::Rule::HasseBrauerNoether),
                }),
            )
        }
        Deduce::CorollaryQ {
            genus,
            section,
            bad_primes,
        } => {
            let report = perind::corollary_q_deduce(&genus, section, &bad_primes)?;
            wire::tagged(
                "corollary_q",
                json!({
                    "genus": wire::int(&genus),
                    "has_section": section,
                    "bad_primes": bad_primes.iter().map(wire::int).collect::<Vec<_>>(),
                    "conclusions": report.conclusions.iter().map(wire::conclusion).collect::<Vec<_>>(),
                }),
            )
        }
    })
}

fn run(cli: Cli) -> anyhow::Result<Option<Value>> {
    match cli.command {
        Command::Hilbert { a, b, place } => hilbert(a, b, place).map(Some),
        Command::Cocycle { file } => cocycle(&file).map(Some),
        Command::Triples(t) => triples(t).map(Some),
        Command::Model(m) => model(m).map(Some),
        Command::Analyze(a) => analyze(a),
        Command::Deduce(d) => deduce(d).map(Some),
    }
}

fn main() -> anyhow::Result<()> {
    if let Some(v) = run(Cli::parse())? {
        println!("{}", serde_json::to_string_pretty(&v)?);
    }
    Ok(())
}
