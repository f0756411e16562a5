//! Exact computations around the period–index problem for curves: Q/Z
//! Brauer invariants, Hilbert symbols over Q, Galois cocycles and crossed
//! products, admissible (genus, period, index) triples, indices from
//! regular models, and local section obstructions for curves over Q.
//!
//! Everything number-theoretic is generic over an [`ExactInt`] scalar. The
//! aliases below fix it to [`BigInt`]; instantiate the generic types with
//! `i64` directly when the operands are known to stay small.

pub mod arith;
pub mod brauer;
pub mod cocycle;
pub mod deduction;
pub mod engine;
pub mod error;
pub mod hilbert;
pub mod models;
pub mod period_index;
pub mod scalar;

pub use num_bigint::BigInt;

pub use deduction::{Conclusion, Rule};
pub use engine::{
    corollary_q_deduce, genus_of, global_report, global_report_with, hasse_brauer_noether_deduce,
    local_brauer_class, real_points_diagonal, section_verdict, Verdict,
};
pub use error::{Error, Result};
pub use hilbert::{hilbert_symbol, product_formula_check, quaternion_invariants};
pub use models::{glue_circle, index_from_model, obstructs_section};
pub use period_index::{
    admissible_with_section, enumerate_admissible, hurwitz_genus, lichtenbaum_admissible,
    section_consequences, step1_equivalence_holds, Admissibility, Violation,
};
pub use scalar::ExactInt;

pub type InvariantClass = brauer::InvariantClass<BigInt>;
pub type CyclicSubgroup = brauer::CyclicSubgroup<BigInt>;
pub type RelativeBrauerShape = brauer::RelativeBrauerShape<BigInt>;
pub type Place = hilbert::Place<BigInt>;
pub type QuaternionSymbol = hilbert::QuaternionSymbol<BigInt>;
pub type LocalInvariants = hilbert::LocalInvariants<BigInt>;
pub type PITriple = period_index::PITriple<BigInt>;
pub type SectionContext = period_index::SectionContext<BigInt>;
pub type DeductionReport = deduction::DeductionReport<BigInt>;
pub type Statement = deduction::Statement<BigInt>;
pub type FibreComponent = models::FibreComponent<BigInt>;
pub type SpecialFibre = models::SpecialFibre<BigInt>;
pub type GluingSpec = models::GluingSpec<BigInt>;
pub type CurveDescriptor = engine::CurveDescriptor<BigInt>;
pub type PlaceVerdict = engine::PlaceVerdict<BigInt>;
pub type GlobalReport = engine::GlobalReport<BigInt>;
pub type GlobalConclusion = engine::GlobalConclusion<BigInt>;
