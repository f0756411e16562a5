//! Galois cochains over finite cyclic groups, crossed-product algebras,
//! cyclic cohomology through the norm map, and the `d₂` recipe on finite
//! double complexes.

mod cochain;
mod crossed;
pub mod double;
pub mod field;
mod module;

pub use cochain::{
    all_one_cochains, all_two_cochains, coboundary, is_cocycle, OneCochain, TwoCochain,
};
pub use crossed::{
    associativity_iff_cocycle, crossed_product, CrossedProductTable, FieldCrossedProduct, Monomial,
};
pub use double::{DoubleComplex, E2Class};
pub use field::FiniteField;
pub use module::{h2_cyclic, CyclicGaloisAction, CyclicH2, ENUMERATION_LIMIT};
