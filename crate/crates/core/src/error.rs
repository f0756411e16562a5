use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(String),
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("quaternion symbol entries must be nonzero")]
    ZeroSymbolEntry,
    #[error("period {period} does not divide index {index}")]
    PeriodDoesNotDivideIndex { period: String, index: String },
    #[error("genus {0} is outside the range this operation supports")]
    GenusOutOfScope(String),
    #[error("enumeration for genus 1 is unbounded; supply an explicit period bound")]
    UnboundedEnumeration,
    #[error("triple (g={g}, pe={pe}, ix={ix}) is not admissible")]
    Inadmissible { g: String, pe: String, ix: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid Galois module: {0}")]
    InvalidModule(String),
    #[error("invalid cochain: {0}")]
    InvalidCochain(String),
    #[error("2-cochain violates the cocycle condition")]
    NotACocycle,
    #[error("2-cocycle is not normalized")]
    NotNormalized,
    #[error("invalid double complex: {0}")]
    InvalidComplex(String),
    #[error("element is not a cocycle for the vertical differential")]
    NotVerticalCocycle,
    #[error(
        "horizontal image is not a vertical boundary; the class is not defined on the E2 page"
    )]
    NotVerticalBoundary,
    #[error("special fibre has no components")]
    EmptyFibre,
    #[error("dual graph of the special fibre is disconnected")]
    DisconnectedDualGraph,
    #[error("place {0} appears more than once")]
    RepeatedPlace(String),
    #[error("curve carries no map to a conic")]
    NoConicStructure,
    #[error("{0} elements exceed the exhaustive-search limit")]
    TooLarge(u64),
}
