use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a poset needs at least one element")]
    EmptyCarrier,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("order relation is not antisymmetric: cycle {}", .cycle.join(" <= "))]
    AntisymmetryViolation { cycle: Vec<String> },
    #[error("relation is not reflexive and transitive: {0}")]
    NotAnOrder(String),
    #[error("{what} exceeds the enumeration cap of {cap}")]
    SizeCap { what: &'static str, cap: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("element index {0} is out of range")]
    UnknownElement(usize),
    #[error("poset has no {0} element")]
    NotBounded(&'static str),
    #[error("`{label}` is not the {which} element")]
    WrongBound { which: &'static str, label: String },
    #[error("map is not a permutation of the carrier")]
    NotAPermutation,
    #[error("valuation is not monotone")]
    NotMonotone,
    #[error("valuation is not an orthovaluation")]
    NotOrthovaluation,
    #[error("not an order-reversing involution: {0}")]
    NotAntitoneInvolution(String),
    #[error("not an orthocomplemented poset: {0}")]
    NotAnEoc(String),
}
