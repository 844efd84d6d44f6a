use thiserror::Error;

/// A violated C-complex axiom, reported by [`crate::validate`] and the text parser.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("a C-complex needs at least one component")]
    NoComponents,
    #[error("expected {expected} genus entries, found {found}")]
    GenusLength { expected: usize, found: usize },
    #[error("expected {expected} claspwords, found {found}")]
    WordCount { expected: usize, found: usize },
    #[error("component {component} has negative genus {genus}")]
    NegativeGenus { component: usize, genus: i64 },
    #[error("invalid clasp label {0:?} (labels are nonempty tokens over [A-Za-z0-9_])")]
    InvalidLabel(String),
    #[error("invalid sign {sign} on clasp {label} (must be +1 or -1)")]
    InvalidSign { label: String, sign: i64 },
    #[error("clasp label {0} is used twice")]
    DuplicateLabel(String),
    #[error("clasp {label} has both ends on component {component}")]
    SelfClasp { label: String, component: usize },
    #[error("clasp {label} has end {end} outside 1..={n}")]
    EndOutOfRange { label: String, end: i64, n: usize },
    #[error("claspword {component} references unknown clasp {label}")]
    UnknownLabel { label: String, component: usize },
    #[error("clasp {label} is missing from claspword {component}")]
    MissingOccurrence { label: String, component: usize },
    #[error("clasp {label} occurs too often or in a non-incident claspword ({component})")]
    ExtraOccurrence { label: String, component: usize },
    #[error("clasp {label} is read with both signs")]
    SignMismatch { label: String },
}

/// Errors from operations on validated descriptors.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("component index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("indices must differ (got {0} twice)")]
    EqualIndices(usize),
    #[error("index {0} is repeated")]
    RepeatedIndex(usize),
    #[error("index {0} is repeated in the sublink selection")]
    DuplicateIndex(usize),
    #[error("triple ({0}, {1}, {2}) is not strictly increasing")]
    NotStrictlyOrdered(usize, usize, usize),
    #[error("component {component} is not in the scope")]
    NotInScope { component: usize },
    #[error("relabeling is not a bijection on the clasp labels: {0}")]
    NonBijective(String),
    #[error("position {position} is out of range for claspword {component} of length {len}")]
    PositionOutOfRange { component: usize, position: usize, len: usize },
    #[error("clasps {first} and {second} have different partner components ({first_partner} and {second_partner})")]
    DifferentPartners {
        first: String,
        second: String,
        first_partner: usize,
        second_partner: usize,
    },
    #[error("expected {expected} components, got {found}")]
    WrongComponentCount { expected: usize, found: usize },
    #[error("component counts differ: {left} vs {right}")]
    ComponentCountMismatch { left: usize, right: usize },
    #[error("{side} descriptor has lk({}, {}) = {value}; the vanishing-linking hypothesis fails", .pair.0, .pair.1)]
    NonvanishingLinking {
        side: Side,
        pair: (usize, usize),
        value: i64,
    },
    #[error("{found} clasps exceed the brute-force bound of {bound}")]
    BoundExceeded { bound: usize, found: usize },
    #[error("transcript replay diverged at record {index}")]
    ReplayMismatch { index: usize },
}

/// Which argument of a two-descriptor operation an error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
