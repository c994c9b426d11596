use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element label `{0}`")]
    DuplicateElement(String),
    #[error("universe must have at least one element")]
    EmptyUniverse,
    #[error("{what}: size {found} exceeds the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        found: usize,
    },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("rank {rank} is outside a universe of size {size}")]
    RankOutOfRange { rank: usize, size: usize },
    #[error("relation must be reflexive")]
    NotReflexive,
    #[error("{0}")]
    InvalidFamily(String),
    #[error("not a lattice ideal: {0}")]
    NotAnIdeal(String),
    #[error("ideal is not prime: meet of {0} and {1} lies in the ideal but neither factor does")]
    NotPrime(String, String),
    #[error("not a σ-ideal: {0}")]
    NotSigmaIdeal(String),
    #[error("σ is not supremal: pair ({0}, {1}) has no σ-least upper bound")]
    NotSupremal(String, String),
    #[error("generated σ-ideal is the whole carrier, so it is not proper")]
    NotProper,
    #[error("cannot generate a σ-ideal from the empty set")]
    EmptyGenerator,
    #[error("generation routes disagree: Σλ gives {sigma_lambda}, πL gives {pi_l}")]
    RouteMismatch { sigma_lambda: String, pi_l: String },
    #[error("least σ-ideal containing {tested} (tested at {point}) does not exist")]
    UpsilonUndefined { point: String, tested: String },
    #[error("antichain is invalid: {0}")]
    InvalidAntichain(String),
    #[error("not an actual clan: {0}")]
    NotActualClan(String),
    #[error("granule of {point} leaves the actual points")]
    GammaRange { point: String },
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("results mix operator tags {0} and {1}")]
    MixedTags(String, String),
    #[error("map is not total: {0}")]
    NotTotal(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("missing input: {0}")]
    MissingInput(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("suite `{suite}` does not support {generator} generation")]
    UnsupportedGenerator {
        suite: String,
        generator: &'static str,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable message code printed by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownElement(_) => "E100",
            Error::DuplicateElement(_) => "E101",
            Error::EmptyUniverse => "E102",
            Error::GuardExceeded { .. } => "E103",
            Error::SizeMismatch { .. } => "E104",
            Error::RankOutOfRange { .. } => "E105",
            Error::NotReflexive => "E200",
            Error::InvalidFamily(_) => "E201",
            Error::NotAnIdeal(_) => "E202",
            Error::NotPrime(..) => "E203",
            Error::NotSigmaIdeal(_) => "E204",
            Error::NotSupremal(..) => "E205",
            Error::NotProper => "E206",
            Error::EmptyGenerator => "E207",
            Error::RouteMismatch { .. } => "E208",
            Error::UpsilonUndefined { .. } => "E209",
            Error::InvalidAntichain(_) => "E210",
            Error::NotActualClan(_) => "E211",
            Error::GammaRange { .. } => "E212",
            Error::InvalidSpace(_) => "E213",
            Error::MixedTags(..) => "E214",
            Error::NotTotal(_) => "E215",
            Error::Schema { .. } => "E300",
            Error::MissingInput(_) => "E301",
            Error::Unknown { .. } => "E302",
            Error::UnsupportedGenerator { .. } => "E303",
            Error::Internal(_) => "E900",
        }
    }
}
