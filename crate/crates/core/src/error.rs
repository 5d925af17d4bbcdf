use thiserror::Error;

/// Errors produced by the simulation engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("basis of {modes} modes exceeds the index cap of 2^{cap_bits}")]
    DimensionTooLarge { modes: usize, cap_bits: u32 },
    #[error("charge sector {0} contains no states")]
    EmptySector(i64),
    #[error("occupation {0} is not in this basis")]
    NotInBasis(String),
    #[error("index {index} out of range for basis of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("mode {0} is out of bounds for this basis")]
    ModeOutOfRange(String),
    #[error(
        "operator leaves the charge sector of a restricted basis; use the sector-mapping variant"
    )]
    SectorMismatch,
    #[error("exchange requires two distinct modes, got {0} twice")]
    SameMode(String),
    #[error("unknown qubit label `{0}`")]
    UnknownLabel(String),
    #[error("invalid qubit register: {0}")]
    InvalidRegister(String),
    #[error("operands act on different bases or dimensions")]
    BasisMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("schedule value at t=0 is {0}, perturbations must vanish at t=0 (V(0) = 0)")]
    ScheduleViolatesInitialCondition(f64),
    #[error("the empty occupation is not part of this basis")]
    VacuumNotInSector,
    #[error("amplitudes are not normalized: |a|^2 + |b|^2 = {0}")]
    NotNormalized(f64),
    #[error("projectors do not form a complete orthogonal family: {0}")]
    IncompleteProjectors(String),
    #[error("measurement branch has zero probability")]
    ZeroProbabilityCollapse,
    #[error("operator is not hermitian")]
    NonHermitian,
    #[error("dimension {dim} exceeds the dense limit of {limit}")]
    DimensionTooLargeForDense { dim: usize, limit: usize },
    #[error("norm drift {0:e} in one step exceeds 1e-6; reduce the time step")]
    StepNormDrift(f64),
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),
    #[error("observable requires a Fock-space state")]
    WrongBasisKind,
    #[error("requested {requested} states but the grid supports at most {max}")]
    TooManyStates { requested: usize, max: usize },
    #[error("potential is not finite at grid point {0}")]
    NonFinitePotential(usize),
    #[error("invalid grid: {0}")]
    InvalidGridSpec(String),
    #[error("unsupported export format `{0}`")]
    UnsupportedFormat(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("{context}: {source}")]
    Scenario {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// The innermost error beneath any scenario context.
    pub fn root(&self) -> &Error {
        match self {
            Error::Scenario { source, .. } => source.root(),
            other => other,
        }
    }

    pub(crate) fn in_scenario(self, context: impl Into<String>) -> Error {
        Error::Scenario {
            context: context.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
