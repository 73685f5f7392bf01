use thiserror::Error;

/// Errors raised by the coboson numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("purity {purity} is not achievable with {modes} Schmidt modes")]
    UnachievablePurity { purity: f64, modes: usize },

    #[error("mode index {index} out of range for {modes} Schmidt modes")]
    IndexOutOfRange { index: usize, modes: usize },

    #[error("mode index {0} listed more than once")]
    DuplicateIndex(usize),

    #[error("normalization factor chi_{0} vanishes")]
    VanishingChi(usize),

    #[error("chi table holds N <= {nmax}, but chi_{requested} was requested")]
    TableTooShort { nmax: usize, requested: usize },

    #[error("outcome ({n1}, {n2}, {n3}) does not hold N + 1 = {total} bifermions")]
    NonConserving {
        n1: usize,
        n2: usize,
        n3: usize,
        total: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal consistency violated: {0}")]
    Inconsistent(String),

    #[error("oracle capacity exceeded: {0}")]
    Capacity(String),

    #[error("cannot read distribution file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
