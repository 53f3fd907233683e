use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: an integer set needs at least one element")]
    EmptyInput,

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("sumset table needs {required_bits} bits, above the cap of {cap_bits}")]
    MemoryCap { required_bits: u128, cap_bits: u128 },

    #[error("{what} has {count} items, above the budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        count: u128,
        budget: u128,
    },

    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("h must be at least 1")]
    ZeroH,

    /// An engine error raised while evaluating a specific input.
    #[error("at A={set:?}, h={h}: {source}")]
    At {
        set: Vec<i64>,
        h: u32,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(self, set: &[i64], h: u32) -> Self {
        match self {
            e @ Error::At { .. } => e,
            e => Error::At {
                set: set.to_vec(),
                h,
                source: Box::new(e),
            },
        }
    }

    /// The error with any `At` location wrapper removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            e => e,
        }
    }
}
