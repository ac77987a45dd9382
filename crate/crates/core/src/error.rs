use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a separation: {0}")]
    NotASeparation(String),

    #[error("invalid vertex pair ({0}, {1}): connectivity is only defined for distinct non-adjacent vertices")]
    InvalidPair(usize, usize),

    #[error("degree statistics are undefined for the empty graph")]
    UndefinedDegree,

    #[error("brute-force budget exceeded: {what} needs {needed} units, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed document: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
