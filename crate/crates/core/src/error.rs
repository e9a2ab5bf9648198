use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined radical: the zero polynomial has no squarefree part")]
    UndefinedRadical,

    #[error("infinitely many roots: the zero polynomial vanishes everywhere")]
    InfinitelyManyRoots,

    #[error("sign sequence of the zero polynomial is empty")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("degenerate base f{index}: zero polynomial")]
    DegenerateBase { index: usize },

    #[error("dependent prefix: W(f1..f{len}) is identically zero")]
    DependentPrefix { len: usize },

    #[error("power-derivative formula needs alpha >= order (alpha = {alpha}, order = {order})")]
    AlphaBelowOrder { alpha: BigUint, order: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("expansion too large: {0}")]
    ExpansionTooLarge(String),

    #[error("basis cap exceeded: a Wronskian of order {needed} is required, cap is {cap}")]
    BasisCapExceeded { needed: usize, cap: usize },

    #[error("degree {0} is too large for dense arithmetic")]
    DegreeTooLarge(BigUint),

    #[error("exponent {0} is too large to materialize")]
    ExponentTooLarge(String),

    #[error("query budget exceeded: hitting set needs {needed} points, cap is {cap}")]
    QueryBudget { needed: BigUint, cap: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Errors caused by a configured size limit rather than by bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::ExpansionTooLarge(_)
                | Error::BasisCapExceeded { .. }
                | Error::DegreeTooLarge(_)
                | Error::ExponentTooLarge(_)
                | Error::QueryBudget { .. }
        )
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
