use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("{what} index {index} out of range for kappa = {kappa}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        kappa: usize,
    },

    #[error("polynomial is not divisible by X{index}*X{next}^-1 - 1", next = .index + 1)]
    NotDivisible { index: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("coefficient carries a nonzero d-exponent; the averaging map is only defined over Z[s^±1, c^±1]")]
    DExponentInDomain,

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("kappa must be at least 1")]
    ZeroRank,
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
