use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::pipeline::VariantFlag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation that needs a series without constant term got one.
    #[error("constant coefficient must be 0, found {0}")]
    NonZeroConstant(BigInt),

    /// A group-averaged sum that must count objects did not land on an integer.
    #[error("coefficient of x^{degree} is {value}, expected an integer")]
    NonIntegral { degree: usize, value: BigRational },

    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("oracle enumeration is limited to n <= {max} for variant {variant}, got n = {n}")]
    OracleLimit {
        n: usize,
        max: usize,
        variant: VariantFlag,
    },

    #[error("graph is not a C-tree")]
    NotCTree,

    #[error("planted series did not stabilise within {0} iterations")]
    NoFixedPoint(usize),
}
