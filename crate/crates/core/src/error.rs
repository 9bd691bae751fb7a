use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    /// The operands share a factor, so no multiplicative inverse exists.
    #[error("no inverse exists: gcd is {gcd}")]
    NoInverse { gcd: BigInt },

    #[error("equation has no integer solution: gcd {gcd} does not divide the right-hand side")]
    Unsolvable { gcd: BigInt },

    /// Two moduli of a congruence system are not coprime. Indices are 0-based.
    #[error("moduli {left_modulus} (#{left}) and {right_modulus} (#{right}) share the factor {gcd}")]
    NonCoprimeModuli {
        left: usize,
        right: usize,
        left_modulus: BigInt,
        right_modulus: BigInt,
        gcd: BigInt,
    },

    #[error("oracle input {value} exceeds the bound {bound}")]
    OracleBound { value: BigInt, bound: u64 },

    #[error("invalid benchmark config: {0}")]
    Config(String),

    #[error("absolute-remainder variant took more steps than the positive one on ({a}, {b})")]
    DominanceViolation { a: BigInt, b: BigInt },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
