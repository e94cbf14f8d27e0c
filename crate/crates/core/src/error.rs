use thiserror::Error;

/// Errors raised by field, polynomial, code and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("length n = {n} is not coprime to q = {q}")]
    NotCoprime { n: u64, q: u64 },
    #[error("length must be positive")]
    ZeroLength,
    #[error("field of size {p}^{degree} exceeds the supported bound of 2^24 elements")]
    FieldTooLarge { p: u64, degree: u64 },
    #[error("modulus must be monic of degree at least 1 with coefficients below p")]
    BadModulus,
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("internal search exhausted: {0}")]
    InternalSearchExhausted(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields or code spaces")]
    FieldMismatch,
    #[error("{k} does not divide {m}")]
    NotADivisor { k: u64, m: u64 },
    #[error("element is not in the requested subfield")]
    NotInSubfield,
    #[error("minimal polynomial coefficient outside F_q")]
    CoefficientNotInSubfield,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("generator does not divide x^n - 1 (remainder {remainder:?})")]
    NotAGenerator { remainder: Vec<u32> },
    #[error("codes have different lengths")]
    LengthMismatch,
    #[error("{0} is not a cyclotomic coset leader")]
    InvalidLeader(usize),
    #[error("length {n} is not q^m - 1")]
    LengthNotQmMinus1 { n: u64 },
    #[error("exponent 0 is not allowed here")]
    ExponentZero,
    #[error("exponents {0} and {1} lie in the same cyclotomic coset")]
    DuplicateCoset(usize, usize),
    #[error("element is not normal over F_q")]
    NotNormal,
    #[error("{0} and {1} lie in the same cyclotomic coset")]
    SameCoset(usize, usize),
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("{0} coset leaders exceed the enumeration bound of 24")]
    TooManyLeaders(usize),
    #[error("invalid element code {code} for a field of size {size}")]
    InvalidElement { code: u64, size: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("trace spec has {exponents} exponents but {coeffs} coefficients")]
    SpecShape { exponents: usize, coeffs: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
