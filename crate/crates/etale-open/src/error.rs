use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    CompositeModulus(u64),
    #[error("field of size {p}^{m} exceeds the enumeration budget")]
    DegreeTooLarge { p: u64, m: u32 },
    #[error("F_{p}^{r} is not a subfield of F_{p}^{m}")]
    NotASubfield { p: u64, r: u32, m: u32 },
    #[error("operation needs a {expected} context, got {got}")]
    WrongContext { expected: &'static str, got: String },
    #[error("zero polynomial has no Sturm sequence")]
    ZeroPolynomial,
    #[error("polynomial is not monic in the fiber variable")]
    NotMonic,
    #[error("affine scale factor must be nonzero")]
    ZeroScale,
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("pair validation is not supported over {0}; validate over Q instead")]
    UnsupportedCoefficientField(String),
    #[error("enumeration of {needed} points exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("coefficient denominator is divisible by p = {0}")]
    BadDenominator(u64),
    #[error("ball audit requires a known member as its center")]
    NotAMember,
    #[error("polynomial coefficients do not fit the extension basis")]
    BasisMismatch,
    #[error("val_2 of the Steinitz exponent is infinite (field is quadratically closed)")]
    QuadraticallyClosed,
    #[error("element of F_{p}^{n} does not lie in the Steinitz field")]
    ElementNotInField { p: u64, n: u32 },
    #[error("tower exponents must share one 2-adic valuation: {0:?}")]
    TowerValuationMismatch(Vec<u32>),
    #[error("witness search exhausted below bound {bound}; raise the precision")]
    SearchExhausted { bound: u64 },
    #[error("beta shifts must be pairwise distinct")]
    DegenerateBetas,
    #[error("division by zero in {0}")]
    DivisionByZero(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
