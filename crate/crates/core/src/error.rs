use thiserror::Error;

/// Every failure the library can report.
///
/// `PathDisagreement`, `CriterionDisagreement` and `VerificationFailed` are
/// never expected on valid input: they mean two computations that must agree
/// did not, which is a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("skew order r={r} requires m={m} to divide r*n={rn}")]
    SkewDivisibilityViolated { m: usize, r: usize, rn: usize },
    #[error("ambient field of size {p}^{degree} exceeds the cap of {cap} elements")]
    AmbientTooLarge { p: u64, degree: usize, cap: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("GF(q^{0}) is not a subfield of the ambient field")]
    UndeclaredSubfield(usize),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd/lcm of two zero polynomials")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPoly,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("linearized polynomial has zero coefficient at x")]
    ZeroLowestCoefficient,
    #[error("element {0} is not in the base field GF(q)")]
    NotInBaseField(String),
    #[error("order search exceeded the cap of {0}")]
    OrderCapExceeded(u64),
    #[error("q and n={0} are not coprime")]
    NotCoprime(usize),
    #[error("polynomial does not divide x^{0} - 1")]
    NotADivisor(usize),
    #[error("polynomial does not right-divide x^[rn] - x")]
    NotARightDivisor,
    #[error("exponent set is not closed under multiplication by q^m mod n")]
    NotCosetClosed,
    #[error("desk-scale bound exceeded: {0}")]
    DeskScaleExceeded(String),
    #[error("linearized polynomials of different skew orders {0} and {1}")]
    MixedSkewOrder(usize, usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("code is not cyclic")]
    NotCyclic,
    #[error("code is not skew cyclic of order {0}")]
    NotSkewCyclic(usize),
    #[error("code is not skew cyclic of any order")]
    NotSkewCyclicAnyOrder,
    #[error("generator and check polynomials are not coprime")]
    NotCoprimeGH,
    #[error("enumeration of {size} codewords exceeds the cap of {cap}")]
    EnumerationCapExceeded { size: u128, cap: u64 },
    #[error("computation paths disagree for {quantity}: {detail}")]
    PathDisagreement { quantity: String, detail: String },
    #[error("degeneracy criteria disagree: {0}")]
    CriterionDisagreement(String),
    #[error("check polynomials violate (ab)^k h'(x) = h(abx)")]
    CheckPolyMismatch,
    #[error("beta^[r]/beta is not a nonzero element of GF(q)")]
    NoBetaForB,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("the check polynomial of the Galois closure is not central")]
    H0NotCentral,
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
