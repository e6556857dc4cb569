use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible quadratic fields")]
    IncompatibleFields,
    #[error("radicand {0} is not a squarefree positive integer")]
    BadRadicand(u64),
    #[error("not pointed")]
    NotPointed,
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("x not interior")]
    NotInterior,
    #[error("generators insufficient: {0}")]
    GeneratorsInsufficient(String),
    #[error("not a member: {0}")]
    NotAMember(String),
    #[error("s in Gamma")]
    StepInGamma,
    #[error("alpha >= beta")]
    AlphaNotBelowBeta,
    #[error("rational bound")]
    RationalBound,
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("not OHFM")]
    NotOhfm,
    #[error("bound exhausted")]
    BoundExhausted,
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}
