//! Exact computation of invariant rings of finite reflection groups over
//! rings of cyclotomic integers.
//!
//! The library computes closures of matrix groups with entries in Q(zeta_n),
//! projects polynomials onto invariants with the Reynolds operator, and
//! decides whether the invariant ring of an integral representation is a
//! polynomial ring — over the full ring of integers or after inverting a
//! finite set of rational primes.  Verdicts are certified: independence is
//! checked modulo every critical prime ideal, and failures carry an explicit
//! witness invariant.
//!
//! The `catalog` module ships the representations the test suite exercises:
//! the symmetric-group lattices obtained from Craig's difference sets and the
//! primitive rank-two complex reflection groups G4 through G22.

pub mod catalog;
pub mod criteria;
pub mod cyclo;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod matgroup;
pub mod polyring;
pub mod report;
pub mod scenarios;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("coefficient domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("element is not integral: {0}")]
    NonIntegral(String),
    #[error("denominator of {elem} is divisible by {p}")]
    BadDenominator { elem: String, p: u64 },
    #[error("{0} is not a conductor dividing {1}")]
    NotASubfield(u32, u32),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("group closure exceeded the bound of {0} elements")]
    ClosureExceeded(usize),
    #[error("polynomial is not invariant under the group: {0}")]
    NotInvariant(String),
    #[error("generators are algebraically dependent in characteristic zero")]
    DependentGenerators,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("unknown scenario: {0}")]
    UnknownScenario(String),
    #[error("bad configuration: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
