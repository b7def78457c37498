//! Exact computer algebra for the symplectic-fermion quasi-Hopf algebras
//! `Q(N, beta)` and the non-semisimple link and lens-space invariants built
//! from them.
//!
//! Everything is computed over the cyclotomic field Q(zeta8); there is no
//! floating point anywhere. The main layers are:
//!
//! * [`scalars`]: the field Q(zeta8) and the admissible ribbon parameters.
//! * [`algebra`]: the algebra `Q(N, beta)` with its full quasi-Hopf,
//!   quasi-triangular and ribbon structure, (co)integrals and an axiom
//!   verification suite, plus the distinguished subalgebra of `Q(2, beta)`.
//! * [`reps`]: modules as exact matrix representations (simples, projective
//!   covers, the four-dimensional `P_mu` family, tensor products, restriction,
//!   Hom spaces).
//! * [`traces`]: the categorical trace, the modified trace on projectives via
//!   symmetrised cointegrals, and the pullback trace along restriction.
//! * [`links`]: framed unknot, framed Hopf link and (2,m)-torus knot
//!   evaluators under any trace regime.
//! * [`lens`]: continued fractions and linking matrices, the centre with its
//!   S/T-action, and the lens-space invariants.

pub mod algebra;
pub mod lens;
pub mod linalg;
pub mod links;
pub mod reps;
pub mod scalars;
pub mod traces;

pub use algebra::{Algebra, AlgebraElement, BasisWord, LinearForm, TensorElement};
pub use scalars::{make_beta, BetaChoice, CycScalar};

/// Errors surfaced by the engine. All arithmetic is exact, so these are
/// contract violations rather than numerical failures.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("division by zero in Q(zeta8)")]
    DivisionByZero,
    #[error("invalid beta choice (N={n}, k={k}): {reason}")]
    InvalidBeta { n: usize, k: u8, reason: String },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("generator matrices violate the defining relations: {0}")]
    RelationViolation(String),
    #[error("map does not intertwine the algebra action")]
    NotIntertwiner,
    #[error("module is not projective over the relevant algebra")]
    NotProjective,
    #[error("element is not central")]
    NotCentral,
    #[error("module does not lie in the trace's tensor ideal")]
    NotInIdeal,
    #[error("element does not act as a scalar")]
    NotScalarAction,
    #[error("torus knot parameter must be odd, got {0}")]
    EvenM(i64),
    #[error("parameters must be coprime positive integers, got ({0}, {1})")]
    NotCoprime(i64, i64),
    #[error("dimension mismatch: expected {expected}, found {found} ({what})")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("cointegral solution space has dimension {0}, expected 1")]
    SolutionSpaceDimension(usize),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
