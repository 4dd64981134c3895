//! Crate-wide error type.

use crate::simulator::Trajectory;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Coefficient hypotheses violated (min a(x) > 0 and max b(x) < 0 are required).
    #[error("invalid coefficients: {0}")]
    InvalidCoefficients(String),

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    /// Two consecutive eigenvalues coincide within tolerance. The continuous
    /// spectrum is simple, so this signals an under-resolved discretization.
    #[error("eigenvalue multiplicity detected near index {index} (gap {gap:.3e})")]
    EigenvalueMultiplicity { index: usize, gap: f64 },

    #[error("mode index {index} out of range (1..={resolved})")]
    ModeIndexOutOfRange { index: usize, resolved: usize },

    #[error("H1_0 norm requires vanishing boundary values (|f(0)| = {left:.3e}, |f(1)| = {right:.3e})")]
    NonVanishingBoundary { left: f64, right: f64 },

    #[error("basis under-resolved: {0}")]
    UnderResolved(String),

    #[error("uncontrollable at this resolution: |det| = {det:.3e}")]
    Uncontrollable { det: f64 },

    #[error("controllability matrix ill-conditioned: cond = {cond:.3e} > 1e12")]
    IllConditioned { cond: f64 },

    #[error("matrix plus {delta}*I is not Hurwitz (max Re eigenvalue = {max_re:.6})")]
    NotHurwitz { delta: f64, max_re: f64 },

    /// The feasibility search exhausted the resolved modes. Slacks of the two
    /// conditions at the last candidate are reported (both must be <= 0).
    #[error("certificate mode cap {cap} exceeded: slacks at last candidate were cond1 = {cond1:.4}, cond2 = {cond2:.4}")]
    CapExceeded { cap: usize, cond1: f64, cond2: f64 },

    #[error("quadrature inconsistency: {0}")]
    QuadratureInconsistency(String),

    #[error("growth envelope is not strictly increasing between {at_lo} and {at_hi}")]
    NonMonotoneEnvelope { at_lo: f64, at_hi: f64 },

    #[error("config: {0}")]
    Config(String),

    /// Finite-time blow-up proxy tripped (norm above 1e12 or non-finite values).
    /// The trajectory integrated so far is attached.
    #[error("blow-up detected at t = {time:.6}")]
    BlowUp { time: f64, partial: Box<Trajectory> },

    #[error("analysis: {0}")]
    Analysis(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end:
    /// 2 validation/design errors, 3 blow-up aborts, 4 failed monitors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BlowUp { .. } => 3,
            Error::Analysis(_) => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
