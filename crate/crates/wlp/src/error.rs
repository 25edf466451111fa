//! Error type shared across the library.

/// Everything that can go wrong outside of plain programming errors.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("polytope is unbounded in coordinate {0}")]
    UnboundedCoordinate(usize),

    #[error("feasible region is unbounded")]
    Unbounded,

    #[error("polytope has no lattice points / is empty")]
    EmptyPolytope,

    #[error("enumeration node budget of {0} exceeded")]
    BudgetExceeded(u64),

    #[error("basis enumeration budget exceeded in period_bound ({0} candidate bases)")]
    PeriodBudgetExceeded(u128),

    #[error("samples are inconsistent with degree {degree}, period {period} at t = {at}")]
    InconsistentSamples {
        degree: usize,
        period: u32,
        at: String,
    },

    #[error("no period up to {0} fits the samples with zero holdout residuals")]
    PeriodSearchExhausted(usize),

    #[error("leading coefficient differs across residue classes")]
    ResidueDependentLeading,

    #[error("weight is not a counting family: {0}")]
    NonCountingWeight(String),

    #[error("k-th root of a negative number requested")]
    NegativeRoot,

    #[error("maximize did not close the bound sandwich within k_max = {k_max} (last bounds {lo}..={hi})")]
    MaxIterations { k_max: u32, lo: String, hi: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
