use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("input system is degenerate: {0}")]
    DegenerateInput(String),

    #[error("divisor has no main variable")]
    ConstantDivisor,

    #[error("operation not supported here: {0}")]
    Unsupported(String),

    #[error("system is not zero-dimensional on this branch: {0}")]
    NotZeroDimensional(String),

    #[error("multiplicity bound {bound} too small, needs at least {needed}")]
    BoundTooSmall { bound: u32, needed: u32 },

    #[error("point is not a zero of the system (fails on `{poly}`)")]
    PointNotZero { poly: String },

    #[error("dual space dimension still growing at order cap {cap}")]
    CapExceeded { cap: u32 },

    #[error("branch collapsed to a degenerate system: {0}")]
    DegenerateBranch(String),
}
