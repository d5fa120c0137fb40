//! Exact decomposition of zero-dimensional polynomial systems over the
//! rationals into triangular components that partition the zero set with
//! multiplicity, plus an independent local-multiplicity counter built on
//! dual spaces.

pub mod charset;
pub mod decomp;
pub mod dual;
pub mod error;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod prem;
pub mod report;
pub mod solve;
pub mod univar;
pub mod vars;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
