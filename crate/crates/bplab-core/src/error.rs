use core::fmt;

/// Errors surfaced by the simulation core.
///
/// Censoring of stopping times is *not* an error; censored samples carry a
/// flag on their record instead.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter is outside its documented domain.
    InvalidParam(&'static str),
    /// A requested value cannot be reached or represented (e.g. special
    /// function overflow, or a scale-integral query beyond its a.s. limit).
    OutOfRange(&'static str),
    /// An on-demand extension hit its budget before satisfying the query.
    ExtensionBudget { what: &'static str, budget: usize },
    /// A sample set is too small for the requested statistic.
    Undersized { n: usize, min: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParam(what) => write!(f, "invalid parameter: {what}"),
            Error::OutOfRange(what) => write!(f, "out of range: {what}"),
            Error::ExtensionBudget { what, budget } => {
                write!(f, "extension budget of {budget} exhausted while {what}")
            }
            Error::Undersized { n, min } => {
                write!(f, "sample of size {n} is below the required minimum {min}")
            }
        }
    }
}

impl core::error::Error for Error {}
