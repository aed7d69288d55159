use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures surfaced by the evaluators, the zero finder and the interlacing checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order nu = {0} is outside [0, {max}]", max = crate::special::NU_MAX)]
    DomainNu(f64),

    #[error("argument x = {0} must be finite and strictly positive")]
    DomainX(f64),

    #[error("Y_nu(x) overflows for nu = {nu}, x = {x}")]
    OverflowNu { nu: f64, x: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no sign change found for {what} after scanning up to x = {reached}")]
    BracketNotFound { what: String, reached: f64 },

    #[error("refinement of {what} did not converge: {detail}")]
    NoConvergence { what: String, detail: String },

    #[error("no breaking witness for nu = {nu}, eps = {eps} with s <= {s_cap}; raise the cap")]
    NotFoundWithinCap { nu: f64, eps: f64, s_cap: usize },

    #[error("only one ordering of {relation} occurs across the given orders")]
    OnlyOneOrdering { relation: String },
}

impl Error {
    /// Machine-readable code for the error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DomainNu(_) => "DOMAIN_NU",
            Error::DomainX(_) => "DOMAIN_X",
            Error::OverflowNu { .. } => "OVERFLOW_NU",
            Error::InvalidParameter(_) => "INVALID_PARAMETER",
            Error::BracketNotFound { .. } => "BRACKET_NOT_FOUND",
            Error::NoConvergence { .. } => "NO_CONVERGENCE",
            Error::NotFoundWithinCap { .. } => "NOT_FOUND_WITHIN_CAP",
            Error::OnlyOneOrdering { .. } => "ONLY_ONE_ORDERING",
        }
    }

    /// True for errors caused by the caller's parameters rather than by the mathematics.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::DomainNu(_)
                | Error::DomainX(_)
                | Error::OverflowNu { .. }
                | Error::InvalidParameter(_)
        )
    }
}
