use thiserror::Error;

/// Errors raised while validating a decision problem or running the pipeline.
///
/// Variants fall into two families: input validation (bad data, bad shapes,
/// malformed files) and computation failures (inputs that are well formed but
/// make a formula undefined). [`Error::is_validation`] tells them apart; the
/// command-line front end maps them onto exit codes 1 and 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: lower bound exceeds upper bound")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("scale factor must be non-negative, got {0}")]
    NegativeFactor(f64),

    #[error("interval product requires non-negative bounds, got [{lo}, {hi}]")]
    NegativeOperand { lo: f64, hi: f64 },

    #[error("invalid {field}: {reason}")]
    Invalid { field: String, reason: String },

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("pairwise matrix is not reciprocal at ({row}, {col})")]
    NotReciprocal { row: usize, col: usize },

    #[error("failed to parse input: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("normalization undefined for attribute {attribute}: lower-bound column sum is zero")]
    NormalizationUndefined { attribute: String },

    #[error(
        "cost normalization needs strictly positive lower bounds; cell ({plan}, {attribute}) has lower bound {value}"
    )]
    ReciprocalUndefined {
        plan: String,
        attribute: String,
        value: f64,
    },

    #[error("column sum is zero for attribute {attribute}")]
    ZeroColumnSum { attribute: String },

    #[error("weights undefined: {0}")]
    WeightsUndefined(String),

    #[error("interval weight normalization undefined: sum of lower products is zero")]
    DivisionUndefined,

    #[error("power iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
}

impl Error {
    pub(crate) fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn mismatch(what: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            what: what.into(),
            expected,
            found,
        }
    }

    /// True for errors caused by malformed or inconsistent input.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::NormalizationUndefined { .. }
                | Error::ReciprocalUndefined { .. }
                | Error::ZeroColumnSum { .. }
                | Error::WeightsUndefined(_)
                | Error::DivisionUndefined
                | Error::NoConvergence { .. }
        )
    }

    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        if self.is_validation() {
            1
        } else {
            2
        }
    }

    /// Attach attribute and plan names to column-level errors, which only know indices.
    pub(crate) fn in_column(self, attribute: &str, plans: &[String]) -> Self {
        match self {
            Error::NormalizationUndefined { .. } => Error::NormalizationUndefined {
                attribute: attribute.to_string(),
            },
            Error::ZeroColumnSum { .. } => Error::ZeroColumnSum {
                attribute: attribute.to_string(),
            },
            Error::ReciprocalUndefined { plan, value, .. } => Error::ReciprocalUndefined {
                plan: plan
                    .parse::<usize>()
                    .ok()
                    .and_then(|i| plans.get(i).cloned())
                    .unwrap_or(plan),
                attribute: attribute.to_string(),
                value,
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
