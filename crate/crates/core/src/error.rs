use crate::series::EvalResult;
use crate::C64;

/// Everything that can go wrong while evaluating a function or checking an identity.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HyperError {
    #[error("argument {at} is a pole (non-positive integer within tolerance)")]
    Pole { at: C64 },

    #[error("argument {z} lies on a branch cut")]
    BranchCut { z: C64 },

    #[error("series did not converge within {} terms (last term {:.3e})", .partial.terms_used, .partial.err_estimate)]
    NoConvergence { partial: Box<EvalResult> },

    #[error("argument outside the evaluation domain: {0}")]
    Domain(String),

    #[error("singular parameters: {0}")]
    ParameterSingular(String),

    #[error("route not applicable: {0}")]
    RouteInapplicable(String),

    #[error("divergent series: first term is already the smallest and |z| >= 1")]
    DivergedImmediately,

    #[error("function has a pole at the origin")]
    PoleAtOrigin,

    #[error("Richardson extrapolation unstable: increments {increments:?}")]
    ExtrapolationUnstable { increments: Vec<f64> },

    #[error("alpha-derivative routes disagree: series {series}, finite difference {fd}")]
    RoutesDisagree { series: C64, fd: C64 },

    #[error("unknown relation id `{0}`")]
    UnknownRelation(String),

    #[error("relation not applicable: {0}")]
    Inapplicable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl HyperError {
    /// Short machine-readable name, used in CLI error records.
    pub fn kind(&self) -> &'static str {
        match self {
            HyperError::Pole { .. } => "PoleError",
            HyperError::BranchCut { .. } => "BranchCut",
            HyperError::NoConvergence { .. } => "NoConvergence",
            HyperError::Domain(_) => "DomainError",
            HyperError::ParameterSingular(_) => "ParameterSingular",
            HyperError::RouteInapplicable(_) => "RouteInapplicable",
            HyperError::DivergedImmediately => "DivergedImmediately",
            HyperError::PoleAtOrigin => "PoleAtOrigin",
            HyperError::ExtrapolationUnstable { .. } => "ExtrapolationUnstable",
            HyperError::RoutesDisagree { .. } => "RoutesDisagree",
            HyperError::UnknownRelation(_) => "UnknownRelation",
            HyperError::Inapplicable(_) => "Inapplicable",
            HyperError::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, HyperError>;
