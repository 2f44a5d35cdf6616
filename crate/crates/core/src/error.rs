use crate::three_level::CaseLabel;
use thiserror::Error;

/// Errors shared across the engine-analysis modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A level spacing was zero, negative, or non-finite.
    #[error("level spacing must be strictly positive, got {0}")]
    InvalidSpacing(f64),

    /// Scale factor for a spectrum must be strictly positive.
    #[error("scale factor must be strictly positive, got {0}")]
    InvalidScale(f64),

    /// A spectrum-family parameter (frequency, well width, level count) was invalid.
    #[error("invalid spectrum parameter: {0}")]
    InvalidParameter(String),

    /// Bath temperatures must be strictly positive and finite.
    #[error("temperature must be strictly positive, got {0}")]
    InvalidTemperature(f64),

    /// Two objects that must share a dimension did not.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A matrix handed to `HermitianOperator` was not Hermitian.
    #[error("matrix is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),

    /// Eigenbasis operations reject (near-)degenerate spectra; the smallest
    /// gap relative to the spectral span is reported.
    #[error("degenerate eigenbasis: smallest gap {gap:e} of span {span:e}")]
    DegenerateEigenbasis { gap: f64, span: f64 },

    /// ξ = 1 + (Δ₂ʰ−Δ₂ˡ)/(Δ₁ʰ−Δ₁ˡ) is undefined when Δ₁ʰ = Δ₁ˡ.
    #[error("xi is undefined: lower spacing does not change")]
    XiUndefined,

    /// θ = F(ξ,λ)/F(ξ,η) is undefined when F(ξ,η) = 0.
    #[error("theta is undefined: F(xi, eta) = 0")]
    ThetaUndefined,

    /// The requested analysis only applies to a specific spacing-change case.
    #[error("{operation} not applicable in case {found}")]
    NotApplicable {
        operation: &'static str,
        found: CaseLabel,
    },

    /// An F value is exactly zero, so the sample sits on a sub-case boundary.
    #[error("F value is exactly zero: sub-case boundary")]
    BoundarySubcase,

    /// A dark-state point with |Ω| = 0 has a vanishing level spacing.
    #[error("dark-state point with |Omega| = 0 has degenerate spacing")]
    DegenerateSpacing,
}
