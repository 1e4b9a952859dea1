use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("the map is identically zero")]
    ZeroMap,

    /// `MᵀM` of the real form is not a positive multiple of the identity,
    /// so the map cannot preserve orthogonality.
    #[error("not a positive multiple of a real-linear isometry (max deviation {deviation:.3e})")]
    NotScaledIsometry { deviation: f64 },

    #[error("Re⟨T(iz)|T(z)⟩ = {re_alpha:.3e} is not zero; the map does not preserve orthogonality")]
    NotOrthogonalityPreservingEvidence { re_alpha: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("codomain dimension {dim_k} is below 2·{dim_h}; a mixed-type isometry needs dim_k ≥ 2·dim_h")]
    InsufficientCodomain { dim_h: usize, dim_k: usize },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("invalid canonical spec: {0}")]
    Spec(String),
}
