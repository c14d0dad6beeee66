use thiserror::Error;

/// Errors surfaced by the enumeration and character machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("enumeration cap exceeded: more than {cap} elements")]
    CapExceeded { cap: usize },

    #[error("generator matrix is not invertible")]
    NotInvertible,

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("subgroup index {0} exceeds the configured cap of {1}")]
    IndexTooLarge(u64, u64),

    #[error("primitivity of a degree-{0} character cannot be decided generically")]
    PrimitivityUndecidable(u64),

    #[error("no faithful degree-{0} character exists")]
    NoFaithfulCharacter(u64),

    #[error("eigenspace splitting failed after {0} rounds")]
    SplitFailed(usize),

    #[error("unsupported family parameters: q = {q}, projective = {projective}")]
    UnsupportedFamily { q: u64, projective: bool },

    #[error("max_M is undefined for k = {0}: no admissible index pairs")]
    NoAdmissiblePairs(u64),

    #[error("invalid group specification: {0}")]
    BadSpec(String),

    #[error("atlas entry {entry}: {message}")]
    BadAtlasEntry { entry: String, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
