use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("root search region is infinite: {0}")]
    InfiniteSearch(String),
    #[error("orbit exceeds the size cap of {cap} elements")]
    OrbitCap { cap: usize },
    #[error("Cartan matrix is not of ADE type: {0}")]
    NotAde(String),
    #[error("unsupported subsystem query: {target} in {ambient}")]
    Unsupported { target: String, ambient: String },
    #[error("parabolic subdiagram is not of finite type: {0}")]
    InfiniteType(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("unknown key: {0}")]
    UnknownKey(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
