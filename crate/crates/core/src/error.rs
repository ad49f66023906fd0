use thiserror::Error;

/// Errors raised by constructions and certificates in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {n} is outside the supported range {min}..={max}")]
    DimensionOutOfRange { n: u32, min: u32, max: u32 },

    #[error("expected a cell of dimension {expected}, found dimension {found}")]
    CellDimension { expected: String, found: usize },

    #[error("cell dimension k={k} is out of range for n={n}")]
    CellDimensionOutOfRange { n: u8, k: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },

    #[error("invalid cell: {0}")]
    InvalidCell(String),

    #[error("invalid color cycle: {0}")]
    InvalidCycle(String),

    #[error("cycle of length {len} is not Hamiltonian on {n} colors; use build_cycle_surface")]
    NotHamiltonian { len: usize, n: u8 },

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("not a closed surface: {0}")]
    NotASurface(String),

    #[error("surface is not of the form T(Z): {0}")]
    NotCycleSurface(String),

    #[error("genus requires a connected surface, found {components} components")]
    Disconnected { components: usize },

    #[error("Euler numerator 2 - v + e - f = {numerator} is {reason}")]
    EulerInconsistency { numerator: i64, reason: &'static str },

    #[error(
        "no Hamiltonian decomposition of K_{n} exists: every vertex of K_n has degree n-1, \
         which is odd for even n, so K_n cannot split into Hamiltonian cycles (n must be odd and >= 3)"
    )]
    EvenOrder { n: u8 },

    #[error("decomposition rejected: {0}")]
    DecompositionRejected(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("{0}")]
    Domain(String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
