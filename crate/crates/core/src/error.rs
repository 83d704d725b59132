use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("beta = {beta} outside the admissible interval ({lo}, {hi}) for f = {f}")]
    BetaOutOfRange { f: u32, beta: f64, lo: f64, hi: f64 },

    /// beta equals gamma at f = 6; the tile degenerates to the cube face.
    #[error("beta = {beta} is the degenerate value gamma = 2/3 for f = 6")]
    DegenerateBeta { beta: f64 },

    /// beta = 1 - 2/f makes a = b, a rhombus (a4 tile).
    #[error("beta = {beta} = 1 - 2/{f} reduces the tile to a rhombus (a = b)")]
    RhombusReduction { f: u32, beta: f64 },

    #[error("moduli parameter t = {t} outside ({lo}, {hi}) for f = {f}")]
    ModuliOutOfRange { f: u32, t: f64, lo: f64, hi: f64 },

    #[error("singular configuration: {0}")]
    SingularConfiguration(String),

    #[error("flip parameters rejected: {0}")]
    InvalidFlip(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degenerate family: {0}")]
    DegenerateFamily(String),

    #[error("inconsistent quadrilateral: boundary walk misses its start by {closure:e}")]
    InconsistentQuadrilateral { closure: f64 },

    #[error("geometric inconsistency: vertex copies disagree by {discrepancy:e}")]
    GeometricInconsistency { discrepancy: f64 },

    #[error("no quadrilateral with these angles: {0}")]
    NoQuadrilateral(String),

    #[error("malformed tiling data: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
