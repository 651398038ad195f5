use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid pattern `{text}`: {reason}")]
    BadPattern { text: String, reason: String },

    #[error("pattern length {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("puncture word has {got} symbols but the host has {expected} stars")]
    PunctureMismatch { expected: usize, got: usize },

    #[error("coloring arity {got} does not match the required {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("cell {cell} lies outside the table window (level {level} > {window})")]
    OutsideWindow {
        cell: String,
        level: u64,
        window: u64,
    },

    #[error("coloring has no period vector (only modular formula colorings do)")]
    NonPeriodic,

    #[error("palette must contain at least one color")]
    EmptyPalette,

    #[error("palette size {0} exceeds the supported maximum of {1}")]
    PaletteTooLarge(u32, u32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown catalog coloring `{0}`")]
    UnknownCatalog(String),

    #[error("invalid catalog parameters: {0}")]
    BadCatalogParams(String),

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("the residue space is too large to enumerate ({0} instances); use the concrete verifier")]
    ResidueSpaceTooLarge(u128),

    #[error("the without-loss-of-generality reduction is unsound for this coloring (offset coordinate is first or last)")]
    UnsoundWlog,

    #[error("empty shape sequence")]
    EmptySequence,

    #[error("{0}")]
    Unsupported(String),
}
