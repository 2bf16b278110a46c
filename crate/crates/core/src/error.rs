use thiserror::Error;

/// Errors raised while parsing or validating permutations, paths and class
/// descriptors, and while evaluating counting sequences.
///
/// Positions carried by the variants are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid integer token {token:?} at position {position}")]
    InvalidInteger { token: String, position: usize },

    #[error("value {value} at position {position} is out of range 1..={len}")]
    ValueOutOfRange {
        value: u64,
        position: usize,
        len: usize,
    },

    #[error("duplicate value {value} at position {position}")]
    DuplicateValue { value: u32, position: usize },

    #[error("not an involution at i={position}")]
    NotAnInvolution { position: usize },

    #[error("unknown character {ch:?} at offset {offset}")]
    UnknownCharacter { ch: char, offset: usize },

    #[error("only down steps carry labels (step {position})")]
    LabelOnNonDownStep { position: usize },

    #[error("path goes below the x-axis at step {position}")]
    NegativeHeight { position: usize },

    #[error("path ends at height {height}, expected 0")]
    NonzeroFinalHeight { height: usize },

    #[error("partial labelling: down step {position} has no label")]
    PartialLabelling { position: usize },

    #[error("down step {position} is unlabelled")]
    MissingLabel { position: usize },

    #[error("unexpected label on down step {position} in an unlabelled path")]
    UnexpectedLabel { position: usize },

    #[error("{labels} labels given for {downs} down steps")]
    LabelCountMismatch { labels: usize, downs: usize },

    #[error("label {label} of down step {position} is outside 1..={height}")]
    LabelOutOfRange {
        position: usize,
        label: u64,
        height: usize,
    },

    #[error("step index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid class descriptor {0:?}")]
    InvalidDescriptor(String),

    #[error("no path characterization for class {0}")]
    UnsupportedClass(String),

    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),

    #[error("n={n} exceeds the {base} size limit {limit}; pass --force to override")]
    SizeGuard {
        base: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("malformed b-file line {line}: {content:?}")]
    InvalidBFile { line: usize, content: String },

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("{sequence}({n}) overflows u64")]
    Overflow { sequence: &'static str, n: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
