use thiserror::Error;

/// Errors raised by the algebraic operations and file parsers of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("signature mismatch: {0:?} vs {1:?}")]
    SignatureMismatch(Vec<usize>, Vec<usize>),

    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(usize, usize),

    #[error("invalid partial bijection: {0}")]
    InvalidPartialBijection(String),

    #[error("not a rook matrix: {0}")]
    NotRookMatrix(String),

    #[error("element is not an idempotent")]
    NotIdempotent,

    #[error("invalid standard morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid Bratteli diagram: {0}")]
    InvalidDiagram(String),

    #[error("level {level} out of range (depth {depth})")]
    LevelOutOfRange { level: usize, depth: usize },

    #[error("elements belong to different diagrams")]
    DiagramMismatch,

    #[error("cannot push an element from level {from} down to level {to}")]
    BackwardPush { from: usize, to: usize },

    #[error("invalid partial algebra: {0}")]
    InvalidAlgebra(String),

    #[error("axiom {0} needs a unit element")]
    MissingUnit(&'static str),

    #[error("not an MV-algebra: {0}")]
    NotMvAlgebra(String),

    #[error("monoid fails the Foulis preconditions: {0}")]
    NotFoulis(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("not a prefix code: {0}")]
    NotPrefixCode(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("element is not in the gauge monoid")]
    NotGauge,

    #[error("element is not representable at level {0}")]
    NotRepresentable(usize),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no factorization into Lukasiewicz chains matches an algebra of size {0}")]
    NoFactorization(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
