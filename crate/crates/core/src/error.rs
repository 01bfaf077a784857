use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dim(String),
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: undeclared vertex `{name}`")]
    UndeclaredVertex { line: usize, col: usize, name: String },
    #[error("{line}:{col}: relations must be monomial (a single composite of arrows)")]
    NonMonomial { line: usize, col: usize },
    #[error("algebra is infinite-dimensional: nonzero paths longer than {0} arrows")]
    InfiniteDimensional(usize),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("representation violates relation `{0}`")]
    RelationViolated(String),
    #[error("{0} requires an algebra without relations")]
    NotHereditary(&'static str),
    #[error("module has a projective direct summand")]
    ProjectiveSummand,
    #[error("projective dimension exceeds the cap {0}")]
    PdCap(usize),
    #[error("decomposition failed: no splitting endomorphism found ({0})")]
    DecomposeFailed(String),
    #[error("not a complex: d∘d ≠ 0 at degree {0}")]
    NotComplex(i32),
    #[error("not a chain map at degree {0}")]
    NotChainMap(i32),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate mutation: {0}")]
    Degenerate(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("object spec, offset {pos}: {msg}")]
    ObjSpec { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
