use crate::diagram::Family;

/// Errors raised by diagram construction, algebra operations and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A block refers to an encoded vertex outside `1..=2k`.
    #[error("vertex {vertex} out of range for k = {k}")]
    VertexOutOfRange { vertex: i64, k: usize },

    /// The same vertex appears twice across the given blocks.
    #[error("vertex {0} appears in more than one block")]
    DuplicateVertex(i64),

    /// A vertex of `1..=2k` is not covered by any block.
    #[error("vertex {0} missing from the partition")]
    MissingVertex(i64),

    /// Two diagrams with different numbers of columns were combined.
    #[error("column count mismatch: {0} vs {1}")]
    KMismatch(usize, usize),

    /// Two algebra elements over different families were combined.
    #[error("family mismatch: {0:?} vs {1:?}")]
    FamilyMismatch(Family, Family),

    /// A diagram was used with a family it does not belong to.
    #[error("diagram {diagram:?} is not a {family:?} diagram")]
    NotInFamily { family: Family, diagram: String },

    /// The family has no essential idempotent (or `k` is too small for it).
    #[error("no essential idempotent for {0:?} at k = {1}")]
    NoIdempotent(Family, usize),

    /// An operation that needs a symmetric diagram got a non-symmetric one.
    #[error("diagram {0} is not symmetric")]
    NotSymmetric(String),

    /// The fixed-block sign is undefined because conjugation dropped the rank.
    #[error("sign undefined: conjugating {t} by {d} drops the rank")]
    RankDrop { d: String, t: String },

    /// No conjugator exists between the two symmetric diagrams.
    #[error("no conjugator: {s} and {t} have different (rank, fixed) data")]
    NoConjugator { s: String, t: String },

    /// No closed form or label set is tabulated for this family.
    #[error("{0:?} has no tabulated model combinatorics")]
    NoModelData(Family),

    /// Integer-partition sizes disagree.
    #[error("partition size mismatch: |{0:?}| != |{1:?}|")]
    PartitionSizeMismatch(Vec<usize>, Vec<usize>),

    /// A permutation constructor got a non-bijection.
    #[error("images {0:?} are not a permutation of 1..=k")]
    NotAPermutation(Vec<usize>),

    /// A permutation operation required an involution.
    #[error("permutation {0:?} is not an involution")]
    NotAnInvolution(Vec<usize>),

    /// Text input could not be parsed; `pos` is a 0-based byte offset.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An internal consistency check failed; indicates a kernel bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
