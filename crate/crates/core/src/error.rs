use thiserror::Error;

/// Error type shared by every layer of the toolkit.
///
/// Variants are grouped by the subsystem that raises them; the CLI maps
/// them onto exit codes (parse / precondition / internal).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    // -- scalars ---------------------------------------------------------
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),
    #[error("symbol not available in this field: {0}")]
    WrongField(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input where a nonzero scalar is required")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cyclotomic index must be at least 3, got {0}")]
    CyclotomicIndexTooSmall(u64),
    #[error("operands belong to different fields")]
    FieldMismatch,

    // -- presentations ---------------------------------------------------
    #[error("quiver has no vertices")]
    EmptyQuiver,
    #[error("duplicate name `{0}` in quiver")]
    DuplicateName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("path does not compose: {0}")]
    BrokenPath(String),
    #[error("relation terms are not parallel: {0}")]
    NonParallelRelation(String),
    #[error("relation is not homogeneous in path length: {0}")]
    NonHomogeneousRelation(String),
    #[error("relation has a zero coefficient or no terms")]
    DegenerateRelation,
    #[error("truncate_radical must be 2 or 3, got {0}")]
    InvalidTruncation(usize),
    #[error("relations annihilate part of the quiver: {0}")]
    InconsistentRelations(String),

    // -- structure -------------------------------------------------------
    #[error("candidate radical complement is not a nilpotent ideal: {0}")]
    NotNilpotentComplement(String),
    #[error("radical could not be certified over this field")]
    RadicalNotCertified,
    #[error("quotient by the socle is the zero algebra")]
    ZeroQuotient,
    #[error("algebra is not basic: {0}")]
    NotBasic(String),
    #[error("algebra does not split over its field: {0}")]
    NotSplit(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent lifting did not converge")]
    LiftDivergence,
    #[error("search for a primitive idempotent exhausted its budget")]
    IdempotentSearchExhausted,
    #[error("socle is not spanned by basis vectors")]
    SocleBasisNotInBasis,

    // -- forms and automorphisms ------------------------------------------
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("map is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("map is not an algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("morphism is not invertible")]
    NotInvertible,
    #[error("morphism shapes do not match")]
    ShapeMismatch,
    #[error("automorphism does not act monomially on arrows: {0}")]
    MonomialActionRequired(String),
    #[error("algebra carries no grading")]
    NotGraded,

    // -- constructions -----------------------------------------------------
    #[error("group action is invalid: {0}")]
    ActionMismatch(String),
    #[error("input form is degenerate")]
    DegenerateInput,
    #[error("automorphism has infinite order (bound exceeded)")]
    InfiniteOrder,
    #[error("field characteristic divides the group order {0}")]
    CharDividesOrder(u64),
    #[error("grading has top degree {0}, at most 2 is supported")]
    TopDegreeTooHigh(usize),
    #[error("construction requires characteristic different from 2")]
    CharTwo,
    #[error("construction self-check failed: {0}")]
    VerificationFailed(String),
    #[error("radical square is not zero")]
    RadicalSquareNotZero,

    // -- classification ----------------------------------------------------
    #[error("graph has a loop at `{0}`")]
    LoopPresent(String),
    #[error("graph is disconnected where a single label is required")]
    Disconnected,
    #[error("components have inconsistent types: {0}")]
    TypeInconsistent(String),
    #[error("algebra is not self-injective: {0}")]
    NotSelfInjective(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
