use alloc::string::String;

/// Errors raised by surface, curve and complex operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("surface S_({g},{p}) has non-negative Euler characteristic")]
    NonHyperbolicSurface { g: u32, p: u32 },
    #[error("weight vector has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("matching condition fails in triangle {triangle}")]
    MatchingViolation { triangle: usize },
    #[error("weights describe a multicurve with more than one component")]
    Disconnected,
    #[error("curve is trivial or boundary-parallel")]
    Inessential,
    #[error("curves live on different surfaces")]
    SurfaceMismatch,
    #[error("curves {0} and {1} of the multicurve intersect")]
    NotDisjoint(usize, usize),
    #[error("multicurve contains the same curve twice")]
    DuplicateCurve,
    #[error("not a vertex of the Torelli complex: {0}")]
    NotATorelliVertex(String),
    #[error("half twist unsupported: {0}")]
    UnsupportedHalfTwist(String),
    #[error("empty base curve list")]
    EmptyBase,
    #[error("catalog lacks the witness curves: {0}")]
    CatalogTooSmall(String),
    #[error("simplex is not maximal: size {size}, expected {expected}")]
    NotMaximal { size: usize, expected: usize },
    #[error("BP set is not rooted")]
    NotRooted,
    #[error("no curve of the catalog is disjoint from the hexagon")]
    NotFoundInCatalog,
    #[error("{0} catalog curves are disjoint from the hexagon")]
    NonUniqueInCatalog(usize),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("inconsistent extension: {0}")]
    Inconsistent(String),
    #[error("no witness for curve {0} in the catalog")]
    NoWitness(usize),
    #[error("walk is not a simple closed curve")]
    NotSimple,
}

pub type Result<T> = core::result::Result<T, Error>;
