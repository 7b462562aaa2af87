use thiserror::Error;

/// Errors produced by graph validation, operator assembly, factorizations,
/// closed-form evaluation, and the representation pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    // -- graph construction ------------------------------------------------
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(u64, u64),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(u64),
    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownVertex(u64),
    #[error("edge {{{0}, {1}}} connects two boundary vertices")]
    BoundaryBoundaryEdge(u64, u64),
    #[error("boundary vertex {0} has no interior neighbor")]
    IsolatedBoundary(u64),
    #[error("vertex {0} is not a boundary vertex")]
    NotBoundary(u64),
    #[error("graph is disconnected")]
    Disconnected,

    // -- operator assembly -------------------------------------------------
    #[error("absorption alpha0 must be positive, got {0}")]
    NonpositiveAbsorption(f64),
    #[error("Robin parameter t must be nonnegative, got {0}")]
    NegativeRobin(f64),
    #[error("absorption support index {index} outside interior range 0..{interior}")]
    SupportOutOfRange { index: usize, interior: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    // -- dense linear algebra ----------------------------------------------
    #[error("factorization failed at pivot {pivot} (value {value:e}): matrix not positive definite")]
    Factorization { pivot: usize, value: f64 },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    // -- Born series certificates -------------------------------------------
    #[error("truncation bound undefined: restricted margin {0} >= 1")]
    BoundUndefined(f64),

    // -- closed forms --------------------------------------------------------
    #[error("index {index} outside range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("parameter singularity: 1 + t = r (t = {t}, r = {r})")]
    ParameterSingularity { t: f64, r: f64 },
    #[error("Green's function unbounded: lambda = {0} >= 1")]
    UnboundedGreen(f64),
    #[error("Mobius ladder requires odd n, got {0}")]
    EvenMobius(usize),
    #[error("coordination number must be at least 2, got {0}")]
    BadCoordination(usize),
    #[error("elliptic modulus out of range: m^2 = {0} >= 1")]
    EllipticDomain(f64),
    #[error("quadrature failed to reach tolerance: estimate {estimate}, error {error}")]
    QuadratureNonConvergence { estimate: f64, error: f64 },

    // -- Cayley / representations --------------------------------------------
    #[error("generator set is not symmetric: inverse of element {0} missing")]
    NonSymmetricGenerators(usize),
    #[error("generator set contains the identity")]
    IdentityGenerator,
    #[error("generator index {0} outside group of order {1}")]
    GeneratorOutOfRange(usize, usize),
    #[error("symmetric group degree {0} unsupported (need 2 <= n <= 6)")]
    UnsupportedSymmetricDegree(usize),
    #[error("representation set incomplete: sum of squared degrees {got} != |G| = {order}")]
    IncompleteRepresentations { got: usize, order: usize },
    #[error("rank deficiency while orthonormalizing eigenvalue group at lambda = {0}")]
    DegenerateEigenGroup(f64),
    #[error("imaginary residue {0:e} exceeds tolerance while realifying")]
    ResidualImaginary(f64),

    // -- point absorbers -----------------------------------------------------
    #[error("scattering pole: 1 + alpha0*kappa*lambda = 0 at mode {mode}")]
    ScatteringPole { mode: usize },
    #[error("absorber sites must be distinct")]
    CoincidentSites,

    // -- interchange ----------------------------------------------------------
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
