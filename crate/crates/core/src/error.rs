use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("class ({lambda}, {mu}) is not a simple closed curve: coefficients are not coprime")]
    NotACurve { lambda: i64, mu: i64 },

    #[error("zero denominator in {0}")]
    ZeroDenominator(&'static str),

    #[error("cannot parse `{0}` as an exact integer or fraction")]
    ParseFraction(String),

    #[error("malformed orbifold: {0} non-trivial indices (at most 3 allowed)")]
    MalformedTriple(usize),

    #[error("lens space L({p}, {q}) is invalid: gcd(p, q) must be 1")]
    InvalidLens { p: u64, q: i64 },

    #[error("lens spaces known only by shape cannot be compared")]
    IncomparableLens,

    #[error("Montesinos link needs exactly three rational tangles, got {0}")]
    TangleCount(usize),

    #[error("tangle {0} is an integer or infinite tangle: fewer than three rational tangles")]
    NotThreeTangles(String),

    #[error("two-bridge fraction {0} does not describe a two-bridge link")]
    InvalidTwoBridge(String),

    #[error("T({p},{q}) is not an admissible torus knot (need |p| > q >= 2, gcd 1)")]
    InvalidTorusKnot { p: i64, q: i64 },

    #[error("surgery slope {0} is not admissible here")]
    InvalidSlope(String),

    #[error("slope {0} is not integral; network vertices need integer slopes")]
    NonIntegerSlope(String),

    #[error("pair {0} is excluded from the linking table")]
    ExcludedPair(String),

    #[error("pair {0} is not tabulated")]
    NotTabulated(String),

    #[error("search bound {0} is below 2")]
    InvalidBound(i64),

    #[error("unknown seiferter `{0}`")]
    UnknownSeiferter(String),

    #[error("seiferter {seiferter} is not a seiferter for {vertex}")]
    InvalidAmbient { seiferter: String, vertex: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("no claims tagged `{0}`")]
    UnknownClaimTag(String),

    #[error("malformed network data: {0}")]
    Network(String),
}
