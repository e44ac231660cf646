use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("m must be at least 2, got {0}")]
    OrderTooSmall(usize),

    #[error("pair ({i},{j}) is not a vertex of H_{m}: need 1 <= i < j <= m")]
    InvalidPair { i: usize, j: usize, m: usize },

    #[error("rank {rank} out of range 1..={n}")]
    RankOutOfRange { rank: usize, n: usize },

    #[error("degenerate segment: both endpoints are {0}")]
    DegenerateSegment(String),

    #[error("line coefficients a and b are both zero")]
    DegenerateLine,

    #[error("polyline needs at least one segment and one tag per segment ({vertices} vertices, {tags} tags)")]
    MalformedPolyline { vertices: usize, tags: usize },

    #[error("profile constraint violated: {0}")]
    ProfileConstraint(String),

    #[error("stretch base K = {k} must exceed 12*N^2 = {bound}")]
    StretchBaseTooSmall { k: String, bound: String },

    #[error("unsupported profile: {0}")]
    UnsupportedProfile(String),

    #[error("pairs must satisfy u < v in lex order, got {u} and {v}")]
    NotLexOrdered { u: String, v: String },

    #[error("curves {u} and {v} overlap in a positive-length segment")]
    Overlap { u: String, v: String },

    #[error("parse error: {0}")]
    Parse(String),
}
