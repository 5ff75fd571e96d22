use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    #[error("edge list parse error: {0}")]
    EdgeList(String),

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("loop at vertex {0} (graphs are simple)")]
    Loop(usize),

    #[error("{n} vertices exceeds the cap of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("{what}: size {actual} exceeds guard {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("zero polynomial has no order at -1")]
    ZeroPolynomial,

    #[error("series not rational with this dimension (residual at degree {0})")]
    SeriesNotRational(usize),

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn pre(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}
