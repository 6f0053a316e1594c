use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conductor {from} does not divide {to}")]
    NotDivisible { from: u64, to: u64 },

    #[error("galois exponent {k} is not coprime to conductor {conductor}")]
    NotCoprime { k: i64, conductor: u64 },

    #[error("malformed table: {0}")]
    Schema(String),

    #[error("orthogonality fails for characters {first} and {second}: inner product {value}")]
    Orthogonality {
        first: String,
        second: String,
        value: String,
    },

    #[error("power map for prime {prime} sends {from} (order {from_order}) to {to} (order {to_order})")]
    PowerMap {
        prime: u64,
        from: String,
        from_order: u64,
        to: String,
        to_order: u64,
    },

    #[error("no power map for prime {0}")]
    MissingPowerMap(u64),

    #[error("brauer character {character} (p = {prime}) paired with a tuple supported on p-singular class {class}")]
    SingularSupport {
        character: String,
        prime: u64,
        class: String,
    },

    #[error("brauer characters for p = {prime} cannot be used for units of order {order}")]
    PrimeDividesOrder { prime: u64, order: u64 },

    #[error("no brauer characters for p = {0} in table")]
    MissingBrauerBlock(u64),

    #[error("decomposition matrix is {rows}x{cols}, expected {want_rows}x{want_cols}")]
    DecompositionShape {
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("no decomposition matrix for p = {0}")]
    MissingDecomposition(u64),

    #[error("order {order} is not valid here: {reason}")]
    InvalidOrder { order: u64, reason: String },

    #[error("tower of order {order} has no tuple for order {missing}")]
    IncompleteTower { order: u64, missing: u64 },

    #[error("unknown class {0}")]
    UnknownClass(String),

    #[error("PSL(2,q) generator: {0}")]
    Psl2(String),

    #[error("box volume {volume} exceeds scan cap {cap}")]
    BoxTooLarge { volume: u128, cap: u128 },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
