use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 3, got {0}")]
    ModulusTooSmall(i128),

    #[error("modulus {0} is too large")]
    ModulusTooLarge(i128),

    #[error("operand {operand} out of range for Z_{n}")]
    OperandOutOfRange { operand: usize, n: usize },

    #[error("table has no rows")]
    EmptyTable,

    #[error("table is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("table entry {value} at ({row},{col}) is outside 0..{n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown class variant `{0}`")]
    UnknownVariant(String),

    #[error("invalid range [{lo},{hi}]: {reason}")]
    InvalidRange {
        lo: usize,
        hi: usize,
        reason: &'static str,
    },

    #[error("theorem `{0}` has no meaningful converse")]
    NoConverse(&'static str),
}
