use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("elements belong to different rings")]
    ContextMismatch,
    #[error("ring is not enumerable (size {size:?})")]
    NotEnumerable { size: Option<u64> },
    #[error("invalid ring: {0}")]
    InvalidContext(&'static str),
    #[error("payload does not fit the ring")]
    BadPayload,
}
