use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("division left a remainder at vertex {vertex}, time {time}")]
    NotLaurent { vertex: usize, time: i64 },
    #[error("term budget of {limit} exceeded ({used} terms)")]
    Budget { limit: usize, used: usize },
    #[error("vertex {vertex} has no value at time {time} (parity {parity})")]
    Parity { vertex: usize, time: i64, parity: u8 },
    #[error("time {time} not computed (last is {last})")]
    OutOfRange { time: i64, last: i64 },
    #[error("non-finite value at vertex {vertex}, time {time}")]
    NonFinite { vertex: usize, time: i64 },
    #[error("expected {expected} initial values, got {got}")]
    InitLength { expected: usize, got: usize },
    #[error("initial values must be positive")]
    NonPositiveInit,
    #[error("series too short: {0} states, need at least {1}")]
    ShortSeries(usize, usize),
    #[error("no growth statistic stabilizes (relative sd {0:?})")]
    Inconclusive([f64; 3]),
}

pub type Result<T> = std::result::Result<T, DynamicsError>;
