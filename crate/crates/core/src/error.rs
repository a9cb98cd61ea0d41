use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("order {0} is out of range (must be between 1 and {max})", max = crate::lattice::MAX_ORDER)]
    BadOrder(usize),

    #[error("axis {axis} has extent {extent}; extents must be at least 1")]
    BadExtent { axis: usize, extent: u32 },

    #[error("box volume {volume} exceeds the supported maximum {max}")]
    VolumeTooLarge { volume: u128, max: u64 },

    #[error("coordinate {value} on axis {axis} is out of range 1..={bound}")]
    CoordOutOfRange { axis: usize, value: u32, bound: u32 },

    #[error("point has {got} coordinates but the shape has order {expected}")]
    PointOrderMismatch { expected: usize, got: usize },

    #[error("shapes differ: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<u32>, Vec<u32>),

    #[error("pattern families have different ambient orders: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("axis index {axis} is out of range for order {order}")]
    AxisOutOfRange { axis: usize, order: usize },

    #[error("a pattern family must be non-empty")]
    EmptyFamily,

    #[error("the empty pattern has no star family")]
    EmptyPatternStar,

    #[error("{context}: instance has {actual} points, exceeding the exact-solver cap of {cap}; use the greedy solver or raise the cap")]
    ExactCapExceeded { context: &'static str, cap: usize, actual: usize },

    #[error("{context}: workload of {actual} exceeds the budget of {budget}")]
    BudgetExceeded { context: &'static str, budget: u64, actual: u128 },

    #[error("hypothesis not met: requires covering number at least {required}, computed {computed}")]
    HypothesisNotMet { required: u64, computed: u64 },

    #[error("{p} is not prime or not supported (supported primes: 2, 3, 5, 7)")]
    UnsupportedPrime { p: u8 },

    #[error("tensor entry {value} at position {index} is not a residue modulo {p}")]
    BadResidue { index: usize, value: u8, p: u8 },

    #[error("tensor has {got} entries but the shape requires {expected}")]
    EntryCountMismatch { expected: usize, got: usize },

    #[error("support is not an antichain: {p:?} <= {q:?} componentwise")]
    NotAntichain { p: Vec<u32>, q: Vec<u32> },

    #[error("operation requires order at least {required}, got {got}")]
    OrderTooSmall { required: usize, got: usize },

    #[error("a cover decomposition must contain its target: point {0:?} is uncovered")]
    NotACover(Vec<u32>),

    #[error("unknown suite name {0:?}")]
    UnknownSuite(String),

    #[error("unknown family spec {0:?} (expected slices|points|lines|full or a file path)")]
    UnknownFamilySpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
