use crate::Rational;
use thiserror::Error;

/// Why a Steiner-cycle search came back empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotFoundReason {
    /// Exhaustive enumeration completed: no simple cycle through the
    /// required set exists in this graph.
    ProvenAbsent,
    /// No construction applied within the configured budget; absence
    /// has not been proven.
    Budget,
}

impl std::fmt::Display for NotFoundReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotFoundReason::ProvenAbsent => write!(f, "proven absent"),
            NotFoundReason::Budget => write!(f, "budget"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("no two internally vertex-disjoint paths between {s} and {t}")]
    NotTwoConnectedBetween { s: usize, t: usize },
    #[error("subset of size {size} exceeds the exhaustive budget {budget}")]
    SubsetTooLarge { size: usize, budget: usize },
    #[error("required set has odd cardinality {0}")]
    OddRequiredSet(usize),
    #[error("required vertex {0} does not lie on the cycle")]
    RequiredNotOnCycle(usize),
    #[error("cycle does not cover the tree's odd-degree set (missing {0})")]
    RequiredSetNotCovered(usize),
    #[error("gamma = {0} >= 1 makes the bound vacuous against plain doubling")]
    GammaTooLarge(Rational),
    #[error("multigraph vertex {0} has odd degree")]
    OddDegree(usize),
    #[error("multigraph support is disconnected")]
    DisconnectedSupport,
    #[error("instance too large for exact search: n = {n}, budget {budget}")]
    TooLarge { n: usize, budget: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("cycle augmentation stuck; falling back to exhaustive search")]
    AugmentationStuck,
    #[error("back-edge selection failed, contradicting biconnectivity")]
    SelectionFailed,
    #[error("no simple Steiner cycle found ({0})")]
    NotFound(NotFoundReason),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
