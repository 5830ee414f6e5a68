use crate::strategy::GuessEntry;
use thiserror::Error;

/// Errors raised by the simulator, the theory formulas and the adversary.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid trajectory: {0}")]
    InvalidTrajectory(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    /// Strategy parameters are missing or out of range for the scenario.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// The strategy ran out of rounds (or out of plan) before the target
    /// was found, or the robots can never reach each other or the target.
    #[error("no capture after {rounds} rounds: {reason}")]
    NonTermination {
        rounds: usize,
        reason: String,
        last_guess: Option<Box<GuessEntry>>,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
