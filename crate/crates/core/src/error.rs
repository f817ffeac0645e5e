use std::fmt;

use thiserror::Error;

/// A single out-of-domain capital value found while validating a capital game.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainViolation {
    pub player: usize,
    /// Canonical profile index of the offending payoff, or `None` for the endowment.
    pub profile: Option<usize>,
    pub value: f64,
    pub dynamics: String,
}

impl fmt::Display for DomainViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.profile {
            Some(p) => write!(
                f,
                "player {} payoff at profile {}: {} is outside the {} domain",
                self.player, p, self.value, self.dynamics
            ),
            None => write!(
                f,
                "player {} endowment: {} is outside the {} domain",
                self.player, self.value, self.dynamics
            ),
        }
    }
}

fn join_violations(v: &[DomainViolation]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("player index {index} out of range for a {players}-player game")]
    PlayerIndex { index: usize, players: usize },
    #[error("invalid game: {0}")]
    InvalidGame(String),
    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),
    #[error("value {value} is outside the {dynamics} domain")]
    OutOfDomain { value: f64, dynamics: String },
    #[error("domain violations: {}", join_violations(.0))]
    Domain(Vec<DomainViolation>),
    #[error("{what} has size {size}, which exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("operation requires exactly 2 players, game has {0}")]
    Arity(usize),
    #[error("invalid dynamics: {0}")]
    InvalidDynamics(String),
    #[error("invalid simulation config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, GameError>;
