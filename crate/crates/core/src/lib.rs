//! Capital games.
//!
//! A capital game is a finite normal-form game whose payoffs are capital
//! rather than utility. Each player has an endowment, a duration, and capital
//! dynamics described by a strictly increasing linearization `v`. Players
//! maximize the time-average growth rate of their capital, and the growth
//! equilibria of the game are exactly the Nash equilibria of the standard game
//! with utilities `(v(x) - v(w)) / dt`.
//!
//! - [`game`]: standard games, strategy profiles, best responses and regret.
//! - [`dynamics`] and [`capital`]: dynamics families, capital games and the
//!   transformations to and from standard games.
//! - [`solvers`]: pure enumeration for any number of players, support
//!   enumeration for two players, and growth-equilibrium verification.
//! - [`simulate`]: Monte Carlo simulation of repeated play.
//! - [`codec`] and [`cli`]: JSON documents and the `capgame` tool.
//!
//! ```
//! use capgame::{CapitalGame, Dynamics, MixedStrategyProfile};
//!
//! let coin = CapitalGame::new(
//!     vec![2],
//!     vec![vec![150.0, 60.0]],
//!     vec![100.0],
//!     vec![1.0],
//!     vec![Dynamics::Multiplicative],
//! )
//! .unwrap();
//! let utilities = coin.to_standard_game().unwrap();
//! assert!((utilities.payoffs(0)[0] - 1.5f64.ln()).abs() < 1e-12);
//!
//! let fair = MixedStrategyProfile::uniform(&[2]);
//! assert!(coin.time_average_growth(&fair, 0).unwrap() < 0.0);
//! ```

pub mod capital;
pub mod cli;
pub mod codec;
pub mod dynamics;
pub mod error;
pub mod game;
mod linalg;
pub mod par;
pub mod shape;
pub mod simulate;
pub mod solvers;

pub use capital::{from_standard_game, CapitalGame, Gamble};
pub use dynamics::{growth_rate, CustomDynamics, Dynamics};
pub use error::{DomainViolation, GameError, Result};
pub use game::{ActionProfile, BestResponse, Labels, MixedStrategyProfile, StandardGame, TIE_TOL};
pub use par::Execution;
pub use simulate::{ergodicity_check, SimulationConfig, SimulationReport};
pub use solvers::{
    enumerate_pure_growth_equilibria, enumerate_pure_nash, growth_equilibria, support_enumeration_2p,
    verify_growth_equilibrium, vertex_enumeration_2p, Classification, Coverage, EquilibriumResult,
    GrowthEquilibria, GrowthVerdict, SolverOptions, Source,
};
