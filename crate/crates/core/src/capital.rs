//! Capital games and their correspondence with standard games.
//!
//! A capital game pays out capital rather than utility. Each player holds an
//! endowment, plays over a duration, and has dynamics with a linearization
//! `v`. Replacing every payoff by its growth rate `(v(x) - v(w)) / dt` gives a
//! standard game whose Nash equilibria are the growth equilibria of the
//! capital game.

use crate::dynamics::{growth_rate, Dynamics};
use crate::error::{DomainViolation, GameError, Result};
use crate::game::{check_payoff_tensors, profile_distribution, Labels, MixedStrategyProfile, StandardGame};
use crate::shape::Shape;

#[derive(Debug, Clone, PartialEq)]
pub struct CapitalGame {
    shape: Shape,
    payoffs: Vec<Vec<f64>>,
    endowments: Vec<f64>,
    durations: Vec<f64>,
    dynamics: Vec<Dynamics>,
    labels: Labels,
}

impl CapitalGame {
    /// Builds and validates a capital game. Every endowment and payoff must
    /// lie in its player's dynamics domain; all violations are reported at once.
    pub fn new(
        action_counts: Vec<usize>,
        payoffs: Vec<Vec<f64>>,
        endowments: Vec<f64>,
        durations: Vec<f64>,
        dynamics: Vec<Dynamics>,
    ) -> Result<Self> {
        let shape = Shape::new(action_counts)?;
        let labels = Labels::default_for(&shape);
        Self::from_parts(shape, payoffs, endowments, durations, dynamics, labels)
    }

    pub(crate) fn from_parts(
        shape: Shape,
        payoffs: Vec<Vec<f64>>,
        endowments: Vec<f64>,
        durations: Vec<f64>,
        dynamics: Vec<Dynamics>,
        labels: Labels,
    ) -> Result<Self> {
        check_payoff_tensors(&shape, &payoffs)?;
        labels.check(&shape)?;
        let n = shape.num_players();
        for (what, len) in [
            ("endowments", endowments.len()),
            ("durations", durations.len()),
            ("dynamics", dynamics.len()),
        ] {
            if len != n {
                return Err(GameError::Shape(format!("{len} {what} for {n} players")));
            }
        }
        if let Some(i) = endowments.iter().position(|w| !w.is_finite()) {
            return Err(GameError::InvalidGame(format!("player {i} endowment is not finite")));
        }
        if let Some(i) = durations.iter().position(|d| !(d.is_finite() && *d > 0.0)) {
            return Err(GameError::InvalidGame(format!(
                "player {i} duration must be positive, got {}",
                durations[i]
            )));
        }
        let game = CapitalGame {
            shape,
            payoffs,
            endowments,
            durations,
            dynamics,
            labels,
        };
        let violations = game.domain_violations();
        if violations.is_empty() {
            Ok(game)
        } else {
            Err(GameError::Domain(violations))
        }
    }

    /// Every (player, profile) whose capital lies outside that player's domain.
    pub fn domain_violations(&self) -> Vec<DomainViolation> {
        let mut out = Vec::new();
        for (i, d) in self.dynamics.iter().enumerate() {
            if !d.in_domain(self.endowments[i]) {
                out.push(DomainViolation {
                    player: i,
                    profile: None,
                    value: self.endowments[i],
                    dynamics: d.name().to_string(),
                });
            }
            for (idx, &x) in self.payoffs[i].iter().enumerate() {
                if !d.in_domain(x) {
                    out.push(DomainViolation {
                        player: i,
                        profile: Some(idx),
                        value: x,
                        dynamics: d.name().to_string(),
                    });
                }
            }
        }
        out
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<Self> {
        labels.check(&self.shape)?;
        self.labels = labels;
        Ok(self)
    }

    /// The same game under different dynamics, revalidated.
    pub fn with_dynamics(&self, dynamics: Vec<Dynamics>) -> Result<Self> {
        Self::from_parts(
            self.shape.clone(),
            self.payoffs.clone(),
            self.endowments.clone(),
            self.durations.clone(),
            dynamics,
            self.labels.clone(),
        )
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn num_players(&self) -> usize {
        self.shape.num_players()
    }

    pub fn action_counts(&self) -> &[usize] {
        self.shape.action_counts()
    }

    pub fn payoffs(&self, player: usize) -> &[f64] {
        &self.payoffs[player]
    }

    pub fn all_payoffs(&self) -> &[Vec<f64>] {
        &self.payoffs
    }

    pub fn endowments(&self) -> &[f64] {
        &self.endowments
    }

    pub fn durations(&self) -> &[f64] {
        &self.durations
    }

    pub fn dynamics(&self) -> &[Dynamics] {
        &self.dynamics
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    /// True iff every endowment and every payoff is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.endowments.iter().all(|&w| w > 0.0)
            && self.payoffs.iter().flatten().all(|&x| x > 0.0)
    }

    /// Growth rate of `player` at the profile with canonical index `profile`.
    pub fn growth_rate_at(&self, player: usize, profile: usize) -> Result<f64> {
        growth_rate(
            &self.dynamics[player],
            self.payoffs[player][profile],
            self.endowments[player],
            self.durations[player],
        )
    }

    /// Time-average growth rate `E[(v(x_i(a)) - v(w_i)) / dt_i | s]`.
    pub fn time_average_growth(&self, s: &MixedStrategyProfile, player: usize) -> Result<f64> {
        self.shape.check_player(player)?;
        s.check_shape(&self.shape)?;
        let probs = profile_distribution(&self.shape, s);
        let mut total = 0.0;
        for (idx, &p) in probs.iter().enumerate() {
            if p != 0.0 {
                total += self.growth_rate_at(player, idx)? * p;
            }
        }
        Ok(total)
    }

    /// The standard game with `u_i(a) = (v_i(x_i(a)) - v_i(w_i)) / dt_i`.
    pub fn to_standard_game(&self) -> Result<StandardGame> {
        let violations = self.domain_violations();
        if !violations.is_empty() {
            return Err(GameError::Domain(violations));
        }
        let payoffs = (0..self.num_players())
            .map(|i| {
                (0..self.shape.num_profiles())
                    .map(|idx| self.growth_rate_at(i, idx))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardGame::from_parts(self.shape.clone(), payoffs, self.labels.clone())
    }

    /// The capital gamble player `player` faces under profile `s`: one outcome
    /// per distinct payoff value reached with positive probability.
    pub fn gamble_from_response(&self, player: usize, s: &MixedStrategyProfile) -> Result<Gamble> {
        self.shape.check_player(player)?;
        s.check_shape(&self.shape)?;
        let probs = profile_distribution(&self.shape, s);
        let mut outcomes: Vec<(f64, f64)> = Vec::new();
        for (idx, &p) in probs.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            let x = self.payoffs[player][idx];
            match outcomes.iter_mut().find(|(q, _)| *q == x) {
                Some(o) => o.1 += p,
                None => outcomes.push((x, p)),
            }
        }
        Gamble::new(outcomes, self.durations[player])
    }
}

/// Builds a capital game whose growth-rate game is `game`:
/// `x_i(a) = v_i^{-1}(u_i(a) * dt_i + v_i(w_i))`.
///
/// Additive dynamics may produce non-positive payoffs; the result is still a
/// valid capital game, see [`CapitalGame::is_positive`].
pub fn from_standard_game(
    game: &StandardGame,
    endowments: &[f64],
    dynamics: &[Dynamics],
    durations: &[f64],
) -> Result<CapitalGame> {
    let n = game.num_players();
    if endowments.len() != n || dynamics.len() != n || durations.len() != n {
        return Err(GameError::Shape(format!(
            "need one endowment, dynamics and duration per player ({n})"
        )));
    }
    if let Some(i) = endowments.iter().position(|&w| !(w > 0.0 && w.is_finite())) {
        return Err(GameError::InvalidGame(format!(
            "player {i} endowment must be positive, got {}",
            endowments[i]
        )));
    }
    let mut violations = Vec::new();
    let mut payoffs = Vec::with_capacity(n);
    for i in 0..n {
        let d = &dynamics[i];
        let base = d.linearize(endowments[i])?;
        let dt = durations[i];
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(GameError::InvalidGame(format!(
                "player {i} duration must be positive, got {dt}"
            )));
        }
        let mut xs = Vec::with_capacity(game.shape().num_profiles());
        for (idx, &u) in game.payoffs(i).iter().enumerate() {
            // Zero growth keeps the endowment exactly; v^-1(v(w)) may be off by an ulp.
            if u == 0.0 {
                xs.push(endowments[i]);
                continue;
            }
            let y = u * dt + base;
            match d.delinearize(y) {
                Ok(x) if x.is_finite() => xs.push(x),
                _ => {
                    violations.push(DomainViolation {
                        player: i,
                        profile: Some(idx),
                        value: y,
                        dynamics: d.name().to_string(),
                    });
                    xs.push(f64::NAN);
                }
            }
        }
        payoffs.push(xs);
    }
    if !violations.is_empty() {
        return Err(GameError::Domain(violations));
    }
    CapitalGame::from_parts(
        game.shape().clone(),
        payoffs,
        endowments.to_vec(),
        durations.to_vec(),
        dynamics.to_vec(),
        game.labels().clone(),
    )
}

/// A lottery over capital outcomes with a common duration.
#[derive(Debug, Clone, PartialEq)]
pub struct Gamble {
    outcomes: Vec<(f64, f64)>,
    duration: f64,
}

impl Gamble {
    pub fn new(outcomes: Vec<(f64, f64)>, duration: f64) -> Result<Self> {
        if outcomes.is_empty() {
            return Err(GameError::InvalidStrategy("a gamble needs at least one outcome".into()));
        }
        if let Some((_, p)) = outcomes.iter().find(|(_, p)| !(*p >= 0.0)) {
            return Err(GameError::InvalidStrategy(format!("negative outcome probability {p}")));
        }
        let total: f64 = outcomes.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(GameError::InvalidStrategy(format!(
                "outcome probabilities sum to {total}"
            )));
        }
        if !(duration > 0.0) {
            return Err(GameError::InvalidGame(format!("gamble duration {duration}")));
        }
        Ok(Gamble { outcomes, duration })
    }

    /// `(value, probability)` pairs.
    pub fn outcomes(&self) -> &[(f64, f64)] {
        &self.outcomes
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    /// Expected growth rate of the gamble for a holder of `endowment`.
    pub fn expected_growth(&self, dynamics: &Dynamics, endowment: f64) -> Result<f64> {
        self.outcomes
            .iter()
            .map(|&(q, p)| Ok(growth_rate(dynamics, q, endowment, self.duration)? * p))
            .sum()
    }
}
