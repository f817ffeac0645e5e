//! Standard (utility-unit) normal-form games.

use crate::error::{GameError, Result};
use crate::shape::Shape;

/// Default absolute tolerance for best-response ties and equilibrium checks.
pub const TIE_TOL: f64 = 1e-9;

/// Tolerance on the sum of each mixed strategy.
pub const SIMPLEX_TOL: f64 = 1e-9;

/// Player and action names carried alongside a game.
#[derive(Debug, Clone, PartialEq)]
pub struct Labels {
    pub players: Vec<String>,
    pub actions: Vec<Vec<String>>,
}

impl Labels {
    pub fn default_for(shape: &Shape) -> Self {
        Labels {
            players: (1..=shape.num_players()).map(|i| format!("p{i}")).collect(),
            actions: shape
                .action_counts()
                .iter()
                .map(|&m| (1..=m).map(|k| format!("a{k}")).collect())
                .collect(),
        }
    }

    pub(crate) fn check(&self, shape: &Shape) -> Result<()> {
        if self.players.len() != shape.num_players() {
            return Err(GameError::Shape(format!(
                "{} player names for {} players",
                self.players.len(),
                shape.num_players()
            )));
        }
        if self.actions.len() != shape.num_players() {
            return Err(GameError::Shape(format!(
                "{} action-name lists for {} players",
                self.actions.len(),
                shape.num_players()
            )));
        }
        for (i, names) in self.actions.iter().enumerate() {
            if names.len() != shape.num_actions(i) {
                return Err(GameError::Shape(format!(
                    "player {i} has {} action names for {} actions",
                    names.len(),
                    shape.num_actions(i)
                )));
            }
        }
        Ok(())
    }
}

/// One action per player.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActionProfile(pub Vec<usize>);

impl ActionProfile {
    pub fn actions(&self) -> &[usize] {
        &self.0
    }
}

/// One probability vector per player.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedStrategyProfile {
    strategies: Vec<Vec<f64>>,
}

fn check_distribution(player: usize, v: &[f64]) -> Result<()> {
    if v.is_empty() {
        return Err(GameError::InvalidStrategy(format!(
            "player {player} has an empty strategy"
        )));
    }
    if let Some(p) = v.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(GameError::InvalidStrategy(format!(
            "player {player} has probability {p} outside [0, 1]"
        )));
    }
    let total: f64 = v.iter().sum();
    if (total - 1.0).abs() > SIMPLEX_TOL {
        return Err(GameError::InvalidStrategy(format!(
            "player {player} probabilities sum to {total}"
        )));
    }
    Ok(())
}

impl MixedStrategyProfile {
    pub fn new(strategies: Vec<Vec<f64>>) -> Result<Self> {
        if strategies.is_empty() {
            return Err(GameError::InvalidStrategy("profile has no players".into()));
        }
        for (i, s) in strategies.iter().enumerate() {
            check_distribution(i, s)?;
        }
        Ok(MixedStrategyProfile { strategies })
    }

    /// The degenerate profile placing all mass on `actions`.
    pub fn pure(action_counts: &[usize], actions: &[usize]) -> Result<Self> {
        if action_counts.len() != actions.len() {
            return Err(GameError::Shape(format!(
                "{} actions given for {} players",
                actions.len(),
                action_counts.len()
            )));
        }
        let strategies = action_counts
            .iter()
            .zip(actions)
            .enumerate()
            .map(|(i, (&m, &a))| {
                if a >= m {
                    return Err(GameError::Shape(format!(
                        "action {a} of player {i} is out of range"
                    )));
                }
                let mut v = vec![0.0; m];
                v[a] = 1.0;
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MixedStrategyProfile { strategies })
    }

    pub fn uniform(action_counts: &[usize]) -> Self {
        MixedStrategyProfile {
            strategies: action_counts
                .iter()
                .map(|&m| vec![1.0 / m as f64; m])
                .collect(),
        }
    }

    pub fn num_players(&self) -> usize {
        self.strategies.len()
    }

    pub fn strategies(&self) -> &[Vec<f64>] {
        &self.strategies
    }

    pub fn strategy(&self, player: usize) -> &[f64] {
        &self.strategies[player]
    }

    pub fn into_strategies(self) -> Vec<Vec<f64>> {
        self.strategies
    }

    /// Strategies of every player except `player`.
    pub fn others(&self, player: usize) -> Vec<Vec<f64>> {
        self.strategies
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != player)
            .map(|(_, s)| s.clone())
            .collect()
    }

    /// Replaces one player's strategy.
    pub fn with_strategy(&self, player: usize, strategy: Vec<f64>) -> Result<Self> {
        if player >= self.num_players() {
            return Err(GameError::PlayerIndex {
                index: player,
                players: self.num_players(),
            });
        }
        check_distribution(player, &strategy)?;
        let mut strategies = self.strategies.clone();
        strategies[player] = strategy;
        Ok(MixedStrategyProfile { strategies })
    }

    /// Returns the action profile if every strategy is degenerate.
    pub fn pure_actions(&self) -> Option<ActionProfile> {
        self.strategies
            .iter()
            .map(|s| s.iter().position(|&p| p == 1.0))
            .collect::<Option<Vec<_>>>()
            .map(ActionProfile)
    }

    pub fn is_pure(&self) -> bool {
        self.pure_actions().is_some()
    }

    /// Max-norm distance between two profiles of the same shape.
    pub fn distance(&self, other: &Self) -> f64 {
        self.strategies
            .iter()
            .zip(&other.strategies)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
            .fold(0.0, f64::max)
    }

    pub(crate) fn check_shape(&self, shape: &Shape) -> Result<()> {
        if self.num_players() != shape.num_players() {
            return Err(GameError::Shape(format!(
                "profile has {} players, game has {}",
                self.num_players(),
                shape.num_players()
            )));
        }
        for (i, s) in self.strategies.iter().enumerate() {
            if s.len() != shape.num_actions(i) {
                return Err(GameError::Shape(format!(
                    "player {i} strategy has {} entries, player has {} actions",
                    s.len(),
                    shape.num_actions(i)
                )));
            }
        }
        Ok(())
    }
}

/// Probability of every action profile under `s`, in canonical index order.
pub(crate) fn profile_distribution(shape: &Shape, s: &MixedStrategyProfile) -> Vec<f64> {
    let mut probs = Vec::with_capacity(shape.num_profiles());
    probs.push(1.0);
    for strategy in s.strategies() {
        probs = probs
            .iter()
            .flat_map(|&p| strategy.iter().map(move |&q| p * q))
            .collect();
    }
    probs
}

/// Expected payoff of each of `player`'s pure actions against the other
/// players' strategies in `others` (which omits `player`).
pub(crate) fn action_values(
    shape: &Shape,
    payoffs: &[f64],
    others: &[Vec<f64>],
    player: usize,
) -> Vec<f64> {
    let mut values = vec![0.0; shape.num_actions(player)];
    for (idx, &u) in payoffs.iter().enumerate() {
        let mut weight = 1.0;
        for (slot, j) in (0..shape.num_players()).filter(|&j| j != player).enumerate() {
            weight *= others[slot][shape.action_of(idx, j)];
            if weight == 0.0 {
                break;
            }
        }
        values[shape.action_of(idx, player)] += u * weight;
    }
    values
}

fn check_others(shape: &Shape, others: &[Vec<f64>], player: usize) -> Result<()> {
    shape.check_player(player)?;
    if others.len() + 1 != shape.num_players() {
        return Err(GameError::Shape(format!(
            "{} opponent strategies for a {}-player game",
            others.len(),
            shape.num_players()
        )));
    }
    for (slot, j) in (0..shape.num_players()).filter(|&j| j != player).enumerate() {
        if others[slot].len() != shape.num_actions(j) {
            return Err(GameError::Shape(format!(
                "strategy for player {j} has {} entries, player has {} actions",
                others[slot].len(),
                shape.num_actions(j)
            )));
        }
        check_distribution(j, &others[slot])?;
    }
    Ok(())
}

/// Value of a best response together with every pure action attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct BestResponse {
    pub value: f64,
    pub actions: Vec<usize>,
}

/// A finite normal-form game with payoffs in utility units.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardGame {
    shape: Shape,
    payoffs: Vec<Vec<f64>>,
    labels: Labels,
}

impl StandardGame {
    pub fn new(action_counts: Vec<usize>, payoffs: Vec<Vec<f64>>) -> Result<Self> {
        let shape = Shape::new(action_counts)?;
        let labels = Labels::default_for(&shape);
        Self::from_parts(shape, payoffs, labels)
    }

    pub(crate) fn from_parts(shape: Shape, payoffs: Vec<Vec<f64>>, labels: Labels) -> Result<Self> {
        check_payoff_tensors(&shape, &payoffs)?;
        labels.check(&shape)?;
        Ok(StandardGame {
            shape,
            payoffs,
            labels,
        })
    }

    /// Two-player game from row-major payoff matrices (row player first).
    pub fn bimatrix(row: &[Vec<f64>], col: &[Vec<f64>]) -> Result<Self> {
        let m = row.len();
        let n = row.first().map_or(0, Vec::len);
        if col.len() != m || row.iter().chain(col).any(|r| r.len() != n) {
            return Err(GameError::Shape("bimatrix payoffs must both be m x n".into()));
        }
        let flat = |mat: &[Vec<f64>]| mat.iter().flatten().copied().collect::<Vec<_>>();
        Self::new(vec![m, n], vec![flat(row), flat(col)])
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<Self> {
        labels.check(&self.shape)?;
        self.labels = labels;
        Ok(self)
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

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn payoffs(&self, player: usize) -> &[f64] {
        &self.payoffs[player]
    }

    pub fn all_payoffs(&self) -> &[Vec<f64>] {
        &self.payoffs
    }

    pub fn payoff(&self, player: usize, profile: &ActionProfile) -> Result<f64> {
        self.shape.check_player(player)?;
        Ok(self.payoffs[player][self.shape.try_index(profile.actions())?])
    }

    /// Probability `s(a)` of the action profile `a` under `s`.
    pub fn profile_probability(&self, s: &MixedStrategyProfile, a: &ActionProfile) -> Result<f64> {
        s.check_shape(&self.shape)?;
        self.shape.try_index(a.actions())?;
        Ok(s.strategies()
            .iter()
            .zip(a.actions())
            .map(|(si, &ai)| si[ai])
            .product())
    }

    /// `E[u_i | s]`, the expected utility of `player`.
    pub fn expected_utility(&self, s: &MixedStrategyProfile, player: usize) -> Result<f64> {
        self.shape.check_player(player)?;
        s.check_shape(&self.shape)?;
        let probs = profile_distribution(&self.shape, s);
        Ok(self.payoffs[player]
            .iter()
            .zip(&probs)
            .map(|(u, p)| u * p)
            .sum())
    }

    /// Pure best responses of `player` against `others` (strategies of every
    /// other player, in player order).
    pub fn best_response_set(
        &self,
        others: &[Vec<f64>],
        player: usize,
        tie_tol: f64,
    ) -> Result<BestResponse> {
        check_others(&self.shape, others, player)?;
        let values = action_values(&self.shape, &self.payoffs[player], others, player);
        let value = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let actions = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v >= value - tie_tol)
            .map(|(k, _)| k)
            .collect();
        Ok(BestResponse { value, actions })
    }

    /// Signed gain from `player`'s best unilateral deviation. Never below
    /// rounding noise; reports clamp it at zero.
    pub fn regret(&self, s: &MixedStrategyProfile, player: usize) -> Result<f64> {
        self.shape.check_player(player)?;
        s.check_shape(&self.shape)?;
        let values = action_values(&self.shape, &self.payoffs[player], &s.others(player), player);
        let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let current: f64 = values
            .iter()
            .zip(s.strategy(player))
            .map(|(v, p)| v * p)
            .sum();
        Ok(best - current)
    }

    pub fn regrets(&self, s: &MixedStrategyProfile) -> Result<Vec<f64>> {
        (0..self.num_players()).map(|i| self.regret(s, i)).collect()
    }

    pub fn is_nash(&self, s: &MixedStrategyProfile, eps: f64) -> Result<bool> {
        Ok(self.regrets(s)?.iter().all(|&r| r <= eps))
    }
}

pub(crate) fn check_payoff_tensors(shape: &Shape, payoffs: &[Vec<f64>]) -> Result<()> {
    if payoffs.len() != shape.num_players() {
        return Err(GameError::Shape(format!(
            "{} payoff tensors for {} players",
            payoffs.len(),
            shape.num_players()
        )));
    }
    for (i, p) in payoffs.iter().enumerate() {
        if p.len() != shape.num_profiles() {
            return Err(GameError::Shape(format!(
                "player {i} payoff tensor has {} entries, expected {}",
                p.len(),
                shape.num_profiles()
            )));
        }
        if let Some(k) = p.iter().position(|v| !v.is_finite()) {
            return Err(GameError::InvalidGame(format!(
                "player {i} payoff at profile {k} is not finite"
            )));
        }
    }
    Ok(())
}
