//! Canonical layout of the action-profile space.
//!
//! Every payoff tensor in the crate is a flat vector indexed by the canonical
//! profile index: the last player's action varies fastest. For action counts
//! `[m_0, .., m_{n-1}]` the profile `(a_0, .., a_{n-1})` sits at
//! `sum_i a_i * stride_i` with `stride_{n-1} = 1` and
//! `stride_i = stride_{i+1} * m_{i+1}`.

use crate::error::{GameError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    action_counts: Vec<usize>,
    strides: Vec<usize>,
    num_profiles: usize,
}

impl Shape {
    pub fn new(action_counts: Vec<usize>) -> Result<Self> {
        if action_counts.is_empty() {
            return Err(GameError::InvalidGame("a game needs at least one player".into()));
        }
        if let Some(i) = action_counts.iter().position(|&m| m == 0) {
            return Err(GameError::InvalidGame(format!(
                "player {i} has no actions"
            )));
        }
        let mut strides = vec![1usize; action_counts.len()];
        let mut total = 1usize;
        for i in (0..action_counts.len()).rev() {
            strides[i] = total;
            total = total.checked_mul(action_counts[i]).ok_or_else(|| {
                GameError::InvalidGame("profile space size overflows usize".into())
            })?;
        }
        Ok(Shape {
            action_counts,
            strides,
            num_profiles: total,
        })
    }

    pub fn num_players(&self) -> usize {
        self.action_counts.len()
    }

    pub fn action_counts(&self) -> &[usize] {
        &self.action_counts
    }

    pub fn num_actions(&self, player: usize) -> usize {
        self.action_counts[player]
    }

    pub fn num_profiles(&self) -> usize {
        self.num_profiles
    }

    pub fn stride(&self, player: usize) -> usize {
        self.strides[player]
    }

    pub fn check_player(&self, player: usize) -> Result<()> {
        if player < self.num_players() {
            Ok(())
        } else {
            Err(GameError::PlayerIndex {
                index: player,
                players: self.num_players(),
            })
        }
    }

    /// Canonical index of an action profile. Panics on out-of-range actions;
    /// use [`Shape::try_index`] for untrusted input.
    pub fn index(&self, actions: &[usize]) -> usize {
        actions
            .iter()
            .zip(&self.strides)
            .map(|(a, s)| a * s)
            .sum()
    }

    pub fn try_index(&self, actions: &[usize]) -> Result<usize> {
        if actions.len() != self.num_players() {
            return Err(GameError::Shape(format!(
                "action profile has {} entries, game has {} players",
                actions.len(),
                self.num_players()
            )));
        }
        for (i, (&a, &m)) in actions.iter().zip(&self.action_counts).enumerate() {
            if a >= m {
                return Err(GameError::Shape(format!(
                    "action {a} of player {i} is out of range (player has {m} actions)"
                )));
            }
        }
        Ok(self.index(actions))
    }

    /// Action of `player` within the profile at canonical `index`.
    pub fn action_of(&self, index: usize, player: usize) -> usize {
        (index / self.strides[player]) % self.action_counts[player]
    }

    pub fn profile(&self, index: usize) -> Vec<usize> {
        (0..self.num_players())
            .map(|i| self.action_of(index, i))
            .collect()
    }

    /// Index of the profile obtained by switching `player` to `action`.
    pub fn deviate(&self, index: usize, player: usize, action: usize) -> usize {
        let current = self.action_of(index, player);
        index - current * self.strides[player] + action * self.strides[player]
    }
}
