//! Random game generators shared by the integration suites.
#![allow(dead_code)]

use capgame::{CapitalGame, Dynamics, MixedStrategyProfile, StandardGame};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Additive, multiplicative and the registered square-root dynamics.
pub fn all_dynamics() -> Vec<Dynamics> {
    vec![
        Dynamics::Additive,
        Dynamics::Multiplicative,
        Dynamics::from_name("sqrt").unwrap(),
    ]
}

pub fn random_counts(rng: &mut impl Rng, n: usize, max_actions: usize) -> Vec<usize> {
    (0..n).map(|_| rng.random_range(1..=max_actions)).collect()
}

pub fn random_standard(rng: &mut impl Rng, counts: &[usize], lo: f64, hi: f64) -> StandardGame {
    let size: usize = counts.iter().product();
    let payoffs = (0..counts.len())
        .map(|_| (0..size).map(|_| rng.random_range(lo..hi)).collect())
        .collect();
    StandardGame::new(counts.to_vec(), payoffs).unwrap()
}

/// Payoffs and endowments uniform in (0.1, 10), unit durations.
pub fn random_positive_capital(rng: &mut impl Rng, counts: &[usize], dynamics: Vec<Dynamics>) -> CapitalGame {
    let n = counts.len();
    let size: usize = counts.iter().product();
    let payoffs = (0..n)
        .map(|_| (0..size).map(|_| rng.random_range(0.1..10.0)).collect())
        .collect();
    let endowments = (0..n).map(|_| rng.random_range(0.1..10.0)).collect();
    CapitalGame::new(counts.to_vec(), payoffs, endowments, vec![1.0; n], dynamics).unwrap()
}

/// Additive or multiplicative, chosen per player.
pub fn random_builtin_dynamics(rng: &mut impl Rng, n: usize) -> Vec<Dynamics> {
    (0..n)
        .map(|_| {
            if rng.random_bool(0.5) {
                Dynamics::Additive
            } else {
                Dynamics::Multiplicative
            }
        })
        .collect()
}

pub fn random_distribution(rng: &mut impl Rng, m: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..m).map(|_| -rng.random::<f64>().max(1e-300).ln()).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

pub fn random_profile(rng: &mut impl Rng, counts: &[usize]) -> MixedStrategyProfile {
    MixedStrategyProfile::new(counts.iter().map(|&m| random_distribution(rng, m)).collect()).unwrap()
}

/// Expected payoff of `player` when they switch to pure `action`, computed by
/// summing over every profile.
pub fn deviation_payoff(g: &StandardGame, s: &MixedStrategyProfile, player: usize, action: usize) -> f64 {
    let counts = g.action_counts();
    let size: usize = counts.iter().product();
    let mut total = 0.0;
    for idx in 0..size {
        let mut rest = idx;
        let mut actions = vec![0; counts.len()];
        for p in (0..counts.len()).rev() {
            actions[p] = rest % counts[p];
            rest /= counts[p];
        }
        if actions[player] != action {
            continue;
        }
        let prob: f64 = (0..counts.len())
            .filter(|&p| p != player)
            .map(|p| s.strategy(p)[actions[p]])
            .product();
        total += prob * g.payoffs(player)[idx];
    }
    total
}

/// Largest gain any player gets from a unilateral pure deviation.
pub fn brute_force_regret(g: &StandardGame, s: &MixedStrategyProfile) -> f64 {
    (0..g.num_players())
        .map(|i| {
            let current = g.expected_utility(s, i).unwrap();
            (0..g.action_counts()[i])
                .map(|a| deviation_payoff(g, s, i, a) - current)
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .fold(f64::NEG_INFINITY, f64::max)
}
