//! Monte Carlo simulation of repeated capital games.
//!
//! Each round's payoff becomes the next round's endowment while the dynamics
//! stay fixed: a player's payoff tensor is rescaled so the growth per profile,
//! measured through the player's linearization, is the same every round. The
//! simulator therefore tracks each player's capital in linearized form
//! `y = v(w)` and adds `v(x_i(a)) - v(w_i)` per round. For multiplicative
//! players this is log-wealth accumulation, which cannot overflow.
//!
//! Randomness: trial `t` draws from a ChaCha8 stream seeded with the run seed
//! (expanded by `seed_from_u64`) and stream number `t`, so trials are
//! independent, reproducible and order-free.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::capital::CapitalGame;
use crate::error::{GameError, Result};
use crate::game::{ActionProfile, MixedStrategyProfile};
use crate::par::{map_indexed, Execution};
use crate::shape::Shape;

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    pub rounds: u64,
    pub trials: usize,
    pub seed: u64,
    /// Strategy profile, held fixed across rounds.
    pub profile: MixedStrategyProfile,
    pub record_trajectories: bool,
    pub execution: Execution,
}

impl SimulationConfig {
    pub fn new(profile: MixedStrategyProfile, rounds: u64, trials: usize, seed: u64) -> Self {
        SimulationConfig {
            rounds,
            trials,
            seed,
            profile,
            record_trajectories: false,
            execution: Execution::default(),
        }
    }

    fn validate(&self, game: &CapitalGame) -> Result<()> {
        if self.rounds == 0 {
            return Err(GameError::Config("rounds must be at least 1".into()));
        }
        if self.trials == 0 {
            return Err(GameError::Config("trials must be at least 1".into()));
        }
        self.profile.check_shape(game.shape())
    }
}

/// The RNG stream of one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn sample_action<R: Rng>(strategy: &[f64], rng: &mut R) -> usize {
    let u: f64 = rng.random();
    let mut cumulative = 0.0;
    let mut last_positive = 0;
    for (k, &p) in strategy.iter().enumerate() {
        if p > 0.0 {
            cumulative += p;
            last_positive = k;
            if u < cumulative {
                return k;
            }
        }
    }
    last_positive
}

fn sample_profile<R: Rng>(shape: &Shape, s: &MixedStrategyProfile, rng: &mut R) -> usize {
    s.strategies()
        .iter()
        .enumerate()
        .map(|(i, strategy)| sample_action(strategy, rng) * shape.stride(i))
        .sum()
}

/// Per-player, per-profile increment of linearized capital.
fn increments(game: &CapitalGame) -> Result<Vec<Vec<f64>>> {
    (0..game.num_players())
        .map(|i| {
            let d = &game.dynamics()[i];
            let base = d.linearize(game.endowments()[i])?;
            game.payoffs(i)
                .iter()
                .map(|&x| Ok(d.linearize(x)? - base))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome {
    pub endowments: Vec<f64>,
    pub actions: ActionProfile,
    /// Players whose capital left their dynamics domain this round.
    pub absorbed: Vec<usize>,
}

/// Plays one round from `current` capitals. A player whose new capital would
/// leave their domain is reported in `absorbed` and keeps their old capital.
pub fn step<R: Rng>(
    game: &CapitalGame,
    current: &[f64],
    s: &MixedStrategyProfile,
    rng: &mut R,
) -> Result<StepOutcome> {
    s.check_shape(game.shape())?;
    if current.len() != game.num_players() {
        return Err(GameError::Shape(format!(
            "{} capitals for {} players",
            current.len(),
            game.num_players()
        )));
    }
    let deltas = increments(game)?;
    let idx = sample_profile(game.shape(), s, rng);
    let mut endowments = current.to_vec();
    let mut absorbed = Vec::new();
    for (i, d) in game.dynamics().iter().enumerate() {
        let y = d.linearize(current[i])? + deltas[i][idx];
        match d.delinearize(y) {
            Ok(w) if d.in_domain(w) => endowments[i] = w,
            _ => absorbed.push(i),
        }
    }
    Ok(StepOutcome {
        endowments,
        actions: ActionProfile(game.shape().profile(idx)),
        absorbed,
    })
}

/// Rounds at which ensemble averages are recorded: every round up to 16, then
/// roughly ten per decade, always including the last round.
pub fn checkpoint_rounds(rounds: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (0..=rounds.min(16)).collect();
    let mut k = 13u32;
    loop {
        let r = 10f64.powf(k as f64 / 10.0).floor() as u64;
        if r >= rounds {
            break;
        }
        if r > *out.last().unwrap() {
            out.push(r);
        }
        k += 1;
    }
    if *out.last().unwrap() != rounds {
        out.push(rounds);
    }
    out
}

/// Full path of one trial: capitals after every round (round 0 first) and the
/// canonical index of each realized profile.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub capitals: Vec<Vec<f64>>,
    pub realized: Vec<usize>,
}

#[derive(Debug, Clone)]
struct TrialOutcome {
    final_linearized: Vec<f64>,
    /// Round at which the trial left a domain, if it did.
    absorbed_at: Option<u64>,
    /// Capitals at each checkpoint reached before absorption.
    checkpoint_capitals: Vec<Vec<f64>>,
    trajectory: Option<Trajectory>,
}

fn run_trial(
    game: &CapitalGame,
    cfg: &SimulationConfig,
    deltas: &[Vec<f64>],
    initial: &[f64],
    checkpoints: &[u64],
    trial: usize,
) -> TrialOutcome {
    let dynamics = game.dynamics();
    let shape = game.shape();
    let mut rng = trial_rng(cfg.seed, trial as u64);
    let mut y = initial.to_vec();
    let capitals = |y: &[f64]| -> Vec<f64> {
        y.iter()
            .zip(dynamics)
            .map(|(&v, d)| d.delinearize_unchecked(v))
            .collect()
    };
    let mut checkpoint_capitals = vec![capitals(&y)];
    let mut next_checkpoint = 1;
    let mut trajectory = cfg.record_trajectories.then(|| Trajectory {
        capitals: vec![capitals(&y)],
        realized: Vec::new(),
    });
    let mut absorbed_at = None;

    for round in 1..=cfg.rounds {
        let idx = sample_profile(shape, &cfg.profile, &mut rng);
        for (i, yi) in y.iter_mut().enumerate() {
            *yi += deltas[i][idx];
        }
        if let Some(t) = trajectory.as_mut() {
            t.realized.push(idx);
        }
        if y.iter().zip(dynamics).any(|(&v, d)| !d.in_image(v)) {
            absorbed_at = Some(round);
            break;
        }
        if let Some(t) = trajectory.as_mut() {
            t.capitals.push(capitals(&y));
        }
        if next_checkpoint < checkpoints.len() && checkpoints[next_checkpoint] == round {
            checkpoint_capitals.push(capitals(&y));
            next_checkpoint += 1;
        }
    }
    TrialOutcome {
        final_linearized: y,
        absorbed_at,
        checkpoint_capitals,
        trajectory,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlayerReport {
    pub name: String,
    pub dynamics: String,
    pub initial_capital: f64,
    /// Mean over surviving trials of `(v(w_T) - v(w_0)) / (T * dt)`.
    pub time_average_growth_estimate: Option<f64>,
    /// Standard error of that mean across trials.
    pub standard_error: Option<f64>,
    pub theoretical_growth: f64,
    /// Mean capital over trials still alive at each checkpoint round.
    pub ensemble_average_capital: Vec<f64>,
    /// Median over surviving trials of the final capital.
    pub median_final_capital: Option<f64>,
    pub final_capitals: Vec<f64>,
    /// Final linearized capital `v(w_T)` per trial (log-capital for
    /// multiplicative players).
    pub final_linearized: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub seed: u64,
    pub rounds: u64,
    pub trials: usize,
    pub profile: Vec<Vec<f64>>,
    pub checkpoints: Vec<u64>,
    pub absorbed_trials: usize,
    pub players: Vec<PlayerReport>,
    #[serde(skip)]
    pub trajectories: Option<Vec<Trajectory>>,
}

fn mean_and_se(values: &[f64]) -> (Option<f64>, Option<f64>) {
    let n = values.len();
    if n == 0 {
        return (None, None);
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return (Some(mean), None);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    (Some(mean), Some((var / n as f64).sqrt()))
}

fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    Some(if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    })
}

/// Runs `cfg.trials` independent sequences of `cfg.rounds` rounds.
///
/// Identical inputs give identical reports regardless of execution mode.
/// Trials that leave a dynamics domain stop, are counted in
/// `absorbed_trials`, and are excluded from the growth estimates.
pub fn run(game: &CapitalGame, cfg: &SimulationConfig) -> Result<SimulationReport> {
    cfg.validate(game)?;
    let deltas = increments(game)?;
    let initial: Vec<f64> = game
        .dynamics()
        .iter()
        .zip(game.endowments())
        .map(|(d, &w)| d.linearize(w))
        .collect::<Result<_>>()?;
    let checkpoints = checkpoint_rounds(cfg.rounds);

    let trials = map_indexed(cfg.execution, cfg.trials, |t| {
        run_trial(game, cfg, &deltas, &initial, &checkpoints, t)
    });

    let survivors: Vec<&TrialOutcome> = trials.iter().filter(|t| t.absorbed_at.is_none()).collect();
    let absorbed_trials = trials.len() - survivors.len();
    let horizon = cfg.rounds as f64;

    let players = (0..game.num_players())
        .map(|i| {
            let dt = game.durations()[i];
            let rates: Vec<f64> = survivors
                .iter()
                .map(|t| (t.final_linearized[i] - initial[i]) / (horizon * dt))
                .collect();
            let (estimate, se) = mean_and_se(&rates);
            let ensemble_average_capital = (0..checkpoints.len())
                .map(|c| {
                    let alive: Vec<f64> = trials
                        .iter()
                        .filter_map(|t| t.checkpoint_capitals.get(c).map(|w| w[i]))
                        .collect();
                    alive.iter().sum::<f64>() / alive.len().max(1) as f64
                })
                .collect();
            let d = &game.dynamics()[i];
            let final_capitals: Vec<f64> = trials
                .iter()
                .map(|t| d.delinearize_unchecked(t.final_linearized[i]))
                .collect();
            let surviving_finals: Vec<f64> = survivors
                .iter()
                .map(|t| d.delinearize_unchecked(t.final_linearized[i]))
                .collect();
            Ok(PlayerReport {
                name: game.labels().players[i].clone(),
                dynamics: d.name().to_string(),
                initial_capital: game.endowments()[i],
                time_average_growth_estimate: estimate,
                standard_error: se,
                theoretical_growth: game.time_average_growth(&cfg.profile, i)?,
                ensemble_average_capital,
                median_final_capital: median(&surviving_finals),
                final_capitals,
                final_linearized: trials.iter().map(|t| t.final_linearized[i]).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let trajectories = cfg
        .record_trajectories
        .then(|| trials.into_iter().filter_map(|t| t.trajectory).collect());

    Ok(SimulationReport {
        seed: cfg.seed,
        rounds: cfg.rounds,
        trials: cfg.trials,
        profile: cfg.profile.strategies().to_vec(),
        checkpoints,
        absorbed_trials,
        players,
        trajectories,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErgodicityRow {
    pub estimate: Option<f64>,
    pub theoretical: f64,
    pub abs_error: Option<f64>,
    pub standard_error: Option<f64>,
}

/// Compares each player's simulated time-average growth with the expected
/// growth rate under the profile.
pub fn ergodicity_check(game: &CapitalGame, cfg: &SimulationConfig) -> Result<Vec<ErgodicityRow>> {
    let report = run(game, cfg)?;
    Ok(report
        .players
        .iter()
        .map(|p| ErgodicityRow {
            estimate: p.time_average_growth_estimate,
            theoretical: p.theoretical_growth,
            abs_error: p
                .time_average_growth_estimate
                .map(|e| (e - p.theoretical_growth).abs()),
            standard_error: p.standard_error,
        })
        .collect())
}
