//! JSON documents read and written by the command-line tool.
//!
//! A game file looks like
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "kind": "capital",
//!   "players": ["gambler"],
//!   "actions": [["heads", "tails"]],
//!   "payoffs": [[150.0, 60.0]],
//!   "endowments": [100.0],
//!   "durations": [1.0],
//!   "dynamics": ["multiplicative"]
//! }
//! ```
//!
//! Payoff arrays are flat, in canonical profile order (last player fastest).
//! `dynamics` entries are `"additive"`, `"multiplicative"` or
//! `{"custom": "<name>"}` where the name refers to a registered built-in
//! linearization such as `"sqrt"`. Standard games omit the last three fields.
//! Unknown fields are rejected.

use std::io::Read;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::capital::CapitalGame;
use crate::dynamics::Dynamics;
use crate::error::GameError;
use crate::game::{Labels, MixedStrategyProfile, StandardGame};
use crate::shape::Shape;
use crate::solvers::{Classification, Coverage, EquilibriumResult, Source};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document:\n  {}", .0.join("\n  "))]
    Validation(Vec<String>),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for CodecError {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            return CodecError::Io(e.into());
        }
        CodecError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameKind {
    Standard,
    Capital,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomRef {
    pub custom: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DynamicsEntry {
    Named(String),
    Custom(CustomRef),
}

/// On-disk form of a game, before validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub schema_version: u32,
    pub kind: GameKind,
    pub players: Vec<String>,
    pub actions: Vec<Vec<String>>,
    pub payoffs: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endowments: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub durations: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dynamics: Option<Vec<DynamicsEntry>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Game {
    Standard(StandardGame),
    Capital(CapitalGame),
}

impl Game {
    pub fn kind(&self) -> GameKind {
        match self {
            Game::Standard(_) => GameKind::Standard,
            Game::Capital(_) => GameKind::Capital,
        }
    }

    pub fn num_players(&self) -> usize {
        match self {
            Game::Standard(g) => g.num_players(),
            Game::Capital(g) => g.num_players(),
        }
    }

    pub fn action_counts(&self) -> &[usize] {
        match self {
            Game::Standard(g) => g.action_counts(),
            Game::Capital(g) => g.action_counts(),
        }
    }

    pub fn labels(&self) -> &Labels {
        match self {
            Game::Standard(g) => g.labels(),
            Game::Capital(g) => g.labels(),
        }
    }
}

fn dynamics_entry(d: &Dynamics) -> DynamicsEntry {
    match d {
        Dynamics::Additive | Dynamics::Multiplicative => DynamicsEntry::Named(d.name().to_string()),
        Dynamics::Custom(c) => DynamicsEntry::Custom(CustomRef {
            custom: c.name().to_string(),
        }),
    }
}

impl From<&Game> for GameFile {
    fn from(game: &Game) -> Self {
        let labels = game.labels().clone();
        match game {
            Game::Standard(g) => GameFile {
                schema_version: SCHEMA_VERSION,
                kind: GameKind::Standard,
                players: labels.players,
                actions: labels.actions,
                payoffs: g.all_payoffs().to_vec(),
                endowments: None,
                durations: None,
                dynamics: None,
            },
            Game::Capital(g) => GameFile {
                schema_version: SCHEMA_VERSION,
                kind: GameKind::Capital,
                players: labels.players,
                actions: labels.actions,
                payoffs: g.all_payoffs().to_vec(),
                endowments: Some(g.endowments().to_vec()),
                durations: Some(g.durations().to_vec()),
                dynamics: Some(g.dynamics().iter().map(dynamics_entry).collect()),
            },
        }
    }
}

fn lookup_dynamics(entry: &DynamicsEntry) -> std::result::Result<Dynamics, String> {
    match entry {
        DynamicsEntry::Named(name) => match name.as_str() {
            "additive" => Ok(Dynamics::Additive),
            "multiplicative" => Ok(Dynamics::Multiplicative),
            other => Err(format!(
                "unknown dynamics \"{other}\" (expected \"additive\", \"multiplicative\" or {{\"custom\": name}})"
            )),
        },
        DynamicsEntry::Custom(CustomRef { custom }) => match Dynamics::from_name(custom) {
            Some(d @ Dynamics::Custom(_)) => Ok(d),
            _ => Err(format!("unknown custom dynamics \"{custom}\"")),
        },
    }
}

impl GameFile {
    /// Validates the document and builds the in-memory game, reporting every
    /// problem found with its field path.
    pub fn into_game(self) -> Result<Game, CodecError> {
        let mut errors = Vec::new();
        if self.schema_version != SCHEMA_VERSION {
            errors.push(format!(
                "schema_version: unsupported version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            ));
        }
        let n = self.players.len();
        if n == 0 {
            errors.push("players: at least one player is required".into());
        }
        if self.actions.len() != n {
            errors.push(format!("actions: {} lists for {n} players", self.actions.len()));
        }
        for (i, a) in self.actions.iter().enumerate() {
            if a.is_empty() {
                errors.push(format!("actions[{i}]: a player needs at least one action"));
            }
        }
        let counts: Vec<usize> = self.actions.iter().map(Vec::len).collect();
        let shape = if counts.len() == n && n > 0 {
            Shape::new(counts).map_err(|e| errors.push(format!("actions: {e}"))).ok()
        } else {
            None
        };
        if self.payoffs.len() != n {
            errors.push(format!("payoffs: {} tensors for {n} players", self.payoffs.len()));
        }
        if let Some(shape) = &shape {
            for (i, p) in self.payoffs.iter().enumerate() {
                if p.len() != shape.num_profiles() {
                    errors.push(format!(
                        "payoffs[{i}]: expected {} entries, found {}",
                        shape.num_profiles(),
                        p.len()
                    ));
                }
            }
        }
        let check_len = |errors: &mut Vec<String>, field: &str, len: usize| {
            if len != n {
                errors.push(format!("{field}: {len} entries for {n} players"));
            }
        };

        let mut dynamics = Vec::new();
        match self.kind {
            GameKind::Standard => {
                for (field, present) in [
                    ("endowments", self.endowments.is_some()),
                    ("durations", self.durations.is_some()),
                    ("dynamics", self.dynamics.is_some()),
                ] {
                    if present {
                        errors.push(format!("{field}: not allowed in a standard game"));
                    }
                }
            }
            GameKind::Capital => {
                match &self.endowments {
                    None => errors.push("endowments: required for a capital game".into()),
                    Some(w) => check_len(&mut errors, "endowments", w.len()),
                }
                if let Some(d) = &self.durations {
                    check_len(&mut errors, "durations", d.len());
                    for (i, dt) in d.iter().enumerate() {
                        if *dt <= 0.0 {
                            errors.push(format!("durations[{i}]: must be positive, got {dt}"));
                        }
                    }
                }
                match &self.dynamics {
                    None => errors.push("dynamics: required for a capital game".into()),
                    Some(entries) => {
                        check_len(&mut errors, "dynamics", entries.len());
                        for (i, e) in entries.iter().enumerate() {
                            match lookup_dynamics(e) {
                                Ok(d) => dynamics.push(d),
                                Err(msg) => errors.push(format!("dynamics[{i}]: {msg}")),
                            }
                        }
                    }
                }
            }
        }
        if !errors.is_empty() {
            return Err(CodecError::Validation(errors));
        }

        let shape = shape.expect("validated");
        let labels = Labels {
            players: self.players,
            actions: self.actions,
        };
        let built = match self.kind {
            GameKind::Standard => StandardGame::from_parts(shape, self.payoffs, labels).map(Game::Standard),
            GameKind::Capital => {
                let durations = self.durations.unwrap_or_else(|| vec![1.0; n]);
                CapitalGame::from_parts(
                    shape,
                    self.payoffs,
                    self.endowments.expect("validated"),
                    durations,
                    dynamics,
                    labels,
                )
                .map(Game::Capital)
            }
        };
        built.map_err(|e| match e {
            GameError::Domain(violations) => CodecError::Validation(
                violations
                    .iter()
                    .map(|v| match v.profile {
                        Some(p) => format!(
                            "payoffs[{}][{p}]: {} is outside the {} domain",
                            v.player, v.value, v.dynamics
                        ),
                        None => format!(
                            "endowments[{}]: {} is outside the {} domain",
                            v.player, v.value, v.dynamics
                        ),
                    })
                    .collect(),
            ),
            other => CodecError::Validation(vec![other.to_string()]),
        })
    }
}

pub fn parse_game_str(text: &str) -> Result<Game, CodecError> {
    let file: GameFile = serde_json::from_str(text)?;
    file.into_game()
}

pub fn parse_game_reader<R: Read>(mut reader: R) -> Result<Game, CodecError> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_game_str(&text)
}

/// Pretty-printed JSON followed by a newline. Field order is fixed, so equal
/// games serialize to identical bytes.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn write_game(game: &Game) -> String {
    to_json(&GameFile::from(game))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquilibriumEntry {
    pub profile: Vec<Vec<f64>>,
    pub classification: Classification,
    pub regrets: Vec<f64>,
    pub source: Source,
}

impl From<&EquilibriumResult> for EquilibriumEntry {
    fn from(r: &EquilibriumResult) -> Self {
        EquilibriumEntry {
            profile: r.profile.strategies().to_vec(),
            classification: r.classification,
            regrets: r.regrets.clone(),
            source: r.source,
        }
    }
}

/// Output of `solve`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquilibriaDocument {
    pub schema_version: u32,
    pub game_kind: GameKind,
    pub coverage: Coverage,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
    pub equilibria: Vec<EquilibriumEntry>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ProfileSource {
    Single(Vec<Vec<f64>>),
    Equilibria(EquilibriaDocument),
}

/// Profiles given on the command line: either inline JSON (`[[0.5,0.5],[1,0]]`)
/// or a path to a file holding such an array or an equilibria document.
pub fn parse_profiles(arg: &str) -> Result<Vec<MixedStrategyProfile>, CodecError> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)?
    };
    let source: ProfileSource = serde_json::from_str(&text)?;
    let raw = match source {
        ProfileSource::Single(p) => vec![p],
        ProfileSource::Equilibria(doc) => doc.equilibria.into_iter().map(|e| e.profile).collect(),
    };
    if raw.is_empty() {
        return Err(CodecError::Validation(vec!["no profiles given".into()]));
    }
    raw.into_iter()
        .enumerate()
        .map(|(k, p)| {
            MixedStrategyProfile::new(p)
                .map_err(|e| CodecError::Validation(vec![format!("profile {k}: {e}")]))
        })
        .collect()
}
