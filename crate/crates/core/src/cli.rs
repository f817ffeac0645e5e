//! The `capgame` command-line tool.
//!
//! Exit codes: 0 success, 1 verification negative, 2 input error,
//! 3 unsupported capability.

use std::fs;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::capital::from_standard_game;
use crate::codec::{
    parse_game_str, parse_profiles, to_json, write_game, CodecError, EquilibriaDocument,
    EquilibriumEntry, Game, GameKind, SCHEMA_VERSION,
};
use crate::dynamics::Dynamics;
use crate::error::GameError;
use crate::game::{MixedStrategyProfile, TIE_TOL};
use crate::par::Execution;
use crate::simulate::{run as simulate, SimulationConfig, SimulationReport};
use crate::solvers::{
    enumerate_pure_growth_equilibria, enumerate_pure_nash, growth_equilibria,
    support_enumeration_2p, verify_growth_equilibrium, Coverage, EquilibriumResult, SolverOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUILIBRIUM: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "capgame", version, about = "Capital games: transform, solve, verify and simulate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert between capital games and standard (growth-rate) games.
    Transform(TransformArgs),
    /// Compute equilibria.
    Solve(SolveArgs),
    /// Check whether a profile is an equilibrium.
    Verify(VerifyArgs),
    /// Simulate repeated play of a capital game.
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Standard,
    Capital,
}

#[derive(Debug, Args)]
struct TransformArgs {
    /// Input game file, or "-" for stdin.
    input: String,
    #[arg(short, long, default_value = "-")]
    output: String,
    /// Target kind; defaults to the opposite of the input kind.
    #[arg(long, value_enum)]
    to: Option<Target>,
    /// Endowments for standard -> capital (one value, or one per player).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    endowments: Vec<f64>,
    /// Dynamics for standard -> capital: additive, multiplicative or a registered custom name.
    #[arg(long, value_delimiter = ',')]
    dynamics: Vec<String>,
    /// Durations for standard -> capital (default 1).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    durations: Vec<f64>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    input: String,
    /// Pure equilibria only.
    #[arg(long)]
    pure: bool,
    /// Pure and mixed equilibria (2-player games).
    #[arg(long)]
    mixed: bool,
    #[arg(long, default_value_t = 1e-8)]
    eps: f64,
    #[arg(short, long, default_value = "-")]
    output: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    input: String,
    /// Inline JSON profile such as [[0.5,0.5],[1,0]], or a file holding a
    /// profile or the output of `solve`.
    #[arg(long)]
    profile: String,
    #[arg(long, default_value_t = TIE_TOL)]
    eps: f64,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    input: String,
    #[arg(long)]
    profile: String,
    #[arg(long)]
    rounds: u64,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where to write the JSON report.
    #[arg(long, default_value = "-")]
    report: String,
    /// Optional CSV dump of every trajectory (round,trial,player,capital).
    #[arg(long)]
    trajectories: Option<String>,
    /// Run trials on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn unsupported(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_UNSUPPORTED,
            message: message.into(),
        }
    }
}

impl From<CodecError> for Failure {
    fn from(e: CodecError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        match e {
            GameError::TooLarge { .. } | GameError::Arity(_) => Failure::unsupported(e.to_string()),
            _ => Failure::input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(format!("i/o error: {e}"))
    }
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))
        }
    }

    fn write(&mut self, path: &str, text: &str) -> Result<(), Failure> {
        if path == "-" {
            self.stdout.write_all(text.as_bytes())?;
        } else {
            fs::write(path, text).map_err(|e| Failure::input(format!("{path}: {e}")))?;
        }
        Ok(())
    }

    fn game(&mut self, path: &str) -> Result<Game, Failure> {
        let text = self.read(path)?;
        Ok(parse_game_str(&text)?)
    }
}

/// Runs the tool with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    let outcome = match cli.command {
        Command::Transform(a) => transform(&mut io, a),
        Command::Solve(a) => solve(&mut io, a),
        Command::Verify(a) => verify(&mut io, a),
        Command::Simulate(a) => simulate_cmd(&mut io, a),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn broadcast<T: Clone>(values: &[T], n: usize, what: &str) -> Result<Vec<T>, Failure> {
    match values.len() {
        1 => Ok(vec![values[0].clone(); n]),
        len if len == n => Ok(values.to_vec()),
        len => Err(Failure::input(format!("--{what}: {len} values for {n} players"))),
    }
}

fn transform(io: &mut Io, a: TransformArgs) -> Result<i32, Failure> {
    let game = io.game(&a.input)?;
    let target = a.to.unwrap_or(match game.kind() {
        GameKind::Standard => Target::Capital,
        GameKind::Capital => Target::Standard,
    });
    let out = match (game, target) {
        (Game::Capital(g), Target::Standard) => Game::Standard(g.to_standard_game()?),
        (Game::Standard(g), Target::Capital) => {
            let n = g.num_players();
            if a.endowments.is_empty() || a.dynamics.is_empty() {
                return Err(Failure::input(
                    "standard -> capital needs --endowments and --dynamics",
                ));
            }
            let endowments = broadcast(&a.endowments, n, "endowments")?;
            let dynamics = broadcast(&a.dynamics, n, "dynamics")?
                .iter()
                .map(|name| {
                    Dynamics::from_name(name).ok_or_else(|| {
                        Failure::input(format!(
                            "unknown dynamics \"{name}\" (known: {})",
                            Dynamics::REGISTRY.join(", ")
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let durations = if a.durations.is_empty() {
                vec![1.0; n]
            } else {
                broadcast(&a.durations, n, "durations")?
            };
            Game::Capital(from_standard_game(&g, &endowments, &dynamics, &durations)?)
        }
        (g, _) => {
            return Err(Failure::input(format!(
                "input is already a {} game",
                match g.kind() {
                    GameKind::Standard => "standard",
                    GameKind::Capital => "capital",
                }
            )))
        }
    };
    io.write(&a.output, &write_game(&out))?;
    Ok(EXIT_OK)
}

fn solve(io: &mut Io, a: SolveArgs) -> Result<i32, Failure> {
    if !(a.eps >= 0.0) {
        return Err(Failure::input("--eps must be nonnegative"));
    }
    let game = io.game(&a.input)?;
    let n = game.num_players();
    let mixed = a.mixed || (!a.pure && n == 2);
    if a.mixed && n >= 3 {
        return Err(Failure::unsupported(format!(
            "mixed equilibria are only computed for 2-player games; input has {n} (use --pure)"
        )));
    }
    let opts = SolverOptions {
        eps: a.eps,
        ..SolverOptions::default()
    };
    let pure_notice = |n: usize| {
        (n != 2).then(|| {
            format!("only pure equilibria were searched; mixed equilibria are only computed for 2-player games, input has {n}")
        })
    };
    let (results, coverage, notice): (Vec<EquilibriumResult>, Coverage, Option<String>) = match (&game, mixed) {
        (Game::Standard(g), true) if n == 2 => (support_enumeration_2p(g, &opts)?, Coverage::Complete, None),
        (Game::Standard(g), _) => (enumerate_pure_nash(g, &opts)?, Coverage::PureOnly, pure_notice(n)),
        (Game::Capital(g), true) => {
            let out = growth_equilibria(g, &opts)?;
            (out.results, out.coverage, out.notice)
        }
        (Game::Capital(g), false) => (
            enumerate_pure_growth_equilibria(g, &opts)?,
            Coverage::PureOnly,
            pure_notice(n),
        ),
    };
    let doc = EquilibriaDocument {
        schema_version: SCHEMA_VERSION,
        game_kind: game.kind(),
        coverage,
        notice,
        equilibria: results.iter().map(EquilibriumEntry::from).collect(),
    };
    io.write(&a.output, &to_json(&doc))?;
    Ok(EXIT_OK)
}

fn regrets_for(game: &Game, s: &MixedStrategyProfile, eps: f64) -> Result<(bool, Vec<f64>), Failure> {
    match game {
        Game::Standard(g) => {
            let r = g.regrets(s)?;
            Ok((r.iter().all(|&x| x <= eps), r))
        }
        Game::Capital(g) => {
            let v = verify_growth_equilibrium(g, s, eps)?;
            Ok((v.is_equilibrium, v.regrets))
        }
    }
}

fn verify(io: &mut Io, a: VerifyArgs) -> Result<i32, Failure> {
    if !(a.eps >= 0.0) {
        return Err(Failure::input("--eps must be nonnegative"));
    }
    let game = io.game(&a.input)?;
    let profiles = parse_profiles(&a.profile)?;
    let mut all_ok = true;
    let mut report = String::new();
    for (k, s) in profiles.iter().enumerate() {
        let (ok, regrets) = regrets_for(&game, s, a.eps)?;
        all_ok &= ok;
        report.push_str(&format!(
            "profile {k}: {}\n",
            if ok { "equilibrium" } else { "not an equilibrium" }
        ));
        for (name, r) in game.labels().players.iter().zip(&regrets) {
            report.push_str(&format!("  {name}: regret {:e}\n", r.max(0.0)));
        }
    }
    io.write("-", &report)?;
    Ok(if all_ok { EXIT_OK } else { EXIT_NOT_EQUILIBRIUM })
}

fn trajectories_csv(report: &SimulationReport) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Failure::input(format!("csv: {e}"));
    w.write_record(["round", "trial", "player", "capital"]).map_err(csv_err)?;
    for (trial, t) in report.trajectories.iter().flatten().enumerate() {
        for (round, capitals) in t.capitals.iter().enumerate() {
            for (player, c) in capitals.iter().enumerate() {
                w.write_record([
                    round.to_string(),
                    trial.to_string(),
                    player.to_string(),
                    c.to_string(),
                ])
                .map_err(csv_err)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Failure::input(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn simulate_cmd(io: &mut Io, a: SimulateArgs) -> Result<i32, Failure> {
    let game = match io.game(&a.input)? {
        Game::Capital(g) => g,
        Game::Standard(_) => return Err(Failure::input("simulate needs a capital game")),
    };
    let mut profiles = parse_profiles(&a.profile)?;
    if profiles.len() != 1 {
        return Err(Failure::input(format!(
            "--profile: expected one profile, found {}",
            profiles.len()
        )));
    }
    let mut cfg = SimulationConfig::new(profiles.remove(0), a.rounds, a.trials, a.seed);
    cfg.record_trajectories = a.trajectories.is_some();
    if a.sequential {
        cfg.execution = Execution::Sequential;
    }
    let report = simulate(&game, &cfg)?;
    if let Some(path) = &a.trajectories {
        let csv = trajectories_csv(&report)?;
        io.write(path, &csv)?;
    }
    io.write(&a.report, &to_json(&report))?;
    Ok(EXIT_OK)
}
