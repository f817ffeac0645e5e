//! Equilibrium computation.
//!
//! Pure equilibria are found by exhaustive profile checking for any number of
//! players. Mixed equilibria of two-player games come from support
//! enumeration, with vertex enumeration of the best-response polytopes as a
//! fallback for degenerate games where no support pair yields a solution.
//! Growth equilibria of a capital game are the equilibria of its growth-rate
//! game, re-verified against the capital game itself.

use serde::{Deserialize, Serialize};

use crate::capital::CapitalGame;
use crate::error::{GameError, Result};
use crate::game::{MixedStrategyProfile, StandardGame, TIE_TOL};
use crate::linalg;
use crate::par::{map_indexed, Execution};

/// Profiles closer than this in max norm are reported once.
pub const DEDUP_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Acceptance threshold for regrets of computed equilibria.
    pub eps: f64,
    /// Tie tolerance for pure best responses.
    pub tie_tol: f64,
    /// Largest profile space accepted by pure enumeration.
    pub max_profiles: usize,
    /// Largest per-player action count accepted by support enumeration.
    pub max_support_actions: usize,
    pub execution: Execution,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            eps: 1e-8,
            tie_tol: TIE_TOL,
            max_profiles: 10_000_000,
            max_support_actions: 12,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Pure,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Solved on the game as given.
    Direct,
    /// Solved on the growth-rate game of a capital game and mapped back.
    ViaCorrespondence,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumResult {
    pub profile: MixedStrategyProfile,
    pub classification: Classification,
    /// Per-player regret, clamped at zero.
    pub regrets: Vec<f64>,
    pub source: Source,
}

impl EquilibriumResult {
    fn new(profile: MixedStrategyProfile, raw_regrets: Vec<f64>, source: Source) -> Self {
        let classification = if profile.is_pure() {
            Classification::Pure
        } else {
            Classification::Mixed
        };
        EquilibriumResult {
            profile,
            classification,
            regrets: raw_regrets.into_iter().map(|r| r.max(0.0)).collect(),
            source,
        }
    }
}

/// Exhaustively lists the pure Nash equilibria in canonical profile order.
pub fn enumerate_pure_nash(g: &StandardGame, opts: &SolverOptions) -> Result<Vec<EquilibriumResult>> {
    let shape = g.shape();
    let total = shape.num_profiles();
    if total > opts.max_profiles {
        return Err(GameError::TooLarge {
            what: "profile space",
            size: total,
            cap: opts.max_profiles,
        });
    }
    const CHUNK: usize = 4096;
    let chunks = total.div_ceil(CHUNK);
    let is_equilibrium = |idx: usize| {
        (0..shape.num_players()).all(|i| {
            let u = g.payoffs(i);
            let best = (0..shape.num_actions(i))
                .map(|k| u[shape.deviate(idx, i, k)])
                .fold(f64::NEG_INFINITY, f64::max);
            u[idx] >= best - opts.tie_tol
        })
    };
    let found: Vec<usize> = map_indexed(opts.execution, chunks, |c| {
        (c * CHUNK..((c + 1) * CHUNK).min(total))
            .filter(|&idx| is_equilibrium(idx))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    found
        .into_iter()
        .map(|idx| {
            let profile = MixedStrategyProfile::pure(shape.action_counts(), &shape.profile(idx))?;
            let regrets = g.regrets(&profile)?;
            Ok(EquilibriumResult::new(profile, regrets, Source::Direct))
        })
        .collect()
}

/// Pure growth equilibria: the pure Nash equilibria of the growth-rate game.
///
/// Pure best responses compare deterministic outcomes, so the result does not
/// depend on which (strictly increasing) linearizations the players use.
pub fn enumerate_pure_growth_equilibria(
    game: &CapitalGame,
    opts: &SolverOptions,
) -> Result<Vec<EquilibriumResult>> {
    let standard = game.to_standard_game()?;
    Ok(enumerate_pure_nash(&standard, opts)?
        .into_iter()
        .map(|mut r| {
            r.source = Source::ViaCorrespondence;
            r
        })
        .collect())
}

/// Lexicographically ordered `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(pos) = (0..k).rev().find(|&p| current[p] < n - k + p) else {
            return out;
        };
        current[pos] += 1;
        for p in pos + 1..k {
            current[p] = current[p - 1] + 1;
        }
    }
}

/// Mixed strategy over `support` (out of `len` actions) making the opponent
/// indifferent across `tight`, where `payoff(a, b)` is the opponent's payoff
/// when it plays `b` against our `a`.
fn indifference_strategy(
    support: &[usize],
    tight: &[usize],
    len: usize,
    payoff: impl Fn(usize, usize) -> f64,
    eps: f64,
) -> Option<Vec<f64>> {
    let k = support.len();
    let mut a = Vec::with_capacity(tight.len() + 1);
    let mut b = Vec::with_capacity(tight.len() + 1);
    for &t in tight {
        let mut row: Vec<f64> = support.iter().map(|&s| payoff(s, t)).collect();
        row.push(-1.0);
        a.push(row);
        b.push(0.0);
    }
    let mut norm = vec![1.0; k];
    norm.push(0.0);
    a.push(norm);
    b.push(1.0);
    let sol = linalg::solve(a, b, eps)?;
    if sol[..k].iter().any(|&p| !(p >= -eps)) {
        return None;
    }
    let mut full = vec![0.0; len];
    for (&s, &p) in support.iter().zip(&sol[..k]) {
        full[s] = p;
    }
    Some(clean_distribution(full))
}

/// Clamps rounding noise and renormalizes.
fn clean_distribution(mut v: Vec<f64>) -> Vec<f64> {
    for p in v.iter_mut() {
        if *p <= 1e-12 {
            *p = 0.0;
        }
    }
    if let Some(k) = v.iter().position(|&p| p >= 1.0 - 1e-12) {
        v.iter_mut().for_each(|p| *p = 0.0);
        v[k] = 1.0;
        return v;
    }
    let total: f64 = v.iter().sum();
    v.iter_mut().for_each(|p| *p /= total);
    v
}

fn check_two_player(g: &StandardGame, opts: &SolverOptions) -> Result<(usize, usize)> {
    if g.num_players() != 2 {
        return Err(GameError::Arity(g.num_players()));
    }
    let (m, n) = (g.action_counts()[0], g.action_counts()[1]);
    let largest = m.max(n);
    if largest > opts.max_support_actions {
        return Err(GameError::TooLarge {
            what: "action count",
            size: largest,
            cap: opts.max_support_actions,
        });
    }
    Ok((m, n))
}

fn accept(g: &StandardGame, x: Vec<f64>, y: Vec<f64>, eps: f64) -> Option<(MixedStrategyProfile, Vec<f64>)> {
    let profile = MixedStrategyProfile::new(vec![x, y]).ok()?;
    let regrets = g.regrets(&profile).ok()?;
    regrets.iter().all(|&r| r <= eps).then_some((profile, regrets))
}

fn dedup(found: impl IntoIterator<Item = (MixedStrategyProfile, Vec<f64>)>) -> Vec<EquilibriumResult> {
    let mut kept: Vec<EquilibriumResult> = Vec::new();
    for (profile, regrets) in found {
        if kept.iter().all(|r| r.profile.distance(&profile) >= DEDUP_TOL) {
            kept.push(EquilibriumResult::new(profile, regrets, Source::Direct));
        }
    }
    kept
}

/// All equilibria of a two-player game found by support enumeration.
///
/// Support pairs are visited by increasing total size, then
/// lexicographically. Pairs of unequal size are never uniquely solvable (one
/// of the two indifference systems is underdetermined) and are skipped along
/// with singular equal-size pairs. If nothing is found, which can only happen
/// in degenerate games, vertex enumeration takes over so that the result is
/// never empty.
pub fn support_enumeration_2p(g: &StandardGame, opts: &SolverOptions) -> Result<Vec<EquilibriumResult>> {
    let (m, n) = check_two_player(g, opts)?;
    let row = g.payoffs(0);
    let col = g.payoffs(1);
    let eps = opts.eps;

    let mut found = Vec::new();
    for k in 1..=m.min(n) {
        let rows = combinations(m, k);
        let cols = combinations(n, k);
        let solutions = map_indexed(opts.execution, rows.len() * cols.len(), |p| {
            let support_x = &rows[p / cols.len()];
            let support_y = &cols[p % cols.len()];
            // y makes player 0 indifferent over support_x, x makes player 1
            // indifferent over support_y
            let y = indifference_strategy(support_y, support_x, n, |j, i| row[i * n + j], eps)?;
            let x = indifference_strategy(support_x, support_y, m, |i, j| col[i * n + j], eps)?;
            accept(g, x, y, eps)
        });
        found.extend(solutions.into_iter().flatten());
    }

    let results = dedup(found);
    if results.is_empty() {
        return vertex_enumeration_2p(g, opts);
    }
    Ok(results)
}

/// Vertices of `{z >= 0, M z <= 1}` in `dim` dimensions, where the `rows`
/// inequality constraints are `M` and labels `0..rows` mark tight inequality
/// rows and `rows..rows + dim` mark zero coordinates. Returns each nonzero
/// vertex with its label set.
fn polytope_vertices(
    dim: usize,
    rows: usize,
    matrix: impl Fn(usize, usize) -> f64 + Sync,
    eps: f64,
    exec: Execution,
) -> Vec<(Vec<f64>, Vec<bool>)> {
    let choices = combinations(rows + dim, dim);
    let vertices = map_indexed(exec, choices.len(), |c| {
        let tight = &choices[c];
        if tight.iter().all(|&l| l >= rows) {
            return None;
        }
        let mut a = Vec::with_capacity(dim);
        let mut b = Vec::with_capacity(dim);
        for &l in tight {
            if l < rows {
                a.push((0..dim).map(|d| matrix(l, d)).collect::<Vec<_>>());
                b.push(1.0);
            } else {
                let mut e = vec![0.0; dim];
                e[l - rows] = 1.0;
                a.push(e);
                b.push(0.0);
            }
        }
        let z = linalg::solve(a, b, eps)?;
        if z.iter().any(|&v| v < -eps) {
            return None;
        }
        let mut labels = vec![false; rows + dim];
        for r in 0..rows {
            let lhs: f64 = (0..dim).map(|d| matrix(r, d) * z[d]).sum();
            if lhs > 1.0 + eps {
                return None;
            }
            labels[r] = lhs >= 1.0 - eps;
        }
        for d in 0..dim {
            labels[rows + d] = z[d] <= eps;
        }
        Some((z, labels))
    });
    let mut out: Vec<(Vec<f64>, Vec<bool>)> = Vec::new();
    for (z, labels) in vertices.into_iter().flatten() {
        let dup = out.iter().any(|(w, _)| {
            w.iter().zip(&z).all(|(a, b)| (a - b).abs() <= DEDUP_TOL)
        });
        if !dup {
            out.push((z, labels));
        }
    }
    out
}

/// Equilibria from completely labeled vertex pairs of the best-response
/// polytopes. Complete for extreme equilibria, including degenerate games.
pub fn vertex_enumeration_2p(g: &StandardGame, opts: &SolverOptions) -> Result<Vec<EquilibriumResult>> {
    let (m, n) = check_two_player(g, opts)?;
    let shift = |u: &[f64]| 1.0 - u.iter().copied().fold(f64::INFINITY, f64::min);
    let (sa, sb) = (shift(g.payoffs(0)), shift(g.payoffs(1)));
    let a = |i: usize, j: usize| g.payoffs(0)[i * n + j] + sa;
    let b = |i: usize, j: usize| g.payoffs(1)[i * n + j] + sb;
    let eps = opts.eps;

    // P = {x >= 0, B^T x <= 1}: labels 0..m are x_i = 0, m..m+n are tight columns.
    // Q = {y >= 0, A y <= 1}: labels 0..m are tight rows, m..m+n are y_j = 0.
    let p_vertices: Vec<(Vec<f64>, Vec<bool>)> = polytope_vertices(m, n, |j, i| b(i, j), eps, opts.execution)
        .into_iter()
        .map(|(x, labels)| {
            // reorder to the shared labeling: x_i = 0 first, then columns
            let mut shared = labels[n..].to_vec();
            shared.extend_from_slice(&labels[..n]);
            (x, shared)
        })
        .collect();
    let q_vertices = polytope_vertices(n, m, a, eps, opts.execution);

    let mut found = Vec::new();
    for (x, lx) in &p_vertices {
        for (y, ly) in &q_vertices {
            if lx.iter().zip(ly).all(|(p, q)| *p || *q) {
                let sx: f64 = x.iter().sum();
                let sy: f64 = y.iter().sum();
                let xs = clean_distribution(x.iter().map(|v| v.max(0.0) / sx).collect());
                let ys = clean_distribution(y.iter().map(|v| v.max(0.0) / sy).collect());
                if let Some(hit) = accept(g, xs, ys, eps) {
                    found.push(hit);
                }
            }
        }
    }
    Ok(dedup(found))
}

/// How much of the equilibrium set a solver run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coverage {
    /// Pure and mixed equilibria were searched.
    Complete,
    /// Only pure equilibria were searched.
    PureOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEquilibria {
    pub results: Vec<EquilibriumResult>,
    pub coverage: Coverage,
    pub notice: Option<String>,
}

/// Per-player growth-rate regrets of a profile in a capital game.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthVerdict {
    pub is_equilibrium: bool,
    /// Signed regrets; rounding can make them marginally negative.
    pub regrets: Vec<f64>,
}

/// Checks directly on the capital game that no player can raise their
/// time-average growth rate by more than `eps` with a unilateral pure deviation.
pub fn verify_growth_equilibrium(
    game: &CapitalGame,
    s: &MixedStrategyProfile,
    eps: f64,
) -> Result<GrowthVerdict> {
    let mut regrets = Vec::with_capacity(game.num_players());
    for i in 0..game.num_players() {
        let current = game.time_average_growth(s, i)?;
        let mut best = f64::NEG_INFINITY;
        for k in 0..game.action_counts()[i] {
            let mut e = vec![0.0; game.action_counts()[i]];
            e[k] = 1.0;
            best = best.max(game.time_average_growth(&s.with_strategy(i, e)?, i)?);
        }
        regrets.push(best - current);
    }
    Ok(GrowthVerdict {
        is_equilibrium: regrets.iter().all(|&r| r <= eps),
        regrets,
    })
}

/// Growth equilibria of a capital game: solve its growth-rate game (pure and
/// mixed for two players, pure only otherwise) and re-verify each candidate
/// on the capital game.
pub fn growth_equilibria(game: &CapitalGame, opts: &SolverOptions) -> Result<GrowthEquilibria> {
    let standard = game.to_standard_game()?;
    let (candidates, coverage, notice) = if game.num_players() == 2 {
        (support_enumeration_2p(&standard, opts)?, Coverage::Complete, None)
    } else {
        (
            enumerate_pure_nash(&standard, opts)?,
            Coverage::PureOnly,
            Some(format!(
                "mixed equilibria are only computed for 2-player games; input has {}, so only pure equilibria were searched",
                game.num_players()
            )),
        )
    };
    let mut results = Vec::with_capacity(candidates.len());
    for c in candidates {
        let verdict = verify_growth_equilibrium(game, &c.profile, opts.eps)?;
        if verdict.is_equilibrium {
            results.push(EquilibriumResult::new(
                c.profile,
                verdict.regrets,
                Source::ViaCorrespondence,
            ));
        }
    }
    Ok(GrowthEquilibria {
        results,
        coverage,
        notice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::Dynamics;

    fn pd() -> StandardGame {
        StandardGame::bimatrix(
            &[vec![3.0, 0.0], vec![5.0, 1.0]],
            &[vec![3.0, 5.0], vec![0.0, 1.0]],
        )
        .unwrap()
    }

    fn pennies() -> StandardGame {
        StandardGame::bimatrix(
            &[vec![1.0, -1.0], vec![-1.0, 1.0]],
            &[vec![-1.0, 1.0], vec![1.0, -1.0]],
        )
        .unwrap()
    }

    fn pure_profiles(rs: &[EquilibriumResult]) -> Vec<Vec<usize>> {
        rs.iter()
            .map(|r| r.profile.pure_actions().expect("pure").0)
            .collect()
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn pure_nash_examples() {
        let opts = SolverOptions::default();
        assert_eq!(pure_profiles(&enumerate_pure_nash(&pd(), &opts).unwrap()), vec![vec![1, 1]]);
        assert!(enumerate_pure_nash(&pennies(), &opts).unwrap().is_empty());
        let single = StandardGame::new(vec![4], vec![vec![2.0, 7.0, 1.0, 7.0]]).unwrap();
        assert_eq!(
            pure_profiles(&enumerate_pure_nash(&single, &opts).unwrap()),
            vec![vec![1], vec![3]]
        );
    }

    #[test]
    fn pure_nash_cap() {
        let opts = SolverOptions {
            max_profiles: 3,
            ..SolverOptions::default()
        };
        assert!(matches!(
            enumerate_pure_nash(&pd(), &opts),
            Err(GameError::TooLarge { .. })
        ));
    }

    #[test]
    fn support_enumeration_examples() {
        let opts = SolverOptions::default();
        let mp = support_enumeration_2p(&pennies(), &opts).unwrap();
        assert_eq!(mp.len(), 1);
        assert_eq!(mp[0].classification, Classification::Mixed);
        for s in mp[0].profile.strategies() {
            assert!((s[0] - 0.5).abs() < 1e-12 && (s[1] - 0.5).abs() < 1e-12);
        }

        let d = support_enumeration_2p(&pd(), &opts).unwrap();
        assert_eq!(pure_profiles(&d), vec![vec![1, 1]]);
        assert_eq!(d[0].classification, Classification::Pure);
    }

    #[test]
    fn support_enumeration_arity_and_cap() {
        let g3 = StandardGame::new(vec![2, 2, 2], vec![vec![0.0; 8]; 3]).unwrap();
        assert_eq!(
            support_enumeration_2p(&g3, &SolverOptions::default()).unwrap_err(),
            GameError::Arity(3)
        );
        let opts = SolverOptions {
            max_support_actions: 1,
            ..SolverOptions::default()
        };
        assert!(matches!(
            support_enumeration_2p(&pd(), &opts),
            Err(GameError::TooLarge { .. })
        ));
    }

    #[test]
    fn battle_of_sexes_has_three_equilibria() {
        let g = StandardGame::bimatrix(
            &[vec![3.0, 0.0], vec![0.0, 2.0]],
            &[vec![2.0, 0.0], vec![0.0, 3.0]],
        )
        .unwrap();
        let rs = support_enumeration_2p(&g, &SolverOptions::default()).unwrap();
        assert_eq!(rs.len(), 3);
        // pure ones first (support size order)
        assert_eq!(rs[0].profile.pure_actions().unwrap().0, vec![0, 0]);
        assert_eq!(rs[1].profile.pure_actions().unwrap().0, vec![1, 1]);
        let mixed = rs[2].profile.strategies();
        assert!((mixed[0][0] - 0.6).abs() < 1e-12);
        assert!((mixed[1][0] - 0.4).abs() < 1e-12);
    }

    #[test]
    fn vertex_enumeration_matches_support_enumeration() {
        let g = StandardGame::bimatrix(
            &[vec![3.0, 3.0], vec![2.0, 5.0], vec![0.0, 6.0]],
            &[vec![3.0, 2.0], vec![2.0, 6.0], vec![3.0, 1.0]],
        )
        .unwrap();
        let opts = SolverOptions::default();
        let a = support_enumeration_2p(&g, &opts).unwrap();
        let b = vertex_enumeration_2p(&g, &opts).unwrap();
        for r in &b {
            assert!(g.is_nash(&r.profile, 1e-9).unwrap());
        }
        for r in &a {
            assert!(b.iter().any(|q| q.profile.distance(&r.profile) < 1e-7), "{r:?}");
        }
    }

    #[test]
    fn constant_game_still_returns_equilibria() {
        let g = StandardGame::new(vec![3, 2], vec![vec![1.0; 6], vec![2.0; 6]]).unwrap();
        let rs = support_enumeration_2p(&g, &SolverOptions::default()).unwrap();
        assert!(!rs.is_empty());
        assert!(rs.iter().all(|r| g.is_nash(&r.profile, 1e-9).unwrap()));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = StandardGame::bimatrix(
            &[vec![3.0, 0.0, 1.0], vec![0.0, 2.0, 1.5], vec![1.0, 1.0, 1.2]],
            &[vec![2.0, 0.0, 1.0], vec![0.0, 3.0, 0.5], vec![1.1, 0.4, 1.0]],
        )
        .unwrap();
        let seq = SolverOptions {
            execution: Execution::Sequential,
            ..SolverOptions::default()
        };
        let par = SolverOptions {
            execution: Execution::Parallel,
            ..SolverOptions::default()
        };
        assert_eq!(
            support_enumeration_2p(&g, &seq).unwrap(),
            support_enumeration_2p(&g, &par).unwrap()
        );
    }

    fn pd_capital(d: [Dynamics; 2]) -> CapitalGame {
        CapitalGame::new(
            vec![2, 2],
            vec![vec![30.0, 5.0, 50.0, 10.0], vec![30.0, 50.0, 5.0, 10.0]],
            vec![10.0, 10.0],
            vec![1.0, 1.0],
            d.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn pure_growth_equilibria_of_pd_capital_game() {
        let opts = SolverOptions::default();
        let sqrt = Dynamics::from_name("sqrt").unwrap();
        for d in [
            [Dynamics::Additive, Dynamics::Additive],
            [Dynamics::Multiplicative, Dynamics::Additive],
            [sqrt.clone(), Dynamics::Multiplicative],
        ] {
            let rs = enumerate_pure_growth_equilibria(&pd_capital(d), &opts).unwrap();
            assert_eq!(pure_profiles(&rs), vec![vec![1, 1]]);
            assert_eq!(rs[0].source, Source::ViaCorrespondence);
        }
    }

    #[test]
    fn all_equal_payoffs_make_every_profile_an_equilibrium() {
        let g = CapitalGame::new(
            vec![2, 3],
            vec![vec![4.0; 6], vec![9.0; 6]],
            vec![1.0, 1.0],
            vec![1.0, 1.0],
            vec![Dynamics::Multiplicative, Dynamics::Additive],
        )
        .unwrap();
        let rs = enumerate_pure_growth_equilibria(&g, &SolverOptions::default()).unwrap();
        assert_eq!(rs.len(), 6);
    }

    #[test]
    fn coin_flip_growth_equilibrium_is_the_high_payoff_action() {
        for d in [Dynamics::Additive, Dynamics::Multiplicative] {
            let g = CapitalGame::new(vec![2], vec![vec![150.0, 60.0]], vec![100.0], vec![1.0], vec![d]).unwrap();
            let out = growth_equilibria(&g, &SolverOptions::default()).unwrap();
            assert_eq!(pure_profiles(&out.results), vec![vec![0]]);
            assert_eq!(out.coverage, Coverage::PureOnly);
        }
    }

    #[test]
    fn growth_equilibria_pd_and_pennies() {
        let opts = SolverOptions::default();
        let g = pd_capital([Dynamics::Multiplicative, Dynamics::Multiplicative]);
        let out = growth_equilibria(&g, &opts).unwrap();
        assert_eq!(out.coverage, Coverage::Complete);
        assert_eq!(pure_profiles(&out.results), vec![vec![1, 1]]);

        let mp = crate::capital::from_standard_game(
            &pennies(),
            &[100.0, 100.0],
            &[Dynamics::Multiplicative, Dynamics::Multiplicative],
            &[1.0, 1.0],
        )
        .unwrap();
        let out = growth_equilibria(&mp, &opts).unwrap();
        assert_eq!(out.results.len(), 1);
        for s in out.results[0].profile.strategies() {
            assert!((s[0] - 0.5).abs() < 1e-9);
        }
    }

    #[test]
    fn verify_examples() {
        let g = pd_capital([Dynamics::Multiplicative, Dynamics::Additive]);
        let cc = MixedStrategyProfile::pure(&[2, 2], &[0, 0]).unwrap();
        let v = verify_growth_equilibrium(&g, &cc, 1e-9).unwrap();
        assert!(!v.is_equilibrium);
        assert!(v.regrets.iter().all(|&r| r > 0.0));
        // log(50/30) for the multiplicative player, 50 - 30 for the additive one
        assert!((v.regrets[0] - (50.0f64 / 30.0).ln()).abs() < 1e-12);
        assert!((v.regrets[1] - 20.0).abs() < 1e-12);

        let single = CapitalGame::new(vec![3], vec![vec![5.0, 9.0, 1.0]], vec![2.0], vec![1.0], vec![Dynamics::Multiplicative]).unwrap();
        let best = MixedStrategyProfile::pure(&[3], &[1]).unwrap();
        assert!(verify_growth_equilibrium(&single, &best, 1e-9).unwrap().is_equilibrium);
    }

    #[test]
    fn three_player_growth_equilibria_flag_partial_coverage() {
        let g = CapitalGame::new(
            vec![2, 2, 2],
            vec![vec![1.0; 8], vec![1.0; 8], vec![1.0; 8]],
            vec![1.0; 3],
            vec![1.0; 3],
            vec![Dynamics::Additive; 3],
        )
        .unwrap();
        let out = growth_equilibria(&g, &SolverOptions::default()).unwrap();
        assert_eq!(out.coverage, Coverage::PureOnly);
        assert!(out.notice.is_some());
        assert_eq!(out.results.len(), 8);
    }
}
